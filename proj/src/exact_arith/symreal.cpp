#include "sgon/symreal.hpp"

#include "sgon/errors.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace sgon {

namespace {

constexpr const char* kConstantName = "1";

int count_significant_digits(const std::string& approx) {
    int count = 0;
    bool leading = true;
    for (char c : approx) {
        if (c == 'e' || c == 'E')
            break;
        if (std::isdigit(static_cast<unsigned char>(c)) == 0)
            continue;
        if (leading && c == '0')
            continue;
        leading = false;
        ++count;
    }
    return count;
}

}  // namespace

SymbolBasis::SymbolBasis(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    digits_.reserve(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        digits_.push_back(i == 0 ? std::numeric_limits<int>::max()
                                 : count_significant_digits(symbols_[i].approx));
}

std::shared_ptr<const SymbolBasis> SymbolBasis::make(std::vector<Symbol> symbols) {
    std::vector<Symbol> ordered;
    ordered.push_back({kConstantName, "1.0"});
    std::set<std::string> seen{kConstantName};
    for (auto& s : symbols) {
        if (s.name == kConstantName) {
            auto v = BigFloat::from_string(s.approx.empty() ? "1" : s.approx, 20);
            if (!(v == BigFloat::from_long(1, 20)))
                fail(ErrorKind::Schema, "symbol \"1\" must have approx 1.0");
            continue;
        }
        if (s.name.empty())
            fail(ErrorKind::Schema, "empty symbol name");
        if (!seen.insert(s.name).second)
            fail(ErrorKind::Schema, "duplicate symbol name '" + s.name + "'");
        auto v = BigFloat::from_string(s.approx, 20);
        if (v.is_zero())
            fail(ErrorKind::Schema, "symbol '" + s.name + "' has zero approximation");
        ordered.push_back(std::move(s));
    }
    return std::shared_ptr<const SymbolBasis>(new SymbolBasis(std::move(ordered)));
}

std::shared_ptr<const SymbolBasis> SymbolBasis::default_table() {
    static const auto table = make({
        {"sqrt2", "1.4142135623730950488016887242096980785696718753769480731766797379907324784621070388503875343276415727"},
        {"sqrt3", "1.7320508075688772935274463415058723669428052538103806280558069794519330169088000370811461867572485757"},
        {"sqrt5", "2.2360679774997896964091736687312762354406183596115257242708972454105209256378048994144144083787822750"},
        {"sqrt7", "2.6457513110645905905016157536392604257102591830824501803683344592010688232302836277603928864745436106"},
        {"pi", "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170680"},
        {"e", "2.7182818284590452353602874713526624977572470936999595749669676277240766303535475945713821785251664274"},
    });
    return table;
}

std::optional<std::size_t> SymbolBasis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return i;
    return std::nullopt;
}

int SymbolBasis::available_digits(std::size_t i) const { return digits_.at(i); }

BigFloat SymbolBasis::value(std::size_t i, int digits) const {
    if (i == 0)
        return BigFloat::from_long(1, digits);
    if (digits_.at(i) < digits)
        fail(ErrorKind::InsufficientApproximation,
             "symbol '" + symbols_[i].name + "' carries " + std::to_string(digits_[i]) +
                 " digits, " + std::to_string(digits) + " requested");
    return BigFloat::from_string(symbols_[i].approx, digits);
}

bool SymbolBasis::operator==(const SymbolBasis& other) const {
    if (symbols_.size() != other.symbols_.size())
        return false;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name != other.symbols_[i].name ||
            symbols_[i].approx != other.symbols_[i].approx)
            return false;
    return true;
}

SymReal::SymReal(SymbolBasisPtr basis) : basis_(std::move(basis)) {
    coeffs_.assign(basis_->size(), Rational(0));
}

SymReal::SymReal(SymbolBasisPtr basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_->size())
        fail(ErrorKind::Schema, "coefficient vector has length " + std::to_string(coeffs_.size()) +
                                    ", symbol basis has " + std::to_string(basis_->size()));
}

SymReal SymReal::constant(SymbolBasisPtr basis, const Rational& value) {
    SymReal r(std::move(basis));
    r.coeffs_[0] = value;
    return r;
}

SymReal SymReal::symbol(SymbolBasisPtr basis, std::size_t index, const Rational& coeff) {
    SymReal r(std::move(basis));
    r.coeffs_.at(index) = coeff;
    return r;
}

bool SymReal::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool SymReal::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

void SymReal::require_same_basis(const SymReal& o) const {
    if (basis_ != o.basis_ && !(*basis_ == *o.basis_))
        fail(ErrorKind::InvalidArgument, "SymReal values over different symbol bases");
}

SymReal& SymReal::operator+=(const SymReal& o) {
    require_same_basis(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

SymReal& SymReal::operator-=(const SymReal& o) {
    require_same_basis(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

SymReal& SymReal::operator*=(const Rational& r) {
    for (auto& c : coeffs_)
        c *= r;
    return *this;
}

SymReal SymReal::operator-() const {
    SymReal r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

bool operator==(const SymReal& a, const SymReal& b) {
    a.require_same_basis(b);
    return a.coeffs_ == b.coeffs_;
}

std::string SymReal::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0) {
            out += sgon::to_string(mag);
            continue;
        }
        if (mag != 1)
            out += (mag.get_den() == 1 ? sgon::to_string(mag) : "(" + sgon::to_string(mag) + ")") + "*";
        out += (*basis_)[i].name;
    }
    return out.empty() ? "0" : out;
}

BigFloat symreal_eval(const SymReal& x, int digits) {
    if (digits < 16)
        fail(ErrorKind::InvalidArgument, "precision must be at least 16 digits");
    const int working = digits + 10;
    BigFloat sum(working);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.coeff(i) == 0)
            continue;
        BigFloat term = x.basis()->value(i, i == 0 ? working : digits);
        term *= BigFloat::from_rational(x.coeff(i), working);
        sum += term;
    }
    return sum;
}

int symreal_sign(const SymReal& x, int digits) {
    std::size_t nonzero = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.coeff(i) != 0) {
            ++nonzero;
            last = i;
        }
    if (nonzero == 0)
        return 0;
    if (nonzero == 1) {
        int approx_sign = last == 0 ? 1 : BigFloat::from_string((*x.basis())[last].approx, 20).sign();
        return sgn(x.coeff(last)) * approx_sign;
    }
    BigFloat v = symreal_eval(x, digits);
    if (abs(v) < pow10(-digits + 5, digits + 10))
        fail(ErrorKind::AmbiguousSign, "|" + x.to_string() + "| below 1e" + std::to_string(-digits + 5));
    return v.sign();
}

BigFloat symreal_abs(const SymReal& x, int digits) {
    int s = symreal_sign(x, digits);
    if (s == 0)
        return BigFloat(digits + 10);
    BigFloat v = symreal_eval(x, digits);
    return s < 0 ? -v : v;
}

}  // namespace sgon
