#include "sgon/cli.hpp"
#include "sgon/errors.hpp"

#include <fstream>
#include <sstream>

namespace sgon {

namespace {

std::string where(const std::string& path) { return path.empty() ? "" : path + ": "; }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorKind::Schema, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Rational rational_value(const Json& j, const std::string& context) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return parse_rational(j.dump());
    fail(ErrorKind::Schema, context + ": expected a rational string, got " + j.dump());
}

// slot[s] is the basis index of the s-th symbol as listed in the file
SymReal symreal_value(const Json& j, const SymbolBasisPtr& basis, const std::vector<std::size_t>& slot,
                      const std::string& context) {
    if (j.is_string() || j.is_number_integer())
        return SymReal::constant(basis, rational_value(j, context));
    if (!j.is_array() || j.size() != slot.size())
        fail(ErrorKind::Schema, context + ": expected " + std::to_string(slot.size()) + " coefficients");
    std::vector<Rational> c(basis->size());
    for (std::size_t s = 0; s < slot.size(); ++s)
        c[slot[s]] = rational_value(j[s], context);
    return SymReal(basis, std::move(c));
}

QuadNum quad_value(const Json& j, long D, const std::string& context) {
    if (j.is_array()) {
        if (j.size() != 2)
            fail(ErrorKind::Schema, context + ": expected a [rational, surd] pair");
        return QuadNum(rational_value(j[0], context), rational_value(j[1], context), D);
    }
    return QuadNum::rational(rational_value(j, context), D);
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 0;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 0;
            } else {
                ++column;
            }
        }
        fail(ErrorKind::Parse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), where(path) + e.what());
    }
}

LatticeBasis parse_lattice(const Json& j, int digits) {
    if (!j.is_object())
        fail(ErrorKind::Schema, "lattice file must hold a JSON object");
    std::vector<Symbol> symbols;
    SymbolBasisPtr basis;
    if (j.contains("symbols")) {
        const Json& syms = j.at("symbols");
        if (!syms.is_array() || syms.empty())
            fail(ErrorKind::Schema, "\"symbols\" must be a nonempty array");
        for (const auto& s : syms) {
            const Json& name = field(s, "name");
            const Json& approx = field(s, "approx");
            if (!name.is_string() || !approx.is_string())
                fail(ErrorKind::Schema, "symbol name and approx must be strings");
            symbols.push_back({name.get<std::string>(), approx.get<std::string>()});
        }
        basis = SymbolBasis::make(symbols);
    } else {
        basis = SymbolBasis::default_table();
        symbols = basis->symbols();
    }
    std::vector<std::size_t> slot;
    for (const auto& s : symbols)
        slot.push_back(*basis->index_of(s.name));

    const Json& matrix = field(j, "matrix");
    if (!matrix.is_array())
        fail(ErrorKind::Schema, "\"matrix\" must be an array of rows");
    const std::size_t n = matrix.size();
    if (j.contains("n")) {
        const Json& jn = j.at("n");
        if (!jn.is_number_unsigned() || jn.get<std::size_t>() != n)
            fail(ErrorKind::Schema, "\"n\" does not match the number of matrix rows");
    }
    std::vector<SymVector> rows;
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = matrix[r];
        if (!row.is_array() || row.size() != n)
            fail(ErrorKind::Schema, "matrix row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        SymVector v;
        for (std::size_t c = 0; c < n; ++c)
            v.push_back(symreal_value(row[c], basis, slot,
                                      "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")"));
        rows.push_back(std::move(v));
    }
    return LatticeBasis::make(basis, std::move(rows), digits);
}

LatticeBasis parse_lattice_file(const std::string& path, int digits) {
    Json j = read_json_file(path);
    try {
        return parse_lattice(j, digits);
    } catch (const Error& e) {
        throw Error(e.kind(), where(path) + e.what());
    }
}

Tau parse_tau(const Json& j) {
    if (!j.is_object())
        fail(ErrorKind::Schema, "tau file must hold a JSON object");
    long D = 1;
    if (j.contains("D")) {
        if (!j.at("D").is_number_integer())
            fail(ErrorKind::Schema, "\"D\" must be an integer");
        D = j.at("D").get<long>();
        if (!is_squarefree(D))
            fail(ErrorKind::Schema, "\"D\" must be a squarefree positive integer");
    }
    return Tau(quad_value(field(j, "a"), D, "a"), quad_value(field(j, "b"), D, "b"));
}

Tau parse_tau_file(const std::string& path) {
    Json j = read_json_file(path);
    try {
        return parse_tau(j);
    } catch (const Error& e) {
        throw Error(e.kind(), where(path) + e.what());
    }
}

IntMatrix parse_int_matrix(const Json& j) {
    const std::size_t rows = field(j, "rows").get<std::size_t>();
    const std::size_t cols = field(j, "cols").get<std::size_t>();
    const Json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows)
        fail(ErrorKind::Schema, "\"data\" must have " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!data[r].is_array() || data[r].size() != cols)
            fail(ErrorKind::Schema, "integer matrix row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = data[r][c];
            m(r, c) = parse_integer(e.is_string() ? e.get<std::string>() : e.dump());
        }
    }
    return m;
}

Json to_json(const IntMatrix& m) {
    Json data = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).get_str());
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QuadNum& x) { return Json::array({to_string(x.p()), to_string(x.q())}); }

Json to_json(const SymReal& x) {
    Json a = Json::array();
    for (const auto& c : x.coeffs())
        a.push_back(to_string(c));
    return a;
}

Json to_json(const Tau& tau) {
    return {{"D", tau.D()}, {"a", to_json(tau.a())}, {"b", to_json(tau.b())}, {"text", tau.to_string()}};
}

}  // namespace sgon
