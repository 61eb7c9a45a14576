#pragma once

#include "sgon/intmatrix.hpp"
#include "sgon/lattice.hpp"
#include "sgon/planar.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sgon {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws Io, or Parse with line and column.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

/// {"symbols": [{"name", "approx"}...], "n": n, "matrix": [[[coeff...]...]...]}.
/// Coefficient vectors follow the order of "symbols"; "1" is injected in
/// front when absent. A bare string entry is a rational constant.
LatticeBasis parse_lattice(const Json& j, int digits = BigFloat::kDefaultDigits);
LatticeBasis parse_lattice_file(const std::string& path, int digits = BigFloat::kDefaultDigits);

/// {"D": 2, "a": ["p", "q"], "b": ["p", "q"]}; a plain string is rational.
Tau parse_tau(const Json& j);
Tau parse_tau_file(const std::string& path);

IntMatrix parse_int_matrix(const Json& j);
Json to_json(const IntMatrix& m);
Json to_json(const Rational& r);
Json to_json(const QuadNum& x);
Json to_json(const SymReal& x);
Json to_json(const Tau& tau);

enum class Format { Text, Json };

struct Options {
    std::optional<std::size_t> k;
    std::optional<std::string> radius;
    int terms = 10;
    int precision = BigFloat::kDefaultDigits;
    Format format = Format::Text;
    std::uint64_t seed = 1;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {
        "lattice-analyze", "lattice-sparse", "lattice-rect", "lattice-slevels", "lattice-minima", "tau-reduce",
        "tau-vr",          "tau-isogeny",    "tau-geodesic", "tau-cm",          "tau-jinv",       "verify-suite"};
    return names;
}

struct AnalysisRequest {
    std::string command;
    std::optional<std::string> input;
    Options options;
};

struct Report {
    std::string command;
    Json result;
    /// What each result instantiates.
    Json provenance;
    /// verify-suite only: some battery found a violation.
    bool violations = false;

    Json to_json() const;
};

/// Dispatches a request. Throws sgon::Error.
Report analyze(const AnalysisRequest& request);

/// Text rendering of the same JSON value used for --format json.
std::string render_text(const Report& report);
std::string render_json(const Report& report);

/// Runs a request, writing the report to out and errors to err; returns the
/// process exit code.
int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err);

/// Default precision, overridden by SGON_PRECISION.
int default_precision();

}  // namespace sgon
