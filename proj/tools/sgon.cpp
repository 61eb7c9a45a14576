#include "sgon/cli.hpp"
#include "sgon/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Sparse geometry of numbers: exact lattice and modular analysis"};
    sgon::AnalysisRequest req;
    std::string input;
    std::string format = "text";
    std::size_t k = 0;
    std::optional<int> precision;

    app.add_option("command", req.command, "Command to run")->required()->check(CLI::IsMember(sgon::commands()));
    app.add_option("input", input, "JSON input file");
    app.add_option("--k", k, "Sparsity parameter");
    app.add_option("--radius", req.options.radius, "Sup-norm radius for lattice-minima");
    app.add_option("--terms", req.options.terms, "Number of q-expansion coefficients");
    app.add_option("--precision", precision, "Decimal digits of working precision");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", req.options.seed, "Seed for verify-suite batteries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        req.options.precision = precision ? *precision : sgon::default_precision();
    } catch (const sgon::Error& e) {
        std::cerr << "sgon: " << e.what() << '\n';
        return sgon::exit_code(e.kind());
    }
    if (!input.empty())
        req.input = input;
    if (app.count("--k"))
        req.options.k = k;
    req.options.format = format == "json" ? sgon::Format::Json : sgon::Format::Text;
    return sgon::run(req, std::cout, std::cerr);
}
