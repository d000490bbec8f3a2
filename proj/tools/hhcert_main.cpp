#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "hhcert/commands.hpp"

namespace {

std::optional<hhcert::IntervalSpec> parse_interval(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--interval expects x,y");
    return hhcert::IntervalSpec::make(hhcert::Rational::parse(text.substr(0, comma)),
                                      hhcert::Rational::parse(text.substr(comma + 1)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for convex-order inequalities between quadrature functionals"};
    app.require_subcommand(1);

    std::string source;
    bool json = false;
    auto* check = app.add_subcommand("check", "Decide lhs(f) <= rhs(f) for all convex f");
    check->add_option("spec", source, "Spec file, inline JSON, '-' for stdin, or corpus:<id>")->required();
    check->add_flag("--json", json, "Print the certificate as JSON");

    auto* crossings = app.add_subcommand("crossings", "Print crossing points and areas");
    crossings->add_option("spec", source, "Spec file, inline JSON, '-' for stdin, or corpus:<id>")->required();

    app.add_subcommand("paper-suite", "Run the regression corpus");

    hhcert::ScanOptions scan_opts;
    std::string step;
    std::string a_range;
    std::string alpha_range;
    std::string out_path;
    auto* scan = app.add_subcommand("scan", "Scan the symmetric four-point family, CSV output");
    scan->add_option("--family", "Only 'symmetric' is supported")->check(CLI::IsMember({"symmetric"}));
    scan->add_option("--a", a_range, "Range of a as from:to")->required();
    scan->add_option("--alpha", alpha_range, "Range of alpha as from:to")->required();
    scan->add_option("--step", step, "Grid step for both axes")->required();
    scan->add_option("--a-step", scan_opts.a_step, "Overrides --step for a");
    scan->add_option("--alpha-step", scan_opts.alpha_step, "Overrides --step for alpha");
    scan->add_option("-o,--out", out_path, "CSV output path (default stdout)");

    hhcert::OracleOptions oracle_opts;
    std::string interval_text;
    auto* oracle = app.add_subcommand("oracle", "Exact hinge sweep plus floating cross-check");
    oracle->add_option("spec", source, "Spec file, inline JSON, '-' for stdin, or corpus:<id>")->required();
    oracle->add_option("--grid", oracle_opts.grid, "Hinge grid size for the numeric family");
    oracle->add_option("--interval", interval_text, "Interval as x,y for the numeric check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hhcert::kExitInputError;
    }

    if (*check) return hhcert::cmd_check(source, json, std::cin, std::cout, std::cerr);
    if (*crossings) return hhcert::cmd_crossings(source, std::cin, std::cout, std::cerr);
    if (app.got_subcommand("paper-suite")) return hhcert::cmd_regression_suite(std::cout);
    if (*scan) {
        auto split = [](const std::string& range, std::string& from, std::string& to) {
            const auto colon = range.find(':');
            from = range.substr(0, colon);
            to = colon == std::string::npos ? from : range.substr(colon + 1);
        };
        split(a_range, scan_opts.a_from, scan_opts.a_to);
        split(alpha_range, scan_opts.alpha_from, scan_opts.alpha_to);
        if (scan_opts.a_step.empty()) scan_opts.a_step = step;
        if (scan_opts.alpha_step.empty()) scan_opts.alpha_step = step;
        if (out_path.empty()) return hhcert::cmd_scan(scan_opts, std::cout, std::cerr);
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return hhcert::kExitInputError;
        }
        return hhcert::cmd_scan(scan_opts, file, std::cerr);
    }
    try {
        oracle_opts.interval = parse_interval(interval_text);
    } catch (const std::exception& e) {
        std::cerr << "error: --interval: " << e.what() << '\n';
        return hhcert::kExitInputError;
    }
    return hhcert::cmd_oracle(source, oracle_opts, std::cin, std::cout, std::cerr);
}
