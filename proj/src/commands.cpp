#include "hhcert/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hhcert/corpus.hpp"
#include "hhcert/oracle.hpp"

namespace hhcert {

namespace {

std::string joined(const std::vector<Rational>& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ' ';
        out += v.str();
    }
    return out;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

const char* flag(const std::optional<bool>& b) { return !b ? "" : *b ? "true" : "false"; }

std::vector<Rational> inclusive_range(const Rational& from, const Rational& to, const Rational& step,
                                      const char* name) {
    if (step.sign() <= 0) throw std::invalid_argument(std::string(name) + " step must be positive");
    std::vector<Rational> out;
    for (Rational v = from; v <= to; v += step) out.push_back(v);
    return out;
}

Rational parse_arg(const std::string& text, const char* name) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(name) + ": " + e.what());
    }
}

void print_certificate(const Certificate& c, std::ostream& out) {
    out << "verdict: " << to_string(c.verdict) << '\n';
    out << "mass: lhs " << c.mass_lhs << ", rhs " << c.mass_rhs << '\n';
    out << "mean: lhs " << c.mean_lhs << ", rhs " << c.mean_rhs << '\n';
    if (c.mass_lhs == c.mass_rhs && c.mean_lhs == c.mean_rhs) {
        if (c.profile.crossings.empty())
            out << "crossings: none\n";
        else
            out << "crossings: " << joined(c.profile.crossings) << '\n';
        if (!c.profile.areas.empty()) out << "areas: " << joined(c.profile.areas) << '\n';
        if (!c.partial_sums.empty()) out << "partial sums: " << joined(c.partial_sums) << '\n';
    }
    out << "min prefix: " << c.min_prefix.value << " at t=" << c.min_prefix.t << '\n';
    if (c.witness) {
        out << "witness: " << to_string(c.witness->kind);
        if (c.witness->kind == WitnessKind::Hinge)
            out << " t=" << c.witness->t;
        else
            out << " sign=" << c.witness->sign;
        out << ", violation " << c.witness->violation << '\n';
    }
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

}  // namespace

int exit_code(Verdict v) noexcept {
    switch (v) {
        case Verdict::Holds: return kExitHolds;
        case Verdict::Fails: return kExitFails;
        case Verdict::NotComparable: return kExitNotComparable;
    }
    return kExitInputError;
}

ComparisonSpec load_spec(std::string_view source, std::istream& stdin_stream) {
    constexpr std::string_view kCorpus = "corpus:";
    if (source.substr(0, kCorpus.size()) == kCorpus) {
        const auto id = source.substr(kCorpus.size());
        if (const auto* item = find_corpus_item(id)) return item->spec;
        throw SpecError("unknown corpus id '" + std::string(id) + "'");
    }
    if (source == "-") return parse_comparison_spec(read_all(stdin_stream));
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && source[first] == '{') return parse_comparison_spec(source);
    std::ifstream file{std::string(source)};
    if (!file) throw SpecError("cannot open spec file '" + std::string(source) + "'");
    return parse_comparison_spec(read_all(file));
}

int cmd_check(std::string_view source, bool json, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ComparisonSpec spec = load_spec(source, in);
        const Certificate cert = compare(spec.lhs, spec.rhs);
        if (json)
            out << to_json(cert).dump(2) << '\n';
        else
            print_certificate(cert, out);
        return exit_code(cert.verdict);
    });
}

int cmd_crossings(std::string_view source, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ComparisonSpec spec = load_spec(source, in);
        const CrossingProfile p = crossing_profile(bv_transform(spec.lhs), bv_transform(spec.rhs));
        if (p.crossings.empty())
            out << "no crossings\n";
        else
            out << "crossings: " << joined(p.crossings) << "; areas: " << joined(p.areas) << '\n';
        return kExitHolds;
    });
}

int cmd_regression_suite(std::ostream& out) {
    const SuiteResult r = run_regression_suite();
    out << std::left << std::setw(24) << "id" << std::setw(8) << "printed" << std::setw(16) << "computed"
        << std::setw(16) << "expected" << "agree\n";
    for (const auto& row : r.rows) {
        out << std::setw(24) << row.id << std::setw(8) << to_string(row.printed_claim) << std::setw(16)
            << to_string(row.computed) << std::setw(16) << to_string(row.expected)
            << (row.agrees_with_printed ? "yes" : "DISAGREE") << '\n';
    }
    out << "\nerrata (" << r.errata.size() << "):\n";
    for (const auto& e : r.errata) out << "  " << e << '\n';
    out << (r.all_expected ? "all computed verdicts match expectations\n" : "MISMATCH against expectations\n");
    return r.all_expected ? 0 : 1;
}

std::vector<GridPoint> scan_grid(const ScanOptions& opts) {
    const auto as = inclusive_range(parse_arg(opts.a_from, "a_from"), parse_arg(opts.a_to, "a_to"),
                                    parse_arg(opts.a_step, "a_step"), "a");
    const auto alphas = inclusive_range(parse_arg(opts.alpha_from, "alpha_from"), parse_arg(opts.alpha_to, "alpha_to"),
                                        parse_arg(opts.alpha_step, "alpha_step"), "alpha");
    for (const auto& a : as)
        if (a >= Rational(-1) && a.sign() <= 0) throw std::invalid_argument("a = " + a.str() + " lies in [-1,0]");
    for (const auto& al : alphas)
        if (al.sign() <= 0 || al >= Rational(1, 2))
            throw std::invalid_argument("alpha = " + al.str() + " outside (0,1/2)");
    std::vector<GridPoint> grid;
    grid.reserve(as.size() * alphas.size());
    for (const auto& a : as)
        for (const auto& al : alphas) grid.push_back({a, al});
    return grid;
}

std::string render_scan_csv(const std::vector<CalibrationRow>& rows) {
    std::ostringstream os;
    os << "a,alpha,b,verdict,cond_i_printed,cond_ii_printed,cond_ii_swapped,agree_i,agree_ii,agree_ii_swapped\n";
    for (const auto& r : rows) {
        os << r.a << ',' << r.alpha << ',' << r.b << ',' << to_string(r.verdict) << ',' << flag(r.cond_i) << ','
           << flag(r.cond_ii) << ',' << flag(r.cond_ii_swapped) << ',' << flag(r.agree_i) << ',' << flag(r.agree_ii)
           << ',' << flag(r.agree_ii_swapped) << '\n';
    }
    return os.str();
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        out << render_scan_csv(calibration_report(scan_grid(opts)));
        return 0;
    });
}

int cmd_oracle(std::string_view source, const OracleOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        if (opts.grid < 1) throw std::invalid_argument("grid must be at least 1");
        const ComparisonSpec spec = load_spec(source, in);
        const Certificate cert = compare(spec.lhs, spec.rhs);
        if (cert.mass_lhs != cert.mass_rhs) {
            out << "constant-function gap: " << (cert.mass_lhs - cert.mass_rhs) << " (mass " << cert.mass_lhs << " vs "
                << cert.mass_rhs << ")\n";
        } else if (cert.mean_lhs != cert.mean_rhs) {
            out << "affine-function gap: " << (cert.mean_lhs - cert.mean_rhs) << " (mean " << cert.mean_lhs << " vs "
                << cert.mean_rhs << ")\n";
        } else {
            const HingeSweep sweep = hinge_sweep(spec.lhs, spec.rhs);
            out << "exact max hinge violation: " << sweep.max_violation << " at t=" << sweep.t << '\n';
        }
        const IntervalSpec iv = opts.interval.value_or(spec.interval);
        const CrossCheckReport report = numeric_cross_check(spec.lhs, spec.rhs, standard_family(opts.grid), iv);
        out << "numeric max difference on [" << iv.x << ',' << iv.y << "]: " << std::setprecision(12)
            << report.max_difference << " (" << report.argmax << ")\n";
        out << "verdict: " << to_string(cert.verdict) << '\n';
        return exit_code(cert.verdict);
    });
}

}  // namespace hhcert
