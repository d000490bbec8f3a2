#include "hhcert/corpus.hpp"

#include <stdexcept>

#include "hhcert/closedform.hpp"

namespace hhcert {

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

Functional f_only(std::vector<FTerm> terms) { return Functional::make({}, std::move(terms)); }

ComparisonSpec leq(Functional lhs, Functional rhs) {
    ComparisonSpec s;
    s.lhs = std::move(lhs);
    s.rhs = std::move(rhs);
    return s;
}

std::vector<CorpusItem> build_corpus() {
    using namespace reference;
    const auto F = named_functional;
    using enum PrintedClaim;
    std::vector<CorpusItem> c;
    auto add = [&](std::string id, ComparisonSpec spec, PrintedClaim claim, Verdict expected, std::string source) {
        c.push_back({std::move(id), std::move(spec), claim, expected, std::move(source)});
    };
    add("hh-classic-left", leq(midpoint(), integral_mean()), Holds, Verdict::Holds, "classical inequality, left half");
    add("hh-classic-right", leq(integral_mean(), trapezoid()), Holds, Verdict::Holds, "classical inequality, right half");
    add("remark3-left", leq(midpoint(), F("remark3")), Holds, Verdict::Holds, "five-node formula between midpoint and integral mean");
    add("remark3-right", leq(F("remark3"), integral_mean()), Holds, Verdict::Holds, "five-node formula between midpoint and integral mean");
    add("prop4-printed", leq(point_eval(q(0)), F("prop4")), Holds, Verdict::Fails, "three-node divided difference formula, as printed");
    add("prop4-reversed", leq(F("prop4"), point_eval(q(0))), None, Verdict::Holds, "three-node divided difference formula, reversed");
    add("prop2-threepoint", leq(midpoint(), F("prop2-sample")), Fails, Verdict::NotComparable, "three-node formula with mass 1");
    add("ex1", leq(F("eq8"), integral_mean()), Holds, Verdict::Holds, "four-node classification, case (i)");
    add("ex2", leq(integral_mean(), F("ex2")), Holds, Verdict::Holds, "four-node classification, case (ii)");
    add("ex3-left", leq(midpoint(), F("ex3")), Holds, Verdict::Holds, "four-node classification, case (iii)");
    add("ex3-right", leq(F("ex3"), integral_mean()), Holds, Verdict::Holds, "four-node classification, case (iii)");
    add("ex4-printed", leq(integral_mean(), F("ex4-printed")), Holds, Verdict::NotComparable, "four-node classification, case (iv), printed coefficients");
    add("ex4-constructed-left", leq(integral_mean(), F("ex4-constructed")), None, Verdict::Holds, "case (iv) instance with mass 1 and mean 1/2");
    add("ex4-constructed-right", leq(F("ex4-constructed"), trapezoid()), None, Verdict::Holds, "case (iv) instance with mass 1 and mean 1/2");
    add("ex5-star", leq(midpoint(), F("eq8")), Fails, Verdict::Fails, "midpoint versus the four-point formula, lower direction");
    add("ex5-doublestar", leq(F("eq8"), midpoint()), Fails, Verdict::Fails, "midpoint versus the four-point formula, upper direction");
    add("ex6-printed", leq(F("ex6-printed"), midpoint()), Holds, Verdict::NotComparable, "symmetric family, condition (i), printed coefficients");
    add("ex7", leq(F("ex2"), trapezoid()), Holds, Verdict::Holds, "symmetric family, condition (ii)");
    add("t2-sample", leq(F("t2-sample"), midpoint()), Holds, Verdict::Holds, "symmetric family at a = 1, alpha = 1/4");
    return c;
}

}  // namespace

std::string_view to_string(PrintedClaim c) {
    switch (c) {
        case PrintedClaim::Holds: return "holds";
        case PrintedClaim::Fails: return "fails";
        case PrintedClaim::None: return "none";
    }
    return "unknown";
}

Functional named_functional(std::string_view name) {
    if (name == "eq8") return f_only({{q(0), q(1, 3)}, {q(1, 4), q(-8, 3)}, {q(3, 4), q(8, 3)}, {q(1), q(-1, 3)}});
    if (name == "remark3") return f_only({{q(1, 4), q(-3)}, {q(9, 20), q(25, 11)}, {q(1), q(8, 11)}});
    if (name == "prop4") return f_only({{q(0), q(-3)}, {q(1, 2), q(4)}, {q(1), q(-1)}});
    if (name == "ex2") return f_only({{q(0), q(-2)}, {q(1, 3), q(3)}, {q(2, 3), q(-3)}, {q(1), q(2)}});
    if (name == "ex3") return f_only({{q(0), q(-1, 2)}, {q(1, 3), q(-3, 2)}, {q(2, 3), q(3, 2)}, {q(1), q(1, 2)}});
    if (name == "ex4-printed") return f_only({{q(0), q(-3, 2)}, {q(1, 4), q(2)}, {q(3, 4), q(-2)}, {q(1), q(3, 2)}});
    if (name == "ex4-constructed") return f_only({{q(0), q(-3, 2)}, {q(1, 4), q(1)}, {q(3, 4), q(-1)}, {q(1), q(3, 2)}});
    if (name == "ex6-printed") return f_only({{q(0), q(2)}, {q(1, 4), q(-3)}, {q(3, 4), q(3)}, {q(1), q(-2)}});
    if (name == "prop2-sample") return f_only({{q(0), q(1)}, {q(1, 3), q(-3)}, {q(1), q(2)}});
    if (name == "t2-sample") return symmetric_functional(SymmetricFamilyPoint::on_family(q(1), q(1, 4)));
    throw std::out_of_range("unknown functional '" + std::string(name) + "'");
}

const std::vector<CorpusItem>& regression_corpus() {
    static const std::vector<CorpusItem> corpus = build_corpus();
    return corpus;
}

const CorpusItem* find_corpus_item(std::string_view id) {
    for (const auto& item : regression_corpus())
        if (item.id == id) return &item;
    return nullptr;
}

bool claim_agrees(PrintedClaim claim, Verdict computed) {
    switch (claim) {
        case PrintedClaim::Holds: return computed == Verdict::Holds;
        case PrintedClaim::Fails: return computed != Verdict::Holds;
        case PrintedClaim::None: return true;
    }
    return false;
}

SuiteResult run_regression_suite() {
    SuiteResult out;
    for (const auto& item : regression_corpus()) {
        Certificate cert = compare(item.spec.lhs, item.spec.rhs);
        const Verdict v = cert.verdict;
        SuiteRow row{item.id, item.printed_claim, v, item.expected, claim_agrees(item.printed_claim, v), item.source,
                     std::move(cert)};
        if (v != item.expected) out.all_expected = false;
        if (!row.agrees_with_printed) {
            std::string line = item.id + ": printed claim " + std::string(to_string(item.printed_claim)) + ", computed " +
                               std::string(to_string(v));
            if (row.certificate.mass_lhs != row.certificate.mass_rhs)
                line += " (mass " + row.certificate.mass_lhs.str() + " vs " + row.certificate.mass_rhs.str() + ")";
            else if (row.certificate.witness)
                line += " (" + std::string(to_string(row.certificate.witness->kind)) + " witness t=" +
                        row.certificate.witness->t.str() + ", violation " + row.certificate.witness->violation.str() + ")";
            out.errata.push_back(std::move(line));
        }
        out.rows.push_back(std::move(row));
    }

    const std::vector<GridPoint> printed_points{{q(1), q(1, 4)}, {q(-2), q(1, 3)}};
    for (const auto& r : calibration_report(printed_points)) {
        const std::string at = "(a=" + r.a.str() + ", alpha=" + r.alpha.str() + ", b=" + r.b.str() + ")";
        if (r.agree_i && !*r.agree_i)
            out.errata.push_back("condition (i) at " + at + ": printed " + (*r.cond_i ? "true" : "false") +
                                 ", computed " + std::string(to_string(r.verdict)));
        if (r.agree_ii && !*r.agree_ii)
            out.errata.push_back("condition (ii) at " + at + ": printed " + (*r.cond_ii ? "true" : "false") +
                                 ", computed " + std::string(to_string(r.verdict)) + "; with alpha and 1-alpha swapped: " +
                                 (*r.cond_ii_swapped ? "true" : "false"));
    }
    return out;
}

}  // namespace hhcert
