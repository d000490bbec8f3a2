#include "hhcert/closedform.hpp"

namespace hhcert {

namespace {

const Rational kHalf{1, 2};

Functional side_functional(Side s, const Functional& formula) {
    switch (s) {
        case Side::Formula: return formula;
        case Side::Midpoint: return reference::midpoint();
        case Side::IntegralMean: return reference::integral_mean();
        case Side::Trapezoid: return reference::trapezoid();
    }
    throw std::logic_error("unknown side");
}

CaseClaim make_claim(FourPointCase which, const Functional& formula, std::vector<std::pair<Side, Side>> links) {
    CaseClaim claim{which, {}};
    for (auto [lhs, rhs] : links) {
        const auto verdict = compare(side_functional(lhs, formula), side_functional(rhs, formula)).verdict;
        claim.chain.push_back({lhs, rhs, verdict});
    }
    return claim;
}

void require_open_half(const Rational& alpha) {
    if (alpha.sign() <= 0 || alpha >= kHalf)
        throw std::invalid_argument("alpha " + alpha.str() + " outside (0,1/2)");
}

}  // namespace

std::string_view to_string(Side s) {
    switch (s) {
        case Side::Formula: return "formula";
        case Side::Midpoint: return "midpoint";
        case Side::IntegralMean: return "integral_mean";
        case Side::Trapezoid: return "trapezoid";
    }
    return "unknown";
}

std::string_view to_string(FourPointCase c) {
    switch (c) {
        case FourPointCase::I: return "i";
        case FourPointCase::II: return "ii";
        case FourPointCase::III: return "iii";
        case FourPointCase::IV: return "iv";
        case FourPointCase::None: return "none";
    }
    return "unknown";
}

Functional FourPointFormula::to_functional() const {
    if (!(Rational(1) > alpha2 && alpha2 > alpha3 && alpha3.sign() > 0))
        throw std::invalid_argument("four-point nodes need 1 > alpha2 > alpha3 > 0");
    const Rational one{1};
    return Functional::make({}, {{Rational(0), a[0]}, {one - alpha2, a[1]}, {one - alpha3, a[2]}, {one, a[3]}});
}

FourPointClassification classify_four_point(const FourPointFormula& f4) {
    const Functional formula = f4.to_functional();
    const Rational m = mass(formula);
    const Rational mean = mean_integral(formula);
    if (m != Rational(1) || mean != kHalf)
        throw ConstraintViolation("four-point formula needs mass 1 and mean integral 1/2, got mass " + m.str() +
                                      " and mean integral " + mean.str(),
                                  m, mean);

    const Rational& a1 = f4.a[0];
    const Rational minus_one{-1};
    const bool case_i = a1 > minus_one;
    const bool case_ii = a1 < minus_one;
    const bool case_iii = a1 > minus_one && a1.sign() <= 0;
    const bool case_iv = a1 < minus_one && (a1 + f4.a[1]).sign() <= 0;

    FourPointClassification out;
    using enum Side;
    if (case_i)
        out.applicable.push_back(make_claim(FourPointCase::I, formula, {{Formula, IntegralMean}, {IntegralMean, Trapezoid}}));
    if (case_ii)
        out.applicable.push_back(make_claim(FourPointCase::II, formula, {{Midpoint, IntegralMean}, {IntegralMean, Formula}}));
    if (case_iii)
        out.applicable.push_back(make_claim(FourPointCase::III, formula, {{Midpoint, Formula}, {Formula, IntegralMean}}));
    if (case_iv)
        out.applicable.push_back(make_claim(FourPointCase::IV, formula, {{IntegralMean, Formula}, {Formula, Trapezoid}}));

    if (case_iv)
        out.primary = FourPointCase::IV;
    else if (case_ii)
        out.primary = FourPointCase::II;
    else if (case_iii)
        out.primary = FourPointCase::III;
    else if (case_i)
        out.primary = FourPointCase::I;
    return out;
}

Rational SymmetricFamilyPoint::family_b(const Rational& a, const Rational& alpha) {
    require_open_half(alpha);
    const Rational two{2};
    return a + (Rational(1) + two * a * alpha) / (Rational(1) - two * alpha);
}

SymmetricFamilyPoint SymmetricFamilyPoint::on_family(const Rational& a, const Rational& alpha) {
    return {a, family_b(a, alpha), alpha};
}

bool SymmetricFamilyPoint::satisfies_mass_constraint() const { return b == family_b(a, alpha); }

bool t2_condition_i(const SymmetricFamilyPoint& p) {
    if (p.a.sign() <= 0) throw std::invalid_argument("condition (i) requires a > 0");
    const Rational s = p.a + p.b;
    if (s.is_zero()) throw std::invalid_argument("condition (i) undefined for a + b = 0");
    const Rational one_minus = Rational(1) - p.alpha;
    const Rational lhs = one_minus * one_minus * p.a * p.b / s;
    const Rational rhs = kHalf - one_minus * p.b / s;
    return lhs > rhs;
}

bool t2_condition_ii(const SymmetricFamilyPoint& p, bool swap_alpha) {
    if (p.a >= Rational(-1)) throw std::invalid_argument("condition (ii) requires a < -1");
    const Rational alpha = swap_alpha ? Rational(1) - p.alpha : p.alpha;
    const Rational lhs = Rational(-1) / (Rational(4) * p.a);
    const Rational rhs = (-p.a * (Rational(1) - alpha) - kHalf) * (kHalf + Rational(1) / (Rational(2) * p.a));
    return lhs > rhs;
}

Functional symmetric_functional(const SymmetricFamilyPoint& p) {
    require_open_half(p.alpha);
    if (!p.satisfies_mass_constraint())
        throw std::invalid_argument("b = " + p.b.str() + " is off the mass-1 family (expected " +
                                    SymmetricFamilyPoint::family_b(p.a, p.alpha).str() + ")");
    const Rational one{1};
    return Functional::make({}, {{Rational(0), p.a}, {p.alpha, -p.b}, {one - p.alpha, p.b}, {one, -p.a}});
}

std::array<Rational, 3> t2_crossings_printed(const SymmetricFamilyPoint& p) {
    const Rational s = p.a + p.b;
    if (s.is_zero()) throw std::invalid_argument("printed crossings undefined for a + b = 0");
    return {(Rational(1) - p.alpha) * p.b / s, kHalf, (p.a + p.alpha * p.b) / s};
}

ThreePointReason three_point_check(const Functional& fn) {
    const auto& terms = fn.f_terms();
    if (!fn.atoms().empty() || terms.size() != 3 || !terms[0].node.is_zero() || terms[2].node != Rational(1))
        throw std::invalid_argument("three_point_check expects F-terms only at nodes 0, l, 1");
    if (terms[1].coef.is_zero()) throw std::invalid_argument("three_point_check expects a nonzero middle coefficient");

    ThreePointReason out;
    out.mass = mass(fn);
    out.mean = mean_integral(fn);
    if (out.mass != Rational(1))
        out.violated = "mass";
    else if (out.mean != kHalf)
        out.violated = "mean";
    else
        throw std::logic_error("three-point formula with mass 1 and mean 1/2: " + out.mass.str());
    out.vs_midpoint = compare(reference::midpoint(), fn).verdict;
    out.vs_trapezoid = compare(fn, reference::trapezoid()).verdict;
    return out;
}

std::vector<CalibrationRow> calibration_report(const std::vector<GridPoint>& grid) {
    std::vector<CalibrationRow> rows;
    rows.reserve(grid.size());
    for (const auto& gp : grid) {
        const auto p = SymmetricFamilyPoint::on_family(gp.a, gp.alpha);
        const Functional formula = symmetric_functional(p);
        CalibrationRow row;
        row.a = gp.a;
        row.alpha = gp.alpha;
        row.b = p.b;
        if (gp.a.sign() > 0) {
            row.verdict = compare(formula, reference::midpoint()).verdict;
            row.cond_i = t2_condition_i(p);
            row.agree_i = (row.verdict == Verdict::Holds) == *row.cond_i;
        } else if (gp.a < Rational(-1)) {
            row.verdict = compare(formula, reference::trapezoid()).verdict;
            row.cond_ii = t2_condition_ii(p, false);
            row.cond_ii_swapped = t2_condition_ii(p, true);
            row.agree_ii = (row.verdict == Verdict::Holds) == *row.cond_ii;
            row.agree_ii_swapped = (row.verdict == Verdict::Holds) == *row.cond_ii_swapped;
        } else {
            throw std::invalid_argument("calibration grid point a = " + gp.a.str() + " lies in [-1,0]");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hhcert
