#pragma once

#include <functional>
#include <vector>

#include "hhcert/pwfun.hpp"
#include "hhcert/rational.hpp"

namespace hhcert {

/// Weight on a point evaluation f(x + node * (y - x)).
struct Atom {
    Rational node;
    Rational weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Coefficient on an antiderivative evaluation F(x + node * (y - x)) / (y - x).
struct FTerm {
    Rational node;
    Rational coef;

    friend bool operator==(const FTerm&, const FTerm&) = default;
};

/// One side of a Hermite-Hadamard-type inequality on a normalized interval:
///
///     T(f) = sum_i w_i f(x + l_i h) + (1/h) sum_j c_j F(x + l_j h),  h = y - x,
///
/// where F' = f. Nodes are positions l in [0, 1] measured from x. A formula
/// written with points a*x + (1-a)*y has node l = 1 - a.
///
/// Invariants: F-term coefficients sum to zero; nodes are sorted ascending
/// and unique within atoms and within F-terms.
class Functional {
public:
    Functional() = default;

    /// Validates, sorts and merges duplicate nodes. Throws
    /// std::invalid_argument when a node lies outside [0, 1] or the F-term
    /// coefficients do not sum to zero.
    static Functional make(std::vector<Atom> atoms, std::vector<FTerm> f_terms);

    [[nodiscard]] const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] const std::vector<FTerm>& f_terms() const noexcept { return f_terms_; }

    friend bool operator==(const Functional&, const Functional&) = default;

private:
    std::vector<Atom> atoms_;
    std::vector<FTerm> f_terms_;
};

/// Non-degenerate interval [x, y].
struct IntervalSpec {
    Rational x{0};
    Rational y{1};

    /// Throws std::invalid_argument unless x < y.
    static IntervalSpec make(Rational x, Rational y);

    friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

/// Distribution-like function G with T(f) = integral of f dG over [0, 1]:
/// the atom weights at nodes <= t plus the mass on [0, t] of the signed
/// measure whose density between consecutive F-nodes is minus the running
/// sum of the coefficients.
[[nodiscard]] PwFun bv_transform(const Functional& fn);

/// T(1) = G(1).
[[nodiscard]] Rational mass(const Functional& fn);

/// Integral of G over [0, 1]. Equal masses plus equal mean integrals is
/// equivalent to equal action on affine functions.
[[nodiscard]] Rational mean_integral(const Functional& fn);

namespace reference {

/// f((x+y)/2)
[[nodiscard]] Functional midpoint();
/// (f(x) + f(y)) / 2
[[nodiscard]] Functional trapezoid();
/// (F(y) - F(x)) / (y - x)
[[nodiscard]] Functional integral_mean();
/// f(x + node (y - x)); throws std::invalid_argument for node outside [0, 1].
[[nodiscard]] Functional point_eval(const Rational& node);

}  // namespace reference

using RealFunction = std::function<double(double)>;

/// Floating-point T(f) on [x, y]; `antiderivative` must satisfy F' = f there.
[[nodiscard]] double evaluate_numeric(const Functional& fn, const RealFunction& f,
                                      const RealFunction& antiderivative, const IntervalSpec& iv);

}  // namespace hhcert
