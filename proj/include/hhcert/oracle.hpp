#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhcert/functional.hpp"
#include "hhcert/rational.hpp"

namespace hhcert {

/// Convex test function on [0, 1] with a closed-form antiderivative.
class TestFunction {
public:
    enum class Kind { Hinge, Power, Exponential, AbsDev };

    /// (u - t)+, antiderivative (u - t)+^2 / 2.
    static TestFunction hinge(Rational t);
    /// u^p for integer p >= 1, antiderivative u^(p+1) / (p+1).
    static TestFunction power(int p);
    /// exp(k u), antiderivative exp(k u) / k; k != 0.
    static TestFunction exponential(double k);
    /// |u - c|, antiderivative (u - c)|u - c| / 2.
    static TestFunction absdev(Rational c);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double f(double u) const;
    [[nodiscard]] double antiderivative(double u) const;
    /// False for the exponential family, whose values are irrational.
    [[nodiscard]] bool is_exact() const noexcept { return kind_ != Kind::Exponential; }
    [[nodiscard]] std::string label() const;

    /// Exact f(u) and F(u) at a rational point; throws std::logic_error for
    /// the exponential family.
    [[nodiscard]] Rational f_exact(const Rational& u) const;
    [[nodiscard]] Rational antiderivative_exact(const Rational& u) const;

private:
    TestFunction(Kind kind, Rational point, int power, double rate)
        : kind_(kind), point_(std::move(point)), power_(power), rate_(rate) {}

    Kind kind_;
    Rational point_;
    int power_ = 1;
    double rate_ = 1.0;
};

/// Exact T(f) on [0, 1] from the closed-form antiderivative.
[[nodiscard]] Rational evaluate_exact(const Functional& fn, const TestFunction& tf);

/// Exact T((u - t)+) computed from the transform as (1 - t) G(1) minus the
/// integral of G over [t, 1].
[[nodiscard]] Rational hinge_exact(const Functional& fn, const Rational& t);

struct HingeSweep {
    Rational max_violation;
    Rational t;
};

/// Largest T_lhs - T_rhs over hinges at every breakpoint of both transforms
/// and every interior root of their difference (smallest t on ties). This
/// finite set contains the global maximizer. Throws std::invalid_argument
/// when masses or mean integrals differ.
[[nodiscard]] HingeSweep hinge_sweep(const Functional& lhs, const Functional& rhs);

struct CrossCheckEntry {
    std::string label;
    double difference = 0.0;
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries;
    double max_difference = 0.0;
    std::string argmax;
};

/// Floating T_lhs - T_rhs on [x, y] for each family member, each pulled back
/// from [0, 1] by the affine map onto the interval.
[[nodiscard]] CrossCheckReport numeric_cross_check(const Functional& lhs, const Functional& rhs,
                                                   const std::vector<TestFunction>& family, const IntervalSpec& iv);

/// Powers 2..4, exp(u), exp(-u), |u - 1/3|, |u - 1/2| and hinges at
/// i / hinge_grid for i = 0..hinge_grid.
[[nodiscard]] std::vector<TestFunction> standard_family(int hinge_grid);

enum class InstanceConstraint { None, Mass1, Mass1Mean12 };

struct RandomInstanceSpec {
    int node_count = 4;
    int denominator_bound = 12;
    int coefficient_bound = 4;
    InstanceConstraint constraint = InstanceConstraint::None;
    std::uint64_t seed = 0;
    /// Forces F-nodes at 0 and 1.
    bool endpoints = false;
    int atom_count = 0;
};

/// Random F-term functional with rational nodes and coefficients; the last
/// one, two or three coefficients are solved exactly so that the
/// coefficients sum to zero and the requested constraints hold.
/// Deterministic per seed. Throws std::invalid_argument for node_count
/// outside [constraints + 1, 8].
[[nodiscard]] Functional random_functional(const RandomInstanceSpec& spec);

}  // namespace hhcert
