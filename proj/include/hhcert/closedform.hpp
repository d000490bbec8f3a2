#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hhcert/functional.hpp"
#include "hhcert/ordering.hpp"
#include "hhcert/rational.hpp"

namespace hhcert {

/// Raised when a formula violates the equal-mass or equal-mean condition
/// required by a closed-form criterion. Carries the exact values.
class ConstraintViolation : public std::invalid_argument {
public:
    ConstraintViolation(const std::string& what, Rational mass, Rational mean)
        : std::invalid_argument(what), mass_(std::move(mass)), mean_(std::move(mean)) {}

    [[nodiscard]] const Rational& mass() const noexcept { return mass_; }
    [[nodiscard]] const Rational& mean() const noexcept { return mean_; }

private:
    Rational mass_;
    Rational mean_;
};

/// a1 F(x) + a2 F(a2' x + (1-a2') y) + a3 F(a3' x + (1-a3') y) + a4 F(y),
/// divided by y - x, written in the descending weight convention
/// 1 > alpha2 > alpha3 > 0.
struct FourPointFormula {
    std::array<Rational, 4> a;
    Rational alpha2;
    Rational alpha3;

    /// Throws std::invalid_argument unless the coefficients sum to 0 and the
    /// nodes are strictly ordered.
    [[nodiscard]] Functional to_functional() const;
};

/// The sides that appear in the four-point chains.
enum class Side { Formula, Midpoint, IntegralMean, Trapezoid };

[[nodiscard]] std::string_view to_string(Side s);

struct ChainLink {
    Side lhs;
    Side rhs;
    Verdict verified = Verdict::NotComparable;
};

enum class FourPointCase { I, II, III, IV, None };

[[nodiscard]] std::string_view to_string(FourPointCase c);

struct CaseClaim {
    FourPointCase which = FourPointCase::None;
    /// Printed inequality chain with each link recomputed by compare().
    std::vector<ChainLink> chain;
};

struct FourPointClassification {
    /// Most specific applicable case: iv before ii, iii before i.
    FourPointCase primary = FourPointCase::None;
    /// Every case whose hypothesis holds, in the order i, ii, iii, iv.
    std::vector<CaseClaim> applicable;
};

/// Classifies a four-point formula with mass 1 and mean 1/2 by its first
/// coefficient (a1 > -1, a1 < -1, a1 in (-1, 0], a1 < -1 with a1 + a2 <= 0)
/// and verifies every claimed chain link. Throws ConstraintViolation when the
/// formula has mass != 1 or mean integral != 1/2.
[[nodiscard]] FourPointClassification classify_four_point(const FourPointFormula& f4);

/// Point of the two-parameter symmetric family
///     a F(x) + b F(alpha x + (1-alpha) y) - b F((1-alpha) x + alpha y) - a F(y)
/// with alpha in (0, 1/2). The family has mass 1 iff
/// b = a + (1 + 2 a alpha) / (1 - 2 alpha); the mean is then 1/2 by symmetry.
struct SymmetricFamilyPoint {
    Rational a;
    Rational b;
    Rational alpha;

    /// Point on the mass-1 family; throws std::invalid_argument unless
    /// alpha is in (0, 1/2).
    static SymmetricFamilyPoint on_family(const Rational& a, const Rational& alpha);
    [[nodiscard]] static Rational family_b(const Rational& a, const Rational& alpha);
    [[nodiscard]] bool satisfies_mass_constraint() const;
};

/// Literal printed condition (1-alpha)^2 ab/(a+b) > 1/2 - (1-alpha) b/(a+b).
/// Requires a > 0 and a + b != 0.
[[nodiscard]] bool t2_condition_i(const SymmetricFamilyPoint& p);

/// Literal printed condition -1/(4a) > (-a(1-alpha) - 1/2)(1/2 + 1/(2a)).
/// Requires a < -1. With `swap_alpha` the condition is evaluated at
/// 1 - alpha instead of alpha.
[[nodiscard]] bool t2_condition_ii(const SymmetricFamilyPoint& p, bool swap_alpha = false);

/// Nodes 0, alpha, 1 - alpha, 1 with coefficients a, -b, b, -a. Throws
/// std::invalid_argument for alpha outside (0, 1/2) or a point off the
/// mass-1 family.
[[nodiscard]] Functional symmetric_functional(const SymmetricFamilyPoint& p);

/// The printed crossing points ((1-alpha)b/(a+b), 1/2, (a+alpha b)/(a+b)),
/// unsorted, for comparison against crossing_profile.
[[nodiscard]] std::array<Rational, 3> t2_crossings_printed(const SymmetricFamilyPoint& p);

struct ThreePointReason {
    Rational mass;
    Rational mean;
    /// "mass" when mass != 1, otherwise "mean".
    std::string violated;
    Verdict vs_midpoint = Verdict::NotComparable;
    Verdict vs_trapezoid = Verdict::NotComparable;
};

/// Explains why a three-node endpoint formula (nodes 0, l, 1, no atoms,
/// nonzero middle coefficient) cannot sit on either side of the
/// Hermite-Hadamard chain: mass 1 and mean 1/2 together force the middle
/// coefficient to vanish. Throws std::invalid_argument on any other shape.
[[nodiscard]] ThreePointReason three_point_check(const Functional& fn);

struct GridPoint {
    Rational a;
    Rational alpha;
};

struct CalibrationRow {
    Rational a;
    Rational alpha;
    Rational b;
    /// formula <= midpoint for a > 0, formula <= trapezoid for a < -1.
    Verdict verdict = Verdict::NotComparable;
    std::optional<bool> cond_i;
    std::optional<bool> cond_ii;
    std::optional<bool> cond_ii_swapped;
    std::optional<bool> agree_i;
    std::optional<bool> agree_ii;
    std::optional<bool> agree_ii_swapped;
};

/// Compares the printed symmetric-family conditions with compare() at every
/// grid point, in grid order. Throws std::invalid_argument for a point with
/// alpha outside (0, 1/2) or a in [-1, 0].
[[nodiscard]] std::vector<CalibrationRow> calibration_report(const std::vector<GridPoint>& grid);

}  // namespace hhcert
