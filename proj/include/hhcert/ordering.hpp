#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hhcert/functional.hpp"
#include "hhcert/pwfun.hpp"
#include "hhcert/rational.hpp"

namespace hhcert {

enum class Verdict { Holds, Fails, NotComparable };

/// "holds", "fails" or "not_comparable".
[[nodiscard]] std::string_view to_string(Verdict v);
/// Inverse of to_string; throws std::invalid_argument.
[[nodiscard]] Verdict parse_verdict(std::string_view s);

struct Interval {
    Rational lo;
    Rational hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Alternating sign decomposition of g1 - g2.
///
/// The sign intervals of g1 - g2 are merged across intervals where the
/// difference vanishes; such zero intervals are recorded but never count as
/// crossings. When the sign flips across a zero interval the crossing is
/// placed at its left end. areas[i] is the absolute integral of g1 - g2 over
/// the i-th merged interval, so every entry is positive.
struct CrossingProfile {
    std::vector<Rational> crossings;
    std::vector<Rational> areas;
    std::vector<Interval> zero_intervals;
    /// Sign of g1 - g2 on the first merged interval; 0 when g1 == g2.
    int leading_sign = 0;

    friend bool operator==(const CrossingProfile&, const CrossingProfile&) = default;
};

[[nodiscard]] CrossingProfile crossing_profile(const PwFun& g1, const PwFun& g2);

/// S_k = A_0 - A_1 + ... + (-1)^k A_k for every k.
[[nodiscard]] std::vector<Rational> alternating_partial_sums(const CrossingProfile& profile);

struct NecessaryCheck {
    bool mass_equal = false;
    bool mean_equal = false;
    Rational mass_lhs, mass_rhs;
    Rational mean_lhs, mean_rhs;
};

/// Equal mass and equal mean integral; both are necessary for either
/// direction of the inequality.
[[nodiscard]] NecessaryCheck check_necessary(const Functional& lhs, const Functional& rhs);

struct LevinSteckinResult {
    bool holds = false;
    /// Minimum of the prefix integral of g2 - g1.
    PrefixExtremum min_prefix;
};

/// Integral of f dg1 <= integral of f dg2 for every continuous convex f iff
/// g1(1) = g2(1), the prefix integral of g2 - g1 is nonnegative on [0, 1]
/// and vanishes at 1.
[[nodiscard]] LevinSteckinResult check_levin_steckin(const PwFun& g1, const PwFun& g2);

/// Decides the ordering from the crossing profile alone. An even number of
/// crossings, or a profile that starts with g1 above g2, fails; an odd number
/// holds iff A_0 >= A_1, A_0 - A_1 + A_2 >= A_3, ... up to index n - 2.
/// Returns NotComparable unless masses and means are equal. Throws
/// std::invalid_argument for a nonzero difference with no crossing, which
/// cannot occur with equal means.
[[nodiscard]] Verdict check_alternating(const CrossingProfile& profile, bool masses_equal, bool means_equal);

/// Single-crossing fast path for genuine distribution functions. Decides
/// only when both transforms are nondecreasing with equal masses and means
/// and cross once with g1 below g2 first (or coincide); otherwise nullopt.
[[nodiscard]] std::optional<Verdict> check_ohlin(const PwFun& g1, const PwFun& g2);

enum class WitnessKind { Hinge, Affine, Constant };

[[nodiscard]] std::string_view to_string(WitnessKind k);

/// Convex function on which lhs exceeds rhs: u -> (u - t)+ for a hinge,
/// u -> sign * u for affine, u -> sign for a constant.
struct ConvexWitness {
    WitnessKind kind = WitnessKind::Hinge;
    Rational t;
    int sign = 1;
    /// T_lhs(w) - T_rhs(w), exact.
    Rational violation;

    friend bool operator==(const ConvexWitness&, const ConvexWitness&) = default;
};

struct Certificate {
    Verdict verdict = Verdict::NotComparable;
    Rational mass_lhs, mass_rhs;
    Rational mean_lhs, mean_rhs;
    /// Empty unless masses and means match.
    CrossingProfile profile;
    std::vector<Rational> partial_sums;
    /// Minimum of the prefix integral of G_rhs - G_lhs; nonnegative iff the
    /// prefix condition holds.
    PrefixExtremum min_prefix;
    std::optional<ConvexWitness> witness;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Decides whether lhs(f) <= rhs(f) for every continuous convex f.
///
/// Mass mismatch gives NotComparable with a constant witness, mean mismatch
/// NotComparable with an affine witness. Otherwise the prefix-integral test
/// is authoritative and a failure carries the hinge at the point of largest
/// violation (smallest such t on ties).
[[nodiscard]] Certificate compare(const Functional& lhs, const Functional& rhs);

/// T_lhs(w) - T_rhs(w) evaluated directly from the closed-form
/// antiderivative of the witness, independently of the transforms.
[[nodiscard]] Rational witness_violation(const Functional& lhs, const Functional& rhs, const ConvexWitness& w);

}  // namespace hhcert
