#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hhcert/rational.hpp"

namespace hhcert {

/// One linear piece of a PwFun: on [start, next start) the function equals
/// value + slope * (t - start).
struct Piece {
    Rational start;
    Rational slope;
    Rational value;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Piecewise-linear function on [0, 1] with jump discontinuities.
///
/// Values are right-continuous: at an interior breakpoint the function takes
/// the start value of the piece to its right. The value at t = 1 is stored
/// separately (terminal value) so that a jump at the right endpoint, i.e. a
/// point mass at 1, is representable. The left limit at 0 is 0 by
/// convention, so a nonzero value at 0 is a jump at the left endpoint.
///
/// Instances are always canonical: breakpoints strictly increase from 0 to 1
/// and no interior breakpoint has both an unchanged slope and a zero jump.
class PwFun {
public:
    /// The zero function.
    PwFun();

    /// Builds a canonical PwFun from pieces listed by ascending start. The
    /// first piece must start at 0. Pieces sharing a start collapse to the
    /// last one (zero-length intervals). A piece starting at 1 sets the
    /// terminal value and its slope is ignored; without one the function is
    /// continuous at 1.
    ///
    /// Throws std::invalid_argument for decreasing starts or starts outside
    /// [0, 1].
    static PwFun build(std::vector<Piece> pieces);

    /// G(t) = t.
    static PwFun identity();
    /// Jump of `height` at `at`, zero before and constant after.
    static PwFun step(const Rational& at, const Rational& height = Rational(1));

    /// Right-continuous value; terminal value at t = 1.
    [[nodiscard]] Rational operator()(const Rational& t) const;
    /// Limit from the left; 0 at t = 0.
    [[nodiscard]] Rational left_limit(const Rational& t) const;

    /// Breakpoints including 0 and 1.
    [[nodiscard]] const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }
    [[nodiscard]] std::size_t piece_count() const noexcept { return slopes_.size(); }
    [[nodiscard]] const Rational& slope(std::size_t i) const { return slopes_.at(i); }
    [[nodiscard]] const Rational& start_value(std::size_t i) const { return starts_.at(i); }
    /// Left limit at the right end of piece i.
    [[nodiscard]] Rational end_value(std::size_t i) const;
    [[nodiscard]] const Rational& terminal_value() const noexcept { return terminal_; }

    /// Inverse of build(): pieces plus a terminal piece at 1 when the
    /// function jumps there.
    [[nodiscard]] std::vector<Piece> decompose() const;

    [[nodiscard]] bool is_zero() const;
    /// True when the function (with left limit 0 at 0) never decreases.
    [[nodiscard]] bool is_nondecreasing() const;

    friend PwFun operator+(const PwFun& a, const PwFun& b);
    friend PwFun operator-(const PwFun& a, const PwFun& b);
    friend PwFun operator-(const PwFun& a);
    friend bool operator==(const PwFun&, const PwFun&) = default;

    friend std::ostream& operator<<(std::ostream& os, const PwFun& g);

private:
    [[nodiscard]] std::size_t piece_index(const Rational& t) const;
    void canonicalize();

    std::vector<Rational> breaks_;
    std::vector<Rational> slopes_;
    std::vector<Rational> starts_;
    Rational terminal_;
};

/// Exact pointwise difference g1 - g2.
[[nodiscard]] PwFun subtract(const PwFun& g1, const PwFun& g2);

/// Exact integral of g over [0, t]. Throws std::out_of_range for t outside [0, 1].
[[nodiscard]] Rational prefix_integral(const PwFun& g, const Rational& t);

/// Exact integral of g over [a, b] with 0 <= a <= b <= 1.
[[nodiscard]] Rational integral(const PwFun& g, const Rational& a, const Rational& b);

/// Maximal open interval on which d has a constant sign (-1, 0 or +1).
struct SignInterval {
    Rational lo;
    Rational hi;
    int sign = 0;

    friend bool operator==(const SignInterval&, const SignInterval&) = default;
};

/// Decomposes [0, 1] into maximal intervals of constant sign of d. Interval
/// endpoints are breakpoints of d or exact roots of its linear pieces; a sign
/// change may happen at a jump without a root.
[[nodiscard]] std::vector<SignInterval> sign_profile(const PwFun& d);

/// Location and value of an extremum of H(t) = integral of d over [0, t].
struct PrefixExtremum {
    Rational t;
    Rational value;

    friend bool operator==(const PrefixExtremum&, const PrefixExtremum&) = default;
};

/// Global minimum of H over [0, 1]; ties go to the smallest t.
[[nodiscard]] PrefixExtremum min_prefix_integral(const PwFun& d);
/// Global maximum of H over [0, 1]; ties go to the smallest t.
[[nodiscard]] PrefixExtremum max_prefix_integral(const PwFun& d);

/// Breakpoints of d plus the roots strictly inside its linear pieces. The
/// extrema of H lie in this set.
[[nodiscard]] std::vector<Rational> critical_points(const PwFun& d);

}  // namespace hhcert
