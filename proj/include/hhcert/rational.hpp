#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hhcert {

/// Exact arbitrary-precision fraction, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : value_(static_cast<long>(n)) {}

    template <std::integral T, std::integral U>
    Rational(T num, U den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(static_cast<long>(num)) / mpq_class(static_cast<long>(den));
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p/q" or an integer string ("-3", "+7"). Throws
    /// std::invalid_argument on anything else, std::domain_error on q == 0.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }
    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }

    [[nodiscard]] int sign() const noexcept { return sgn(value_); }
    [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    /// "p/q", or "p" for integers.
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

[[nodiscard]] inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
[[nodiscard]] inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
[[nodiscard]] inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Positive part max(r, 0).
[[nodiscard]] inline Rational positive_part(const Rational& r) { return r.sign() > 0 ? r : Rational{}; }

}  // namespace hhcert
