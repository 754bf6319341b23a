#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace qtoric {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

BigRational parse_rational(const std::string& text);
std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

inline int sign(const BigInt& value) { return value.sign(); }
inline int sign(const BigRational& value) { return value.sign(); }

/**
 * Exact element a + b*sqrt(2) of the quadratic field Q(sqrt2).
 *
 * Every coordinate of the Caratheodory curve at angles k*pi/4 lives here, so
 * orientation determinants and hyperplane tests can be decided without
 * rounding. Inversion uses the norm (a + b√2)(a - b√2) = a^2 - 2b^2, which
 * vanishes only at zero because √2 is irrational.
 */
class Sqrt2Number {
public:
    Sqrt2Number() = default;
    Sqrt2Number(BigRational rational, BigRational sqrt2 = 0)
        : rational_(std::move(rational)), sqrt2_(std::move(sqrt2)) {}
    Sqrt2Number(int value) : rational_(value) {}

    static Sqrt2Number root2() { return {0, 1}; }

    const BigRational& rational_part() const noexcept { return rational_; }
    const BigRational& sqrt2_part() const noexcept { return sqrt2_; }

    bool is_zero() const { return rational_ == 0 && sqrt2_ == 0; }
    bool is_rational() const { return sqrt2_ == 0; }

    /// a^2 - 2b^2.
    BigRational norm() const { return rational_ * rational_ - 2 * sqrt2_ * sqrt2_; }
    Sqrt2Number conjugate() const { return {rational_, -sqrt2_}; }
    Sqrt2Number inverse() const;

    Sqrt2Number operator-() const { return {-rational_, -sqrt2_}; }
    Sqrt2Number& operator+=(const Sqrt2Number& rhs);
    Sqrt2Number& operator-=(const Sqrt2Number& rhs);
    Sqrt2Number& operator*=(const Sqrt2Number& rhs);
    Sqrt2Number& operator/=(const Sqrt2Number& rhs);

    friend Sqrt2Number operator+(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs += rhs; }
    friend Sqrt2Number operator-(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs -= rhs; }
    friend Sqrt2Number operator*(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs *= rhs; }
    friend Sqrt2Number operator/(Sqrt2Number lhs, const Sqrt2Number& rhs) { return lhs /= rhs; }

    friend bool operator==(const Sqrt2Number& lhs, const Sqrt2Number& rhs) {
        return lhs.rational_ == rhs.rational_ && lhs.sqrt2_ == rhs.sqrt2_;
    }
    friend std::strong_ordering operator<=>(const Sqrt2Number& lhs, const Sqrt2Number& rhs);

private:
    BigRational rational_{0};
    BigRational sqrt2_{0};
};

/// Exact sign of a + b*sqrt(2): -1, 0 or +1.
int sign_sqrt2(const Sqrt2Number& x);
inline int sign(const Sqrt2Number& x) { return sign_sqrt2(x); }

/// "p/q + r/s*sqrt2" style text, for reports.
std::string to_string(const Sqrt2Number& value);

/// Only for display; never used in a decision.
double approximate(const Sqrt2Number& value);

}  // namespace qtoric
