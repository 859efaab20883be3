#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hwlie/errors.hpp"

namespace hwlie {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational, always normalized: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1.  Backed by
/// boost::multiprecision::cpp_rational, which maintains exactly this
/// canonical form.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : value_(n) {}      // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero{};
        value_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return value_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero{};
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// `-3`, `1/2`; denominator 1 elided.
    [[nodiscard]] std::string str() const;

private:
    explicit Rational(BigRat v) : value_(std::move(v)) {}
    BigRat value_{};
};

/// Parses the grammar printed by Rational::str (optionally signed).
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace hwlie
