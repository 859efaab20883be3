#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "hwlie/rational.hpp"

namespace hwlie {

/// Element a + b*sqrt(2) of the additive group Z + Z*sqrt(2).  The pair
/// (a, b) determines the real value uniquely (1 and sqrt(2) are rationally
/// independent), so equality is component-wise and ordering is decided
/// exactly, with no floating point anywhere.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(long long a) : a_(a) {}                // NOLINT: implicit by design
    QuadInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

    [[nodiscard]] const BigInt& rat_part() const { return a_; }
    [[nodiscard]] const BigInt& irr_part() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    QuadInt operator-() const { return {-a_, -b_}; }
    QuadInt& operator+=(const QuadInt& o) { a_ += o.a_; b_ += o.b_; return *this; }

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
    friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y);

    /// `-3+2*r2`, `1`, `-1*r2`; zero parts elided, zero prints `0`.
    [[nodiscard]] std::string str() const;

private:
    BigInt a_{};
    BigInt b_{};
};

/// Exact sign of a + b*sqrt(2): -1, 0 or +1.  When a and b disagree in sign
/// the comparison reduces to a^2 vs 2*b^2 in exact integers.
int quad_sign(const QuadInt& v);

QuadInt parse_quadint(std::string_view text);
std::ostream& operator<<(std::ostream& os, const QuadInt& v);

/// Element of the field Q(sqrt(2)), stored as a pair of Rationals.  This is
/// the coefficient field of the higher rank Virasoro algebra; it is kept
/// disjoint from Scalar = Q(i) by construction.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(long long n) : a_(n) {}                // NOLINT: implicit by design
    QuadRat(Rational a) : a_(std::move(a)) {}      // NOLINT
    QuadRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadRat(const QuadInt& v)                      // NOLINT: group embeds in its field
        : a_(Rational(v.rat_part())), b_(Rational(v.irr_part())) {}

    static QuadRat sqrt2() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& rat_part() const { return a_; }
    [[nodiscard]] const Rational& irr_part() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_one() const { return a_.is_one() && b_.is_zero(); }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
        if (y.is_zero()) throw DivisionByZero{};
        // 1/(c + d*r2) = (c - d*r2)/(c^2 - 2 d^2); the norm is nonzero since
        // sqrt(2) is irrational.
        Rational n = y.a_ * y.a_ - Rational(2) * y.b_ * y.b_;
        QuadRat conj{y.a_ / n, -y.b_ / n};
        return x * conj;
    }
    QuadRat operator-() const { return {-a_, -b_}; }
    QuadRat& operator+=(const QuadRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadRat& operator-=(const QuadRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadRat& operator*=(const QuadRat& o) { *this = *this * o; return *this; }

    friend bool operator==(const QuadRat&, const QuadRat&) = default;

    /// `a+b*r2` with rational a, b; zero parts elided.
    [[nodiscard]] std::string str() const;

private:
    Rational a_{};
    Rational b_{};
};

/// Exact sign in Q(sqrt(2)), by clearing denominators down to quad_sign.
int quad_sign(const QuadRat& v);

QuadRat parse_quadrat(std::string_view text);
std::ostream& operator<<(std::ostream& os, const QuadRat& v);

/// Coefficient rendering for `coef*symbol` terms (see Scalar::term_format).
inline std::pair<std::string, bool> term_format(const QuadRat& v) {
    if (v.irr_part().is_zero()) return {v.rat_part().abs().str(), v.rat_part().sign() < 0};
    if (v.rat_part().is_zero())
        return {v.irr_part().abs().str() + "*r2", v.irr_part().sign() < 0};
    return {"(" + v.str() + ")", false};
}

} // namespace hwlie
