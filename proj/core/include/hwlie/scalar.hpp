#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "hwlie/rational.hpp"

namespace hwlie {

/// Gaussian rational re + im*i, the coefficient field for the integer-graded
/// algebras.  Equality is component-wise; Rational embeds via im = 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : re_(n) {}                // NOLINT: implicit by design
    Scalar(Rational re) : re_(std::move(re)) {}    // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero{};
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    Scalar operator-() const { return {-re_, -im_}; }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    /// `a/b`, `c/d*i` or `a/b+c/d*i`, zero parts omitted; zero prints `0`.
    [[nodiscard]] std::string str() const;

private:
    Rational re_{};
    Rational im_{};
};

/// Parses the grammar printed by Scalar::str; also accepts `i` and `-i`.
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Coefficient rendering for `coef*symbol` terms: unsigned body plus a sign
/// flag the caller folds into `+`/`-` separators.  Mixed complex values are
/// parenthesized and never considered negative.
inline std::pair<std::string, bool> term_format(const Scalar& s) {
    if (s.im().is_zero()) return {s.re().abs().str(), s.re().sign() < 0};
    if (s.re().is_zero()) return {s.im().abs().str() + "*i", s.im().sign() < 0};
    return {"(" + s.str() + ")", false};
}

} // namespace hwlie
