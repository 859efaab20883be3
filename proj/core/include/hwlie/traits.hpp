#pragma once

#include <cstdint>
#include <string>

#include "hwlie/quadratic.hpp"
#include "hwlie/scalar.hpp"

namespace hwlie {

/// Degree type of the integer-graded algebras.
using IntGrade = long long;

/// Exact ordering and printing of a grading group.
template <class G>
struct GradeTraits;

template <>
struct GradeTraits<IntGrade> {
    static int sign(IntGrade g) { return (g > 0) - (g < 0); }
    static std::string str(IntGrade g) { return std::to_string(g); }
};

template <>
struct GradeTraits<QuadInt> {
    static int sign(const QuadInt& g) { return quad_sign(g); }
    static std::string str(const QuadInt& g) { return g.str(); }
};

/// Glue between a coefficient field K and the grading group G it pairs with.
/// Exactly two pairings exist: (Scalar, IntGrade) for the Virasoro,
/// Heisenberg-Virasoro, Heisenberg and finite-dimensional algebras, and
/// (QuadRat, QuadInt) for higher rank Virasoro algebras.
template <class K, class G>
struct CoeffTraits;

template <>
struct CoeffTraits<Scalar, IntGrade> {
    static Scalar from_int(long long n) { return Scalar(n); }
    static Scalar from_grade(IntGrade g) { return Scalar(Rational(BigInt(g))); }
    /// (g^3 - g)/12, computed in exact big integers before dividing.
    static Scalar central_coeff(IntGrade g) {
        BigInt b{g};
        return Scalar(Rational(b * b * b - b, 12));
    }
    static std::string str(const Scalar& k) { return k.str(); }
};

template <>
struct CoeffTraits<QuadRat, QuadInt> {
    static QuadRat from_int(long long n) { return QuadRat(Rational(n)); }
    static QuadRat from_grade(const QuadInt& g) { return QuadRat(g); }
    static QuadRat central_coeff(const QuadInt& g) {
        QuadRat cube{g * g * g};
        return (cube - QuadRat(g)) * QuadRat(Rational(1, 12));
    }
    static std::string str(const QuadRat& k) { return k.str(); }
};

} // namespace hwlie
