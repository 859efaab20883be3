#include "hwlie/quadratic.hpp"

#include <ostream>

namespace hwlie {

int quad_sign(const QuadInt& v) {
    const BigInt& a = v.rat_part();
    const BigInt& b = v.irr_part();
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return +1;
    if (a <= 0 && b <= 0) return -1;
    // Signs disagree: a + b*r2 has the sign of a iff a^2 > 2 b^2.
    BigInt lhs = a * a, rhs = 2 * b * b;
    int a_sign = a > 0 ? +1 : -1;
    return lhs > rhs ? a_sign : -a_sign;   // equality impossible for b != 0
}

std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
    switch (quad_sign(x - y)) {
        case -1: return std::strong_ordering::less;
        case +1: return std::strong_ordering::greater;
        default: return std::strong_ordering::equal;
    }
}

int quad_sign(const QuadRat& v) {
    BigInt da = v.rat_part().denominator(), db = v.irr_part().denominator();
    return quad_sign(QuadInt(v.rat_part().numerator() * db, v.irr_part().numerator() * da));
}

namespace {

std::string join_parts(const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) return "0";
    std::string s;
    if (!a.is_zero()) s = a.str();
    if (!b.is_zero()) {
        if (!a.is_zero())
            s += b.sign() < 0 ? "-" : "+";
        else if (b.sign() < 0)
            s += "-";
        s += b.abs().str() + "*r2";
    }
    return s;
}

} // namespace

std::string QuadInt::str() const { return join_parts(Rational(a_), Rational(b_)); }
std::string QuadRat::str() const { return join_parts(a_, b_); }

std::ostream& operator<<(std::ostream& os, const QuadInt& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const QuadRat& v) { return os << v.str(); }

namespace {

// `a`, `b*r2`, `a+b*r2`, `a-b*r2`, `r2`, `-r2`.
void parse_two_parts(std::string_view text, Rational& rat, Rational& irr) {
    if (text.empty()) throw ParseError("empty value");

    auto parse_part = [&](std::string_view part) {
        if (part == "r2" || part == "+r2") { irr += Rational(1); return; }
        if (part == "-r2") { irr -= Rational(1); return; }
        if (part.size() >= 3 && part.substr(part.size() - 3) == "*r2")
            irr += parse_rational(part.substr(0, part.size() - 3));
        else
            rat += parse_rational(part);
    };

    size_t split = std::string_view::npos;
    for (size_t k = 1; k < text.size(); ++k)
        if (text[k] == '+' || text[k] == '-') split = k;

    if (split == std::string_view::npos) {
        parse_part(text);
    } else {
        parse_part(text.substr(0, split));
        parse_part(text.substr(split));
    }
}

} // namespace

QuadInt parse_quadint(std::string_view text) {
    Rational rat, irr;
    parse_two_parts(text, rat, irr);
    if (rat.denominator() != 1 || irr.denominator() != 1)
        throw ParseError("expected integer coefficients: '" + std::string(text) + "'");
    return {rat.numerator(), irr.numerator()};
}

QuadRat parse_quadrat(std::string_view text) {
    Rational rat, irr;
    parse_two_parts(text, rat, irr);
    return {rat, irr};
}

} // namespace hwlie
