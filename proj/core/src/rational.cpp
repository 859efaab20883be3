#include "hwlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace hwlie {

std::string Rational::str() const {
    std::string s = numerator().str();
    if (denominator() != 1) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("bad rational: '" + std::string(text) + "'");
    BigInt n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(neg ? -n : n, d);
}

} // namespace hwlie
