#include "hwlie/scalar.hpp"

#include <ostream>

namespace hwlie {

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.abs().str() + "*i";
    if (re_.is_zero()) return im_.sign() < 0 ? "-" + imag : imag;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar parse_scalar(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text == "i") return Scalar::i();
    if (text == "-i") return -Scalar::i();

    // Split at the last '+' or '-' that is not the leading sign.
    size_t split = std::string_view::npos;
    for (size_t k = 1; k < text.size(); ++k)
        if (text[k] == '+' || text[k] == '-') split = k;

    auto parse_part = [](std::string_view part) -> Scalar {
        if (part == "i" || part == "+i") return Scalar::i();
        if (part == "-i") return -Scalar::i();
        if (part.size() >= 2 && part.substr(part.size() - 2) == "*i")
            return Scalar(Rational(0), parse_rational(part.substr(0, part.size() - 2)));
        return Scalar(parse_rational(part));
    };

    if (split == std::string_view::npos) return parse_part(text);

    Scalar head = parse_part(text.substr(0, split));
    // Keep the sign with the tail part.
    Scalar tail = parse_part(text.substr(split));
    Scalar sum = head + tail;
    // Reject forms like "1+2" or "i+i" that the printer never produces.
    if (!head.im().is_zero() || tail.im().is_zero())
        throw ParseError("bad scalar: '" + std::string(text) + "'");
    return sum;
}

} // namespace hwlie
