#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "hwlie/symbol.hpp"

namespace hwlie {

/// Product of generators in the enveloping algebra, leftmost factor applied
/// last: the word (x, y) acts on a vector v as x(y(v)).
template <class G>
struct Word {
    std::vector<Symbol<G>> factors;

    Word() = default;
    Word(std::initializer_list<Symbol<G>> syms) : factors(syms) {}
    explicit Word(std::vector<Symbol<G>> syms) : factors(std::move(syms)) {}

    [[nodiscard]] bool empty() const { return factors.empty(); }
    [[nodiscard]] std::size_t size() const { return factors.size(); }

    [[nodiscard]] G weight() const {
        G w{};
        for (const auto& s : factors) w = w + s.degree;
        return w;
    }

    /// Number of adjacent transpositions away from normal order.
    [[nodiscard]] std::size_t inversions() const {
        std::size_t n = 0;
        for (std::size_t a = 0; a < factors.size(); ++a)
            for (std::size_t b = a + 1; b < factors.size(); ++b)
                if (factors[a] > factors[b]) ++n;
        return n;
    }

    [[nodiscard]] bool sorted() const {
        for (std::size_t k = 0; k + 1 < factors.size(); ++k)
            if (factors[k] > factors[k + 1]) return false;
        return true;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(),
                                                      b.factors.begin(), b.factors.end());
    }
};

} // namespace hwlie
