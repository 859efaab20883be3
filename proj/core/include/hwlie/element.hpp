#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hwlie/symbol.hpp"

namespace hwlie {

/// Sparse exact linear combination of basis symbols of one algebra.
/// Zero coefficients are never stored.
template <class K, class G>
class Element {
public:
    using Term = std::pair<const Symbol<G>, K>;

    Element() = default;
    explicit Element(const Symbol<G>& s, K coeff = CoeffTraits<K, G>::from_int(1)) {
        add(s, coeff);
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const std::map<Symbol<G>, K>& terms() const { return terms_; }

    void add(const Symbol<G>& s, const K& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(s, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [s, c] : o.terms_) add(s, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const {
        Element r;
        for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
        return r;
    }
    Element scaled(const K& k) const {
        Element r;
        if (k.is_zero()) return r;
        for (const auto& [s, c] : terms_) r.terms_.emplace(s, c * k);
        return r;
    }

    /// Coefficient of a symbol (zero if absent).
    [[nodiscard]] K coeff(const Symbol<G>& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? K{} : it->second;
    }

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::map<Symbol<G>, K> terms_;
};

} // namespace hwlie
