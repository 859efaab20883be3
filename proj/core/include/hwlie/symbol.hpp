#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hwlie/traits.hpp"

namespace hwlie {

enum class SymbolKind : std::uint8_t {
    E,        // Virasoro-type generator e_k
    Z,        // Heisenberg-type generator z_k
    Central,  // numbered central element c, c1..c3 (degree 0)
    Fd,       // basis vector of a finite-dimensional algebra, named in its table
};

enum class TriangularPart : std::uint8_t { Minus, Cartan, Plus };

namespace detail {
inline int kind_rank(SymbolKind k) {
    switch (k) {
        case SymbolKind::E: return 0;
        case SymbolKind::Fd: return 0;
        case SymbolKind::Z: return 1;
        case SymbolKind::Central: return 2;
    }
    return 3;
}
} // namespace detail

/// One basis symbol of a Lie algebra: (kind, degree) plus a small index that
/// numbers centrals (1..3) or points into a finite-dimensional basis table.
///
/// operator< is the normal-ordering total order: lowering block first
/// (degree ascending, most negative leftmost), then the Cartan block with
/// e_0/z_0 before the centrals, then the raising block (degree ascending).
/// At equal degree, e-symbols precede z-symbols.
template <class G>
struct Symbol {
    SymbolKind kind{SymbolKind::E};
    G degree{};
    int aux{0};

    static Symbol e(G deg) { return {SymbolKind::E, std::move(deg), 0}; }
    static Symbol z(G deg) { return {SymbolKind::Z, std::move(deg), 0}; }
    static Symbol central(int index) { return {SymbolKind::Central, G{}, index}; }
    static Symbol fd(int id, G deg) { return {SymbolKind::Fd, std::move(deg), id}; }

    [[nodiscard]] TriangularPart part() const {
        int sg = GradeTraits<G>::sign(degree);
        if (sg < 0) return TriangularPart::Minus;
        if (sg > 0) return TriangularPart::Plus;
        return TriangularPart::Cartan;
    }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        auto pa = static_cast<int>(a.part());
        auto pb = static_cast<int>(b.part());
        if (pa != pb) return pa <=> pb;
        if (a.degree != b.degree) {
            int s = GradeTraits<G>::sign(a.degree - b.degree);
            return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (int ra = detail::kind_rank(a.kind), rb = detail::kind_rank(b.kind); ra != rb)
            return ra <=> rb;
        return a.aux <=> b.aux;
    }
};

/// Weight contributed by a symbol: its degree (0 for centrals by invariant).
template <class G>
const G& weight_of(const Symbol<G>& s) {
    return s.degree;
}

/// Printing order for elements: by (kind, degree, index).
template <class G>
bool element_print_less(const Symbol<G>& a, const Symbol<G>& b) {
    if (int ra = detail::kind_rank(a.kind), rb = detail::kind_rank(b.kind); ra != rb) return ra < rb;
    if (a.degree != b.degree) return GradeTraits<G>::sign(a.degree - b.degree) < 0;
    return a.aux < b.aux;
}

} // namespace hwlie
