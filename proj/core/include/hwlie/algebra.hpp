#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "hwlie/element.hpp"
#include "hwlie/errors.hpp"
#include "hwlie/fd_table.hpp"
#include "hwlie/symbol.hpp"

namespace hwlie {

enum class AlgebraTag : std::uint8_t {
    Virasoro,
    HeisenbergVirasoro,
    Heisenberg,
    HigherRankVirasoro,
    FiniteDim,
};

/// A supported Lie algebra: basis symbols, grading, triangular decomposition
/// and the exact bracket on basis symbols.  Immutable and cheap to copy.
///
/// Central extension conventions, per algebra:
///   Virasoro / higher rank:  [e_i,e_j] = (j-i) e_{i+j} + d_{i,-j} (i^3-i)/12 c
///   Heisenberg-Virasoro:     [e_i,e_j] = (j-i) e_{i+j} + d_{i,-j} (j^3-j)/12 c1
///                            [e_i,z_j] = j z_{i+j} - i j^2 d_{i,-j} c2   (i = imaginary unit)
///                            [z_i,z_j] = j d_{i,-j} c3
///   Heisenberg:              [z_i,z_j] = j d_{i,-j} z_0
/// The two cubic conventions differ by the sign of the central charge; each
/// algebra follows its own convention verbatim and they are never mixed.
template <class K, class G>
class Algebra {
public:
    using Sym = Symbol<G>;
    using Elem = Element<K, G>;
    using CT = CoeffTraits<K, G>;

    static Algebra virasoro() {
        static_assert(std::is_same_v<G, IntGrade>, "virasoro is integer-graded");
        return Algebra(AlgebraTag::Virasoro);
    }
    static Algebra heisenberg_virasoro() {
        static_assert(std::is_same_v<K, Scalar>, "heisenberg-virasoro needs the imaginary unit");
        return Algebra(AlgebraTag::HeisenbergVirasoro);
    }
    static Algebra heisenberg() {
        static_assert(std::is_same_v<G, IntGrade>, "heisenberg is integer-graded");
        return Algebra(AlgebraTag::Heisenberg);
    }
    /// Higher rank Virasoro over the group generated by g1, g2 (default
    /// callers use 1 and sqrt(2)).  The generators must be Z-independent.
    static Algebra higher_rank_virasoro(const G& g1, const G& g2) {
        static_assert(std::is_same_v<G, QuadInt>, "higher rank degrees live in Z + Z*sqrt(2)");
        Algebra a(AlgebraTag::HigherRankVirasoro);
        a.gen1_ = g1;
        a.gen2_ = g2;
        if (a.group_det() == 0)
            throw ValidationError("group generators are not Z-independent: " +
                                  GradeTraits<G>::str(g1) + ", " + GradeTraits<G>::str(g2));
        return a;
    }
    static Algebra finite_dim(FdTable table) {
        static_assert(std::is_same_v<K, Scalar> && std::is_same_v<G, IntGrade>,
                      "finite-dimensional tables are rational and integer-graded");
        Algebra a(AlgebraTag::FiniteDim);
        a.table_ = std::make_shared<const FdTable>(std::move(table));
        a.validate_table();
        return a;
    }

    [[nodiscard]] AlgebraTag tag() const { return tag_; }
    [[nodiscard]] const FdTable& table() const { return *table_; }
    [[nodiscard]] std::string name() const {
        switch (tag_) {
            case AlgebraTag::Virasoro: return "virasoro";
            case AlgebraTag::HeisenbergVirasoro: return "heisenberg-virasoro";
            case AlgebraTag::Heisenberg: return "heisenberg";
            case AlgebraTag::HigherRankVirasoro: return "higher-rank-virasoro";
            case AlgebraTag::FiniteDim: return "finite-dim";
        }
        return "?";
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        if (a.tag_ != b.tag_) return false;
        if (a.tag_ == AlgebraTag::HigherRankVirasoro)
            return a.gen1_ == b.gen1_ && a.gen2_ == b.gen2_;
        if (a.tag_ == AlgebraTag::FiniteDim)
            return a.table_ == b.table_ ||
                   (a.table_->names == b.table_->names && a.table_->brackets == b.table_->brackets);
        return true;
    }

    [[nodiscard]] int central_count() const {
        switch (tag_) {
            case AlgebraTag::Virasoro:
            case AlgebraTag::HigherRankVirasoro: return 1;
            case AlgebraTag::HeisenbergVirasoro: return 3;
            default: return 0;
        }
    }

    [[nodiscard]] bool valid_symbol(const Sym& s) const {
        switch (s.kind) {
            case SymbolKind::E:
                if (tag_ != AlgebraTag::Virasoro && tag_ != AlgebraTag::HeisenbergVirasoro &&
                    tag_ != AlgebraTag::HigherRankVirasoro)
                    return false;
                return tag_ != AlgebraTag::HigherRankVirasoro || in_group(s.degree);
            case SymbolKind::Z:
                return tag_ == AlgebraTag::HeisenbergVirasoro || tag_ == AlgebraTag::Heisenberg;
            case SymbolKind::Central:
                return s.aux >= 1 && s.aux <= central_count() && s.degree == G{};
            case SymbolKind::Fd:
                return tag_ == AlgebraTag::FiniteDim && s.aux >= 0 && s.aux < table_->dim() &&
                       s.degree == fd_degree(s.aux);
        }
        return false;
    }

    void require_symbol(const Sym& s) const {
        if (!valid_symbol(s))
            throw SpecMismatch("symbol " + symbol_str(s) + " does not belong to " + name());
    }

    /// Exact bracket of two basis symbols.
    [[nodiscard]] Elem bracket(const Sym& x, const Sym& y) const {
        require_symbol(x);
        require_symbol(y);
        if (x == y) return {};
        if (x.kind == SymbolKind::Central || y.kind == SymbolKind::Central) return {};

        Elem out;
        if (tag_ == AlgebraTag::FiniteDim) {
            if constexpr (std::is_same_v<K, Scalar> && std::is_same_v<G, IntGrade>) {
                int i = x.aux, j = y.aux;
                bool flip = i > j;
                auto it = table_->brackets.find({std::min(i, j), std::max(i, j)});
                if (it != table_->brackets.end())
                    for (const auto& [id, c] : it->second)
                        out.add(Sym::fd(id, fd_degree(id)), flip ? -c : c);
            }
            return out;
        }

        const G& i = x.degree;
        const G& j = y.degree;
        bool opposite = (i + j) == G{};

        if (x.kind == SymbolKind::E && y.kind == SymbolKind::E) {
            out.add(Sym::e(i + j), CT::from_grade(j - i));
            if (opposite) {
                K coeff = tag_ == AlgebraTag::HeisenbergVirasoro ? CT::central_coeff(j)
                                                                 : CT::central_coeff(i);
                out.add(Sym::central(1), coeff);
            }
        } else if (x.kind == SymbolKind::E && y.kind == SymbolKind::Z) {
            out += e_z_bracket(i, j);
        } else if (x.kind == SymbolKind::Z && y.kind == SymbolKind::E) {
            out -= e_z_bracket(j, i);
        } else {  // Z, Z
            if (opposite) {
                K coeff = CT::from_grade(j);
                if (tag_ == AlgebraTag::Heisenberg)
                    out.add(Sym::z(G{}), coeff);
                else
                    out.add(Sym::central(3), coeff);
            }
        }
        return out;
    }

    /// All degree-0 basis symbols: e_0/z_0 first, then the centrals.
    [[nodiscard]] std::vector<Sym> cartan_basis() const {
        std::vector<Sym> out;
        switch (tag_) {
            case AlgebraTag::Virasoro:
            case AlgebraTag::HigherRankVirasoro:
                out = {Sym::e(G{}), Sym::central(1)};
                break;
            case AlgebraTag::HeisenbergVirasoro:
                out = {Sym::e(G{}), Sym::z(G{}), Sym::central(1), Sym::central(2), Sym::central(3)};
                break;
            case AlgebraTag::Heisenberg:
                out = {Sym::z(G{})};
                break;
            case AlgebraTag::FiniteDim:
                for (int id = 0; id < table_->dim(); ++id)
                    if (table_->degrees[id] == 0) out.push_back(Sym::fd(id, 0));
                break;
        }
        return out;
    }

    /// Raising generators with degree <= bound (integer-graded algebras and
    /// finite-dimensional tables; higher rank callers build their own sets).
    [[nodiscard]] std::vector<Sym> positive_generators(long long bound) const {
        std::vector<Sym> out;
        if constexpr (std::is_same_v<G, IntGrade>) {
            switch (tag_) {
                case AlgebraTag::Virasoro:
                    for (IntGrade d = 1; d <= bound; ++d) out.push_back(Sym::e(d));
                    break;
                case AlgebraTag::HeisenbergVirasoro:
                    for (IntGrade d = 1; d <= bound; ++d) {
                        out.push_back(Sym::e(d));
                        out.push_back(Sym::z(d));
                    }
                    break;
                case AlgebraTag::Heisenberg:
                    for (IntGrade d = 1; d <= bound; ++d) out.push_back(Sym::z(d));
                    break;
                case AlgebraTag::FiniteDim:
                    for (int id = 0; id < table_->dim(); ++id)
                        if (table_->degrees[id] > 0 && table_->degrees[id] <= bound)
                            out.push_back(Sym::fd(id, table_->degrees[id]));
                    break;
                default: break;
            }
        } else {
            throw DomainError("positive_generators by integer bound needs an integer grading");
        }
        return out;
    }

    /// The transpose of a symbol under the contravariant involution:
    /// e_i <-> e_{-i}, z_i <-> z_{-i}, centrals fixed.
    [[nodiscard]] Sym transpose(const Sym& s) const {
        require_symbol(s);
        if (s.kind == SymbolKind::Central) return s;
        if (s.kind == SymbolKind::Fd)
            throw DomainError("no transpose convention for finite-dim tables");
        Sym t = s;
        t.degree = G{} - s.degree;
        return t;
    }

    [[nodiscard]] bool in_group(const G& degree) const {
        if (tag_ != AlgebraTag::HigherRankVirasoro) return true;
        if constexpr (std::is_same_v<G, QuadInt>) {
            // Solve m*gen1 + n*gen2 = degree over the integers.
            BigInt a1 = gen1_.rat_part(), b1 = gen1_.irr_part();
            BigInt a2 = gen2_.rat_part(), b2 = gen2_.irr_part();
            BigInt det = group_det();
            BigInt mn = degree.rat_part() * b2 - a2 * degree.irr_part();
            BigInt nn = a1 * degree.irr_part() - degree.rat_part() * b1;
            return mn % det == 0 && nn % det == 0;
        }
        return true;
    }

    [[nodiscard]] std::string symbol_str(const Sym& s) const {
        switch (s.kind) {
            case SymbolKind::E:
            case SymbolKind::Z: {
                char head = s.kind == SymbolKind::E ? 'e' : 'z';
                if constexpr (std::is_same_v<G, QuadInt>) {
                    return head + ("(" + s.degree.rat_part().str() + "," +
                                   s.degree.irr_part().str() + ")");
                } else {
                    return head + std::to_string(s.degree);
                }
            }
            case SymbolKind::Central:
                return central_count() == 1 ? "c" : "c" + std::to_string(s.aux);
            case SymbolKind::Fd:
                return table_->names[static_cast<size_t>(s.aux)];
        }
        return "?";
    }

    [[nodiscard]] Sym parse_symbol(std::string_view text) const;

    [[nodiscard]] std::string element_str(const Elem& el) const;

private:
    explicit Algebra(AlgebraTag t) : tag_(t) {}

    [[nodiscard]] IntGrade fd_degree(int id) const { return table_->degrees[static_cast<size_t>(id)]; }

    [[nodiscard]] BigInt group_det() const {
        if constexpr (std::is_same_v<G, QuadInt>)
            return gen1_.rat_part() * gen2_.irr_part() - gen2_.rat_part() * gen1_.irr_part();
        else
            return 1;
    }

    // [e_i, z_j] = j z_{i+j} - i j^2 d_{i,-j} c2 (heisenberg-virasoro only).
    [[nodiscard]] Elem e_z_bracket(const G& i, const G& j) const {
        if (tag_ != AlgebraTag::HeisenbergVirasoro)
            throw SpecMismatch("mixed e/z bracket outside heisenberg-virasoro");
        Elem out;
        out.add(Sym::z(i + j), CT::from_grade(j));
        if constexpr (std::is_same_v<K, Scalar>) {
            if ((i + j) == G{}) {
                K jj = CT::from_grade(j);
                out.add(Sym::central(2), -(Scalar::i() * jj * jj));
            }
        }
        return out;
    }

    void validate_table() const;

    AlgebraTag tag_;
    G gen1_{};
    G gen2_{};
    std::shared_ptr<const FdTable> table_;
};

/// Bilinear extension of the bracket to sparse elements.
template <class K, class G>
Element<K, G> bracket(const Element<K, G>& x, const Element<K, G>& y, const Algebra<K, G>& alg) {
    Element<K, G> out;
    for (const auto& [sx, cx] : x.terms())
        for (const auto& [sy, cy] : y.terms()) out += alg.bracket(sx, sy).scaled(cx * cy);
    return out;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero for a genuine Lie
/// algebra, exposed as a validation probe.
template <class K, class G>
Element<K, G> jacobi_probe(const Symbol<G>& x, const Symbol<G>& y, const Symbol<G>& z,
                           const Algebra<K, G>& alg) {
    Element<K, G> ex(x), ey(y), ez(z);
    Element<K, G> out = bracket(ex, bracket(ey, ez, alg), alg);
    out += bracket(ey, bracket(ez, ex, alg), alg);
    out += bracket(ez, bracket(ex, ey, alg), alg);
    return out;
}

template <class K, class G>
auto Algebra<K, G>::parse_symbol(std::string_view text) const -> Sym {
    if (text.empty()) throw ParseError("empty symbol");

    if (tag_ == AlgebraTag::FiniteDim) {
        for (int id = 0; id < table_->dim(); ++id)
            if (table_->names[static_cast<size_t>(id)] == text) return Sym::fd(id, fd_degree(id));
        throw ParseError("unknown basis name '" + std::string(text) + "' in " + name());
    }

    if (text == "c" && central_count() == 1) return Sym::central(1);
    if (text.size() == 2 && text[0] == 'c' && text[1] >= '1' && text[1] <= '3' &&
        central_count() == 3)
        return Sym::central(text[1] - '0');

    char head = text[0];
    if (head != 'e' && head != 'z')
        throw ParseError("bad symbol '" + std::string(text) + "'");
    std::string_view rest = text.substr(1);
    Sym s;
    if (!rest.empty() && rest.front() == '(') {
        if constexpr (std::is_same_v<G, QuadInt>) {
            if (rest.back() != ')') throw ParseError("bad degree in '" + std::string(text) + "'");
            std::string_view inner = rest.substr(1, rest.size() - 2);
            auto comma = inner.find(',');
            if (comma == std::string_view::npos)
                throw ParseError("bad degree in '" + std::string(text) + "'");
            Rational a = parse_rational(inner.substr(0, comma));
            Rational b = parse_rational(inner.substr(comma + 1));
            if (a.denominator() != 1 || b.denominator() != 1)
                throw ParseError("degree coefficients must be integers in '" + std::string(text) + "'");
            s = {head == 'e' ? SymbolKind::E : SymbolKind::Z, QuadInt(a.numerator(), b.numerator()), 0};
        } else {
            throw ParseError("degree pairs need a higher rank algebra: '" + std::string(text) + "'");
        }
    } else {
        if constexpr (std::is_same_v<G, IntGrade>) {
            Rational r = parse_rational(rest);
            if (r.denominator() != 1 || r.numerator() > std::numeric_limits<long long>::max() ||
                r.numerator() < std::numeric_limits<long long>::min())
                throw ParseError("bad integer degree in '" + std::string(text) + "'");
            s = {head == 'e' ? SymbolKind::E : SymbolKind::Z,
                 static_cast<IntGrade>(r.numerator()), 0};
        } else {
            Rational r = parse_rational(rest);
            if (r.denominator() != 1)
                throw ParseError("bad integer degree in '" + std::string(text) + "'");
            s = {head == 'e' ? SymbolKind::E : SymbolKind::Z, QuadInt(r.numerator(), 0), 0};
        }
    }
    require_symbol(s);
    return s;
}

template <class K, class G>
std::string Algebra<K, G>::element_str(const Elem& el) const {
    if (el.is_zero()) return "0";
    std::vector<std::pair<Sym, K>> terms(el.terms().begin(), el.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return element_print_less<G>(a.first, b.first); });
    std::string out;
    for (const auto& [s, c] : terms) {
        auto [body, neg] = term_format(c);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        out += "*" + symbol_str(s);
    }
    return out;
}

template <class K, class G>
void Algebra<K, G>::validate_table() const {
    const FdTable& t = *table_;
    if (t.names.size() != t.degrees.size())
        throw ValidationError("table names/degrees size mismatch");
    for (const auto& [key, _] : t.brackets)
        if (key.first < 0 || key.second >= t.dim() || key.first >= key.second)
            throw ValidationError("bracket table keys must satisfy 0 <= i < j < dim");

    auto sym = [&](int id) { return Sym::fd(id, t.degrees[static_cast<size_t>(id)]); };

    // Grading of the table itself.
    for (const auto& [key, terms] : t.brackets)
        for (const auto& [id, coeff] : terms) {
            (void)coeff;
            if (t.degrees[static_cast<size_t>(id)] !=
                t.degrees[static_cast<size_t>(key.first)] + t.degrees[static_cast<size_t>(key.second)])
                throw ValidationError("bracket table violates the grading");
        }

    // Jacobi on all basis triples.
    for (int i = 0; i < t.dim(); ++i)
        for (int j = i + 1; j < t.dim(); ++j)
            for (int k = j + 1; k < t.dim(); ++k)
                if (!jacobi_probe(sym(i), sym(j), sym(k), *this).is_zero())
                    throw ValidationError("bracket table violates the Jacobi identity at (" +
                                          t.names[i] + "," + t.names[j] + "," + t.names[k] + ")");

    // Filtration: covers n_+, suffix spans are ideals, Cartan-stable lines.
    std::set<int> plus_ids;
    for (int id = 0; id < t.dim(); ++id)
        if (t.degrees[static_cast<size_t>(id)] > 0) plus_ids.insert(id);
    if (std::set<int>(t.plus_filtration.begin(), t.plus_filtration.end()) != plus_ids ||
        t.plus_filtration.size() != plus_ids.size())
        throw ValidationError("plus filtration must list each raising basis vector once");

    auto in_suffix = [&](const Elem& el, size_t from) {
        std::set<int> allowed(t.plus_filtration.begin() + static_cast<long>(from),
                              t.plus_filtration.end());
        for (const auto& [s, c] : el.terms()) {
            (void)c;
            if (!allowed.count(s.aux)) return false;
        }
        return true;
    };
    for (size_t a = 0; a < t.plus_filtration.size(); ++a) {
        for (size_t b = a + 1; b < t.plus_filtration.size(); ++b) {
            Elem br = bracket(sym(t.plus_filtration[a]), sym(t.plus_filtration[b]));
            if (!in_suffix(br, a + 1))
                throw ValidationError("filtration suffixes are not ideals");
        }
        for (const Sym& h : cartan_basis()) {
            Elem br = bracket(h, sym(t.plus_filtration[a]));
            for (const auto& [s, c] : br.terms()) {
                (void)c;
                if (s.aux != t.plus_filtration[a])
                    throw ValidationError("filtration line not stable under the Cartan action");
            }
        }
    }
}

} // namespace hwlie
