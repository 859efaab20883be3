#include <doctest.h>

#include <random>

#include "hwlie/algebra.hpp"

using namespace hwlie;

using ZAlg = Algebra<Scalar, IntGrade>;
using GAlg = Algebra<QuadRat, QuadInt>;
using ZSym = Symbol<IntGrade>;
using ZElem = Element<Scalar, IntGrade>;

TEST_CASE("virasoro bracket matches the structure constants") {
    ZAlg vir = ZAlg::virasoro();

    // [e_2, e_-2] = -4 e_0 + (2^3-2)/12 c = -4 e_0 + 1/2 c
    ZElem b = vir.bracket(ZSym::e(2), ZSym::e(-2));
    CHECK(b.coeff(ZSym::e(0)) == Scalar(-4));
    CHECK(b.coeff(ZSym::central(1)) == Scalar(Rational(1, 2)));
    CHECK(b.size() == 2);
    CHECK(vir.element_str(b) == "-4*e0 + 1/2*c");

    CHECK(vir.bracket(ZSym::e(1), ZSym::e(1)).is_zero());
    CHECK(vir.bracket(ZSym::e(1), ZSym::e(-1)).coeff(ZSym::e(0)) == Scalar(-2));
    // (1^3-1)/12 = 0: no central part at degree 1.
    CHECK(vir.bracket(ZSym::e(1), ZSym::e(-1)).size() == 1);
    CHECK(vir.bracket(ZSym::central(1), ZSym::e(5)).is_zero());
}

TEST_CASE("heisenberg-virasoro brackets, including the imaginary unit") {
    ZAlg hv = ZAlg::heisenberg_virasoro();

    // [e_1, z_-1] = -z_0 - i c2
    ZElem b = hv.bracket(ZSym::e(1), ZSym::z(-1));
    CHECK(b.coeff(ZSym::z(0)) == Scalar(-1));
    CHECK(b.coeff(ZSym::central(2)) == -Scalar::i());
    CHECK(b.size() == 2);

    // e-e central term follows the second index: [e_2, e_-2] -> (j^3-j)/12 with j = -2.
    ZElem ee = hv.bracket(ZSym::e(2), ZSym::e(-2));
    CHECK(ee.coeff(ZSym::central(1)) == Scalar(Rational(-1, 2)));

    // [z_1, z_-1] = -c3
    ZElem zz = hv.bracket(ZSym::z(1), ZSym::z(-1));
    CHECK(zz.coeff(ZSym::central(3)) == Scalar(-1));
    CHECK(zz.size() == 1);

    // [e_i, z_j] = j z_{i+j} away from i = -j.
    CHECK(hv.bracket(ZSym::e(2), ZSym::z(3)).coeff(ZSym::z(5)) == Scalar(3));
}

TEST_CASE("heisenberg bracket lands on z_0") {
    ZAlg h = ZAlg::heisenberg();
    ZElem b = h.bracket(ZSym::z(1), ZSym::z(-1));
    CHECK(b.coeff(ZSym::z(0)) == Scalar(-1));
    CHECK(b.size() == 1);
    CHECK(h.bracket(ZSym::z(2), ZSym::z(3)).is_zero());
    CHECK_THROWS_AS((void)h.bracket(ZSym::e(1), ZSym::z(1)), SpecMismatch);
}

TEST_CASE("higher rank virasoro bracket over Z + Z*sqrt(2)") {
    GAlg vg = GAlg::higher_rank_virasoro(QuadInt(1, 0), QuadInt(0, 1));

    QuadInt one(1, 0), r2(0, 1);
    auto b = vg.bracket(Symbol<QuadInt>::e(one), Symbol<QuadInt>::e(r2));
    // [e_1, e_r2] = (r2 - 1) e_{1+r2}
    CHECK(b.coeff(Symbol<QuadInt>::e(one + r2)) == QuadRat(Rational(-1), Rational(1)));
    CHECK(b.size() == 1);

    // [e_x, e_-x] at x = 1+r2: central coefficient (x^3-x)/12.
    QuadInt x = one + r2;
    auto bb = vg.bracket(Symbol<QuadInt>::e(x), Symbol<QuadInt>::e(QuadInt(0, 0) - x));
    QuadRat expected = (QuadRat(x * x * x) - QuadRat(x)) * QuadRat(Rational(1, 12));
    CHECK(bb.coeff(Symbol<QuadInt>::central(1)) == expected);

    CHECK_THROWS_AS(GAlg::higher_rank_virasoro(QuadInt(2, 2), QuadInt(1, 1)), ValidationError);
}

TEST_CASE("weights and triangular parts") {
    CHECK(weight_of(ZSym::e(5)) == 5);
    CHECK(weight_of(ZSym::central(2)) == 0);
    CHECK(weight_of(ZSym::z(-3)) == -3);
    CHECK(ZSym::e(-1).part() == TriangularPart::Minus);
    CHECK(ZSym::e(0).part() == TriangularPart::Cartan);
    CHECK(ZSym::z(2).part() == TriangularPart::Plus);
    CHECK(ZSym::central(1).part() == TriangularPart::Cartan);
    CHECK(Symbol<QuadInt>::e(QuadInt(1, -1)).part() == TriangularPart::Minus);
}

TEST_CASE("jacobi probe vanishes on pinned triples") {
    ZAlg vir = ZAlg::virasoro();
    CHECK(jacobi_probe(ZSym::e(1), ZSym::e(2), ZSym::e(-3), vir).is_zero());
    ZAlg hv = ZAlg::heisenberg_virasoro();
    CHECK(jacobi_probe(ZSym::e(1), ZSym::z(1), ZSym::z(-2), hv).is_zero());
    ZAlg h = ZAlg::heisenberg();
    CHECK(jacobi_probe(ZSym::z(1), ZSym::z(2), ZSym::z(-3), h).is_zero());
}

TEST_CASE("antisymmetry, jacobi and grading on random symbols") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> deg(-10, 10);

    ZAlg vir = ZAlg::virasoro();
    ZAlg hv = ZAlg::heisenberg_virasoro();
    ZAlg h = ZAlg::heisenberg();
    GAlg vg = GAlg::higher_rank_virasoro(QuadInt(1, 0), QuadInt(0, 1));

    auto hv_sym = [&](long long d) {
        return (rng() & 1) ? ZSym::e(d) : ZSym::z(d);
    };

    for (int k = 0; k < 300; ++k) {
        long long i = deg(rng), j = deg(rng), l = deg(rng);

        // Virasoro antisymmetry + Jacobi + grading.
        ZElem bij = vir.bracket(ZSym::e(i), ZSym::e(j));
        CHECK(bij == -vir.bracket(ZSym::e(j), ZSym::e(i)));
        CHECK(jacobi_probe(ZSym::e(i), ZSym::e(j), ZSym::e(l), vir).is_zero());
        for (const auto& [s, c] : bij.terms()) {
            (void)c;
            CHECK(weight_of(s) == (s.kind == SymbolKind::Central ? 0 : i + j));
            if (s.kind == SymbolKind::Central) CHECK(i + j == 0);
        }

        // Heisenberg-Virasoro with mixed symbol kinds.
        ZSym a = hv_sym(i), b = hv_sym(j), c = hv_sym(l);
        CHECK(hv.bracket(a, b) == -hv.bracket(b, a));
        CHECK(jacobi_probe(a, b, c, hv).is_zero());

        // Heisenberg.
        CHECK(h.bracket(ZSym::z(i), ZSym::z(j)) == -h.bracket(ZSym::z(j), ZSym::z(i)));
        CHECK(jacobi_probe(ZSym::z(i), ZSym::z(j), ZSym::z(l), h).is_zero());

        // Higher rank: degrees a + b*sqrt(2) in a small box.
        std::uniform_int_distribution<long long> small(-4, 4);
        QuadInt gi(small(rng), small(rng)), gj(small(rng), small(rng)), gl(small(rng), small(rng));
        auto gs = [&](const QuadInt& d) { return Symbol<QuadInt>::e(d); };
        CHECK(vg.bracket(gs(gi), gs(gj)) == -vg.bracket(gs(gj), gs(gi)));
        CHECK(jacobi_probe(gs(gi), gs(gj), gs(gl), vg).is_zero());
    }
}

TEST_CASE("finite-dimensional tables validate and bracket") {
    ZAlg sl2 = ZAlg::finite_dim(sl2_table());
    ZSym f = sl2.parse_symbol("f"), hh = sl2.parse_symbol("h"), e = sl2.parse_symbol("e");
    CHECK(sl2.bracket(hh, e).coeff(e) == Scalar(2));
    CHECK(sl2.bracket(e, f).coeff(hh) == Scalar(1));
    CHECK(sl2.bracket(f, hh).coeff(f) == Scalar(2));
    CHECK(jacobi_probe(f, hh, e, sl2).is_zero());

    ZAlg sl3 = ZAlg::finite_dim(sl3_table());
    auto e1 = sl3.parse_symbol("e1"), e2 = sl3.parse_symbol("e2"), e12 = sl3.parse_symbol("e12");
    CHECK(sl3.bracket(e1, e2).coeff(e12) == Scalar(1));
    CHECK(sl3.bracket(e1, e12).is_zero());
    auto f1 = sl3.parse_symbol("f1"), h1 = sl3.parse_symbol("h1");
    CHECK(sl3.bracket(e1, f1).coeff(h1) == Scalar(1));

    // A table violating Jacobi is rejected.
    FdTable bad = sl2_table();
    bad.brackets[{0, 1}] = {{0, Scalar(3)}};
    CHECK_THROWS_AS(ZAlg::finite_dim(bad), ValidationError);
}

TEST_CASE("symbol parsing and printing") {
    ZAlg vir = ZAlg::virasoro();
    CHECK(vir.parse_symbol("e-2") == ZSym::e(-2));
    CHECK(vir.parse_symbol("c") == ZSym::central(1));
    CHECK(vir.symbol_str(ZSym::e(-2)) == "e-2");
    CHECK_THROWS_AS((void)vir.parse_symbol("z1"), SpecMismatch);
    CHECK_THROWS_AS((void)vir.parse_symbol("q5"), ParseError);

    ZAlg hv = ZAlg::heisenberg_virasoro();
    CHECK(hv.parse_symbol("c2") == ZSym::central(2));
    CHECK(hv.symbol_str(ZSym::central(3)) == "c3");
    CHECK_THROWS_AS((void)hv.parse_symbol("c9"), ParseError);

    GAlg vg = GAlg::higher_rank_virasoro(QuadInt(1, 0), QuadInt(0, 1));
    CHECK(vg.parse_symbol("e(-3,2)") == Symbol<QuadInt>::e(QuadInt(-3, 2)));
    CHECK(vg.symbol_str(Symbol<QuadInt>::e(QuadInt(-3, 2))) == "e(-3,2)");

    // Membership in a proper subgroup is enforced.
    GAlg sub = GAlg::higher_rank_virasoro(QuadInt(2, 0), QuadInt(0, 1));
    CHECK_THROWS_AS((void)sub.parse_symbol("e(1,0)"), SpecMismatch);
    CHECK(sub.parse_symbol("e(4,3)") == Symbol<QuadInt>::e(QuadInt(4, 3)));
}

TEST_CASE("element arithmetic prunes zeros") {
    ZAlg vir = ZAlg::virasoro();
    ZElem a(ZSym::e(1)), b(ZSym::e(1), Scalar(-1));
    CHECK((a + b).is_zero());
    ZElem sum = a + a;
    CHECK(sum.coeff(ZSym::e(1)) == Scalar(2));
    CHECK(bracket(sum, ZElem(ZSym::e(-1)), vir).coeff(ZSym::e(0)) == Scalar(-4));
}
