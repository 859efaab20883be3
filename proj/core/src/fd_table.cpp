#include "hwlie/fd_table.hpp"

#include <array>

namespace hwlie {

FdTable sl2_table() {
    FdTable t;
    t.names = {"f", "h", "e"};
    t.degrees = {-1, 0, 1};
    // ids: f=0, h=1, e=2
    t.brackets[{0, 1}] = {{0, Scalar(2)}};   // [f,h] = 2f
    t.brackets[{0, 2}] = {{1, Scalar(-1)}};  // [f,e] = -h
    t.brackets[{1, 2}] = {{2, Scalar(2)}};   // [h,e] = 2e
    t.plus_filtration = {2};
    return t;
}

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 unit(int r, int c) {
    Mat3 m{};
    m[r][c] = Rational(1);
    return m;
}

Mat3 sub(const Mat3& a, const Mat3& b) {
    Mat3 m{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = a[r][c] - b[r][c];
    return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 m{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Rational s;
            for (int k = 0; k < 3; ++k) s += a[r][k] * b[k][c];
            m[r][c] = s;
        }
    return m;
}

} // namespace

FdTable sl3_table() {
    FdTable t;
    t.names = {"f1", "f2", "f12", "h1", "h2", "e1", "e2", "e12"};
    t.degrees = {-1, -1, -2, 0, 0, 1, 1, 2};

    std::vector<Mat3> basis = {
        unit(1, 0),                      // f1  = E21
        unit(2, 1),                      // f2  = E32
        unit(2, 0),                      // f12 = E31
        sub(unit(0, 0), unit(1, 1)),     // h1  = E11 - E22
        sub(unit(1, 1), unit(2, 2)),     // h2  = E22 - E33
        unit(0, 1),                      // e1  = E12
        unit(1, 2),                      // e2  = E23
        unit(0, 2),                      // e12 = E13
    };

    // Traceless 3x3 commutators decompose against the basis by reading off
    // the four independent off-diagonal entries and the two diagonal gaps.
    auto decompose = [&](const Mat3& m) {
        std::vector<std::pair<int, Scalar>> out;
        auto push = [&](int id, const Rational& c) {
            if (!c.is_zero()) out.emplace_back(id, Scalar(c));
        };
        push(0, m[1][0]);
        push(1, m[2][1]);
        push(2, m[2][0]);
        push(3, m[0][0]);
        push(4, m[0][0] + m[1][1]);      // diag = a*h1 + b*h2 with a = m00, b = m00 + m11
        push(5, m[0][1]);
        push(6, m[1][2]);
        push(7, m[0][2]);
        return out;
    };

    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            Mat3 comm = sub(mul(basis[i], basis[j]), mul(basis[j], basis[i]));
            auto parts = decompose(comm);
            if (!parts.empty()) t.brackets[{i, j}] = std::move(parts);
        }

    // n_+ = <e1, e2, e12>; dropping e1 and then e2 walks down the chain.
    t.plus_filtration = {5, 6, 7};
    return t;
}

} // namespace hwlie
