#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hwlie/element.hpp"
#include "hwlie/scalar.hpp"

namespace hwlie {

/// Structure constants of a finite-dimensional Lie algebra together with a
/// triangular decomposition and a filtration of n_+.
///
/// Brackets are stored for id pairs i < j only; [x_i, x_i] = 0 and the rest
/// follows by antisymmetry.  `plus_filtration` lists the ids of a basis
/// X_1..X_d of n_+ such that every suffix span(X_{k+1},..,X_d) is an ideal
/// of the previous one of codimension 1, stable under the Cartan action;
/// this is the chain the finite-dimensional extraction walks.
struct FdTable {
    std::vector<std::string> names;
    std::vector<IntGrade> degrees;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets;
    std::vector<int> plus_filtration;

    [[nodiscard]] int dim() const { return static_cast<int>(names.size()); }
};

/// sl2 in the basis f, h, e with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
FdTable sl2_table();

/// sl3 in the Chevalley-style basis built from 3x3 matrix units:
/// f1, f2, f12, h1, h2, e1, e2, e12 with degrees -1, -1, -2, 0, 0, 1, 1, 2.
FdTable sl3_table();

} // namespace hwlie
