#pragma once

#include <vector>

#include "quipu/intpoly.hpp"
#include "quipu/tree.hpp"

namespace quipu {

// Exact characteristic polynomial det(xI - A(t)) via the cut-edge deletion
// recurrence, memoized over rooted subtree shapes.
IntPolynomial charpoly_tree(const Tree& t);

// phi of the forest t - v (product over components).
IntPolynomial charpoly_without(const Tree& t, int v);

// Independent oracle: det(xI - A) by Bareiss elimination at n+1 integer
// points plus exact rational interpolation. Capped at n <= 64.
IntPolynomial charpoly_det_oracle(const Tree& t);

// Same determinant path for an arbitrary symmetric 0/1 adjacency matrix.
IntPolynomial charpoly_det_adj(const std::vector<std::vector<int>>& adj);

// Horner evaluation at the working precision.
Scalar eval_poly(const IntPolynomial& poly, const Scalar& lambda);

} // namespace quipu
