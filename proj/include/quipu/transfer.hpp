#pragma once

#include <array>
#include <vector>

#include "quipu/charpoly.hpp"
#include "quipu/scalar.hpp"
#include "quipu/tree.hpp"

namespace quipu {

// Scalar context at a fixed lambda > 2: x1 < 1 < x2 are the roots of
// x^2 - lambda*x + 1 = 0, and d1 = lambda - x1^3, d2 = x2^3 - lambda.
struct TransferParams {
    Scalar lambda;
    Scalar x1, x2;
    Scalar d1, d2;
};

// Throws std::domain_error for lambda <= 2 (x1, x2 would be complex).
TransferParams make_params(const Scalar& lambda);

// Values (p, q) of the pair decomposition phi_G = p + q,
// phi_{G-v} = x2*p + x1*q at the context lambda.
struct PQPair {
    Scalar p, q;
    TransferParams ctx;

    Scalar phi() const { return p + q; }         // phi_G(lambda)
    Scalar phi_minus_root() const;                // phi_{G-v}(lambda)
};

// Path-extension steps: each adds one main-path vertex that becomes the new
// root and carries a pendant path of 0 (A), 1 (B) or 2 (C) extra vertices.
enum class Step { A, B, C };

// The 2x2 step matrix, row-major.
std::array<Scalar, 4> step_matrix(Step s, const TransferParams& ctx);

PQPair pq_single_vertex(const TransferParams& ctx); // (P1, its vertex)
PQPair pq_p5_center(const TransferParams& ctx);     // (P5, center) = C(A(P1))

PQPair apply_step(const PQPair& pq, Step s);
PQPair apply_path(const PQPair& pq, long k); // A^k, k >= 0

// (p, q) of an explicit rooted tree, from exact charpolys.
PQPair pq_of_rooted(const Tree& t, int v, const Scalar& lambda);

// phi of the tree formed by joining two rooted graphs through one middle
// vertex: (x2 - x1) * (qL*qR - pL*pR).
Scalar phi_join(const PQPair& left, const PQPair& right);

// phi(G_{i,j}) - phi(G_{i+1,j-1}) where the roots are linked by a path with a
// pendant vertex in the middle, i and j counting the included path vertices:
// (x1 - x2) * (pL*qR*x2^(j-i-1) - qL*pR*x1^(j-i-1)).
Scalar shift_difference(const PQPair& left, const PQPair& right, long i, long j);

// phi of the family tree at lambda via the step product along the main path;
// agrees with eval_poly(charpoly_tree(from_kvector(kv)), lambda).
Scalar phi_kvector_at(const KVector& kv, const Scalar& lambda);
Scalar phi_kvector_at(const KVector& kv, const TransferParams& ctx);

// Prefix subtrees L_0..L_{r-1} of a family-P tree, rooted at the branch
// vertices v_0..v_{r-1} (L_0 is P5 rooted at its center), and suffix
// subtrees R_2..R_{r+1} from the right. Used by the positivity scans.
std::vector<PQPair> family_prefix_pairs(const KVector& kv, const TransferParams& ctx);
std::vector<PQPair> family_suffix_pairs(const KVector& kv, const TransferParams& ctx);

} // namespace quipu
