#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quipu/spectral.hpp"
#include "quipu/tree.hpp"

namespace quipu {

enum class SearchScope { FamilyP, FamilyPPrime, FamilyPDoublePrime, AllTrees, AllGraphsSmall };

std::string scope_name(SearchScope s);

// Result of a minimizer search: every argmin within the tie tolerance.
struct MinimizerReport {
    int n = 0;
    int e = 0; // 0 when the search was by diameter only
    int diam = 0;
    SearchScope scope = SearchScope::FamilyP;
    std::vector<KVector> argmin;            // family scopes
    std::vector<std::string> argmin_codes;  // canonical codes (all scopes)
    SpectralResult rho;
    Scalar runner_up_gap;        // lower bound when some members were screened out
    bool gap_exact = true;       // false if the gap is only a certified lower bound
    bool has_runner_up = false;

    std::string to_json(unsigned digits) const;
    static std::string csv_header();
    std::string csv_row(unsigned digits) const;
};

// All k-vectors of the family realizing order n and diameter n-e
// (compositions of n-2e into r parts), mirror-deduplicated for the
// mirror-symmetric families P and P2. Empty when n < 2e.
std::vector<KVector> enumerate_family(int n, int e, FamilyId family);

// Minimal-radius members of the family; ties within tie_tolerance are all
// reported. Members are pre-screened with a one-point sign test of
// phi_kvector_at just above the incumbent minimum, so only genuine
// contenders get a full root solve.
MinimizerReport family_min(int n, int e, FamilyId family, const Scalar& tol);

// The proved argmin patterns for e in {6,7,8} by residue class of n - 2e
// (canonical mirror forms, sorted). Throws for other e or when the residue
// class needs a negative part.
std::vector<KVector> predicted_min(int n, int e);

// Family-P k-vectors passing the structural window around s = (n-2e+2)/(e-4):
// ends in {floor(s)-1, floor(s)}, middles in [floor(s), ceil(s)+1],
// 0 <= middle - end <= 2, middles pairwise within 1, sum = n-2e.
std::vector<KVector> theorem_filter(int n, int e);

// One representative per isomorphism class of free trees on n vertices,
// canonical level-sequence generation with a center-rooted acceptance rule
// (no duplicates, no global dedup table).
void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

// Free trees with the given diameter; n capped (default 18).
std::vector<Tree> enumerate_trees(int n, int diam, int cap = 18);

// Minimizer over all trees of order n with diameter D, or over all connected
// graphs when scope == AllGraphsSmall (cap 10, default 8; determinant-oracle
// charpolys with Sturm-certified radii).
MinimizerReport brute_min(int n, int diam, const Scalar& tol,
                          SearchScope scope = SearchScope::AllTrees, int cap = 18);

// Connected graphs on n vertices up to isomorphism (n <= 10), as adjacency
// matrices; canonical-form growth, one representative per class.
void for_each_connected_graph(int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn);

} // namespace quipu
