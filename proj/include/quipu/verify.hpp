#pragma once

#include <string>
#include <vector>

#include "quipu/families.hpp"
#include "quipu/spectral.hpp"
#include "quipu/transfer.hpp"

namespace quipu {

// One inequality check at lambda = rho: satisfied iff slack >= -10 * (root
// enclosure width). Diagnostic rows never affect the overall verdict.
struct CertCheck {
    std::string id;
    int index = 0; // 1-based part index, 0 for global checks
    Scalar slack;
    bool satisfied = true;
    bool diagnostic = false;
};

// Inequality certificate for a family-P member at its solved radius:
//   (a) 2*x1^s/(1-x1^(s+1)) <= d2 <= 2*x1^fs/(1-x1^(fs+1)), fs = floor(s)
//   (b) cbar*x1^(ki+1) <= d2 <= cbar*x1^(ki-1)        for middle indices
//   (c) sqrt(cbar*d1)*x1^(kj+1) <= d2 <= sqrt(cbar*d1)*x1^kj  for the ends
// with s = (n-2e+2)/(e-4) and cbar = (rho + sqrt(rho^2 + 4*d1*d2))/2.
struct CertificateReport {
    int n = 0, e = 0;
    KVector kv;
    SpectralResult rho;
    Scalar s, kbar;
    Scalar d2_at_rho;
    Scalar lower, upper;
    Scalar c_bar;
    std::vector<CertCheck> checks;

    bool all_satisfied() const;
    std::string to_json(unsigned digits) const;
};

CertificateReport certify_minimizer(int n, int e, const KVector& kv, const Scalar& tol);

// (p, q) of every prefix pair (L_i, v_i), i = 0..r-1, and suffix pair
// (R_j, v_{j-1}), j = 2..r+1, at the given lambda. Values go negative when
// lambda is below the tree's radius; the caller inspects them either way.
struct PQScanRow {
    char side; // 'L' or 'R'
    int index;
    Scalar p, q;
};
std::vector<PQScanRow> pq_positivity_scan(const KVector& kv, const Scalar& lambda);

// Convergence tables for the limit radii.
enum class LimitSeries { DoublePrimeIKJ, PrimeKJ, CorollaryKI };

struct LimitRow {
    long size = 0;
    SpectralResult rho;    // rho of the growing tree
    Scalar diff;           // rho - limit
    bool has_swap = false; // CorollaryKI: the equal-radius partner tree
    SpectralResult swap_rho;
    Scalar swap_diff;
};

struct LimitTable {
    LimitSeries kind;
    long k = 0;
    SpectralResult limit;
    std::vector<LimitRow> rows;

    std::string to_json(unsigned digits) const;
    std::string to_csv(unsigned digits) const;
};

LimitTable limit_convergence(LimitSeries kind, long k, const std::vector<long>& sizes,
                             const Scalar& tol);

// The two-branch tree with pendant leaves at positions 1 and i+2 and i+k+3 of
// a path (three degree-3 vertices, gaps i and k); its radius equals that of
// the symmetric three-gap tree with middle 2k+3.
Tree double_prime_two_gap(int k, int i);

} // namespace quipu
