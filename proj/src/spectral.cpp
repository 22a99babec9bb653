#include "quipu/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "quipu/sturm.hpp"
#include "quipu/transfer.hpp"

namespace quipu {

std::string SpectralResult::to_json(unsigned digits) const {
    nlohmann::json j;
    j["value"] = to_decimal(value, digits);
    j["lo"] = to_decimal(lo, digits);
    j["hi"] = to_decimal(hi, digits);
    j["residual"] = to_decimal(residual, digits);
    j["iterations"] = iterations;
    return j.dump();
}

Scalar lambda0() { return sqrt(2 + sqrt(Scalar(5))); }

namespace {

// Evaluation-ready copy of an integer polynomial.
struct ScalarPoly {
    std::vector<Scalar> c;
    explicit ScalarPoly(const IntPolynomial& p) {
        c.reserve(p.coeffs().size());
        for (const auto& a : p.coeffs())
            c.emplace_back(a);
    }
    Scalar eval(const Scalar& x) const {
        Scalar acc(0);
        for (size_t i = c.size(); i-- > 0;) {
            acc *= x;
            acc += c[i];
        }
        return acc;
    }
    // Upper bound on the Horner rounding error at x: the absolute-value sum
    // scaled by the working epsilon and the operation count.
    Scalar noise_bound(const Scalar& x) const {
        Scalar ax = abs(x);
        Scalar acc(0);
        for (size_t i = c.size(); i-- > 0;) {
            acc *= ax;
            acc += abs(c[i]);
        }
        return acc * static_cast<long>(4 * c.size() + 4) *
               pow(Scalar(10), -static_cast<int>(working_precision()));
    }
};

// Bisection plus guarded Newton on [lo, hi] with phi(lo) < 0 <= phi(hi).
// Sign decisions are trusted only above the evaluation noise floor; once a
// point lands below it, the bracket is closed with the derivative-scaled
// uncertainty of that point instead of further (meaningless) refinement.
SpectralResult refine_root(const ScalarPoly& phi, const ScalarPoly& dphi, Scalar lo, Scalar hi,
                           const Scalar& tol) {
    long iters = 0;
    Scalar x = (lo + hi) / 2;
    while (hi - lo > tol) {
        if (++iters > 200000)
            throw std::runtime_error("root refinement did not converge at this precision");
        Scalar fx = phi.eval(x);
        Scalar nb = phi.noise_bound(x);
        if (abs(fx) <= nb) {
            Scalar dfx = abs(dphi.eval(x));
            Scalar u = dfx > 0 ? Scalar(2 * nb / dfx) : Scalar(hi - lo);
            Scalar nlo = x - u, nhi = x + u;
            if (nlo < lo) nlo = lo;
            if (nhi > hi) nhi = hi;
            if (nlo > nhi) {
                nlo = x - u;
                nhi = x + u;
            }
            lo = nlo;
            hi = nhi;
            break;
        }
        if (fx < 0)
            lo = x;
        else
            hi = x;
        Scalar dfx = dphi.eval(x);
        Scalar next = dfx != 0 ? Scalar(x - fx / dfx) : Scalar((lo + hi) / 2);
        if (!(next > lo && next < hi))
            next = (lo + hi) / 2;
        x = next;
    }
    if (hi - lo > tol)
        throw std::runtime_error("requested tolerance is unreachable at the working precision");
    SpectralResult res;
    res.lo = lo;
    res.hi = hi;
    res.value = (lo + hi) / 2;
    res.residual = abs(phi.eval(res.value));
    res.iterations = iters;
    return res;
}

double double_upper_gap_estimate(const Tree& t, double& top, double& second) {
    int n = t.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : t.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    top = es.eigenvalues()(n - 1);
    second = n >= 2 ? es.eigenvalues()(n - 2) : top - 1e9;
    return top - second;
}

SpectralResult rho_tree_inner(const Tree& t, const Scalar& tol);

// Largest radius over a list of component trees.
SpectralResult rho_max_over(const std::vector<Tree>& comps, const Scalar& tol) {
    if (comps.empty())
        throw std::invalid_argument("radius of an empty forest");
    SpectralResult best;
    bool first = true;
    for (const auto& c : comps) {
        SpectralResult r = rho_tree_inner(c, tol);
        if (first || r.value > best.value) {
            best = r;
            first = false;
        }
    }
    return best;
}

SpectralResult rho_tree_inner(const Tree& t, const Scalar& tol) {
    IntPolynomial poly = charpoly_tree(t);
    ScalarPoly phi(poly), dphi(poly.derivative());

    int n = t.n();
    if (n == 1) { // phi = x, root 0
        SpectralResult res;
        res.lo = -tol / 2;
        res.hi = tol / 2;
        res.value = 0;
        res.residual = 0;
        res.iterations = 0;
        return res;
    }

    int max_deg = 0;
    for (int v = 0; v < n; ++v)
        max_deg = std::max(max_deg, t.degree(v));
    Scalar hi_cap = Scalar(max_deg) + 1; // rho <= max degree

    double top = 0, second = 0;
    double gap = double_upper_gap_estimate(t, top, second);

    // Cheap bracket: the midpoint of the top double-precision pair sits in
    // (lambda_2, rho) once the gap clears the eigensolver error, and the sign
    // there must clear the evaluation noise floor.
    if (gap > 1e-9) {
        Scalar lo = Scalar(top) - Scalar(gap) / 2;
        Scalar v = phi.eval(lo);
        if (v < -phi.noise_bound(lo))
            return refine_root(phi, dphi, lo, hi_cap, tol);
    }

    // Near-degenerate top pair: delete a centroid and use interlacing,
    // lambda_2(G) <= rho(G - c) < rho(G). For a mirror-symmetric tree the
    // first inequality is tight and phi_G almost vanishes at rho(G - c), so
    // step upward until the sign is certified against the noise bound.
    int c = centroids(t).front();
    SpectralResult sub = rho_max_over(remove_vertex(t, c), tol);
    Scalar offset = pow(Scalar(10), -static_cast<int>(working_precision()) + 6);
    while (offset < 1) {
        Scalar lo = sub.hi + offset;
        Scalar v = phi.eval(lo);
        Scalar nb = phi.noise_bound(lo);
        if (v < -nb)
            return refine_root(phi, dphi, lo, hi_cap, tol);
        if (v > nb) {
            // reliably positive above lambda_2: rho got squeezed into
            // (sub.lo, lo); accept only if that already meets the tolerance
            if (lo - sub.lo <= tol) {
                SpectralResult res;
                res.lo = sub.lo;
                res.hi = lo;
                res.value = (res.lo + res.hi) / 2;
                res.residual = abs(phi.eval(res.value));
                res.iterations = sub.iterations;
                return res;
            }
            throw std::runtime_error(
                "largest root is closer to the second eigenvalue than the working "
                "precision can separate; raise the precision");
        }
        offset *= 100;
    }
    throw std::runtime_error("could not certify a bracket below the largest root");
}

} // namespace

SpectralResult rho_tree(const Tree& t, const Scalar& tol) { return rho_tree_inner(t, tol); }
SpectralResult rho_tree(const Tree& t) { return rho_tree_inner(t, default_tol()); }

SpectralResult rho_without(const Tree& t, int v, const Scalar& tol) {
    return rho_max_over(remove_vertex(t, v), tol);
}

Scalar lambda2_tree(const Tree& t, const Scalar& tol) {
    if (t.n() < 2)
        throw std::invalid_argument("second eigenvalue needs at least two vertices");
    IntPolynomial poly = charpoly_tree(t);
    int max_deg = 0;
    for (int v = 0; v < t.n(); ++v)
        max_deg = std::max(max_deg, t.degree(v));
    BigRat bound(max_deg + 1);
    // width as a power of two below tol
    BigRat width(1);
    Scalar w(1);
    while (w > tol) {
        width /= 2;
        w /= 2;
    }
    return scalar_from_rat(kth_largest_root_sturm(poly, 2, bound, width));
}

SpectralResult solve_limit_equation(LimitKind kind, long k, const Scalar& tol) {
    if (k < 1)
        throw std::invalid_argument("limit equation needs k >= 1");
    auto residual = [kind, k](const Scalar& lambda) {
        TransferParams c = make_params(lambda);
        Scalar rhs;
        switch (kind) {
        case LimitKind::RhoK:
            rhs = 2 * pow_int(c.x1, k) / (1 - pow_int(c.x1, k + 1));
            break;
        case LimitKind::RhoPrimeK:
            rhs = sqrt(c.d1 * c.x1) * pow_int(c.x1, k);
            break;
        case LimitKind::RhoDoublePrimeK:
            rhs = pow_int(c.x1, k);
            break;
        }
        return Scalar(c.d2 - rhs);
    };

    Scalar l0 = lambda0();
    Scalar eps = pow(Scalar(10), -static_cast<int>(working_precision()) + 5);
    Scalar lo = l0 + eps;
    if (!(residual(lo) < 0))
        throw std::runtime_error("limit equation: left end of bracket is not below the root");
    Scalar hi = 3 * sqrt(Scalar(2)) / 2;
    int widenings = 0;
    while (residual(hi) < 0) {
        if (++widenings > 64)
            throw std::runtime_error("limit equation: no sign change in any widened bracket");
        hi = l0 + 2 * (hi - l0);
    }

    long iters = 0;
    while (hi - lo > tol) {
        ++iters;
        Scalar mid = (lo + hi) / 2;
        if (residual(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    SpectralResult res;
    res.lo = lo;
    res.hi = hi;
    res.value = (lo + hi) / 2;
    res.residual = abs(residual(res.value));
    res.iterations = iters;
    return res;
}

SpectralResult solve_limit_equation(LimitKind kind, long k) {
    return solve_limit_equation(kind, k, default_tol());
}

SpectralResult rho_of_poly_sturm(const IntPolynomial& poly, const BigRat& bound, const Scalar& tol) {
    BigRat width(1);
    Scalar w(1);
    while (w > tol) {
        width /= 2;
        w /= 2;
    }
    BigRat root = largest_root_sturm(poly, bound, width);
    SpectralResult res;
    res.value = scalar_from_rat(root);
    res.lo = res.value - scalar_from_rat(width) / 2;
    res.hi = res.value + scalar_from_rat(width) / 2;
    res.residual = abs(poly.eval(res.value));
    res.iterations = 0;
    return res;
}

} // namespace quipu
