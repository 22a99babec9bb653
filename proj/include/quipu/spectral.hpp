#pragma once

#include <string>
#include <vector>

#include "quipu/charpoly.hpp"
#include "quipu/scalar.hpp"
#include "quipu/tree.hpp"

namespace quipu {

// A solved radius with its certified enclosure.
struct SpectralResult {
    Scalar value;
    Scalar lo, hi;      // final bracket, hi - lo <= tol
    Scalar residual;    // |phi(value)| or |equation residual|
    long iterations = 0;

    std::string to_json(unsigned digits) const;
};

// sqrt(2 + sqrt(5)) = 2.0581710... at working precision; the common limit of
// the minimal radii as n grows at fixed e >= 6, and the point where d2 = 0.
Scalar lambda0();

// Largest root of the tree's characteristic polynomial. Localized with a
// double-precision symmetric eigensolve, then certified and refined on the
// exact polynomial (bisection bracket + guarded Newton).
SpectralResult rho_tree(const Tree& t, const Scalar& tol);
SpectralResult rho_tree(const Tree& t);

// Largest radius over the components of t - v.
SpectralResult rho_without(const Tree& t, int v, const Scalar& tol);

// Second largest distinct eigenvalue, isolated exactly with a Sturm chain.
Scalar lambda2_tree(const Tree& t, const Scalar& tol);

// The three limit equations for the family radii: d2 equals
//   RhoK:            2*x1^k / (1 - x1^(k+1))
//   RhoPrimeK:       sqrt(d1*x1) * x1^k
//   RhoDoublePrimeK: x1^k
// Each has a unique root above lambda0; solved by bisection on
// (lambda0, 3*sqrt(2)/2], widening the cap geometrically when needed.
enum class LimitKind { RhoK, RhoPrimeK, RhoDoublePrimeK };

SpectralResult solve_limit_equation(LimitKind kind, long k, const Scalar& tol);
SpectralResult solve_limit_equation(LimitKind kind, long k);

// Largest root of an explicit integer polynomial whose roots all lie in
// [-bound, bound]; certified via Sturm counts (used for small general graphs).
SpectralResult rho_of_poly_sturm(const IntPolynomial& poly, const BigRat& bound, const Scalar& tol);

} // namespace quipu
