#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace quipu {

// Working real type: arbitrary-precision float, precision set process-wide.
using Scalar = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

// Sets the working precision in decimal digits (minimum 30).
void set_precision(unsigned digits10);
unsigned working_precision();

// Default root-solving tolerance: 1e-40 (never tighter than 1e-(digits-20)).
Scalar default_tol();

// Two radii closer than this are reported as a tie.
Scalar tie_tolerance();

// x^e for integer e of either sign.
Scalar pow_int(const Scalar& x, long e);

// Deterministic decimal rendering with the given significant digits.
std::string to_decimal(const Scalar& x, unsigned digits);

Scalar scalar_from_rat(const BigRat& q);

} // namespace quipu
