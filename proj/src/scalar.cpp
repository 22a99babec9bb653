#include "quipu/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace quipu {

namespace {
unsigned g_digits = 100;
}

void set_precision(unsigned digits10) {
    if (digits10 < 30)
        throw std::invalid_argument("precision must be at least 30 decimal digits");
    g_digits = digits10;
    Scalar::default_precision(digits10);
}

unsigned working_precision() { return g_digits; }

Scalar default_tol() {
    Scalar t = pow(Scalar(10), -40);
    Scalar floor_t = pow(Scalar(10), -static_cast<int>(g_digits) + 20);
    return t < floor_t ? floor_t : t;
}

Scalar tie_tolerance() { return pow(Scalar(10), -30); }

Scalar pow_int(const Scalar& x, long e) {
    if (e >= 0)
        return pow(x, static_cast<unsigned long>(e));
    return Scalar(1) / pow(x, static_cast<unsigned long>(-e));
}

std::string to_decimal(const Scalar& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits));
}

Scalar scalar_from_rat(const BigRat& q) {
    return Scalar(numerator(q)) / Scalar(denominator(q));
}

} // namespace quipu
