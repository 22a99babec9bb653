#pragma once

#include <vector>
#include <string>

#include "quipu/scalar.hpp"

namespace quipu {

// Dense polynomial with exact integer coefficients, stored low to high degree.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(BigInt v);
    static IntPolynomial x(); // the monomial lambda

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const; // 0 outside range
    const BigInt& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial times_x() const; // multiply by lambda
    IntPolynomial scaled(const BigInt& s) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    IntPolynomial derivative() const;

    Scalar eval(const Scalar& x) const;
    BigRat eval_rat(const BigRat& x) const;
    BigInt eval_int(const BigInt& x) const;

    // JSON array of decimal strings, low to high degree.
    std::string to_json() const;
    static IntPolynomial from_json(const std::string& text);

    // Human form like "x^4 - 3*x^2".
    std::string pretty(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

} // namespace quipu
