#pragma once

#include <vector>

#include "quipu/intpoly.hpp"

namespace quipu {

// Sturm chain of the squarefree part of a polynomial; counts distinct real
// roots exactly, using only integer/rational arithmetic.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p);

    int sign_changes_at(const BigRat& t) const;
    int sign_changes_at_plus_inf() const;

    // distinct real roots in (t, +infinity)
    int count_roots_above(const BigRat& t) const;
    // distinct real roots in (a, b]
    int count_roots_in(const BigRat& a, const BigRat& b) const;

    const std::vector<IntPolynomial>& chain() const { return seq_; }

private:
    std::vector<IntPolynomial> seq_;
};

// Largest real root isolated to the requested width by rational bisection on
// Sturm counts; `bound` must exceed every root magnitude.
BigRat largest_root_sturm(const IntPolynomial& p, const BigRat& bound, const BigRat& width);

// k-th largest distinct real root (k = 1 is the largest).
BigRat kth_largest_root_sturm(const IntPolynomial& p, int k, const BigRat& bound, const BigRat& width);

} // namespace quipu
