#include "quipu/sturm.hpp"

#include <stdexcept>

namespace quipu {

namespace {

// primitive part with positive leading coefficient
IntPolynomial primitive(const IntPolynomial& p) {
    if (p.is_zero())
        return p;
    BigInt g(0);
    for (const auto& a : p.coeffs())
        g = gcd(g, a);
    if (p.leading() < 0)
        g = -g;
    std::vector<BigInt> r;
    r.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs())
        r.push_back(a / g);
    return IntPolynomial(std::move(r));
}

// remainder of a/b over the rationals, cleared to a primitive integer
// polynomial scaled by a positive constant (sign-preserving)
IntPolynomial signed_prem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigRat> rem(a.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i)
        rem[i] = BigRat(a.coeffs()[i]);
    int db = b.degree();
    BigRat lb(b.leading());
    int dr = a.degree();
    while (dr >= db) {
        BigRat f = rem[static_cast<size_t>(dr)] / lb;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= f * BigRat(b.coeffs()[static_cast<size_t>(i)]);
        rem[static_cast<size_t>(dr)] = 0;
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0)
            --dr;
    }
    if (dr < 0)
        return IntPolynomial();
    // common positive denominator
    BigInt den(1);
    for (int i = 0; i <= dr; ++i)
        den = lcm(den, denominator(rem[static_cast<size_t>(i)]));
    std::vector<BigInt> out(static_cast<size_t>(dr + 1));
    for (int i = 0; i <= dr; ++i)
        out[static_cast<size_t>(i)] = numerator(rem[static_cast<size_t>(i)]) *
                                      (den / denominator(rem[static_cast<size_t>(i)]));
    BigInt g(0);
    for (const auto& v : out)
        g = gcd(g, v);
    if (g != 0 && g != 1)
        for (auto& v : out)
            v /= g;
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        IntPolynomial r = signed_prem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    return a;
}

// exact division over the rationals, cleared to primitive
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigRat> rem(a.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i)
        rem[i] = BigRat(a.coeffs()[i]);
    int db = b.degree();
    BigRat lb(b.leading());
    std::vector<BigRat> q(a.coeffs().size(), BigRat(0));
    int dr = a.degree();
    while (dr >= db) {
        BigRat f = rem[static_cast<size_t>(dr)] / lb;
        q[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= f * BigRat(b.coeffs()[static_cast<size_t>(i)]);
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0)
            --dr;
    }
    BigInt den(1);
    for (const auto& v : q)
        den = lcm(den, denominator(v));
    std::vector<BigInt> out(q.size());
    for (size_t i = 0; i < q.size(); ++i)
        out[i] = numerator(q[i]) * (den / denominator(q[i]));
    return primitive(IntPolynomial(std::move(out)));
}

int sgn(const BigRat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    IntPolynomial p0 = primitive(p);
    IntPolynomial g = poly_gcd(p0, p0.derivative());
    if (g.degree() > 0)
        p0 = exact_div(p0, g); // squarefree part
    seq_.push_back(p0);
    if (p0.degree() == 0)
        return;
    seq_.push_back(primitive(p0.derivative()));
    while (seq_.back().degree() > 0) {
        IntPolynomial r = signed_prem(seq_[seq_.size() - 2], seq_.back());
        if (r.is_zero())
            break;
        seq_.push_back(-r);
    }
}

int SturmChain::sign_changes_at(const BigRat& t) const {
    int changes = 0, last = 0;
    for (const auto& s : seq_) {
        int sg = sgn(s.eval_rat(t));
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

int SturmChain::sign_changes_at_plus_inf() const {
    int changes = 0, last = 0;
    for (const auto& s : seq_) {
        int sg = sgn(s.leading());
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

int SturmChain::count_roots_above(const BigRat& t) const {
    return sign_changes_at(t) - sign_changes_at_plus_inf();
}

int SturmChain::count_roots_in(const BigRat& a, const BigRat& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

BigRat largest_root_sturm(const IntPolynomial& p, const BigRat& bound, const BigRat& width) {
    return kth_largest_root_sturm(p, 1, bound, width);
}

BigRat kth_largest_root_sturm(const IntPolynomial& p, int k, const BigRat& bound, const BigRat& width) {
    SturmChain chain(p);
    BigRat lo = -bound, hi = bound;
    if (chain.count_roots_above(lo) < k)
        throw std::invalid_argument("polynomial has fewer than k real roots above -bound");
    if (chain.count_roots_above(hi) >= k)
        throw std::invalid_argument("bound does not dominate the k-th root");
    // invariant: count(> lo) >= k, count(> hi) < k
    while (hi - lo > width) {
        BigRat mid = (lo + hi) / 2;
        if (chain.count_roots_above(mid) >= k)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

} // namespace quipu
