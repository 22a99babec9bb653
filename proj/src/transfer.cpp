#include "quipu/transfer.hpp"

#include <stdexcept>

namespace quipu {

TransferParams make_params(const Scalar& lambda) {
    if (lambda <= 2)
        throw std::domain_error("transfer context needs lambda > 2");
    TransferParams ctx;
    ctx.lambda = lambda;
    Scalar disc = sqrt(lambda * lambda - 4);
    ctx.x1 = (lambda - disc) / 2;
    ctx.x2 = (lambda + disc) / 2;
    ctx.d1 = lambda - ctx.x1 * ctx.x1 * ctx.x1;
    ctx.d2 = ctx.x2 * ctx.x2 * ctx.x2 - lambda;
    return ctx;
}

Scalar PQPair::phi_minus_root() const { return ctx.x2 * p + ctx.x1 * q; }

namespace {

void check_same_context(const PQPair& a, const PQPair& b) {
    if (a.ctx.lambda != b.ctx.lambda)
        throw std::invalid_argument("pq pairs come from different lambda contexts");
}

} // namespace

std::array<Scalar, 4> step_matrix(Step s, const TransferParams& c) {
    Scalar w = c.x2 - c.x1;
    switch (s) {
    case Step::A:
        return {c.x1, Scalar(0), Scalar(0), c.x2};
    case Step::B:
        return {c.d1 / w, c.x1 / w, -c.x2 / w, c.d2 / w};
    case Step::C: {
        Scalar l2 = c.lambda * c.lambda;
        Scalar x1_4 = c.x1 * c.x1 * c.x1 * c.x1;
        Scalar x2_4 = c.x2 * c.x2 * c.x2 * c.x2;
        return {(l2 - 1 - x1_4) / w, c.lambda * c.x1 / w, -c.lambda * c.x2 / w,
                (x2_4 - l2 + 1) / w};
    }
    }
    throw std::logic_error("bad step");
}

PQPair pq_single_vertex(const TransferParams& ctx) {
    Scalar w = ctx.x2 - ctx.x1;
    return {-ctx.x1 * ctx.x1 / w, ctx.x2 * ctx.x2 / w, ctx};
}

PQPair pq_p5_center(const TransferParams& ctx) {
    Scalar w = ctx.x2 - ctx.x1;
    Scalar f = (ctx.lambda * ctx.lambda - 1) / w;
    return {f * ctx.d1 * ctx.x1, f * ctx.d2 * ctx.x2, ctx};
}

PQPair apply_step(const PQPair& pq, Step s) {
    auto m = step_matrix(s, pq.ctx);
    return {m[0] * pq.p + m[1] * pq.q, m[2] * pq.p + m[3] * pq.q, pq.ctx};
}

PQPair apply_path(const PQPair& pq, long k) {
    if (k < 0)
        throw std::invalid_argument("apply_path needs k >= 0");
    if (k == 0)
        return pq;
    return {pow_int(pq.ctx.x1, k) * pq.p, pow_int(pq.ctx.x2, k) * pq.q, pq.ctx};
}

PQPair pq_of_rooted(const Tree& t, int v, const Scalar& lambda) {
    TransferParams ctx = make_params(lambda);
    Scalar phi_g = eval_poly(charpoly_tree(t), lambda);
    Scalar phi_gv = t.n() == 1 ? Scalar(1) : eval_poly(charpoly_without(t, v), lambda);
    Scalar w = ctx.x2 - ctx.x1;
    return {(-ctx.x1 * phi_g + phi_gv) / w, (ctx.x2 * phi_g - phi_gv) / w, ctx};
}

Scalar phi_join(const PQPair& left, const PQPair& right) {
    check_same_context(left, right);
    return (left.ctx.x2 - left.ctx.x1) * (left.q * right.q - left.p * right.p);
}

Scalar shift_difference(const PQPair& left, const PQPair& right, long i, long j) {
    check_same_context(left, right);
    if (i < 0 || j < 1)
        throw std::invalid_argument("shift_difference needs i >= 0 and j >= 1");
    const TransferParams& c = left.ctx;
    long e = j - i - 1;
    return (c.x1 - c.x2) *
           (left.p * right.q * pow_int(c.x2, e) - left.q * right.p * pow_int(c.x1, e));
}

Scalar phi_kvector_at(const KVector& kv, const Scalar& lambda) {
    return phi_kvector_at(kv, make_params(lambda));
}

Scalar phi_kvector_at(const KVector& kv, const TransferParams& ctx) {
    kv.validate();
    PQPair pq = pq_single_vertex(ctx);
    int r = kv.r();
    // Build along the main path starting from one end; the step sequence
    // mirrors the attachment pattern of each family.
    switch (kv.family) {
    case FamilyId::P:
        // end: ..2 plain.. C | gaps k_r .. k_1 with B at the branch vertices | C ..2 plain..
        pq = apply_step(pq, Step::A);
        pq = apply_step(pq, Step::C);
        for (int i = r; i >= 1; --i) {
            pq = apply_path(pq, kv.ks[static_cast<size_t>(i - 1)]);
            pq = apply_step(pq, i > 1 ? Step::B : Step::C);
        }
        pq = apply_step(pq, Step::A);
        pq = apply_step(pq, Step::A);
        break;
    case FamilyId::PPrime:
        // start from the pendant-P2 end; k_1 is the gap adjacent to it
        pq = apply_step(pq, Step::A);
        pq = apply_step(pq, Step::C);
        for (int i = 1; i <= r; ++i) {
            pq = apply_path(pq, kv.ks[static_cast<size_t>(i - 1)]);
            pq = apply_step(pq, Step::B);
        }
        pq = apply_step(pq, Step::A);
        break;
    case FamilyId::PDoublePrime:
        pq = apply_step(pq, Step::B);
        for (int i = 1; i <= r; ++i) {
            pq = apply_path(pq, kv.ks[static_cast<size_t>(i - 1)]);
            pq = apply_step(pq, Step::B);
        }
        pq = apply_step(pq, Step::A);
        break;
    }
    return pq.phi();
}

std::vector<PQPair> family_prefix_pairs(const KVector& kv, const TransferParams& ctx) {
    kv.validate();
    if (kv.family != FamilyId::P)
        throw std::invalid_argument("prefix pairs are defined for family P members");
    int r = kv.r();
    std::vector<PQPair> out;
    out.reserve(static_cast<size_t>(r));
    PQPair cur = pq_p5_center(ctx); // L_0
    out.push_back(cur);
    for (int i = 1; i <= r - 1; ++i) {
        cur = apply_path(cur, kv.ks[static_cast<size_t>(i - 1)]);
        cur = apply_step(cur, Step::B);
        out.push_back(cur);
    }
    return out;
}

std::vector<PQPair> family_suffix_pairs(const KVector& kv, const TransferParams& ctx) {
    kv.validate();
    if (kv.family != FamilyId::P)
        throw std::invalid_argument("suffix pairs are defined for family P members");
    int r = kv.r();
    std::vector<PQPair> out; // R_{r+1}, R_r, ..., R_2 built in that order
    out.reserve(static_cast<size_t>(r));
    PQPair cur = pq_p5_center(ctx); // R_{r+1}
    out.push_back(cur);
    for (int j = r; j >= 2; --j) {
        cur = apply_path(cur, kv.ks[static_cast<size_t>(j - 1)]);
        cur = apply_step(cur, Step::B);
        out.push_back(cur);
    }
    return out;
}

} // namespace quipu
