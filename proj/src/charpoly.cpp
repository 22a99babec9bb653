#include "quipu/charpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace quipu {

namespace {

struct RootedPolys {
    IntPolynomial with_root;    // phi of the rooted subtree
    IntPolynomial without_root; // phi of the subtree minus its root
};

// Post-order over the tree rooted at `root`; memo keyed by the rooted
// canonical code of each subtree so repeated limbs are computed once.
RootedPolys charpoly_rooted(const Tree& t, int root) {
    int n = t.n();
    std::vector<int> parent(static_cast<size_t>(n), -2);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> stack = {root};
    parent[static_cast<size_t>(root)] = -1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : t.neighbors(u))
            if (parent[static_cast<size_t>(v)] == -2) {
                parent[static_cast<size_t>(v)] = u;
                stack.push_back(v);
            }
    }

    std::vector<std::string> code(static_cast<size_t>(n));
    std::vector<RootedPolys> val(static_cast<size_t>(n));
    std::unordered_map<std::string, RootedPolys> memo;

    for (size_t idx = order.size(); idx-- > 0;) {
        int v = order[idx];
        std::vector<int> children;
        for (int w : t.neighbors(v))
            if (w != parent[static_cast<size_t>(v)])
                children.push_back(w);

        std::vector<std::string> child_codes;
        child_codes.reserve(children.size());
        for (int c : children)
            child_codes.push_back(code[static_cast<size_t>(c)]);
        std::sort(child_codes.begin(), child_codes.end());
        std::string& my_code = code[static_cast<size_t>(v)];
        my_code = "(";
        for (const auto& s : child_codes)
            my_code += s;
        my_code += ")";

        if (auto it = memo.find(my_code); it != memo.end()) {
            val[static_cast<size_t>(v)] = it->second;
            continue;
        }

        RootedPolys rp;
        if (children.empty()) {
            rp.with_root = IntPolynomial::x();
            rp.without_root = IntPolynomial::constant(1);
        } else {
            size_t m = children.size();
            // prefix/suffix products of the children's rooted polys
            std::vector<IntPolynomial> pre(m + 1), suf(m + 1);
            pre[0] = IntPolynomial::constant(1);
            for (size_t i = 0; i < m; ++i)
                pre[i + 1] = pre[i] * val[static_cast<size_t>(children[i])].with_root;
            suf[m] = IntPolynomial::constant(1);
            for (size_t i = m; i-- > 0;)
                suf[i] = val[static_cast<size_t>(children[i])].with_root * suf[i + 1];
            rp.without_root = pre[m];
            IntPolynomial acc = rp.without_root.times_x();
            for (size_t i = 0; i < m; ++i)
                acc = acc - val[static_cast<size_t>(children[i])].without_root * (pre[i] * suf[i + 1]);
            rp.with_root = acc;
        }
        memo.emplace(my_code, rp);
        val[static_cast<size_t>(v)] = std::move(rp);
    }
    return val[static_cast<size_t>(root)];
}

} // namespace

IntPolynomial charpoly_tree(const Tree& t) { return charpoly_rooted(t, 0).with_root; }

IntPolynomial charpoly_without(const Tree& t, int v) {
    IntPolynomial acc = IntPolynomial::constant(1);
    for (const Tree& comp : remove_vertex(t, v))
        acc = acc * charpoly_tree(comp);
    return acc;
}

namespace {

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    if (n == 0)
        return BigInt(1);
    BigInt sign(1);
    BigInt prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return BigInt(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

IntPolynomial charpoly_det_adj(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n > 64)
        throw std::invalid_argument("determinant oracle capped at n <= 64");
    // det(xI - A) at n+1 small integer nodes, then exact interpolation
    std::vector<BigRat> nodes, values;
    for (int k = 0; k <= n; ++k) {
        int x = (k % 2 == 0) ? k / 2 : -(k / 2 + 1); // 0, -1, 1, -2, 2, ...
        std::vector<std::vector<BigInt>> m(static_cast<size_t>(n),
                                           std::vector<BigInt>(static_cast<size_t>(n), BigInt(0)));
        for (int i = 0; i < n; ++i) {
            m[static_cast<size_t>(i)][static_cast<size_t>(i)] = BigInt(x);
            for (int j = 0; j < n; ++j)
                if (adj[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= 1;
        }
        nodes.emplace_back(x);
        values.emplace_back(det_bareiss(std::move(m)));
    }

    // Newton divided differences over the rationals
    size_t pts = nodes.size();
    std::vector<BigRat> dd = values;
    for (size_t level = 1; level < pts; ++level)
        for (size_t i = pts - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    // expand the Newton form; coefficients must come out integral
    std::vector<BigRat> coeff(pts, BigRat(0));
    std::vector<BigRat> basis = {BigRat(1)}; // product (x - x_0)...(x - x_{i-1})
    for (size_t i = 0; i < pts; ++i) {
        for (size_t j = 0; j < basis.size(); ++j)
            coeff[j] += dd[i] * basis[j];
        if (i + 1 < pts) {
            std::vector<BigRat> next(basis.size() + 1, BigRat(0));
            for (size_t j = 0; j < basis.size(); ++j) {
                next[j + 1] += basis[j];
                next[j] -= basis[j] * nodes[i];
            }
            basis = std::move(next);
        }
    }
    std::vector<BigInt> ic(pts);
    for (size_t j = 0; j < pts; ++j) {
        if (denominator(coeff[j]) != 1)
            throw std::logic_error("interpolated charpoly has a non-integer coefficient");
        ic[j] = numerator(coeff[j]);
    }
    return IntPolynomial(std::move(ic));
}

IntPolynomial charpoly_det_oracle(const Tree& t) {
    int n = t.n();
    if (n > 64)
        throw std::invalid_argument("determinant oracle capped at n <= 64");
    std::vector<std::vector<int>> adj(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (auto [u, v] : t.edges()) {
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    return charpoly_det_adj(adj);
}

Scalar eval_poly(const IntPolynomial& poly, const Scalar& lambda) { return poly.eval(lambda); }

} // namespace quipu
