#include "quipu/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace quipu {

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        throw std::invalid_argument("tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs exactly " +
                                    std::to_string(n - 1) + " edges");
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop is not allowed");
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    Tree t(std::move(adj));
    // n-1 distinct edges + connected == acyclic
    auto dist = t.distances(0);
    for (int d : dist)
        if (d < 0)
            throw std::invalid_argument("edge list is not connected (or contains a cycle)");
    return t;
}

Tree Tree::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Tree Tree::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

bool Tree::has_edge(int u, int v) const {
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                e.emplace_back(u, v);
    return e;
}

std::vector<int> Tree::distances(int src) const {
    std::vector<int> dist(static_cast<size_t>(n()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : neighbors(u))
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

int diameter(const Tree& t) {
    auto d0 = t.distances(0);
    int u = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = t.distances(u);
    return *std::max_element(d1.begin(), d1.end());
}

std::vector<int> centers(const Tree& t) {
    int n = t.n();
    if (n == 1)
        return {0};
    // peel leaves until one or two vertices remain
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = t.degree(v);
        if (deg[static_cast<size_t>(v)] <= 1)
            layer.push_back(v);
    }
    int remaining = n;
    std::vector<bool> removed(static_cast<size_t>(n), false);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<size_t>(v)] = true;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1)
                    next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<size_t>(v)])
            c.push_back(v);
    return c;
}

namespace {

// subtree sizes with respect to root 0 (iterative DFS)
std::vector<int> subtree_sizes(const Tree& t, std::vector<int>& parent) {
    int n = t.n();
    parent.assign(static_cast<size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> stack = {0};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : t.neighbors(u))
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                parent[static_cast<size_t>(v)] = u;
                stack.push_back(v);
            }
    }
    std::vector<int> size(static_cast<size_t>(n), 1);
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        if (parent[static_cast<size_t>(v)] >= 0)
            size[static_cast<size_t>(parent[static_cast<size_t>(v)])] += size[static_cast<size_t>(v)];
    }
    return size;
}

} // namespace

std::vector<int> centroids(const Tree& t) {
    int n = t.n();
    std::vector<int> parent;
    auto size = subtree_sizes(t, parent);
    std::vector<int> best;
    int best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[static_cast<size_t>(v)];
        for (int w : t.neighbors(v))
            if (parent[static_cast<size_t>(w)] == v)
                weight = std::max(weight, size[static_cast<size_t>(w)]);
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

Tree subdivide_edge(const Tree& t, int u, int v) {
    if (u < 0 || u >= t.n() || v < 0 || v >= t.n() || !t.has_edge(u, v))
        throw std::invalid_argument("subdivide_edge: uv is not an edge");
    int w = t.n();
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : t.edges())
        if (!((a == u && b == v) || (a == v && b == u)))
            e.emplace_back(a, b);
    e.emplace_back(u, w);
    e.emplace_back(w, v);
    return Tree::from_edges(t.n() + 1, e);
}

std::vector<Tree> remove_vertex(const Tree& t, int v) {
    if (v < 0 || v >= t.n())
        throw std::invalid_argument("remove_vertex: vertex out of range");
    std::vector<Tree> comps;
    std::vector<int> label(static_cast<size_t>(t.n()), -1);
    for (int root : t.neighbors(v)) {
        // BFS component hanging off each neighbor, skipping v
        std::vector<int> verts = {root};
        label[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : t.neighbors(u)) {
                if (w == v || label[static_cast<size_t>(w)] >= 0)
                    continue;
                label[static_cast<size_t>(w)] = static_cast<int>(verts.size());
                verts.push_back(w);
                q.push(w);
            }
        }
        std::vector<std::pair<int, int>> e;
        for (int a : verts)
            for (int b : t.neighbors(a))
                if (b != v && label[static_cast<size_t>(a)] < label[static_cast<size_t>(b)])
                    e.emplace_back(label[static_cast<size_t>(a)], label[static_cast<size_t>(b)]);
        comps.push_back(Tree::from_edges(static_cast<int>(verts.size()), e));
    }
    return comps;
}

Tree relabeled(const Tree& t, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : t.edges())
        e.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return Tree::from_edges(t.n(), e);
}

namespace {

std::vector<int> canon_seq_rec(const Tree& t, int v, int parent, int depth) {
    std::vector<std::vector<int>> child_seqs;
    for (int w : t.neighbors(v))
        if (w != parent)
            child_seqs.push_back(canon_seq_rec(t, w, v, depth + 1));
    std::sort(child_seqs.begin(), child_seqs.end(), std::greater<>());
    std::vector<int> seq = {depth};
    for (const auto& s : child_seqs)
        seq.insert(seq.end(), s.begin(), s.end());
    return seq;
}

} // namespace

std::vector<int> canonical_level_sequence(const Tree& t, int root) {
    return canon_seq_rec(t, root, -1, 1);
}

std::string canonical_code(const Tree& t) {
    auto cs = centers(t);
    std::vector<int> best;
    for (int c : cs) {
        auto s = canonical_level_sequence(t, c);
        if (best.empty() || s > best)
            best = std::move(s);
    }
    std::string code;
    code.reserve(best.size() * 3);
    for (size_t i = 0; i < best.size(); ++i) {
        if (i)
            code += '.';
        code += std::to_string(best[i]);
    }
    return code;
}

bool edge_on_internal_path(const Tree& t, int u, int v) {
    if (!t.has_edge(u, v))
        throw std::invalid_argument("edge_on_internal_path: uv is not an edge");
    // Walk from u away from v through degree-2 vertices; the run must end at a
    // vertex of degree >= 3 on both sides.
    auto reaches_branch = [&t](int from, int avoid) {
        int prev = avoid, cur = from;
        while (t.degree(cur) == 2) {
            int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        return t.degree(cur) >= 3;
    };
    return reaches_branch(u, v) && reaches_branch(v, u);
}

Tree read_edge_list(std::istream& in) {
    int n = 0;
    if (!(in >> n))
        throw std::invalid_argument("edge list: missing vertex count");
    std::vector<std::pair<int, int>> e;
    int u = 0, v = 0;
    while (in >> u >> v)
        e.emplace_back(u, v);
    return Tree::from_edges(n, e);
}

Tree read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Tree& t) {
    std::ostringstream out;
    out << t.n() << "\n";
    for (auto [u, v] : t.edges())
        out << u << " " << v << "\n";
    return out.str();
}

int QuipuSpec::realized_order() const {
    int n = p;
    for (auto [m, len] : attachments) {
        (void)m;
        n += len;
    }
    return n;
}

void QuipuSpec::validate() const {
    if (p < 1)
        throw std::invalid_argument("quipu: main path needs at least one vertex");
    int prev = -1;
    for (auto [m, len] : attachments) {
        if (m < 0 || m > p - 1)
            throw std::invalid_argument("quipu: attachment position out of range");
        if (m <= prev)
            throw std::invalid_argument("quipu: attachment positions must be strictly increasing");
        if (len < 1)
            throw std::invalid_argument("quipu: pendant path length must be at least 1");
        prev = m;
    }
}

Tree build_quipu(const QuipuSpec& spec) {
    spec.validate();
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < spec.p; ++i)
        e.emplace_back(i, i + 1);
    int next = spec.p;
    for (auto [m, len] : spec.attachments) {
        int prev = m;
        for (int j = 0; j < len; ++j) {
            e.emplace_back(prev, next);
            prev = next;
            ++next;
        }
    }
    return Tree::from_edges(next, e);
}

std::string family_name(FamilyId f) {
    switch (f) {
    case FamilyId::P: return "P";
    case FamilyId::PPrime: return "P1";
    case FamilyId::PDoublePrime: return "P2";
    }
    throw std::logic_error("bad family id");
}

FamilyId family_from_name(const std::string& s) {
    if (s == "P") return FamilyId::P;
    if (s == "P1") return FamilyId::PPrime;
    if (s == "P2") return FamilyId::PDoublePrime;
    throw std::invalid_argument("unknown family '" + s + "' (expected P, P1 or P2)");
}

int family_arity(FamilyId f, int e) {
    switch (f) {
    case FamilyId::P: return e - 4;
    case FamilyId::PPrime: return e - 3;
    case FamilyId::PDoublePrime: return e - 2;
    }
    throw std::logic_error("bad family id");
}

int KVector::order() const {
    int sum = 0;
    for (int k : ks)
        sum += k;
    return sum + 2 * e;
}

void KVector::validate() const {
    if (e < 5)
        throw std::invalid_argument("k-vector: e must be at least 5");
    if (r() != family_arity(family, e))
        throw std::invalid_argument("k-vector: family " + family_name(family) + " at e=" +
                                    std::to_string(e) + " needs " +
                                    std::to_string(family_arity(family, e)) + " parts, got " +
                                    std::to_string(r()));
    for (int k : ks)
        if (k < 0)
            throw std::invalid_argument("k-vector: parts must be nonnegative");
}

KVector KVector::reversed() const {
    KVector out = *this;
    std::reverse(out.ks.begin(), out.ks.end());
    return out;
}

KVector KVector::canonical() const {
    if (family == FamilyId::PPrime)
        return *this;
    KVector rev = reversed();
    return rev.ks < ks ? rev : *this;
}

bool KVector::operator<(const KVector& o) const {
    if (family != o.family)
        return family < o.family;
    if (e != o.e)
        return e < o.e;
    return ks < o.ks;
}

std::string KVector::str() const {
    std::string s = family_name(family) + ":e=" + std::to_string(e) + ":k=";
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ks[i]);
    }
    return s;
}

KVector KVector::parse(const std::string& text) {
    auto c1 = text.find(':');
    auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("k-vector: expected FAMILY:e=<int>:k=<ints>, got '" + text + "'");
    KVector kv;
    kv.family = family_from_name(text.substr(0, c1));
    std::string epart = text.substr(c1 + 1, c2 - c1 - 1);
    if (epart.rfind("e=", 0) != 0)
        throw std::invalid_argument("k-vector: missing e= part in '" + text + "'");
    kv.e = std::stoi(epart.substr(2));
    std::string kpart = text.substr(c2 + 1);
    if (kpart.rfind("k=", 0) != 0)
        throw std::invalid_argument("k-vector: missing k= part in '" + text + "'");
    std::stringstream ss(kpart.substr(2));
    std::string item;
    while (std::getline(ss, item, ','))
        kv.ks.push_back(std::stoi(item));
    kv.validate();
    return kv;
}

QuipuSpec to_quipu_spec(const KVector& kv) {
    kv.validate();
    int n = kv.order();
    int e = kv.e;
    QuipuSpec spec;
    spec.p = n - e + 1;
    int first_pos = 0, first_len = 0, last_len = 0;
    switch (kv.family) {
    case FamilyId::P:            first_pos = 2; first_len = 2; last_len = 2; break;
    case FamilyId::PPrime:       first_pos = 2; first_len = 2; last_len = 1; break;
    case FamilyId::PDoublePrime: first_pos = 1; first_len = 1; last_len = 1; break;
    }
    int m = first_pos;
    spec.attachments.emplace_back(m, first_len);
    for (int i = 0; i < kv.r(); ++i) {
        m += kv.ks[static_cast<size_t>(i)] + 1;
        spec.attachments.emplace_back(m, i + 1 == kv.r() ? last_len : 1);
    }
    int expected_last = (kv.family == FamilyId::P) ? n - e - 2 : n - e - 1;
    if (m != expected_last)
        throw std::logic_error("k-vector attachment bookkeeping is off");
    return spec;
}

Tree from_kvector(const KVector& kv) { return build_quipu(to_quipu_spec(kv)); }

} // namespace quipu
