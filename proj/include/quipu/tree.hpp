#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace quipu {

// Simple undirected tree on vertices 0..n-1, immutable once built.
class Tree {
public:
    // Validates: n >= 1, exactly n-1 distinct edges, connected, no loops.
    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Tree path(int n);
    static Tree star(int leaves);

    int n() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;

    // BFS distances from src.
    std::vector<int> distances(int src) const;

private:
    explicit Tree(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}
    std::vector<std::vector<int>> adj_;
};

// Exact diameter by double BFS sweep (exact on trees).
int diameter(const Tree& t);

// Eccentricity centers: one or two vertices.
std::vector<int> centers(const Tree& t);

// Centroid(s): vertices minimizing the largest component of t - v.
std::vector<int> centroids(const Tree& t);

// New tree on n+1 vertices with edge uv replaced by u-w-v (w gets label n).
Tree subdivide_edge(const Tree& t, int u, int v);

// Tree with vertex v removed, as separate component trees.
std::vector<Tree> remove_vertex(const Tree& t, int v);

// Relabeled copy: vertex v of the result is perm[v] of the input.
Tree relabeled(const Tree& t, const std::vector<int>& perm);

// Rooted canonical level sequence (children ordered so the preorder level list
// is lexicographically maximal). Used for both isomorphism codes and the
// free-tree generator's acceptance rule.
std::vector<int> canonical_level_sequence(const Tree& t, int root);

// Isomorphism-invariant code, rooted at the eccentricity center(s).
// Equal codes iff the trees are isomorphic.
std::string canonical_code(const Tree& t);

// True when the edge uv lies on an internal path (a path whose two endpoints
// have degree > 2 and whose interior vertices have degree 2; here endpoints
// of the edge's maximal degree-<=2 run must both lead to branch vertices).
bool edge_on_internal_path(const Tree& t, int u, int v);

// Edge-list text format: first line "n", then one "u v" line per edge.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
std::string write_edge_list(const Tree& t);

// A path on p vertices (0 ~ 1 ~ ... ~ p-1) with a pendant path of n_i extra
// vertices hanging from main-path position m_i.
struct QuipuSpec {
    int p = 0;
    std::vector<std::pair<int, int>> attachments; // (m_i, n_i), strictly increasing m_i

    int realized_order() const;
    void validate() const; // throws std::invalid_argument
};

// Main path labeled 0..p-1 in order; pendant path i occupies the next n_i
// labels, nearest-to-main-path first.
Tree build_quipu(const QuipuSpec& spec);

enum class FamilyId { P, PPrime, PDoublePrime };

std::string family_name(FamilyId f);              // "P", "P1", "P2"
FamilyId family_from_name(const std::string& s);

// Internal-path parametrization of a family member: r interior counts
// k_1..k_r with r = e-4 (P), e-3 (P1), e-2 (P2); order n = sum(k) + 2e and
// diameter n - e.
struct KVector {
    FamilyId family = FamilyId::P;
    int e = 0;
    std::vector<int> ks;

    int r() const { return static_cast<int>(ks.size()); }
    int order() const;
    int diam() const { return order() - e; }
    void validate() const; // throws std::invalid_argument

    KVector reversed() const;
    // Lexicographically smaller of (ks, reverse(ks)) for the mirror-symmetric
    // families P and P2; identity for P1.
    KVector canonical() const;

    std::string str() const; // "P:e=6:k=3,4"
    static KVector parse(const std::string& text);

    bool operator==(const KVector& o) const = default;
    bool operator<(const KVector& o) const;
};

int family_arity(FamilyId f, int e); // r for the family at this e

QuipuSpec to_quipu_spec(const KVector& kv);
Tree from_kvector(const KVector& kv);

} // namespace quipu
