#include "quipu/families.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quipu/transfer.hpp"

namespace quipu {

std::string scope_name(SearchScope s) {
    switch (s) {
    case SearchScope::FamilyP: return "FamilyP";
    case SearchScope::FamilyPPrime: return "FamilyPPrime";
    case SearchScope::FamilyPDoublePrime: return "FamilyPDoublePrime";
    case SearchScope::AllTrees: return "AllTrees";
    case SearchScope::AllGraphsSmall: return "AllGraphsSmall";
    }
    throw std::logic_error("bad scope");
}

std::string MinimizerReport::to_json(unsigned digits) const {
    nlohmann::json j;
    j["n"] = n;
    if (e > 0)
        j["e"] = e;
    j["D"] = diam;
    j["scope"] = scope_name(scope);
    j["argmin"] = nlohmann::json::array();
    for (const auto& kv : argmin)
        j["argmin"].push_back(kv.str());
    j["argmin_codes"] = argmin_codes;
    j["rho"] = nlohmann::json::parse(rho.to_json(digits));
    if (has_runner_up) {
        j["runner_up_gap"] = to_decimal(runner_up_gap, digits);
        j["gap_exact"] = gap_exact;
    }
    return j.dump();
}

std::string MinimizerReport::csv_header() { return "n,e,D,scope,argmin,rho,gap"; }

std::string MinimizerReport::csv_row(unsigned digits) const {
    std::ostringstream out;
    out << n << "," << e << "," << diam << "," << scope_name(scope) << ",";
    if (!argmin.empty()) {
        for (size_t i = 0; i < argmin.size(); ++i) {
            if (i)
                out << ";";
            out << argmin[i].str();
        }
    } else {
        for (size_t i = 0; i < argmin_codes.size(); ++i) {
            if (i)
                out << ";";
            out << argmin_codes[i];
        }
    }
    out << "," << to_decimal(rho.value, digits) << ",";
    out << (has_runner_up ? to_decimal(runner_up_gap, digits) : "");
    return out.str();
}

std::vector<KVector> enumerate_family(int n, int e, FamilyId family) {
    int r = family_arity(family, e);
    if (r < 1)
        throw std::invalid_argument("family arity must be positive (e too small)");
    std::vector<KVector> out;
    if (n < 2 * e)
        return out;
    int total = n - 2 * e;
    std::vector<int> parts(static_cast<size_t>(r), 0);
    bool mirror = family != FamilyId::PPrime;
    // iterate compositions of `total` into r nonnegative parts
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == r - 1) {
            parts[static_cast<size_t>(idx)] = remaining;
            KVector kv{family, e, parts};
            if (mirror) {
                std::vector<int> rev(parts.rbegin(), parts.rend());
                if (rev < parts)
                    return; // keep only the lexicographically minimal mirror image
            }
            out.push_back(std::move(kv));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[static_cast<size_t>(idx)] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, total);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

long balance_key(const std::vector<int>& ks) {
    int mx = *std::max_element(ks.begin(), ks.end());
    int mn = *std::min_element(ks.begin(), ks.end());
    long spread = mx - mn;
    long rough = 0;
    long rsum = std::accumulate(ks.begin(), ks.end(), 0L);
    for (int k : ks)
        rough += std::abs(static_cast<long>(k) * static_cast<long>(ks.size()) - rsum);
    return spread * 1000000 + rough;
}

// Power-iteration Rayleigh quotient in double precision: a lower bound on the
// radius up to roundoff, used as a sound one-sided screen with a wide safety
// margin.
double rayleigh_lower_bound(const Tree& t, int iters = 160) {
    int n = t.n();
    std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<size_t>(n));
    double r = 0;
    for (int it = 0; it < iters; ++it) {
        double dot = 0, norm2 = 0;
        for (int v = 0; v < n; ++v) {
            double acc = 0;
            for (int w : t.neighbors(v))
                acc += x[static_cast<size_t>(w)];
            y[static_cast<size_t>(v)] = acc;
            dot += acc * x[static_cast<size_t>(v)];
            norm2 += acc * acc;
        }
        r = dot; // x stays unit-norm
        if (norm2 == 0)
            break;
        double inv = 1.0 / std::sqrt(norm2);
        for (int v = 0; v < n; ++v)
            x[static_cast<size_t>(v)] = y[static_cast<size_t>(v)] * inv;
    }
    return r - 1e-9;
}

struct Solved {
    KVector kv;
    SpectralResult rho;
};

} // namespace

MinimizerReport family_min(int n, int e, FamilyId family, const Scalar& tol) {
    std::vector<KVector> members = enumerate_family(n, e, family);
    if (members.empty())
        throw std::invalid_argument("empty family: need n >= 2e");

    // most balanced first, so the incumbent is near-optimal immediately
    std::vector<std::pair<long, size_t>> order(members.size());
    for (size_t i = 0; i < members.size(); ++i)
        order[i] = {balance_key(members[i].ks), i};
    std::stable_sort(order.begin(), order.end());

    // Two sound one-sided screens against the incumbent:
    //   1. a double-precision Rayleigh lower bound on rho_m (far field),
    //   2. phi_m < 0 at best + delta certifies rho_m > best + delta; several
    //      rung heights, since a single low probe can land below the member's
    //      own second eigenvalue where phi turns positive again (near field).
    const Scalar guard = pow(Scalar(10), -18);
    std::vector<Scalar> rungs;
    for (const char* d : {"1e-2", "1e-3", "1e-4", "3e-6", "3e-8", "3e-11", "3e-14"})
        rungs.emplace_back(d);
    rungs.push_back(guard);

    std::vector<Solved> solved;
    bool any_screened = false;
    size_t best_idx = 0;
    Scalar ladder_base(-1);
    std::vector<TransferParams> ladder;

    for (auto [key, idx] : order) {
        const KVector& kv = members[idx];
        Tree t = from_kvector(kv);
        if (!solved.empty()) {
            const SpectralResult& best = solved[best_idx].rho;
            if (Scalar(rayleigh_lower_bound(t)) > best.hi + guard) {
                any_screened = true;
                continue;
            }
            if (best.hi != ladder_base) {
                ladder_base = best.hi;
                ladder.clear();
                for (const Scalar& d : rungs)
                    ladder.push_back(make_params(ladder_base + d));
            }
            bool dominated = false;
            for (const TransferParams& ctx : ladder)
                if (phi_kvector_at(kv, ctx) < 0) {
                    dominated = true;
                    break;
                }
            if (dominated) {
                any_screened = true;
                continue;
            }
        }
        solved.push_back({kv, rho_tree(t, tol)});
        if (solved.back().rho.value < solved[best_idx].rho.value)
            best_idx = solved.size() - 1;
    }

    const Scalar tie = tie_tolerance();
    Scalar best_value = solved[best_idx].rho.value;

    MinimizerReport rep;
    rep.n = n;
    rep.e = e;
    rep.diam = n - e;
    switch (family) {
    case FamilyId::P: rep.scope = SearchScope::FamilyP; break;
    case FamilyId::PPrime: rep.scope = SearchScope::FamilyPPrime; break;
    case FamilyId::PDoublePrime: rep.scope = SearchScope::FamilyPDoublePrime; break;
    }
    rep.rho = solved[best_idx].rho;

    Scalar runner = -1;
    for (const auto& s : solved) {
        Scalar gapv = s.rho.value - best_value;
        if (gapv <= tie) {
            rep.argmin.push_back(s.kv.canonical());
        } else if (runner < 0 || gapv < runner) {
            runner = gapv;
        }
    }
    std::sort(rep.argmin.begin(), rep.argmin.end());
    for (const auto& kv : rep.argmin)
        rep.argmin_codes.push_back(canonical_code(from_kvector(kv)));

    if (any_screened) {
        rep.has_runner_up = true;
        if (runner < 0 || guard < runner) {
            rep.runner_up_gap = guard; // screened members sit above best + guard
            rep.gap_exact = false;
        } else {
            rep.runner_up_gap = runner;
        }
    } else if (runner >= 0) {
        rep.has_runner_up = true;
        rep.runner_up_gap = runner;
    } else {
        rep.runner_up_gap = 0;
    }
    return rep;
}

std::vector<KVector> predicted_min(int n, int e) {
    auto make = [&](std::vector<int> ks) {
        KVector kv{FamilyId::P, e, std::move(ks)};
        kv.validate();
        for (int k : kv.ks)
            if (k < 0)
                throw std::invalid_argument("predicted minimizer needs larger n for this residue");
        return kv.canonical();
    };
    std::vector<KVector> out;
    int m = n - 2 * e;
    if (m < 0)
        throw std::invalid_argument("predicted_min needs n >= 2e");
    if (e == 6) {
        int k = m / 2;
        if (m % 2 == 0)
            out = {make({k, k})};
        else
            out = {make({k, k + 1})};
    } else if (e == 7) {
        int k = m / 3;
        switch (m % 3) {
        case 0: out = {make({k, k, k})}; break;
        case 1: out = {make({k, k + 1, k})}; break;
        default: out = {make({k, k + 2, k})}; break;
        }
    } else if (e == 8) {
        int k = m / 4;
        switch (m % 4) {
        case 0:
            if (k < 1)
                throw std::invalid_argument("predicted minimizer needs larger n for this residue");
            out = {make({k, k, k, k}), make({k, k, k + 1, k - 1}), make({k - 1, k + 1, k + 1, k - 1})};
            break;
        case 1: out = {make({k, k + 1, k, k})}; break;
        case 2: out = {make({k, k + 1, k + 1, k})}; break;
        default: out = {make({k, k + 1, k + 2, k})}; break;
        }
    } else {
        throw std::invalid_argument("predicted_min covers e in {6,7,8}");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<KVector> theorem_filter(int n, int e) {
    if (e < 6)
        throw std::invalid_argument("theorem_filter needs e >= 6");
    int r = e - 4;
    int total = n - 2 * e;
    if (total < 0)
        return {};
    // s = (n-2e+2)/(e-4)
    int num = n - 2 * e + 2;
    int fl = num >= 0 ? num / r : -((-num + r - 1) / r);
    int cl = num % r == 0 ? fl : fl + 1;

    std::vector<int> end_choices, mid_choices;
    for (int v : {fl - 1, fl})
        if (v >= 0)
            end_choices.push_back(v);
    for (int v = fl; v <= cl + 1; ++v)
        if (v >= 0)
            mid_choices.push_back(v);

    std::set<KVector> out;
    std::vector<int> ks(static_cast<size_t>(r));
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (remaining < 0)
            return;
        if (idx == r) {
            if (remaining != 0)
                return;
            for (int i = 1; i < r - 1; ++i) {
                for (int j : {0, r - 1}) {
                    int d = ks[static_cast<size_t>(i)] - ks[static_cast<size_t>(j)];
                    if (d < 0 || d > 2)
                        return;
                }
                for (int i2 = 1; i2 < r - 1; ++i2)
                    if (std::abs(ks[static_cast<size_t>(i)] - ks[static_cast<size_t>(i2)]) > 1)
                        return;
            }
            KVector kv{FamilyId::P, e, ks};
            out.insert(kv.canonical());
            return;
        }
        const auto& choices = (idx == 0 || idx == r - 1) ? end_choices : mid_choices;
        for (int v : choices) {
            ks[static_cast<size_t>(idx)] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, total);
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// free tree generation: canonical rooted level sequences (successor rule),
// with a center-rooted acceptance predicate picking one rooting per free tree
// ---------------------------------------------------------------------------

namespace {

Tree tree_from_level_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j)
            if (levels[static_cast<size_t>(j)] == levels[static_cast<size_t>(i)] - 1) {
                edges.emplace_back(j, i);
                break;
            }
    }
    return Tree::from_edges(n, edges);
}

} // namespace

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
    if (n < 1)
        throw std::invalid_argument("free trees need n >= 1");
    if (n == 1) {
        fn(Tree::from_edges(1, {}));
        return;
    }
    std::vector<int> levels(static_cast<size_t>(n));
    std::iota(levels.begin(), levels.end(), 1); // the path, levels 1..n
    while (true) {
        Tree t = tree_from_level_sequence(levels);
        auto cs = centers(t);
        bool root_is_center = std::find(cs.begin(), cs.end(), 0) != cs.end();
        if (root_is_center) {
            std::vector<int> best;
            for (int c : cs) {
                auto s = canonical_level_sequence(t, c);
                if (best.empty() || s > best)
                    best = std::move(s);
            }
            if (levels == best)
                fn(t);
        }
        // successor in reverse lexicographic order
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[static_cast<size_t>(i)] > 2) {
                p = i;
                break;
            }
        if (p < 0)
            break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[static_cast<size_t>(i)] == levels[static_cast<size_t>(p)] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i)
            levels[static_cast<size_t>(i)] = levels[static_cast<size_t>(i - (p - q))];
    }
}

std::vector<Tree> enumerate_trees(int n, int diam, int cap) {
    if (n > cap)
        throw std::invalid_argument("tree enumeration capped at n = " + std::to_string(cap));
    std::vector<Tree> out;
    for_each_free_tree(n, [&](const Tree& t) {
        if (diameter(t) == diam)
            out.push_back(t);
    });
    return out;
}

// ---------------------------------------------------------------------------
// connected graphs on few vertices, up to isomorphism
// ---------------------------------------------------------------------------

namespace {

using AdjMat = std::vector<std::vector<int>>;

// canonical upper-triangle bit string: minimal over all vertex permutations,
// found by backtracking with prefix pruning (bits emitted column by column)
struct CanonSearch {
    const AdjMat* a = nullptr;
    int n = 0;
    std::vector<int> best, cur; // bit strings, length n(n-1)/2
    std::vector<int> perm;      // perm[i] = original vertex at canonical slot i
    std::vector<bool> used;

    void run(int slot, int bitpos) {
        if (slot == n) {
            if (cur < best)
                best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)])
                continue;
            for (int j = 0; j < slot; ++j)
                cur[static_cast<size_t>(bitpos + j)] =
                    (*a)[static_cast<size_t>(perm[static_cast<size_t>(j)])][static_cast<size_t>(v)];
            // compare the filled prefix against the current best
            bool worse = false;
            for (int t = 0; t < bitpos + slot; ++t) {
                if (cur[static_cast<size_t>(t)] != best[static_cast<size_t>(t)]) {
                    worse = cur[static_cast<size_t>(t)] > best[static_cast<size_t>(t)];
                    break;
                }
            }
            if (worse)
                continue;
            perm[static_cast<size_t>(slot)] = v;
            used[static_cast<size_t>(v)] = true;
            run(slot + 1, bitpos + slot);
            used[static_cast<size_t>(v)] = false;
        }
    }
};

uint64_t canonical_bits(const AdjMat& a) {
    int n = static_cast<int>(a.size());
    int total = n * (n - 1) / 2;
    CanonSearch cs;
    cs.a = &a;
    cs.n = n;
    cs.best.assign(static_cast<size_t>(total), 0);
    // seed with the identity permutation
    {
        int pos = 0;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j, ++pos)
                cs.best[static_cast<size_t>(pos)] = a[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    cs.cur.assign(static_cast<size_t>(total), 0);
    cs.perm.assign(static_cast<size_t>(n), 0);
    cs.used.assign(static_cast<size_t>(n), false);
    cs.run(0, 0);
    uint64_t bits = 0;
    for (int pos = 0; pos < total; ++pos)
        if (cs.best[static_cast<size_t>(pos)])
            bits |= 1ull << pos;
    return bits;
}

// column-major upper triangle, matching the emission order of CanonSearch
AdjMat from_bits(int n, uint64_t bits) {
    AdjMat a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    int pos = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j, ++pos)
            if (bits >> pos & 1) {
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
                a[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
            }
    return a;
}

} // namespace

void for_each_connected_graph(int n, const std::function<void(const AdjMat&)>& fn) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("connected graph enumeration supports 1 <= n <= 10");
    if (n > 8)
        throw std::invalid_argument("connected graph enumeration is practical only up to n = 8");
    // grow by one vertex at a time; every connected graph on m vertices arises
    // from a connected graph on m-1 by attaching a vertex with nonempty
    // neighborhood, so canonical dedup per level is exhaustive
    std::set<uint64_t> level = {0}; // K1
    for (int m = 2; m <= n; ++m) {
        std::set<uint64_t> next;
        for (uint64_t bits : level) {
            AdjMat a = from_bits(m - 1, bits);
            AdjMat b(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
            for (int i = 0; i < m - 1; ++i)
                for (int j = 0; j < m - 1; ++j)
                    b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (uint64_t nbhd = 1; nbhd < (1ull << (m - 1)); ++nbhd) {
                for (int i = 0; i < m - 1; ++i) {
                    int bit = static_cast<int>(nbhd >> i & 1);
                    b[static_cast<size_t>(i)][static_cast<size_t>(m - 1)] = bit;
                    b[static_cast<size_t>(m - 1)][static_cast<size_t>(i)] = bit;
                }
                next.insert(canonical_bits(b));
            }
        }
        level = std::move(next);
    }
    for (uint64_t bits : level)
        fn(from_bits(n, bits));
}

// ---------------------------------------------------------------------------
// brute-force minimizers
// ---------------------------------------------------------------------------

namespace {

int graph_diameter(const AdjMat& a) {
    int n = static_cast<int>(a.size());
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::vector<int> q = {s};
        dist[static_cast<size_t>(s)] = 0;
        for (size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int v = 0; v < n; ++v)
                if (a[static_cast<size_t>(u)][static_cast<size_t>(v)] && dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    q.push_back(v);
                }
        }
        for (int d : dist) {
            if (d < 0)
                return -1; // disconnected
            best = std::max(best, d);
        }
    }
    return best;
}

std::string graph_code(const AdjMat& a) {
    int n = static_cast<int>(a.size());
    uint64_t bits = canonical_bits(a);
    std::ostringstream out;
    out << "g:" << n << ":";
    AdjMat c = from_bits(n, bits);
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                if (!first)
                    out << ",";
                out << i << "-" << j;
                first = false;
            }
    return out.str();
}

MinimizerReport brute_min_trees(int n, int diam, const Scalar& tol, int cap) {
    if (n > cap)
        throw std::invalid_argument("tree enumeration capped at n = " + std::to_string(cap));
    const Scalar tie = tie_tolerance();
    Scalar guard = pow(Scalar(10), -18);

    struct Entry {
        std::string code;
        SpectralResult rho;
    };
    std::vector<Entry> solved;
    bool any_screened = false;
    int candidates = 0;

    for_each_free_tree(n, [&](const Tree& t) {
        if (diameter(t) != diam)
            return;
        ++candidates;
        IntPolynomial phi = charpoly_tree(t);
        if (!solved.empty()) {
            const SpectralResult& best =
                std::min_element(solved.begin(), solved.end(), [](const Entry& a, const Entry& b) {
                    return a.rho.value < b.rho.value;
                })->rho;
            if (eval_poly(phi, best.hi + guard) < 0) {
                any_screened = true;
                return;
            }
        }
        solved.push_back({canonical_code(t), rho_tree(t, tol)});
    });
    if (candidates == 0)
        throw std::invalid_argument("no tree of order " + std::to_string(n) + " has diameter " +
                                    std::to_string(diam));

    Scalar best_value = solved.front().rho.value;
    size_t best_idx = 0;
    for (size_t i = 1; i < solved.size(); ++i)
        if (solved[i].rho.value < best_value) {
            best_value = solved[i].rho.value;
            best_idx = i;
        }

    MinimizerReport rep;
    rep.n = n;
    rep.e = n - diam;
    rep.diam = diam;
    rep.scope = SearchScope::AllTrees;
    rep.rho = solved[best_idx].rho;
    Scalar runner = -1;
    for (const auto& s : solved) {
        Scalar gapv = s.rho.value - best_value;
        if (gapv <= tie)
            rep.argmin_codes.push_back(s.code);
        else if (runner < 0 || gapv < runner)
            runner = gapv;
    }
    std::sort(rep.argmin_codes.begin(), rep.argmin_codes.end());
    if (any_screened) {
        rep.has_runner_up = true;
        rep.runner_up_gap = (runner < 0 || guard < runner) ? guard : runner;
        rep.gap_exact = !(runner < 0 || guard < runner);
    } else if (runner >= 0) {
        rep.has_runner_up = true;
        rep.runner_up_gap = runner;
    } else {
        rep.runner_up_gap = 0;
    }
    return rep;
}

MinimizerReport brute_min_graphs(int n, int diam, const Scalar& tol, int cap) {
    if (n > cap)
        throw std::invalid_argument("graph enumeration capped at n = " + std::to_string(cap));
    const Scalar tie = tie_tolerance();
    struct Entry {
        std::string code;
        SpectralResult rho;
    };
    std::vector<Entry> solved;
    int candidates = 0;
    for_each_connected_graph(n, [&](const AdjMat& a) {
        if (graph_diameter(a) != diam)
            return;
        ++candidates;
        IntPolynomial phi = charpoly_det_adj(a);
        solved.push_back({graph_code(a), rho_of_poly_sturm(phi, BigRat(n + 1), tol)});
    });
    if (candidates == 0)
        throw std::invalid_argument("no connected graph of order " + std::to_string(n) +
                                    " has diameter " + std::to_string(diam));
    Scalar best_value = solved.front().rho.value;
    size_t best_idx = 0;
    for (size_t i = 1; i < solved.size(); ++i)
        if (solved[i].rho.value < best_value) {
            best_value = solved[i].rho.value;
            best_idx = i;
        }
    MinimizerReport rep;
    rep.n = n;
    rep.e = n - diam;
    rep.diam = diam;
    rep.scope = SearchScope::AllGraphsSmall;
    rep.rho = solved[best_idx].rho;
    Scalar runner = -1;
    for (const auto& s : solved) {
        Scalar gapv = s.rho.value - best_value;
        if (gapv <= tie)
            rep.argmin_codes.push_back(s.code);
        else if (runner < 0 || gapv < runner)
            runner = gapv;
    }
    std::sort(rep.argmin_codes.begin(), rep.argmin_codes.end());
    rep.has_runner_up = runner >= 0;
    rep.runner_up_gap = runner >= 0 ? runner : Scalar(0);
    return rep;
}

} // namespace

MinimizerReport brute_min(int n, int diam, const Scalar& tol, SearchScope scope, int cap) {
    if (scope == SearchScope::AllTrees)
        return brute_min_trees(n, diam, tol, cap);
    if (scope == SearchScope::AllGraphsSmall)
        return brute_min_graphs(n, diam, tol, std::min(cap, 8));
    throw std::invalid_argument("brute_min supports the AllTrees and AllGraphsSmall scopes");
}

} // namespace quipu
