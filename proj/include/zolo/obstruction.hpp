#pragma once

#include "family.hpp"
#include "planetree.hpp"

namespace zolo {

namespace obsdetail {

inline void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline const std::vector<std::vector<int>>& partitions(int n) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        partitions_rec(n, n, cur, out);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

using Multiset = std::map<int, int>;  // value -> count

inline Multiset to_multiset(const std::vector<int>& v) {
    Multiset m;
    for (int k : v) ++m[k];
    return m;
}

inline std::vector<int> to_sorted(const Multiset& m) {
    std::vector<int> v;
    for (const auto& [val, cnt] : m)
        for (int i = 0; i < cnt; ++i) v.push_back(val);
    std::sort(v.rbegin(), v.rend());
    return v;
}

// all submultisets of m with the given sum; each as value->count
inline void submultisets_with_sum(const Multiset& m, int sum,
                                  std::vector<Multiset>& out) {
    std::vector<std::pair<int, int>> items(m.begin(), m.end());
    Multiset cur;
    auto rec = [&](auto&& self, size_t idx, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (idx >= items.size()) return;
        auto [val, cnt] = items[idx];
        int maxtake = std::min(cnt, left / val);
        for (int take = maxtake; take >= 0; --take) {
            if (take) cur[val] = take;
            self(self, idx + 1, left - take * val);
            if (take) cur.erase(val);
        }
    };
    rec(rec, 0, sum);
}

}  // namespace obsdetail

/// Certificate that a full tri-passport can collapse onto a given tree:
/// which group stays intact (matching one color exactly), and how the two
/// merged groups' points distribute over the other color's vertices.
struct DegenScheme {
    int standalone_group = -1;
    bool standalone_is_white = false;
    struct Cell {
        int degree;
        std::vector<int> from_first;   // multiplicities taken from the first merged group
        std::vector<int> from_second;
    };
    std::vector<Cell> cells;
    std::array<int, 2> merged_groups{-1, -1};
};

/// Decides whether the passport admits a degeneration scheme onto the tree:
/// one group must equal a color's full degree multiset exactly (a vertex
/// cannot split into equal-valued points), and the other two groups must
/// tile the opposite color's vertices cell by cell, each cell summing to
/// the vertex degree on both sides with degree+1 points in total (the
/// derivative-root count at the collapsed vertex).
inline std::optional<DegenScheme> degeneration_feasible(const TriPassport& full,
                                                        const PlaneTree& t) {
    using namespace obsdetail;
    Passport pp = passport(t);
    const std::vector<int>& W = pp.white;
    const std::vector<int>& B = pp.black;

    for (int sg = 0; sg < 3; ++sg) {
        std::vector<int> g = full.groups[sg];
        std::sort(g.rbegin(), g.rend());
        for (bool sw : {true, false}) {
            const std::vector<int>& match = sw ? W : B;
            const std::vector<int>& other = sw ? B : W;
            if (g != match) continue;
            int ga = (sg + 1) % 3, gb = (sg + 2) % 3;
            Multiset A = to_multiset(full.groups[ga]);
            Multiset Bm = to_multiset(full.groups[gb]);
            std::vector<int> degs = other;  // nonincreasing already
            std::vector<DegenScheme::Cell> cells;
            auto rec = [&](auto&& self, size_t vi) -> bool {
                if (vi == degs.size()) {
                    return A.empty() && Bm.empty();
                }
                int k = degs[vi];
                std::vector<Multiset> sas;
                submultisets_with_sum(A, k, sas);
                for (const auto& sa : sas) {
                    int na = 0;
                    for (const auto& [val, cnt] : sa) na += cnt;
                    if (na > k) continue;
                    std::vector<Multiset> sbs;
                    submultisets_with_sum(Bm, k, sbs);
                    for (const auto& sb : sbs) {
                        int nb = 0;
                        for (const auto& [val, cnt] : sb) nb += cnt;
                        if (na + nb != k + 1) continue;
                        for (const auto& [val, cnt] : sa) {
                            A[val] -= cnt;
                            if (!A[val]) A.erase(val);
                        }
                        for (const auto& [val, cnt] : sb) {
                            Bm[val] -= cnt;
                            if (!Bm[val]) Bm.erase(val);
                        }
                        cells.push_back({k, to_sorted(sa), to_sorted(sb)});
                        if (self(self, vi + 1)) return true;
                        cells.pop_back();
                        for (const auto& [val, cnt] : sa) A[val] += cnt;
                        for (const auto& [val, cnt] : sb) Bm[val] += cnt;
                    }
                }
                return false;
            };
            if (rec(rec, 0)) {
                DegenScheme scheme;
                scheme.standalone_group = sg;
                scheme.standalone_is_white = sw;
                scheme.cells = cells;
                scheme.merged_groups = {ga, gb};
                return scheme;
            }
        }
    }
    return std::nullopt;
}

/// All canonical full tri-passports of degree n: three groups, each summing
/// to n with at least one multiple point, and 2n+1 points in total.
inline std::vector<TriPassport> all_full_tripassports(int n) {
    using namespace obsdetail;
    std::vector<std::vector<int>> parts;
    for (const auto& p : partitions(n))
        if (p[0] >= 2) parts.push_back(p);  // a critical value needs a critical point
    std::vector<TriPassport> out;
    const int m = static_cast<int>(parts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int k = j; k < m; ++k) {
                int pts = static_cast<int>(parts[i].size() + parts[j].size() + parts[k].size());
                if (pts != 2 * n + 1) continue;
                TriPassport tp;
                tp.groups = {parts[i], parts[j], parts[k]};
                tp.n = n;
                out.push_back(tp.canonical());
            }
    return out;
}

struct PairVerdict {
    bool blocked = false;
    std::vector<TriPassport> shared;  // full passports feasible for both trees
    std::vector<std::string> failures;  // per-passport notes when blocked
};

/// Necessary condition for Z-homotopy: the pair is blocked when no full
/// tri-passport admits degeneration schemes onto both trees. "blocked"
/// proves non-homotopy; "not blocked" proves nothing.
inline PairVerdict pair_obstructed(const PlaneTree& t1, const PlaneTree& t2) {
    if (t1.n_edges != t2.n_edges) throw std::invalid_argument("trees must have equal edge counts");
    PairVerdict v;
    for (const auto& tp : all_full_tripassports(t1.n_edges)) {
        bool f1 = degeneration_feasible(tp, t1).has_value();
        bool f2 = degeneration_feasible(tp, t2).has_value();
        if (f1 && f2)
            v.shared.push_back(tp);
        else if (v.shared.empty())
            v.failures.push_back(tp.str() + (f1 ? "" : " infeasible for first") +
                                 (f2 ? "" : " infeasible for second"));
    }
    v.blocked = v.shared.empty();
    if (!v.blocked) v.failures.clear();
    return v;
}

/// Same check restricted to the full refinements of a trimmed class.
inline PairVerdict pair_obstructed_in_class(const PlaneTree& t1, const PlaneTree& t2,
                                            const TriPassport& trimmed_class) {
    if (t1.n_edges != t2.n_edges) throw std::invalid_argument("trees must have equal edge counts");
    PairVerdict v;
    TriPassport full = trimmed_class.full(t1.n_edges);
    bool f1 = degeneration_feasible(full, t1).has_value();
    bool f2 = degeneration_feasible(full, t2).has_value();
    if (f1 && f2)
        v.shared.push_back(full);
    else
        v.failures.push_back(full.str() + (f1 ? "" : " infeasible for first") +
                             (f2 ? "" : " infeasible for second"));
    v.blocked = v.shared.empty();
    return v;
}

// ---------------------------------------------------------------------------
// pairwise graph over all trees with a given edge count

struct ZHomotopyGraph {
    std::vector<PlaneTree> nodes;
    std::vector<CanonicalCode> codes;
    struct PairInfo {
        int i, j;
        bool blocked;
        std::vector<TriPassport> shared;
        bool realized = false;
        std::string via;
    };
    std::vector<PairInfo> pairs;

    const PairInfo& pair(int i, int j) const {
        for (const auto& p : pairs)
            if ((p.i == i && p.j == j) || (p.i == j && p.j == i)) return p;
        throw std::out_of_range("no such pair");
    }
};

/// Blocked/not-blocked verdicts for every pair of n-edge trees; pairs whose
/// endpoints match a catalog homotopy path (run and verified) are upgraded
/// to realized.
inline ZHomotopyGraph zhomotopy_graph(int n_edges, bool realize_from_catalog = true) {
    if (n_edges > 7) throw std::invalid_argument("graph supported up to 7 edges");
    ZHomotopyGraph g;
    g.nodes = enumerate_trees(n_edges);
    for (const auto& t : g.nodes) g.codes.push_back(canonical_code(t));
    const int N = static_cast<int>(g.nodes.size());
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            PairVerdict v = pair_obstructed(g.nodes[i], g.nodes[j]);
            g.pairs.push_back({i, j, v.blocked, std::move(v.shared), false, ""});
        }
    if (realize_from_catalog) {
        for (const auto& cp : catalog_paths()) {
            if (cp.edges != n_edges) continue;
            HomotopyResult hr = track_catalog_path(cp);
            if (hr.endpoint_kinds[0] != PolyKind::Chebyshev ||
                hr.endpoint_kinds[1] != PolyKind::Chebyshev)
                continue;
            PlaneTree e0 = extract_tree(hr.endpoint_polys[0]);
            PlaneTree e1 = extract_tree(hr.endpoint_polys[1]);
            auto find_node = [&](const PlaneTree& t) {
                for (int i = 0; i < N; ++i)
                    if (isotopic_up_to_swap_and_mirror(g.nodes[i], t)) return i;
                return -1;
            };
            int i = find_node(e0), j = find_node(e1);
            if (i < 0 || j < 0 || i == j) continue;
            for (auto& p : g.pairs)
                if ((p.i == std::min(i, j)) && (p.j == std::max(i, j))) {
                    p.realized = true;
                    p.via = cp.id;
                }
        }
    }
    return g;
}

}  // namespace zolo
