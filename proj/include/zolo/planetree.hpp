#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "common.hpp"

namespace zolo {

/// Plane tree with a rotation system: neighbors listed counterclockwise
/// around each vertex. Vertices carry a proper 2-coloring (3 colors for
/// lifted graphs converted back to trees).
struct PlaneTree {
    struct Vertex {
        int id = 0;
        Color color = Color::White;
        std::vector<int> neighbors;  // vertex ids, ccw
    };
    std::vector<Vertex> vertices;  // vertices[i].id == i after validation
    int n_edges = 0;

    const Vertex& vertex(int id) const { return vertices[id]; }
    int degree(int id) const { return static_cast<int>(vertices[id].neighbors.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

inline void check_tree(const PlaneTree& t) {
    const int V = t.vertex_count();
    int edge_ends = 0;
    for (const auto& v : t.vertices) {
        std::set<int> seen;
        for (int w : v.neighbors) {
            if (w < 0 || w >= V) throw BadRotation("neighbor id out of range");
            if (w == v.id) throw NotATree("self-loop");
            if (!seen.insert(w).second)
                throw BadRotation("edge repeated in rotation at vertex " + std::to_string(v.id));
            const auto& nb = t.vertices[w].neighbors;
            if (std::count(nb.begin(), nb.end(), v.id) != 1)
                throw BadRotation("asymmetric adjacency between " + std::to_string(v.id) +
                                  " and " + std::to_string(w));
            if (t.vertices[w].color == v.color)
                throw ColorClash("adjacent vertices " + std::to_string(v.id) + "," +
                                 std::to_string(w) + " share a color");
        }
        edge_ends += static_cast<int>(v.neighbors.size());
    }
    const int E = edge_ends / 2;
    if (E != V - 1) throw NotATree("edge count != vertex count - 1");
    if (E != t.n_edges) throw NotATree("n_edges mismatch");
    // connectivity
    if (V == 0) throw NotATree("empty");
    std::vector<char> vis(V, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.vertices[v].neighbors)
            if (!vis[w]) { vis[w] = 1; ++cnt; stack.push_back(w); }
    }
    if (cnt != V) throw NotATree("disconnected");
}

}  // namespace detail

/// Validates and normalizes a tree description. Vertex ids may be arbitrary
/// integers; they are remapped to 0..V-1 preserving ascending id order.
inline PlaneTree build_tree(const std::vector<PlaneTree::Vertex>& spec) {
    std::vector<PlaneTree::Vertex> vs = spec;
    std::sort(vs.begin(), vs.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    std::map<int, int> remap;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (!remap.emplace(vs[i].id, static_cast<int>(i)).second)
            throw NotATree("duplicate vertex id " + std::to_string(vs[i].id));
    }
    PlaneTree t;
    t.vertices.resize(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) {
        auto& v = t.vertices[i];
        v.id = static_cast<int>(i);
        v.color = vs[i].color;
        for (int w : vs[i].neighbors) {
            auto it = remap.find(w);
            if (it == remap.end()) throw BadRotation("neighbor id unknown: " + std::to_string(w));
            v.neighbors.push_back(it->second);
        }
    }
    int ends = 0;
    for (const auto& v : t.vertices) ends += static_cast<int>(v.neighbors.size());
    t.n_edges = ends / 2;
    detail::check_tree(t);
    return t;
}

inline PlaneTree mirror(const PlaneTree& t) {
    PlaneTree m = t;
    for (auto& v : m.vertices) std::reverse(v.neighbors.begin(), v.neighbors.end());
    return m;
}

inline PlaneTree swap_colors(const PlaneTree& t) {
    PlaneTree s = t;
    for (auto& v : s.vertices) {
        if (v.color == Color::White) v.color = Color::Black;
        else if (v.color == Color::Black) v.color = Color::White;
    }
    return s;
}

inline bool is_chain(const PlaneTree& t) {
    for (const auto& v : t.vertices)
        if (v.neighbors.size() > 2) return false;
    return true;
}

/// Star in the z^n sense: a single vertex adjacent to everything, with
/// multiplicity >= 3 (degree <= 2 cases stay; they are chains).
inline bool is_star(const PlaneTree& t) {
    if (t.n_edges < 3) return false;
    for (const auto& v : t.vertices)
        if (static_cast<int>(v.neighbors.size()) == t.n_edges) return true;
    return false;
}

// ---------------------------------------------------------------------------
// canonical codes

struct CanonicalCode {
    std::string code;
    std::string mirror_code;
    bool operator==(const CanonicalCode&) const = default;
};

namespace detail {

inline void encode_subtree(const PlaneTree& t, int v, int parent, std::string& out) {
    out += color_char(t.vertices[v].color);
    out += '(';
    const auto& nb = t.vertices[v].neighbors;
    const int d = static_cast<int>(nb.size());
    int start = 0;
    while (start < d && nb[start] != parent) ++start;
    for (int k = 1; k <= d; ++k) {
        int w = nb[(start + k) % d];
        if (w == parent) continue;
        encode_subtree(t, w, v, out);
    }
    out += ')';
}

inline std::string min_rooted_code(const PlaneTree& t) {
    if (t.n_edges == 0) {
        return std::string(1, color_char(t.vertices[0].color)) + "()";
    }
    std::string best;
    std::string cur;
    for (const auto& v : t.vertices) {
        const auto& nb = v.neighbors;
        const int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i) {
            cur.clear();
            cur += color_char(v.color);
            cur += '(';
            for (int k = 0; k < d; ++k) encode_subtree(t, nb[(i + k) % d], v.id, cur);
            cur += ')';
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

}  // namespace detail

/// Deterministic isotopy invariant: two trees are orientation-preserving
/// isotopic iff codes match. The mirror code distinguishes reflections.
inline CanonicalCode canonical_code(const PlaneTree& t) {
    CanonicalCode c;
    c.code = detail::min_rooted_code(t);
    c.mirror_code = detail::min_rooted_code(mirror(t));
    return c;
}

inline bool isotopic(const PlaneTree& a, const PlaneTree& b) {
    return detail::min_rooted_code(a) == detail::min_rooted_code(b);
}

inline bool isotopic_up_to_color_swap(const PlaneTree& a, const PlaneTree& b) {
    auto ca = detail::min_rooted_code(a);
    return ca == detail::min_rooted_code(b) || ca == detail::min_rooted_code(swap_colors(b));
}

inline bool isotopic_up_to_mirror(const PlaneTree& a, const PlaneTree& b) {
    auto ca = canonical_code(a);
    auto cb = canonical_code(b);
    return ca.code == cb.code || ca.code == cb.mirror_code;
}

inline bool isotopic_up_to_swap_and_mirror(const PlaneTree& a, const PlaneTree& b) {
    return isotopic_up_to_mirror(a, b) || isotopic_up_to_mirror(a, swap_colors(b));
}

/// Canonical coloring of the two-coloring pair: the side with the larger
/// critical (degree >= 2) multiplicity sum is white; ties pick the smaller
/// canonical code. Matches the value normalization convention, so solving
/// and re-extracting an oriented tree reproduces it exactly.
inline PlaneTree orient_canonical(const PlaneTree& t) {
    int sw = 0, sb = 0;
    for (const auto& v : t.vertices) {
        int d = static_cast<int>(v.neighbors.size());
        if (d >= 2) (v.color == Color::White ? sw : sb) += d;
    }
    if (sw > sb) return t;
    if (sb > sw) return swap_colors(t);
    PlaneTree s = swap_colors(t);
    return detail::min_rooted_code(t) <= detail::min_rooted_code(s) ? t : s;
}

// ---------------------------------------------------------------------------
// passports

struct Passport {
    std::vector<int> white;  // nonincreasing
    std::vector<int> black;
    bool trimmed = false;

    bool operator==(const Passport&) const = default;

    Passport trim() const {
        Passport p{{}, {}, true};
        for (int k : white) if (k != 1) p.white.push_back(k);
        for (int k : black) if (k != 1) p.black.push_back(k);
        return p;
    }
    std::string str() const {
        auto seq = [](const std::vector<int>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
            return s;
        };
        return "<" + seq(white) + "|" + seq(black) + ">";
    }
};

inline Passport passport(const PlaneTree& t) {
    Passport p;
    for (const auto& v : t.vertices) {
        auto& side = v.color == Color::White ? p.white : p.black;
        side.push_back(static_cast<int>(v.neighbors.size()));
    }
    std::sort(p.white.rbegin(), p.white.rend());
    std::sort(p.black.rbegin(), p.black.rend());
    return p;
}

/// Multiplicity groups of the three critical values, nonincreasing inside
/// each group. Canonical form sorts the groups themselves descending
/// lexicographically (a longer group with equal prefix counts as larger).
struct TriPassport {
    std::array<std::vector<int>, 3> groups;
    int n = 0;
    bool trimmed = false;

    bool operator==(const TriPassport&) const = default;

    static bool group_less(const std::vector<int>& a, const std::vector<int>& b) {
        size_t m = std::min(a.size(), b.size());
        for (size_t i = 0; i < m; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }

    TriPassport canonical() const {
        TriPassport c = *this;
        for (auto& g : c.groups) std::sort(g.rbegin(), g.rend());
        std::sort(c.groups.begin(), c.groups.end(),
                  [](const auto& a, const auto& b) { return group_less(b, a); });
        return c;
    }

    TriPassport trim() const {
        TriPassport p = canonical();
        p.trimmed = true;
        for (auto& g : p.groups) {
            std::erase(g, 1);
        }
        return p;
    }

    /// Pads every group with 1-entries until it sums to n.
    TriPassport full(int degree) const {
        TriPassport p = *this;
        p.n = degree;
        p.trimmed = false;
        for (auto& g : p.groups) {
            int s = 0;
            for (int k : g) s += k;
            if (s > degree) throw std::runtime_error("group sum exceeds degree");
            g.insert(g.end(), degree - s, 1);
        }
        return p.canonical();
    }

    int point_count() const {
        return static_cast<int>(groups[0].size() + groups[1].size() + groups[2].size());
    }

    std::string str() const {
        std::string s = "<";
        for (int i = 0; i < 3; ++i) {
            if (i) s += "|";
            for (size_t j = 0; j < groups[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(groups[i][j]);
            }
        }
        return s + ">";
    }
};

// ---------------------------------------------------------------------------
// enumeration

struct EnumerateOpts {
    bool mirror_classes = false;
    bool include_stars = false;
};

namespace detail {

// all rooted plane trees with n edges, as children lists in Dyck order
inline void dyck_trees(int n, std::vector<std::vector<std::vector<int>>>& out) {
    // tree under construction: adjacency children lists; path = stack of open vertices
    std::vector<std::vector<int>> child{{}};
    std::vector<int> stack{0};
    std::string word;
    auto rec = [&](auto&& self, int opened, int closed) -> void {
        if (opened == n && closed == n) {
            out.push_back(child);
            return;
        }
        if (opened < n) {
            int v = static_cast<int>(child.size());
            child.push_back({});
            child[stack.back()].push_back(v);
            stack.push_back(v);
            self(self, opened + 1, closed);
            stack.pop_back();
            child.pop_back();
            child[stack.back()].pop_back();
        }
        if (closed < opened && stack.size() > 1) {
            int v = stack.back();
            stack.pop_back();
            self(self, opened, closed + 1);
            stack.push_back(v);
        }
    };
    rec(rec, 0, 0);
}

inline PlaneTree tree_from_children(const std::vector<std::vector<int>>& child) {
    PlaneTree t;
    const int V = static_cast<int>(child.size());
    t.vertices.resize(V);
    t.n_edges = V - 1;
    // colors by depth parity, neighbors: parent first, then children in order
    std::vector<int> parent(V, -1), depth(V, 0), order;
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int c : child[v]) {
            parent[c] = v;
            depth[c] = depth[v] + 1;
            order.push_back(c);
        }
    }
    for (int v = 0; v < V; ++v) {
        auto& vx = t.vertices[v];
        vx.id = v;
        vx.color = depth[v] % 2 == 0 ? Color::White : Color::Black;
        if (parent[v] >= 0) vx.neighbors.push_back(parent[v]);
        for (int c : child[v]) vx.neighbors.push_back(c);
    }
    return t;
}

}  // namespace detail

/// One representative per isotopy class of plane trees with n edges,
/// quotienting by color swap (and by mirror when requested). Stars are
/// excluded unless asked for. Output sorted by canonical code.
inline std::vector<PlaneTree> enumerate_trees(int n_edges, EnumerateOpts opts = {}) {
    if (n_edges < 1) throw std::invalid_argument("n_edges must be >= 1");
    std::vector<std::vector<std::vector<int>>> shapes;
    detail::dyck_trees(n_edges, shapes);
    std::map<std::string, PlaneTree> reps;
    for (const auto& sh : shapes) {
        PlaneTree t = detail::tree_from_children(sh);
        if (!opts.include_stars && is_star(t)) continue;
        PlaneTree s = swap_colors(t);
        std::string ct = detail::min_rooted_code(t);
        std::string cs = detail::min_rooted_code(s);
        std::string key = std::min(ct, cs);
        if (opts.mirror_classes) {
            PlaneTree tm = mirror(t);
            PlaneTree sm = mirror(s);
            key = std::min({key, detail::min_rooted_code(tm), detail::min_rooted_code(sm)});
        }
        if (reps.count(key)) continue;
        reps.emplace(key, orient_canonical(t));
    }
    std::vector<PlaneTree> out;
    out.reserve(reps.size());
    for (auto& [k, t] : reps) out.push_back(std::move(t));
    return out;
}

// ---------------------------------------------------------------------------
// JSON form: {"n_edges": k, "vertices": [{"id", "color", "neighbors"}]}

inline nlohmann::json tree_to_json(const PlaneTree& t) {
    nlohmann::json j;
    j["n_edges"] = t.n_edges;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : t.vertices) {
        j["vertices"].push_back({{"id", v.id},
                                 {"color", color_name(v.color)},
                                 {"neighbors", v.neighbors}});
    }
    return j;
}

inline PlaneTree tree_from_json(const nlohmann::json& j) {
    std::vector<PlaneTree::Vertex> vs;
    for (const auto& jv : j.at("vertices")) {
        PlaneTree::Vertex v;
        v.id = jv.at("id").get<int>();
        v.color = color_from_name(jv.at("color").get<std::string>());
        v.neighbors = jv.at("neighbors").get<std::vector<int>>();
        vs.push_back(std::move(v));
    }
    PlaneTree t = build_tree(vs);
    if (j.contains("n_edges") && j.at("n_edges").get<int>() != t.n_edges)
        throw NotATree("n_edges field disagrees with adjacency");
    return t;
}

}  // namespace zolo
