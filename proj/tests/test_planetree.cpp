#include <catch2/catch_amalgamated.hpp>

#include <zolo/catalog.hpp>
#include <zolo/planetree.hpp>

using namespace zolo;

namespace {

PlaneTree single_edge() {
    return build_tree({{0, Color::White, {1}}, {1, Color::Black, {0}}});
}

// exhaustive rotation-system generation over labeled trees (Pruefer), used
// as the enumeration oracle; shares only canonical_code with the library
int oracle_count(int n_edges, bool include_stars) {
    const int V = n_edges + 1;
    std::set<std::string> classes;
    std::vector<int> pruefer(std::max(0, V - 2), 0);
    auto handle_tree = [&](const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::vector<int>> adj(V);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        // all rotation assignments: permute each adjacency beyond the first entry
        std::vector<std::vector<std::vector<int>>> rots(V);
        for (int v = 0; v < V; ++v) {
            std::vector<int> base = adj[v];
            std::sort(base.begin() + (base.empty() ? 0 : 1), base.end());
            if (base.size() <= 1) {
                rots[v] = {base};
                continue;
            }
            std::vector<int> tail(base.begin() + 1, base.end());
            std::sort(tail.begin(), tail.end());
            do {
                std::vector<int> r{base[0]};
                r.insert(r.end(), tail.begin(), tail.end());
                rots[v].push_back(r);
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
        // 2-coloring by BFS parity
        std::vector<int> depth(V, -1);
        depth[0] = 0;
        std::vector<int> order{0};
        for (size_t i = 0; i < order.size(); ++i)
            for (int w : adj[order[i]])
                if (depth[w] < 0) {
                    depth[w] = depth[order[i]] + 1;
                    order.push_back(w);
                }
        std::vector<size_t> idx(V, 0);
        while (true) {
            std::vector<PlaneTree::Vertex> vs(V);
            for (int v = 0; v < V; ++v) {
                vs[v].id = v;
                vs[v].color = depth[v] % 2 ? Color::Black : Color::White;
                vs[v].neighbors = rots[v][idx[v]];
            }
            PlaneTree t = build_tree(vs);
            if (include_stars || !is_star(t)) {
                auto c = detail::min_rooted_code(t);
                auto cs = detail::min_rooted_code(swap_colors(t));
                classes.insert(std::min(c, cs));
            }
            int k = 0;
            while (k < V && idx[k] + 1 == rots[k].size()) idx[k++] = 0;
            if (k == V) break;
            ++idx[k];
        }
    };
    if (V == 2) {
        handle_tree({{0, 1}});
        return static_cast<int>(classes.size());
    }
    // iterate all Pruefer sequences
    while (true) {
        // decode
        std::vector<int> deg(V, 1);
        for (int x : pruefer) ++deg[x];
        std::set<int> leaves;
        for (int v = 0; v < V; ++v)
            if (deg[v] == 1) leaves.insert(v);
        std::vector<std::pair<int, int>> edges;
        std::vector<int> seq = pruefer;
        for (int x : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({leaf, x});
            if (--deg[x] == 1) leaves.insert(x);
        }
        int u = *leaves.begin(), w = *std::next(leaves.begin());
        edges.push_back({u, w});
        handle_tree(edges);
        int k = static_cast<int>(pruefer.size()) - 1;
        while (k >= 0 && pruefer[k] == V - 1) pruefer[k--] = 0;
        if (k < 0) break;
        ++pruefer[k];
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("build_tree accepts the smallest tree") {
    PlaneTree t = single_edge();
    CHECK(t.n_edges == 1);
    CHECK(t.vertex_count() == 2);
}

TEST_CASE("build_tree rejects bad input") {
    CHECK_THROWS_AS(build_tree({{0, Color::White, {1}}, {1, Color::White, {0}}}), ColorClash);
    CHECK_THROWS_AS(build_tree({{0, Color::White, {1}},
                                {1, Color::Black, {0}},
                                {2, Color::Black, {3}},
                                {3, Color::White, {2}}}),
                    NotATree);  // disconnected
    CHECK_THROWS_AS(build_tree({{0, Color::White, {1}}, {1, Color::Black, {}}}), BadRotation);
    // 4-cycle
    CHECK_THROWS_AS(build_tree({{0, Color::White, {1, 3}},
                                {1, Color::Black, {0, 2}},
                                {2, Color::White, {1, 3}},
                                {3, Color::Black, {2, 0}}}),
                    NotATree);
}

TEST_CASE("passport of the figure tree") {
    PlaneTree t = reference_example_tree();
    Passport p = passport(t);
    CHECK(p.white == std::vector<int>{3, 2});
    CHECK(p.black == std::vector<int>{2, 1, 1, 1});
}

TEST_CASE("passports of five-edge references") {
    CHECK(passport(reference_tree("five_edge", "T5")).white == std::vector<int>{2, 2, 1});
    CHECK(passport(reference_tree("five_edge", "T5")).black == std::vector<int>{2, 2, 1});
    CHECK(passport(reference_tree("five_edge", "T3")).white == std::vector<int>{3, 1, 1});
    CHECK(passport(reference_tree("five_edge", "T3")).black == std::vector<int>{3, 1, 1});
}

TEST_CASE("canonical code invariance under relabeling and rotation") {
    PlaneTree t = reference_tree("five_edge", "T2");
    auto code0 = canonical_code(t);

    // relabel: reverse ids
    std::vector<PlaneTree::Vertex> vs;
    int V = t.vertex_count();
    for (const auto& v : t.vertices) {
        PlaneTree::Vertex w;
        w.id = V - 1 - v.id;
        w.color = v.color;
        for (int u : v.neighbors) w.neighbors.push_back(V - 1 - u);
        vs.push_back(w);
    }
    CHECK(canonical_code(build_tree(vs)) == code0);

    // rotate every cyclic list
    vs.clear();
    for (const auto& v : t.vertices) {
        PlaneTree::Vertex w = v;
        if (w.neighbors.size() > 1)
            std::rotate(w.neighbors.begin(), w.neighbors.begin() + 1, w.neighbors.end());
        vs.push_back(w);
    }
    CHECK(canonical_code(build_tree(vs)) == code0);
}

TEST_CASE("mirror pairs and symmetric trees") {
    PlaneTree t7 = reference_tree("six_edge", "T7");
    PlaneTree t8 = six_edge_tree("T8");
    auto c7 = canonical_code(t7), c8 = canonical_code(t8);
    CHECK(c7.code != c8.code);
    CHECK(c7.code == c8.mirror_code);
    CHECK(c7.mirror_code == c8.code);

    PlaneTree chain = reference_tree("six_edge", "T13");
    auto cc = canonical_code(chain);
    CHECK(cc.code == cc.mirror_code);

    PlaneTree t10 = reference_tree("six_edge", "T10");
    CHECK(isotopic(mirror(t10), six_edge_tree("T11")));
    CHECK(isotopic(mirror(mirror(t10)), t10));
    CHECK_FALSE(isotopic(t10, six_edge_tree("T11")));
}

TEST_CASE("mirror is an involution and passport-invariant") {
    for (const auto& lab : {"T1", "T2", "T3", "T4", "T5"}) {
        PlaneTree t = reference_tree("five_edge", lab);
        CHECK(isotopic(mirror(mirror(t)), t));
        CHECK(passport(mirror(t)) == passport(t));
    }
}

TEST_CASE("is_chain") {
    CHECK(is_chain(reference_tree("five_edge", "T5")));
    CHECK_FALSE(is_chain(reference_tree("five_edge", "T1")));
    CHECK(is_chain(single_edge()));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(2).size() == 1);
    CHECK(enumerate_trees(5).size() == 5);
    CHECK(enumerate_trees(6).size() == 13);
    CHECK(enumerate_trees(6, {.mirror_classes = true}).size() == 11);
    CHECK(enumerate_trees(5, {.include_stars = true}).size() == 6);
    CHECK(enumerate_trees(6, {.include_stars = true}).size() == 14);
}

TEST_CASE("enumeration against the exhaustive oracle") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(static_cast<int>(enumerate_trees(n, {.include_stars = true}).size()) ==
              oracle_count(n, true));
        CHECK(static_cast<int>(enumerate_trees(n).size()) == oracle_count(n, false));
    }
}

TEST_CASE("enumerated representatives are valid and distinct") {
    for (int n : {4, 5, 6}) {
        auto trees = enumerate_trees(n);
        std::set<std::string> codes;
        for (const auto& t : trees) {
            CHECK(t.vertex_count() == n + 1);
            Passport p = passport(t);
            int ws = 0, bs = 0;
            for (int k : p.white) ws += k;
            for (int k : p.black) bs += k;
            CHECK(ws == n);
            CHECK(bs == n);
            codes.insert(canonical_code(t).code);
        }
        CHECK(codes.size() == trees.size());
        // color-swap classes are distinct too
        std::set<std::string> keys;
        for (const auto& t : trees)
            keys.insert(std::min(detail::min_rooted_code(t),
                                 detail::min_rooted_code(swap_colors(t))));
        CHECK(keys.size() == trees.size());
    }
}

TEST_CASE("five-edge enumeration matches the reference trees") {
    auto trees = enumerate_trees(5);
    for (const auto& lab : {"T1", "T2", "T3", "T4", "T5"}) {
        PlaneTree ref = reference_tree("five_edge", lab);
        int hits = 0;
        for (const auto& t : trees)
            if (isotopic_up_to_color_swap(t, ref)) ++hits;
        CAPTURE(lab);
        CHECK(hits == 1);
    }
}

TEST_CASE("six-edge enumeration covers all thirteen labels") {
    auto trees = enumerate_trees(6);
    std::vector<std::string> labels{"T1", "T2", "T3", "T4", "T5", "T6", "T7",
                                    "T8", "T9", "T10", "T11", "T12", "T13"};
    for (const auto& lab : labels) {
        PlaneTree ref = six_edge_tree(lab);
        int hits = 0;
        for (const auto& t : trees)
            if (isotopic_up_to_color_swap(t, ref)) ++hits;
        CAPTURE(lab);
        CHECK(hits == 1);
    }
}

TEST_CASE("tree JSON round trip") {
    PlaneTree t = reference_tree("six_edge", "T9");
    auto j = tree_to_json(t);
    CHECK(j.at("n_edges") == 6);
    CHECK(j.at("vertices").size() == 7);
    CHECK(j.at("vertices")[0].contains("color"));
    CHECK(j.at("vertices")[0].contains("neighbors"));
    PlaneTree back = tree_from_json(j);
    CHECK(isotopic(back, t));
}

TEST_CASE("tri-passport canonical order, trim, full") {
    TriPassport tp;
    tp.groups = {std::vector<int>{2}, {2, 2}, {3}};
    tp.n = 5;
    TriPassport c = tp.canonical();
    CHECK(c.groups[0] == std::vector<int>{3});
    CHECK(c.groups[1] == std::vector<int>{2, 2});
    CHECK(c.groups[2] == std::vector<int>{2});
    CHECK(c.str() == "<3|2,2|2>");

    TriPassport f = tp.full(6);
    CHECK(f.point_count() == 13);  // 2n+1
    CHECK(f.str() == "<3,1,1,1|2,2,1,1|2,1,1,1,1>");
    CHECK(f.trim().str() == "<3|2,2|2>");

    TriPassport deg5;
    deg5.groups = {std::vector<int>{3}, {2}, {2}};
    CHECK(deg5.full(5).point_count() == 11);
    CHECK(deg5.full(5).str() == "<3,1,1|2,1,1,1|2,1,1,1>");
}
