#include <catch2/catch_amalgamated.hpp>

#include <zolo/obstruction.hpp>

using namespace zolo;

namespace {

TriPassport full_tp(std::vector<std::vector<int>> groups, int n) {
    TriPassport tp;
    tp.groups = {groups.at(0), groups.at(1), groups.at(2)};
    tp.n = n;
    return tp.canonical();
}

PlaneTree ref5(const char* lab) { return reference_tree("five_edge", lab); }
PlaneTree ref6(const char* lab) { return six_edge_tree(lab); }

}  // namespace

TEST_CASE("degeneration feasibility on the worked examples") {
    TriPassport P = full_tp({{3, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 1}}, 5);
    auto s1 = degeneration_feasible(P, ref5("T1"));
    REQUIRE(s1.has_value());
    // the deg-4 vertex absorbs {3,1} against {2,1,1}
    bool saw4 = false;
    for (const auto& cell : s1->cells)
        if (cell.degree == 4) {
            saw4 = true;
            CHECK(cell.from_first.size() + cell.from_second.size() == 5);
        }
    CHECK(saw4);

    CHECK_FALSE(degeneration_feasible(P, ref5("T5")).has_value());

    TriPassport Q = full_tp({{2, 2, 1, 1}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}}, 6);
    CHECK_FALSE(degeneration_feasible(Q, ref6("T12")).has_value());
}

TEST_CASE("feasibility is invariant under group relabeling and mirroring") {
    TriPassport P = full_tp({{3, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 1}}, 5);
    TriPassport Pperm = full_tp({{2, 1, 1, 1}, {3, 1, 1}, {2, 1, 1, 1}}, 5);
    for (const char* lab : {"T1", "T2", "T3", "T4", "T5"}) {
        PlaneTree t = ref5(lab);
        bool a = degeneration_feasible(P, t).has_value();
        bool b = degeneration_feasible(Pperm, t).has_value();
        bool c = degeneration_feasible(P, mirror(t)).has_value();
        CAPTURE(lab);
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("tri-passport enumeration respects the point count") {
    for (int n : {5, 6, 7}) {
        auto all = all_full_tripassports(n);
        CHECK(!all.empty());
        for (const auto& tp : all) {
            CHECK(tp.point_count() == 2 * n + 1);
            for (const auto& g : tp.groups) {
                int s = 0;
                for (int k : g) s += k;
                CHECK(s == n);
                CHECK(g[0] >= 2);
            }
        }
    }
}

TEST_CASE("pair obstruction on the known five-edge pairs") {
    PairVerdict v35 = pair_obstructed(ref5("T3"), ref5("T5"));
    CHECK(v35.blocked);
    CHECK(!v35.failures.empty());

    PairVerdict v12 = pair_obstructed(ref5("T1"), ref5("T2"));
    CHECK_FALSE(v12.blocked);
    bool saw322 = false;
    for (const auto& tp : v12.shared)
        if (tp.trim().str() == "<3|2|2>") saw322 = true;
    CHECK(saw322);
}

TEST_CASE("pair obstruction is symmetric and mirror invariant") {
    for (auto [a, b] : {std::pair<const char*, const char*>{"T3", "T5"}, {"T1", "T2"}, {"T2", "T5"}}) {
        bool ab = pair_obstructed(ref5(a), ref5(b)).blocked;
        bool ba = pair_obstructed(ref5(b), ref5(a)).blocked;
        bool mab = pair_obstructed(mirror(ref5(a)), ref5(b)).blocked;
        CHECK(ab == ba);
        CHECK(ab == mab);
    }
}

TEST_CASE("proposition-style blocking for the six-edge exceptional pair") {
    CHECK(pair_obstructed(ref6("T6"), ref6("T12")).blocked);
}

TEST_CASE("theorem subsumption: both-branching trees never reach a chain") {
    for (int n : {5, 6}) {
        PlaneTree chain;
        auto trees = enumerate_trees(n);
        for (const auto& t : trees)
            if (is_chain(t)) chain = t;
        REQUIRE(chain.n_edges == n);
        for (const auto& t : trees) {
            Passport pp = passport(t);
            bool wbig = !pp.white.empty() && pp.white[0] >= 3;
            bool bbig = !pp.black.empty() && pp.black[0] >= 3;
            if (wbig && bbig) {
                CAPTURE(n, canonical_code(t).code);
                CHECK(pair_obstructed(t, chain).blocked);
            }
        }
    }
}

TEST_CASE("five-edge graph: blocked and realized sets") {
    ZHomotopyGraph g = zhomotopy_graph(5, true);
    REQUIRE(g.nodes.size() == 5);
    auto idx = [&](const char* lab) {
        PlaneTree r = ref5(lab);
        for (size_t i = 0; i < g.nodes.size(); ++i)
            if (isotopic_up_to_swap_and_mirror(g.nodes[i], r)) return static_cast<int>(i);
        return -1;
    };
    int i1 = idx("T1"), i2 = idx("T2"), i3 = idx("T3"), i4 = idx("T4"), i5 = idx("T5");
    REQUIRE((i1 >= 0 && i2 >= 0 && i3 >= 0 && i4 >= 0 && i5 >= 0));

    for (const auto& p : g.pairs) {
        bool is35 = (p.i == std::min(i3, i5) && p.j == std::max(i3, i5));
        CAPTURE(p.i, p.j);
        CHECK(p.blocked == is35);
    }
    // realized: all six pairs among T1..T4 and the three pairs with T5
    auto realized = [&](int a, int b) {
        return g.pair(std::min(a, b), std::max(a, b)).realized;
    };
    CHECK(realized(i1, i2));
    CHECK(realized(i1, i3));
    CHECK(realized(i1, i4));
    CHECK(realized(i2, i3));
    CHECK(realized(i2, i4));
    CHECK(realized(i3, i4));
    CHECK(realized(i1, i5));
    CHECK(realized(i2, i5));
    CHECK(realized(i4, i5));
    CHECK_FALSE(realized(i3, i5));
}

TEST_CASE("six-edge graph: exactly four blocked pairs") {
    ZHomotopyGraph g = zhomotopy_graph(6, false);
    REQUIRE(g.nodes.size() == 13);
    auto idx = [&](const char* lab) {
        PlaneTree r = ref6(lab);
        for (size_t i = 0; i < g.nodes.size(); ++i)
            if (isotopic(g.nodes[i], orient_canonical(r)) ||
                isotopic(g.nodes[i], orient_canonical(swap_colors(r))))
                return static_cast<int>(i);
        return -1;
    };
    // T7 and T8 are mirror images; when matching exactly (no mirror), both
    // labels resolve to distinct nodes
    std::map<std::string, int> id;
    for (const char* lab : {"T3", "T6", "T7", "T8", "T12", "T13"}) id[lab] = idx(lab);
    for (auto& [lab, i] : id) {
        CAPTURE(lab);
        REQUIRE(i >= 0);
    }
    std::set<std::pair<int, int>> want{
        {std::min(id["T3"], id["T13"]), std::max(id["T3"], id["T13"])},
        {std::min(id["T7"], id["T13"]), std::max(id["T7"], id["T13"])},
        {std::min(id["T8"], id["T13"]), std::max(id["T8"], id["T13"])},
        {std::min(id["T6"], id["T12"]), std::max(id["T6"], id["T12"])}};
    std::set<std::pair<int, int>> got;
    for (const auto& p : g.pairs)
        if (p.blocked) got.insert({p.i, p.j});
    CHECK(got == want);
}

TEST_CASE("two-edge graph is a single node") {
    ZHomotopyGraph g = zhomotopy_graph(2, false);
    CHECK(g.nodes.size() == 1);
    CHECK(g.pairs.empty());
}
