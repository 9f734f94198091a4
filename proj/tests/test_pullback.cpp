#include <catch2/catch_amalgamated.hpp>

#include <zolo/catalog.hpp>
#include <zolo/pullback.hpp>
#include <zolo/svg.hpp>

using namespace zolo;

namespace {

CPoly family1(cd a, cd scale = 1.0) {
    return poly_from_integrand({{cd(0), 2}, {cd(1), 1}, {a, 1}}, scale);
}

Arc straight3(const CPoly& p) {
    auto pc = classify(p);
    std::vector<cd> vals;
    for (const auto& cl : pc.clusters) vals.push_back(cl.value);
    return arc_through(vals);
}

}  // namespace

TEST_CASE("lifting the square map") {
    CPoly sq(std::vector<cd>{0, 0, 1});
    Arc seg{{cd(0), cd(1)}, {0, 1}};
    EmbeddedGraph g = lift_arc(sq, seg);
    REQUIRE(g.n_edges() == 2);
    REQUIRE(g.vertices.size() == 3);
    int whites = 0, blacks = 0;
    for (const auto& v : g.vertices) {
        if (v.color == Color::White) {
            ++whites;
            CHECK(v.degree == 2);
            CHECK(std::abs(v.location) < 1e-9);
        } else {
            ++blacks;
            CHECK(v.degree == 1);
            CHECK(std::abs(std::abs(v.location) - 1.0) < 1e-9);
        }
    }
    CHECK(whites == 1);
    CHECK(blacks == 2);
    PlaneTree t = graph_to_tree(g);
    CHECK(is_chain(t));
}

TEST_CASE("five-edge chebyshev lift has five edges") {
    CPoly p = normalize_values(family1(cd(0.6)));
    Arc seg{{cd(0), cd(1)}, {0, 1}};
    EmbeddedGraph g = lift_arc(p, seg);
    CHECK(g.n_edges() == 5);
    CHECK(g.vertices.size() == 6);
}

TEST_CASE("zolotarev lift doubles the edge count") {
    CPoly p = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    EmbeddedGraph g = zolotarev_tree(p, straight3(p));
    CHECK(g.n_edges() == 10);
    CHECK(g.vertices.size() == 11);
    // whites over the interior value, one per edge
    for (const auto& e : g.edges) {
        bool w1 = g.vertices[e.v1].color == Color::White;
        bool w2 = g.vertices[e.v2].color == Color::White;
        CHECK(w1 != w2);
    }
    // interior vertices have doubled degree
    for (const auto& v : g.vertices)
        if (v.color == Color::White) CHECK(v.degree % 2 == 0);
    PlaneTree t = graph_to_tree(g);
    CHECK(t.n_edges == 10);
}

TEST_CASE("extract_tree identifies the family endpoints") {
    PlaneTree t1 = extract_tree(family1(cd(0)));
    CHECK(isotopic_up_to_color_swap(t1, reference_tree("five_edge", "T1")));

    CPoly p3 = poly_from_integrand({{cd(0), 2}, {cd(1), 2}});
    PlaneTree t3 = extract_tree(p3);
    CHECK(isotopic_up_to_color_swap(t3, reference_tree("five_edge", "T3")));

    PlaneTree t2 = extract_tree(family1(cd(0.6)));
    CHECK(isotopic_up_to_color_swap(t2, reference_tree("five_edge", "T2")));

    PlaneTree tex = extract_tree(family1(cd(0.6)));
    CHECK(isotopic_up_to_color_swap(tex, reference_example_tree()));
}

TEST_CASE("classical degree-5 chebyshev pulls back to the chain") {
    CPoly cheb(std::vector<cd>{0, 5, 0, -20, 0, 16});
    auto pc = classify(cheb);
    REQUIRE(pc.kind == PolyKind::Chebyshev);
    PlaneTree t = extract_tree(cheb);
    CHECK(is_chain(t));
    CHECK(isotopic_up_to_color_swap(t, reference_tree("five_edge", "T5")));
}

TEST_CASE("arc validation") {
    CHECK_THROWS_AS(validate_arc(Arc{{cd(0)}, {0}}), std::invalid_argument);
    // self-crossing polyline
    Arc bad{{cd(0), cd(1), cd(0.5, 1.0), cd(0.5, -1.0)}, {0, 3}};
    CHECK_THROWS_AS(validate_arc(bad), std::invalid_argument);
    // anchor count must match the class
    CPoly p = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    Arc seg{{cd(0), cd(1)}, {0, 1}};
    CHECK_THROWS_AS(lift_arc(p, seg), NotMatchingClass);
}

TEST_CASE("detour arcs are accepted and give a valid tree") {
    CPoly p = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    auto pc = classify(p);
    std::vector<cd> vals;
    for (const auto& cl : pc.clusters) vals.push_back(cl.value);
    std::sort(vals.begin(), vals.end(), complex_less);
    // detour: go around instead of straight between the last two anchors
    Arc detour{{vals[0], vals[1], vals[1] + cd(0.0, 0.12), vals[2] + cd(0.0, 0.12), vals[2]},
               {0, 1, 4}};
    EmbeddedGraph g = zolotarev_tree(p, detour);
    CHECK(g.n_edges() == 10);
    PlaneTree t = graph_to_tree(g);
    CHECK(t.n_edges == 10);
}

TEST_CASE("monodromy of the square map") {
    CPoly sq(std::vector<cd>{0, 0, 1});
    MonodromyData md = monodromy(sq);
    REQUIRE(md.perms.size() == 1);
    CHECK(md.perms[0] == Perm{1, 0});
    CHECK(md.order == 2);
    CHECK(is_ncycle(md.infinity_perm));
}

TEST_CASE("chebyshev composite is an n-cycle and cycle types match passports") {
    for (cd a : {cd(0.6), cd(0), cd(1)}) {
        CPoly p = family1(a);
        MonodromyData md = monodromy(p);
        REQUIRE(md.perms.size() == 2);
        CHECK(is_ncycle(md.infinity_perm));
        auto pc = classify(p);
        for (size_t i = 0; i < md.perms.size(); ++i) {
            auto ct = cycle_type(md.perms[i]);
            auto want = pc.clusters[i].full_group;
            CHECK(ct == want);
        }
    }
}

TEST_CASE("zolotarev monodromy has three generators composing to a 5-cycle") {
    CPoly p = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    MonodromyData md = monodromy(p);
    REQUIRE(md.perms.size() == 3);
    CHECK(is_ncycle(md.infinity_perm));
    for (size_t i = 0; i < 3; ++i) {
        auto pc = classify(p);
        CHECK(cycle_type(md.perms[i]) == pc.clusters[i].full_group);
    }
}

TEST_CASE("group order closure") {
    CHECK(group_order({Perm{1, 0, 2}, Perm{1, 2, 0}}) == 6);
    CHECK(group_order({Perm{1, 2, 3, 4, 5, 6, 0}}) == 7);
    CHECK(group_order({}) == 1);
}

TEST_CASE("svg output is deterministic and shaped right") {
    CPoly p3 = poly_from_integrand({{cd(0), 2}, {cd(1), 2}});
    CPoly pn = normalize_values(p3);
    Arc seg{{cd(0), cd(1)}, {0, 1}};
    EmbeddedGraph g = lift_arc(pn, seg);
    std::string svg1 = render_svg(g);
    std::string svg2 = render_svg(g);
    CHECK(svg1 == svg2);
    size_t glyphs = 0, paths = 0;
    for (size_t pos = 0; (pos = svg1.find("<circle", pos)) != std::string::npos; ++pos) ++glyphs;
    for (size_t pos = 0; (pos = svg1.find("<polyline", pos)) != std::string::npos; ++pos) ++paths;
    CHECK(glyphs == 6);
    CHECK(paths == 5);

    // two-edge square map picture: 3 glyphs, 2 paths
    CPoly sq(std::vector<cd>{0, 0, 1});
    std::string svg3 = render_svg(lift_arc(sq, seg));
    size_t g3 = 0, p3c = 0;
    for (size_t pos = 0; (pos = svg3.find("<circle", pos)) != std::string::npos; ++pos) ++g3;
    for (size_t pos = 0; (pos = svg3.find("<polyline", pos)) != std::string::npos; ++pos) ++p3c;
    CHECK(g3 == 3);
    CHECK(p3c == 2);
}
