#include <catch2/catch_amalgamated.hpp>

#include <zolo/variety.hpp>

using namespace zolo;

TEST_CASE("exact degree-5 memberships at the hand-reduced points") {
    // chain: q = x^4 - (3/4) x^2 + 1/16 (from the classical polynomial)
    CHECK(degree5_membership_exact(BigRat(-3, 4), 0, BigRat(1, 16)) == Membership::FirstOnly);
    // double star: q = (x^2 - 1/4)^2
    CHECK(degree5_membership_exact(BigRat(-1, 2), 0, BigRat(1, 16)) == Membership::SecondOnly);
    // T1: q = x^3(x-1) depressed
    CHECK(degree5_membership_exact(BigRat(-3, 8), BigRat(-1, 8), BigRat(-3, 256)) ==
          Membership::Both);
    CHECK(degree5_membership_exact(1, 1, 1) == Membership::Neither);
}

TEST_CASE("numeric memberships computed from solved trees") {
    std::map<std::string, Membership> want{{"T1", Membership::Both},
                                           {"T2", Membership::Both},
                                           {"T3", Membership::SecondOnly},
                                           {"T4", Membership::Both},
                                           {"T5", Membership::FirstOnly}};
    for (const auto& [lab, want_m] : want) {
        ShabatSolution sol = solve_tree(reference_tree("five_edge", lab));
        auto [a, b, c] = chebyshev_abc(sol.poly);
        CAPTURE(lab, a, b, c);
        CHECK(degree5_membership(a, b, c) == want_m);
    }
}

TEST_CASE("degree-7 samples have the right orders and table trees") {
    Degree7Batch batch = sample_degree7(4, 0);
    REQUIRE(batch.samples.size() == 4);
    for (const auto& s : batch.samples) {
        CAPTURE(s.order, s.table_row);
        CHECK((s.order == 168 || s.order == 2520));
        CHECK(s.table_row >= 0);
    }
}

TEST_CASE("the final-pair trees appear in opposite component tables") {
    auto finals = degree7_table("final_pair");
    REQUIRE(finals.size() == 2);
    auto in_list = [&](const PlaneTree& t, const char* key) {
        for (const auto& u : degree7_table(key))
            if (isotopic_up_to_swap_and_mirror(t, u)) return true;
        return false;
    };
    // first final tree is among the 168-component two-valued trees only
    CHECK(in_list(finals[0], "component168_chebyshev"));
    CHECK_FALSE(in_list(finals[0], "component2520_chebyshev"));
    // second is among the 2520-component ones only
    CHECK(in_list(finals[1], "component2520_chebyshev"));
    CHECK_FALSE(in_list(finals[1], "component168_chebyshev"));
    // neither is an intersection tree
    CHECK_FALSE(in_list(finals[0], "intersection"));
    CHECK_FALSE(in_list(finals[1], "intersection"));
}

TEST_CASE("component certification separates the final pair") {
    auto finals = degree7_table("final_pair");
    ComponentCertificate c0 = degree7_component_of(finals[0], 0, 3);
    ComponentCertificate c1 = degree7_component_of(finals[1], 0, 3);
    CHECK(c0.order == 168);
    CHECK(c1.order == 2520);
}

TEST_CASE("class-restricted blocking of the final pair") {
    auto finals = degree7_table("final_pair");
    TriPassport cls;
    cls.groups = {std::vector<int>{2, 2}, {2, 2}, {2, 2}};
    cls.trimmed = true;
    ClassBlockVerdict v = blocked_in_class(finals[0], finals[1], cls, 0);
    CHECK(v.blocked);
    CHECK(v.mechanism == "component-separation");
    // the counting engine alone cannot block this pair
    REQUIRE(!v.shared.empty());
    CHECK(v.shared[0].trim().str() == "<2,2|2,2|2,2>");

    // without the class restriction the pair shares a passport with a
    // multiplicity-4 point
    PairVerdict pv = pair_obstructed(finals[0], finals[1]);
    CHECK_FALSE(pv.blocked);
    bool has4 = false;
    for (const auto& tp : pv.shared)
        for (const auto& g : tp.groups)
            if (g[0] == 4) has4 = true;
    CHECK(has4);
}

TEST_CASE("connecting families from the catalog") {
    ConnectingFamily c1 = find_connecting_family(reference_tree("five_edge", "T1"),
                                                 reference_tree("five_edge", "T5"),
                                                 {{2, 2}, {2}, {2}});
    CHECK(c1.found);
    CHECK(c1.path_id == "F2:T1-T5");

    ConnectingFamily c2 = find_connecting_family(six_edge_tree("T12"), six_edge_tree("T13"),
                                                 {{2, 2, 2}, {2}, {2}});
    CHECK(c2.found);
    CHECK(c2.path_id == "G3:T12-T13");

    // an impossible request comes back inconclusive
    ConnectingFamily c3 = find_connecting_family(reference_tree("five_edge", "T3"),
                                                 reference_tree("five_edge", "T5"), {});
    CHECK_FALSE(c3.found);
}
