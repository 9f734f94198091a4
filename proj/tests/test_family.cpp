#include <fstream>
#include <catch2/catch_amalgamated.hpp>

#include <zolo/family.hpp>

using namespace zolo;

namespace {

Assignment with_default_seed(const FamilySpec& f, cd driving) {
    Assignment a{{f.params.front(), driving}};
    for (size_t i = 1; i < f.params.size(); ++i) a[f.params[i]] = cd(0.3, 0.2);
    return a;
}

bool endpoint_matches(const HomotopyResult& hr, int which, const char* group, const char* label) {
    if (hr.endpoint_kinds[which] != PolyKind::Chebyshev) return false;
    PlaneTree got = extract_tree(hr.endpoint_polys[which]);
    return isotopic_up_to_swap_and_mirror(got, reference_tree(group, label));
}

}  // namespace

TEST_CASE("catalog parses") {
    CHECK(catalog_families().size() == 6);
    CHECK(catalog_paths().size() == 12);
    const FamilySpec& f2 = catalog_families().at("F2");
    CHECK(f2.degree() == 5);
    CHECK(f2.constraints.size() == 1);
}

TEST_CASE("constraint resolution closed-form checks") {
    const FamilySpec& f2 = catalog_families().at("F2");

    Assignment r1 = resolve_constraints(f2, with_default_seed(f2, cd(1)));
    CHECK(std::abs(r1.at("b") - cd(0.4)) < 1e-10);

    double s5 = std::sqrt(5.0);
    Assignment r2 = resolve_constraints(f2, with_default_seed(f2, cd(s5)));
    CHECK(std::abs(r2.at("b") - cd(1.0 + s5)) < 1e-9);

    CHECK_THROWS_AS(resolve_constraints(f2, with_default_seed(f2, cd(2))), SingularConstraint);
}

TEST_CASE("resolution is continuous along a path") {
    const FamilySpec& f2 = catalog_families().at("F2");
    Assignment cur{{"a", cd(0.1)}, {"b", cd(0)}};
    cur = resolve_constraints(f2, cur);
    for (double t = 0.1; t <= 1.0; t += 0.05) {
        cur["a"] = cd(t * std::sqrt(5.0), -0.2 * std::sin(3 * t));
        cur = resolve_constraints(f2, cur);
        cd a = cur.at("a"), b = cur.at("b");
        cd want = a * (3.0 * a - 5.0) / (5.0 * (a - 2.0));
        CHECK(std::abs(b - want) < 1e-8 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("tracking the first five-edge connection") {
    const FamilySpec& f1 = catalog_families().at("F1");
    PathSpec ps{/*driving=*/"a", /*anchors=*/{cd(0), cd(0.6)}};
    HomotopyResult hr = track(f1, ps, {});
    REQUIRE(hr.interior_trimmed ==
            std::vector<std::vector<int>>{{3}, {2}, {2}});
    CHECK(endpoint_matches(hr, 0, "five_edge", "T1"));
    CHECK(endpoint_matches(hr, 1, "five_edge", "T2"));
    // monitor: every interior sample three-valued with 2n+1 points
    for (const auto& smp : hr.samples) {
        CHECK(smp.kind == PolyKind::Zolotarev);
        CHECK(smp.trimmed_groups == hr.interior_trimmed);
    }
}

TEST_CASE("tracking reports a crossing as a passport jump") {
    const FamilySpec& f1 = catalog_families().at("F1");
    PathSpec ps{"a", {cd(0), cd(1)}};  // passes the degeneration at 3/5
    CHECK_THROWS_AS(track(f1, ps, {}), PassportJump);
}

TEST_CASE("single-anchor path flags non-chebyshev endpoints") {
    const FamilySpec& f1 = catalog_families().at("F1");
    PathSpec ps{"a", {cd(0.31, 0.17)}};
    HomotopyResult hr = track(f1, ps, {});
    CHECK(hr.endpoint_kinds[0] == PolyKind::Zolotarev);
    CHECK_FALSE(hr.endpoint_codes[0].has_value());
    CHECK(!hr.events.empty());
}

TEST_CASE("tracking the three six-edge constructions") {
    for (const auto& cp : catalog_paths()) {
        if (cp.edges != 6) continue;
        CAPTURE(cp.id);
        HomotopyResult hr = track_catalog_path(cp);
        CHECK(hr.interior_trimmed == cp.interior_trimmed);
        CHECK(endpoint_matches(hr, 0, "six_edge", cp.endpoints[0].c_str()));
        CHECK(endpoint_matches(hr, 1, "six_edge", cp.endpoints[1].c_str()));
    }
}

TEST_CASE("five-edge catalog paths all track to their endpoints") {
    for (const auto& cp : catalog_paths()) {
        if (cp.edges != 5) continue;
        CAPTURE(cp.id);
        HomotopyResult hr = track_catalog_path(cp);
        CHECK(hr.interior_trimmed == cp.interior_trimmed);
        CHECK(endpoint_matches(hr, 0, "five_edge", cp.endpoints[0].c_str()));
        CHECK(endpoint_matches(hr, 1, "five_edge", cp.endpoints[1].c_str()));
    }
}

TEST_CASE("scan of the unconstrained family") {
    auto pts = degeneration_scan(catalog_families().at("F1"));
    REQUIRE(pts.size() == 6);
    const double s5 = std::sqrt(5.0);
    std::vector<std::pair<cd, const char*>> want{
        {cd(0), "T1"},          {cd(1), "T3"},
        {cd(0.6), "T2"},        {cd(5.0 / 3), "T2"},
        {cd(-2.0 / 3, s5 / 3), "T4"}, {cd(-2.0 / 3, -s5 / 3), "T4"}};
    for (auto [a, lab] : want) {
        bool found = false;
        for (const auto& d : pts)
            if (std::abs(d.param - a) < 1e-9 * (1.0 + std::abs(a))) {
                found = isotopic_up_to_swap_and_mirror(d.tree, reference_tree("five_edge", lab));
            }
        CAPTURE(a, lab);
        CHECK(found);
    }
}

TEST_CASE("scan of the constrained family finds the tenth point too") {
    auto pts = degeneration_scan(catalog_families().at("F2"));
    REQUIRE(pts.size() == 10);
    const double s5 = std::sqrt(5.0);
    std::vector<std::pair<cd, const char*>> want{
        {cd(0), "T1"},           {cd(1), "T2"},
        {cd(5.0 / 3), "T2"},     {cd(2.5), "T2"},
        {cd(s5), "T5"},          {cd(-s5), "T5"},
        {cd((5 + s5) / 4), "T5"}, {cd((5 - s5) / 4), "T5"},
        {cd(5.0 / 3, s5 / 3), "T4"}, {cd(5.0 / 3, -s5 / 3), "T4"}};
    for (auto [a, lab] : want) {
        bool found = false;
        for (const auto& d : pts)
            if (std::abs(d.param - a) < 1e-9 * (1.0 + std::abs(a)))
                found = isotopic_up_to_swap_and_mirror(d.tree, reference_tree("five_edge", lab));
        CAPTURE(a, lab);
        CHECK(found);
    }
}

TEST_CASE("scan rejects unsupported families") {
    CHECK_THROWS_AS(degeneration_scan(catalog_families().at("G2")), std::invalid_argument);
}

TEST_CASE("shipped catalog file matches the embedded copy") {
#ifdef ZOLO_DATA_FILE
    std::ifstream in(ZOLO_DATA_FILE);
    REQUIRE(in.good());
    nlohmann::json file_copy;
    in >> file_copy;
    CHECK(file_copy == builtin_data());
#endif
}
