#include <catch2/catch_amalgamated.hpp>

#include <zolo/polynum.hpp>

using namespace zolo;
using Catch::Matchers::WithinAbs;

namespace {

// family p_a = scale * int x^2 (x-1)(x-a) dx
CPoly family1(cd a, cd scale = 1.0) {
    return poly_from_integrand({{cd(0), 2}, {cd(1), 1}, {a, 1}}, scale);
}

bool has_root(const std::vector<RootPt>& rs, cd loc, int mult, double tol = 1e-9) {
    for (const auto& r : rs)
        if (std::abs(r.location - loc) < tol * (1.0 + std::abs(loc)) && r.mult == mult) return true;
    return false;
}

}  // namespace

TEST_CASE("poly_from_integrand examples") {
    CPoly p = family1(cd(0));  // x^5/5 - x^4/4
    REQUIRE(p.degree() == 5);
    CHECK_THAT(p.c[5].real(), WithinAbs(0.2, 1e-15));
    CHECK_THAT(p.c[4].real(), WithinAbs(-0.25, 1e-15));
    CHECK_THAT(std::abs(p.c[3]) + std::abs(p.c[2]) + std::abs(p.c[1]) + std::abs(p.c[0]),
               WithinAbs(0.0, 1e-15));

    CPoly q = poly_from_integrand({{cd(0), 1}}, 2.0);  // x^2
    REQUIRE(q.degree() == 2);
    CHECK_THAT(std::abs(q.c[2] - 1.0), WithinAbs(0.0, 1e-15));

    CPoly r = poly_from_integrand({{cd(0), 2}, {cd(1), 2}}, 60.0);
    REQUIRE(r.degree() == 5);
    CHECK_THAT(std::abs(r.c[5] - 12.0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(r.c[4] + 30.0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(r.c[3] - 20.0), WithinAbs(0.0, 1e-12));
}

TEST_CASE("roots on products of linear factors") {
    CPoly p = from_roots({{cd(1), 2}, {cd(-2), 1}});
    auto rs = roots(p);
    REQUIRE(rs.size() == 2);
    CHECK(has_root(rs, cd(1), 2, 1e-10));
    CHECK(has_root(rs, cd(-2), 1, 1e-10));

    // x^5 - 1
    CPoly u(std::vector<cd>{cd(-1), 0, 0, 0, 0, cd(1)});
    auto ur = roots(u);
    REQUIRE(ur.size() == 5);
    for (const auto& r : ur) {
        CHECK(r.mult == 1);
        CHECK_THAT(std::abs(r.location) - 1.0, WithinAbs(0.0, 1e-12));
    }

    // derivative of the family at a = 3/5
    auto dr = roots(family1(cd(0.6)).derivative());
    REQUIRE(dr.size() == 3);
    CHECK(has_root(dr, cd(0), 2, 1e-10));
    CHECK(has_root(dr, cd(1), 1, 1e-10));
    CHECK(has_root(dr, cd(0.6), 1, 1e-10));
}

TEST_CASE("roots accurate to 1e-10 relative on separated factors") {
    Rng rng(7);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::uniform_int_distribution<int> multd(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<RootPt> want;
        int degree = 0;
        for (int k = 0; k < 40 && degree < 10; ++k) {
            cd loc(box(rng), box(rng));
            bool ok = true;
            for (const auto& w : want)
                if (std::abs(w.location - loc) < 1e-3) ok = false;
            if (!ok) continue;
            int m = std::min(multd(rng), 12 - degree);
            want.push_back({loc, m});
            degree += m;
            if (want.size() >= 5) break;
        }
        CPoly p = from_roots(want, cd(box(rng), box(rng)) + cd(3.0, 0));
        auto got = roots(p);
        REQUIRE(got.size() == want.size());
        for (const auto& w : want) {
            bool found = false;
            for (const auto& g : got)
                if (g.mult == w.mult &&
                    std::abs(g.location - w.location) < 1e-10 * (1.0 + std::abs(w.location)))
                    found = true;
            CAPTURE(trial, w.location, w.mult);
            CHECK(found);
        }
    }
}

TEST_CASE("critical data") {
    CPoly sq(std::vector<cd>{0, 0, cd(1)});
    auto cdq = critical_data(sq);
    REQUIRE(cdq.points.size() == 1);
    CHECK(cdq.points[0].mult == 2);
    CHECK_THAT(std::abs(cdq.points[0].location), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(cdq.points[0].value), WithinAbs(0.0, 1e-12));

    // x^2 (x-1)^2 (3x-1)
    CPoly p = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    auto cdp = critical_data(p);
    REQUIRE(cdp.points.size() == 4);
    auto val_at = [&](cd loc) {
        for (const auto& pt : cdp.points)
            if (std::abs(pt.location - loc) < 1e-8) return pt.value;
        FAIL("critical point not found");
        return cd(0);
    };
    CHECK_THAT(std::abs(val_at(cd(0))), WithinAbs(0.0, 1e-10));
    CHECK_THAT(std::abs(val_at(cd(1))), WithinAbs(0.0, 1e-10));
    CHECK_THAT(std::abs(val_at(cd(2.0 / 3)) - 4.0 / 81), WithinAbs(0.0, 1e-10));
    CHECK_THAT(std::abs(val_at(cd(0.2)) + 32.0 / 3125), WithinAbs(0.0, 1e-10));
}

TEST_CASE("critical values of the scaled family match the closed forms") {
    for (cd a : {cd(0.37, 0.21), cd(-1.2, 0.4), cd(2.5, -0.8)}) {
        CPoly p = family1(a, 60.0);
        auto cdp = critical_data(p);
        REQUIRE(cdp.points.size() == 3);
        for (const auto& pt : cdp.points) {
            if (std::abs(pt.location) < 1e-8) {
                CHECK_THAT(std::abs(pt.value), WithinAbs(0.0, 1e-9));
                CHECK(pt.mult == 3);
            } else if (std::abs(pt.location - cd(1)) < 1e-8) {
                CHECK_THAT(std::abs(pt.value - (5.0 * a - 3.0)), WithinAbs(0.0, 1e-8));
            } else {
                CHECK_THAT(std::abs(pt.location - a), WithinAbs(0.0, 1e-8));
                cd want = std::pow(a, 4) * (5.0 - 3.0 * a);
                CHECK_THAT(std::abs(pt.value - want), WithinAbs(0.0, 1e-7));
            }
        }
    }
}

TEST_CASE("multiplicity sum invariant on random polynomials") {
    Rng rng(11);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cd> coeffs;
        int deg = 3 + trial % 7;
        for (int k = 0; k <= deg; ++k) coeffs.emplace_back(box(rng), box(rng));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() += 1.0;
        CPoly p{std::move(coeffs)};
        auto cdp = critical_data(p);
        int s = 0;
        for (const auto& pt : cdp.points) s += pt.mult - 1;
        CHECK(s == p.degree() - 1);
    }
}

TEST_CASE("cluster_values") {
    auto c1 = cluster_values({cd(0), cd(0), cd(4.0 / 81), cd(-32.0 / 3125)}, 1e-9);
    CHECK(c1.size() == 3);
    auto c2 = cluster_values({cd(1), cd(1.0 + 1e-15)}, 1e-9);
    CHECK(c2.size() == 1);
    CHECK(cluster_values({}, 1e-9).empty());
}

TEST_CASE("classify") {
    CPoly z = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    auto pcz = classify(z);
    CHECK(pcz.kind == PolyKind::Zolotarev);
    auto gs = pcz.trimmed_groups();
    REQUIRE(gs.size() == 3);
    CHECK(gs[0] == std::vector<int>{2, 2});
    CHECK(gs[1] == std::vector<int>{2});
    CHECK(gs[2] == std::vector<int>{2});

    auto pcc = classify(family1(cd(0)));
    CHECK(pcc.kind == PolyKind::Chebyshev);
    auto gc = pcc.trimmed_groups();
    REQUIRE(gc.size() == 2);
    CHECK(gc[0] == std::vector<int>{4});
    CHECK(gc[1] == std::vector<int>{2});

    CPoly cube(std::vector<cd>{0, 0, 0, cd(1)});
    CHECK(classify(cube).kind == PolyKind::OneCritical);
}

TEST_CASE("full passport groups pad to the degree") {
    auto pc = classify(from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0));
    int n = pc.degree;
    REQUIRE(n == 5);
    int count = 0;
    for (const auto& cl : pc.clusters) {
        int s = 0;
        for (int k : cl.full_group) s += k;
        CHECK(s == n);
        count += static_cast<int>(cl.full_group.size());
    }
    CHECK(count == 2 * n + 1);
}

TEST_CASE("family classification is chebyshev exactly at the special parameters") {
    const double s5 = std::sqrt(5.0);
    std::vector<cd> special{cd(0), cd(1), cd(0.6), cd(5.0 / 3),
                            cd(-2.0 / 3, s5 / 3), cd(-2.0 / 3, -s5 / 3)};
    for (cd a : special) {
        CAPTURE(a);
        CHECK(classify(family1(a)).kind == PolyKind::Chebyshev);
    }
    Rng rng(3);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int k = 0; k < 12; ++k) {
        cd a(box(rng), box(rng));
        bool near = false;
        for (cd s : special)
            if (std::abs(a - s) < 1e-3) near = true;
        if (near) continue;
        CAPTURE(a);
        CHECK(classify(family1(a)).kind == PolyKind::Zolotarev);
    }
}

TEST_CASE("poly JSON round trip") {
    CPoly p = family1(cd(0.3, -0.7), cd(2.0, 1.0));
    auto j = poly_to_json(p);
    CPoly q = poly_from_json(j);
    REQUIRE(q.degree() == p.degree());
    for (int k = 0; k <= p.degree(); ++k) CHECK(p.c[k] == q.c[k]);
}
