#include <catch2/catch_amalgamated.hpp>

#include <zolo/catalog.hpp>
#include <zolo/shabat.hpp>

using namespace zolo;

namespace {

CPoly family1(cd a, cd scale = 1.0) {
    return poly_from_integrand({{cd(0), 2}, {cd(1), 1}, {a, 1}}, scale);
}

bool affine_equivalent(const CPoly& p, const CPoly& q, double tol = 1e-7) {
    CPoly np = normalize(p), nq = normalize(q);
    if (np.degree() != nq.degree()) return false;
    for (int k = 0; k <= np.degree(); ++k)
        if (std::abs(np.c[k] - nq.c[k]) > tol * (1.0 + std::abs(np.c[k]))) return false;
    return true;
}

}  // namespace

TEST_CASE("solve_tree on the three described five-edge trees") {
    // T1: affine-equivalent to x^5/5 - x^4/4
    ShabatSolution s1 = solve_tree(reference_tree("five_edge", "T1"));
    CHECK(s1.residual < 1e-9);
    CHECK(affine_equivalent(s1.poly, family1(cd(0))));

    // T3: affine-equivalent to int x^2 (x-1)^2 dx
    ShabatSolution s3 = solve_tree(reference_tree("five_edge", "T3"));
    CHECK(affine_equivalent(s3.poly, poly_from_integrand({{cd(0), 2}, {cd(1), 2}})));

    // T5: affine-equivalent to the classical degree-5 chebyshev polynomial
    ShabatSolution s5 = solve_tree(reference_tree("five_edge", "T5"));
    CHECK(affine_equivalent(s5.poly, CPoly(std::vector<cd>{0, 5, 0, -20, 0, 16})));
}

TEST_CASE("solve_tree rejects stars") {
    auto stars = enumerate_trees(5, {.include_stars = true});
    for (const auto& t : stars)
        if (is_star(t)) CHECK_THROWS_AS(solve_tree(t), StarTree);
}

TEST_CASE("solve then extract is the identity on oriented trees") {
    for (int n : {4, 5}) {
        for (const auto& t : enumerate_trees(n)) {
            ShabatSolution sol = solve_tree(t);
            PlaneTree back = extract_tree(sol.poly);
            CAPTURE(n, canonical_code(t).code);
            CHECK(isotopic(back, t));
            // whites sit over 0 with the passport multiplicities
            int wsum = 0;
            for (const auto& r : sol.white_roots) wsum += r.mult;
            CHECK(wsum == n);
        }
    }
}

TEST_CASE("normalize is affine-invariant and idempotent") {
    CPoly p = family1(cd(0.6));
    CPoly n1 = normalize(p);

    // value-affine change
    CPoly q = 3.7 * p;
    q.c[0] += cd(0.4, -1.1);
    CHECK(affine_equivalent(p, q));

    // argument-affine change: p(az + b)
    CPoly r = shabatdetail::scale_arg(shabatdetail::shift_arg(p, cd(0.3, 0.7)), cd(1.4, -0.2));
    CHECK(affine_equivalent(p, r));

    // idempotence
    CPoly n2 = normalize(n1);
    REQUIRE(n2.degree() == n1.degree());
    for (int k = 0; k <= n1.degree(); ++k) CHECK(std::abs(n1.c[k] - n2.c[k]) < 1e-9);

    // critical values land exactly on {0,1}
    auto pc = classify(n1);
    REQUIRE(pc.kind == PolyKind::Chebyshev);
    CHECK(std::abs(pc.clusters[0].value) < 1e-9);
    CHECK(std::abs(pc.clusters[1].value - 1.0) < 1e-9);
    CHECK(std::abs(n1.c[n1.degree()] - 1.0) < 1e-9);  // monic
}

TEST_CASE("normalize demands two critical values") {
    CPoly cube(std::vector<cd>{0, 0, 0, 1});
    CHECK_THROWS_AS(normalize(cube), NotChebyshev);
}

TEST_CASE("mirror consistency of solved trees") {
    for (const char* lab : {"T2", "T4"}) {
        PlaneTree t = reference_tree("five_edge", lab);
        ShabatSolution st = solve_tree(t);
        ShabatSolution sm = solve_tree(mirror(t));
        CPoly a = normalize(st.poly), b = normalize(sm.poly);
        REQUIRE(a.degree() == b.degree());
        for (int k = 0; k <= a.degree(); ++k) {
            CAPTURE(lab, k);
            CHECK(std::abs(std::conj(a.c[k]) - b.c[k]) < 1e-6 * (1.0 + std::abs(a.c[k])));
        }
    }
}

TEST_CASE("solving a six-edge asymmetric tree distinguishes mirror images") {
    PlaneTree t10 = reference_tree("six_edge", "T10");
    ShabatSolution s = solve_tree(t10);
    PlaneTree back = graph_to_tree(lift_arc(s.poly, Arc{{cd(0), cd(1)}, {0, 1}}));
    CHECK(isotopic(back, t10));
    CHECK_FALSE(isotopic(back, mirror(t10)));
}
