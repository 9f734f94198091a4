#include <catch2/catch_amalgamated.hpp>

#include <zolo/exact.hpp>
#include <zolo/polynum.hpp>

using namespace zolo;

namespace {

const std::string F2_TEXT =
    "16*a^4*c - 4*a^3*b^2 - 128*a^2*c^2 + 144*a*b^2*c - 27*b^4 + 256*c^3";

// numeric s(y) at a point: product over the roots of q = x^4 + a x^2 + b x + c
std::vector<cd> numeric_p_values(cd a, cd b, cd c) {
    CPoly q{std::vector<cd>{c, b, a, 0, 1}};
    CPoly p = q.antiderivative();
    std::vector<cd> vals;
    for (const auto& r : roots(q, 1e-12))
        for (int k = 0; k < r.mult; ++k) vals.push_back(p.eval(r.location));
    return vals;
}

}  // namespace

TEST_CASE("s polynomial structure") {
    UPolyOverM s = build_s_polynomial();
    REQUIRE(s.degree() == 4);
    CHECK(s.c[4] == MPoly::constant(1));
    // at a=b=c=0 all p(x_i) vanish, so every lower coefficient vanishes
    for (int k = 0; k < 4; ++k) CHECK(s.c[k].eval<BigRat>(0, 0, 0) == 0);
}

TEST_CASE("s matches the numeric product over roots") {
    UPolyOverM s = build_s_polynomial();
    for (auto [a, b, c] : {std::array<double, 3>{1, 1, 1}, {2, -1, 3}, {-1.5, 0.5, 2.0}}) {
        auto vals = numeric_p_values(a, b, c);
        REQUIRE(vals.size() == 4);
        for (cd y : {cd(0.3, 0.1), cd(-1.0, 2.0)}) {
            cd direct = 1;
            for (cd v : vals) direct *= y - v;
            cd viaS = 0;
            for (int k = 4; k >= 0; --k) viaS = viaS * y + s.c[k].eval<cd>(a, b, c);
            CAPTURE(a, b, c, y);
            CHECK(std::abs(direct - viaS) < 1e-8 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("quartic discriminant equals the second factor") {
    MPoly d = quartic_discriminant();
    CHECK(d == factor_F2());
    CHECK(d.str() == F2_TEXT);
    // reductions
    MPoly at_ab0;  // a=0, b=0 -> 256 c^3
    CHECK(d.eval<BigRat>(0, 0, 5) == BigRat(256) * BigRat(125));
    CHECK(d.eval<BigRat>(1, 0, 0) == 0);  // x^4 + x^2 has a double root
}

TEST_CASE("discriminant of a symbolic polynomial with a forced double root vanishes") {
    // (y - a)^2 (y - b)(y - c), coefficients in the three symbols
    const MPoly A = MPoly::var(0), B = MPoly::var(1), C = MPoly::var(2);
    const MPoly one = MPoly::constant(1);
    UPolyOverM lin_a{{BigRat(-1) * A, one}};
    UPolyOverM lin_b{{BigRat(-1) * B, one}};
    UPolyOverM lin_c{{BigRat(-1) * C, one}};
    UPolyOverM s = lin_a * lin_a * lin_b * lin_c;
    CHECK(discriminant_y(s).is_zero());
}

TEST_CASE("discriminant weighted homogeneity") {
    UPolyOverM s = build_s_polynomial();
    MPoly D = discriminant_y(s);
    CHECK(D.weighted_degree() == 60);
    CHECK(factor_F1().weighted_degree() == 12);
    CHECK(factor_F2().weighted_degree() == 12);
}

TEST_CASE("discriminant agrees with the numeric oracle") {
    MPoly D = discriminant_y(build_s_polynomial());
    for (auto [a, b, c] : {std::array<double, 3>{1, 1, 1}, {0.5, -2, 1.5}}) {
        auto vals = numeric_p_values(a, b, c);
        cd prod = 1;
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t j = i + 1; j < vals.size(); ++j) {
                cd d = vals[i] - vals[j];
                prod *= d * d;
            }
        cd exact = D.eval<cd>(a, b, c);
        CAPTURE(a, b, c);
        CHECK(std::abs(prod - exact) < 1e-6 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("degree-5 factorization identity") {
    FactorizationResult fr = verify_degree5_factorization();
    CHECK(fr.e1 >= 1);
    CHECK(fr.e2 >= 1);
    CHECK(12 * (fr.e1 + fr.e2) == 60);
    CHECK(fr.e1 == 2);
    CHECK(fr.e2 == 3);
    CHECK(fr.constant == BigRat(1, BigRat("531441000000000000").convert_to<boost::multiprecision::cpp_int>()));

    // re-expansion certifies the relation
    MPoly lhs = discriminant_y(build_s_polynomial());
    MPoly rhs = fr.constant * (factor_F1().pow(fr.e1) * factor_F2().pow(fr.e2));
    CHECK(lhs == rhs);

    // trivial consequences at (1,0,0)
    CHECK(factor_F1().eval<BigRat>(1, 0, 0) == 1280);
    CHECK(factor_F2().eval<BigRat>(1, 0, 0) == 0);
    CHECK(lhs.eval<BigRat>(1, 0, 0) == 0);

    // both sides agree exactly at a random integer point
    CHECK(lhs.eval<BigRat>(2, 3, 5) == rhs.eval<BigRat>(2, 3, 5));
}

TEST_CASE("arithmetic respects evaluation homomorphisms") {
    Rng rng(5);
    std::uniform_int_distribution<int> d(-7, 7);
    const MPoly A = MPoly::var(0), B = MPoly::var(1), C = MPoly::var(2);
    MPoly x = A * A * B - BigRat(3) * C + MPoly::constant(BigRat(1, 2));
    MPoly y = B * C * C + BigRat(-2) * A * B + MPoly::constant(4);
    for (int k = 0; k < 6; ++k) {
        BigRat a(d(rng)), b(d(rng)), c(d(rng));
        CHECK((x + y).eval<BigRat>(a, b, c) == x.eval<BigRat>(a, b, c) + y.eval<BigRat>(a, b, c));
        CHECK((x - y).eval<BigRat>(a, b, c) == x.eval<BigRat>(a, b, c) - y.eval<BigRat>(a, b, c));
        CHECK((x * y).eval<BigRat>(a, b, c) == x.eval<BigRat>(a, b, c) * y.eval<BigRat>(a, b, c));
        CHECK(x.pow(3).eval<BigRat>(a, b, c) ==
              x.eval<BigRat>(a, b, c) * x.eval<BigRat>(a, b, c) * x.eval<BigRat>(a, b, c));
    }
}
