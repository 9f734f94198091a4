#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"

namespace zolo {

using BigRat = boost::multiprecision::cpp_rational;

/// Exact multivariate polynomial in a, b, c over the rationals.
/// Invariant: no zero coefficients stored, exponents nonnegative.
struct MPoly {
    using Expo = std::array<int, 3>;
    std::map<Expo, BigRat> terms;

    MPoly() = default;
    static MPoly constant(BigRat v) {
        MPoly p;
        if (v != 0) p.terms[{0, 0, 0}] = std::move(v);
        return p;
    }
    static MPoly var(int which, int power = 1) {
        MPoly p;
        Expo e{0, 0, 0};
        e[which] = power;
        p.terms[e] = 1;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == Expo{0, 0, 0});
    }
    BigRat constant_value() const {
        auto it = terms.find({0, 0, 0});
        return it == terms.end() ? BigRat(0) : it->second;
    }

    void add_term(const Expo& e, const BigRat& v) {
        if (v == 0) return;
        auto [it, fresh] = terms.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& x, const MPoly& y) {
        MPoly r = x;
        for (const auto& [e, v] : y.terms) r.add_term(e, v);
        return r;
    }
    friend MPoly operator-(const MPoly& x, const MPoly& y) {
        MPoly r = x;
        for (const auto& [e, v] : y.terms) r.add_term(e, -v);
        return r;
    }
    friend MPoly operator*(const MPoly& x, const MPoly& y) {
        MPoly r;
        for (const auto& [e1, v1] : x.terms)
            for (const auto& [e2, v2] : y.terms)
                r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, v1 * v2);
        return r;
    }
    friend MPoly operator*(const BigRat& s, const MPoly& x) {
        MPoly r;
        if (s == 0) return r;
        for (const auto& [e, v] : x.terms) r.terms[e] = s * v;
        return r;
    }
    MPoly pow(int k) const {
        MPoly r = constant(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const MPoly& o) const { return terms == o.terms; }

    template <typename T>
    T eval(const T& a, const T& b, const T& c) const {
        T acc = T(0);
        for (const auto& [e, v] : terms) {
            T t = T(1);
            for (int i = 0; i < e[0]; ++i) t *= a;
            for (int i = 0; i < e[1]; ++i) t *= b;
            for (int i = 0; i < e[2]; ++i) t *= c;
            acc += coeff_as<T>(v) * t;
        }
        return acc;
    }
    template <typename T>
    static T coeff_as(const BigRat& v) {
        if constexpr (std::is_same_v<T, BigRat>) return v;
        else return T(static_cast<double>(v));
    }

    /// weighted degree under wt(a,b,c) = (2,3,4); -1 for the zero polynomial,
    /// -2 when not weighted-homogeneous
    int weighted_degree() const {
        int w = -1;
        for (const auto& [e, v] : terms) {
            int d = 2 * e[0] + 3 * e[1] + 4 * e[2];
            if (w == -1) w = d;
            else if (w != d) return -2;
        }
        return w;
    }

    /// deglex-descending text form, e.g. "16*a^4*c - 4*a^3*b^2 + 256*c^3"
    std::string str() const {
        if (terms.empty()) return "0";
        std::vector<std::pair<Expo, BigRat>> ts(terms.begin(), terms.end());
        std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            int dx = x.first[0] + x.first[1] + x.first[2];
            int dy = y.first[0] + y.first[1] + y.first[2];
            if (dx != dy) return dx > dy;
            return x.first > y.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : ts) {
            BigRat av = v < 0 ? BigRat(-v) : v;
            if (first) {
                if (v < 0) os << "-";
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            std::string mono;
            const char* names = "abc";
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) os << av.str();
            else if (av == 1) os << mono;
            else os << av.str() << "*" << mono;
        }
        return os.str();
    }
};

/// Univariate polynomial in an outer variable with MPoly coefficients,
/// ascending degree.
struct UPolyOverM {
    std::vector<MPoly> c;

    int degree() const {
        int d = static_cast<int>(c.size()) - 1;
        while (d >= 0 && c[d].is_zero()) --d;
        return d;
    }
    UPolyOverM derivative() const {
        UPolyOverM r;
        for (size_t k = 1; k < c.size(); ++k) r.c.push_back(BigRat(static_cast<int>(k)) * c[k]);
        return r;
    }
    friend UPolyOverM operator*(const UPolyOverM& x, const UPolyOverM& y) {
        UPolyOverM r;
        if (x.c.empty() || y.c.empty()) return r;
        r.c.assign(x.c.size() + y.c.size() - 1, MPoly{});
        for (size_t i = 0; i < x.c.size(); ++i)
            for (size_t j = 0; j < y.c.size(); ++j) r.c[i + j] = r.c[i + j] + x.c[i] * y.c[j];
        return r;
    }
};

namespace exactdetail {

/// determinant of a square MPoly matrix without division: dynamic
/// programming over used-column subsets, sign from the inversion count
/// (-1)^{#unused columns below the chosen one}
inline MPoly det(const std::vector<std::vector<MPoly>>& M) {
    const int n = static_cast<int>(M.size());
    std::map<uint32_t, MPoly> dp;
    dp[0] = MPoly::constant(1);
    for (int row = 0; row < n; ++row) {
        std::map<uint32_t, MPoly> next;
        for (const auto& [mask, val] : dp) {
            for (int col = 0; col < n; ++col) {
                if (mask & (1u << col)) continue;
                if (M[row][col].is_zero()) continue;
                int smaller_unused = 0;
                for (int k = 0; k < col; ++k)
                    if (!(mask & (1u << k))) ++smaller_unused;
                MPoly add = val * M[row][col];
                if (smaller_unused % 2 == 1) add = BigRat(-1) * add;
                auto it = next.find(mask | (1u << col));
                if (it == next.end()) next.emplace(mask | (1u << col), std::move(add));
                else it->second = it->second + add;
            }
        }
        dp = std::move(next);
    }
    return dp.empty() ? MPoly{} : dp.begin()->second;
}

inline MPoly resultant(const UPolyOverM& f, const UPolyOverM& g) {
    const int m = f.degree(), n = g.degree();
    std::vector<std::vector<MPoly>> S(m + n, std::vector<MPoly>(m + n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S[i][i + (m - k)] = f.c[k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S[n + i][i + (n - k)] = g.c[k];
    return det(S);
}

}  // namespace exactdetail

/// discriminant in the outer variable of a monic quartic (over MPoly):
/// (-1)^{4*3/2} Res(s, s') = Res(s, s')
inline MPoly discriminant_y(const UPolyOverM& s) {
    if (s.degree() != 4 || !(s.c[4] == MPoly::constant(1)))
        throw std::invalid_argument("discriminant_y: monic quartic expected");
    return exactdetail::resultant(s, s.derivative());
}

/// s(y) = prod_i (y - p(x_i)) over the roots x_i of q = x^4 + a x^2 + b x + c,
/// with p = the antiderivative of q vanishing at 0. Coefficients are exact
/// symmetric functions computed through power sums (Newton's identities).
inline UPolyOverM build_s_polynomial() {
    const MPoly A = MPoly::var(0), B = MPoly::var(1), C = MPoly::var(2);
    const MPoly one = MPoly::constant(1);

    // power sums P_j of the roots of q, j = 0..20
    // q = x^4 + 0x^3 + a x^2 + b x + c: elementary symmetric
    // E1 = 0, E2 = a, E3 = -b, E4 = c
    std::array<MPoly, 5> E{one, MPoly{}, A, BigRat(-1) * B, C};
    std::vector<MPoly> P(21);
    P[0] = MPoly::constant(4);
    for (int k = 1; k <= 20; ++k) {
        // P_k - E1 P_{k-1} + E2 P_{k-2} - E3 P_{k-3} + E4 P_{k-4} = 0  (k > 4)
        // with the extra (-1)^{k-1} k E_k term for k <= 4
        MPoly acc;
        for (int i = 1; i <= std::min(k - 1, 4); ++i) {
            MPoly t = E[i] * P[k - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        if (k <= 4) {
            MPoly t = BigRat(k) * E[k];
            acc = (k % 2 == 1) ? acc + t : acc - t;
        }
        P[k] = acc;
    }

    // p(x) = x^5/5 + a x^3/3 + b x^2/2 + c x as a univariate over MPoly
    UPolyOverM p;
    p.c.assign(6, MPoly{});
    p.c[5] = BigRat(1, 5) * one;
    p.c[3] = BigRat(1, 3) * A;
    p.c[2] = BigRat(1, 2) * B;
    p.c[1] = C;

    // S_m = sum_i p(x_i)^m for m = 1..4
    std::array<MPoly, 5> S;
    UPolyOverM pm;
    pm.c = {one};
    for (int m = 1; m <= 4; ++m) {
        pm = pm * p;
        MPoly s;
        for (size_t j = 0; j < pm.c.size(); ++j)
            if (!pm.c[j].is_zero()) s = s + pm.c[j] * P[j];
        S[m] = s;
    }

    // Newton's identities for the elementary symmetric functions of p(x_i)
    MPoly e1 = S[1];
    MPoly e2 = BigRat(1, 2) * (e1 * S[1] - S[2]);
    MPoly e3 = BigRat(1, 3) * (e2 * S[1] - e1 * S[2] + S[3]);
    MPoly e4 = BigRat(1, 4) * (e3 * S[1] - e2 * S[2] + e1 * S[3] - S[4]);

    UPolyOverM s;
    s.c = {e4, BigRat(-1) * e3, e2, BigRat(-1) * e1, one};
    return s;
}

/// The two published factors of the degree-5 discriminant locus.
inline MPoly factor_F1() {
    MPoly f;
    auto t = [&](long long k, int i, int j, int l) { f.add_term({i, j, l}, BigRat(k)); };
    t(1280, 6, 0, 0);
    t(-32256, 4, 0, 1);
    t(9504, 3, 2, 0);
    t(269568, 2, 0, 2);
    t(-69984, 1, 2, 1);
    t(-19683, 0, 4, 0);
    t(-746496, 0, 0, 3);
    return f;
}

inline MPoly factor_F2() {
    MPoly f;
    auto t = [&](long long k, int i, int j, int l) { f.add_term({i, j, l}, BigRat(k)); };
    t(16, 4, 0, 1);
    t(-4, 3, 2, 0);
    t(-128, 2, 0, 2);
    t(144, 1, 2, 1);
    t(-27, 0, 4, 0);
    t(256, 0, 0, 3);
    return f;
}

/// disc_x(x^4 + a x^2 + b x + c) as an exact MPoly (equals factor_F2).
inline MPoly quartic_discriminant() {
    const MPoly one = MPoly::constant(1);
    UPolyOverM q;
    q.c = {MPoly::var(2), MPoly::var(1), MPoly::var(0), MPoly{}, one};
    return exactdetail::resultant(q, q.derivative());
}

struct FactorizationResult {
    BigRat constant;
    int e1;
    int e2;
};

/// Finds the exact relation disc_y(s) = constant * F1^e1 * F2^e2 with
/// e1, e2 >= 1. The weight count (wt 60 versus 12 per factor) forces
/// e1 + e2 = 5; all four splits are tried and the winner re-expanded.
inline FactorizationResult verify_degree5_factorization() {
    MPoly D = discriminant_y(build_s_polynomial());
    MPoly F1 = factor_F1(), F2 = factor_F2();
    if (D.weighted_degree() != 60 || F1.weighted_degree() != 12 || F2.weighted_degree() != 12)
        throw IdentityFails("weighted homogeneity violated");
    for (int e1 = 1; e1 <= 4; ++e1) {
        int e2 = 5 - e1;
        MPoly T = F1.pow(e1) * F2.pow(e2);
        if (T.is_zero()) continue;
        // candidate constant from any shared monomial
        const auto& [mono, tv] = *T.terms.begin();
        auto it = D.terms.find(mono);
        if (it == D.terms.end()) continue;
        BigRat k = it->second / tv;
        if (D == k * T) return {k, e1, e2};
    }
    // no relation: find an integer witness point where nothing matches
    for (int a = 1; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 1; c < 6; ++c) {
                BigRat dv = D.eval<BigRat>(a, b, c);
                BigRat f1 = F1.eval<BigRat>(a, b, c), f2 = F2.eval<BigRat>(a, b, c);
                if (f1 != 0 && f2 != 0 && dv != 0)
                    throw IdentityFails("no exponent split works; witness (a,b,c)=(" +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ")");
            }
    throw IdentityFails("no exponent split works");
}

}  // namespace zolo
