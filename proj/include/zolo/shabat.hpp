#pragma once

#include <Eigen/Dense>

#include "pullback.hpp"

namespace zolo {

struct ShabatSolution {
    CPoly poly;                      // critical values exactly {0 (white), 1 (black)}
    std::vector<RootPt> white_roots; // roots of poly, with multiplicities
    std::vector<RootPt> black_roots; // roots of poly - 1
    double residual = 0;
    CanonicalCode tree_code;
};

struct SolveOpts {
    uint64_t seed = 0;
    int max_restarts = 60;
    double tol = 1e-11;
};

namespace shabatdetail {

// unit-edge angular layout realizing the ccw rotation system
inline std::vector<cd> layout(const PlaneTree& t) {
    std::vector<cd> pos(t.vertex_count());
    std::vector<char> placed(t.vertex_count(), 0);
    auto rec = [&](auto&& self, int v, int parent, double a0, double a1) -> void {
        const auto& nb = t.vertices[v].neighbors;
        const int d = static_cast<int>(nb.size());
        std::vector<int> kids;
        int start = 0;
        while (start < d && nb[start] != parent) ++start;
        for (int k = 1; k <= d; ++k) {
            int w = nb[(start + k) % d];
            if (w != parent) kids.push_back(w);
        }
        for (size_t k = 0; k < kids.size(); ++k) {
            double th = a0 + (a1 - a0) * (static_cast<double>(k) + 0.5) / kids.size();
            pos[kids[k]] = pos[v] + cd(std::cos(th), std::sin(th));
            placed[kids[k]] = 1;
            double wa = (a1 - a0) / kids.size();
            self(self, kids[k], v, th - 0.45 * wa, th + 0.45 * wa);
        }
    };
    pos[0] = cd(0, 0);
    placed[0] = 1;
    rec(rec, 0, -1, 0.0, 2 * M_PI);
    return pos;
}

}  // namespace shabatdetail

/// Computes a polynomial whose pullback tree of [0,1] is isotopic to t,
/// with the white vertices over 0 and the black over 1. Unknowns are the
/// root locations with multiplicities fixed by the tree's passport; the
/// affine gauge pins one white root at 0 and an adjacent black root at 1.
/// Every Newton solution is verified by lifting; mismatches trigger a
/// perturbed restart (distinct trees share passports, so this is required).
inline ShabatSolution solve_tree(const PlaneTree& t, SolveOpts opts = {}) {
    if (is_star(t)) throw StarTree("star trees correspond to one critical value");
    const int n = t.n_edges;
    if (n < 3) throw std::invalid_argument("trees with fewer than 3 edges have no two-value polynomial");

    // gauge edge: a max-degree white vertex and its first neighbor
    int gw = -1;
    for (const auto& v : t.vertices)
        if (v.color == Color::White && (gw < 0 || v.neighbors.size() > t.vertices[gw].neighbors.size()))
            gw = v.id;
    int gb = t.vertices[gw].neighbors[0];

    std::vector<int> whites, blacks;  // vertex ids, gauge vertices first
    whites.push_back(gw);
    blacks.push_back(gb);
    for (const auto& v : t.vertices) {
        if (v.id == gw || v.id == gb) continue;
        (v.color == Color::White ? whites : blacks).push_back(v.id);
    }
    const int r = static_cast<int>(whites.size()), s = static_cast<int>(blacks.size());
    const int nu = r + s - 2;  // unknowns

    auto base_layout = shabatdetail::layout(t);
    cd lw = base_layout[gw], lb = base_layout[gb];
    for (auto& z : base_layout) z = (z - lw) / (lb - lw);

    Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + 0xc2b2ae3d27d4eb4fULL);
    const std::string want = detail::min_rooted_code(t);

    std::string last_err = "no attempt";
    for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
        // seed from the layout, perturbed increasingly on restarts
        double sigma = attempt == 0 ? 0.0 : 1e-3 * std::pow(1.35, attempt);
        Eigen::VectorXcd u(nu);
        {
            int k = 0;
            for (int i = 1; i < r; ++i) u[k++] = base_layout[whites[i]] + sigma * rand_unit(rng);
            for (int j = 1; j < s; ++j) u[k++] = base_layout[blacks[j]] + sigma * rand_unit(rng);
        }

        auto assemble = [&](const Eigen::VectorXcd& uu, std::vector<RootPt>& wr,
                            std::vector<RootPt>& br) {
            wr.clear();
            br.clear();
            int k = 0;
            wr.push_back({cd(0), t.degree(gw)});
            for (int i = 1; i < r; ++i) wr.push_back({uu[k++], t.degree(whites[i])});
            br.push_back({cd(1), t.degree(gb)});
            for (int j = 1; j < s; ++j) br.push_back({uu[k++], t.degree(blacks[j])});
        };

        bool ok = false;
        std::vector<RootPt> wr, br;
        CPoly W, B;
        for (int it = 0; it < 80; ++it) {
            assemble(u, wr, br);
            W = from_roots(wr);
            B = from_roots(br);
            CPoly diff = W - B;
            Eigen::VectorXcd F(nu);
            for (int k = 1; k < n; ++k)
                F[k - 1] = k < static_cast<int>(diff.c.size()) ? diff.c[k] : cd(0);
            double scale = 0;
            for (const cd& ck : W.c) scale = std::max(scale, std::abs(ck));
            if (F.norm() <= opts.tol * scale) {
                ok = true;
                break;
            }
            Eigen::MatrixXcd J(nu, nu);
            int col = 0;
            for (int i = 1; i < r; ++i, ++col) {
                CPoly q = static_cast<double>(-wr[i].mult) * W.deflate(wr[i].location);
                for (int k = 1; k < n; ++k)
                    J(k - 1, col) = k < static_cast<int>(q.c.size()) ? q.c[k] : cd(0);
            }
            for (int j = 1; j < s; ++j, ++col) {
                CPoly q = static_cast<double>(br[j].mult) * B.deflate(br[j].location);
                for (int k = 1; k < n; ++k)
                    J(k - 1, col) = k < static_cast<int>(q.c.size()) ? q.c[k] : cd(0);
            }
            Eigen::VectorXcd step = J.partialPivLu().solve(F);
            if (!step.allFinite()) break;
            double cap = 0.8 * (1.0 + u.norm());
            if (step.norm() > cap) step *= cap / step.norm();
            u -= step;
            if (u.norm() > 1e8) break;
        }
        if (!ok) {
            last_err = "newton did not converge";
            continue;
        }
        CPoly diff = W - B;
        cd c = diff.c.empty() ? cd(0) : diff.c[0];
        double scale = 0;
        for (const cd& ck : W.c) scale = std::max(scale, std::abs(ck));
        if (std::abs(c) < 1e-8 * scale) {
            last_err = "degenerate solution (W == B)";
            continue;
        }
        CPoly p = (1.0 / c) * W;

        try {
            PolyClass pc = classify(p, 1e-9);
            if (pc.kind != PolyKind::Chebyshev) {
                last_err = "solution is not two-valued";
                continue;
            }
            Arc seg{{cd(0), cd(1)}, {0, 1}};
            PlaneTree got = graph_to_tree(lift_arc(p, seg, 1e-9));
            if (detail::min_rooted_code(got) != want) {
                last_err = "converged to a different tree with the same passport";
                continue;
            }
            ShabatSolution sol;
            sol.poly = p;
            sol.white_roots = wr;
            sol.black_roots = br;
            Eigen::VectorXcd F(nu);
            for (int k = 1; k < n; ++k)
                F[k - 1] = k < static_cast<int>(diff.c.size()) ? diff.c[k] : cd(0);
            sol.residual = F.norm() / std::max(1.0, scale);
            sol.tree_code = canonical_code(t);
            return sol;
        } catch (const LiftDivergence& e) {
            last_err = e.what();
        } catch (const NoConvergence& e) {
            last_err = e.what();
        }
    }
    throw NoConvergence("solve_tree: " + last_err);
}

// ---------------------------------------------------------------------------
// full normalization: values to {0,1}, argument gauge fixed

namespace shabatdetail {

inline CPoly shift_arg(const CPoly& p, cd mu) {  // p(z + mu)
    CPoly out = CPoly::constant(p.c.back());
    CPoly lin{{mu, 1.0}};
    for (int k = p.degree() - 1; k >= 0; --k) out = out * lin + CPoly::constant(p.c[k]);
    return out;
}

inline CPoly scale_arg(const CPoly& p, cd a) {  // p(a z)
    CPoly out = p;
    cd f = 1;
    for (auto& ck : out.c) {
        ck *= f;
        f *= a;
    }
    return out;
}

// comparison key tolerant to fp jitter and equivariant under conjugation:
// real candidates win outright (mirror-symmetric trees normalize to real
// coefficients), then (re, |im|) lexicographically, then the imaginary
// sign pattern
inline std::vector<double> rotation_key(const CPoly& p) {
    std::vector<double> key;
    auto grid = [](double x) { return std::round(x * 1e9) / 1e9; };
    bool real = true;
    for (const cd& ck : p.c)
        if (grid(ck.imag()) != 0.0) real = false;
    key.push_back(real ? 0.0 : 1.0);
    for (int k = p.degree(); k >= 0; --k) {
        key.push_back(grid(p.c[k].real()));
        key.push_back(grid(std::abs(p.c[k].imag())));
    }
    for (int k = p.degree(); k >= 0; --k)
        key.push_back(p.c[k].imag() < -5e-10 ? 1.0 : 0.0);
    return key;
}

}  // namespace shabatdetail

/// Canonical representative of p under affine changes of both the argument
/// and the value: critical values {0,1} with the heavier side at 0, the
/// critical points centered, leading coefficient 1, and the leftover n-th
/// root of unity chosen by a deterministic coefficient key.
inline CPoly normalize(const CPoly& p_in, double tol = 1e-9) {
    CPoly p = normalize_values(p_in, tol);
    const int n = p.degree();
    // center: multiplicity-weighted mean of the critical points
    cd mu = -p.c[n - 1] / (static_cast<double>(n) * p.c[n]);
    p = shabatdetail::shift_arg(p, mu);
    // monic
    cd lead = p.c[n];
    cd a = std::pow(std::abs(lead), -1.0 / n) *
           std::polar(1.0, -std::arg(lead) / n);
    p = shabatdetail::scale_arg(p, a);
    // choose among the n rotations z -> zeta z
    CPoly best = p;
    auto bestkey = shabatdetail::rotation_key(p);
    for (int j = 1; j < n; ++j) {
        cd zeta = std::polar(1.0, 2 * M_PI * j / n);
        CPoly cand = shabatdetail::scale_arg(p, zeta);
        auto key = shabatdetail::rotation_key(cand);
        if (key < bestkey) {
            best = cand;
            bestkey = key;
        }
    }
    return best;
}

}  // namespace zolo
