#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include <json.hpp>

#include "common.hpp"

namespace zolo {

/// Dense complex polynomial, coefficients ascending. Trailing exact zeros
/// are trimmed on construction; the zero polynomial is the empty vector.
struct CPoly {
    std::vector<cd> c;

    CPoly() = default;
    explicit CPoly(std::vector<cd> coeffs) : c(std::move(coeffs)) { trim_exact(); }
    static CPoly constant(cd v) { return CPoly{{v}}; }

    void trim_exact() {
        while (!c.empty() && c.back() == cd(0.0, 0.0)) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    cd lead() const { return c.back(); }

    cd eval(cd z) const {
        cd r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
        return r;
    }

    CPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<cd> d(c.size() - 1);
        for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
        return CPoly(std::move(d));
    }

    /// Antiderivative with zero constant term.
    CPoly antiderivative() const {
        std::vector<cd> a(c.size() + 1, cd(0));
        for (size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<double>(k + 1);
        return CPoly(std::move(a));
    }

    // magnitude of the coefficient sum at |z|; residual scale for root tests
    double coef_scale(double absz) const {
        double s = 0, p = 1, m = std::max(1.0, absz);
        for (const cd& ck : c) { s += std::abs(ck) * p; p *= m; }
        return std::max(s, 1e-300);
    }

    friend CPoly operator+(const CPoly& a, const CPoly& b) {
        std::vector<cd> r(std::max(a.c.size(), b.c.size()), cd(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return CPoly(std::move(r));
    }
    friend CPoly operator-(const CPoly& a, const CPoly& b) {
        std::vector<cd> r(std::max(a.c.size(), b.c.size()), cd(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return CPoly(std::move(r));
    }
    friend CPoly operator*(const CPoly& a, const CPoly& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<cd> r(a.c.size() + b.c.size() - 1, cd(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return CPoly(std::move(r));
    }
    friend CPoly operator*(cd s, const CPoly& a) {
        std::vector<cd> r = a.c;
        for (auto& x : r) x *= s;
        return CPoly(std::move(r));
    }
    CPoly minus_const(cd v) const {
        std::vector<cd> r = c;
        if (r.empty()) r.push_back(cd(0));
        r[0] -= v;
        return CPoly(std::move(r));
    }
    /// exact synthetic division by (x - r); remainder discarded
    CPoly deflate(cd r) const {
        std::vector<cd> q(c.size() - 1);
        cd carry = c.back();
        for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
            q[k] = carry;
            carry = c[k] + carry * r;
        }
        return CPoly(std::move(q));
    }
};

struct RootPt {
    cd location;
    int mult;
};

inline CPoly from_roots(const std::vector<RootPt>& roots, cd scale = 1.0) {
    CPoly p = CPoly::constant(scale);
    for (const auto& r : roots)
        for (int k = 0; k < r.mult; ++k) p = p * CPoly{{-r.location, 1.0}};
    return p;
}

/// scale * prod (x - r_i)^{m_i}, integrated with zero constant term.
inline CPoly poly_from_integrand(const std::vector<RootPt>& roots, cd scale = 1.0) {
    return from_roots(roots, scale).antiderivative();
}

// ---------------------------------------------------------------------------
// all-roots solver: Aberth-Ehrlich simultaneous iteration, then multiplicity
// clustering certified by derivative magnitudes at polished centers

namespace detail {

inline cd newton_step_guarded(const CPoly& p, const CPoly& dp, cd z) {
    cd d = dp.eval(z);
    if (std::abs(d) < 1e-300) return cd(0);
    return p.eval(z) / d;
}

inline bool aberth(const CPoly& monic, std::vector<cd>& z, int iters) {
    const int n = monic.degree();
    CPoly dp = monic.derivative();
    for (int it = 0; it < iters; ++it) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            cd pz = monic.eval(z[i]);
            cd dz = dp.eval(z[i]);
            cd Ni;
            if (std::abs(dz) < 1e-290) {
                z[i] += cd(1e-8, 7e-9);
                worst = 1;
                continue;
            }
            Ni = pz / dz;
            cd S = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    cd d = z[i] - z[j];
                    if (std::abs(d) < 1e-290) d = cd(1e-290, 0);
                    S += 1.0 / d;
                }
            cd denom = 1.0 - Ni * S;
            cd w = std::abs(denom) < 1e-290 ? Ni : Ni / denom;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) return true;
    }
    return false;
}

// Newton-polish a multiplicity-m root: iterate on the (m-1)-th derivative.
inline cd polish_root(const CPoly& p, cd z, int m) {
    CPoly q = p;
    for (int k = 1; k < m; ++k) q = q.derivative();
    CPoly dq = q.derivative();
    for (int it = 0; it < 60; ++it) {
        cd step = newton_step_guarded(q, dq, z);
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

// is z a root of multiplicity exactly m, up to scaled residual tolerance?
inline bool certify_mult(const CPoly& p, cd z, int m, double tau = 1e-9) {
    CPoly q = p;
    for (int j = 0; j < m; ++j) {
        double bound = tau * q.coef_scale(std::abs(z));
        if (std::abs(q.eval(z)) > bound) return false;
        q = q.derivative();
    }
    if (q.zero()) return true;
    return std::abs(q.eval(z)) > tau * q.coef_scale(std::abs(z));
}

}  // namespace detail

namespace detail {

// single-linkage components at the given relative radius, then certify the
// whole component as one root of multiplicity = component size; on failure
// shrink the radius and retry inside the component
inline void cluster_certified(const CPoly& p, const std::vector<cd>& pts, double radius,
                              std::vector<RootPt>& out) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (comp[j] >= 0) continue;
                double r = radius * (1.0 + std::min(std::abs(pts[v]), std::abs(pts[j])));
                if (std::abs(pts[v] - pts[j]) <= r) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    for (int cidx = 0; cidx < ncomp; ++cidx) {
        std::vector<cd> members;
        for (int i = 0; i < n; ++i)
            if (comp[i] == cidx) members.push_back(pts[i]);
        const int m = static_cast<int>(members.size());
        cd centroid = 0;
        for (cd z : members) centroid += z;
        centroid /= static_cast<double>(m);
        cd zp = polish_root(p, centroid, m);
        bool near = true;
        for (cd z : members)
            if (std::abs(z - zp) > 40.0 * radius * (1.0 + std::abs(zp))) near = false;
        if (near && certify_mult(p, zp, m)) {
            out.push_back({zp, m});
        } else if (m == 1) {
            out.push_back({polish_root(p, members[0], 1), 1});
        } else if (radius > 1e-11) {
            cluster_certified(p, members, radius / 16.0, out);
        } else {
            for (cd z : members) out.push_back({polish_root(p, z, 1), 1});
        }
    }
}

}  // namespace detail

/// All roots with multiplicities. Approximations are clustered by certified
/// single linkage: a component is accepted as one multiplicity-m root only
/// when the polished center passes scaled derivative-residual tests, else
/// the linkage radius shrinks, so distinct roots separated by >= ~1e-3 are
/// never conflated while z^m-type clusters collapse correctly.
inline std::vector<RootPt> roots(const CPoly& p_in, double tol = 1e-9) {
    if (p_in.degree() < 1) throw std::invalid_argument("roots: degree >= 1 required");
    CPoly p = p_in;
    int zero_mult = 0;
    while (!p.c.empty() && p.c.front() == cd(0.0, 0.0)) {
        p.c.erase(p.c.begin());
        ++zero_mult;
    }
    const int n = p.degree();
    std::vector<cd> pts(zero_mult, cd(0.0, 0.0));
    if (n >= 1) {
        CPoly monic = (1.0 / p.lead()) * p;
        std::vector<cd> z(n);
        double R = 0;
        for (const cd& ck : monic.c) R = std::max(R, std::abs(ck));
        R = 1.0 + R;
        Rng rng(0x5eedULL + static_cast<uint64_t>(n));
        bool done = false;
        for (int attempt = 0; attempt < 24 && !done; ++attempt) {
            double r0 = std::min(R, 0.5 + 0.35 * attempt);
            double phase = 0.41 + 0.73 * attempt;
            for (int k = 0; k < n; ++k) {
                double th = 2 * M_PI * k / n + phase;
                z[k] = r0 * cd(std::cos(th), std::sin(th));
                if (attempt > 0) z[k] += 0.05 * attempt * rand_unit(rng);
            }
            done = detail::aberth(monic, z, 600);
            if (!done && attempt >= 2) {
                // accept a stalled configuration if residuals are tiny
                done = true;
                for (cd zi : z)
                    if (std::abs(monic.eval(zi)) > 1e-7 * monic.coef_scale(std::abs(zi))) {
                        done = false;
                        break;
                    }
            }
        }
        if (!done) throw NoConvergence("roots: simultaneous iteration failed");
        pts.insert(pts.end(), z.begin(), z.end());
    }

    std::vector<RootPt> out;
    detail::cluster_certified(p_in, pts, std::max(tol, 2e-2), out);
    int total = 0;
    for (auto& c : out) total += c.mult;
    if (total != p_in.degree()) throw NoConvergence("roots: multiplicity bookkeeping failed");
    for (auto& c : out) {
        if (std::abs(p_in.eval(c.location)) > 1e-6 * p_in.coef_scale(std::abs(c.location)))
            throw NoConvergence("roots: residual too large");
    }
    std::sort(out.begin(), out.end(),
              [](const RootPt& a, const RootPt& b) { return complex_less(a.location, b.location); });
    return out;
}

// ---------------------------------------------------------------------------
// critical data and classification

struct CriticalPoint {
    cd location;
    int mult;   // multiplicity as root of p - value
    cd value;
};

struct CriticalData {
    std::vector<CriticalPoint> points;
    double tol;
};

inline CriticalData critical_data(const CPoly& p, double tol = 1e-9) {
    if (p.degree() < 2) throw std::invalid_argument("critical_data: degree >= 2 required");
    CriticalData cdta;
    cdta.tol = tol;
    for (const RootPt& r : roots(p.derivative(), tol))
        cdta.points.push_back({r.location, r.mult + 1, p.eval(r.location)});
    return cdta;
}

/// Partition of values into tolerance clusters (transitive closure).
/// Returns member indices per cluster; clusters ordered by their smallest
/// (re, im) member, members kept in input order.
inline std::vector<std::vector<int>> cluster_values(const std::vector<cd>& values,
                                                    double tol = 1e-9) {
    const int n = static_cast<int>(values.size());
    double scale = 1.0;
    for (cd v : values) scale = std::max(scale, std::abs(v));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(values[i] - values[j]) <= tol * scale) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        cd va = values[a[0]], vb = values[b[0]];
        for (int i : a) if (complex_less(values[i], va)) va = values[i];
        for (int i : b) if (complex_less(values[i], vb)) vb = values[i];
        return complex_less(va, vb);
    });
    return out;
}

enum class PolyKind { OneCritical, Chebyshev, Zolotarev, ManyValues };

inline std::string kind_name(PolyKind k) {
    switch (k) {
        case PolyKind::OneCritical: return "one-critical";
        case PolyKind::Chebyshev: return "chebyshev";
        case PolyKind::Zolotarev: return "zolotarev";
        default: return "many-values";
    }
}

/// Critical values grouped within tolerance, plus the full passport groups
/// (padded with 1-entries to sum to the degree).
struct PolyClass {
    PolyKind kind;
    struct Cluster {
        cd value;                          // representative: smallest (re,im) member
        std::vector<CriticalPoint> points; // critical points in the cluster
        std::vector<int> full_group;       // multiplicities incl. simple preimages
    };
    std::vector<Cluster> clusters;  // ordered by representative value (re, im)
    int degree = 0;

    /// Trimmed multiplicity groups in canonical (descending lex) order.
    std::vector<std::vector<int>> trimmed_groups() const {
        std::vector<std::vector<int>> gs;
        for (const auto& cl : clusters) {
            std::vector<int> g;
            for (const auto& pt : cl.points) g.push_back(pt.mult);
            std::sort(g.rbegin(), g.rend());
            gs.push_back(std::move(g));
        }
        std::sort(gs.begin(), gs.end(),
                  [](const auto& a, const auto& b) { return TriPassportLess(b, a); });
        return gs;
    }
    static bool TriPassportLess(const std::vector<int>& a, const std::vector<int>& b) {
        size_t m = std::min(a.size(), b.size());
        for (size_t i = 0; i < m; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }
};

inline PolyClass classify(const CPoly& p, double tol = 1e-9) {
    CriticalData cdta = critical_data(p, tol);
    std::vector<cd> vals;
    for (const auto& pt : cdta.points) vals.push_back(pt.value);
    auto clusters = cluster_values(vals, tol);
    PolyClass pc;
    pc.degree = p.degree();
    for (const auto& members : clusters) {
        PolyClass::Cluster cl;
        cl.value = vals[members[0]];
        int multsum = 0;
        for (int i : members) {
            if (complex_less(vals[i], cl.value)) cl.value = vals[i];
            cl.points.push_back(cdta.points[i]);
            cl.full_group.push_back(cdta.points[i].mult);
            multsum += cdta.points[i].mult;
        }
        std::sort(cl.full_group.rbegin(), cl.full_group.rend());
        // simple preimages of this value pad the group up to the degree
        // (an over-merged cluster near a deep degeneration can exceed it;
        // the kind and group data still describe what was seen)
        int extra = std::max(0, p.degree() - multsum);
        cl.full_group.insert(cl.full_group.end(), extra, 1);
        pc.clusters.push_back(std::move(cl));
    }
    std::sort(pc.clusters.begin(), pc.clusters.end(),
              [](const auto& a, const auto& b) { return complex_less(a.value, b.value); });
    switch (pc.clusters.size()) {
        case 1: pc.kind = PolyKind::OneCritical; break;
        case 2: pc.kind = PolyKind::Chebyshev; break;
        case 3: pc.kind = PolyKind::Zolotarev; break;
        default: pc.kind = PolyKind::ManyValues; break;
    }
    return pc;
}

// ---------------------------------------------------------------------------
// JSON form: {"coeffs": [[re, im], ...]} ascending degree

inline nlohmann::json poly_to_json(const CPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cd& ck : p.c) arr.push_back({ck.real(), ck.imag()});
    return nlohmann::json{{"coeffs", arr}};
}

inline CPoly poly_from_json(const nlohmann::json& j) {
    std::vector<cd> c;
    for (const auto& e : j.at("coeffs")) c.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return CPoly(std::move(c));
}

}  // namespace zolo
