#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "planetree.hpp"
#include "polynum.hpp"

namespace zolo {

/// Simple polyline through the critical values. Anchors index into the
/// point list: 2 anchors for the two-value (segment) case, 3 for the
/// three-value case with anchors[1] the interior value.
struct Arc {
    std::vector<cd> points;
    std::vector<int> anchors;

    int segments_between(int ai) const { return anchors[ai + 1] - anchors[ai]; }
};

inline Arc arc_through(std::vector<cd> values) {
    std::sort(values.begin(), values.end(), complex_less);
    Arc a;
    a.points = values;
    for (int i = 0; i < static_cast<int>(values.size()); ++i) a.anchors.push_back(i);
    return a;
}

namespace liftdetail {

inline bool segments_cross(cd a, cd b, cd c, cd d) {
    auto cross = [](cd u, cd v) { return u.real() * v.imag() - u.imag() * v.real(); };
    double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace liftdetail

inline void validate_arc(const Arc& arc) {
    if (arc.points.size() < 2 || arc.anchors.size() < 2 || arc.anchors.size() > 3)
        throw std::invalid_argument("arc: need 2 or 3 anchors");
    if (arc.anchors.front() != 0 ||
        arc.anchors.back() != static_cast<int>(arc.points.size()) - 1)
        throw std::invalid_argument("arc: anchors must start and end the polyline");
    for (size_t i = 1; i < arc.anchors.size(); ++i)
        if (arc.anchors[i] <= arc.anchors[i - 1])
            throw std::invalid_argument("arc: anchor indices must increase");
    for (size_t i = 0; i + 1 < arc.points.size(); ++i)
        if (std::abs(arc.points[i + 1] - arc.points[i]) < 1e-14)
            throw std::invalid_argument("arc: repeated consecutive points");
    // strictly crossing interior segments make the polyline non-simple;
    // collinear overlaps are tolerated (the straight 3-value arc is one)
    for (size_t i = 0; i + 1 < arc.points.size(); ++i)
        for (size_t j = i + 2; j + 1 < arc.points.size(); ++j)
            if (liftdetail::segments_cross(arc.points[i], arc.points[i + 1], arc.points[j],
                                           arc.points[j + 1]))
                throw std::invalid_argument("arc: polyline self-intersects");
}

/// Embedded pullback graph: vertices over the anchor values, one edge per
/// sheet per anchor-to-anchor stretch, with sampled plane curves and the
/// counterclockwise rotation read from the curve tangents.
struct EmbeddedGraph {
    struct Vertex {
        cd location;
        Color color;
        int degree;
    };
    struct Edge {
        int v1, v2;
        std::vector<cd> curve;  // from v1 to v2
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;  // ccw incident (edge, end) list per vertex
    int n_anchors = 0;

    int n_edges() const { return static_cast<int>(edges.size()); }
};

namespace liftdetail {

struct Tracker {
    const CPoly& p;
    CPoly dp;
    double tol;
    std::vector<cd> crit;  // critical points; steps shrink on approach

    explicit Tracker(const CPoly& poly, double tol_) : p(poly), dp(poly.derivative()), tol(tol_) {
        try {
            for (const RootPt& r : roots(dp, tol_)) crit.push_back(r.location);
        } catch (const NoConvergence&) {}
    }

    double crit_dist(cd z) const {
        double d = 1e300;
        for (cd c : crit) d = std::min(d, std::abs(z - c));
        return d;
    }

    // Newton-correct z so that p(z) = w
    bool correct(cd& z, cd w, double guard = 0.0) const {
        cd z0 = z;
        for (int it = 0; it < 14; ++it) {
            cd f = p.eval(z) - w;
            if (std::abs(f) <= 1e-13 * p.coef_scale(std::abs(z))) return true;
            cd d = dp.eval(z);
            if (std::abs(d) < 1e-280) return false;
            cd step = f / d;
            z -= step;
            if (guard > 0 && std::abs(z - z0) > guard) return false;
        }
        return std::abs(p.eval(z) - w) <= 1e-11 * p.coef_scale(std::abs(z));
    }

    // follow p(z(t)) = w0 + t (w1 - w0) from t0 to t1, given p(z) = w(t0)
    cd run(cd z, cd w0, cd w1, double t0, double t1, std::vector<cd>* samples) const {
        double t = t0;
        double dt = 0.05;
        const cd dw = w1 - w0;
        int guard_iters = 0;
        while (t < t1 && guard_iters++ < 60000) {
            dt = std::min(dt, t1 - t);
            cd d = dp.eval(z);
            cd predictor = std::abs(d) > 1e-280 ? dw * dt / d : cd(0);
            double maxstep = 0.2 * (1.0 + std::abs(z));
            if (!crit.empty()) maxstep = std::min(maxstep, 0.6 * crit_dist(z) + 1e-13);
            if (std::abs(predictor) > maxstep) {
                dt *= 0.5;
                if (dt < 1e-15) throw LiftDivergence("continuation step underflow");
                continue;
            }
            cd znew = z + predictor;
            double guard = std::max(4.0 * std::abs(predictor), 1e-8 * (1.0 + std::abs(z)));
            if (!correct(znew, w0 + (t + dt) * dw, guard)) {
                dt *= 0.5;
                if (dt < 1e-15) throw LiftDivergence("continuation step control failed");
                continue;
            }
            z = znew;
            t += dt;
            dt = std::min(dt * 1.4, 0.1);
            if (samples) samples->push_back(z);
        }
        if (t < t1) throw LiftDivergence("continuation stalled");
        return z;
    }
};

struct AnchorVertexSet {
    std::vector<RootPt> roots;  // vertex locations over this anchor value
    double sep;                 // min pairwise separation
};

inline AnchorVertexSet anchor_vertices(const CPoly& p, cd value, double tol) {
    AnchorVertexSet s;
    s.roots = roots(p.minus_const(value), tol);
    s.sep = 1e300;
    for (size_t i = 0; i < s.roots.size(); ++i)
        for (size_t j = i + 1; j < s.roots.size(); ++j)
            s.sep = std::min(s.sep, std::abs(s.roots[i].location - s.roots[j].location));
    if (s.roots.size() == 1) s.sep = 1.0 + std::abs(s.roots[0].location);
    return s;
}

// track a sheet to an anchor along a list of linear pieces; the final piece
// stops at 1-eps and the sheet is matched to an anchor vertex with a margin
// test, shrinking eps when the match is ambiguous
inline int track_to_anchor(const Tracker& trk, cd z, const std::vector<std::pair<cd, cd>>& pieces,
                           const AnchorVertexSet& targets, std::vector<cd>* samples) {
    for (size_t k = 0; k + 1 < pieces.size(); ++k)
        z = trk.run(z, pieces[k].first, pieces[k].second, 0.0, 1.0, samples);
    const auto& [w0, w1] = pieces.back();
    double reached = 0.0;
    int best = -1;
    for (double eps = 1e-3; eps > 1e-13; eps /= 64.0) {
        double target = 1.0 - eps;
        z = trk.run(z, w0, w1, reached, target, samples);
        reached = target;
        double d1 = 1e300, d2 = 1e300;
        int arg = -1;
        for (size_t i = 0; i < targets.roots.size(); ++i) {
            double d = std::abs(z - targets.roots[i].location);
            if (d < d1) {
                d2 = d1;
                d1 = d;
                arg = static_cast<int>(i);
            } else
                d2 = std::min(d2, d);
        }
        if (targets.roots.size() == 1 || d1 < 0.45 * d2) {
            best = arg;
            break;
        }
    }
    if (best < 0) throw LiftDivergence("sheet could not be matched to an anchor vertex");
    return best;
}

}  // namespace liftdetail

/// Lifts the arc through all n sheets of p. Requires the cluster count of
/// p's critical values to match the anchor count.
inline EmbeddedGraph lift_arc(const CPoly& p, const Arc& arc, double tol = 1e-9) {
    validate_arc(arc);
    PolyClass pc = classify(p, tol);
    const int want = static_cast<int>(arc.anchors.size());
    if (want == 2 && pc.kind != PolyKind::Chebyshev && pc.kind != PolyKind::OneCritical)
        throw NotMatchingClass("arc anchor count does not match the critical value count");
    if (want == 3 && pc.kind != PolyKind::Zolotarev)
        throw NotMatchingClass("arc anchor count does not match the critical value count");
    // every critical value must sit on an anchor; anchors beyond that (the
    // z^n-style case) are regular and pull back to simple leaves
    std::vector<cd> anchor_vals;
    for (int ai : arc.anchors) anchor_vals.push_back(arc.points[ai]);
    for (const auto& cl : pc.clusters) {
        bool hit = false;
        for (cd v : anchor_vals)
            if (std::abs(cl.value - v) <= 1e-6 * (1.0 + std::abs(v))) hit = true;
        if (!hit) throw NotMatchingClass("arc misses a critical value");
    }

    const int n = p.degree();
    liftdetail::Tracker trk(p, tol);

    EmbeddedGraph g;
    g.n_anchors = want;
    // vertices per anchor
    std::vector<liftdetail::AnchorVertexSet> sets;
    std::vector<int> vertex_base;
    for (int ai = 0; ai < want; ++ai) {
        auto s = liftdetail::anchor_vertices(p, anchor_vals[ai], tol);
        vertex_base.push_back(static_cast<int>(g.vertices.size()));
        Color col;
        if (want == 2)
            col = ai == 0 ? Color::White : Color::Black;
        else
            col = ai == 1 ? Color::White : (ai == 0 ? Color::Black : Color::Grey);
        for (const auto& r : s.roots) {
            int deg = (want == 3 && ai == 1) ? 2 * r.mult : r.mult;
            g.vertices.push_back({r.location, col, deg});
        }
        sets.push_back(std::move(s));
    }

    // critical points for base selection
    std::vector<cd> crit;
    for (const auto& cl : pc.clusters)
        for (const auto& pt : cl.points) crit.push_back(pt.location);
    std::vector<cd> critvals;
    for (const auto& cl : pc.clusters) critvals.push_back(cl.value);

    for (int stretch = 0; stretch + 1 < want; ++stretch) {
        // linear pieces of the polyline between anchors
        std::vector<std::pair<cd, cd>> pieces;
        for (int k = arc.anchors[stretch]; k < arc.anchors[stretch + 1]; ++k)
            pieces.push_back({arc.points[k], arc.points[k + 1]});
        // base: midpoint of the piece farthest from the critical values
        int bestpiece = 0;
        double bestd = -1;
        for (size_t k = 0; k < pieces.size(); ++k) {
            cd mid = 0.5 * (pieces[k].first + pieces[k].second);
            double d = 1e300;
            for (cd v : critvals) d = std::min(d, std::abs(mid - v));
            if (d > bestd) {
                bestd = d;
                bestpiece = static_cast<int>(k);
            }
        }
        cd base = 0.5 * (pieces[bestpiece].first + pieces[bestpiece].second);
        auto base_roots = roots(p.minus_const(base), tol);
        if (static_cast<int>(base_roots.size()) != n)
            throw LiftDivergence("arc base point is not a regular value");

        // pieces from base back to the left anchor, and forward to the right
        std::vector<std::pair<cd, cd>> back{{base, pieces[bestpiece].first}};
        for (int k = bestpiece - 1; k >= 0; --k)
            back.push_back({pieces[k].second, pieces[k].first});
        std::vector<std::pair<cd, cd>> fwd{{base, pieces[bestpiece].second}};
        for (size_t k = bestpiece + 1; k < pieces.size(); ++k) fwd.push_back(pieces[k]);

        for (const auto& r : base_roots) {
            std::vector<cd> back_samples{r.location};
            std::vector<cd> fwd_samples;
            int vleft = liftdetail::track_to_anchor(trk, r.location, back, sets[stretch],
                                                    &back_samples);
            int vright = liftdetail::track_to_anchor(trk, r.location, fwd, sets[stretch + 1],
                                                     &fwd_samples);
            EmbeddedGraph::Edge e;
            e.v1 = vertex_base[stretch] + vleft;
            e.v2 = vertex_base[stretch + 1] + vright;
            e.curve.push_back(g.vertices[e.v1].location);
            for (auto it = back_samples.rbegin(); it != back_samples.rend(); ++it)
                e.curve.push_back(*it);
            for (cd z : fwd_samples) e.curve.push_back(z);
            e.curve.push_back(g.vertices[e.v2].location);
            g.edges.push_back(std::move(e));
        }
    }

    // rotations from outgoing tangents
    g.rotation.assign(g.vertices.size(), {});
    std::vector<std::vector<std::pair<double, int>>> ang(g.vertices.size());
    for (int ei = 0; ei < g.n_edges(); ++ei) {
        const auto& e = g.edges[ei];
        auto dir_from = [&](int vid, bool from_start) {
            cd v = g.vertices[vid].location;
            const auto& c = e.curve;
            if (from_start) {
                for (const cd& z : c)
                    if (std::abs(z - v) > 1e-9 * (1.0 + std::abs(v))) return z - v;
            } else {
                for (auto it = c.rbegin(); it != c.rend(); ++it)
                    if (std::abs(*it - v) > 1e-9 * (1.0 + std::abs(v))) return *it - v;
            }
            return cd(1, 0);
        };
        ang[e.v1].push_back({std::arg(dir_from(e.v1, true)), ei});
        ang[e.v2].push_back({std::arg(dir_from(e.v2, false)), ei});
    }
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        auto& a = ang[v];
        std::sort(a.begin(), a.end());
        for (auto& [th, ei] : a) g.rotation[v].push_back(ei);
        if (static_cast<int>(a.size()) != g.vertices[v].degree)
            throw LiftDivergence("vertex degree mismatch after lifting");
    }
    // connected and acyclic comes for free when counts match: E = V - 1 plus
    // every vertex touched; verify anyway
    if (g.n_edges() != static_cast<int>(g.vertices.size()) - 1)
        throw LiftDivergence("lifted graph is not a tree");
    return g;
}

/// EmbeddedGraph -> PlaneTree (keeps colors; neighbor order from rotation).
inline PlaneTree graph_to_tree(const EmbeddedGraph& g) {
    std::vector<PlaneTree::Vertex> vs(g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        vs[v].id = static_cast<int>(v);
        vs[v].color = g.vertices[v].color;
        for (int ei : g.rotation[v]) {
            const auto& e = g.edges[ei];
            vs[v].neighbors.push_back(e.v1 == static_cast<int>(v) ? e.v2 : e.v1);
        }
    }
    return build_tree(vs);
}

/// Affine change of the value variable sending the two critical values to
/// {0,1}: the side with the larger critical multiplicity sum goes to 0,
/// ties broken by the lexicographically smaller pullback tree code.
inline CPoly normalize_values(const CPoly& p, double tol = 1e-9) {
    PolyClass pc = classify(p, tol);
    if (pc.kind != PolyKind::Chebyshev) throw NotChebyshev("two critical values required");
    cd va = pc.clusters[0].value, vb = pc.clusters[1].value;
    int sa = 0, sb = 0;
    for (const auto& pt : pc.clusters[0].points) sa += pt.mult;
    for (const auto& pt : pc.clusters[1].points) sb += pt.mult;
    auto remap = [&](cd zero_val, cd one_val) {
        cd d = one_val - zero_val;
        return (1.0 / d) * p.minus_const(zero_val);
    };
    if (sa > sb) return remap(va, vb);
    if (sb > sa) return remap(vb, va);
    CPoly pa = remap(va, vb), pb = remap(vb, va);
    Arc seg{{cd(0), cd(1)}, {0, 1}};
    std::string ca = detail::min_rooted_code(graph_to_tree(lift_arc(pa, seg, tol)));
    std::string cb = detail::min_rooted_code(graph_to_tree(lift_arc(pb, seg, tol)));
    return ca <= cb ? pa : pb;
}

/// Pullback tree of the straight segment between the two critical values,
/// after value normalization (white over 0).
inline PlaneTree extract_tree(const CPoly& p, double tol = 1e-9) {
    CPoly pn = normalize_values(p, tol);
    Arc seg{{cd(0), cd(1)}, {0, 1}};
    return graph_to_tree(lift_arc(pn, seg, tol));
}

/// Three-value pullback; different arcs may give non-isotopic trees.
inline EmbeddedGraph zolotarev_tree(const CPoly& p, const Arc& arc, double tol = 1e-9) {
    PolyClass pc = classify(p, tol);
    if (pc.kind != PolyKind::Zolotarev) throw NotMatchingClass("three critical values required");
    return lift_arc(p, arc, tol);
}

// ---------------------------------------------------------------------------
// monodromy

using Perm = std::vector<int>;

inline Perm compose(const Perm& second, const Perm& first) {  // apply first, then second
    Perm r(first.size());
    for (size_t k = 0; k < first.size(); ++k) r[k] = second[first[k]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t k = 0; k < p.size(); ++k) r[p[k]] = static_cast<int>(k);
    return r;
}

inline bool is_ncycle(const Perm& p) {
    int k = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        k = p[k];
        if (k == 0) return i + 1 == p.size();
    }
    return false;
}

inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> t;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, k = static_cast<int>(i);
        while (!seen[k]) {
            seen[k] = 1;
            k = p[k];
            ++len;
        }
        t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

/// Order of the permutation group generated by the given permutations,
/// by breadth-first closure.
inline long long group_order(const std::vector<Perm>& gens) {
    if (gens.empty()) return 1;
    const size_t n = gens[0].size();
    Perm id(n);
    for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (const auto& gen : gens) {
                Perm h = compose(gen, g);
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
        if (seen.size() > 4000000) throw std::runtime_error("group closure too large");
    }
    return static_cast<long long>(seen.size());
}

struct MonodromyData {
    std::vector<cd> values;        // finite critical values, sorted by (re, im)
    std::vector<Perm> perms;       // loop permutation per value, same order
    Perm infinity_perm;            // composite of perms in listed order
    long long order = 0;           // order of the generated group
};

/// Monodromy permutations of the n sheets around each finite critical
/// value. Loops are lifted from a far regular base point; the tuple is
/// brought into (re, im) value order by product-preserving moves, so the
/// composite equals the loop around infinity (an n-cycle).
inline MonodromyData monodromy(const CPoly& p, std::optional<cd> base_opt = std::nullopt,
                               double tol = 1e-9) {
    PolyClass pc = classify(p, tol);
    if (pc.kind == PolyKind::ManyValues)
        throw NotMatchingClass("monodromy supports up to 3 finite critical values");
    const int n = p.degree();
    std::vector<cd> vals;
    for (const auto& cl : pc.clusters) vals.push_back(cl.value);
    const int m = static_cast<int>(vals.size());
    std::vector<double> radius(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double d = 1e300;
        for (int j = 0; j < m; ++j)
            if (j != i) d = std::min(d, std::abs(vals[i] - vals[j]));
        radius[i] = 0.25 * d;
    }
    if (m == 1) radius[0] = 0.5 * (1.0 + std::abs(vals[0]));

    cd center = 0;
    for (cd v : vals) center += v;
    center /= static_cast<double>(m);
    double spread = 1.0;
    for (cd v : vals) spread = std::max(spread, std::abs(v - center));

    auto seg_dist = [](cd a, cd b, cd q) {
        cd ab = b - a;
        double t = std::clamp(((q - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
        return std::abs(q - (a + t * ab));
    };
    auto base_ok = [&](cd base) {
        for (int i = 0; i < m; ++i) {
            cd entry = vals[i] + radius[i] * (base - vals[i]) / std::abs(base - vals[i]);
            for (int j = 0; j < m; ++j)
                if (j != i && seg_dist(base, entry, vals[j]) < 1.6 * radius[j]) return false;
        }
        return true;
    };
    std::vector<cd> base_candidates;
    if (base_opt) {
        if (!base_ok(*base_opt)) throw NotMatchingClass("base point too close to a branch segment");
        base_candidates.push_back(*base_opt);
    } else {
        for (int k = 0; k < 64 && base_candidates.size() < 6; ++k) {
            double th = 2.399963229728653 * k;  // golden angle
            cd cand = center + (3.0 * spread + 2.0) * cd(std::cos(th), std::sin(th));
            if (base_ok(cand)) base_candidates.push_back(cand);
        }
        if (base_candidates.empty()) throw LiftDivergence("no admissible monodromy base point");
    }

    cd base = base_candidates[0];
    std::vector<RootPt> starts;
    liftdetail::Tracker trk(p, tol);
    auto lift_loop = [&](int vi) -> Perm {
        // base -> entry -> ccw circle -> back
        std::vector<cd> path;
        cd dir = (base - vals[vi]) / std::abs(base - vals[vi]);
        cd entry = vals[vi] + radius[vi] * dir;
        path.push_back(base);
        const int M = 48;
        double th0 = std::arg(dir);
        path.push_back(entry);
        for (int k = 1; k <= M; ++k) {
            double th = th0 + 2 * M_PI * k / M;
            path.push_back(vals[vi] + radius[vi] * cd(std::cos(th), std::sin(th)));
        }
        path.push_back(base);
        Perm perm(n, -1);
        for (int s = 0; s < n; ++s) {
            cd z = starts[s].location;
            for (size_t k = 0; k + 1 < path.size(); ++k)
                z = trk.run(z, path[k], path[k + 1], 0.0, 1.0, nullptr);
            int bestj = -1;
            double d1 = 1e300, d2 = 1e300;
            for (int j = 0; j < n; ++j) {
                double d = std::abs(z - starts[j].location);
                if (d < d1) {
                    d2 = d1;
                    d1 = d;
                    bestj = j;
                } else
                    d2 = std::min(d2, d);
            }
            if (d1 > 0.25 * d2 && n > 1) throw LiftDivergence("loop endpoint match ambiguous");
            perm[s] = bestj;
        }
        Perm check = perm;
        std::sort(check.begin(), check.end());
        for (int k = 0; k < n; ++k)
            if (check[k] != k) throw LiftDivergence("loop permutation is not a bijection");
        return perm;
    };

    // angular order around the base; the composite in this order is the
    // loop around everything; fall back to another admissible base when a
    // lift misbehaves numerically
    std::vector<Perm> perms_ang(m);
    std::vector<cd> vals_ang(m);
    Perm total(n);
    {
        std::string lasterr = "no base tried";
        bool done = false;
        for (cd cand : base_candidates) {
            base = cand;
            try {
                starts = roots(p.minus_const(base), tol);
                if (static_cast<int>(starts.size()) != n)
                    throw LiftDivergence("base is not a regular value");
                std::vector<int> order_idx(m);
                std::iota(order_idx.begin(), order_idx.end(), 0);
                std::sort(order_idx.begin(), order_idx.end(), [&](int i, int j) {
                    return std::arg(vals[i] - base) < std::arg(vals[j] - base);
                });
                for (int k = 0; k < m; ++k) {
                    perms_ang[k] = lift_loop(order_idx[k]);
                    vals_ang[k] = vals[order_idx[k]];
                }
                std::iota(total.begin(), total.end(), 0);
                for (int k = 0; k < m; ++k) total = compose(perms_ang[k], total);
                if (!is_ncycle(total))
                    throw LiftDivergence("composite of branch loops is not an n-cycle");
                done = true;
                break;
            } catch (const LiftDivergence& e) {
                lasterr = e.what();
            } catch (const NoConvergence& e) {
                lasterr = e.what();
            }
        }
        if (!done) throw LiftDivergence("monodromy failed on all base points: " + lasterr);
    }

    // bubble into (re, im) order with product-preserving moves:
    // (a, b) -> (b, b a b^-1)
    std::vector<std::pair<cd, Perm>> tup(m);
    for (int k = 0; k < m; ++k) tup[k] = {vals_ang[k], perms_ang[k]};
    for (int pass = 0; pass < m; ++pass)
        for (int k = 0; k + 1 < m; ++k)
            if (complex_less(tup[k + 1].first, tup[k].first)) {
                auto a = tup[k], b = tup[k + 1];
                tup[k] = b;
                tup[k + 1] = {a.first, compose(compose(b.second, a.second), inverse(b.second))};
            }

    MonodromyData md;
    for (auto& [v, perm] : tup) {
        md.values.push_back(v);
        md.perms.push_back(perm);
    }
    Perm tot2(n);
    std::iota(tot2.begin(), tot2.end(), 0);
    for (const auto& perm : md.perms) tot2 = compose(perm, tot2);
    md.infinity_perm = tot2;
    if (tot2 != total) throw LiftDivergence("reordering failed to preserve the composite");
    md.order = group_order(md.perms);
    return md;
}

}  // namespace zolo
