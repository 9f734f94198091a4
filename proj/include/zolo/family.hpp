#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "catalog.hpp"
#include "pullback.hpp"

namespace zolo {

/// A point mentioned in a constraint: a fixed complex number or the name
/// of a free root parameter.
struct PointRef {
    std::optional<cd> value;
    std::string param;
};

/// One-parameter (or few-parameter) polynomial family: p is the zero-constant
/// antiderivative of scale * prod (x - root_i)^{mult_i}, some root locations
/// free. Constraints p(u) = p(v) are imposed as divided differences
/// (p(u)-p(v))/(u-v) = 0, which kills the spurious u = v branches and has
/// the right limit at collisions.
struct FamilySpec {
    struct Root {
        int mult = 1;
        std::optional<cd> fixed;
        std::string param;  // set when not fixed
    };
    std::string id;
    std::vector<Root> roots;
    std::vector<std::pair<PointRef, PointRef>> constraints;
    std::vector<std::string> params;  // driving parameter first
    bool variety = false;             // more parameters than constraints + 1

    int degree() const {
        int d = 1;
        for (const auto& r : roots) d += r.mult;
        return d;
    }
};

using Assignment = std::map<std::string, cd>;

inline cd point_of(const PointRef& ref, const Assignment& asg) {
    if (ref.value) return *ref.value;
    auto it = asg.find(ref.param);
    if (it == asg.end()) throw std::invalid_argument("unassigned parameter " + ref.param);
    return it->second;
}

inline CPoly family_poly(const FamilySpec& f, const Assignment& asg) {
    std::vector<RootPt> rs;
    for (const auto& r : f.roots)
        rs.push_back({r.fixed ? *r.fixed : point_of({std::nullopt, r.param}, asg), r.mult});
    return poly_from_integrand(rs);
}

/// (p(u) - p(v)) / (u - v), evaluated stably as a polynomial in u and v.
inline cd divided_difference(const CPoly& p, cd u, cd v) {
    cd acc = 0;
    std::vector<cd> upow{1.0}, vpow{1.0};
    for (int k = 1; k <= p.degree(); ++k) {
        upow.push_back(upow.back() * u);
        vpow.push_back(vpow.back() * v);
    }
    for (int k = 1; k <= p.degree(); ++k) {
        if (p.c[k] == cd(0)) continue;
        cd s = 0;
        for (int i = 0; i < k; ++i) s += upow[i] * vpow[k - 1 - i];
        acc += p.c[k] * s;
    }
    return acc;
}

inline Eigen::VectorXcd constraint_residuals(const FamilySpec& f, const Assignment& asg) {
    CPoly p = family_poly(f, asg);
    Eigen::VectorXcd r(f.constraints.size());
    for (size_t k = 0; k < f.constraints.size(); ++k)
        r[k] = divided_difference(p, point_of(f.constraints[k].first, asg),
                                  point_of(f.constraints[k].second, asg));
    return r;
}

/// Solves the constraints for the non-driving parameters by Newton from the
/// seeded values; the result depends continuously on the driving parameter
/// when re-seeded from the previous solution.
inline Assignment resolve_constraints(const FamilySpec& f, const Assignment& given,
                                      double tol = 1e-12) {
    std::vector<std::string> unknowns;
    for (const auto& name : f.params)
        if (!given.count(name)) throw std::invalid_argument("missing seed or value for " + name);
    for (size_t i = 1; i < f.params.size(); ++i) unknowns.push_back(f.params[i]);
    // the driving parameter is fixed; everything else is free
    const int m = static_cast<int>(unknowns.size());
    if (m != static_cast<int>(f.constraints.size()))
        throw std::invalid_argument("resolve needs #constraints == #dependent parameters");
    Assignment asg = given;
    if (m == 0) return asg;
    auto resid = [&](const Assignment& a) { return constraint_residuals(f, a); };
    double scale = 1.0;
    {
        CPoly p = family_poly(f, asg);
        for (const cd& ck : p.c) scale = std::max(scale, std::abs(ck));
    }
    // take the Newton step even when the residual already looks converged:
    // the residual scale itself can degenerate along a branch (a parameter
    // approaching a fixed root), and the step stays exact for constraints
    // linear in the unknowns
    Eigen::VectorXcd F = resid(asg);
    for (int it = 0; it < 120; ++it) {
        Eigen::MatrixXcd J(m, m);
        const double h = 1e-7;
        for (int j = 0; j < m; ++j) {
            Assignment a2 = asg;
            a2[unknowns[j]] += h;
            J.col(j) = (resid(a2) - F) / h;
        }
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(J);
        Eigen::VectorXcd step = lu.solve(F);
        bool vacuous = !step.allFinite() && F.norm() <= tol * scale;
        if (vacuous) return asg;  // constraint satisfied identically here
        if (!step.allFinite() || step.norm() > 1e9) {
            if (F.norm() <= tol * scale) return asg;
            throw SingularConstraint(f.id + ": constraint system singular");
        }
        double unorm = 0;
        for (const auto& name : unknowns) unorm = std::max(unorm, std::abs(asg[name]));
        if (step.norm() > 1e6 * (1.0 + unorm))
            throw SingularConstraint(f.id + ": constraint system singular");
        for (int j = 0; j < m; ++j) asg[unknowns[j]] -= step[j];
        double big = 0;
        for (const auto& name : unknowns) big = std::max(big, std::abs(asg[name]));
        if (big > 1e8) throw SingularConstraint(f.id + ": dependent parameter diverged");
        F = resid(asg);
        if (step.norm() <= 1e-9 * (1.0 + big) && F.norm() <= tol * scale) return asg;
    }
    if (F.norm() <= 1e-8 * scale) return asg;  // slow but acceptable
    throw NoConvergence(f.id + ": constraint resolution did not converge");
}

// ---------------------------------------------------------------------------
// path tracking

struct PathSpec {
    std::string driving;
    std::vector<cd> anchors;
    double tol = 1e-9;
    double min_rel_off = 1e-2;  // first/last interior sample offset per end segment
    int base_steps = 24;
};

struct HomotopyResult {
    struct Sample {
        cd param;
        Assignment assignment;
        PolyKind kind;
        std::vector<std::vector<int>> trimmed_groups;
    };
    std::vector<Sample> samples;  // interior
    std::array<PolyKind, 2> endpoint_kinds{PolyKind::ManyValues, PolyKind::ManyValues};
    std::array<std::optional<CanonicalCode>, 2> endpoint_codes;
    std::array<CPoly, 2> endpoint_polys;
    std::vector<std::vector<int>> interior_trimmed;
    std::vector<std::string> events;
    int degree = 0;
};

namespace familydetail {

inline std::vector<std::vector<int>> trimmed_of(const PolyClass& pc) {
    auto gs = pc.trimmed_groups();
    return gs;
}

}  // namespace familydetail

/// Tracks the family along the driving-parameter path. Interior samples
/// must stay Zolotarev with one fixed trimmed passport (adaptive bisection
/// brackets any violation and reports it as a PassportJump). Chebyshev
/// endpoints are identified by their pullback trees.
inline HomotopyResult track(const FamilySpec& f, const PathSpec& path, Assignment seeds) {
    if (f.variety) throw std::invalid_argument("track needs a one-parameter family");
    if (path.anchors.empty()) throw std::invalid_argument("empty path");
    if (!f.params.empty() && f.params.front() != path.driving)
        throw std::invalid_argument("path drives " + path.driving + " but the family's driving parameter is " + f.params.front());

    HomotopyResult hr;
    hr.degree = f.degree();
    const int n = hr.degree;

    // near declared endpoints two values approach with possibly high-order
    // contact; tighten the cluster tolerance rather than report a false
    // degeneration (never accept a tightened result that splits a
    // constrained equality, i.e. only swap in a three-valued reading)
    auto classify_at = [&](cd a, Assignment& cur, bool tighten = false) {
        cur[path.driving] = a;
        cur = resolve_constraints(f, cur);
        CPoly p = family_poly(f, cur);
        PolyClass pc = classify(p, path.tol);
        if (tighten && pc.kind == PolyKind::Chebyshev) {
            for (double t2 : {path.tol * 1e-2, path.tol * 1e-4}) {
                PolyClass pc2 = classify(p, t2);
                if (pc2.kind == PolyKind::Zolotarev) return pc2;
            }
        }
        return pc;
    };

    Assignment cur = seeds;
    // walk into the anchor along the branch first: a constraint can become
    // vacuous exactly at the degeneration (a parameter landing on a fixed
    // root), where Newton would keep whatever seed it was given
    auto endpoint = [&](int which, cd a, std::optional<cd> approach_from) {
        Assignment e = cur;
        if (approach_from && std::abs(*approach_from - a) > 0) {
            for (int k = 1; k <= 16; ++k) {
                e[path.driving] = a + (*approach_from - a) * std::pow(0.3, k);
                e = resolve_constraints(f, e);
            }
        }
        PolyClass pc = classify_at(a, e);
        hr.endpoint_kinds[which] = pc.kind;
        hr.endpoint_polys[which] = family_poly(f, e);
        if (pc.kind == PolyKind::Chebyshev)
            hr.endpoint_codes[which] = canonical_code(extract_tree(hr.endpoint_polys[which], path.tol));
        else
            hr.events.push_back(std::string("endpoint ") + (which ? "1" : "0") + " is " +
                                kind_name(pc.kind) + ", not chebyshev");
    };

    if (path.anchors.size() == 1) {
        endpoint(0, path.anchors[0], std::nullopt);
        cur = seeds;
        endpoint(1, path.anchors[0], std::nullopt);
        return hr;
    }

    // interior sampling positions along each segment
    const size_t segs = path.anchors.size() - 1;
    bool have_passport = false;
    cd prev_param;
    std::vector<cd> prev_vals;

    // a degeneration can be crossed without changing the passport (the two
    // colliding values separate again); watch every pairwise difference of
    // the matched critical values and bisect when its segment between
    // consecutive samples passes suspiciously close to zero
    auto values_of = [](const PolyClass& pc) {
        std::vector<cd> v;
        for (const auto& cl : pc.clusters) v.push_back(cl.value);
        return v;
    };
    auto match_values = [](const std::vector<cd>& prev, std::vector<cd> cur) {
        if (prev.size() != cur.size()) return cur;
        std::vector<cd> out(cur.size());
        std::vector<char> used(cur.size(), 0);
        for (size_t i = 0; i < prev.size(); ++i) {
            size_t best = 0;
            double bd = 1e300;
            for (size_t j = 0; j < cur.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(cur[j] - prev[i]);
                if (d < bd) {
                    bd = d;
                    best = j;
                }
            }
            used[best] = 1;
            out[i] = cur[best];
        }
        return out;
    };
    auto min_gap = [](const std::vector<cd>& v) {
        double g = 1e300;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) g = std::min(g, std::abs(v[i] - v[j]));
        return g;
    };
    // march between two accepted samples keeping every value's motion small
    // against the current minimum gap; the step underflows exactly when two
    // values collide in between, which is a crossed degeneration
    auto walk_values = [&](std::vector<cd> vals, cd afrom, cd ato, Assignment probe) {
        double t = 0, dt = 1.0;
        while (t < 1.0) {
            double t2 = std::min(t + dt, 1.0);
            cd amid = afrom + t2 * (ato - afrom);
            Assignment tmp = probe;
            PolyClass pm = classify_at(amid, tmp, false);
            bool ok = pm.clusters.size() == vals.size();
            std::vector<cd> vm;
            if (ok) {
                vm = match_values(vals, values_of(pm));
                double move = 0;
                for (size_t i = 0; i < vals.size(); ++i)
                    move = std::max(move, std::abs(vm[i] - vals[i]));
                ok = move <= 0.35 * min_gap(vals);
            }
            if (!ok) {
                dt *= 0.5;
                if (dt < 1e-7)
                    throw PassportJump(f.id + ": two critical values collide inside the path near " +
                                       std::to_string(amid.real()) + "+" +
                                       std::to_string(amid.imag()) + "i");
                continue;
            }
            vals = vm;
            probe = tmp;
            t = t2;
            dt = std::min(dt * 2.0, 1.0 - t + 1e-12);
        }
        return vals;
    };

    for (size_t s = 0; s < segs; ++s) {
        cd a0 = path.anchors[s], a1 = path.anchors[s + 1];
        double lo = s == 0 ? path.min_rel_off : 0.0;
        double hi = s + 1 == segs ? 1.0 - path.min_rel_off : 1.0;
        for (int k = 0; k <= path.base_steps; ++k) {
            double t = lo + (hi - lo) * k / path.base_steps;
            if (s > 0 && k == 0) continue;  // waypoint itself handled by previous segment
            cd a = a0 + t * (a1 - a0);
            bool near_degeneration = (s == 0 && t < 0.2) || (s + 1 == segs && t > 0.8);
            PolyClass pc = classify_at(a, cur, near_degeneration);
            auto gs = familydetail::trimmed_of(pc);
            bool ok = pc.kind == PolyKind::Zolotarev && (!have_passport || gs == hr.interior_trimmed);
            if (ok) {
                int points = 0;
                for (const auto& cl : pc.clusters) points += static_cast<int>(cl.full_group.size());
                if (points != 2 * n + 1) ok = false;  // full passport size monitor
            }
            if (!ok) {
                // bracket the violation between prev_param and a
                cd bad = a;
                cd good = have_passport || k > 0 || s > 0 ? prev_param : a;
                Assignment probe = cur;
                for (int bis = 0; bis < 60 && std::abs(bad - good) > 1e-6; ++bis) {
                    cd mid = 0.5 * (bad + good);
                    Assignment tmp = probe;
                    PolyClass pm = classify_at(mid, tmp, true);
                    auto gm = familydetail::trimmed_of(pm);
                    if (pm.kind == PolyKind::Zolotarev && (!have_passport || gm == hr.interior_trimmed))
                        good = mid;
                    else
                        bad = mid;
                }
                throw PassportJump(f.id + ": passport changes between " + std::to_string(good.real()) +
                                   "+" + std::to_string(good.imag()) + "i and " +
                                   std::to_string(bad.real()) + "+" + std::to_string(bad.imag()) + "i");
            }
            std::vector<cd> vals = values_of(pc);
            // crossing detection in the safe middle of the path, where the
            // endpoint degenerations cannot masquerade as collisions
            bool prev_safe = have_passport && !prev_vals.empty();
            if (prev_safe && !near_degeneration && prev_vals.size() == vals.size())
                vals = walk_values(prev_vals, prev_param, a, cur);
            if (!have_passport) {
                hr.interior_trimmed = gs;
                have_passport = true;
            }
            hr.samples.push_back({a, cur, pc.kind, gs});
            prev_param = a;
            prev_vals = near_degeneration ? std::vector<cd>{} : vals;
        }
    }

    // endpoints last, approached from the adjacent interior solutions
    Assignment near_start = hr.samples.front().assignment;
    Assignment near_end = hr.samples.back().assignment;
    cur = near_start;
    endpoint(0, path.anchors.front(), hr.samples.front().param);
    cur = near_end;
    endpoint(1, path.anchors.back(), hr.samples.back().param);
    return hr;
}

// ---------------------------------------------------------------------------
// degeneration scan

struct DegenerationPoint {
    cd param;
    CanonicalCode code;
    PlaneTree tree;
};

namespace familydetail {

// closed-form linear resolve b(a) for families whose single constraint is
// affine in the single dependent parameter
struct LinearResolve {
    const FamilySpec& f;
    cd eval_h(cd a, cd b) const {
        Assignment asg{{f.params[0], a}, {f.params[1], b}};
        return constraint_residuals(f, asg)[0];
    }
    // returns dependent value, or nullopt at poles
    std::optional<cd> operator()(cd a) const {
        cd h0 = eval_h(a, 0.0), h1 = eval_h(a, 1.0);
        cd slope = h1 - h0;
        if (std::abs(slope) < 1e-13 * (1.0 + std::abs(h0))) return std::nullopt;
        return -h0 / slope;
    }
    bool is_affine() const {
        Rng rng(99);
        for (int k = 0; k < 4; ++k) {
            cd a = 1.3 * rand_unit(rng);
            cd h0 = eval_h(a, 0.0), h1 = eval_h(a, 1.0), hm = eval_h(a, 0.5);
            if (std::abs(hm - 0.5 * (h0 + h1)) > 1e-9 * (1.0 + std::abs(h0) + std::abs(h1)))
                return false;
        }
        return true;
    }
};

}  // namespace familydetail

/// All parameter values where the family degenerates to a two-valued
/// polynomial: solves each pairwise critical-value coincidence globally
/// (rational fit over sample circles, Newton-polished), then classifies
/// and labels every point with its pullback tree. Supports unconstrained
/// one-parameter families and families whose one constraint is affine in
/// the single dependent parameter.
inline std::vector<DegenerationPoint> degeneration_scan(const FamilySpec& f, double tol = 1e-9) {
    if (f.params.empty()) throw std::invalid_argument("scan needs a driving parameter");
    std::optional<familydetail::LinearResolve> lin;
    if (!f.constraints.empty()) {
        if (f.constraints.size() != 1 || f.params.size() != 2)
            throw std::invalid_argument("scan supports at most one affine constraint");
        lin.emplace(familydetail::LinearResolve{f});
        if (!lin->is_affine())
            throw std::invalid_argument("scan constraint is not affine in the dependent parameter");
    } else if (f.params.size() != 1) {
        throw std::invalid_argument("scan needs exactly one driving parameter");
    }

    auto assignment_at = [&](cd a) -> std::optional<Assignment> {
        Assignment asg{{f.params[0], a}};
        if (lin) {
            auto b = (*lin)(a);
            if (!b) {
                // distinguish a pole from a vacuous constraint (the driving
                // parameter sitting exactly on a fixed root); for the latter
                // the dependent value is the limit along the branch
                cd h0 = lin->eval_h(a, 0.0), h1 = lin->eval_h(a, 1.0);
                if (std::abs(h0) > 1e-11 || std::abs(h1) > 1e-11) return std::nullopt;
                for (cd delta : {cd(1e-5, 0), cd(0, 1e-5), cd(-1e-5, 1e-5)}) {
                    auto b1 = (*lin)(a + delta);
                    auto b2 = (*lin)(a + 2.0 * delta);
                    auto b3 = (*lin)(a + 3.0 * delta);
                    if (b1 && b2 && b3) {
                        // extrapolated limit along the branch, O(delta^3)
                        asg[f.params[1]] = 3.0 * *b1 - 3.0 * *b2 + *b3;
                        return asg;
                    }
                }
                return std::nullopt;
            }
            asg[f.params[1]] = *b;
        }
        return asg;
    };

    // identify the three value groups at a generic probe: representative =
    // index of a family root whose value realizes the group
    std::vector<int> reps;
    {
        std::optional<Assignment> probe;
        for (double r : {0.37, 0.83, 1.21}) {
            for (int k = 0; k < 8 && !probe; ++k) {
                cd a = std::polar(r, 0.7 + 0.77 * k);
                auto asg = assignment_at(a);
                if (!asg) continue;
                try {
                    if (classify(family_poly(f, *asg), tol).kind == PolyKind::Zolotarev) probe = asg;
                } catch (const NoConvergence&) {}
            }
            if (probe) break;
        }
        if (!probe) throw NoConvergence(f.id + ": no generic three-valued point found");
        CPoly p = family_poly(f, *probe);
        PolyClass pc = classify(p, tol);
        std::vector<cd> locs;
        for (const auto& r : f.roots)
            locs.push_back(r.fixed ? *r.fixed : probe->at(r.param));
        for (const auto& cl : pc.clusters) {
            int rep = -1;
            for (size_t ri = 0; ri < locs.size() && rep < 0; ++ri)
                for (const auto& pt : cl.points)
                    if (std::abs(pt.location - locs[ri]) < 1e-6 * (1.0 + std::abs(locs[ri]))) {
                        rep = static_cast<int>(ri);
                        break;
                    }
            if (rep < 0) throw NoConvergence(f.id + ": value group without a root representative");
            reps.push_back(rep);
        }
        if (reps.size() != 3) throw NoConvergence(f.id + ": expected three value groups");
    }

    auto value_of_rep = [&](int rep, const Assignment& asg, const CPoly& p) {
        const auto& r = f.roots[rep];
        return p.eval(r.fixed ? *r.fixed : asg.at(r.param));
    };

    // two kinds of detector functions of the driving parameter, all of whose
    // zeros are degeneration candidates:
    //  - differences of critical values (coincidences without collisions are
    //    simple zeros)
    //  - differences of root locations (collisions; simple zeros even where
    //    the value difference vanishes to high order)
    struct Detector {
        std::function<std::optional<cd>(cd)> eval;
        bool is_location = false;
    };
    std::vector<Detector> detectors;
    for (auto [i, j] : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}}) {
        detectors.push_back({[&, i, j](cd a) -> std::optional<cd> {
            auto asg = assignment_at(a);
            if (!asg) return std::nullopt;
            CPoly p = family_poly(f, *asg);
            return value_of_rep(reps[i], *asg, p) - value_of_rep(reps[j], *asg, p);
        }});
    }
    for (size_t r = 0; r < f.roots.size(); ++r)
        for (size_t t = r + 1; t < f.roots.size(); ++t) {
            if (f.roots[r].fixed && f.roots[t].fixed) continue;
            detectors.push_back({[&, r, t](cd a) -> std::optional<cd> {
                auto asg = assignment_at(a);
                if (!asg) return std::nullopt;
                cd zr = f.roots[r].fixed ? *f.roots[r].fixed : asg->at(f.roots[r].param);
                cd zt = f.roots[t].fixed ? *f.roots[t].fixed : asg->at(f.roots[t].param);
                return zr - zt;
            }, true});
        }

    std::vector<std::pair<cd, double>> candidates_h;  // (location, newton step quality)
    for (const auto& det : detectors) {
        auto hfun = det.eval;
        // sample on circles, dodging poles of the resolve
        std::vector<cd> xs, hs;
        for (double r : {0.45, 0.8, 1.35, 2.6, 4.5})
            for (int k = 0; k < 48; ++k) {
                cd a = std::polar(r, 2 * M_PI * k / 48 + 0.13);
                auto h = hfun(a);
                if (h && std::abs(*h) < 1e4) {
                    xs.push_back(a);
                    hs.push_back(*h);
                }
            }
        if (xs.size() < 40) continue;
        // linearized rational fit P(a) - h(a) Q(a) = 0 at the smallest clean
        // degrees (excess degrees smear roots with a noise common factor)
        CPoly P;
        double bestrel = 1e300;
        for (auto [DP, DQ] : {std::pair<int, int>{4, 2}, {6, 3}, {8, 5}, {10, 6}, {12, 8}}) {
            const int cols = DP + 1 + DQ + 1;
            Eigen::MatrixXcd M(xs.size(), cols);
            for (size_t r = 0; r < xs.size(); ++r) {
                cd pw = 1.0;
                for (int k = 0; k <= DP; ++k) {
                    M(r, k) = pw;
                    pw *= xs[r];
                }
                pw = 1.0;
                for (int k = 0; k <= DQ; ++k) {
                    M(r, DP + 1 + k) = -hs[r] * pw;
                    pw *= xs[r];
                }
            }
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinV);
            double rel = svd.singularValues()(cols - 1) / std::max(svd.singularValues()(0), 1e-300);
            Eigen::VectorXcd null = svd.matrixV().col(cols - 1);
            std::vector<cd> pcoef(null.data(), null.data() + DP + 1);
            if (rel < bestrel) {
                bestrel = rel;
                P = CPoly{pcoef};
            }
            if (rel < 1e-11) break;
        }
        double pmax = 0;
        for (const cd& ck : P.c) pmax = std::max(pmax, std::abs(ck));
        if (P.degree() < 1 || pmax < 1e-12) continue;

        // force-merge nearby fitted roots and re-polish at the joint
        // multiplicity, then refine every candidate on the detector itself
        std::vector<RootPt> prts;
        try {
            prts = roots(P, 1e-8);
        } catch (const NoConvergence&) {
            continue;
        }
        std::vector<RootPt> merged;
        for (const auto& r : prts) {
            if (!merged.empty() &&
                std::abs(merged.back().location - r.location) < 2e-3 * (1.0 + std::abs(r.location))) {
                int m = merged.back().mult + r.mult;
                cd center = (merged.back().location * static_cast<double>(merged.back().mult) +
                             r.location * static_cast<double>(r.mult)) /
                            static_cast<double>(m);
                merged.back() = {center, m};
            } else {
                merged.push_back(r);
            }
        }
        for (auto& r : merged) {
            cd a = detail::polish_root(P, r.location, r.mult);
            double quality = 1e-3;
            for (int it = 0; it < 60; ++it) {
                auto h = hfun(a);
                if (!h) break;
                auto h2 = hfun(a + 1e-7);
                if (!h2) break;
                cd slope = (*h2 - *h) / 1e-7;
                if (std::abs(slope) < 1e-14) break;
                cd step = *h / slope;
                if (std::abs(step) > 0.25 * (1.0 + std::abs(a)))
                    step *= 0.25 * (1.0 + std::abs(a)) / std::abs(step);
                a -= step;
                quality = std::abs(step) / (1.0 + std::abs(a));
                if (std::abs(a) > 100) break;
                if (quality < 1e-14) break;
            }
            auto h = hfun(a);
            if (h && std::abs(*h) < 1e-6) candidates_h.push_back({a, quality});
        }
    }

    // collapse candidate clusters (noise roots sit in the wide flat basin of
    // a multiple root): best-converged first, drop anything near an accepted one
    std::sort(candidates_h.begin(), candidates_h.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<cd> candidates;
    for (const auto& [a, q] : candidates_h) {
        bool dup = false;
        for (cd b : candidates)
            if (std::abs(a - b) < 1e-4 * (1.0 + std::abs(a))) dup = true;
        if (!dup) candidates.push_back(a);
    }
    std::sort(candidates.begin(), candidates.end(), complex_less);

    // snap pass: a location collision pins its parameter value to machine
    // precision while value differences go flat near multiple roots; pull
    // every candidate onto the nearest collision root when one is close
    for (cd& a : candidates) {
        for (const auto& det : detectors) {
            if (!det.is_location) continue;
            cd z = a;
            bool conv = false;
            for (int it = 0; it < 40; ++it) {
                auto h = det.eval(z);
                auto h2 = det.eval(z + 1e-7);
                if (!h || !h2) break;
                cd slope = (*h2 - *h) / 1e-7;
                if (std::abs(slope) < 1e-12) break;
                cd step = *h / slope;
                if (std::abs(step) > 1e-2 * (1.0 + std::abs(z))) break;
                z -= step;
                if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) {
                    conv = true;
                    break;
                }
            }
            if (conv && std::abs(z - a) < 1e-3 * (1.0 + std::abs(a))) {
                a = z;
                break;
            }
        }
    }
    std::vector<DegenerationPoint> out;
    for (cd a : candidates) {
        bool dup = false;
        for (const auto& d : out)
            if (std::abs(d.param - a) < 1e-7 * (1.0 + std::abs(a))) dup = true;
        if (dup) continue;
        auto asg = assignment_at(a);
        if (!asg) continue;
        try {
            CPoly p = family_poly(f, *asg);
            if (classify(p, tol).kind != PolyKind::Chebyshev) continue;
            PlaneTree t = extract_tree(p, tol);
            out.push_back({a, canonical_code(t), t});
        } catch (const NoConvergence&) {
        } catch (const LiftDivergence&) {}
    }
    return out;
}

// ---------------------------------------------------------------------------
// catalog loading

inline FamilySpec family_from_json(const std::string& id, const nlohmann::json& j) {
    FamilySpec f;
    f.id = id;
    for (const auto& jr : j.at("integrand")) {
        FamilySpec::Root r;
        r.mult = jr.at("mult").get<int>();
        if (jr.contains("root"))
            r.fixed = cd(jr.at("root").at(0).get<double>(), jr.at("root").at(1).get<double>());
        else
            r.param = jr.at("param").get<std::string>();
        f.roots.push_back(std::move(r));
    }
    auto pref = [](const nlohmann::json& jp) {
        PointRef r;
        if (jp.contains("param")) r.param = jp.at("param").get<std::string>();
        else r.value = cd(jp.at("value").at(0).get<double>(), jp.at("value").at(1).get<double>());
        return r;
    };
    if (j.contains("constraints"))
        for (const auto& jc : j.at("constraints")) f.constraints.push_back({pref(jc[0]), pref(jc[1])});
    f.params = j.at("params").get<std::vector<std::string>>();
    f.variety = j.value("variety", false);
    return f;
}

inline const std::map<std::string, FamilySpec>& catalog_families() {
    static const std::map<std::string, FamilySpec> fams = [] {
        std::map<std::string, FamilySpec> m;
        for (const auto& [id, j] : builtin_data().at("families").items())
            m.emplace(id, family_from_json(id, j));
        return m;
    }();
    return fams;
}

struct CatalogPath {
    std::string id;
    std::string family;
    int edges = 0;
    std::vector<cd> anchors;
    std::array<std::string, 2> endpoints;  // reference tree labels
    std::vector<std::vector<int>> interior_trimmed;
    Assignment seeds;
};

inline const std::vector<CatalogPath>& catalog_paths() {
    static const std::vector<CatalogPath> paths = [] {
        std::vector<CatalogPath> out;
        for (const auto& jp : builtin_data().at("paths")) {
            CatalogPath cp;
            cp.id = jp.at("id").get<std::string>();
            cp.family = jp.at("family").get<std::string>();
            cp.edges = jp.at("edges").get<int>();
            for (const auto& ja : jp.at("anchors"))
                cp.anchors.emplace_back(ja.at(0).get<double>(), ja.at(1).get<double>());
            cp.endpoints[0] = jp.at("endpoints").at(0).get<std::string>();
            cp.endpoints[1] = jp.at("endpoints").at(1).get<std::string>();
            for (const auto& jg : jp.at("interior_trimmed"))
                cp.interior_trimmed.push_back(jg.get<std::vector<int>>());
            if (jp.contains("seeds"))
                for (const auto& [name, jv] : jp.at("seeds").items())
                    cp.seeds[name] = cd(jv.at(0).get<double>(), jv.at(1).get<double>());
            out.push_back(std::move(cp));
        }
        return out;
    }();
    return paths;
}

/// Runs one catalog path and returns the tracked result.
inline HomotopyResult track_catalog_path(const CatalogPath& cp) {
    const FamilySpec& f = catalog_families().at(cp.family);
    PathSpec ps;
    ps.driving = f.params.front();
    ps.anchors = cp.anchors;
    return track(f, ps, cp.seeds);
}

}  // namespace zolo
