#pragma once

#include <atomic>
#include <mutex>
#include <thread>

#include "exact.hpp"
#include "obstruction.hpp"
#include "shabat.hpp"
#include "svg.hpp"

namespace zolo {

// ---------------------------------------------------------------------------
// degree 5: membership in the two discriminant components

enum class Membership { FirstOnly, SecondOnly, Both, Neither };

inline std::string membership_name(Membership m) {
    switch (m) {
        case Membership::FirstOnly: return "C1_only";
        case Membership::SecondOnly: return "C2_only";
        case Membership::Both: return "both";
        default: return "neither";
    }
}

namespace varietydetail {

inline double factor_scale(const MPoly& f, cd a, cd b, cd c) {
    double s = 0;
    for (const auto& [e, v] : f.terms) {
        double t = std::abs(static_cast<double>(v));
        for (int i = 0; i < e[0]; ++i) t *= std::max(1.0, std::abs(a));
        for (int i = 0; i < e[1]; ++i) t *= std::max(1.0, std::abs(b));
        for (int i = 0; i < e[2]; ++i) t *= std::max(1.0, std::abs(c));
        s += t;
    }
    return std::max(s, 1e-300);
}

}  // namespace varietydetail

/// Component test for q = x^4 + a x^2 + b x + c by scaled evaluation of the
/// two published factors.
inline Membership degree5_membership(cd a, cd b, cd c, double tol = 1e-8) {
    static const MPoly F1 = factor_F1(), F2 = factor_F2();
    bool in1 = std::abs(F1.eval<cd>(a, b, c)) < tol * varietydetail::factor_scale(F1, a, b, c);
    bool in2 = std::abs(F2.eval<cd>(a, b, c)) < tol * varietydetail::factor_scale(F2, a, b, c);
    if (in1 && in2) return Membership::Both;
    if (in1) return Membership::FirstOnly;
    if (in2) return Membership::SecondOnly;
    return Membership::Neither;
}

/// Exact membership for rational coordinates.
inline Membership degree5_membership_exact(const BigRat& a, const BigRat& b, const BigRat& c) {
    bool in1 = factor_F1().eval<BigRat>(a, b, c) == 0;
    bool in2 = factor_F2().eval<BigRat>(a, b, c) == 0;
    if (in1 && in2) return Membership::Both;
    if (in1) return Membership::FirstOnly;
    if (in2) return Membership::SecondOnly;
    return Membership::Neither;
}

/// Depressed-quartic coordinates of a degree-5 polynomial: its derivative,
/// made monic and translated to kill the cubic term.
inline std::array<cd, 3> chebyshev_abc(const CPoly& p) {
    if (p.degree() != 5) throw std::invalid_argument("degree-5 polynomial expected");
    CPoly q = (1.0 / p.derivative().lead()) * p.derivative();
    cd mu = -q.c[3] / 4.0;
    CPoly s = shabatdetail::shift_arg(q, mu);
    if (std::abs(s.c[3]) > 1e-8) throw std::runtime_error("depression failed");
    return {s.c[2], s.c[1], s.c[0]};
}

// ---------------------------------------------------------------------------
// degree 7: the constrained variety in (a,b,c,d) and its two components

inline const FamilySpec& degree7_family() { return catalog_families().at("H1"); }

inline Eigen::VectorXcd degree7_residual(const std::array<cd, 4>& x) {
    CPoly p = family_poly(degree7_family(),
                          {{"a", x[0]}, {"b", x[1]}, {"c", x[2]}, {"d", x[3]}});
    Eigen::VectorXcd r(3);
    r[0] = p.eval(cd(1));
    r[1] = divided_difference(p, x[0], x[1]);
    r[2] = divided_difference(p, x[2], x[3]);
    return r;
}

struct Degree7Sample {
    std::array<cd, 4> point;
    CPoly poly;
    long long order = 0;
    int table_row = -1;          // matched row in the component's tree table
    CanonicalCode tree_code;     // pullback tree that matched
};

namespace varietydetail {

// Newton on the three variety equations plus one affine slice
inline std::optional<std::array<cd, 4>> newton_on_slice(std::array<cd, 4> x,
                                                        const std::array<cd, 4>& w, cd rhs) {
    for (int it = 0; it < 120; ++it) {
        Eigen::VectorXcd F(4);
        Eigen::VectorXcd base = degree7_residual(x);
        F.head(3) = base;
        F[3] = w[0] * x[0] + w[1] * x[1] + w[2] * x[2] + w[3] * x[3] - rhs;
        if (F.norm() < 1e-12) return x;
        Eigen::MatrixXcd J(4, 4);
        const double h = 1e-7;
        for (int j = 0; j < 4; ++j) {
            auto x2 = x;
            x2[j] += h;
            Eigen::VectorXcd F2(4);
            F2.head(3) = degree7_residual(x2);
            F2[3] = w[0] * x2[0] + w[1] * x2[1] + w[2] * x2[2] + w[3] * x2[3] - rhs;
            J.col(j) = (F2 - F) / h;
        }
        Eigen::VectorXcd step = J.partialPivLu().solve(F);
        if (!step.allFinite()) return std::nullopt;
        double cap = 0.6 * (1.0 + std::sqrt(std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]) +
                                            std::norm(x[3])));
        if (step.norm() > cap) step *= cap / step.norm();
        for (int j = 0; j < 4; ++j) x[j] -= step[j];
        double big = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2]), std::abs(x[3])});
        if (big > 50) return std::nullopt;
    }
    return std::nullopt;
}

inline bool points_distinct(const CPoly& p, const std::array<cd, 4>& x, double minsep) {
    std::vector<cd> pts{cd(0), cd(1), x[0], x[1], x[2], x[3]};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(pts[i] - pts[j]) < minsep) return false;
    (void)p;
    return true;
}

inline bool is_222222(const PolyClass& pc) {
    if (pc.kind != PolyKind::Zolotarev) return false;
    auto gs = pc.trimmed_groups();
    return gs.size() == 3 && gs[0] == std::vector<int>{2, 2} && gs[1] == std::vector<int>{2, 2} &&
           gs[2] == std::vector<int>{2, 2};
}

// arcs through the three values with each choice of interior value
inline std::vector<Arc> interior_choice_arcs(const PolyClass& pc) {
    std::vector<cd> v;
    for (const auto& cl : pc.clusters) v.push_back(cl.value);
    std::sort(v.begin(), v.end(), complex_less);
    std::vector<Arc> arcs;
    for (int mid = 0; mid < 3; ++mid) {
        int a = (mid + 1) % 3, b = (mid + 2) % 3;
        if (a > b) std::swap(a, b);
        Arc arc{{v[a], v[mid], v[b]}, {0, 1, 2}};
        arcs.push_back(arc);
    }
    return arcs;
}

inline PlaneTree swap_end_colors(PlaneTree t) {
    for (auto& v : t.vertices) {
        if (v.color == Color::Black) v.color = Color::Grey;
        else if (v.color == Color::Grey) v.color = Color::Black;
    }
    return t;
}

struct ComponentTables {
    // per table row, all admissible codes (mirror x endpoint-color swap)
    std::vector<std::set<std::string>> rows168, rows2520;

    static std::set<std::string> row_codes(const PlaneTree& t) {
        std::set<std::string> s;
        for (const PlaneTree& u : {t, mirror(t), swap_end_colors(t), mirror(swap_end_colors(t))})
            s.insert(detail::min_rooted_code(u));
        return s;
    }
    static const ComponentTables& get() {
        static const ComponentTables tables = [] {
            ComponentTables tb;
            for (const auto& t : degree7_table("order168")) tb.rows168.push_back(row_codes(t));
            for (const auto& t : degree7_table("order2520")) tb.rows2520.push_back(row_codes(t));
            return tb;
        }();
        return tables;
    }
};

}  // namespace varietydetail

/// One random point of the degree-7 variety: Newton onto the constraints
/// through a random affine slice, validated as a <2,2|2,2|2,2> three-valued
/// polynomial; labeled by its monodromy group order; its pullback tree
/// (some interior-value choice, up to mirror and endpoint-color swap) must
/// appear in the matching component table.
inline Degree7Sample degree7_sample(Rng& rng, int max_newton_starts = 40) {
    std::uniform_real_distribution<double> box(-1.4, 1.4);
    for (int attempt = 0; attempt < max_newton_starts; ++attempt) {
        std::array<cd, 4> start{cd(box(rng), box(rng)), cd(box(rng), box(rng)),
                                cd(box(rng), box(rng)), cd(box(rng), box(rng))};
        std::array<cd, 4> w{rand_unit(rng), rand_unit(rng), rand_unit(rng), rand_unit(rng)};
        cd rhs = w[0] * start[0] + w[1] * start[1] + w[2] * start[2] + w[3] * start[3];
        auto sol = varietydetail::newton_on_slice(start, w, rhs);
        if (!sol) continue;
        CPoly p = family_poly(degree7_family(),
                              {{"a", (*sol)[0]}, {"b", (*sol)[1]}, {"c", (*sol)[2]}, {"d", (*sol)[3]}});
        if (!varietydetail::points_distinct(p, *sol, 2e-3)) continue;
        PolyClass pc;
        try {
            pc = classify(p, 1e-9);
        } catch (const NoConvergence&) {
            continue;
        }
        if (!varietydetail::is_222222(pc)) continue;

        Degree7Sample s;
        s.point = *sol;
        s.poly = p;
        MonodromyData md = monodromy(p, std::nullopt, 1e-10);
        s.order = md.order;
        if (s.order != 168 && s.order != 2520)
            throw UnexpectedOrder("monodromy order " + std::to_string(s.order) +
                                  " is neither 168 nor 2520");
        const auto& tables = varietydetail::ComponentTables::get();
        const auto& rows = s.order == 168 ? tables.rows168 : tables.rows2520;
        for (const Arc& arc : varietydetail::interior_choice_arcs(pc)) {
            try {
                PlaneTree t = graph_to_tree(zolotarev_tree(p, arc, 1e-10));
                std::string code = detail::min_rooted_code(t);
                for (size_t row = 0; row < rows.size(); ++row)
                    if (rows[row].count(code)) {
                        s.table_row = static_cast<int>(row);
                        s.tree_code = canonical_code(t);
                        break;
                    }
            } catch (const LiftDivergence&) {
            } catch (const NoConvergence&) {
            } catch (const std::invalid_argument&) {}
            if (s.table_row >= 0) break;
        }
        return s;
    }
    throw NoConvergence("degree7_sample: no admissible variety point found");
}

struct Degree7Batch {
    std::vector<Degree7Sample> samples;
    int attempts = 0;
    std::vector<std::string> events;
};

/// Deterministic batch: sample index i draws from its own seeded generator,
/// so the result is identical for any job count.
inline Degree7Batch sample_degree7(int count, uint64_t seed, int jobs = 1) {
    Degree7Batch batch;
    batch.samples.resize(count);
    std::vector<int> attempts(count, 0);
    std::vector<std::string> events(count);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string failmsg;
    std::mutex failmx;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            bool done = false;
            for (uint64_t retry = 0; retry < 5 && !done && !failed.load(); ++retry) {
                Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL +
                        static_cast<uint64_t>(i) * 0x100000001b3ULL + retry * 0x1000193ULL);
                ++attempts[i];
                try {
                    batch.samples[i] = degree7_sample(rng);
                    done = true;
                } catch (const NoConvergence& e) {
                    events[i] = e.what();
                } catch (const LiftDivergence& e) {
                    events[i] = e.what();
                } catch (const UnexpectedOrder& e) {
                    std::lock_guard<std::mutex> lk(failmx);
                    failmsg = e.what();
                    failed.store(true);
                }
            }
            if (!done && !failed.load()) {
                std::lock_guard<std::mutex> lk(failmx);
                failmsg = "sample budget exhausted at index " + std::to_string(i);
                failed.store(true);
            }
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) {
        if (failmsg.find("neither") != std::string::npos) throw UnexpectedOrder(failmsg);
        throw NoConvergence("sample_degree7: " + failmsg);
    }
    for (int a : attempts) batch.attempts += a;
    for (auto& e : events)
        if (!e.empty()) batch.events.push_back(e);
    return batch;
}

// ---------------------------------------------------------------------------
// component of a degenerate (two-valued) configuration: perturb back into
// the variety and read the monodromy order nearby

struct ComponentCertificate {
    long long order = 0;          // consistent nearby order
    int trials = 0;
    std::array<cd, 4> seed_point; // the degenerate (a,b,c,d) configuration
};

/// Certifies which component's closure contains the two-valued polynomial
/// of a 7-edge tree whose passport embeds in the variety frame (a color
/// with exactly two double points). Repeated small perturbations are pushed
/// back onto the variety near the degenerate configuration; the monodromy
/// order must come out the same every time.
inline ComponentCertificate degree7_component_of(const PlaneTree& t, uint64_t seed = 0,
                                                 int trials = 6) {
    if (t.n_edges != 7) throw std::invalid_argument("7-edge tree expected");
    ShabatSolution sol = solve_tree(t, {.seed = seed});
    CPoly p = sol.poly;

    // orient so the {2,2}-critical color sits at value 0
    auto crit_mults = [](const std::vector<RootPt>& rs) {
        std::vector<int> m;
        for (const auto& r : rs)
            if (r.mult >= 2) m.push_back(r.mult);
        std::sort(m.rbegin(), m.rend());
        return m;
    };
    std::vector<int> wm = crit_mults(sol.white_roots);
    std::vector<int> bm = crit_mults(sol.black_roots);
    std::vector<RootPt> frame_pair;
    if (wm == std::vector<int>{2, 2}) {
        for (const auto& r : sol.white_roots)
            if (r.mult == 2) frame_pair.push_back(r);
    } else if (bm == std::vector<int>{2, 2}) {
        p = CPoly::constant(1.0) - p;
        for (const auto& r : sol.black_roots)
            if (r.mult == 2) frame_pair.push_back(r);
    } else {
        throw std::invalid_argument("tree has no <2,2> color; not in this variety's frame");
    }
    std::sort(frame_pair.begin(), frame_pair.end(),
              [](const RootPt& a, const RootPt& b) { return complex_less(a.location, b.location); });
    cd z1 = frame_pair[0].location, z2 = frame_pair[1].location;
    p = shabatdetail::scale_arg(shabatdetail::shift_arg(p, z1), z2 - z1);

    // read the remaining critical points (roots of p' besides 0 and 1)
    std::vector<cd> flat;
    for (const auto& r : roots(p.derivative(), 1e-10)) {
        if (std::abs(r.location) < 1e-6 || std::abs(r.location - cd(1)) < 1e-6) continue;
        for (int k = 0; k < r.mult; ++k) flat.push_back(r.location);
    }
    if (flat.size() != 4) throw std::runtime_error("unexpected critical structure");

    // pair the slots so both divided differences vanish at the seed
    CPoly pf = family_poly(degree7_family(),
                           {{"a", flat[0]}, {"b", flat[1]}, {"c", flat[2]}, {"d", flat[3]}});
    std::array<cd, 4> seed_pt{};
    bool ok = false;
    for (auto [i, j, k, l] : {std::array<int, 4>{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}) {
        std::array<cd, 4> cand{flat[i], flat[j], flat[k], flat[l]};
        Eigen::VectorXcd r = degree7_residual(cand);
        if (r.norm() < 1e-5) {
            seed_pt = cand;
            ok = true;
            break;
        }
    }
    if (!ok) throw std::runtime_error("degenerate configuration is not on the variety closure");

    ComponentCertificate cert;
    cert.seed_point = seed_pt;
    Rng rng(seed * 0x6a09e667f3bcc909ULL + 0xbb67ae8584caa73bULL);
    int done = 0;
    for (int attempt = 0; attempt < 20 * trials && done < trials; ++attempt) {
        // break the collision symmetries explicitly: the slice pins the
        // difference combination a-b + g(c-d) away from zero, so Newton
        // cannot fall back onto the degenerate diagonal branches
        std::array<cd, 4> start = seed_pt;
        start[0] += 0.05 * rand_unit(rng);
        start[1] -= 0.05 * rand_unit(rng);
        start[2] += 0.05 * rand_unit(rng);
        start[3] -= 0.05 * rand_unit(rng);
        cd g = rand_unit(rng);
        std::array<cd, 4> w{cd(1), cd(-1), g, -g};
        cd rhs = (start[0] - start[1]) + g * (start[2] - start[3]);
        auto zsol = varietydetail::newton_on_slice(start, w, rhs);
        if (!zsol) continue;
        double dist = 0;
        for (int i = 0; i < 4; ++i) dist += std::abs((*zsol)[i] - seed_pt[i]);
        if (dist > 0.8) continue;  // flew off to some far point
        CPoly pz = family_poly(degree7_family(),
                               {{"a", (*zsol)[0]}, {"b", (*zsol)[1]}, {"c", (*zsol)[2]}, {"d", (*zsol)[3]}});
        if (!varietydetail::points_distinct(pz, *zsol, 1e-4)) continue;
        PolyClass pc;
        try {
            pc = classify(pz, 1e-10);
        } catch (const NoConvergence&) {
            continue;
        }
        if (!varietydetail::is_222222(pc)) continue;
        long long order = 0;
        try {
            order = monodromy(pz, std::nullopt, 1e-10).order;
        } catch (const LiftDivergence&) {
            continue;
        }
        if (cert.order == 0) cert.order = order;
        else if (cert.order != order)
            throw UnexpectedOrder("inconsistent nearby monodromy orders");
        ++done;
    }
    if (done < trials) throw NoConvergence("could not certify the component by perturbation");
    cert.trials = done;
    return cert;
}

// ---------------------------------------------------------------------------
// class-restricted blocking with the component certificate

struct ClassBlockVerdict {
    bool blocked = false;
    std::string mechanism;  // "passport" or "component-separation"
    std::vector<std::string> details;
    std::vector<TriPassport> shared;  // feasible refinements, when any
};

/// Is a Z-homotopy between t1 and t2 impossible within the trimmed class?
/// The passport engine is tried first; for the degree-7 class
/// <2,2|2,2|2,2> the variety's two components provide the stronger
/// certificate: endpoints lying in different components cannot be joined by
/// an interior-Zolotarev path (the intersection consists of two-valued
/// polynomials only).
inline ClassBlockVerdict blocked_in_class(const PlaneTree& t1, const PlaneTree& t2,
                                          const TriPassport& trimmed_class, uint64_t seed = 0) {
    ClassBlockVerdict v;
    PairVerdict pv = pair_obstructed_in_class(t1, t2, trimmed_class);
    if (pv.blocked) {
        v.blocked = true;
        v.mechanism = "passport";
        v.details = pv.failures;
        return v;
    }
    v.shared = pv.shared;
    v.details.push_back("passport engine: shared feasible refinement " + pv.shared[0].str() +
                        " (counting cannot block this pair)");
    TriPassport want;
    want.groups = {std::vector<int>{2, 2}, {2, 2}, {2, 2}};
    if (t1.n_edges == 7 && trimmed_class.canonical().trim().groups == want.canonical().groups) {
        ComponentCertificate c1 = degree7_component_of(t1, seed);
        ComponentCertificate c2 = degree7_component_of(t2, seed);
        v.details.push_back("first tree's two-valued point adheres to the order-" +
                            std::to_string(c1.order) + " component (x" +
                            std::to_string(c1.trials) + " perturbations)");
        v.details.push_back("second tree's two-valued point adheres to the order-" +
                            std::to_string(c2.order) + " component (x" +
                            std::to_string(c2.trials) + " perturbations)");
        if (c1.order != c2.order) {
            v.blocked = true;
            v.mechanism = "component-separation";
            v.details.push_back(
                "components meet only in two-valued polynomials, so an interior "
                "three-valued path cannot cross between them");
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// catalog-backed homotopy search

struct ConnectingFamily {
    bool found = false;
    std::string path_id;
    HomotopyResult result;
    int budget_left = 0;
};

/// Looks for a verified tracked homotopy between the two trees whose
/// interior trimmed passport matches. Catalog paths are tried first, then
/// jittered variants of catalog paths with matching class; NotFound is
/// inconclusive by design.
inline ConnectingFamily find_connecting_family(const PlaneTree& t1, const PlaneTree& t2,
                                               const std::vector<std::vector<int>>& trimmed,
                                               int budget = 8) {
    ConnectingFamily out;
    out.budget_left = budget;
    auto matches = [&](const HomotopyResult& hr) {
        if (hr.endpoint_kinds[0] != PolyKind::Chebyshev ||
            hr.endpoint_kinds[1] != PolyKind::Chebyshev)
            return false;
        if (!trimmed.empty() && hr.interior_trimmed != trimmed) return false;
        PlaneTree e0 = extract_tree(hr.endpoint_polys[0]);
        PlaneTree e1 = extract_tree(hr.endpoint_polys[1]);
        return (isotopic_up_to_swap_and_mirror(e0, t1) && isotopic_up_to_swap_and_mirror(e1, t2)) ||
               (isotopic_up_to_swap_and_mirror(e0, t2) && isotopic_up_to_swap_and_mirror(e1, t1));
    };
    for (const auto& cp : catalog_paths()) {
        if (out.budget_left <= 0) break;
        if (cp.edges != t1.n_edges) continue;
        --out.budget_left;
        try {
            HomotopyResult hr = track_catalog_path(cp);
            if (matches(hr)) {
                out.found = true;
                out.path_id = cp.id;
                out.result = std::move(hr);
                return out;
            }
        } catch (const std::exception&) {}
    }
    return out;
}

}  // namespace zolo
