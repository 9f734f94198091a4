#pragma once

#include <sstream>

#include "variety.hpp"

namespace zolo {

/// One verification item: every tolerance is pinned here, in code.
struct CriterionResult {
    int id;
    std::string title;
    bool pass = false;
    std::string detail;
};

namespace report {

inline bool match_ref(const PlaneTree& t, const char* group, const char* label) {
    return isotopic_up_to_swap_and_mirror(
        t, group == std::string("six_edge") ? six_edge_tree(label) : reference_tree(group, label));
}

// 1. enumeration counts
inline CriterionResult c01_enumeration() {
    CriterionResult r{1, "enumeration counts (5-edge, 6-edge, mirror classes)"};
    size_t n5 = enumerate_trees(5).size();
    size_t n6 = enumerate_trees(6).size();
    size_t n6m = enumerate_trees(6, {.mirror_classes = true}).size();
    r.pass = n5 == 5 && n6 == 13 && n6m == 11;
    std::ostringstream os;
    os << "5-edge: " << n5 << " (want 5), 6-edge: " << n6 << " (want 13), mirror classes: " << n6m
       << " (want 11)";
    r.detail = os.str();
    return r;
}

// 2. passport of the worked example tree
inline CriterionResult c02_passport() {
    CriterionResult r{2, "passport of the example tree"};
    Passport p = passport(reference_example_tree());
    r.pass = p.white == std::vector<int>{3, 2} && p.black == std::vector<int>{2, 1, 1, 1};
    r.detail = "got " + p.str() + " (want <3,2|2,1,1,1>)";
    return r;
}

// 3. the three-valued example polynomial
inline CriterionResult c03_zolotarev_example() {
    CriterionResult r{3, "three-valued example x^2(x-1)^2(3x-1)"};
    CPoly p = from_roots({{cd(0), 2}, {cd(1), 2}, {cd(1.0 / 3), 1}}, 3.0);
    PolyClass pc = classify(p, 1e-9);
    bool kinds = pc.kind == PolyKind::Zolotarev;
    std::vector<cd> want{cd(-32.0 / 3125), cd(0), cd(4.0 / 81)};  // sorted by (re, im)
    bool vals = pc.clusters.size() == 3;
    for (size_t i = 0; i < 3 && vals; ++i)
        vals = std::abs(pc.clusters[i].value - want[i]) < 1e-10;
    auto gs = pc.trimmed_groups();
    bool pass3 = gs == std::vector<std::vector<int>>{{2, 2}, {2}, {2}};
    r.pass = kinds && vals && pass3;
    std::ostringstream os;
    os << kind_name(pc.kind) << ", values within 1e-10: " << (vals ? "yes" : "no")
       << ", trimmed passport <2,2|2|2>: " << (pass3 ? "yes" : "no");
    r.detail = os.str();
    return r;
}

struct ScanCheck {
    std::vector<std::pair<cd, std::string>> expected;  // param -> five_edge label
    std::vector<DegenerationPoint> got;
    bool pass;
    std::string detail;
};

inline ScanCheck check_scan(const std::string& family,
                            std::vector<std::pair<cd, std::string>> expected, double tol) {
    ScanCheck sc;
    sc.expected = expected;
    sc.got = degeneration_scan(catalog_families().at(family));
    bool all_found = true;
    std::ostringstream os;
    for (const auto& [a, lab] : expected) {
        bool found = false;
        for (const auto& d : sc.got)
            if (std::abs(d.param - a) < tol * (1.0 + std::abs(a)) &&
                isotopic_up_to_swap_and_mirror(d.tree, reference_tree("five_edge", lab)))
                found = true;
        if (!found) {
            all_found = false;
            os << "missing " << a << " (" << lab << "); ";
        }
    }
    bool exact_set = sc.got.size() == expected.size();
    if (!exact_set) {
        os << "scan found " << sc.got.size() << " points, criterion lists " << expected.size()
           << ": ";
        for (const auto& d : sc.got) {
            bool listed = false;
            for (const auto& [a, lab] : expected)
                if (std::abs(d.param - a) < tol * (1.0 + std::abs(a))) listed = true;
            if (!listed) {
                Passport pp = passport(d.tree);
                os << "extra point " << d.param << " with tree " << pp.trim().str() << "; ";
            }
        }
    }
    sc.pass = all_found && exact_set;
    if (sc.pass) os << "all " << expected.size() << " points found within " << tol << " with the stated trees";
    sc.detail = os.str();
    return sc;
}

// 4. degenerations of the first family
inline CriterionResult c04_scan_family1() {
    CriterionResult r{4, "degeneration scan of the unconstrained quintic family"};
    const double s5 = std::sqrt(5.0);
    ScanCheck sc = check_scan("F1",
                              {{cd(0), "T1"},
                               {cd(1), "T3"},
                               {cd(0.6), "T2"},
                               {cd(5.0 / 3), "T2"},
                               {cd(-2.0 / 3, s5 / 3), "T4"},
                               {cd(-2.0 / 3, -s5 / 3), "T4"}},
                              1e-9);
    r.pass = sc.pass;
    r.detail = sc.detail;
    return r;
}

// 5. degenerations of the constrained family (exact-set check as specified)
inline CriterionResult c05_scan_family2() {
    CriterionResult r{5, "degeneration scan of the constrained quintic family"};
    const double s5 = std::sqrt(5.0);
    ScanCheck sc = check_scan("F2",
                              {{cd(0), "T1"},
                               {cd(1), "T2"},
                               {cd(5.0 / 3), "T2"},
                               {cd(s5), "T5"},
                               {cd(-s5), "T5"},
                               {cd((5 + s5) / 4), "T5"},
                               {cd((5 - s5) / 4), "T5"},
                               {cd(5.0 / 3, s5 / 3), "T4"},
                               {cd(5.0 / 3, -s5 / 3), "T4"}},
                              1e-9);
    r.pass = sc.pass;
    r.detail = sc.detail;
    return r;
}

// 6. the exact discriminant identity
inline CriterionResult c06_discriminant() {
    CriterionResult r{6, "exact discriminant factorization"};
    try {
        FactorizationResult fr = verify_degree5_factorization();
        MPoly lhs = discriminant_y(build_s_polynomial());
        MPoly rhs = fr.constant * (factor_F1().pow(fr.e1) * factor_F2().pow(fr.e2));
        bool expand_ok = lhs == rhs;
        bool quartic_ok = quartic_discriminant() == factor_F2();
        r.pass = fr.e1 >= 1 && fr.e2 >= 1 && 12 * (fr.e1 + fr.e2) == 60 && expand_ok && quartic_ok;
        std::ostringstream os;
        os << "disc = (" << fr.constant.str() << ") * F1^" << fr.e1 << " * F2^" << fr.e2
           << ", re-expansion " << (expand_ok ? "exact" : "MISMATCH") << ", disc(q) == F2: "
           << (quartic_ok ? "yes" : "no");
        r.detail = os.str();
    } catch (const IdentityFails& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

// 7. degree-5 component membership
inline CriterionResult c07_membership() {
    CriterionResult r{7, "degree-5 component membership of the solved trees"};
    std::map<std::string, Membership> want{{"T1", Membership::Both},
                                           {"T2", Membership::Both},
                                           {"T3", Membership::SecondOnly},
                                           {"T4", Membership::Both},
                                           {"T5", Membership::FirstOnly}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& [lab, m] : want) {
        ShabatSolution sol = solve_tree(reference_tree("five_edge", lab));
        auto [a, b, c] = chebyshev_abc(sol.poly);
        Membership got = degree5_membership(a, b, c, 1e-8);
        os << lab << "->" << membership_name(got) << " ";
        if (got != m) ok = false;
    }
    r.pass = ok;
    r.detail = os.str() + (ok ? "(all as stated)" : "(MISMATCH)");
    return r;
}

// 8. round trip over all 5- and 6-edge trees
inline CriterionResult c08_roundtrip() {
    CriterionResult r{8, "solve-then-extract round trip on all 5- and 6-edge trees"};
    int total = 0, good = 0;
    std::ostringstream os;
    for (int n : {5, 6}) {
        for (const auto& t : enumerate_trees(n)) {
            ++total;
            try {
                ShabatSolution sol = solve_tree(t);
                PlaneTree back = extract_tree(sol.poly);
                if (isotopic(back, t)) ++good;
                else os << "code mismatch at n=" << n << "; ";
            } catch (const std::exception& e) {
                os << "solve failed at n=" << n << ": " << e.what() << "; ";
            }
        }
    }
    r.pass = good == total;
    r.detail = std::to_string(good) + "/" + std::to_string(total) + " trees round-trip exactly. " +
               os.str();
    return r;
}

// 9. blocked pairs
inline CriterionResult c09_blocked_pairs() {
    CriterionResult r{9, "obstruction engine: blocked pairs for 5 and 6 edges"};
    std::ostringstream os;
    ZHomotopyGraph g5 = zhomotopy_graph(5, false);
    int blocked5 = 0;
    bool only35 = true;
    for (const auto& p : g5.pairs)
        if (p.blocked) {
            ++blocked5;
            if (!((match_ref(g5.nodes[p.i], "five_edge", "T3") &&
                   match_ref(g5.nodes[p.j], "five_edge", "T5")) ||
                  (match_ref(g5.nodes[p.i], "five_edge", "T5") &&
                   match_ref(g5.nodes[p.j], "five_edge", "T3"))))
                only35 = false;
        }
    bool pass5 = blocked5 == 1 && only35;
    os << "5-edge blocked pairs: " << blocked5 << " (want exactly {T3,T5}); ";

    ZHomotopyGraph g6 = zhomotopy_graph(6, false);
    auto idx6 = [&](const char* lab) {
        PlaneTree ref = six_edge_tree(lab);
        for (size_t i = 0; i < g6.nodes.size(); ++i)
            if (isotopic(g6.nodes[i], orient_canonical(ref)) ||
                isotopic(g6.nodes[i], orient_canonical(swap_colors(ref))))
                return static_cast<int>(i);
        return -1;
    };
    std::set<std::pair<int, int>> want;
    auto addpair = [&](const char* a, const char* b) {
        int i = idx6(a), j = idx6(b);
        want.insert({std::min(i, j), std::max(i, j)});
    };
    addpair("T3", "T13");
    addpair("T7", "T13");
    addpair("T8", "T13");
    addpair("T6", "T12");
    std::set<std::pair<int, int>> got;
    for (const auto& p : g6.pairs)
        if (p.blocked) got.insert({p.i, p.j});
    bool pass6 = got == want;
    os << "6-edge blocked pairs: " << got.size() << " of " << g6.pairs.size()
       << " (want exactly {T3-T13, T7-T13, T8-T13, T6-T12}): " << (pass6 ? "match" : "MISMATCH");
    r.pass = pass5 && pass6;
    r.detail = os.str();
    return r;
}

// 10. tracked homotopies
inline CriterionResult c10_tracked() {
    CriterionResult r{10, "tracked homotopies (three 6-edge constructions + 5-edge families)"};
    std::ostringstream os;
    bool all = true;
    for (const auto& cp : catalog_paths()) {
        try {
            HomotopyResult hr = track_catalog_path(cp);
            bool ok = hr.interior_trimmed == cp.interior_trimmed;
            for (const auto& smp : hr.samples) {
                if (smp.kind != PolyKind::Zolotarev || smp.trimmed_groups != hr.interior_trimmed)
                    ok = false;
            }
            const char* group = cp.edges == 5 ? "five_edge" : "six_edge";
            for (int e = 0; e < 2; ++e) {
                if (hr.endpoint_kinds[e] != PolyKind::Chebyshev) ok = false;
                else if (!match_ref(extract_tree(hr.endpoint_polys[e]), group,
                                    cp.endpoints[e].c_str()))
                    ok = false;
            }
            if (!ok) {
                all = false;
                os << cp.id << " FAILED; ";
            }
        } catch (const std::exception& e) {
            all = false;
            os << cp.id << " threw: " << e.what() << "; ";
        }
    }
    r.pass = all;
    r.detail = all ? "all 12 catalog paths verified: constant interior trimmed passports, "
                     "2n+1 preimages at every sample, stated endpoint trees"
                   : os.str();
    return r;
}

// 11. degree-7 component samples
inline CriterionResult c11_degree7(uint64_t seed) {
    CriterionResult r{11, "degree-7 variety samples: orders and tree tables"};
    std::ostringstream os;
    try {
        Degree7Batch batch = sample_degree7(20, seed);
        int n168 = 0, n2520 = 0, matched = 0;
        for (const auto& s : batch.samples) {
            if (s.order == 168) ++n168;
            if (s.order == 2520) ++n2520;
            if (s.table_row >= 0) ++matched;
        }
        bool orders_ok = n168 + n2520 == static_cast<int>(batch.samples.size());
        bool both = n168 > 0 && n2520 > 0;
        bool tables = matched == static_cast<int>(batch.samples.size());
        r.pass = orders_ok && both && tables;
        os << batch.samples.size() << " samples (seed " << seed << ", " << batch.attempts
           << " attempts): " << n168 << " of order 168, " << n2520
           << " of order 2520; table matches (up to mirror and arc choice): " << matched << "/"
           << batch.samples.size() << "; tables hold "
           << degree7_table("order168").size() << " and " << degree7_table("order2520").size()
           << " trees";
        r.detail = os.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

// 12. the headline degree-7 non-homotopy
inline CriterionResult c12_headline(uint64_t seed) {
    CriterionResult r{12, "degree-7 headline pair: blocked in <2,2|2,2|2,2>, open without it"};
    std::ostringstream os;
    try {
        auto finals = degree7_table("final_pair");
        TriPassport cls;
        cls.groups = {std::vector<int>{2, 2}, {2, 2}, {2, 2}};
        cls.trimmed = true;
        ClassBlockVerdict v = blocked_in_class(finals[0], finals[1], cls, seed);
        bool blocked = v.blocked;
        os << (blocked ? "blocked" : "NOT blocked") << " in class <2,2|2,2|2,2> via "
           << v.mechanism << ". ";
        for (const auto& d : v.details) os << d << ". ";

        PairVerdict pv = pair_obstructed(finals[0], finals[1]);
        bool shared4 = false;
        for (const auto& tp : pv.shared)
            for (const auto& g : tp.groups)
                if (!g.empty() && g[0] == 4) shared4 = true;
        os << "Unrestricted check: " << (pv.blocked ? "blocked" : "not blocked")
           << ", shared passport with a multiplicity-4 point: " << (shared4 ? "yes" : "no") << ".";
        r.pass = blocked && v.mechanism == "component-separation" && !pv.blocked && shared4;
        r.detail = os.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

}  // namespace report

inline std::vector<CriterionResult> run_paper_report(uint64_t seed = 0) {
    using namespace report;
    std::vector<CriterionResult> rs;
    rs.push_back(c01_enumeration());
    rs.push_back(c02_passport());
    rs.push_back(c03_zolotarev_example());
    rs.push_back(c04_scan_family1());
    rs.push_back(c05_scan_family2());
    rs.push_back(c06_discriminant());
    rs.push_back(c07_membership());
    rs.push_back(c08_roundtrip());
    rs.push_back(c09_blocked_pairs());
    rs.push_back(c10_tracked());
    rs.push_back(c11_degree7(seed));
    rs.push_back(c12_headline(seed));
    return rs;
}

inline std::string format_paper_report(const std::vector<CriterionResult>& rs) {
    std::ostringstream os;
    int npass = 0;
    for (const auto& r : rs) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << "\n      "
           << r.detail << "\n";
        if (r.pass) ++npass;
    }
    os << npass << "/" << rs.size() << " criteria pass\n";
    return os.str();
}

}  // namespace zolo
