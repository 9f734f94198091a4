// zolo: plane trees, two- and three-valued polynomials, and their homotopies.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <zolo/jsonio.hpp>
#include <zolo/report.hpp>
#include <zolo/shabat.hpp>
#include <zolo/svg.hpp>
#include <zolo/variety.hpp>

using namespace zolo;
using nlohmann::json;

namespace {

cd parse_complex(std::string s) {
    // accepts "1.5", "-2i", "0.5+0.25i", "2-1i"
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw CLI::ValidationError("empty complex number");
    double re = 0, im = 0;
    size_t ipos = s.find('i');
    if (ipos == std::string::npos) {
        re = std::stod(s);
    } else {
        // split the imaginary part at the last sign that is not an exponent sign
        std::string body = s.substr(0, ipos);
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        std::string imtxt = split == std::string::npos ? body : body.substr(split);
        if (imtxt.empty() || imtxt == "+") imtxt = "1";
        else if (imtxt == "-") imtxt = "-1";
        im = std::stod(imtxt);
        if (split != std::string::npos && split > 0) re = std::stod(body.substr(0, split));
    }
    return {re, im};
}

std::vector<cd> parse_path(const std::string& s) {
    std::vector<cd> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(parse_complex(tok));
    return out;
}

TriPassport parse_trimmed_class(const std::string& s) {
    TriPassport tp;
    tp.trimmed = true;
    std::istringstream is(s);
    std::string group;
    int gi = 0;
    while (std::getline(is, group, '|')) {
        if (gi >= 3) throw CLI::ValidationError("class needs exactly three groups");
        std::istringstream gs(group);
        std::string num;
        while (std::getline(gs, num, ','))
            if (!num.empty()) tp.groups[gi].push_back(std::stoi(num));
        ++gi;
    }
    if (gi != 3) throw CLI::ValidationError("class needs exactly three groups");
    return tp;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream os(out);
        os << j.dump(1) << "\n";
    }
}

const FamilySpec& family_by_id(const std::string& id, const std::string& catalog_file) {
    if (!catalog_file.empty()) {
        static std::map<std::string, FamilySpec> loaded;
        if (loaded.empty()) {
            json j = read_json_file(catalog_file);
            for (const auto& [fid, jf] : j.at("families").items())
                loaded.emplace(fid, family_from_json(fid, jf));
        }
        auto it = loaded.find(id);
        if (it == loaded.end()) throw std::runtime_error("no family " + id + " in " + catalog_file);
        return it->second;
    }
    auto it = catalog_families().find(id);
    if (it == catalog_families().end()) throw std::runtime_error("unknown family " + id);
    return it->second;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane trees, two- and three-valued polynomials, and their homotopies"};
    app.require_subcommand(1);
    app.fallthrough();  // --seed/--jobs/--out may follow the subcommand
    uint64_t seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "seed for randomized procedures")->capture_default_str();
    app.add_option("--jobs", jobs, "parallel fan-out for sampling")->capture_default_str();

    std::string out;
    app.add_option("--out", out, "write the main output to a file instead of stdout");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list plane trees with a given edge count");
    int edges = 0;
    bool mirror_classes = false, include_stars = false;
    cmd_enum->add_option("--edges", edges, "edge count")->required();
    cmd_enum->add_flag("--mirror", mirror_classes, "one representative per mirror class");
    cmd_enum->add_flag("--include-stars", include_stars, "keep the single-center trees");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "polynomial with a given pullback tree");
    std::string tree_file;
    double tol = 1e-9;
    bool full_solution = false;
    cmd_solve->add_option("--tree", tree_file, "tree JSON file")->required();
    cmd_solve->add_option("--tol", tol, "tolerance");
    cmd_solve->add_flag("--full", full_solution, "emit roots and residual too");

    // pullback
    auto* cmd_pull = app.add_subcommand("pullback", "lift an arc through a polynomial");
    std::string poly_file, svg_file, arc_file;
    cmd_pull->add_option("--poly", poly_file, "polynomial JSON file")->required();
    cmd_pull->add_option("--svg", svg_file, "write an SVG rendering here");
    cmd_pull->add_option("--arc", arc_file, "arc JSON file (default: straight through the values)");
    cmd_pull->add_option("--tol", tol, "tolerance");

    // classify
    auto* cmd_cls = app.add_subcommand("classify", "critical values and passport");
    cmd_cls->add_option("--poly", poly_file, "polynomial JSON file")->required();
    cmd_cls->add_option("--tol", tol, "tolerance");

    // track
    auto* cmd_track = app.add_subcommand("track", "follow a family along a parameter path");
    std::string family_id, path_spec, catalog_file;
    cmd_track->add_option("--family", family_id, "catalog family id")->required();
    cmd_track->add_option("--path", path_spec, "comma-separated path anchors, e.g. \"0,0.6\"")
        ->required();
    cmd_track->add_option("--catalog", catalog_file, "external catalog JSON");
    cmd_track->add_option("--tol", tol, "tolerance");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "find all two-valued degenerations of a family");
    cmd_scan->add_option("--family", family_id, "catalog family id")->required();
    cmd_scan->add_option("--catalog", catalog_file, "external catalog JSON");

    // obstruct
    auto* cmd_obs = app.add_subcommand("obstruct", "passport obstruction between two trees");
    std::string t1_file, t2_file, class_spec;
    cmd_obs->add_option("--t1", t1_file, "first tree JSON")->required();
    cmd_obs->add_option("--t2", t2_file, "second tree JSON")->required();
    cmd_obs->add_option("--class", class_spec, "restrict to a trimmed class, e.g. \"2,2|2,2|2,2\"");

    // graph
    auto* cmd_graph = app.add_subcommand("graph", "pairwise verdicts over all n-edge trees");
    bool no_realize = false;
    cmd_graph->add_option("--edges", edges, "edge count")->required();
    cmd_graph->add_flag("--no-realize", no_realize, "skip running the catalog homotopies");

    // degree5
    auto* cmd_d5 = app.add_subcommand("degree5", "component membership of a quartic-derivative point");
    std::string abc_spec;
    cmd_d5->add_option("--poly", poly_file, "degree-5 polynomial JSON");
    cmd_d5->add_option("--abc", abc_spec, "explicit coordinates \"a,b,c\"");

    // degree7
    auto* cmd_d7 = app.add_subcommand("degree7", "sample the degree-7 constrained variety");
    int nsamples = 20;
    cmd_d7->add_option("--samples", nsamples, "sample count")->capture_default_str();

    // verify-paper
    auto* cmd_verify = app.add_subcommand("verify-paper", "run the full verification table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_enum) {
            if (edges < 1) {
                std::cerr << "error: --edges must be at least 1\n";
                return 2;
            }
            json arr = json::array();
            for (const auto& t : enumerate_trees(edges, {mirror_classes, include_stars})) {
                json jt = tree_to_json(t);
                auto code = canonical_code(t);
                jt["code"] = code.code;
                jt["mirror_code"] = code.mirror_code;
                arr.push_back(std::move(jt));
            }
            emit(arr, out);
        } else if (*cmd_solve) {
            PlaneTree t = tree_from_json(read_json_file(tree_file));
            ShabatSolution sol = solve_tree(t, {.seed = seed, .tol = std::min(tol, 1e-10)});
            if (full_solution) {
                json j = poly_to_json(sol.poly);
                j["residual"] = sol.residual;
                j["code"] = sol.tree_code.code;
                json wr = json::array(), br = json::array();
                for (const auto& r : sol.white_roots)
                    wr.push_back({{"location", complex_to_json(r.location)}, {"mult", r.mult}});
                for (const auto& r : sol.black_roots)
                    br.push_back({{"location", complex_to_json(r.location)}, {"mult", r.mult}});
                j["white_roots"] = std::move(wr);
                j["black_roots"] = std::move(br);
                emit(j, out);
            } else {
                emit(poly_to_json(sol.poly), out);
            }
        } else if (*cmd_pull) {
            CPoly p = poly_from_json(read_json_file(poly_file));
            Arc arc;
            if (!arc_file.empty()) {
                arc = arc_from_json(read_json_file(arc_file));
            } else {
                PolyClass pc = classify(p, tol);
                std::vector<cd> vals;
                for (const auto& cl : pc.clusters) vals.push_back(cl.value);
                arc = arc_through(vals);
            }
            EmbeddedGraph g = lift_arc(p, arc, tol);
            if (!svg_file.empty()) {
                std::ofstream os(svg_file);
                os << render_svg(g);
            }
            json j = graph_to_json(g);
            PlaneTree t = graph_to_tree(g);
            j["code"] = canonical_code(t).code;
            emit(j, out);
        } else if (*cmd_cls) {
            CPoly p = poly_from_json(read_json_file(poly_file));
            emit(classification_to_json(classify(p, tol)), out);
        } else if (*cmd_track) {
            const FamilySpec& f = family_by_id(family_id, catalog_file);
            PathSpec ps;
            ps.driving = f.params.empty() ? "a" : f.params.front();
            ps.anchors = parse_path(path_spec);
            ps.tol = tol;
            Assignment seeds;
            for (const auto& cp : catalog_paths())
                if (cp.family == family_id && !cp.anchors.empty() && !ps.anchors.empty() &&
                    std::abs(cp.anchors.front() - ps.anchors.front()) < 1e-9)
                    seeds = cp.seeds;
            HomotopyResult hr = track(f, ps, seeds);
            emit(homotopy_to_json(hr), out);
        } else if (*cmd_scan) {
            const FamilySpec& f = family_by_id(family_id, catalog_file);
            json arr = json::array();
            for (const auto& d : degeneration_scan(f)) {
                arr.push_back({{"param", complex_to_json(d.param)},
                               {"code", d.code.code},
                               {"tree", tree_to_json(d.tree)}});
            }
            emit(arr, out);
        } else if (*cmd_obs) {
            PlaneTree t1 = tree_from_json(read_json_file(t1_file));
            PlaneTree t2 = tree_from_json(read_json_file(t2_file));
            if (class_spec.empty()) {
                emit(verdict_to_json(pair_obstructed(t1, t2)), out);
            } else {
                TriPassport cls = parse_trimmed_class(class_spec);
                ClassBlockVerdict v = blocked_in_class(t1, t2, cls, seed);
                json j;
                j["blocked"] = v.blocked;
                j["mechanism"] = v.mechanism;
                j["details"] = v.details;
                json sp = json::array();
                for (const auto& tp : v.shared) sp.push_back(tp.str());
                j["shared_passports"] = std::move(sp);
                emit(j, out);
            }
        } else if (*cmd_graph) {
            ZHomotopyGraph g = zhomotopy_graph(edges, !no_realize);
            json j;
            j["nodes"] = json::array();
            for (size_t i = 0; i < g.nodes.size(); ++i) {
                json jn = tree_to_json(g.nodes[i]);
                jn["code"] = g.codes[i].code;
                j["nodes"].push_back(std::move(jn));
            }
            j["pairs"] = json::array();
            for (const auto& p : g.pairs) {
                json jp{{"i", p.i}, {"j", p.j}, {"blocked", p.blocked}, {"realized", p.realized}};
                if (p.realized) jp["via"] = p.via;
                if (!p.blocked && !p.shared.empty()) jp["shared"] = p.shared.front().trim().str();
                j["pairs"].push_back(std::move(jp));
            }
            emit(j, out);
        } else if (*cmd_d5) {
            cd a, b, c;
            if (!abc_spec.empty()) {
                auto v = parse_path(abc_spec);
                if (v.size() != 3) throw CLI::ValidationError("--abc needs three numbers");
                a = v[0];
                b = v[1];
                c = v[2];
            } else if (!poly_file.empty()) {
                CPoly p = poly_from_json(read_json_file(poly_file));
                auto abc = chebyshev_abc(p);
                a = abc[0];
                b = abc[1];
                c = abc[2];
            } else {
                std::cerr << "error: degree5 needs --poly or --abc\n";
                return 2;
            }
            json j;
            j["abc"] = {complex_to_json(a), complex_to_json(b), complex_to_json(c)};
            j["membership"] = membership_name(degree5_membership(a, b, c));
            emit(j, out);
        } else if (*cmd_d7) {
            Degree7Batch batch = sample_degree7(nsamples, seed, jobs);
            json arr = json::array();
            for (const auto& s : batch.samples) {
                json js;
                js["point"] = {complex_to_json(s.point[0]), complex_to_json(s.point[1]),
                               complex_to_json(s.point[2]), complex_to_json(s.point[3])};
                js["poly"] = poly_to_json(s.poly);
                js["order"] = s.order;
                js["component"] = s.order == 168 ? "C1" : "C2";
                js["table_row"] = s.table_row;
                js["tree_code"] = s.tree_code.code;
                arr.push_back(std::move(js));
            }
            emit(arr, out);
        } else if (*cmd_verify) {
            auto rs = run_paper_report(seed);
            std::cout << format_paper_report(rs);
            for (const auto& r : rs)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
