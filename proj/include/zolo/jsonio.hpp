#pragma once

#include "family.hpp"
#include "obstruction.hpp"
#include "pullback.hpp"

namespace zolo {

inline nlohmann::json complex_to_json(cd z) { return {z.real(), z.imag()}; }

inline cd complex_from_json(const nlohmann::json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

/// Graph JSON mirrors the tree format plus grey vertices and coordinates.
inline nlohmann::json graph_to_json(const EmbeddedGraph& g) {
    nlohmann::json j;
    j["n_edges"] = g.n_edges();
    j["vertices"] = nlohmann::json::array();
    PlaneTree t = graph_to_tree(g);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        j["vertices"].push_back({{"id", static_cast<int>(v)},
                                 {"color", color_name(g.vertices[v].color)},
                                 {"neighbors", t.vertices[v].neighbors},
                                 {"xy", complex_to_json(g.vertices[v].location)}});
    }
    return j;
}

inline nlohmann::json arc_to_json(const Arc& a) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (cd z : a.points) j["points"].push_back(complex_to_json(z));
    j["anchors"] = a.anchors;
    return j;
}

inline Arc arc_from_json(const nlohmann::json& j) {
    Arc a;
    for (const auto& jp : j.at("points")) a.points.push_back(complex_from_json(jp));
    a.anchors = j.at("anchors").get<std::vector<int>>();
    return a;
}

inline nlohmann::json classification_to_json(const PolyClass& pc) {
    nlohmann::json j;
    j["kind"] = kind_name(pc.kind);
    j["degree"] = pc.degree;
    j["clusters"] = nlohmann::json::array();
    for (const auto& cl : pc.clusters) {
        nlohmann::json jc;
        jc["value"] = complex_to_json(cl.value);
        jc["full_group"] = cl.full_group;
        jc["points"] = nlohmann::json::array();
        for (const auto& pt : cl.points)
            jc["points"].push_back(
                {{"location", complex_to_json(pt.location)}, {"mult", pt.mult}});
        j["clusters"].push_back(std::move(jc));
    }
    j["trimmed_groups"] = pc.trimmed_groups();
    return j;
}

inline nlohmann::json homotopy_to_json(const HomotopyResult& hr) {
    nlohmann::json j;
    j["degree"] = hr.degree;
    j["interior_trimmed"] = hr.interior_trimmed;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : hr.samples) {
        nlohmann::json js;
        js["param"] = complex_to_json(s.param);
        js["kind"] = kind_name(s.kind);
        js["trimmed_groups"] = s.trimmed_groups;
        nlohmann::json ja;
        for (const auto& [name, v] : s.assignment) ja[name] = complex_to_json(v);
        js["assignment"] = std::move(ja);
        j["samples"].push_back(std::move(js));
    }
    for (int e = 0; e < 2; ++e) {
        nlohmann::json je;
        je["kind"] = kind_name(hr.endpoint_kinds[e]);
        je["poly"] = poly_to_json(hr.endpoint_polys[e]);
        if (hr.endpoint_codes[e]) {
            je["code"] = hr.endpoint_codes[e]->code;
            je["mirror_code"] = hr.endpoint_codes[e]->mirror_code;
        }
        j[e == 0 ? "endpoint0" : "endpoint1"] = std::move(je);
    }
    j["events"] = hr.events;
    return j;
}

inline nlohmann::json verdict_to_json(const PairVerdict& v) {
    nlohmann::json j;
    j["blocked"] = v.blocked;
    j["shared_passports"] = nlohmann::json::array();
    for (const auto& tp : v.shared) {
        j["shared_passports"].push_back(
            {{"groups", std::vector<std::vector<int>>{tp.groups[0], tp.groups[1], tp.groups[2]}},
             {"display", tp.str()},
             {"trimmed", tp.trim().str()}});
    }
    if (v.blocked) j["failures"] = v.failures;
    return j;
}

}  // namespace zolo
