#pragma once

#include <json.hpp>

#include "builtin_data.hpp"
#include "planetree.hpp"

namespace zolo {

/// Parsed copy of the built-in data file (reference trees, degree-7
/// component tables, family catalog). data/families.json holds the same
/// content on disk for external tools.
inline const nlohmann::json& builtin_data() {
    static const nlohmann::json j = nlohmann::json::parse(detail::builtin_data_json());
    return j;
}

/// Named reference tree, e.g. reference_tree("five_edge", "T3").
inline PlaneTree reference_tree(const std::string& group, const std::string& label) {
    return tree_from_json(builtin_data().at("reference_trees").at(group).at(label));
}

inline PlaneTree reference_example_tree() {
    return tree_from_json(builtin_data().at("reference_trees").at("example_5edge"));
}

/// Six-edge reference trees labeled T1..T13; T8 and T11 are the mirror
/// images of the drawn T7 and T10.
inline PlaneTree six_edge_tree(const std::string& label) {
    if (label == "T8") return mirror(reference_tree("six_edge", "T7"));
    if (label == "T11") return mirror(reference_tree("six_edge", "T10"));
    return reference_tree("six_edge", label);
}

inline std::vector<PlaneTree> degree7_table(const std::string& key) {
    std::vector<PlaneTree> out;
    for (const auto& jt : builtin_data().at("degree7").at(key)) out.push_back(tree_from_json(jt));
    return out;
}

}  // namespace zolo
