#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "torsec/relations.hpp"

namespace torsec {

// Structured input document: {"fibers": [..], "chi": n,
// "sections": [{"order": n, "components": [..]}, ..]}.
struct InputDocument {
    std::vector<long> fibers;
    long chi = 1;
    struct Section {
        long order = 1;
        std::vector<long> components;
    };
    std::vector<Section> sections;
};

InputDocument parse_input_document(const std::string& text);

// Per-check object {"relation": name, "lhs": "a/b", "rhs": "a/b", "holds": bool}.
nlohmann::json relation_to_json(const RelationReport& rep);
RelationReport relation_from_json(const nlohmann::json& j);

RelationId relation_id_from_name(const std::string& name);

}  // namespace torsec
