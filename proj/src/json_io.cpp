#include "torsec/json_io.hpp"

namespace torsec {

InputDocument parse_input_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(errc::bad_argument, std::string("invalid JSON: ") + e.what());
    }
    try {
        InputDocument doc;
        doc.fibers = j.at("fibers").get<std::vector<long>>();
        doc.chi = j.at("chi").get<long>();
        if (j.contains("sections"))
            for (const auto& sec : j.at("sections")) {
                InputDocument::Section s;
                s.order = sec.at("order").get<long>();
                s.components = sec.at("components").get<std::vector<long>>();
                doc.sections.push_back(std::move(s));
            }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(errc::bad_argument,
                         std::string("input document: ") + e.what());
    }
}

nlohmann::json relation_to_json(const RelationReport& rep) {
    return nlohmann::json{{"relation", std::string(relation_name(rep.id))},
                          {"lhs", rat_to_string(rep.lhs)},
                          {"rhs", rat_to_string(rep.rhs)},
                          {"holds", rep.holds}};
}

RelationId relation_id_from_name(const std::string& name) {
    for (RelationId id :
         {RelationId::quadratic, RelationId::sum_order2, RelationId::sum_order3plus,
          RelationId::square_sum, RelationId::integrality, RelationId::fixed_point,
          RelationId::euler_divisibility, RelationId::multiples,
          RelationId::distribution, RelationId::section_class})
        if (relation_name(id) == name) return id;
    throw InputError(errc::bad_argument, "unknown relation name: " + name);
}

RelationReport relation_from_json(const nlohmann::json& j) {
    RelationReport rep;
    rep.id = relation_id_from_name(j.at("relation").get<std::string>());
    rep.lhs = rat_from_string(j.at("lhs").get<std::string>());
    rep.rhs = rat_from_string(j.at("rhs").get<std::string>());
    rep.holds = j.at("holds").get<bool>();
    return rep;
}

}  // namespace torsec
