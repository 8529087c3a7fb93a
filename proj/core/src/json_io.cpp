#include "frameforge/json_io.hpp"

#include "frameforge/numeric.hpp"

#include <algorithm>
#include <json.hpp>

namespace frameforge {

namespace {

using ordered_json = nlohmann::ordered_json;

// line/column of a byte offset, 1-based
std::pair<int, int> locate(std::string_view text, size_t byte) {
    int line = 1;
    int column = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

void require_keys(const ordered_json& obj, std::string_view where,
                  std::initializer_list<const char*> keys) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : keys) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known)
            fail(DiagCode::UNKNOWN_FIELD,
                 std::string(where) + " has unknown field '" + item.key() + "'");
    }
    for (const char* k : keys) {
        if (!obj.contains(k))
            fail(DiagCode::SCHEMA_ERROR, std::string(where) + " is missing field '" + k + "'");
    }
}

double as_double(const ordered_json& obj, std::string_view where, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number())
        fail(DiagCode::SCHEMA_ERROR, std::string(where) + " field '" + key + "' must be a number");
    return v.get<double>();
}

int as_int(const ordered_json& obj, std::string_view where, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        fail(DiagCode::SCHEMA_ERROR, std::string(where) + " field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string as_string(const ordered_json& obj, std::string_view where, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_string())
        fail(DiagCode::SCHEMA_ERROR, std::string(where) + " field '" + key + "' must be a string");
    return v.get<std::string>();
}

const ordered_json& as_array(const ordered_json& obj, std::string_view where, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_array())
        fail(DiagCode::SCHEMA_ERROR, std::string(where) + " field '" + key + "' must be an array");
    return v;
}

} // namespace

std::string to_canonical_json(const FrameModel& model) {
    ordered_json root;

    root["units"] = {{"length", std::string(name(model.units.length))},
                     {"force", std::string(name(model.units.force))}};

    auto nodes = model.nodes;
    std::stable_sort(nodes.begin(), nodes.end(),
                     [](const auto& a, const auto& b) { return a.id < b.id; });
    root["nodes"] = ordered_json::array();
    for (const auto& n : nodes) {
        root["nodes"].push_back(
            {{"id", n.id}, {"x", n.x}, {"y", n.y}, {"description", n.description}});
    }

    auto supports = model.supports;
    std::stable_sort(supports.begin(), supports.end(),
                     [](const auto& a, const auto& b) { return a.node_id < b.node_id; });
    root["supports"] = ordered_json::array();
    for (const auto& s : supports) {
        root["supports"].push_back({{"node", s.node_id}, {"kind", std::string(to_string(s.kind))}});
    }

    auto sections = model.sections;
    std::stable_sort(sections.begin(), sections.end(),
                     [](const auto& a, const auto& b) { return a.name < b.name; });
    root["sections"] = ordered_json::array();
    for (const auto& s : sections) {
        root["sections"].push_back({{"name", s.name},
                                    {"E", s.youngs_modulus},
                                    {"A", s.area},
                                    {"I", s.moment_of_inertia}});
    }

    auto elements = model.elements;
    std::stable_sort(elements.begin(), elements.end(),
                     [](const auto& a, const auto& b) { return a.id < b.id; });
    root["elements"] = ordered_json::array();
    for (const auto& e : elements) {
        if (!e.end_i.resolved() || !e.end_j.resolved())
            fail(DiagCode::UNRESOLVED_ELEMENT_END,
                 "element " + std::to_string(e.id) + " must be resolved before serialization", e.id);
        root["elements"].push_back({{"id", e.id},
                                    {"kind", std::string(to_string(e.kind))},
                                    {"node_i", e.end_i.node_id()},
                                    {"node_j", e.end_j.node_id()},
                                    {"section", e.section},
                                    {"description", e.description}});
    }

    auto point_loads = model.point_loads;
    std::stable_sort(point_loads.begin(), point_loads.end(),
                     [](const auto& a, const auto& b) { return a.node_id < b.node_id; });
    root["point_loads"] = ordered_json::array();
    for (const auto& p : point_loads) {
        root["point_loads"].push_back(
            {{"node", p.node_id}, {"fx", p.fx}, {"fy", p.fy}, {"mz", p.mz}});
    }

    auto udls = model.distributed_loads;
    std::stable_sort(udls.begin(), udls.end(),
                     [](const auto& a, const auto& b) { return a.element_id < b.element_id; });
    root["distributed_loads"] = ordered_json::array();
    for (const auto& d : udls) {
        root["distributed_loads"].push_back({{"element", d.element_id}, {"w", d.w_transverse}});
    }

    root["provenance"] = model.provenance;

    return root.dump(2, ' ', true) + "\n";
}

FrameModel frame_model_from_json(std::string_view text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        auto [line, column] = locate(text, ex.byte > 0 ? ex.byte - 1 : 0);
        throw FrameError(Diagnostic{DiagCode::PARSE_ERROR, Severity::error, ex.what(), -1, line,
                                    column});
    }
    if (!root.is_object()) fail(DiagCode::SCHEMA_ERROR, "top level must be an object");

    require_keys(root, "model",
                 {"units", "nodes", "supports", "sections", "elements", "point_loads",
                  "distributed_loads", "provenance"});

    FrameModel model;

    const auto& units = root.at("units");
    if (!units.is_object()) fail(DiagCode::SCHEMA_ERROR, "'units' must be an object");
    require_keys(units, "units", {"length", "force"});
    auto lu = length_unit_from_name(as_string(units, "units", "length"));
    if (!lu) fail(DiagCode::SCHEMA_ERROR, "unknown length unit '" +
                                              as_string(units, "units", "length") + "'");
    auto fu = force_unit_from_name(as_string(units, "units", "force"));
    if (!fu)
        fail(DiagCode::SCHEMA_ERROR, "unknown force unit '" + as_string(units, "units", "force") + "'");
    model.units = UnitSystem{*lu, *fu};

    for (const auto& n : as_array(root, "model", "nodes")) {
        require_keys(n, "node", {"id", "x", "y", "description"});
        model.nodes.push_back(NodeRecord{as_int(n, "node", "id"), as_double(n, "node", "x"),
                                         as_double(n, "node", "y"),
                                         as_string(n, "node", "description")});
    }

    for (const auto& s : as_array(root, "model", "supports")) {
        require_keys(s, "support", {"node", "kind"});
        auto kind = support_kind_from_string(as_string(s, "support", "kind"));
        if (!kind)
            fail(DiagCode::SCHEMA_ERROR,
                 "unknown support kind '" + as_string(s, "support", "kind") + "'");
        model.supports.push_back(SupportRecord{as_int(s, "support", "node"), *kind});
    }

    for (const auto& s : as_array(root, "model", "sections")) {
        require_keys(s, "section", {"name", "E", "A", "I"});
        model.sections.push_back(SectionProperties{as_string(s, "section", "name"),
                                                   as_double(s, "section", "E"),
                                                   as_double(s, "section", "A"),
                                                   as_double(s, "section", "I")});
    }

    for (const auto& e : as_array(root, "model", "elements")) {
        require_keys(e, "element", {"id", "kind", "node_i", "node_j", "section", "description"});
        auto kind = element_kind_from_string(as_string(e, "element", "kind"));
        if (!kind)
            fail(DiagCode::SCHEMA_ERROR,
                 "unknown element kind '" + as_string(e, "element", "kind") + "'");
        ElementRecord rec;
        rec.id = as_int(e, "element", "id");
        rec.kind = *kind;
        rec.end_i = ElementEnd::node(as_int(e, "element", "node_i"));
        rec.end_j = ElementEnd::node(as_int(e, "element", "node_j"));
        rec.section = as_string(e, "element", "section");
        rec.description = as_string(e, "element", "description");
        model.elements.push_back(std::move(rec));
    }

    for (const auto& p : as_array(root, "model", "point_loads")) {
        require_keys(p, "point_load", {"node", "fx", "fy", "mz"});
        model.point_loads.push_back(PointLoad{as_int(p, "point_load", "node"),
                                              as_double(p, "point_load", "fx"),
                                              as_double(p, "point_load", "fy"),
                                              as_double(p, "point_load", "mz")});
    }

    for (const auto& d : as_array(root, "model", "distributed_loads")) {
        require_keys(d, "distributed_load", {"element", "w"});
        model.distributed_loads.push_back(DistributedLoad{
            as_int(d, "distributed_load", "element"), as_double(d, "distributed_load", "w")});
    }

    if (!root.at("provenance").is_string())
        fail(DiagCode::SCHEMA_ERROR, "'provenance' must be a string");
    model.provenance = root.at("provenance").get<std::string>();

    return model;
}

} // namespace frameforge
