#include "frameforge/model.hpp"

#include "frameforge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace frameforge {

double coordinate_tolerance() {
    if (const char* env = std::getenv("FRAMEFORGE_TOL")) {
        if (auto v = parse_double(env); v && *v > 0.0) return *v;
    }
    return kCoordinateTol;
}

std::string_view to_string(SupportKind k) {
    switch (k) {
    case SupportKind::fixed: return "fixed";
    case SupportKind::pinned: return "pinned";
    case SupportKind::roller_x: return "roller_x";
    case SupportKind::roller_y: return "roller_y";
    }
    return "fixed";
}

std::string_view to_string(ElementKind k) {
    return k == ElementKind::column ? "column" : "girder";
}

std::optional<SupportKind> support_kind_from_string(std::string_view s) {
    if (s == "fixed") return SupportKind::fixed;
    if (s == "pinned") return SupportKind::pinned;
    if (s == "roller_x") return SupportKind::roller_x;
    if (s == "roller_y") return SupportKind::roller_y;
    return std::nullopt;
}

std::optional<ElementKind> element_kind_from_string(std::string_view s) {
    if (s == "column") return ElementKind::column;
    if (s == "girder") return ElementKind::girder;
    return std::nullopt;
}

Fixity fixity_of(SupportKind k) {
    switch (k) {
    case SupportKind::fixed: return {true, true, true};
    case SupportKind::pinned: return {true, true, false};
    case SupportKind::roller_x: return {false, true, false};
    case SupportKind::roller_y: return {true, false, false};
    }
    return {true, true, true};
}

std::optional<SupportKind> support_kind_from_fixity(const Fixity& f) {
    if (f == Fixity{true, true, true}) return SupportKind::fixed;
    if (f == Fixity{true, true, false}) return SupportKind::pinned;
    if (f == Fixity{false, true, false}) return SupportKind::roller_x;
    if (f == Fixity{true, false, false}) return SupportKind::roller_y;
    return std::nullopt;
}

const NodeRecord* FrameModel::find_node(int id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

const ElementRecord* FrameModel::find_element(int id) const {
    for (const auto& e : elements) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

const SectionProperties* FrameModel::find_section(std::string_view name) const {
    for (const auto& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

namespace {

void add(std::vector<Diagnostic>& out, DiagCode code, std::string detail, int id = -1,
         Severity sev = Severity::error) {
    out.push_back(Diagnostic{code, sev, std::move(detail), id});
}

} // namespace

std::vector<Diagnostic> validate_model(const FrameModel& model, double coord_tol) {
    std::vector<Diagnostic> diags;

    std::set<int> node_ids;
    for (const auto& n : model.nodes) {
        if (n.id <= 0) add(diags, DiagCode::DUPLICATE_ID, "node id must be positive", n.id);
        if (!node_ids.insert(n.id).second)
            add(diags, DiagCode::DUPLICATE_ID, "node id defined more than once", n.id);
    }
    for (size_t i = 0; i < model.nodes.size(); ++i) {
        for (size_t j = i + 1; j < model.nodes.size(); ++j) {
            const auto& a = model.nodes[i];
            const auto& b = model.nodes[j];
            if (std::fabs(a.x - b.x) <= coord_tol && std::fabs(a.y - b.y) <= coord_tol) {
                add(diags, DiagCode::DUPLICATE_COORDINATE,
                    "nodes " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                        " share a coordinate",
                    b.id);
            }
        }
    }

    std::set<std::string> section_names;
    for (const auto& s : model.sections) {
        if (!section_names.insert(s.name).second)
            add(diags, DiagCode::DUPLICATE_ID, "section '" + s.name + "' defined more than once");
        if (s.youngs_modulus <= 0.0 || s.area <= 0.0 || s.moment_of_inertia <= 0.0)
            add(diags, DiagCode::NONPOSITIVE_SECTION,
                "section '" + s.name + "' requires E > 0, A > 0, I > 0");
    }

    std::set<int> supported;
    for (const auto& s : model.supports) {
        if (!node_ids.count(s.node_id))
            add(diags, DiagCode::DANGLING_NODE_REF,
                "support references missing node " + std::to_string(s.node_id), s.node_id);
        if (!supported.insert(s.node_id).second)
            add(diags, DiagCode::DUPLICATE_SUPPORT,
                "node " + std::to_string(s.node_id) + " has more than one support", s.node_id);
    }

    std::set<int> element_ids;
    for (const auto& e : model.elements) {
        if (e.id <= 0) add(diags, DiagCode::DUPLICATE_ID, "element id must be positive", e.id);
        if (!element_ids.insert(e.id).second)
            add(diags, DiagCode::DUPLICATE_ID, "element id defined more than once", e.id);
        if (!e.end_i.resolved() || !e.end_j.resolved()) {
            add(diags, DiagCode::UNRESOLVED_ELEMENT_END,
                "element " + std::to_string(e.id) + " has coordinate ends; run connectivity resolution",
                e.id);
            continue;
        }
        const NodeRecord* ni = model.find_node(e.end_i.node_id());
        const NodeRecord* nj = model.find_node(e.end_j.node_id());
        if (!ni)
            add(diags, DiagCode::DANGLING_NODE_REF,
                "element " + std::to_string(e.id) + " references missing node " +
                    std::to_string(e.end_i.node_id()),
                e.id);
        if (!nj)
            add(diags, DiagCode::DANGLING_NODE_REF,
                "element " + std::to_string(e.id) + " references missing node " +
                    std::to_string(e.end_j.node_id()),
                e.id);
        if (e.end_i == e.end_j)
            add(diags, DiagCode::ZERO_LENGTH_ELEMENT,
                "element " + std::to_string(e.id) + " connects a node to itself", e.id);
        if (ni && nj && ni != nj) {
            if (e.kind == ElementKind::column && std::fabs(ni->x - nj->x) > coord_tol)
                add(diags, DiagCode::ELEMENT_AXIS_MISMATCH,
                    "column " + std::to_string(e.id) + " endpoints do not share x", e.id);
            if (e.kind == ElementKind::girder && std::fabs(ni->y - nj->y) > coord_tol)
                add(diags, DiagCode::ELEMENT_AXIS_MISMATCH,
                    "girder " + std::to_string(e.id) + " endpoints do not share y", e.id);
        }
        if (!model.find_section(e.section))
            add(diags, DiagCode::DANGLING_SECTION_REF,
                "element " + std::to_string(e.id) + " references missing section '" + e.section + "'",
                e.id);
    }

    for (const auto& p : model.point_loads) {
        if (!node_ids.count(p.node_id))
            add(diags, DiagCode::DANGLING_NODE_REF,
                "point load references missing node " + std::to_string(p.node_id), p.node_id);
        if (p.fx == 0.0 && p.fy == 0.0 && p.mz == 0.0)
            add(diags, DiagCode::EMPTY_LOAD,
                "point load on node " + std::to_string(p.node_id) + " has no nonzero component",
                p.node_id);
    }
    for (const auto& d : model.distributed_loads) {
        const ElementRecord* e = model.find_element(d.element_id);
        if (!e) {
            add(diags, DiagCode::DANGLING_ELEMENT_REF,
                "distributed load references missing element " + std::to_string(d.element_id),
                d.element_id);
        } else if (e->kind != ElementKind::girder) {
            add(diags, DiagCode::UDL_ON_COLUMN,
                "distributed load targets non-girder element " + std::to_string(d.element_id),
                d.element_id);
        }
    }

    // every base node (y = 0) carries a support
    for (const auto& n : model.nodes) {
        if (std::fabs(n.y) <= coord_tol && !supported.count(n.id))
            add(diags, DiagCode::MISSING_BASE_SUPPORT,
                "base node " + std::to_string(n.id) + " has no support", n.id);
    }

    // connectivity over elements: all nodes in one component
    if (model.nodes.size() > 1) {
        std::map<int, std::vector<int>> adjacency;
        for (const auto& e : model.elements) {
            if (!e.end_i.resolved() || !e.end_j.resolved()) continue;
            adjacency[e.end_i.node_id()].push_back(e.end_j.node_id());
            adjacency[e.end_j.node_id()].push_back(e.end_i.node_id());
        }
        std::set<int> visited;
        std::vector<int> stack{model.nodes.front().id};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            if (!visited.insert(id).second) continue;
            for (int next : adjacency[id]) stack.push_back(next);
        }
        for (const auto& n : model.nodes) {
            if (!visited.count(n.id)) {
                add(diags, DiagCode::DISCONNECTED_MODEL,
                    "node " + std::to_string(n.id) + " is not connected to the rest of the model",
                    n.id);
            }
        }
    }

    if (model.point_loads.empty() && model.distributed_loads.empty())
        add(diags, DiagCode::NO_LOADS, "model carries no loads; not analyzable", -1,
            Severity::warning);

    return diags;
}

std::vector<ElementRecord> resolve_connectivity(const std::vector<NodeRecord>& nodes,
                                                const std::vector<ElementRecord>& elements_with_coords,
                                                double coord_tol) {
    auto lookup = [&](const Coord& c, int element_id) -> int {
        const NodeRecord* found = nullptr;
        for (const auto& n : nodes) {
            if (std::fabs(n.x - c.x) <= coord_tol && std::fabs(n.y - c.y) <= coord_tol) {
                if (found) {
                    fail(DiagCode::AMBIGUOUS_MATCH,
                         "coordinate (" + format_double(c.x) + ", " + format_double(c.y) +
                             ") matches nodes " + std::to_string(found->id) + " and " +
                             std::to_string(n.id),
                         element_id);
                }
                found = &n;
            }
        }
        if (!found) {
            fail(DiagCode::NO_MATCHING_NODE,
                 "coordinate (" + format_double(c.x) + ", " + format_double(c.y) +
                     ") matches no node within tolerance " + format_double(coord_tol),
                 element_id);
        }
        return found->id;
    };

    std::vector<ElementRecord> resolved;
    resolved.reserve(elements_with_coords.size());
    for (const auto& e : elements_with_coords) {
        ElementRecord r = e;
        if (!r.end_i.resolved()) r.end_i = ElementEnd::node(lookup(e.end_i.coord(), e.id));
        if (!r.end_j.resolved()) r.end_j = ElementEnd::node(lookup(e.end_j.coord(), e.id));
        resolved.push_back(std::move(r));
    }
    return resolved;
}

} // namespace frameforge
