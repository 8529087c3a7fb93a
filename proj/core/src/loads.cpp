#include "frameforge/loads.hpp"

#include "frameforge/numeric.hpp"
#include "frameforge/topology.hpp"

#include <cmath>

namespace frameforge {

AssignedLoads assign_loads(const FrameProblemSpec& spec, const std::vector<NodeRecord>& nodes,
                           const std::vector<ElementRecord>& elements, double coord_tol) {
    AssignedLoads out;

    auto node_at = [&](double x, double y) -> const NodeRecord* {
        for (const auto& n : nodes) {
            if (std::fabs(n.x - x) <= coord_tol && std::fabs(n.y - y) <= coord_tol) return &n;
        }
        return nullptr;
    };

    // lateral load at every floor of the leftmost column line
    const auto y = level_elevations(spec);
    const int floors_on_line0 = column_line_heights(spec)[0];
    if (spec.lateral_load_per_floor != 0.0) {
        for (int k = 1; k <= floors_on_line0; ++k) {
            const NodeRecord* n = node_at(0.0, y[k]);
            if (!n)
                fail(DiagCode::NO_NODE_AT_LOCATION,
                     "no node at (0, " + format_double(y[k]) + ") for the floor-" +
                         std::to_string(k) + " lateral load");
            out.point_loads.push_back(PointLoad{n->id, spec.lateral_load_per_floor, 0.0, 0.0});
        }
    } else {
        out.warnings.push_back(Diagnostic{DiagCode::ZERO_LOAD_DROPPED, Severity::warning,
                                          "lateral_per_floor is zero; no lateral loads assigned"});
    }

    // one distributed load per girder
    if (spec.gravity_udl != 0.0) {
        for (const auto& e : elements) {
            if (e.kind == ElementKind::girder)
                out.distributed_loads.push_back(DistributedLoad{e.id, -spec.gravity_udl});
        }
    } else {
        out.warnings.push_back(Diagnostic{DiagCode::ZERO_LOAD_DROPPED, Severity::warning,
                                          "gravity_udl is zero; no distributed loads assigned"});
    }

    for (const auto& extra : spec.extra_point_loads) {
        const NodeRecord* n = node_at(extra.x, extra.y);
        if (!n)
            fail(DiagCode::NO_NODE_AT_LOCATION,
                 "extra point load at (" + format_double(extra.x) + ", " + format_double(extra.y) +
                     ") matches no node");
        if (extra.fx == 0.0 && extra.fy == 0.0 && extra.mz == 0.0) {
            out.warnings.push_back(
                Diagnostic{DiagCode::ZERO_LOAD_DROPPED, Severity::warning,
                           "extra point load on node " + std::to_string(n->id) + " has magnitude 0",
                           n->id});
            continue;
        }
        out.point_loads.push_back(PointLoad{n->id, extra.fx, extra.fy, extra.mz});
    }

    return out;
}

} // namespace frameforge
