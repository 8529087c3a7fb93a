#pragma once

#include "frameforge/model.hpp"
#include "frameforge/problem_spec.hpp"

#include <vector>

namespace frameforge {

struct AssignedLoads {
    std::vector<PointLoad> point_loads;
    std::vector<DistributedLoad> distributed_loads;
    std::vector<Diagnostic> warnings; ///< ZERO_LOAD_DROPPED entries
};

/// Maps the spec's load patterns onto concrete nodes and elements:
/// one lateral point load per floor of the leftmost column line, one
/// distributed load per girder, plus the spec's extra point loads matched
/// by coordinate. Throws FrameError with NO_NODE_AT_LOCATION.
AssignedLoads assign_loads(const FrameProblemSpec& spec,
                           const std::vector<NodeRecord>& nodes,
                           const std::vector<ElementRecord>& elements,
                           double coord_tol = kCoordinateTol);

} // namespace frameforge
