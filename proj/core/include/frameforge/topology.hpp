#pragma once

#include "frameforge/model.hpp"
#include "frameforge/problem_spec.hpp"

#include <vector>

namespace frameforge {

/// One frame cell to assemble: story k of bay b, both 1-based.
struct CellStep {
    int story = 0;
    int bay = 0;

    bool operator==(const CellStep&) const = default;
};

/// Steps sorted bottom-to-top, left-to-right; (k, b) present iff
/// stories_per_bay[b-1] >= k.
struct ConstructionPlan {
    std::vector<CellStep> steps;

    bool operator==(const ConstructionPlan&) const = default;
};

ConstructionPlan build_plan(const FrameProblemSpec& spec);

/// x-coordinate of each column line, index 0..n_bays.
std::vector<double> column_line_abscissae(const FrameProblemSpec& spec);

/// Story count each column line extends to: max of the adjacent bays.
std::vector<int> column_line_heights(const FrameProblemSpec& spec);

/// Elevation of each level, index 0..max story count (y_0 = 0).
std::vector<double> level_elevations(const FrameProblemSpec& spec);

struct GeneratedNodes {
    std::vector<NodeRecord> nodes;
    std::vector<SupportRecord> supports;
};

/// Grid nodes numbered left-to-right within each level, bottom-to-top across
/// levels, starting at 1. Every base node gets a support of spec.support_kind.
GeneratedNodes generate_nodes(const FrameProblemSpec& spec, const ConstructionPlan& plan);

/// Elements in coordinate-end form, created in plan order: left column,
/// right column (each unless already present), then the bay girder.
std::vector<ElementRecord> generate_elements(const FrameProblemSpec& spec,
                                             const ConstructionPlan& plan,
                                             const std::vector<NodeRecord>& nodes);

/// Full first-stage pipeline: plan, nodes, elements, connectivity resolution,
/// load assignment, validation. Throws FrameError if the result does not
/// validate cleanly.
FrameModel build_model(const FrameProblemSpec& spec, double coord_tol = kCoordinateTol);

} // namespace frameforge
