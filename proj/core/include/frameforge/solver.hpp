#pragma once

#include "frameforge/model.hpp"

#include <string>
#include <vector>

namespace frameforge {

struct NodeDisplacement {
    int node_id = 0;
    double ux = 0.0;
    double uy = 0.0;
    double rz = 0.0;
};

struct Reaction {
    int node_id = 0;
    double rx = 0.0;
    double ry = 0.0;
    double rm = 0.0;
};

/// Member end forces in local axes, counter-clockwise positive
/// (docs/solver_conventions.md).
struct EndForces {
    int element_id = 0;
    double n_i = 0.0, v_i = 0.0, m_i = 0.0;
    double n_j = 0.0, v_j = 0.0, m_j = 0.0;
};

struct DiagramStation {
    double position = 0.0; ///< distance from end i along the member
    double axial = 0.0;
    double shear = 0.0;
    double moment = 0.0;
};

struct ElementDiagram {
    int element_id = 0;
    std::vector<DiagramStation> stations;
};

struct SolutionState {
    std::vector<NodeDisplacement> displacements; ///< one per node, model order
    std::vector<Reaction> reactions;             ///< one per supported node
    std::vector<EndForces> end_forces;           ///< one per element, model order
    std::vector<ElementDiagram> diagrams;
    std::vector<Diagnostic> warnings; ///< ILL_CONDITIONED when triggered
    double condition_estimate = 0.0;  ///< max/min pivot magnitude ratio
};

struct SolverOptions {
    int diagram_samples = 11;                 ///< stations per element, >= 2
    double condition_warn_threshold = 1e12;
};

/// Linear-elastic plane-frame direct stiffness solve (3 DOF per node).
/// UDLs enter as fixed-end force equivalents and are superposed back into
/// the reported end forces. Throws FrameError with SINGULAR_SYSTEM naming
/// the free DOF of a mechanism.
SolutionState solve(const FrameModel& model, const SolverOptions& options = {});

/// Resamples internal-force diagrams at n equally spaced stations per element.
std::vector<ElementDiagram> internal_force_diagrams(const FrameModel& model,
                                                    const SolutionState& solution,
                                                    int n_samples);

struct SolutionComparison {
    bool equivalent = false;
    std::vector<std::string> mismatches;
};

/// Field-wise comparison of two solutions over structurally equivalent models
/// (coordinate-based matching). Throws FrameError with UNMATCHED_TOPOLOGY when
/// the models do not correspond.
SolutionComparison solutions_equivalent(const FrameModel& model_a, const SolutionState& a,
                                        const FrameModel& model_b, const SolutionState& b,
                                        double rel_tol = 1e-9);

/// SolutionState export in the canonical JSON conventions.
std::string solution_to_json(const FrameModel& model, const SolutionState& solution);

} // namespace frameforge
