#pragma once

#include "frameforge/model.hpp"

#include <string>
#include <vector>

namespace frameforge {

enum class MismatchCategory { node, support, element, section, load, count };
std::string_view to_string(MismatchCategory c);

struct Mismatch {
    MismatchCategory category;
    std::string detail;
};

struct EquivalenceTolerances {
    double coordinate = 1e-6; ///< absolute, model length units
    double relative = 1e-9;   ///< load/section values
};

struct EquivalenceReport {
    bool equivalent = false; ///< true iff mismatches is empty
    std::vector<Mismatch> mismatches;
    EquivalenceTolerances tolerances;

    std::string to_text() const;
    std::string to_json() const; ///< canonical JSON conventions
};

/// Id-independent structural equivalence: nodes matched by coordinates,
/// elements by matched endpoint pairs plus section values, supports by
/// matched node plus kind, loads by matched target plus components.
/// Never throws; mismatches are data.
EquivalenceReport models_equivalent(const FrameModel& a, const FrameModel& b,
                                    EquivalenceTolerances tol = {});

} // namespace frameforge
