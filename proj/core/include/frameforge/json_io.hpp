#pragma once

#include "frameforge/model.hpp"

#include <string>
#include <string_view>

namespace frameforge {

/// Canonical serialization: deterministic key order, arrays sorted by id,
/// shortest round-trip float formatting. Equal models serialize byte-identically.
/// Precondition: the model has no error-severity validation diagnostics.
std::string to_canonical_json(const FrameModel& model);

/// Strict inverse of to_canonical_json. Unknown fields are rejected.
/// Throws FrameError with PARSE_ERROR (line/column), SCHEMA_ERROR or UNKNOWN_FIELD.
FrameModel frame_model_from_json(std::string_view text);

} // namespace frameforge
