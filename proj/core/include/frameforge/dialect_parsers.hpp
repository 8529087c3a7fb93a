#pragma once

#include "frameforge/model.hpp"
#include "frameforge/story.hpp"

#include <string_view>

namespace frameforge {

/// Parsers for the repo-documented dialect subsets written by the emitters
/// (docs/dialects/). They reject, never repair: every error throws FrameError
/// with DIALECT_SYNTAX_ERROR (line number), DUPLICATE_DEFINITION or
/// UNDEFINED_REFERENCE, and no model is returned.

FrameModel parse_opensees(std::string_view text);
FrameModel parse_sap2000(std::string_view text);
StoryModel parse_etabs(std::string_view text);

} // namespace frameforge
