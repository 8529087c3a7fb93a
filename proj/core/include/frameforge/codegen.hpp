#pragma once

#include "frameforge/model.hpp"
#include "frameforge/story.hpp"

#include <string>
#include <string_view>

namespace frameforge {

enum class Dialect { opensees_tcl, sap2000_s2k, etabs_e2k };

std::string_view to_string(Dialect d);
std::string_view file_extension(Dialect d); ///< ".tcl" ".s2k" ".e2k"
std::optional<Dialect> dialect_from_string(std::string_view s);
std::optional<Dialect> dialect_from_extension(std::string_view path);

struct EmittedScript {
    Dialect dialect = Dialect::opensees_tcl;
    std::string text;          ///< trailing newline, ASCII only
    std::string source_digest; ///< content hash of the canonical IR JSON

    bool operator==(const EmittedScript&) const = default;
};

/// OpenSees TCL emitter: one line per IR object, fixed linear-static
/// analysis block, byte-deterministic. Node/element numbering equals IR ids.
EmittedScript emit_opensees(const FrameModel& model);

/// SAP2000 S2K emitter: table-structured text, XorR/Y/Z joint fields,
/// connectivity strictly before section assignment, byte-deterministic.
EmittedScript emit_sap2000(const FrameModel& model);

/// ETABS E2K emitter: story-structured text driven by the StoryModel.
/// source_digest identifies the canonical IR JSON the story model came from.
EmittedScript emit_etabs(const StoryModel& story, std::string_view source_digest);

/// Convenience wrapper: story-maps the model and stamps its own digest.
EmittedScript emit_etabs(const FrameModel& model);

} // namespace frameforge
