#include "frameforge/codegen.hpp"

#include "frameforge/json_io.hpp"
#include "frameforge/numeric.hpp"

namespace frameforge {

std::string_view to_string(Dialect d) {
    switch (d) {
    case Dialect::opensees_tcl: return "opensees_tcl";
    case Dialect::sap2000_s2k: return "sap2000_s2k";
    case Dialect::etabs_e2k: return "etabs_e2k";
    }
    return "opensees_tcl";
}

std::string_view file_extension(Dialect d) {
    switch (d) {
    case Dialect::opensees_tcl: return ".tcl";
    case Dialect::sap2000_s2k: return ".s2k";
    case Dialect::etabs_e2k: return ".e2k";
    }
    return ".tcl";
}

std::optional<Dialect> dialect_from_string(std::string_view s) {
    if (s == "opensees" || s == "opensees_tcl") return Dialect::opensees_tcl;
    if (s == "sap2000" || s == "sap2000_s2k") return Dialect::sap2000_s2k;
    if (s == "etabs" || s == "etabs_e2k") return Dialect::etabs_e2k;
    return std::nullopt;
}

std::optional<Dialect> dialect_from_extension(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.substr(path.size() - suffix.size()) == suffix;
    };
    if (ends_with(".tcl")) return Dialect::opensees_tcl;
    if (ends_with(".s2k")) return Dialect::sap2000_s2k;
    if (ends_with(".e2k")) return Dialect::etabs_e2k;
    return std::nullopt;
}

EmittedScript emit_etabs(const FrameModel& model) {
    return emit_etabs(to_story_model(model), content_digest(to_canonical_json(model)));
}

} // namespace frameforge
