#include "frameforge/diagnostics.hpp"

#include <utility>

namespace frameforge {

std::string_view to_string(DiagCode code) {
    switch (code) {
    case DiagCode::DUPLICATE_ID: return "DUPLICATE_ID";
    case DiagCode::DUPLICATE_COORDINATE: return "DUPLICATE_COORDINATE";
    case DiagCode::DANGLING_NODE_REF: return "DANGLING_NODE_REF";
    case DiagCode::DANGLING_SECTION_REF: return "DANGLING_SECTION_REF";
    case DiagCode::DANGLING_ELEMENT_REF: return "DANGLING_ELEMENT_REF";
    case DiagCode::DUPLICATE_SUPPORT: return "DUPLICATE_SUPPORT";
    case DiagCode::NONPOSITIVE_SECTION: return "NONPOSITIVE_SECTION";
    case DiagCode::ZERO_LENGTH_ELEMENT: return "ZERO_LENGTH_ELEMENT";
    case DiagCode::ELEMENT_AXIS_MISMATCH: return "ELEMENT_AXIS_MISMATCH";
    case DiagCode::UDL_ON_COLUMN: return "UDL_ON_COLUMN";
    case DiagCode::EMPTY_LOAD: return "EMPTY_LOAD";
    case DiagCode::MISSING_BASE_SUPPORT: return "MISSING_BASE_SUPPORT";
    case DiagCode::DISCONNECTED_MODEL: return "DISCONNECTED_MODEL";
    case DiagCode::NO_LOADS: return "NO_LOADS";
    case DiagCode::UNRESOLVED_ELEMENT_END: return "UNRESOLVED_ELEMENT_END";
    case DiagCode::NO_MATCHING_NODE: return "NO_MATCHING_NODE";
    case DiagCode::AMBIGUOUS_MATCH: return "AMBIGUOUS_MATCH";
    case DiagCode::PARSE_ERROR: return "PARSE_ERROR";
    case DiagCode::SCHEMA_ERROR: return "SCHEMA_ERROR";
    case DiagCode::UNKNOWN_FIELD: return "UNKNOWN_FIELD";
    case DiagCode::SYNTAX_ERROR: return "SYNTAX_ERROR";
    case DiagCode::MISSING_SECTION: return "MISSING_SECTION";
    case DiagCode::INCONSISTENT_LENGTHS: return "INCONSISTENT_LENGTHS";
    case DiagCode::UNSUPPORTED_UNIT: return "UNSUPPORTED_UNIT";
    case DiagCode::NO_NODE_AT_LOCATION: return "NO_NODE_AT_LOCATION";
    case DiagCode::ZERO_LOAD_DROPPED: return "ZERO_LOAD_DROPPED";
    case DiagCode::NON_STRATIFIED_MODEL: return "NON_STRATIFIED_MODEL";
    case DiagCode::UNSUPPORTED_FEATURE: return "UNSUPPORTED_FEATURE";
    case DiagCode::DIALECT_SYNTAX_ERROR: return "DIALECT_SYNTAX_ERROR";
    case DiagCode::DUPLICATE_DEFINITION: return "DUPLICATE_DEFINITION";
    case DiagCode::UNDEFINED_REFERENCE: return "UNDEFINED_REFERENCE";
    case DiagCode::SINGULAR_SYSTEM: return "SINGULAR_SYSTEM";
    case DiagCode::ILL_CONDITIONED: return "ILL_CONDITIONED";
    case DiagCode::UNMATCHED_TOPOLOGY: return "UNMATCHED_TOPOLOGY";
    case DiagCode::CONFIG_ERROR: return "CONFIG_ERROR";
    case DiagCode::IO_ERROR: return "IO_ERROR";
    }
    return "UNKNOWN";
}

std::string Diagnostic::to_text() const {
    std::string out(severity == Severity::error ? "error" : "warning");
    out += ": ";
    out += to_string(code);
    if (subject_id >= 0) {
        out += " (id ";
        out += std::to_string(subject_id);
        out += ")";
    }
    if (line > 0) {
        out += " at line ";
        out += std::to_string(line);
        if (column > 0) {
            out += ", column ";
            out += std::to_string(column);
        }
    }
    if (!detail.empty()) {
        out += ": ";
        out += detail;
    }
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        if (d.severity == Severity::error) return true;
    }
    return false;
}

FrameError::FrameError(Diagnostic diag) : std::runtime_error(diag.to_text()), diag_(std::move(diag)) {}

void fail(DiagCode code, std::string detail, int subject_id, int line, int column) {
    throw FrameError(Diagnostic{code, Severity::error, std::move(detail), subject_id, line, column});
}

} // namespace frameforge
