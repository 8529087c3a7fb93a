#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frameforge {

/// Machine-readable diagnostic codes shared by every pipeline stage.
enum class DiagCode {
    // model validation / connectivity resolution
    DUPLICATE_ID,
    DUPLICATE_COORDINATE,
    DANGLING_NODE_REF,
    DANGLING_SECTION_REF,
    DANGLING_ELEMENT_REF,
    DUPLICATE_SUPPORT,
    NONPOSITIVE_SECTION,
    ZERO_LENGTH_ELEMENT,
    ELEMENT_AXIS_MISMATCH,
    UDL_ON_COLUMN,
    EMPTY_LOAD,
    MISSING_BASE_SUPPORT,
    DISCONNECTED_MODEL,
    NO_LOADS,
    UNRESOLVED_ELEMENT_END,
    NO_MATCHING_NODE,
    AMBIGUOUS_MATCH,
    // canonical JSON
    PARSE_ERROR,
    SCHEMA_ERROR,
    UNKNOWN_FIELD,
    // problem template
    SYNTAX_ERROR,
    MISSING_SECTION,
    INCONSISTENT_LENGTHS,
    UNSUPPORTED_UNIT,
    // load assignment
    NO_NODE_AT_LOCATION,
    ZERO_LOAD_DROPPED,
    // story mapping
    NON_STRATIFIED_MODEL,
    // code generation
    UNSUPPORTED_FEATURE,
    // dialect parsing
    DIALECT_SYNTAX_ERROR,
    DUPLICATE_DEFINITION,
    UNDEFINED_REFERENCE,
    // solver
    SINGULAR_SYSTEM,
    ILL_CONDITIONED,
    UNMATCHED_TOPOLOGY,
    // bench harness
    CONFIG_ERROR,
    // filesystem
    IO_ERROR,
};

std::string_view to_string(DiagCode code);

enum class Severity { warning, error };

struct Diagnostic {
    DiagCode code;
    Severity severity = Severity::error;
    std::string detail;
    int subject_id = -1; ///< offending node/element id, -1 when not applicable
    int line = 0;        ///< 1-based source line for text-format errors, 0 = n/a
    int column = 0;

    std::string to_text() const;
};

/// True if any diagnostic in the list has error severity.
bool has_errors(const std::vector<Diagnostic>& diags);

/// Exception wrapper used by operations whose contract is "reject, never repair".
class FrameError : public std::runtime_error {
  public:
    explicit FrameError(Diagnostic diag);
    const Diagnostic& diagnostic() const { return diag_; }

  private:
    Diagnostic diag_;
};

[[noreturn]] void fail(DiagCode code, std::string detail, int subject_id = -1, int line = 0,
                       int column = 0);

} // namespace frameforge
