#pragma once

#include "frameforge/codegen.hpp"
#include "frameforge/problem_spec.hpp"

#include <string>
#include <vector>

namespace frameforge {

/// Value pools and the consistent load/material/support pattern the suite
/// generator draws from.
struct BenchConfig {
    std::vector<int> bay_pool;     ///< default 1..4
    std::vector<int> story_pool;   ///< default 1..6
    std::vector<double> width_pool;  ///< bay widths, length units
    std::vector<double> height_pool; ///< story heights
    UnitSystem units;
    SupportKind support_kind = SupportKind::fixed;
    double lateral_per_floor = 10.0; ///< force units
    double gravity_udl = 5.0;        ///< force per length
    SectionProperties column_section;
    SectionProperties girder_section;

    static BenchConfig defaults();
};

/// Reads a config override from JSON (strict schema, docs/bench_config.md).
BenchConfig bench_config_from_json(std::string_view text);

struct BenchCase {
    std::string name;
    FrameProblemSpec spec;
};

/// Exactly 20 specs, deterministic for a fixed config: a regular family plus
/// irregular per-bay story layouts, including a 3-2-4 case when the pools
/// allow one. Throws FrameError with CONFIG_ERROR on empty/infeasible pools.
std::vector<BenchCase> generate_suite(const BenchConfig& config);

struct BenchCell {
    Dialect dialect = Dialect::opensees_tcl;
    bool emitted = false;
    bool parsed_back = false;
    bool model_equivalent = false;
    bool solution_equivalent = false;
    double elapsed_ms = 0.0; ///< informational; excluded from canonical JSON

    bool passed() const { return emitted && parsed_back && model_equivalent && solution_equivalent; }
};

struct BenchRow {
    std::string problem;
    std::vector<BenchCell> cells;
};

struct BenchReport {
    std::vector<Dialect> dialects;
    std::vector<BenchRow> rows;

    double accuracy(Dialect d) const; ///< fraction of problems with all flags true
    bool all_passed() const;
    std::string to_table() const; ///< fixed-width text, includes timings
    /// Deterministic report body: flags and accuracies only, no timings,
    /// so repeated runs compare byte-identically.
    std::string to_canonical_json() const;
};

/// Compile -> emit -> parse back -> models_equivalent -> solve both sides ->
/// solutions_equivalent, per (problem, dialect). Per-cell failures are report
/// data, never exceptions.
BenchReport run_suite(const std::vector<BenchCase>& suite, const std::vector<Dialect>& dialects);

} // namespace frameforge
