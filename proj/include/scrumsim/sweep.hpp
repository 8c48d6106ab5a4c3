#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scrumsim/config.hpp"
#include "scrumsim/metrics.hpp"

namespace scrumsim {

struct DesignError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A factorial experiment: base config, varied fields (in declaration order),
// repetitions per cell, and the master seed that every per-run seed is
// derived from.
struct SweepDesign {
    WorldConfig base;
    // field name -> raw values; the leftmost field varies slowest.
    std::vector<std::pair<std::string, std::vector<std::string>>> variations;
    int repetitions = 30;
    std::uint64_t master_seed = 0;
};

struct RunSpec {
    WorldConfig config;  // seed already derived via mix_seed(master_seed, run_id)
    std::uint64_t run_id = 0;
};

// Same line format as a config file plus `repetitions`, `master_seed`, and
// `vary.<field> = [v1, v2, ...]`; every other key sets the base config.
SweepDesign parse_design_text(const std::string& text);
SweepDesign load_design_file(const std::string& path);

// The four-cell experiment over (sociable, curious), enumerated with curious
// varying slowest: cell 1 (F,F), 2 (T,F), 3 (F,T), 4 (T,T). The base
// config's seed doubles as the master seed.
SweepDesign scenario_design(const WorldConfig& base, int repetitions);

// Cartesian product of the variations, repetitions innermost; run k is
// seeded with mix_seed(master_seed, k). Pure: the same design always
// expands to the same list. Invalid cells abort naming the run id.
std::vector<RunSpec> expand_design(const SweepDesign& design);

// Executes every run and returns rows ordered by run_id. Output is bitwise
// identical for any worker_count >= 1.
std::vector<RunResult> execute_sweep(const SweepDesign& design, int worker_count);

struct CellStats {
    bool sociable = false;
    bool curious = false;
    int runs = 0;
    double velocity_median = 0.0;
    double solved_median = 0.0;
    double ticks_median = 0.0;
    std::array<double, 3> solved_class_median{};
    std::array<double, 3> gain_abs_median{};  // NaN-skipping medians
    std::array<double, 3> gain_rel_median{};
    std::string top_gain;
};

struct ScenarioReport {
    std::array<CellStats, 4> cells;  // indexed S1..S4
    double p_s4_s2 = 1.0;
    double p_s4_s1 = 1.0;
    double p_s3_s1 = 1.0;
    double p_s2_s1 = 1.0;
    std::string velocity_ordering;  // e.g. "S4 > S2 > S3 = S1"
};

// Requires all four cells with at least two runs each.
ScenarioReport scenario_report(const std::vector<RunResult>& rows);

// Fixed-width plain text rendering of the report.
std::string render_report(const ScenarioReport& report);

// Fallback summary for row sets that are not a four-cell experiment.
std::string render_sweep_summary(const std::vector<RunResult>& rows);

}  // namespace scrumsim
