#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scrumsim/config.hpp"
#include "scrumsim/population.hpp"

namespace scrumsim {

struct MetricsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One simulation run reduced to its reported metrics. Class-indexed arrays
// use the Seniority enum order: Senior, Mid, Junior.
struct RunResult {
    std::uint64_t run_id = 0;
    std::uint64_t seed = 0;
    bool sociable = false;
    bool curious = false;
    int solved = 0;
    int ticks = 1;  // elapsed ticks, floored at 1
    double velocity = 0.0;
    std::array<int, 3> solved_by_class{};
    std::array<double, 3> gain_abs{};  // per-class median of c_final - c_initial; NaN = empty class
    std::array<double, 3> gain_rel{};  // same, relative to c_initial; NaN = no developer with c_initial > 0
    std::array<std::array<long long, 3>, 3> attachments{};  // [lead class][member class]
    WorldConfig config;
};

// Per-class rollup of a finished run's developer list.
struct ClassSummary {
    std::array<int, 3> solved{};
    std::array<double, 3> gain_abs{};
    std::array<double, 3> gain_rel{};
    std::string top_solved;  // class name, with " (tied)" appended on ties
    std::string top_gain;    // from gain_abs; empty classes excluded
};

// Exact quotient; ticks_elapsed < 1 is a caller bug.
double velocity(int solved, int ticks_elapsed);

// Median with the even-count convention: mean of the two central order
// statistics. Throws MetricsError on empty input.
double aggregate_median(std::vector<double> values);

template <typename Rows, typename Field>
double aggregate_median(const Rows& rows, Field&& field) {
    std::vector<double> values;
    values.reserve(rows.size());
    for (const auto& row : rows) values.push_back(field(row));
    return aggregate_median(std::move(values));
}

// Largest value wins; NaN entries are excluded; ties resolve to the most
// senior class and are labelled " (tied)". All-NaN input yields "n/a".
std::string argmax_class_label(const std::array<double, 3>& by_class);

// Solved counts credit the lead's class via stories_completed; gains compare
// the final competence against the value frozen at setup.
ClassSummary per_class_stats(const std::vector<DeveloperState>& developers);

// CSV with a fixed header and stable column order; doubles are written in
// shortest round-trip form, NaN as "nan". parse rejects any header or row
// that deviates from the schema.
std::string results_csv_header();
std::string result_csv_row(const RunResult& row);
std::string write_results_csv(const std::vector<RunResult>& rows);
std::vector<RunResult> parse_results_csv(const std::string& text);

}  // namespace scrumsim
