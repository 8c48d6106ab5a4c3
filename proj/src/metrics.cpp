#include "scrumsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace scrumsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* kClassKeys[3] = {"senior", "mid", "junior"};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::vector<std::string> schema_columns() {
    std::vector<std::string> cols = {
        "run_id", "seed", "sociable", "curious", "solved", "ticks", "velocity",
    };
    for (const char* cls : kClassKeys) cols.push_back(std::string("solved_") + cls);
    for (const char* cls : kClassKeys) cols.push_back(std::string("gain_abs_") + cls);
    for (const char* cls : kClassKeys) cols.push_back(std::string("gain_rel_") + cls);
    for (const char* lead : kClassKeys) {
        for (const char* member : kClassKeys) {
            cols.push_back(std::string("attach_") + lead + "_" + member);
        }
    }
    const char* echo[] = {
        "steps", "n_stories", "n_developers", "pso",
        "mean_difficulty", "stdev_difficulty", "mean_competence", "stdev_competence",
        "mean_soc_or_sd", "stdev_soc_or_sd", "mean_enquiry", "stdev_enquiry",
        "increase_comp_rate", "decrease_comp_rate", "tolerance", "proximity",
        "avoid_edges", "looking_for_stories", "world_half_extent", "band_k",
        "exponent_cap", "contribution_cap",
    };
    for (const char* key : echo) cols.emplace_back(key);
    return cols;
}

}  // namespace

double velocity(int solved, int ticks_elapsed) {
    if (ticks_elapsed < 1) throw std::invalid_argument("velocity: ticks_elapsed must be >= 1");
    return static_cast<double>(solved) / static_cast<double>(ticks_elapsed);
}

double aggregate_median(std::vector<double> values) {
    if (values.empty()) throw MetricsError("aggregate_median: empty input");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string argmax_class_label(const std::array<double, 3>& by_class) {
    int best = -1;
    for (int k = 0; k < 3; ++k) {
        if (std::isnan(by_class[k])) continue;
        if (best < 0 || by_class[k] > by_class[best]) best = k;
    }
    if (best < 0) return "n/a";
    bool tied = false;
    for (int k = 0; k < 3; ++k) {
        if (k != best && !std::isnan(by_class[k]) && by_class[k] == by_class[best]) tied = true;
    }
    std::string label = seniority_name(static_cast<Seniority>(best));
    if (tied) label += " (tied)";
    return label;
}

ClassSummary per_class_stats(const std::vector<DeveloperState>& developers) {
    ClassSummary out;
    std::array<std::vector<double>, 3> abs_gains;
    std::array<std::vector<double>, 3> rel_gains;
    for (const DeveloperState& dev : developers) {
        const int k = static_cast<int>(dev.seniority);
        out.solved[k] += dev.stories_completed;
        const double gain = dev.c - dev.c_initial;
        abs_gains[k].push_back(gain);
        if (dev.c_initial > 0.0) rel_gains[k].push_back(gain / dev.c_initial);
    }
    std::array<double, 3> solved_as_double{};
    for (int k = 0; k < 3; ++k) {
        out.gain_abs[k] = abs_gains[k].empty() ? kNaN : aggregate_median(std::move(abs_gains[k]));
        out.gain_rel[k] = rel_gains[k].empty() ? kNaN : aggregate_median(std::move(rel_gains[k]));
        solved_as_double[k] = static_cast<double>(out.solved[k]);
    }
    out.top_solved = argmax_class_label(solved_as_double);
    out.top_gain = argmax_class_label(out.gain_abs);
    return out;
}

std::string results_csv_header() {
    const std::vector<std::string> cols = schema_columns();
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i > 0) out += ',';
        out += cols[i];
    }
    return out;
}

std::string result_csv_row(const RunResult& row) {
    std::vector<std::string> cells;
    cells.push_back(std::to_string(row.run_id));
    cells.push_back(std::to_string(row.seed));
    cells.push_back(format_bool(row.sociable));
    cells.push_back(format_bool(row.curious));
    cells.push_back(std::to_string(row.solved));
    cells.push_back(std::to_string(row.ticks));
    cells.push_back(format_double(row.velocity));
    for (int k = 0; k < 3; ++k) cells.push_back(std::to_string(row.solved_by_class[k]));
    for (int k = 0; k < 3; ++k) cells.push_back(format_double(row.gain_abs[k]));
    for (int k = 0; k < 3; ++k) cells.push_back(format_double(row.gain_rel[k]));
    for (int lead = 0; lead < 3; ++lead) {
        for (int member = 0; member < 3; ++member) {
            cells.push_back(std::to_string(row.attachments[lead][member]));
        }
    }
    const WorldConfig& c = row.config;
    cells.push_back(std::to_string(c.steps));
    cells.push_back(std::to_string(c.n_stories));
    cells.push_back(std::to_string(c.n_developers));
    cells.push_back(format_double(c.pso));
    cells.push_back(format_double(c.mean_difficulty));
    cells.push_back(format_double(c.stdev_difficulty));
    cells.push_back(format_double(c.mean_competence));
    cells.push_back(format_double(c.stdev_competence));
    cells.push_back(format_double(c.mean_soc_or_sd));
    cells.push_back(format_double(c.stdev_soc_or_sd));
    cells.push_back(format_double(c.mean_enquiry));
    cells.push_back(format_double(c.stdev_enquiry));
    cells.push_back(format_double(c.increase_comp_rate));
    cells.push_back(format_double(c.decrease_comp_rate));
    cells.push_back(format_double(c.tolerance));
    cells.push_back(format_double(c.proximity));
    cells.push_back(format_bool(c.avoid_edges));
    cells.push_back(format_bool(c.looking_for_stories));
    cells.push_back(format_double(c.world_half_extent));
    cells.push_back(format_double(c.band_k));
    cells.push_back(format_double(c.exponent_cap));
    cells.push_back(format_double(c.contribution_cap));

    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += cells[i];
    }
    return out;
}

std::string write_results_csv(const std::vector<RunResult>& rows) {
    std::string out = results_csv_header();
    out += '\n';
    for (const RunResult& row : rows) {
        out += result_csv_row(row);
        out += '\n';
    }
    return out;
}

std::vector<RunResult> parse_results_csv(const std::string& text) {
    if (trim(text).empty()) throw MetricsError("no rows");
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line)) throw MetricsError("no rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != results_csv_header()) throw MetricsError("unexpected CSV header");

    const std::size_t expected = schema_columns().size();
    std::vector<RunResult> rows;
    int line_no = 1;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != expected) {
            throw MetricsError("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(expected) + " cells, got " + std::to_string(cells.size()));
        }
        try {
            RunResult row;
            std::size_t i = 0;
            row.run_id = parse_u64_strict(cells[i++]);
            row.seed = parse_u64_strict(cells[i++]);
            row.sociable = parse_bool_strict(cells[i++]);
            row.curious = parse_bool_strict(cells[i++]);
            row.solved = static_cast<int>(parse_int_strict(cells[i++]));
            row.ticks = static_cast<int>(parse_int_strict(cells[i++]));
            row.velocity = parse_double_strict(cells[i++]);
            for (int k = 0; k < 3; ++k) row.solved_by_class[k] = static_cast<int>(parse_int_strict(cells[i++]));
            for (int k = 0; k < 3; ++k) row.gain_abs[k] = parse_double_strict(cells[i++]);
            for (int k = 0; k < 3; ++k) row.gain_rel[k] = parse_double_strict(cells[i++]);
            for (int lead = 0; lead < 3; ++lead) {
                for (int member = 0; member < 3; ++member) {
                    row.attachments[lead][member] = parse_int_strict(cells[i++]);
                }
            }
            WorldConfig& c = row.config;
            c.seed = row.seed;
            c.sociable = row.sociable;
            c.curious = row.curious;
            c.steps = static_cast<int>(parse_int_strict(cells[i++]));
            c.n_stories = static_cast<int>(parse_int_strict(cells[i++]));
            c.n_developers = static_cast<int>(parse_int_strict(cells[i++]));
            c.pso = parse_double_strict(cells[i++]);
            c.mean_difficulty = parse_double_strict(cells[i++]);
            c.stdev_difficulty = parse_double_strict(cells[i++]);
            c.mean_competence = parse_double_strict(cells[i++]);
            c.stdev_competence = parse_double_strict(cells[i++]);
            c.mean_soc_or_sd = parse_double_strict(cells[i++]);
            c.stdev_soc_or_sd = parse_double_strict(cells[i++]);
            c.mean_enquiry = parse_double_strict(cells[i++]);
            c.stdev_enquiry = parse_double_strict(cells[i++]);
            c.increase_comp_rate = parse_double_strict(cells[i++]);
            c.decrease_comp_rate = parse_double_strict(cells[i++]);
            c.tolerance = parse_double_strict(cells[i++]);
            c.proximity = parse_double_strict(cells[i++]);
            c.avoid_edges = parse_bool_strict(cells[i++]);
            c.looking_for_stories = parse_bool_strict(cells[i++]);
            c.world_half_extent = parse_double_strict(cells[i++]);
            c.band_k = parse_double_strict(cells[i++]);
            c.exponent_cap = parse_double_strict(cells[i++]);
            c.contribution_cap = parse_double_strict(cells[i++]);
            rows.push_back(row);
        } catch (const ConfigError& err) {
            throw MetricsError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    return rows;
}

}  // namespace scrumsim
