#include "scrumsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "scrumsim/ranksum.hpp"
#include "scrumsim/rng.hpp"
#include "scrumsim/world.hpp"

namespace scrumsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double median_skip_nan(std::vector<double> values) {
    values.erase(std::remove_if(values.begin(), values.end(),
                                [](double v) { return std::isnan(v); }),
                 values.end());
    if (values.empty()) return kNaN;
    return aggregate_median(std::move(values));
}

// S1 (F,F), S2 (T,F), S3 (F,T), S4 (T,T)
int cell_index(bool sociable, bool curious) { return (curious ? 2 : 0) + (sociable ? 1 : 0); }

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string pad(std::string text, std::size_t width) {
    while (text.size() < width) text += ' ';
    return text;
}

std::vector<std::string> parse_value_list(const std::string& raw) {
    const std::string stripped = trim(raw);
    if (stripped.size() < 2 || stripped.front() != '[' || stripped.back() != ']') {
        throw DesignError("expected a [v1, v2, ...] list, got '" + raw + "'");
    }
    std::vector<std::string> values;
    std::string item;
    std::istringstream stream(stripped.substr(1, stripped.size() - 2));
    while (std::getline(stream, item, ',')) {
        const std::string value = trim(item);
        if (value.empty()) throw DesignError("empty value in list '" + raw + "'");
        values.push_back(value);
    }
    if (values.empty()) throw DesignError("empty value list '" + raw + "'");
    return values;
}

}  // namespace

SweepDesign parse_design_text(const std::string& text) {
    SweepDesign design;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw DesignError("line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                              stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            if (key == "repetitions") {
                design.repetitions = static_cast<int>(parse_int_strict(value));
            } else if (key == "master_seed") {
                design.master_seed = parse_u64_strict(value);
            } else if (key.rfind("vary.", 0) == 0) {
                const std::string field = trim(key.substr(5));
                if (!is_config_key(field)) {
                    throw DesignError("unknown design field: '" + field + "'");
                }
                design.variations.emplace_back(field, parse_value_list(value));
            } else {
                set_config_field(design.base, key, value);
            }
        } catch (const DesignError& err) {
            throw DesignError("line " + std::to_string(line_no) + ": " + err.what());
        } catch (const ConfigError& err) {
            throw DesignError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    if (design.repetitions < 1) throw DesignError("repetitions must be >= 1");
    return design;
}

SweepDesign load_design_file(const std::string& path) {
    try {
        return parse_design_text(read_text_file(path));
    } catch (const DesignError& err) {
        throw DesignError(path + ": " + err.what());
    } catch (const ConfigError& err) {
        throw DesignError(path + ": " + err.what());
    }
}

SweepDesign scenario_design(const WorldConfig& base, int repetitions) {
    if (repetitions < 1) throw DesignError("repetitions must be >= 1");
    SweepDesign design;
    design.base = base;
    design.repetitions = repetitions;
    design.master_seed = base.seed;
    design.variations.emplace_back("curious", std::vector<std::string>{"false", "true"});
    design.variations.emplace_back("sociable", std::vector<std::string>{"false", "true"});
    return design;
}

std::vector<RunSpec> expand_design(const SweepDesign& design) {
    if (design.repetitions < 1) throw DesignError("repetitions must be >= 1");

    std::size_t cells = 1;
    for (const auto& [field, values] : design.variations) {
        if (!is_config_key(field)) throw DesignError("unknown design field: '" + field + "'");
        if (values.empty()) throw DesignError("empty value list for field '" + field + "'");
        cells *= values.size();
    }

    // stride[f]: how many cells each step of field f spans (leftmost slowest)
    std::vector<std::size_t> strides(design.variations.size(), 1);
    for (std::size_t f = design.variations.size(); f-- > 1;) {
        strides[f - 1] = strides[f] * design.variations[f].second.size();
    }

    std::vector<RunSpec> specs;
    specs.reserve(cells * static_cast<std::size_t>(design.repetitions));
    for (std::size_t cell = 0; cell < cells; ++cell) {
        WorldConfig cell_config = design.base;
        for (std::size_t f = 0; f < design.variations.size(); ++f) {
            const auto& [field, values] = design.variations[f];
            const std::size_t pick = (cell / strides[f]) % values.size();
            try {
                set_config_field(cell_config, field, values[pick]);
            } catch (const ConfigError& err) {
                throw DesignError("vary." + field + ": " + err.what());
            }
        }
        for (int rep = 0; rep < design.repetitions; ++rep) {
            RunSpec spec;
            spec.run_id = cell * static_cast<std::size_t>(design.repetitions) +
                          static_cast<std::size_t>(rep);
            spec.config = cell_config;
            spec.config.seed = mix_seed(design.master_seed, spec.run_id);
            try {
                validate_config(spec.config);
            } catch (const ConfigError& err) {
                throw ConfigError("run " + std::to_string(spec.run_id) + ": " + err.what());
            }
            specs.push_back(std::move(spec));
        }
    }
    return specs;
}

std::vector<RunResult> execute_sweep(const SweepDesign& design, int worker_count) {
    if (worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    const std::vector<RunSpec> specs = expand_design(design);
    std::vector<RunResult> results(specs.size());

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= specs.size()) return;
            try {
                results[i] = run(specs[i].config);
                results[i].run_id = specs[i].run_id;
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (worker_count == 1 || specs.size() <= 1) {
        work();
    } else {
        const std::size_t pool_size =
            std::min(static_cast<std::size_t>(worker_count), specs.size());
        std::vector<std::thread> pool;
        pool.reserve(pool_size);
        for (std::size_t t = 0; t < pool_size; ++t) pool.emplace_back(work);
        for (std::thread& worker : pool) worker.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

ScenarioReport scenario_report(const std::vector<RunResult>& rows) {
    std::array<std::vector<const RunResult*>, 4> cells;
    for (const RunResult& row : rows) {
        cells[static_cast<std::size_t>(cell_index(row.sociable, row.curious))].push_back(&row);
    }
    for (int i = 0; i < 4; ++i) {
        const std::string name = "S" + std::to_string(i + 1);
        if (cells[static_cast<std::size_t>(i)].empty()) {
            throw ReportError("scenario cell " + name + " missing");
        }
        if (cells[static_cast<std::size_t>(i)].size() < 2) {
            throw ReportError("scenario cell " + name + " needs at least 2 runs");
        }
    }

    ScenarioReport report;
    std::array<std::vector<double>, 4> velocities;
    for (int i = 0; i < 4; ++i) {
        const auto& bucket = cells[static_cast<std::size_t>(i)];
        CellStats& cell = report.cells[static_cast<std::size_t>(i)];
        cell.sociable = (i == 1 || i == 3);
        cell.curious = (i == 2 || i == 3);
        cell.runs = static_cast<int>(bucket.size());

        std::vector<double> solved, ticks;
        std::array<std::vector<double>, 3> class_solved, abs_gain, rel_gain;
        for (const RunResult* row : bucket) {
            velocities[static_cast<std::size_t>(i)].push_back(row->velocity);
            solved.push_back(static_cast<double>(row->solved));
            ticks.push_back(static_cast<double>(row->ticks));
            for (int k = 0; k < 3; ++k) {
                class_solved[k].push_back(static_cast<double>(row->solved_by_class[k]));
                abs_gain[k].push_back(row->gain_abs[k]);
                rel_gain[k].push_back(row->gain_rel[k]);
            }
        }
        cell.velocity_median = aggregate_median(velocities[static_cast<std::size_t>(i)]);
        cell.solved_median = aggregate_median(std::move(solved));
        cell.ticks_median = aggregate_median(std::move(ticks));
        for (int k = 0; k < 3; ++k) {
            cell.solved_class_median[k] = aggregate_median(std::move(class_solved[k]));
            cell.gain_abs_median[k] = median_skip_nan(std::move(abs_gain[k]));
            cell.gain_rel_median[k] = median_skip_nan(std::move(rel_gain[k]));
        }
        cell.top_gain = argmax_class_label(cell.gain_abs_median);
    }

    report.p_s4_s2 = mann_whitney_p(velocities[3], velocities[1]);
    report.p_s4_s1 = mann_whitney_p(velocities[3], velocities[0]);
    report.p_s3_s1 = mann_whitney_p(velocities[2], velocities[0]);
    report.p_s2_s1 = mann_whitney_p(velocities[1], velocities[0]);

    std::array<int, 4> order = {0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return report.cells[static_cast<std::size_t>(a)].velocity_median >
               report.cells[static_cast<std::size_t>(b)].velocity_median;
    });
    std::string ordering;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0) {
            const double prev = report.cells[static_cast<std::size_t>(order[i - 1])].velocity_median;
            const double curr = report.cells[static_cast<std::size_t>(order[i])].velocity_median;
            ordering += (prev == curr) ? " = " : " > ";
        }
        ordering += "S" + std::to_string(order[i] + 1);
    }
    report.velocity_ordering = ordering;
    return report;
}

std::string render_report(const ScenarioReport& report) {
    std::string out;
    out += pad("scenario", 10) + pad("sociable", 10) + pad("curious", 9) + pad("runs", 6) +
           pad("velocity", 10) + pad("solved", 8) + pad("ticks", 7) + "top_gain\n";
    for (int i = 0; i < 4; ++i) {
        const CellStats& cell = report.cells[static_cast<std::size_t>(i)];
        out += pad("S" + std::to_string(i + 1), 10);
        out += pad(format_bool(cell.sociable), 10);
        out += pad(format_bool(cell.curious), 9);
        out += pad(std::to_string(cell.runs), 6);
        out += pad(format_fixed(cell.velocity_median, 3), 10);
        out += pad(format_fixed(cell.solved_median, 1), 8);
        out += pad(format_fixed(cell.ticks_median, 1), 7);
        out += cell.top_gain;
        out += '\n';
    }
    out += '\n';
    out += pad("scenario", 10) + pad("solved_senior", 15) + pad("solved_mid", 12) +
           "solved_junior\n";
    for (int i = 0; i < 4; ++i) {
        const CellStats& cell = report.cells[static_cast<std::size_t>(i)];
        out += pad("S" + std::to_string(i + 1), 10);
        out += pad(format_fixed(cell.solved_class_median[0], 1), 15);
        out += pad(format_fixed(cell.solved_class_median[1], 1), 12);
        out += format_fixed(cell.solved_class_median[2], 1);
        out += '\n';
    }
    out += '\n';
    out += pad("scenario", 10) + pad("gain_senior", 13) + pad("gain_mid", 11) + "gain_junior\n";
    for (int i = 0; i < 4; ++i) {
        const CellStats& cell = report.cells[static_cast<std::size_t>(i)];
        out += pad("S" + std::to_string(i + 1), 10);
        out += pad(format_fixed(cell.gain_abs_median[0], 3), 13);
        out += pad(format_fixed(cell.gain_abs_median[1], 3), 11);
        out += format_fixed(cell.gain_abs_median[2], 3);
        out += '\n';
    }
    out += '\n';
    out += "velocity rank-sum (two-sided):\n";
    char line[64];
    std::snprintf(line, sizeof line, "  S4 vs S2  p = %.6g\n", report.p_s4_s2);
    out += line;
    std::snprintf(line, sizeof line, "  S4 vs S1  p = %.6g\n", report.p_s4_s1);
    out += line;
    std::snprintf(line, sizeof line, "  S3 vs S1  p = %.6g\n", report.p_s3_s1);
    out += line;
    std::snprintf(line, sizeof line, "  S2 vs S1  p = %.6g\n", report.p_s2_s1);
    out += line;
    out += '\n';
    out += "velocity ordering: " + report.velocity_ordering + "\n";
    return out;
}

std::string render_sweep_summary(const std::vector<RunResult>& rows) {
    std::string out;
    out += "runs: " + std::to_string(rows.size()) + "\n";
    if (rows.empty()) return out;
    out += "median velocity: " +
           format_fixed(aggregate_median(rows, [](const RunResult& r) { return r.velocity; }), 3) +
           "\n";
    out += "median solved: " +
           format_fixed(aggregate_median(rows, [](const RunResult& r) { return static_cast<double>(r.solved); }), 1) +
           "\n";
    out += "median ticks: " +
           format_fixed(aggregate_median(rows, [](const RunResult& r) { return static_cast<double>(r.ticks); }), 1) +
           "\n";
    return out;
}

}  // namespace scrumsim
