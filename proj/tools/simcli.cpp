#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "scrumsim/metrics.hpp"
#include "scrumsim/sweep.hpp"
#include "scrumsim/world.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        scrumsim::write_text_file(out_path, text);
    }
}

// A plain sweep need not cover the four scenario cells; fall back to the
// generic summary when it does not.
std::string best_report(const std::vector<scrumsim::RunResult>& rows) {
    try {
        return render_report(scrumsim::scenario_report(rows));
    } catch (const scrumsim::ReportError&) {
        return scrumsim::render_sweep_summary(rows);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"agile team competence simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string design_path;
    std::string csv_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int workers = 1;
    int reps = 30;

    CLI::App* run_cmd = app.add_subcommand("run", "execute one simulation and print its metrics row");
    run_cmd->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);
    CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "override the config seed");
    run_cmd->add_option("--out", out_path, "write the row to this file instead of stdout");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "expand a design file and run every cell");
    sweep_cmd->add_option("--design", design_path, "sweep design file")->required()->check(CLI::ExistingFile);
    sweep_cmd->add_option("--workers", workers, "parallel workers")
        ->envname("SIM_WORKERS")
        ->check(CLI::Range(1, 1 << 20));
    sweep_cmd->add_option("--out", out_path, "CSV output path (default sweep_results.csv)");

    CLI::App* scenarios_cmd =
        app.add_subcommand("scenarios", "run the four-cell sociable x curious experiment");
    scenarios_cmd->add_option("--config", config_path, "base config file; its seed is the master seed")
        ->required()
        ->check(CLI::ExistingFile);
    scenarios_cmd->add_option("--reps", reps, "repetitions per cell")->check(CLI::Range(1, 1 << 20));
    scenarios_cmd->add_option("--workers", workers, "parallel workers")
        ->envname("SIM_WORKERS")
        ->check(CLI::Range(1, 1 << 20));
    scenarios_cmd->add_option("--out", out_path, "CSV output path (default scenario_results.csv)");

    CLI::App* report_cmd = app.add_subcommand("report", "re-render the scenario report from a results CSV");
    report_cmd->add_option("csv", csv_path, "results CSV written by sweep or scenarios")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (run_cmd->parsed()) {
            scrumsim::WorldConfig config = scrumsim::load_config_file(config_path);
            if (seed_opt->count() > 0) config.seed = seed;
            const scrumsim::RunResult row = scrumsim::run(config);
            emit(scrumsim::results_csv_header() + "\n" + scrumsim::result_csv_row(row) + "\n", out_path);
        } else if (sweep_cmd->parsed()) {
            const scrumsim::SweepDesign design = scrumsim::load_design_file(design_path);
            const std::vector<scrumsim::RunResult> rows = scrumsim::execute_sweep(design, workers);
            if (out_path.empty()) out_path = "sweep_results.csv";
            scrumsim::write_text_file(out_path, scrumsim::write_results_csv(rows));
            std::cout << best_report(rows);
        } else if (scenarios_cmd->parsed()) {
            const scrumsim::WorldConfig base = scrumsim::load_config_file(config_path);
            const scrumsim::SweepDesign design = scrumsim::scenario_design(base, reps);
            const std::vector<scrumsim::RunResult> rows = scrumsim::execute_sweep(design, workers);
            if (out_path.empty()) out_path = "scenario_results.csv";
            scrumsim::write_text_file(out_path, scrumsim::write_results_csv(rows));
            std::cout << render_report(scrumsim::scenario_report(rows));
        } else if (report_cmd->parsed()) {
            const std::vector<scrumsim::RunResult> rows =
                scrumsim::parse_results_csv(scrumsim::read_text_file(csv_path));
            if (rows.empty()) {
                std::cerr << "no rows\n";
                return 1;
            }
            std::cout << render_report(scrumsim::scenario_report(rows));
        }
    } catch (const std::exception& err) {
        std::cerr << err.what() << "\n";
        return 1;
    }
    return 0;
}
