#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "scrumsim/metrics.hpp"
#include "scrumsim/rng.hpp"
#include "scrumsim/world.hpp"

using namespace scrumsim;

namespace {

DeveloperState class_dev(int id, Seniority klass, double c_initial, double c_final, int completed = 0) {
    DeveloperState dev;
    dev.id = id;
    dev.seniority = klass;
    dev.c_initial = c_initial;
    dev.c = c_final;
    dev.stories_completed = completed;
    return dev;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

TEST_CASE("velocity is the exact quotient") {
    CHECK(velocity(98, 4) == 24.5);
    CHECK(velocity(0, 1) == 0.0);
    CHECK(velocity(46, 1) == 46.0);
    CHECK_THROWS_AS(velocity(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(velocity(5, -2), std::invalid_argument);
}

TEST_CASE("aggregate_median uses the even-count mean convention") {
    CHECK(aggregate_median({7.0}) == 7.0);
    CHECK(aggregate_median({1.0, 3.0, 2.0}) == 2.0);
    CHECK(aggregate_median({1.0, 2.0, 3.0, 4.0}) == 2.5);
    CHECK(aggregate_median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK_THROWS_AS(aggregate_median({}), MetricsError);
}

TEST_CASE("aggregate_median is permutation invariant and bounded") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values;
        const int n = 1 + static_cast<int>(rng.below(20));
        for (int i = 0; i < n; ++i) values.push_back(rng.uniform(-100.0, 100.0));
        const double reference = aggregate_median(values);
        double lo = values[0], hi = values[0];
        for (double v : values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(reference >= lo);
        CHECK(reference <= hi);
        for (int k = 0; k < 5; ++k) {
            rng.shuffle(values);
            CHECK(aggregate_median(values) == reference);
        }
    }
}

TEST_CASE("argmax_class_label names the winner") {
    CHECK(argmax_class_label({3.0, 1.0, 2.0}) == "Senior");
    CHECK(argmax_class_label({1.0, 1.0, 5.0}) == "Junior");
    CHECK(argmax_class_label({2.0, 2.0, 1.0}) == "Senior (tied)");
    CHECK(argmax_class_label({1.0, 2.0, 2.0}) == "Mid (tied)");
    CHECK(argmax_class_label({kNaN, 1.0, 2.0}) == "Junior");
    CHECK(argmax_class_label({kNaN, 3.0, kNaN}) == "Mid");
    CHECK(argmax_class_label({kNaN, kNaN, kNaN}) == "n/a");
}

TEST_CASE("per_class_stats credits solves to the lead's class") {
    std::vector<DeveloperState> devs = {
        class_dev(0, Seniority::Senior, 10.0, 12.0, 3),
        class_dev(1, Seniority::Mid, 5.0, 5.0, 0),
        class_dev(2, Seniority::Junior, 2.0, 4.0, 1),
        class_dev(3, Seniority::Junior, 2.0, 1.0, 0),
    };
    const ClassSummary summary = per_class_stats(devs);
    CHECK(summary.solved[0] == 3);
    CHECK(summary.solved[1] == 0);
    CHECK(summary.solved[2] == 1);
    CHECK(summary.top_solved == "Senior");
    CHECK(summary.gain_abs[0] == 2.0);
    CHECK(summary.gain_abs[1] == 0.0);
    CHECK(summary.gain_abs[2] == 0.5);  // median of {+2, -1}
    CHECK(summary.gain_rel[0] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(summary.top_gain == "Senior");
}

TEST_CASE("per_class_stats with no solves ties every class") {
    std::vector<DeveloperState> devs = {
        class_dev(0, Seniority::Senior, 1.0, 1.0),
        class_dev(1, Seniority::Mid, 1.0, 1.0),
        class_dev(2, Seniority::Junior, 1.0, 1.0),
    };
    const ClassSummary summary = per_class_stats(devs);
    CHECK(summary.top_solved == "Senior (tied)");
}

TEST_CASE("an empty class reports NaN and never wins") {
    std::vector<DeveloperState> devs = {
        class_dev(0, Seniority::Mid, 2.0, 3.0, 1),
        class_dev(1, Seniority::Junior, 2.0, 2.5, 0),
    };
    const ClassSummary summary = per_class_stats(devs);
    CHECK(std::isnan(summary.gain_abs[0]));
    CHECK(std::isnan(summary.gain_rel[0]));
    CHECK(summary.top_gain == "Mid");
    CHECK(summary.top_solved == "Mid");
}

TEST_CASE("relative gains skip developers that started at zero") {
    std::vector<DeveloperState> devs = {
        class_dev(0, Seniority::Mid, 0.0, 4.0),
        class_dev(1, Seniority::Mid, 2.0, 3.0),
    };
    const ClassSummary summary = per_class_stats(devs);
    CHECK(summary.gain_rel[1] == 0.5);  // only the 2 -> 3 developer counts

    std::vector<DeveloperState> zeros = {class_dev(0, Seniority::Mid, 0.0, 4.0)};
    CHECK(std::isnan(per_class_stats(zeros).gain_rel[1]));
    CHECK(per_class_stats(zeros).gain_abs[1] == 4.0);
}

TEST_CASE("CSV rows survive a round trip bit for bit") {
    RunResult row;
    row.run_id = 17;
    row.seed = 0xDEADBEEFCAFEBABEull;
    row.sociable = true;
    row.curious = false;
    row.solved = 93;
    row.ticks = 10;
    row.velocity = 9.3;
    row.solved_by_class = {40, 33, 20};
    row.gain_abs = {0.1 + 0.2, -1.5, kNaN};
    row.gain_rel = {0.25, kNaN, -0.125};
    row.attachments[0] = {1, 2, 3};
    row.attachments[1] = {4, 5, 6};
    row.attachments[2] = {7, 8, 9};
    row.config.mean_competence = 5.000000000000001;
    row.config.seed = row.seed;

    const std::string text = write_results_csv({row});
    const std::vector<RunResult> parsed = parse_results_csv(text);
    REQUIRE(parsed.size() == 1);
    const RunResult& back = parsed[0];
    CHECK(back.run_id == row.run_id);
    CHECK(back.seed == row.seed);
    CHECK(back.sociable == row.sociable);
    CHECK(back.curious == row.curious);
    CHECK(back.solved == row.solved);
    CHECK(back.ticks == row.ticks);
    CHECK(back.velocity == row.velocity);
    CHECK(back.solved_by_class == row.solved_by_class);
    CHECK(back.gain_abs[0] == row.gain_abs[0]);
    CHECK(back.gain_abs[1] == row.gain_abs[1]);
    CHECK(std::isnan(back.gain_abs[2]));
    CHECK(back.gain_rel[0] == row.gain_rel[0]);
    CHECK(std::isnan(back.gain_rel[1]));
    CHECK(back.gain_rel[2] == row.gain_rel[2]);
    CHECK(back.attachments == row.attachments);
    CHECK(back.config.mean_competence == row.config.mean_competence);
    CHECK(back.config.seed == row.seed);

    // a second trip changes nothing
    CHECK(write_results_csv(parsed) == text);
}

TEST_CASE("the CSV header is stable") {
    const std::string header = results_csv_header();
    CHECK(header.substr(0, 35) == "run_id,seed,sociable,curious,solved");
    CHECK(header.find("attach_senior_junior") != std::string::npos);
    CHECK(header.find("world_half_extent") != std::string::npos);
    // header plus no rows parses to an empty vector
    CHECK(parse_results_csv(header + "\n").empty());
}

TEST_CASE("malformed CSV is rejected with a line number") {
    CHECK_THROWS_WITH_AS(parse_results_csv(""), "no rows", MetricsError);
    CHECK_THROWS_WITH_AS(parse_results_csv("   \n  \n"), "no rows", MetricsError);
    CHECK_THROWS_AS(parse_results_csv("not,a,header\n1,2,3\n"), MetricsError);

    RunResult row;
    const std::string good = write_results_csv({row});
    const std::string truncated = good.substr(0, good.size() - 10) + "\n";
    CHECK_THROWS_AS(parse_results_csv(truncated), MetricsError);

    std::string bad_cell = good;
    bad_cell.replace(bad_cell.find("\n") + 1, 1, "x");  // clobber run_id
    CHECK_THROWS_AS(parse_results_csv(bad_cell), MetricsError);
}

TEST_CASE("windows line endings parse cleanly") {
    RunResult row;
    row.solved = 7;
    std::string text = write_results_csv({row});
    std::string crlf;
    for (char ch : text) {
        if (ch == '\n') crlf += "\r\n";
        else crlf += ch;
    }
    const std::vector<RunResult> parsed = parse_results_csv(crlf);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].solved == 7);
}

TEST_CASE("a trivial world reduces to the expected row") {
    WorldConfig cfg;
    cfg.n_stories = 1;
    cfg.n_developers = 1;
    cfg.mean_competence = 10.0;
    cfg.stdev_competence = 0.0;
    cfg.mean_difficulty = 3.0;
    cfg.stdev_difficulty = 0.0;
    cfg.proximity = 100.0;
    cfg.seed = 12;
    const RunResult row = run(cfg);
    CHECK(row.solved == 1);
    CHECK(row.ticks == 1);
    CHECK(row.velocity == 1.0);
    CHECK(row.solved_by_class[0] + row.solved_by_class[1] + row.solved_by_class[2] == 1);
}
