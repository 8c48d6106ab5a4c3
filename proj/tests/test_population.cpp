#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "scrumsim/population.hpp"

using namespace scrumsim;

namespace {

void sample(const WorldConfig& config, std::uint64_t seed,
            std::vector<DeveloperState>& devs, std::vector<StoryState>& stories,
            PopulationStats& stats) {
    Rng rng(seed);
    sample_population(rng, config, devs, stories, stats);
}

}  // namespace

TEST_CASE("sampling is a pure function of config and seed") {
    WorldConfig config;
    std::vector<DeveloperState> devs1, devs2;
    std::vector<StoryState> stories1, stories2;
    PopulationStats stats1, stats2;
    sample(config, 42, devs1, stories1, stats1);
    sample(config, 42, devs2, stories2, stats2);

    REQUIRE(devs1.size() == 50);
    REQUIRE(stories1.size() == 100);
    for (std::size_t i = 0; i < devs1.size(); ++i) {
        CHECK(devs1[i].x == devs2[i].x);
        CHECK(devs1[i].y == devs2[i].y);
        CHECK(devs1[i].heading == devs2[i].heading);
        CHECK(devs1[i].c == devs2[i].c);
        CHECK(devs1[i].sosd == devs2[i].sosd);
        CHECK(devs1[i].e == devs2[i].e);
        CHECK(devs1[i].seniority == devs2[i].seniority);
        CHECK(devs1[i].sosd_band == devs2[i].sosd_band);
        CHECK(devs1[i].high_enquiry == devs2[i].high_enquiry);
    }
    for (std::size_t i = 0; i < stories1.size(); ++i) {
        CHECK(stories1[i].x == stories2[i].x);
        CHECK(stories1[i].d == stories2[i].d);
    }
    CHECK(stats1.mean_c == stats2.mean_c);
    CHECK(stats1.stdev_sosd == stats2.stdev_sosd);
}

TEST_CASE("positions, headings, and truncated draws respect their ranges") {
    WorldConfig config;
    config.n_developers = 200;
    config.n_stories = 200;
    std::vector<DeveloperState> devs;
    std::vector<StoryState> stories;
    PopulationStats stats;
    sample(config, 7, devs, stories, stats);

    const double half = config.world_half_extent;
    for (const DeveloperState& dev : devs) {
        CHECK(dev.x >= -half);
        CHECK(dev.x < half);
        CHECK(dev.y >= -half);
        CHECK(dev.y < half);
        CHECK(dev.heading >= 0.0);
        CHECK(dev.heading < 360.0);
        CHECK(dev.c >= 0.0);
        CHECK(dev.c_initial == dev.c);
        CHECK(dev.sosd_initial == dev.sosd);
        CHECK(dev.team == -1);
        CHECK(dev.stories_completed == 0);
    }
    for (const StoryState& story : stories) {
        CHECK(story.d >= 0.0);
        CHECK_FALSE(story.done);
        CHECK(story.lead == -1);
        CHECK(story.members.empty());
    }
}

TEST_CASE("truncation clamps to zero when resampling keeps failing") {
    Rng rng(3);
    // With this mean every draw is negative, so the 100-attempt budget runs out.
    const double v = truncated_normal(rng, -1e9, 1.0);
    CHECK(v == 0.0);
}

TEST_CASE("truncated draws are nonnegative across seeds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        for (int i = 0; i < 100; ++i) {
            CHECK(truncated_normal(rng, 5.0, 9.7) >= 0.0);
        }
    }
}

TEST_CASE("mean_and_stdev matches hand-computed values") {
    double mean = 0.0, stdev = 0.0;
    mean_and_stdev({2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}, mean, stdev);
    CHECK(mean == doctest::Approx(5.0));
    CHECK(stdev == doctest::Approx(std::sqrt(32.0 / 7.0)));

    mean_and_stdev({3.5}, mean, stdev);
    CHECK(mean == 3.5);
    CHECK(stdev == 0.0);

    mean_and_stdev({}, mean, stdev);
    CHECK(mean == 0.0);
    CHECK(stdev == 0.0);
}

TEST_CASE("band boundaries are exclusive") {
    // mean 0, stdev 2, k 0.75 -> band edges at exactly +/- 1.5
    CHECK(classify_sociability(1.5, 0.0, 2.0, 0.75) == SosdBand::MidBand);
    CHECK(classify_sociability(1.5000001, 0.0, 2.0, 0.75) == SosdBand::HighBand);
    CHECK(classify_sociability(-1.5, 0.0, 2.0, 0.75) == SosdBand::MidBand);
    CHECK(classify_sociability(-1.5000001, 0.0, 2.0, 0.75) == SosdBand::LowBand);
    CHECK(classify_sociability(0.0, 0.0, 2.0, 0.75) == SosdBand::MidBand);

    CHECK(classify_seniority(6.5, 5.0, 2.0, 0.75) == Seniority::Mid);
    CHECK(classify_seniority(6.6, 5.0, 2.0, 0.75) == Seniority::Senior);
    CHECK(classify_seniority(3.5, 5.0, 2.0, 0.75) == Seniority::Mid);
    CHECK(classify_seniority(3.4, 5.0, 2.0, 0.75) == Seniority::Junior);
}

TEST_CASE("high enquiry is strictly above the mean") {
    CHECK_FALSE(is_high_enquiry(1.0, 1.0));
    CHECK(is_high_enquiry(1.0000001, 1.0));
    CHECK_FALSE(is_high_enquiry(0.9, 1.0));
}

TEST_CASE("class labels agree with the realized statistics") {
    WorldConfig config;
    std::vector<DeveloperState> devs;
    std::vector<StoryState> stories;
    PopulationStats stats;
    sample(config, 99, devs, stories, stats);

    for (const DeveloperState& dev : devs) {
        CHECK(dev.seniority == classify_seniority(dev.c, stats.mean_c, stats.stdev_c, config.band_k));
        CHECK(dev.sosd_band ==
              classify_sociability(dev.sosd, stats.mean_sosd, stats.stdev_sosd, config.band_k));
        CHECK(dev.high_enquiry == is_high_enquiry(dev.e, stats.mean_e));
    }
}

TEST_CASE("stats are the realized sample statistics") {
    WorldConfig config;
    config.n_developers = 10;
    config.n_stories = 0;
    std::vector<DeveloperState> devs;
    std::vector<StoryState> stories;
    PopulationStats stats;
    sample(config, 11, devs, stories, stats);

    std::vector<double> cs;
    for (const DeveloperState& dev : devs) cs.push_back(dev.c);
    double mean = 0.0, stdev = 0.0;
    mean_and_stdev(cs, mean, stdev);
    CHECK(stats.mean_c == mean);
    CHECK(stats.stdev_c == stdev);
}

TEST_CASE("single developer gets zero-stdev stats and lands mid-band") {
    WorldConfig config;
    config.n_developers = 1;
    config.n_stories = 0;
    std::vector<DeveloperState> devs;
    std::vector<StoryState> stories;
    PopulationStats stats;
    sample(config, 5, devs, stories, stats);
    REQUIRE(devs.size() == 1);
    CHECK(stats.stdev_c == 0.0);
    // value == mean and the bands are exclusive, so the middle band holds
    CHECK(devs[0].seniority == Seniority::Mid);
    CHECK(devs[0].sosd_band == SosdBand::MidBand);
    CHECK_FALSE(devs[0].high_enquiry);
}

TEST_CASE("invalid configs are rejected before sampling") {
    WorldConfig config;
    config.n_developers = 0;
    std::vector<DeveloperState> devs;
    std::vector<StoryState> stories;
    PopulationStats stats;
    Rng rng(1);
    CHECK_THROWS_AS(sample_population(rng, config, devs, stories, stats), ConfigError);
}

TEST_CASE("seniority names") {
    CHECK(std::string(seniority_name(Seniority::Senior)) == "Senior");
    CHECK(std::string(seniority_name(Seniority::Mid)) == "Mid");
    CHECK(std::string(seniority_name(Seniority::Junior)) == "Junior");
}
