#pragma once

#include <vector>

#include "scrumsim/config.hpp"
#include "scrumsim/rng.hpp"

namespace scrumsim {

enum class Seniority { Senior = 0, Mid = 1, Junior = 2 };
enum class SosdBand { HighBand = 0, MidBand = 1, LowBand = 2 };

const char* seniority_name(Seniority seniority);  // "Senior" / "Mid" / "Junior"

struct DeveloperState {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  // degrees in [0, 360)
    double c = 0.0;        // current competence
    double c_initial = 0.0;
    double sosd = 0.0;     // current attitude (sociability-or-solo drift)
    double sosd_initial = 0.0;
    double e = 0.0;        // enquiry level
    int team = -1;         // story id while attached, -1 otherwise
    // Class labels are assigned once at setup from the realized population
    // statistics and never recomputed as c and sosd drift.
    Seniority seniority = Seniority::Mid;
    SosdBand sosd_band = SosdBand::MidBand;
    bool high_enquiry = false;
    int stories_completed = 0;
};

struct StoryState {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double d = 0.0;  // difficulty
    bool done = false;
    int solved_at_tick = -1;
    int lead = -1;             // developer id, -1 while unclaimed
    std::vector<int> members;  // recruited developers, lead excluded
};

struct PopulationStats {
    double mean_c = 0.0;
    double stdev_c = 0.0;
    double mean_sosd = 0.0;
    double stdev_sosd = 0.0;
    double mean_e = 0.0;
    double stdev_e = 0.0;
};

// Normal draw resampled while negative (at most 100 tries), then clamped to 0.
double truncated_normal(Rng& rng, double mean, double stdev);

// Sample mean and sample standard deviation (n - 1); stdev is 0 for n < 2.
void mean_and_stdev(const std::vector<double>& values, double& mean, double& stdev);

// Band boundaries are exclusive: a value at exactly mean +/- band_k * stdev
// falls in the middle band.
SosdBand classify_sociability(double sosd, double mean, double stdev, double band_k);
Seniority classify_seniority(double c, double mean, double stdev, double band_k);
bool is_high_enquiry(double e, double mean_e);  // strictly above the mean

// Draw order per story: x, y, d. Per developer: x, y, heading, c, sosd, e.
// Positions are uniform over the square [-half_extent, +half_extent]^2;
// difficulty and competence are truncated at zero, sosd and enquiry are not.
// Statistics and class labels come from the realized draws.
void sample_population(Rng& rng, const WorldConfig& config,
                       std::vector<DeveloperState>& developers,
                       std::vector<StoryState>& stories,
                       PopulationStats& stats);

}  // namespace scrumsim
