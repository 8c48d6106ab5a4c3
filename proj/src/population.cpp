#include "scrumsim/population.hpp"

#include <cmath>

namespace scrumsim {

const char* seniority_name(Seniority seniority) {
    switch (seniority) {
        case Seniority::Senior: return "Senior";
        case Seniority::Mid: return "Mid";
        case Seniority::Junior: return "Junior";
    }
    return "?";
}

double truncated_normal(Rng& rng, double mean, double stdev) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        double value = rng.normal(mean, stdev);
        if (value >= 0.0) return value;
    }
    return 0.0;
}

void mean_and_stdev(const std::vector<double>& values, double& mean, double& stdev) {
    const std::size_t n = values.size();
    if (n == 0) {
        mean = 0.0;
        stdev = 0.0;
        return;
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    mean = sum / static_cast<double>(n);
    if (n < 2) {
        stdev = 0.0;
        return;
    }
    double squares = 0.0;
    for (double v : values) squares += (v - mean) * (v - mean);
    stdev = std::sqrt(squares / static_cast<double>(n - 1));
}

SosdBand classify_sociability(double sosd, double mean, double stdev, double band_k) {
    if (sosd > mean + band_k * stdev) return SosdBand::HighBand;
    if (sosd < mean - band_k * stdev) return SosdBand::LowBand;
    return SosdBand::MidBand;
}

Seniority classify_seniority(double c, double mean, double stdev, double band_k) {
    if (c > mean + band_k * stdev) return Seniority::Senior;
    if (c < mean - band_k * stdev) return Seniority::Junior;
    return Seniority::Mid;
}

bool is_high_enquiry(double e, double mean_e) { return e > mean_e; }

void sample_population(Rng& rng, const WorldConfig& config,
                       std::vector<DeveloperState>& developers,
                       std::vector<StoryState>& stories,
                       PopulationStats& stats) {
    validate_config(config);

    const double half = config.world_half_extent;
    stories.clear();
    stories.reserve(static_cast<std::size_t>(config.n_stories));
    for (int i = 0; i < config.n_stories; ++i) {
        StoryState story;
        story.id = i;
        story.x = rng.uniform(-half, half);
        story.y = rng.uniform(-half, half);
        story.d = truncated_normal(rng, config.mean_difficulty, config.stdev_difficulty);
        stories.push_back(story);
    }

    developers.clear();
    developers.reserve(static_cast<std::size_t>(config.n_developers));
    for (int i = 0; i < config.n_developers; ++i) {
        DeveloperState dev;
        dev.id = i;
        dev.x = rng.uniform(-half, half);
        dev.y = rng.uniform(-half, half);
        dev.heading = rng.uniform(0.0, 360.0);
        dev.c = truncated_normal(rng, config.mean_competence, config.stdev_competence);
        dev.sosd = rng.normal(config.mean_soc_or_sd, config.stdev_soc_or_sd);
        dev.e = rng.normal(config.mean_enquiry, config.stdev_enquiry);
        dev.c_initial = dev.c;
        dev.sosd_initial = dev.sosd;
        developers.push_back(dev);
    }

    std::vector<double> cs, sosds, es;
    cs.reserve(developers.size());
    sosds.reserve(developers.size());
    es.reserve(developers.size());
    for (const DeveloperState& dev : developers) {
        cs.push_back(dev.c);
        sosds.push_back(dev.sosd);
        es.push_back(dev.e);
    }
    mean_and_stdev(cs, stats.mean_c, stats.stdev_c);
    mean_and_stdev(sosds, stats.mean_sosd, stats.stdev_sosd);
    mean_and_stdev(es, stats.mean_e, stats.stdev_e);

    for (DeveloperState& dev : developers) {
        dev.seniority = classify_seniority(dev.c, stats.mean_c, stats.stdev_c, config.band_k);
        dev.sosd_band = classify_sociability(dev.sosd, stats.mean_sosd, stats.stdev_sosd, config.band_k);
        dev.high_enquiry = is_high_enquiry(dev.e, stats.mean_e);
    }
}

}  // namespace scrumsim
