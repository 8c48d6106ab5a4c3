#pragma once

#include <array>
#include <vector>

#include "scrumsim/config.hpp"
#include "scrumsim/kernels.hpp"
#include "scrumsim/metrics.hpp"
#include "scrumsim/population.hpp"
#include "scrumsim/rng.hpp"

namespace scrumsim {

struct TickSnapshot {
    int tick = 0;  // 1-based index of the completed tick
    int stories_open = 0;
    int stories_done = 0;
    int solved_this_tick = 0;
    int attempts_this_tick = 0;
    std::array<int, 3> solved_by_class{};     // cumulative, by lead seniority
    std::array<double, 3> mean_c_by_class{};  // NaN for an empty class
};

// One simulated world. Single-threaded: distinct worlds share nothing and
// may run on different threads, but one world must never be shared.
struct World {
    WorldConfig config;
    Rng rng;
    int tick = 0;
    std::vector<DeveloperState> developers;
    std::vector<StoryState> stories;
    PopulationStats stats;
    int total_spawned = 0;
    std::array<std::array<long long, 3>, 3> attachments{};  // [lead class][member class], counted at recruitment
    // Instrumentation: number of member (sosd, c) pairs handed to a
    // combination kernel. Stays 0 whenever every attempt runs Solo.
    long long member_competence_reads = 0;
    std::vector<TickSnapshot> event_log;
    int solved_this_tick = 0;    // refreshed by attempt_all
    int attempts_this_tick = 0;  // refreshed by attempt_all

    // Validates the config, samples the population, starts at tick 0.
    explicit World(const WorldConfig& config_in);

    bool terminated() const;  // all stories done, or the tick budget is spent
    int open_count() const;
    int done_count() const;

    // Unattached developers turn by a uniform angle in [-45, +45] degrees and
    // advance one unit; attached developers hold position. Walls reflect when
    // avoid_edges is set, otherwise positions wrap.
    void move_unattached();

    // Two passes over the free developers in one rng-shuffled order: first
    // everyone tries to claim the nearest unclaimed open story within
    // proximity (becoming its lead), then everyone still free joins the team
    // of the nearest claimed open story within proximity. Euclidean distance,
    // ties to the lower story id. No-op unless looking_for_stories.
    void claim_and_recruit();

    // Every claimed open story is attempted once, in rng-shuffled order.
    // The lead tries alone first; if that fails, the mode kernel combines the
    // members' contributions. Success rewards every team member's c and sosd
    // and frees the team; failure decays them, and only a nonlinear-mode team
    // that actually has members stays attached for another try.
    void attempt_all();

    // Appends floor(pso) stories at uniform positions with fresh difficulty
    // draws; disabled at pso = 0.
    void spawn_stories();

    // One full tick: move, claim/recruit, attempt, spawn, log, advance.
    // Throws std::logic_error once terminated.
    void step();

    TickSnapshot capture_snapshot() const;
};

// Steps a fresh world to termination and reduces it to its metrics row
// (run_id is left 0; sweep assigns it). ticks is floored at 1 so velocity
// is always defined.
RunResult run(const WorldConfig& config);

}  // namespace scrumsim
