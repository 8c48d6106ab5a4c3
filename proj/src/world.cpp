#include "scrumsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scrumsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_degrees(double heading) {
    heading = std::fmod(heading, 360.0);
    if (heading < 0.0) heading += 360.0;
    return heading;
}

double wrap_coordinate(double value, double half_extent) {
    const double span = 2.0 * half_extent;
    double wrapped = std::fmod(value + half_extent, span);
    if (wrapped < 0.0) wrapped += span;
    return wrapped - half_extent;
}

double squared_distance(double ax, double ay, double bx, double by) {
    const double dx = ax - bx;
    const double dy = ay - by;
    return dx * dx + dy * dy;
}

}  // namespace

World::World(const WorldConfig& config_in) : config(config_in), rng(config_in.seed) {
    validate_config(config);
    sample_population(rng, config, developers, stories, stats);
    total_spawned = static_cast<int>(stories.size());
}

int World::open_count() const {
    int n = 0;
    for (const StoryState& s : stories) {
        if (!s.done) ++n;
    }
    return n;
}

int World::done_count() const { return static_cast<int>(stories.size()) - open_count(); }

bool World::terminated() const { return tick >= config.steps || open_count() == 0; }

void World::move_unattached() {
    const double half = config.world_half_extent;
    for (DeveloperState& dev : developers) {
        if (dev.team >= 0) continue;
        double heading = wrap_degrees(dev.heading + rng.uniform(-45.0, 45.0));
        const double radians = heading * kPi / 180.0;
        double nx = dev.x + std::cos(radians);
        double ny = dev.y + std::sin(radians);
        if (config.avoid_edges) {
            // One reflection per axis suffices: the step is 1 unit.
            if (nx > half) {
                nx = 2.0 * half - nx;
                heading = wrap_degrees(180.0 - heading);
            } else if (nx < -half) {
                nx = -2.0 * half - nx;
                heading = wrap_degrees(180.0 - heading);
            }
            if (ny > half) {
                ny = 2.0 * half - ny;
                heading = wrap_degrees(-heading);
            } else if (ny < -half) {
                ny = -2.0 * half - ny;
                heading = wrap_degrees(-heading);
            }
        } else {
            nx = wrap_coordinate(nx, half);
            ny = wrap_coordinate(ny, half);
        }
        dev.x = nx;
        dev.y = ny;
        dev.heading = heading;
    }
}

void World::claim_and_recruit() {
    if (!config.looking_for_stories) return;
    const double reach2 = config.proximity * config.proximity;

    std::vector<int> free_ids;
    for (const DeveloperState& dev : developers) {
        if (dev.team < 0) free_ids.push_back(dev.id);
    }
    rng.shuffle(free_ids);

    for (int id : free_ids) {
        DeveloperState& dev = developers[static_cast<std::size_t>(id)];
        int best = -1;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (const StoryState& s : stories) {
            if (s.done || s.lead >= 0) continue;
            const double d2 = squared_distance(dev.x, dev.y, s.x, s.y);
            if (d2 <= reach2 && d2 < best_d2) {
                best = s.id;
                best_d2 = d2;
            }
        }
        if (best >= 0) {
            stories[static_cast<std::size_t>(best)].lead = id;
            dev.team = best;
        }
    }

    for (int id : free_ids) {
        DeveloperState& dev = developers[static_cast<std::size_t>(id)];
        if (dev.team >= 0) continue;
        int best = -1;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (const StoryState& s : stories) {
            if (s.done || s.lead < 0) continue;
            const double d2 = squared_distance(dev.x, dev.y, s.x, s.y);
            if (d2 <= reach2 && d2 < best_d2) {
                best = s.id;
                best_d2 = d2;
            }
        }
        if (best >= 0) {
            StoryState& story = stories[static_cast<std::size_t>(best)];
            story.members.push_back(id);
            dev.team = best;
            const int lead_class = static_cast<int>(developers[static_cast<std::size_t>(story.lead)].seniority);
            attachments[lead_class][static_cast<int>(dev.seniority)] += 1;
        }
    }
}

void World::attempt_all() {
    solved_this_tick = 0;
    attempts_this_tick = 0;

    std::vector<int> order;
    for (const StoryState& s : stories) {
        if (!s.done && s.lead >= 0) order.push_back(s.id);
    }
    rng.shuffle(order);

    for (int sid : order) {
        StoryState& story = stories[static_cast<std::size_t>(sid)];
        DeveloperState& lead = developers[static_cast<std::size_t>(story.lead)];
        ++attempts_this_tick;

        CombinationMode mode = CombinationMode::Solo;
        bool solved = attempt(lead.c, story.d);
        if (!solved) {
            mode = select_mode(config.sociable, config.curious, lead.sosd_band, lead.high_enquiry);
            double combined = lead.c;
            if (mode != CombinationMode::Solo) {
                std::vector<Contributor> team;
                team.reserve(story.members.size());
                for (int mid : story.members) {
                    const DeveloperState& m = developers[static_cast<std::size_t>(mid)];
                    team.push_back({m.sosd, m.c});
                }
                member_competence_reads += static_cast<long long>(team.size());
                if (mode == CombinationMode::NonLinear) {
                    // The lead's setup-time traits drive the exponent and the
                    // additive term, so the channel survives early failures.
                    combined = combine_nonlinear(lead.c_initial, lead.sosd_initial, team,
                                                 config.exponent_cap, config.contribution_cap);
                } else {
                    combined = combine_linear(lead.c, team);
                }
            }
            solved = attempt(combined, story.d);
        }

        auto reward_or_decay = [&](DeveloperState& dev) {
            if (solved) {
                dev.c = update_on_success(dev.c, config.increase_comp_rate);
                dev.sosd = update_attitude(dev.sosd, true, config.increase_comp_rate);
            } else {
                dev.c = update_on_failure(dev.c, config.decrease_comp_rate);
                dev.sosd = update_attitude(dev.sosd, false, config.decrease_comp_rate);
            }
        };
        reward_or_decay(lead);
        for (int mid : story.members) reward_or_decay(developers[static_cast<std::size_t>(mid)]);

        if (solved) {
            story.done = true;
            story.solved_at_tick = tick;
            ++solved_this_tick;
            ++lead.stories_completed;
        }
        const bool holds_together = !solved && mode == CombinationMode::NonLinear && !story.members.empty();
        if (!holds_together) {
            lead.team = -1;
            for (int mid : story.members) developers[static_cast<std::size_t>(mid)].team = -1;
            story.lead = -1;
            story.members.clear();
        }
    }
}

void World::spawn_stories() {
    if (config.pso <= 0.0) return;
    const int count = static_cast<int>(std::floor(config.pso));
    const double half = config.world_half_extent;
    for (int i = 0; i < count; ++i) {
        StoryState story;
        story.id = static_cast<int>(stories.size());
        story.x = rng.uniform(-half, half);
        story.y = rng.uniform(-half, half);
        story.d = truncated_normal(rng, config.mean_difficulty, config.stdev_difficulty);
        stories.push_back(story);
        ++total_spawned;
    }
}

TickSnapshot World::capture_snapshot() const {
    TickSnapshot snap;
    snap.tick = tick + 1;
    snap.stories_open = open_count();
    snap.stories_done = done_count();
    snap.solved_this_tick = solved_this_tick;
    snap.attempts_this_tick = attempts_this_tick;
    std::array<double, 3> c_sum{};
    std::array<int, 3> c_count{};
    for (const DeveloperState& dev : developers) {
        const int k = static_cast<int>(dev.seniority);
        snap.solved_by_class[k] += dev.stories_completed;
        c_sum[k] += dev.c;
        c_count[k] += 1;
    }
    for (int k = 0; k < 3; ++k) {
        snap.mean_c_by_class[k] = c_count[k] > 0
            ? c_sum[k] / static_cast<double>(c_count[k])
            : std::numeric_limits<double>::quiet_NaN();
    }
    return snap;
}

void World::step() {
    if (terminated()) throw std::logic_error("step: world already terminated");
    move_unattached();
    claim_and_recruit();
    attempt_all();
    spawn_stories();
    event_log.push_back(capture_snapshot());
    ++tick;
}

RunResult run(const WorldConfig& config) {
    World world(config);
    while (!world.terminated()) world.step();

    RunResult row;
    row.seed = config.seed;
    row.sociable = config.sociable;
    row.curious = config.curious;
    row.solved = world.done_count();
    row.ticks = std::max(world.tick, 1);
    row.velocity = velocity(row.solved, row.ticks);
    const ClassSummary classes = per_class_stats(world.developers);
    row.solved_by_class = classes.solved;
    row.gain_abs = classes.gain_abs;
    row.gain_rel = classes.gain_rel;
    row.attachments = world.attachments;
    row.config = config;
    return row;
}

}  // namespace scrumsim
