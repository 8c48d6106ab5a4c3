#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace scrumsim {

// Derives an independent per-run seed from a master seed and a run index
// (splitmix64 finalizer over a golden-ratio stride). Frozen by golden tests:
// changing this remaps every derived seed in every sweep.
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t run_id);

// Random draws layered over mt19937_64. The standard pins the raw engine
// bit-for-bit but not the <random> distributions, so everything that turns
// engine words into doubles or indices lives here, keeping streams identical
// across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller; always consumes exactly two uniforms
    double normal();

    double normal(double mean, double stdev) { return mean + stdev * normal(); }

    // uniform integer in [0, n), n >= 1; one engine word per call
    std::uint64_t below(std::uint64_t n);

    // Fisher-Yates using below()
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace scrumsim
