#include "scrumsim/rng.hpp"

#include <cmath>

namespace scrumsim {

std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t run_id) {
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ull * (run_id + 1);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // log(0) guard
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
}

}  // namespace scrumsim
