#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scrumsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full parameter set for one simulation run. Field names follow the
// canonical (underscore) config-file keys.
struct WorldConfig {
    int steps = 10;
    int n_stories = 100;
    int n_developers = 50;
    double pso = 0.0;                 // new stories per tick (floored); 0 disables spawning
    double mean_difficulty = 5.0;
    double stdev_difficulty = 5.2;
    double mean_competence = 5.0;
    double stdev_competence = 9.7;
    double mean_soc_or_sd = 0.2;
    double stdev_soc_or_sd = 5.03;
    double mean_enquiry = 0.0;
    double stdev_enquiry = 5.1;
    double increase_comp_rate = 0.13;
    double decrease_comp_rate = 0.64;
    double tolerance = 5.5;           // reserved knob: parsed and echoed, not read by the engine
    double proximity = 19.0;
    bool sociable = false;
    bool curious = false;
    bool avoid_edges = true;          // true: reflect at the walls; false: wrap around
    bool looking_for_stories = true;  // false disables the claim/recruit phase entirely
    double world_half_extent = 16.5;
    double band_k = 0.75;             // trait-band half-width in standard deviations
    double exponent_cap = 8.0;
    double contribution_cap = 1e9;
    std::uint64_t seed = 1;
};

// Throws ConfigError when a field is out of range or non-finite.
void validate_config(const WorldConfig& config);

// True when key (after '-' -> '_' normalization) names a WorldConfig field.
bool is_config_key(const std::string& key);

// Assigns one field by config key; '-' and '_' are interchangeable in keys.
// Throws ConfigError for unknown keys or unparsable values.
void set_config_field(WorldConfig& config, const std::string& key, const std::string& value);

// key = value lines; '#' starts a comment; unknown keys are errors.
// The parsed config is validated before it is returned.
WorldConfig parse_config_text(const std::string& text);
WorldConfig load_config_file(const std::string& path);

// Every field, canonical underscore keys, declaration order, shortest
// round-trip number formatting.
std::string write_config_text(const WorldConfig& config);

std::string read_text_file(const std::string& path);   // throws ConfigError
void write_text_file(const std::string& path, const std::string& text);

// Shortest decimal form that parses back to the identical value; "nan" for NaN.
std::string format_double(double value);
std::string format_bool(bool value);

// Strict parsers: the whole token must be consumed. Throw ConfigError.
double parse_double_strict(const std::string& text);
long long parse_int_strict(const std::string& text);
std::uint64_t parse_u64_strict(const std::string& text);
bool parse_bool_strict(const std::string& text);

std::string trim(const std::string& text);

}  // namespace scrumsim
