#include "scrumsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace scrumsim {

namespace {

std::string normalize_key(std::string key) {
    for (char& ch : key) {
        if (ch == '-') ch = '_';
    }
    return key;
}

std::string lowercase(std::string text) {
    for (char& ch : text) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return text;
}

struct FieldDef {
    const char* key;
    void (*set)(WorldConfig&, const std::string&);
    std::string (*get)(const WorldConfig&);
};

const FieldDef kFields[] = {
    {"steps",
     [](WorldConfig& c, const std::string& v) { c.steps = static_cast<int>(parse_int_strict(v)); },
     [](const WorldConfig& c) { return std::to_string(c.steps); }},
    {"n_stories",
     [](WorldConfig& c, const std::string& v) { c.n_stories = static_cast<int>(parse_int_strict(v)); },
     [](const WorldConfig& c) { return std::to_string(c.n_stories); }},
    {"n_developers",
     [](WorldConfig& c, const std::string& v) { c.n_developers = static_cast<int>(parse_int_strict(v)); },
     [](const WorldConfig& c) { return std::to_string(c.n_developers); }},
    {"pso",
     [](WorldConfig& c, const std::string& v) { c.pso = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.pso); }},
    {"mean_difficulty",
     [](WorldConfig& c, const std::string& v) { c.mean_difficulty = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.mean_difficulty); }},
    {"stdev_difficulty",
     [](WorldConfig& c, const std::string& v) { c.stdev_difficulty = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.stdev_difficulty); }},
    {"mean_competence",
     [](WorldConfig& c, const std::string& v) { c.mean_competence = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.mean_competence); }},
    {"stdev_competence",
     [](WorldConfig& c, const std::string& v) { c.stdev_competence = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.stdev_competence); }},
    {"mean_soc_or_sd",
     [](WorldConfig& c, const std::string& v) { c.mean_soc_or_sd = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.mean_soc_or_sd); }},
    {"stdev_soc_or_sd",
     [](WorldConfig& c, const std::string& v) { c.stdev_soc_or_sd = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.stdev_soc_or_sd); }},
    {"mean_enquiry",
     [](WorldConfig& c, const std::string& v) { c.mean_enquiry = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.mean_enquiry); }},
    {"stdev_enquiry",
     [](WorldConfig& c, const std::string& v) { c.stdev_enquiry = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.stdev_enquiry); }},
    {"increase_comp_rate",
     [](WorldConfig& c, const std::string& v) { c.increase_comp_rate = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.increase_comp_rate); }},
    {"decrease_comp_rate",
     [](WorldConfig& c, const std::string& v) { c.decrease_comp_rate = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.decrease_comp_rate); }},
    {"tolerance",
     [](WorldConfig& c, const std::string& v) { c.tolerance = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.tolerance); }},
    {"proximity",
     [](WorldConfig& c, const std::string& v) { c.proximity = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.proximity); }},
    {"sociable",
     [](WorldConfig& c, const std::string& v) { c.sociable = parse_bool_strict(v); },
     [](const WorldConfig& c) { return format_bool(c.sociable); }},
    {"curious",
     [](WorldConfig& c, const std::string& v) { c.curious = parse_bool_strict(v); },
     [](const WorldConfig& c) { return format_bool(c.curious); }},
    {"avoid_edges",
     [](WorldConfig& c, const std::string& v) { c.avoid_edges = parse_bool_strict(v); },
     [](const WorldConfig& c) { return format_bool(c.avoid_edges); }},
    {"looking_for_stories",
     [](WorldConfig& c, const std::string& v) { c.looking_for_stories = parse_bool_strict(v); },
     [](const WorldConfig& c) { return format_bool(c.looking_for_stories); }},
    {"world_half_extent",
     [](WorldConfig& c, const std::string& v) { c.world_half_extent = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.world_half_extent); }},
    {"band_k",
     [](WorldConfig& c, const std::string& v) { c.band_k = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.band_k); }},
    {"exponent_cap",
     [](WorldConfig& c, const std::string& v) { c.exponent_cap = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.exponent_cap); }},
    {"contribution_cap",
     [](WorldConfig& c, const std::string& v) { c.contribution_cap = parse_double_strict(v); },
     [](const WorldConfig& c) { return format_double(c.contribution_cap); }},
    {"seed",
     [](WorldConfig& c, const std::string& v) { c.seed = parse_u64_strict(v); },
     [](const WorldConfig& c) { return std::to_string(c.seed); }},
};

const FieldDef* find_field(const std::string& key) {
    const std::string norm = normalize_key(key);
    for (const FieldDef& field : kFields) {
        if (norm == field.key) return &field;
    }
    return nullptr;
}

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw ConfigError(std::string(name) + " must be finite");
    }
}

void require_range(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

std::string trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_bool(bool value) { return value ? "true" : "false"; }

double parse_double_strict(const std::string& text) {
    const std::string token = trim(text);
    if (token.empty()) throw ConfigError("empty value where a number was expected");
    try {
        std::size_t pos = 0;
        double value = std::stod(token, &pos);
        if (pos != token.size()) throw ConfigError("trailing characters in number: '" + token + "'");
        return value;
    } catch (const std::invalid_argument&) {
        throw ConfigError("not a number: '" + token + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("number out of range: '" + token + "'");
    }
}

long long parse_int_strict(const std::string& text) {
    const std::string token = trim(text);
    if (token.empty()) throw ConfigError("empty value where an integer was expected");
    try {
        std::size_t pos = 0;
        long long value = std::stoll(token, &pos);
        if (pos != token.size()) throw ConfigError("trailing characters in integer: '" + token + "'");
        return value;
    } catch (const std::invalid_argument&) {
        throw ConfigError("not an integer: '" + token + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("integer out of range: '" + token + "'");
    }
}

std::uint64_t parse_u64_strict(const std::string& text) {
    const std::string token = trim(text);
    if (token.empty()) throw ConfigError("empty value where an unsigned integer was expected");
    if (token[0] == '-') throw ConfigError("negative value where an unsigned integer was expected: '" + token + "'");
    try {
        std::size_t pos = 0;
        unsigned long long value = std::stoull(token, &pos);
        if (pos != token.size()) throw ConfigError("trailing characters in integer: '" + token + "'");
        return static_cast<std::uint64_t>(value);
    } catch (const std::invalid_argument&) {
        throw ConfigError("not an integer: '" + token + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("integer out of range: '" + token + "'");
    }
}

bool parse_bool_strict(const std::string& text) {
    const std::string token = lowercase(trim(text));
    if (token == "true" || token == "1") return true;
    if (token == "false" || token == "0") return false;
    throw ConfigError("not a boolean: '" + trim(text) + "'");
}

void validate_config(const WorldConfig& c) {
    require_finite(c.pso, "pso");
    require_finite(c.mean_difficulty, "mean_difficulty");
    require_finite(c.stdev_difficulty, "stdev_difficulty");
    require_finite(c.mean_competence, "mean_competence");
    require_finite(c.stdev_competence, "stdev_competence");
    require_finite(c.mean_soc_or_sd, "mean_soc_or_sd");
    require_finite(c.stdev_soc_or_sd, "stdev_soc_or_sd");
    require_finite(c.mean_enquiry, "mean_enquiry");
    require_finite(c.stdev_enquiry, "stdev_enquiry");
    require_finite(c.increase_comp_rate, "increase_comp_rate");
    require_finite(c.decrease_comp_rate, "decrease_comp_rate");
    require_finite(c.tolerance, "tolerance");
    require_finite(c.proximity, "proximity");
    require_finite(c.world_half_extent, "world_half_extent");
    require_finite(c.band_k, "band_k");
    require_finite(c.exponent_cap, "exponent_cap");
    require_finite(c.contribution_cap, "contribution_cap");

    require_range(c.steps >= 1, "steps must be >= 1 (got " + std::to_string(c.steps) + ")");
    require_range(c.n_stories >= 0, "n_stories must be >= 0 (got " + std::to_string(c.n_stories) + ")");
    require_range(c.n_developers >= 1, "n_developers must be >= 1 (got " + std::to_string(c.n_developers) + ")");
    require_range(c.pso >= 0.0, "pso must be >= 0");
    require_range(c.stdev_difficulty >= 0.0, "stdev_difficulty must be >= 0");
    require_range(c.stdev_competence >= 0.0, "stdev_competence must be >= 0");
    require_range(c.stdev_soc_or_sd >= 0.0, "stdev_soc_or_sd must be >= 0");
    require_range(c.stdev_enquiry >= 0.0, "stdev_enquiry must be >= 0");
    require_range(c.increase_comp_rate >= 0.0 && c.increase_comp_rate <= 1.0,
                  "increase_comp_rate must be in [0, 1]");
    require_range(c.decrease_comp_rate >= 0.0 && c.decrease_comp_rate <= 1.0,
                  "decrease_comp_rate must be in [0, 1]");
    require_range(c.proximity >= 0.0, "proximity must be >= 0");
    require_range(c.world_half_extent > 0.0, "world_half_extent must be > 0");
    require_range(c.band_k >= 0.0, "band_k must be >= 0");
    require_range(c.exponent_cap >= 0.0, "exponent_cap must be >= 0");
    require_range(c.contribution_cap >= 0.0, "contribution_cap must be >= 0");
}

bool is_config_key(const std::string& key) { return find_field(key) != nullptr; }

void set_config_field(WorldConfig& config, const std::string& key, const std::string& value) {
    const FieldDef* field = find_field(key);
    if (field == nullptr) throw ConfigError("unknown config key: '" + key + "'");
    field->set(config, value);
}

WorldConfig parse_config_text(const std::string& text) {
    WorldConfig config;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            set_config_field(config, key, value);
        } catch (const ConfigError& err) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    validate_config(config);
    return config;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << text;
    if (!out) throw ConfigError("write failed: " + path);
}

WorldConfig load_config_file(const std::string& path) {
    try {
        return parse_config_text(read_text_file(path));
    } catch (const ConfigError& err) {
        throw ConfigError(path + ": " + err.what());
    }
}

std::string write_config_text(const WorldConfig& config) {
    std::string out;
    for (const FieldDef& field : kFields) {
        out += field.key;
        out += " = ";
        out += field.get(config);
        out += '\n';
    }
    return out;
}

}  // namespace scrumsim
