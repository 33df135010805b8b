#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace natrob::cli {

/// Unknown key, malformed line or bad value. Reported as a usage error.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Settings shared by the commands. Built from defaults, then a config file,
/// then command-line flags (flags win).
struct Config {
    // lm.*
    std::string lm_backend = "ngram";  // ngram | external
    std::string lm_model;
    std::string lm_bridge;
    int lm_order = 4;
    std::uint64_t lm_min_count = 1;

    // transform.*
    /// Empty means all operators.
    std::vector<std::string> operators;
    std::string unary2add_style = "expanded";  // expanded | compound
    std::string provider = "none";             // none | firstchar | dictionary | external
    std::string dictionary;                    // empty: built-in table
    std::string provider_endpoint;
    std::size_t top_k = 1;

    std::optional<std::string> validate_cmd;

    // score.* / report.*
    std::string score_field = "rnc";  // rnc | ce
    std::optional<double> score_min;
    std::optional<double> score_max;
    std::string report_filter = "auto";  // auto | all | natural | both
    bool include_likely = false;

    unsigned jobs = 1;
    std::uint64_t seed = 0;

    /// Sets one dotted key; throws ConfigError for unknown keys or values.
    void set(const std::string& key, const std::string& value);
};

/// Reads `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Later keys override earlier ones.
void load_config_file(const std::string& path, Config& config);

/// Every key accepted by Config::set, for help output.
const std::vector<std::string>& config_keys();

}  // namespace natrob::cli
