#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biphase/analysis.hpp"
#include "biphase/errors.hpp"
#include "biphase/parameters.hpp"

namespace biphase::runner {

/// Configuration error tied to a key and to where the value came from.
class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& key, const std::string& where, const std::string& what)
        : ValidationError(key + " (" + where + "): " + what), key_(key) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Everything an experiment needs. Defaults are the reference setup:
/// alpha=1, beta=1.5, pi_t=0.5, pi_c=1, dr=1e-4.
struct RunConfig {
    std::string experiment = "profiles";
    double alpha = 1.0;
    double beta = 1.5;
    double pi_t = 0.5;
    double pi_c = 1.0;
    double e33 = 1.0;
    std::vector<double> eps_list;  ///< empty: experiment default (see eps_values())
    std::size_t grid_n = 10000;
    int order = 1;
    NormWeight norm_weight = NormWeight::none;
    bool cutoff = false;
    double cutoff_d = 0.25;
    double decay_d = 0.3;
    std::filesystem::path output_dir = "out";

    Parameters parameters(double eps) const;
    std::optional<Cutoff> cutoff_function() const;

    /// Explicit eps_list, or {0.1, 0.07, 0.04} for profiles and ten values
    /// geometric from 0.1 to 0.01 for the other experiments.
    std::vector<double> eps_values() const;
};

/// The recognised keys, in file order.
const std::vector<std::string>& config_keys();

using Override = std::pair<std::string, std::string>;

/// Parses `key = value` lines ('#' and ';' start comments) and then applies
/// the overrides in order. Unknown keys, malformed or out-of-range values
/// throw ConfigError naming the key and the line (or "command line").
RunConfig parse_config_text(const std::string& text, const std::vector<Override>& overrides = {});

/// Same, reading the file at `path`; an empty path means no file.
RunConfig parse_config(const std::filesystem::path& path,
                       const std::vector<Override>& overrides = {});

}  // namespace biphase::runner
