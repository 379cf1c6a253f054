#include "runner/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace biphase::runner {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& where, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
        throw ConfigError(key, where, "expected a finite number, got '" + t + "'");
    }
    return v;
}

long parse_integer(const std::string& key, const std::string& where, const std::string& text) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ConfigError(key, where, "expected an integer, got '" + t + "'");
    }
    return v;
}

double positive(const std::string& key, const std::string& where, const std::string& text) {
    const double v = parse_double(key, where, text);
    if (!(v > 0.0)) {
        throw ConfigError(key, where, "must be positive, got " + trim(text));
    }
    return v;
}

bool parse_switch(const std::string& key, const std::string& where, const std::string& text) {
    const std::string t = trim(text);
    if (t == "on" || t == "true" || t == "1") {
        return true;
    }
    if (t == "off" || t == "false" || t == "0") {
        return false;
    }
    throw ConfigError(key, where, "expected on|off, got '" + t + "'");
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value,
           const std::string& where) {
    if (key == "alpha") {
        cfg.alpha = positive(key, where, value);
    } else if (key == "beta") {
        cfg.beta = positive(key, where, value);
    } else if (key == "pi_t") {
        cfg.pi_t = parse_double(key, where, value);
    } else if (key == "pi_c") {
        cfg.pi_c = parse_double(key, where, value);
    } else if (key == "e33") {
        cfg.e33 = positive(key, where, value);
    } else if (key == "eps_list") {
        std::vector<double> eps;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            eps.push_back(positive(key, where, item));
        }
        if (eps.empty()) {
            throw ConfigError(key, where, "needs at least one value");
        }
        cfg.eps_list = std::move(eps);
    } else if (key == "grid_n") {
        const long n = parse_integer(key, where, value);
        if (n < static_cast<long>(Grid::min_intervals)) {
            throw ConfigError(key, where,
                              "needs at least " + std::to_string(Grid::min_intervals) +
                                  " intervals, got " + trim(value));
        }
        cfg.grid_n = static_cast<std::size_t>(n);
    } else if (key == "order") {
        const long k = parse_integer(key, where, value);
        if (k < 0 || k > 64) {
            throw ConfigError(key, where, "must lie in [0, 64], got " + trim(value));
        }
        cfg.order = static_cast<int>(k);
    } else if (key == "norm_weight") {
        const std::string t = trim(value);
        if (t == "none") {
            cfg.norm_weight = NormWeight::none;
        } else if (t == "r2") {
            cfg.norm_weight = NormWeight::r2;
        } else {
            throw ConfigError(key, where, "expected none|r2, got '" + t + "'");
        }
    } else if (key == "cutoff") {
        cfg.cutoff = parse_switch(key, where, value);
    } else if (key == "cutoff_d") {
        const double d = parse_double(key, where, value);
        if (!(d > 0.0 && d < 0.5)) {
            throw ConfigError(key, where, "must lie in (0, 0.5), got " + trim(value));
        }
        cfg.cutoff_d = d;
    } else if (key == "decay_d") {
        const double d = parse_double(key, where, value);
        if (!(d > 0.0 && d < 1.0)) {
            throw ConfigError(key, where, "must lie in (0, 1), got " + trim(value));
        }
        cfg.decay_d = d;
    } else if (key == "output_dir") {
        const std::string t = trim(value);
        if (t.empty()) {
            throw ConfigError(key, where, "must not be empty");
        }
        cfg.output_dir = t;
    } else {
        throw ConfigError(key, where, "unknown key");
    }
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "alpha", "beta",     "eps_list", "pi_t",     "pi_c",    "e33",       "grid_n",
        "order", "norm_weight", "cutoff", "cutoff_d", "decay_d", "output_dir"};
    return keys;
}

Parameters RunConfig::parameters(double eps) const {
    return make_parameters(alpha, beta, eps, pi_t, pi_c, e33);
}

std::optional<Cutoff> RunConfig::cutoff_function() const {
    if (!cutoff) {
        return std::nullopt;
    }
    return Cutoff{cutoff_d};
}

std::vector<double> RunConfig::eps_values() const {
    if (!eps_list.empty()) {
        return eps_list;
    }
    if (experiment == "profiles") {
        return {0.1, 0.07, 0.04};
    }
    return geometric_sweep(0.1, 0.01, 10);
}

RunConfig parse_config_text(const std::string& text, const std::vector<Override>& overrides) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto comment = line.find_first_of("#;");
        const std::string body = trim(std::string_view(line).substr(0, comment));
        if (body.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(number);
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(body, where, "expected key=value");
        }
        apply(cfg, trim(std::string_view(body).substr(0, eq)), body.substr(eq + 1), where);
    }
    for (const auto& [key, value] : overrides) {
        apply(cfg, key, value, "command line");
    }
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path, const std::vector<Override>& overrides) {
    if (path.empty()) {
        return parse_config_text({}, overrides);
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", path.string(), "cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), overrides);
}

}  // namespace biphase::runner
