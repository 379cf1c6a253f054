#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace biphase::runner {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

/// Static line chart rendered to SVG (800x600 viewBox, no scripting).
/// Points that cannot be shown on a log axis are skipped.
struct LineChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;

    std::string render() const;
    /// Throws std::runtime_error when the file cannot be written.
    void save(const std::filesystem::path& path) const;
};

/// Keeps at most `max_points` evenly strided samples (always the last one).
Series decimated(std::string label, const std::vector<double>& x, const std::vector<double>& y,
                 std::size_t max_points = 1500);

}  // namespace biphase::runner
