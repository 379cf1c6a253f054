#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace biphase::runner {

/// Comma-separated output with a header row; numbers in scientific notation
/// with 16 significant digits.
class CsvWriter {
public:
    /// Throws std::runtime_error when the file cannot be opened.
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns);

    void row(std::span<const double> values);
    /// Row whose first cell is text (summary rows).
    void row(const std::string& label, std::span<const double> values);

private:
    void write_number(double v);

    std::ofstream out_;
    std::size_t columns_;
};

std::string format_number(double v);

/// Short, stable rendering of eps for file names: 0.1 -> "0.1".
std::string eps_tag(double eps);

}  // namespace biphase::runner
