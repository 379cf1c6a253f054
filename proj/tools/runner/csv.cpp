#include "runner/csv.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace biphase::runner {

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns)
    : out_(path), columns_(columns.size()) {
    if (!out_) {
        throw std::runtime_error("cannot write " + path.string());
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out_ << (i ? "," : "") << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::write_number(double v) { out_ << format_number(v); }

void CsvWriter::row(std::span<const double> values) {
    if (values.size() != columns_) {
        throw std::logic_error("CSV row width does not match the header");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out_ << ',';
        }
        write_number(values[i]);
    }
    out_ << '\n';
}

void CsvWriter::row(const std::string& label, std::span<const double> values) {
    if (values.size() + 1 != columns_) {
        throw std::logic_error("CSV row width does not match the header");
    }
    out_ << label;
    for (double v : values) {
        out_ << ',';
        write_number(v);
    }
    out_ << '\n';
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    std::ostringstream os;
    os << std::scientific << std::setprecision(15) << v;
    return os.str();
}

std::string eps_tag(double eps) {
    std::ostringstream os;
    os << std::setprecision(6) << eps;
    return os.str();
}

}  // namespace biphase::runner
