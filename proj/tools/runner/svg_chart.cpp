#include "runner/svg_chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace biphase::runner {

namespace {

constexpr double width = 800.0;
constexpr double height = 600.0;
constexpr double left = 90.0;
constexpr double right = 30.0;
constexpr double top = 50.0;
constexpr double bottom = 70.0;

constexpr std::array<const char*, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Axis {
    bool log = false;
    double lo = 0.0;
    double hi = 1.0;

    double map(double v) const { return log ? std::log10(v) : v; }
    double unit(double v) const { return (map(v) - lo) / (hi - lo); }
    bool shows(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
};

Axis fit_axis(bool log, const std::vector<Series>& series, bool use_x) {
    Axis a{log, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& s : series) {
        const auto& v = use_x ? s.x : s.y;
        for (double x : v) {
            if (a.shows(x)) {
                a.lo = std::min(a.lo, a.map(x));
                a.hi = std::max(a.hi, a.map(x));
            }
        }
    }
    if (!std::isfinite(a.lo)) {
        a.lo = 0.0;
        a.hi = 1.0;
    }
    if (a.hi - a.lo < 1e-12) {
        a.lo -= 0.5;
        a.hi += 0.5;
    } else if (!log) {
        const double pad = 0.05 * (a.hi - a.lo);
        a.lo -= pad;
        a.hi += pad;
    }
    return a;
}

std::string tick_label(const Axis& a, double t) {
    std::ostringstream os;
    if (a.log) {
        os << "1e" << static_cast<int>(std::lround(t));
    } else {
        os << std::setprecision(3) << t;
    }
    return os.str();
}

std::vector<double> ticks(const Axis& a) {
    std::vector<double> t;
    if (a.log) {
        for (double e = std::ceil(a.lo); e <= a.hi + 1e-9; e += 1.0) t.push_back(e);
        return t;
    }
    for (int i = 0; i <= 5; ++i) t.push_back(a.lo + (a.hi - a.lo) * i / 5.0);
    return t;
}

}  // namespace

std::string LineChart::render() const {
    const Axis ax = fit_axis(log_x, series, true);
    const Axis ay = fit_axis(log_y, series, false);
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    const auto px = [&](double v) { return left + ax.unit(v) * pw; };
    const auto py = [&](double v) { return top + (1.0 - ay.unit(v)) * ph; };

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
          "height=\"600\" font-family=\"sans-serif\" font-size=\"13\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
       << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
       << "</text>\n"
       << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : ticks(ax)) {
        const double x = left + (t - ax.lo) / (ax.hi - ax.lo) * pw;
        os << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\""
           << top + ph + 6 << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << x << "\" y=\"" << top + ph + 22 << "\" text-anchor=\"middle\">"
           << escape(tick_label(ax, t)) << "</text>\n";
    }
    for (double t : ticks(ay)) {
        const double y = top + (1.0 - (t - ay.lo) / (ay.hi - ay.lo)) * ph;
        os << "<line x1=\"" << left - 6 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\""
           << y << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << left - 10 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
           << escape(tick_label(ay, t)) << "</text>\n";
    }
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 20
       << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
       << "<text x=\"22\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 22 "
       << top + ph / 2 << ")\">" << escape(y_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = palette[k % palette.size()];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\""
           << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (ax.shows(s.x[i]) && ay.shows(s.y[i])) {
                os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
            }
        }
        os << "\"/>\n";
        const double ly = top + 18.0 + 18.0 * static_cast<double>(k);
        os << "<line x1=\"" << left + pw - 190 << "\" y1=\"" << ly << "\" x2=\"" << left + pw - 160
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\""
           << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n"
           << "<text x=\"" << left + pw - 152 << "\" y=\"" << ly + 4 << "\">" << escape(s.label)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void LineChart::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << render();
}

Series decimated(std::string label, const std::vector<double>& x, const std::vector<double>& y,
                 std::size_t max_points) {
    Series s{std::move(label), {}, {}, false};
    const std::size_t n = std::min(x.size(), y.size());
    const std::size_t stride = std::max<std::size_t>(1, (n + max_points - 1) / max_points);
    for (std::size_t i = 0; i < n; i += stride) {
        s.x.push_back(x[i]);
        s.y.push_back(y[i]);
    }
    if (n > 0 && (n - 1) % stride != 0) {
        s.x.push_back(x[n - 1]);
        s.y.push_back(y[n - 1]);
    }
    return s;
}

}  // namespace biphase::runner
