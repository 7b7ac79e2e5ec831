#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fringelab/csv.hpp"

namespace fringelab {

// Minimal self-contained line chart. Convenience rendering of the CSV
// tables; the CSV stays the authoritative output.
inline void write_svg_chart(const std::filesystem::path& path, std::span<const double> x,
                            std::span<const double> y, const std::string& x_label,
                            const std::string& y_label, int width = 800, int height = 480) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("write_svg_chart: need two equal-length series");

    const double margin = 56.0;
    const double plot_w = width - 2.0 * margin;
    const double plot_h = height - 2.0 * margin;

    const auto [x_lo_it, x_hi_it] = std::minmax_element(x.begin(), x.end());
    const auto [y_lo_it, y_hi_it] = std::minmax_element(y.begin(), y.end());
    double x_lo = *x_lo_it, x_hi = *x_hi_it, y_lo = *y_lo_it, y_hi = *y_hi_it;
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;

    const auto px = [&](double v) { return margin + (v - x_lo) / (x_hi - x_lo) * plot_w; };
    const auto py = [&](double v) { return height - margin - (v - y_lo) / (y_hi - y_lo) * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";

    out << "<polyline fill=\"none\" stroke=\"#1a6fb4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << px(x[i]) << ',' << py(y[i]) << (i + 1 < x.size() ? " " : "");
    out << "\"/>\n";

    const auto tick_label = [&](double v) { return format_double(v); };
    out << "<text x=\"" << margin << "\" y=\"" << (height - margin + 18)
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << tick_label(x_lo) << "</text>\n";
    out << "<text x=\"" << (width - margin) << "\" y=\"" << (height - margin + 18)
        << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"end\">"
        << tick_label(x_hi) << "</text>\n";
    out << "<text x=\"" << (margin - 6) << "\" y=\"" << (height - margin)
        << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"end\">"
        << tick_label(y_lo) << "</text>\n";
    out << "<text x=\"" << (margin - 6) << "\" y=\"" << (margin + 4)
        << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"end\">"
        << tick_label(y_hi) << "</text>\n";
    out << "<text x=\"" << (margin + plot_w / 2) << "\" y=\"" << (height - 12)
        << "\" font-size=\"13\" font-family=\"sans-serif\" text-anchor=\"middle\">" << x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (margin + plot_h / 2)
        << "\" font-size=\"13\" font-family=\"sans-serif\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 "
        << (margin + plot_h / 2) << ")\">" << y_label << "</text>\n";
    out << "</svg>\n";
    write_text_file(path, out.str());
}

}  // namespace fringelab
