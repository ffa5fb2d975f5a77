#include "lhtl/sweep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace lhtl::sweep {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string fmt(const char* spec, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

struct Series {
    double value = 0.0;
    std::vector<std::pair<double, bool>> x; // (coordinate, finite)
    std::vector<double> y;
};

} // namespace

std::string render_svg(const SweepTable& table, const SvgStyle& style) {
    if (table.columns.size() < 7)
        throw std::domain_error("render_svg: unexpected table shape");
    const std::size_t y_col =
        std::find(table.columns.begin(), table.columns.end(), "n_r") -
        table.columns.begin();
    if (y_col >= table.columns.size())
        throw std::domain_error("render_svg: table has no n_r column");
    const std::size_t ok_col = table.columns.size() - 1;
    const bool log_axis = table.meta.scale == AxisScale::Log;

    // Split rows into series by the (consecutive) series-column value.
    std::vector<Series> series;
    for (const auto& row : table.rows) {
        if (series.empty() || series.back().value != row[1]) {
            series.push_back(Series{});
            series.back().value = row[1];
        }
        const bool finite = row[ok_col] != 0.0 && std::isfinite(row[0]) &&
                            std::isfinite(row[y_col]) && (!log_axis || row[0] > 0.0);
        series.back().x.emplace_back(finite && log_axis ? std::log10(row[0]) : row[0],
                                     finite);
        series.back().y.push_back(row[y_col]);
    }
    for (const Series& s : series)
        if (s.x.size() < 2)
            throw std::domain_error("render_svg: every series needs at least 2 rows");

    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool any = false;
    for (const Series& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!s.x[i].second)
                continue;
            if (!any) {
                xmin = xmax = s.x[i].first;
                ymin = ymax = s.y[i];
                any = true;
            } else {
                xmin = std::min(xmin, s.x[i].first);
                xmax = std::max(xmax, s.x[i].first);
                ymin = std::min(ymin, s.y[i]);
                ymax = std::max(ymax, s.y[i]);
            }
        }
    if (!any) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }

    const double px0 = style.margin_left;
    const double px1 = style.width - style.margin_right;
    const double py0 = style.height - style.margin_bottom; // y axis grows upward
    const double py1 = style.margin_top;
    auto map_x = [&](double x) { return px0 + (x - xmin) / (xmax - xmin) * (px1 - px0); };
    auto map_y = [&](double y) { return py0 + (y - ymin) / (ymax - ymin) * (py1 - py0); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
           "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(style.width) +
           "\" height=\"" + std::to_string(style.height) + "\" fill=\"#ffffff\"/>\n";

    // axes
    svg += "<line x1=\"" + fmt("%.2f", px0) + "\" y1=\"" + fmt("%.2f", py0) +
           "\" x2=\"" + fmt("%.2f", px1) + "\" y2=\"" + fmt("%.2f", py0) +
           "\" stroke=\"#000000\"/>\n";
    svg += "<line x1=\"" + fmt("%.2f", px0) + "\" y1=\"" + fmt("%.2f", py0) +
           "\" x2=\"" + fmt("%.2f", px0) + "\" y2=\"" + fmt("%.2f", py1) +
           "\" stroke=\"#000000\"/>\n";

    const std::string x_label =
        table.columns[0] + (log_axis ? std::string(" (log10)") : std::string());
    svg += "<text x=\"" + fmt("%.2f", (px0 + px1) / 2) + "\" y=\"" +
           fmt("%.2f", py0 + 36.0) + "\" text-anchor=\"middle\" font-size=\"14\">" +
           x_label + "</text>\n";
    svg += "<text x=\"" + fmt("%.2f", px0 - 56.0) + "\" y=\"" +
           fmt("%.2f", (py0 + py1) / 2) + "\" text-anchor=\"middle\" font-size=\"14\" " +
           "transform=\"rotate(-90 " + fmt("%.2f", px0 - 56.0) + " " +
           fmt("%.2f", (py0 + py1) / 2) + ")\">n_r</text>\n";

    // min/max tick labels
    svg += "<text x=\"" + fmt("%.2f", px0) + "\" y=\"" + fmt("%.2f", py0 + 16.0) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + fmt("%.6g", xmin) + "</text>\n";
    svg += "<text x=\"" + fmt("%.2f", px1) + "\" y=\"" + fmt("%.2f", py0 + 16.0) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + fmt("%.6g", xmax) + "</text>\n";
    svg += "<text x=\"" + fmt("%.2f", px0 - 6.0) + "\" y=\"" + fmt("%.2f", py0 + 4.0) +
           "\" text-anchor=\"end\" font-size=\"11\">" + fmt("%.6g", ymin) + "</text>\n";
    svg += "<text x=\"" + fmt("%.2f", px0 - 6.0) + "\" y=\"" + fmt("%.2f", py1 + 4.0) +
           "\" text-anchor=\"end\" font-size=\"11\">" + fmt("%.6g", ymax) + "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        const char* color = kPalette[si % kPaletteSize];

        // legend entry
        svg += "<text x=\"" + fmt("%.2f", px1 - 4.0) + "\" y=\"" +
               fmt("%.2f", py1 + 16.0 * (si + 1)) +
               "\" text-anchor=\"end\" font-size=\"12\" fill=\"" + color + "\">" +
               table.columns[1] + "=" + fmt("%.6g", s.value) + "</text>\n";

        // polyline segments; non-finite rows break the line
        std::string points;
        int count = 0;
        auto flush = [&]() {
            if (count >= 2)
                svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                       "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
            points.clear();
            count = 0;
        };
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!s.x[i].second) {
                flush();
                continue;
            }
            if (count)
                points += ' ';
            points += fmt("%.2f", map_x(s.x[i].first)) + "," + fmt("%.2f", map_y(s.y[i]));
            ++count;
        }
        flush();
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace lhtl::sweep
