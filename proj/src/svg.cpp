#include "pqg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace pqg {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 60;

const char* kColors[2] = {"#1f77b4", "#d62728"};

double transform(double v, bool log_scale) { return log_scale ? std::log10(v) : v; }

std::string format_tick(double v, bool log_scale) {
    std::ostringstream s;
    s.precision(3);
    s << (log_scale ? std::pow(10.0, v) : v);
    return s.str();
}

}  // namespace

void write_svg_plot(std::ostream& out, const std::vector<PlotSeries>& series,
                    const std::string& x_label, const std::string& y_label, bool log_x,
                    bool log_y) {
    if (series.empty() || series.size() > 2) {
        throw DomainError("svg plot supports one or two series");
    }
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) throw DomainError("series x/y size mismatch");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if ((log_x && s.x[i] <= 0.0) || (log_y && s.y[i] <= 0.0)) continue;
            x_min = std::min(x_min, transform(s.x[i], log_x));
            x_max = std::max(x_max, transform(s.x[i], log_x));
            y_min = std::min(y_min, transform(s.y[i], log_y));
            y_max = std::max(y_max, transform(s.y[i], log_y));
        }
    }
    if (!(x_min < x_max)) x_max = x_min + 1.0;
    if (!(y_min < y_max)) y_max = y_min + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double v) { return kMarginLeft + (v - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double v) {
        return kMarginTop + plot_h - (v - y_min) / (y_max - y_min) * plot_h;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double vx = x_min + (x_max - x_min) * i / kTicks;
        const double vy = y_min + (y_max - y_min) * i / kTicks;
        out << "<line x1=\"" << px(vx) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << px(vx) << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(vx) << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << format_tick(vx, log_x)
            << "</text>\n";
        out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py(vy) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << py(vy) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py(vy) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << format_tick(vy, log_y)
            << "</text>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[s]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if ((log_x && series[s].x[i] <= 0.0) || (log_y && series[s].y[i] <= 0.0)) continue;
            out << px(transform(series[s].x[i], log_x)) << ','
                << py(transform(series[s].y[i], log_y)) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << kMarginLeft + 12 << "\" y=\"" << kMarginTop + 16 + 16 * s
            << "\" font-size=\"12\" fill=\"" << kColors[s] << "\">" << series[s].label
            << "</text>\n";
    }

    out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
        << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << kMarginTop + plot_h / 2 << ")\">" << y_label << "</text>\n";
    out << "</svg>\n";
}

}  // namespace pqg
