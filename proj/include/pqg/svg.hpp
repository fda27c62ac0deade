#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pqg/errors.hpp"

namespace pqg {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal static SVG 1.1 line plot, at most two series. Log axes drop
/// non-positive samples.
void write_svg_plot(std::ostream& out, const std::vector<PlotSeries>& series,
                    const std::string& x_label, const std::string& y_label, bool log_x,
                    bool log_y);

}  // namespace pqg
