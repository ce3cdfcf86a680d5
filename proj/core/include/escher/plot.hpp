#ifndef ESCHER_PLOT_HPP
#define ESCHER_PLOT_HPP

#include <string>

#include "escher/cxe.hpp"

namespace escher::plot {

struct PlotSpec {
  CxE center;
  Window window;      // re in [re_min, re_max), t in [t_min, t_max)
  unsigned width = 64;
  unsigned height = 64;
};

// Plain PPM (P3) raster of the pseudo-comparison of each cell against the
// center: blue = pseudogreater, red = pseudoless, black = the cell contains
// a point of the pseudoequal locus (re = center.re, t = center.t or
// center.t + 1, mod 2). Rows are emitted with t increasing upward. Even
// integer t-levels strictly inside the window are marked as white dashed
// rows; black wins over the dash.
std::string render_ppm(const PlotSpec& spec, const PrecisionConfig& cfg = {});

// Writes content to path; IoError on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace escher::plot

#endif
