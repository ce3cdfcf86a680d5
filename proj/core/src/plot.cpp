#include "escher/plot.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "escher/errors.hpp"

namespace escher::plot {
namespace {

struct Rgb {
  int r, g, b;
};

constexpr Rgb kBlue{0, 0, 255};
constexpr Rgb kRed{255, 0, 0};
constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};

// Does [lo, hi) contain the scalar x?
bool cell_contains(const ExactScalar& x, const Rational& lo,
                   const Rational& hi, const PrecisionConfig& cfg) {
  return scalar_cmp(x, ExactScalar(lo), cfg) != Cmp::Less &&
         scalar_cmp(x, ExactScalar(hi), cfg) == Cmp::Less;
}

}  // namespace

std::string render_ppm(const PlotSpec& spec, const PrecisionConfig& cfg) {
  const unsigned w = spec.width, h = spec.height;
  if (w < 1 || h < 1) throw DomainError("plot needs a grid of at least 1x1");
  const Window& win = spec.window;
  if (win.re_min >= win.re_max || win.t_min >= win.t_max)
    throw DomainError("plot window is empty");
  Rational dre = (win.re_max - win.re_min) / w;
  Rational dt = (win.t_max - win.t_min) / h;

  std::vector<PseudoCmp> cells = classify_region(spec.center, win, w, h, cfg);

  // Column(s) crossed by the pseudoequal locus re = center.re.
  std::vector<bool> locus_col(w, false);
  for (unsigned i = 0; i < w; ++i) {
    Rational lo = win.re_min + dre * i;
    locus_col[i] = cell_contains(spec.center.re(), lo, lo + dre, cfg);
  }

  // Rows crossed by the locus t-levels center.t + 2k and center.t + 1 + 2k,
  // and rows crossing an even integer t-level strictly inside the window
  // (the i2pe band boundary, drawn as a white dash).
  std::vector<bool> locus_row(h, false), dash_row(h, false);
  for (unsigned j = 0; j < h; ++j) {
    Rational lo = win.t_min + dt * j;
    Rational hi = lo + dt;
    for (int k = -8; k <= 8; ++k) {
      ExactScalar t0 = spec.center.im() + ExactScalar(2 * k);
      ExactScalar t1 = spec.center.im() + ExactScalar(2 * k + 1);
      if (cell_contains(t0, lo, hi, cfg) || cell_contains(t1, lo, hi, cfg))
        locus_row[j] = true;
      Rational band = Rational(2 * k);
      if (band > win.t_min && band < win.t_max &&
          band >= lo && band < hi)
        dash_row[j] = true;
    }
  }

  std::ostringstream os;
  os << "P3\n" << w << " " << h << "\n255\n";
  // Top row of the file is the highest t band.
  for (unsigned jj = 0; jj < h; ++jj) {
    unsigned j = h - 1 - jj;
    for (unsigned i = 0; i < w; ++i) {
      Rgb px = cells[static_cast<std::size_t>(j) * w + i] ==
                       PseudoCmp::PseudoGreater
                   ? kBlue
                   : kRed;
      if (dash_row[j] && (i / 4) % 2 == 0) px = kWhite;
      if ((locus_row[j] && locus_col[i]) ||
          cells[static_cast<std::size_t>(j) * w + i] ==
              PseudoCmp::PseudoEqual)
        px = kBlack;
      os << px.r << " " << px.g << " " << px.b << (i + 1 < w ? " " : "\n");
    }
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << content;
  if (!f.good()) throw IoError("failed writing " + path);
}

}  // namespace escher::plot
