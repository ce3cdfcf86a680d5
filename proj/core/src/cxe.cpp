#include "escher/cxe.hpp"

#include <utility>

namespace escher {

CxE CxE::raw(ExactScalar re, ExactScalar im) {
  CxE x;
  x.re_ = std::move(re);
  x.im_ = std::move(im);
  return x;
}

std::string CxE::str() const {
  if (is_real()) return re_.str();
  if (is_stigmareal()) return "s(" + re_.str() + ")";
  return "cx(" + re_.str() + "; " + im_.str() + ")";
}

CxE stigma(const CxE& x) { return CxE(x.re(), x.im() + ExactScalar(1)); }

CxE stigmamodulo(const CxE& x) {
  if (!x.is_escherian()) {
    throw NotEscherian("stigmamodulo undefined for " + x.str());
  }
  return CxE(x.re());
}

namespace {
// Representative of dt mod 2 in (-1, 1]. dt comes in from normalized im
// parts, so it lies in (-2, 2); the loop also tolerates raw (unnormalized)
// values produced by mutation controls.
ExactScalar band_representative(ExactScalar dt, const PrecisionConfig& cfg) {
  const ExactScalar one(1), two(2);
  for (;;) {
    Cmp hi = scalar_cmp(dt, one, cfg);
    if (hi == Cmp::Greater) {
      dt -= two;
      continue;
    }
    Cmp lo = scalar_cmp(dt, ExactScalar(-1), cfg);
    if (lo == Cmp::Less || lo == Cmp::Equal) {
      dt += two;
      continue;
    }
    return dt;
  }
}
}  // namespace

PseudoCmp pseudo_cmp(const CxE& d, const CxE& f, const PrecisionConfig& cfg) {
  Cmp dr = scalar_cmp(d.re(), f.re(), cfg);
  ExactScalar dt = band_representative(d.im() - f.im(), cfg);

  if (dr == Cmp::Equal) {
    if (dt.is_zero() || dt == ExactScalar(1)) return PseudoCmp::PseudoEqual;
    return scalar_cmp(dt, ExactScalar(0), cfg) == Cmp::Less
               ? PseudoCmp::PseudoGreater
               : PseudoCmp::PseudoLess;
  }

  const ExactScalar half(Rational(1, 2)), neg_half(Rational(-1, 2));
  Cmp lo = scalar_cmp(dt, neg_half, cfg);
  Cmp hi = scalar_cmp(dt, half, cfg);
  if (dr == Cmp::Greater) {
    // pseudogreater iff -1/2 <= dt < 1/2
    bool in_band = (lo == Cmp::Greater || lo == Cmp::Equal) && hi == Cmp::Less;
    return in_band ? PseudoCmp::PseudoGreater : PseudoCmp::PseudoLess;
  }
  // dr < 0: pseudoless iff -1/2 < dt <= 1/2
  bool in_band = lo == Cmp::Greater && (hi == Cmp::Less || hi == Cmp::Equal);
  return in_band ? PseudoCmp::PseudoLess : PseudoCmp::PseudoGreater;
}

std::vector<PseudoCmp> classify_region(const CxE& f, const Window& window,
                                       unsigned w, unsigned h,
                                       const PrecisionConfig& cfg) {
  if (w < 1 || h < 1) throw DomainError("classify_region: empty grid");
  Rational dre = (window.re_max - window.re_min) / w;
  Rational dt = (window.t_max - window.t_min) / h;
  std::vector<PseudoCmp> grid;
  grid.reserve(static_cast<std::size_t>(w) * h);
  for (unsigned j = 0; j < h; ++j) {
    Rational t = window.t_min + dt * (2 * j + 1) / 2;
    for (unsigned i = 0; i < w; ++i) {
      Rational re = window.re_min + dre * (2 * i + 1) / 2;
      grid.push_back(
          pseudo_cmp(CxE(ExactScalar(re), ExactScalar(t), cfg), f, cfg));
    }
  }
  return grid;
}

CxE parse_cxe(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos) throw SyntaxError("empty value", 0);
  std::string s = text.substr(a, b - a + 1);
  if (s.size() >= 4 && s.compare(0, 2, "s(") == 0 && s.back() == ')') {
    return stigma(CxE(parse_scalar(s.substr(2, s.size() - 3))));
  }
  if (s.size() >= 5 && s.compare(0, 3, "cx(") == 0 && s.back() == ')') {
    std::string body = s.substr(3, s.size() - 4);
    std::size_t sep = body.find(';');
    if (sep == std::string::npos) throw SyntaxError("cx: ';' expected", a + 3);
    return CxE(parse_scalar(body.substr(0, sep)),
               parse_scalar(body.substr(sep + 1)));
  }
  return CxE(parse_scalar(s));
}

}  // namespace escher
