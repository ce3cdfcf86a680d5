#ifndef ESCHER_CXE_HPP
#define ESCHER_CXE_HPP

#include <string>
#include <vector>

#include "escher/exact_scalar.hpp"

namespace escher {

// Three-way outcome of the non-transitive comparison.
enum class PseudoCmp { PseudoLess, PseudoEqual, PseudoGreater };

// A number re + i*pi*e*t with the imaginary axis taken mod i*2*pi*e.
//
// `im` stores the coefficient t of i*pi*e, normalized to [0, 2). Reals have
// t = 0, stigmareals t = 1; together they form the Escherian numbers E.
class CxE {
 public:
  CxE() = default;
  CxE(const ExactScalar& re) : re_(re) {}  // NOLINT
  CxE(long long n) : re_(n) {}             // NOLINT
  CxE(const Rational& q) : re_(q) {}       // NOLINT
  CxE(const ExactScalar& re, const ExactScalar& im,
      const PrecisionConfig& cfg = {})
      : re_(re), im_(scalar_floor_half_band(im, cfg).second) {}

  // Bypasses the mod-2 normalization of im. Only for controlled experiments
  // (law mutation controls); everything else must keep the invariant.
  static CxE raw(ExactScalar re, ExactScalar im);

  const ExactScalar& re() const { return re_; }
  const ExactScalar& im() const { return im_; }

  bool is_real() const { return im_.is_zero(); }
  bool is_stigmareal() const { return im_ == ExactScalar(1); }
  bool is_escherian() const { return is_real() || is_stigmareal(); }

  bool operator==(const CxE& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const CxE& o) const { return !(*this == o); }

  // Canonical text form: `4`, `s(4)`, `cx(re; t)`.
  std::string str() const;

 private:
  ExactScalar re_;
  ExactScalar im_;  // coefficient of i*pi*e, in [0, 2)
};

// a +- i*pi*e (principal +); involution.
CxE stigma(const CxE& x);

// Strips the stigma mark. Defined only on E.
CxE stigmamodulo(const CxE& x);

// The banded non-transitive comparison of d against f. The band of height
// i*2*pi*e is centered on f; the representative of d.im - f.im is chosen in
// (-1, 1], so pseudoequality is exactly d - f in {0, i*pi*e}.
PseudoCmp pseudo_cmp(const CxE& d, const CxE& f,
                     const PrecisionConfig& cfg = {});

struct Window {
  Rational re_min, re_max, t_min, t_max;
};

// w*h grid of pseudo-comparisons of cell centers against f. Cell centers sit
// on the rational lattice; cell (i, j) covers
// [re_min + i*dre, re_min + (i+1)*dre) x [t_min + j*dt, t_min + (j+1)*dt).
// Row-major, j*w + i.
std::vector<PseudoCmp> classify_region(const CxE& f, const Window& window,
                                       unsigned w, unsigned h,
                                       const PrecisionConfig& cfg = {});

// Parses the canonical CxE text form.
CxE parse_cxe(const std::string& text);

}  // namespace escher

#endif
