#ifndef ESCHER_EXACT_SCALAR_HPP
#define ESCHER_EXACT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "escher/errors.hpp"

namespace escher {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Cmp { Less, Equal, Greater };

// Working-precision window for numeric sign decisions. Comparison starts at
// start_bits and doubles until the enclosing interval separates, giving up
// (AmbiguousComparison) at cap_bits.
struct PrecisionConfig {
  unsigned start_bits = 128;
  unsigned cap_bits = 4096;
};

// Element of Q[P] where P is the formal symbol for (pi*e)^2.
//
// Equality is coefficient equality (P treated as an indeterminate); ordering
// evaluates P numerically via rational interval enclosures of its decimal
// expansion.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& q) : coeffs_{q} { canonicalize(); }  // NOLINT
  ExactScalar(long long n) : ExactScalar(Rational(n)) {}           // NOLINT
  explicit ExactScalar(std::vector<Rational> coeffs)
      : coeffs_(std::move(coeffs)) {
    canonicalize();
  }

  // The symbol P itself.
  static ExactScalar pe2();

  bool is_zero() const { return coeffs_.empty(); }
  // True iff degree 0 (a plain rational, possibly zero).
  bool is_rational() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of P^k (zero beyond the degree).
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  // Value as a rational; requires is_rational().
  Rational rational_value() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  // Exact division by a nonzero rational.
  ExactScalar div_rational(const Rational& q) const;
  // Exact nonnegative integer power.
  ExactScalar pow(unsigned long long e) const;

  bool operator==(const ExactScalar& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  // Rational enclosure [lo, hi] of the numeric value, using `digits`
  // fractional decimal digits of P.
  std::pair<Rational, Rational> enclosure(unsigned digits) const;

  std::string str() const;

 private:
  void canonicalize();

  std::vector<Rational> coeffs_;  // q0 + q1*P + ... (trailing zeros stripped)
};

// Symbolic equality short-circuits; otherwise the sign of a - b is decided
// numerically with escalating precision.
Cmp scalar_cmp(const ExactScalar& a, const ExactScalar& b,
               const PrecisionConfig& cfg = {});

// k and r = x - 2k with the numeric value of r in [0, 2). Only the constant
// coefficient is shifted.
std::pair<Integer, ExactScalar> scalar_floor_half_band(
    const ExactScalar& x, const PrecisionConfig& cfg = {});

// Parses the canonical text form (`q0`, `q0 + q1*PE2`, `q*PE2^k`, ...).
ExactScalar parse_scalar(const std::string& text);

// floor of a rational as an exact integer.
Integer rational_floor(const Rational& q);

// Enclosure [lo, lo + 10^-digits] of (pi*e)^2 from the builtin digit table.
std::pair<Rational, Rational> pe2_enclosure(unsigned digits);

// Fractional decimal digits needed to support `bits` of working precision.
unsigned digits_for_bits(unsigned bits);

}  // namespace escher

#endif
