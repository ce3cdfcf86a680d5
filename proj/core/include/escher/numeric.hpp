#ifndef ESCHER_NUMERIC_HPP
#define ESCHER_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "escher/exact_scalar.hpp"

namespace escher {

using BigFloat = boost::multiprecision::mpfr_float;

// High-precision value, exact where possible. Rationals embed losslessly and
// stay exact under +,-,*,/ and integer powers; roots, logs and non-integer
// powers produce approximations carrying their working precision in bits.
class Numeric {
 public:
  Numeric() : exact_(true), rat_(0), bits_(0) {}
  Numeric(const Rational& q) : exact_(true), rat_(q), bits_(0) {}  // NOLINT
  Numeric(long long n) : Numeric(Rational(n)) {}                   // NOLINT
  Numeric(const BigFloat& v, unsigned bits)
      : exact_(false), rat_(0), approx_(v), bits_(bits) {}

  bool is_exact() const { return exact_; }
  const Rational& rational() const;
  bool is_integer() const { return exact_ && denominator(rat_) == 1; }
  Integer integer() const;

  unsigned bits() const { return bits_; }
  // Numeric value at the given working precision.
  BigFloat to_float(unsigned bits) const;

  Numeric add(const Numeric& o, unsigned bits) const;
  Numeric sub(const Numeric& o, unsigned bits) const;
  Numeric mul(const Numeric& o, unsigned bits) const;
  Numeric div(const Numeric& o, unsigned bits) const;
  Numeric neg() const;

  // Exact when the base is exact and the exponent a (bounded) integer.
  Numeric pow(const Numeric& e, unsigned bits) const;
  // b-th root, c^(1/b).
  Numeric root(const Numeric& b, unsigned bits) const;
  // Logarithm of *this in the given base.
  Numeric log_base(const Numeric& base, unsigned bits) const;

  int sign() const;
  Cmp cmp(const Numeric& o, unsigned bits) const;
  bool close_to(const Numeric& o, unsigned bits, int rel_tol_exp10) const;

  std::string str(unsigned display_digits = 30) const;

 private:
  bool exact_;
  Rational rat_;
  BigFloat approx_;
  unsigned bits_;
};

// RAII guard for boost's mpfr default precision (decimal digits).
class FloatPrecisionGuard {
 public:
  explicit FloatPrecisionGuard(unsigned bits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits_for_bits(bits));
  }
  ~FloatPrecisionGuard() { BigFloat::default_precision(saved_); }
  FloatPrecisionGuard(const FloatPrecisionGuard&) = delete;
  FloatPrecisionGuard& operator=(const FloatPrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

}  // namespace escher

#endif
