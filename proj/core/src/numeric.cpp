#include "escher/numeric.hpp"

#include <algorithm>

namespace escher {

const Rational& Numeric::rational() const {
  if (!exact_) throw DomainError("value is not exact: " + str());
  return rat_;
}

Integer Numeric::integer() const {
  if (!is_integer()) throw DomainError("value is not an integer: " + str());
  return numerator(rat_);
}

BigFloat Numeric::to_float(unsigned bits) const {
  FloatPrecisionGuard guard(bits);
  // Convert numerator and denominator separately: the direct
  // rational-to-mpfr conversion in boost 1.74 rounds through a narrow
  // intermediate and loses low-order bits.
  if (exact_) return BigFloat(BigFloat(numerator(rat_)) / BigFloat(denominator(rat_)));
  return BigFloat(approx_);
}

Numeric Numeric::add(const Numeric& o, unsigned bits) const {
  if (exact_ && o.exact_) return Numeric(rat_ + o.rat_);
  FloatPrecisionGuard guard(bits);
  return Numeric(BigFloat(to_float(bits) + o.to_float(bits)), bits);
}

Numeric Numeric::sub(const Numeric& o, unsigned bits) const {
  return add(o.neg(), bits);
}

Numeric Numeric::mul(const Numeric& o, unsigned bits) const {
  if (exact_ && o.exact_) return Numeric(rat_ * o.rat_);
  FloatPrecisionGuard guard(bits);
  return Numeric(BigFloat(to_float(bits) * o.to_float(bits)), bits);
}

Numeric Numeric::div(const Numeric& o, unsigned bits) const {
  if (o.sign() == 0) throw ZeroDivisor("numeric division by zero");
  if (exact_ && o.exact_) return Numeric(rat_ / o.rat_);
  FloatPrecisionGuard guard(bits);
  return Numeric(BigFloat(to_float(bits) / o.to_float(bits)), bits);
}

Numeric Numeric::neg() const {
  if (exact_) return Numeric(-rat_);
  return Numeric(BigFloat(-approx_), bits_);
}

namespace {
Rational rational_int_pow(const Rational& base, Integer e) {
  bool inv = e < 0;
  if (inv) e = -e;
  Rational acc(1), b = base;
  while (e > 0) {
    if ((e & 1) != 0) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (inv) {
    if (acc == 0) throw ZeroDivisor("0 to a negative power");
    acc = 1 / acc;
  }
  return acc;
}

constexpr long long kMaxExactExponent = 1 << 16;
}  // namespace

Numeric Numeric::pow(const Numeric& e, unsigned bits) const {
  if (e.is_integer()) {
    Integer n = e.integer();
    if (exact_ && abs(n) <= kMaxExactExponent) {
      if (rat_ == 0 && n < 0) throw ZeroDivisor("0 to a negative power");
      return Numeric(rational_int_pow(rat_, n));
    }
    FloatPrecisionGuard guard(bits);
    BigFloat b = to_float(bits);
    if (b == 0 && n < 0) throw ZeroDivisor("0 to a negative power");
    return Numeric(BigFloat(boost::multiprecision::pow(
                       b, n.convert_to<long long>())),
                   bits);
  }
  if (sign() <= 0) {
    throw DomainError("non-integer power of a non-positive base");
  }
  FloatPrecisionGuard guard(bits);
  return Numeric(
      BigFloat(boost::multiprecision::pow(to_float(bits), e.to_float(bits))),
      bits);
}

Numeric Numeric::root(const Numeric& b, unsigned bits) const {
  if (b.sign() == 0) throw DomainError("0th root");
  if (sign() < 0) throw DomainError("root of a negative number");
  FloatPrecisionGuard guard(bits);
  return Numeric(BigFloat(boost::multiprecision::pow(
                     to_float(bits), BigFloat(1) / b.to_float(bits))),
                 bits);
}

Numeric Numeric::log_base(const Numeric& base, unsigned bits) const {
  if (sign() <= 0) throw DomainError("log of a non-positive number");
  if (base.sign() <= 0 || (base.exact_ && base.rat_ == 1)) {
    throw DomainError("log base must be positive and != 1");
  }
  FloatPrecisionGuard guard(bits);
  BigFloat num = boost::multiprecision::log(to_float(bits));
  BigFloat den = boost::multiprecision::log(base.to_float(bits));
  return Numeric(BigFloat(num / den), bits);
}

int Numeric::sign() const {
  if (exact_) return rat_ == 0 ? 0 : (rat_ > 0 ? 1 : -1);
  return approx_ == 0 ? 0 : (approx_ > 0 ? 1 : -1);
}

Cmp Numeric::cmp(const Numeric& o, unsigned bits) const {
  if (exact_ && o.exact_) {
    if (rat_ == o.rat_) return Cmp::Equal;
    return rat_ < o.rat_ ? Cmp::Less : Cmp::Greater;
  }
  BigFloat a = to_float(bits), b = o.to_float(bits);
  if (a == b) return Cmp::Equal;
  return a < b ? Cmp::Less : Cmp::Greater;
}

bool Numeric::close_to(const Numeric& o, unsigned bits,
                       int rel_tol_exp10) const {
  if (exact_ && o.exact_) return rat_ == o.rat_;
  FloatPrecisionGuard guard(bits);
  BigFloat a = to_float(bits), b = o.to_float(bits);
  BigFloat diff = boost::multiprecision::abs(a - b);
  BigFloat scale = std::max(
      {BigFloat(boost::multiprecision::abs(a)),
       BigFloat(boost::multiprecision::abs(b)), BigFloat(1)});
  BigFloat tol = boost::multiprecision::pow(BigFloat(10), rel_tol_exp10);
  return diff <= scale * tol;
}

std::string Numeric::str(unsigned display_digits) const {
  if (exact_) {
    std::string out = numerator(rat_).str();
    if (denominator(rat_) != 1) out += "/" + denominator(rat_).str();
    return out;
  }
  return approx_.str(display_digits);
}

}  // namespace escher
