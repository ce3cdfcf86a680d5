#include "escher/exact_scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace escher {

namespace {
#include "pe2_digits.inc"

constexpr unsigned kMaxTableDigits = sizeof(kPe2FracDigits) - 1;

// [lo, hi] with lo <= a*b, c*d, ... <= hi for all sign combinations.
struct Interval {
  Rational lo, hi;
};

Interval iv_add(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval iv_mul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}
}  // namespace

void ExactScalar::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactScalar ExactScalar::pe2() {
  return ExactScalar(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational ExactScalar::rational_value() const {
  if (!is_rational()) {
    throw DomainError("scalar has P terms, no exact rational value");
  }
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return ExactScalar(std::move(out));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  return a + (-b);
}

ExactScalar ExactScalar::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& q : out) q = -q;
  return ExactScalar(std::move(out));
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExactScalar();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactScalar(std::move(out));
}

ExactScalar ExactScalar::div_rational(const Rational& q) const {
  if (q == 0) throw ZeroDivisor("division of scalar by zero");
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= q;
  return ExactScalar(std::move(out));
}

ExactScalar ExactScalar::pow(unsigned long long e) const {
  ExactScalar acc(1);
  ExactScalar base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

unsigned digits_for_bits(unsigned bits) {
  // bits * log10(2), with headroom
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

std::pair<Rational, Rational> pe2_enclosure(unsigned digits) {
  digits = std::min(digits, kMaxTableDigits);
  Integer scaled(kPe2IntPart);
  Integer pow10 = 1;
  for (unsigned i = 0; i < digits; ++i) {
    scaled = scaled * 10 + (kPe2FracDigits[i] - '0');
    pow10 *= 10;
  }
  Rational lo(scaled, pow10);
  Rational hi(scaled + 1, pow10);
  return {lo, hi};
}

std::pair<Rational, Rational> ExactScalar::enclosure(unsigned digits) const {
  auto [plo, phi] = pe2_enclosure(digits);
  Interval p{plo, phi};
  Interval acc{Rational(0), Rational(0)};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = iv_mul(acc, p);
    acc = iv_add(acc, Interval{coeffs_[i], coeffs_[i]});
  }
  return {acc.lo, acc.hi};
}

Cmp scalar_cmp(const ExactScalar& a, const ExactScalar& b,
               const PrecisionConfig& cfg) {
  ExactScalar d = a - b;
  if (d.is_zero()) return Cmp::Equal;
  if (d.is_rational()) {
    return d.rational_value() > 0 ? Cmp::Greater : Cmp::Less;
  }
  for (unsigned bits = cfg.start_bits;; bits *= 2) {
    auto [lo, hi] = d.enclosure(digits_for_bits(bits));
    if (lo > 0) return Cmp::Greater;
    if (hi < 0) return Cmp::Less;
    if (bits >= cfg.cap_bits) break;
  }
  throw AmbiguousComparison("sign of (" + d.str() +
                            ") undecided at precision cap");
}

Integer rational_floor(const Rational& q) {
  Integer num = numerator(q), den = denominator(q);
  Integer quot = num / den;
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

std::pair<Integer, ExactScalar> scalar_floor_half_band(
    const ExactScalar& x, const PrecisionConfig& cfg) {
  if (x.is_rational()) {
    Rational q = x.is_zero() ? Rational(0) : x.rational_value();
    Integer k = rational_floor(q / 2);
    return {k, ExactScalar(q - 2 * Rational(k))};
  }
  for (unsigned bits = cfg.start_bits;; bits *= 2) {
    auto [lo, hi] = x.enclosure(digits_for_bits(bits));
    Integer klo = rational_floor(lo / 2);
    Integer khi = rational_floor(hi / 2);
    if (klo == khi) {
      ExactScalar r = x - ExactScalar(Rational(2 * klo));
      return {klo, r};
    }
    if (bits >= cfg.cap_bits) break;
  }
  throw AmbiguousComparison("(" + x.str() +
                            ") too close to an even integer boundary");
}

namespace {
std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}
}  // namespace

std::string ExactScalar::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out += " + ";
    first = false;
    if (k == 0) {
      out += rational_str(coeffs_[0]);
    } else {
      out += rational_str(coeffs_[k]) + "*PE2";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {
// Minimal parser for the canonical scalar form; used by test fixtures.
struct ScalarParser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError("scalar: " + msg, i);
  }

  Integer integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("digit expected");
    Integer v(s.substr(start, i - start));
    return neg ? -v : v;
  }

  Rational rational() {
    Integer num = integer();
    skip_ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      Integer den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  ExactScalar parse() {
    std::vector<Rational> coeffs;
    bool first = true;
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      if (!first) {
        if (s[i] != '+') fail("'+' expected between terms");
        ++i;
        skip_ws();
      }
      first = false;
      Rational q = rational();
      std::size_t deg = 0;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
        if (s.compare(i, 3, "PE2") != 0) fail("PE2 expected");
        i += 3;
        deg = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
          ++i;
          Integer e = integer();
          if (e < 1) fail("exponent must be positive");
          deg = static_cast<std::size_t>(e);
        }
      }
      if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
      coeffs[deg] += q;
    }
    return ExactScalar(std::move(coeffs));
  }
};
}  // namespace

ExactScalar parse_scalar(const std::string& text) {
  ScalarParser p{text};
  ExactScalar v = p.parse();
  p.skip_ws();
  if (p.i != text.size()) throw SyntaxError("scalar: trailing input", p.i);
  return v;
}

}  // namespace escher
