#include "escher/arith.hpp"

namespace escher {

CxE add(const CxE& x, const CxE& y) {
  return CxE(x.re() + y.re(), x.im() + y.im());
}

CxE negate(const CxE& x) { return CxE(-x.re(), -x.im()); }

CxE sub(const CxE& x, const CxE& y) { return add(x, negate(y)); }

CxE mul(const CxE& x, const CxE& y) {
  ExactScalar re = x.re() * y.re() - x.im() * y.im() * ExactScalar::pe2();
  ExactScalar im = x.re() * y.im() + x.im() * y.re();
  return CxE(re, im);
}

ValueSet div_by_rational(const CxE& x, const Rational& q) {
  if (q == 0) throw ZeroDivisor("division of " + x.str() + " by zero");
  Integer p = numerator(q);  // lowest terms by construction of cpp_rational
  Integer branches = p < 0 ? Integer(-p) : p;
  ExactScalar re = x.re().div_rational(q);
  ValueSet out;
  for (Integer k = 0; k < branches; ++k) {
    ExactScalar im =
        (x.im() + ExactScalar(Rational(2 * k))).div_rational(q);
    CxE w(re, im);
    if (k == 0) {
      out.principal = w;
    } else {
      out.alternates.push_back(w);
    }
  }
  return out;
}

}  // namespace escher
