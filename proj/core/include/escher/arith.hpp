#ifndef ESCHER_ARITH_HPP
#define ESCHER_ARITH_HPP

#include "escher/value_set.hpp"

namespace escher {

// Escherian/complex addition: componentwise, im reduced mod 2.
// a + sb = s(a+b), sa + sb = a + b.
CxE add(const CxE& x, const CxE& y);

// add(x, negate(x)) = 0; -t reduced mod 2 makes s0 its own negation.
CxE negate(const CxE& x);

CxE sub(const CxE& x, const CxE& y);

// Complex product under the embedding z = re + i*pi*e*t:
//   re' = xr*yr - xi*yi*P,  im' = xr*yi + xi*yr (mod 2),
// where P stands for (pi*e)^2.
CxE mul(const CxE& x, const CxE& y);

// All w with w*q = x, for a nonzero exact rational q = p/n in lowest terms.
// |p| branches; the principal one is branch k = 0.
ValueSet div_by_rational(const CxE& x, const Rational& q);

}  // namespace escher

#endif
