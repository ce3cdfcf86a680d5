#include "escher/rank0.hpp"

#include "escher/arith.hpp"

namespace escher {

ValueSet kis(const CxE& x, const CxE& y, const PrecisionConfig& cfg) {
  PseudoCmp c = pseudo_cmp(x, y, cfg);
  const CxE& w = (c == PseudoCmp::PseudoLess) ? y : x;
  CxE one(1);
  return ValueSet{add(w, one), {add(stigma(w), one)}};
}

CxE sik(const CxE& z, const CxE& x, const PrecisionConfig& cfg) {
  CxE zm1 = sub(z, CxE(1));
  PseudoCmp c = pseudo_cmp(x, zm1, cfg);
  return c == PseudoCmp::PseudoGreater ? stigma(zm1) : zm1;
}

CxE sik_closed_form(const CxE& z, const CxE& x, const PrecisionConfig& cfg) {
  if (!z.is_escherian() || !x.is_escherian()) {
    throw NotEscherian("sik_closed_form needs Escherian operands, got " +
                       z.str() + " and " + x.str());
  }
  CxE zm1 = sub(z, CxE(1));
  ExactScalar mx = stigmamodulo(x).re();
  ExactScalar mz = stigmamodulo(zm1).re();
  CxE m = stigmamodulo(add(x, zm1));
  Cmp c = scalar_cmp(mx, mz, cfg);
  if (c == Cmp::Equal) {
    // On the boundary the two branches differ only by the stigma mark, and
    // the <= / > split does not determine it when x and z-1 sit in
    // different classes. Subtract the representative of x's class that
    // matches z-1, which reproduces the first-operand tie rule of sik.
    return sub(m, x.im() == zm1.im() ? x : stigma(x));
  }
  if (c == Cmp::Less) {
    return sub(m, x);
  }
  return sub(m, stigma(x));
}

CxE zeration_reference(const CxE& a, const CxE& b, const PrecisionConfig& cfg) {
  if (!a.is_real() || !b.is_real()) {
    throw NotReal("zeration is defined on reals only");
  }
  switch (scalar_cmp(a.re(), b.re(), cfg)) {
    case Cmp::Greater:
      return add(a, CxE(1));
    case Cmp::Less:
      return add(b, CxE(1));
    case Cmp::Equal:
      return add(a, CxE(2));
  }
  return a;  // unreachable
}

}  // namespace escher
