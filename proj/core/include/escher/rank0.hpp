#ifndef ESCHER_RANK0_HPP
#define ESCHER_RANK0_HPP

#include "escher/value_set.hpp"

namespace escher {

// Incrementation: successor of the pseudogreater of x and y, two-valued.
// Result is {w+1, sw+1} with w+1 principal, where w = x when
// pseudo_cmp(x, y) is PseudoGreater or PseudoEqual (ties go to the first
// operand), else w = y.
ValueSet kis(const CxE& x, const CxE& y, const PrecisionConfig& cfg = {});

// Decrementation, the inverse of kis, pre-collapsed to its principal value:
// z-1 when x is pseudoless-or-equal to z-1, else s(z-1).
CxE sik(const CxE& z, const CxE& x, const PrecisionConfig& cfg = {});

// Independent formulation of sik through the stigmamodulo:
//   z sik x = |x+z-1| - x   if |x| <= |z-1|,
//   z sik x = |x+z-1| - sx  otherwise,
// stated on Escherian operands only. Must agree with sik on E.
CxE sik_closed_form(const CxE& z, const CxE& x, const PrecisionConfig& cfg = {});

// The Rubtsov-Romerio zeration on reals: successor of the larger operand,
// a+2 when the operands are equal (the discontinuity kis removes).
CxE zeration_reference(const CxE& a, const CxE& b,
                       const PrecisionConfig& cfg = {});

}  // namespace escher

#endif
