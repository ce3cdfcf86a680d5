#ifndef ESCHER_HYPER_HPP
#define ESCHER_HYPER_HPP

#include <cstdint>

#include "escher/numeric.hpp"

namespace escher {

// Rank index into the tower: 0 = kis, 1 = +, 2 = *, 3 = ^, 4 = tetration.
struct HyperRank {
  int m;
  explicit HyperRank(int rank) : m(rank) {
    if (rank < 0 || rank > 4) {
      throw DomainError("hyperoperation rank must be in 0..4");
    }
  }
};

struct HyperConfig {
  unsigned float_bits = 256;
};

// a composed with b at rank m. Rank 0 is kis restricted to reals (principal
// value); rank 4 is the right-nested exponent tower (left composition) and
// needs an integer height b >= -1.
Numeric hyper_apply(HyperRank m, const Numeric& a, const Numeric& b,
                    const HyperConfig& cfg = {});

// Right inverse at rank m: recovers the left operand of c = a o b from
// (c, b). Subtraction / division / b-th root; rank 4 only for b = 1.
Numeric hyper_rinv(HyperRank m, const Numeric& c, const Numeric& b,
                   const HyperConfig& cfg = {});

// Left inverse at rank m: recovers the right operand of c = a o b from
// (a, c). Subtraction / division / log base a.
Numeric hyper_linv(HyperRank m, const Numeric& a, const Numeric& c,
                   const HyperConfig& cfg = {});

// Left composition (a o)^n a: n operators, right-nested. n = 0 gives a;
// negative n applies the left inverse |n| times (ranks 1..3 only).
Numeric iter_left(HyperRank m, const Numeric& a, long long n,
                  const HyperConfig& cfg = {});

// Right composition a (o a)^n: n operators, left-nested; negative n applies
// the right inverse.
Numeric iter_right(HyperRank m, const Numeric& a, long long n,
                   const HyperConfig& cfg = {});

// Verifies the rank recursion at (m, a, n): the n-fold left iteration of
// rank m against the closure a o_{m+1} n (the original recursion) and
// against (a o_{m+1} n) rinv_{m+1} 1 (the corrected one). At rank 0 only
// the corrected form holds.
struct RankRecursionReport {
  Numeric iterated;
  Numeric closure;            // a o_{m+1} n
  Numeric corrected_closure;  // (a o_{m+1} n) rinv_{m+1} 1
  bool closure_matches;
  bool corrected_matches;
};
RankRecursionReport rank_recursion_check(HyperRank m, const Numeric& a,
                                         long long n,
                                         const HyperConfig& cfg = {});

struct AckermannBudget {
  std::uint64_t max_m = 3;
  std::uint64_t max_n = 20;
};

// The Ackermann recursion, evaluated with an explicit work stack and a memo
// table confined to the call.
Integer ackermann(std::uint64_t m, std::uint64_t n,
                  const AckermannBudget& budget = {});

// The modified recursion A'(0,n) = n+1 (n >= 3), A'(m,3) = A'(m-1,4),
// A'(m,n) = A'(m-1, A'(m,n-1)); satisfies A'(m,n) = 2 o_m n.
Integer ackermann_mod(std::uint64_t m, std::uint64_t n,
                      const AckermannBudget& budget = {});

}  // namespace escher

#endif
