#include "escher/hyper.hpp"

#include <map>
#include <utility>
#include <vector>

namespace escher {

namespace {
// Rank-0 principal value on reals: successor of the larger operand, ties to
// the first.
Numeric kis_real(const Numeric& a, const Numeric& b, unsigned bits) {
  const Numeric& w = a.cmp(b, bits) == Cmp::Less ? b : a;
  return w.add(Numeric(1), bits);
}
}  // namespace

Numeric hyper_apply(HyperRank m, const Numeric& a, const Numeric& b,
                    const HyperConfig& cfg) {
  switch (m.m) {
    case 0:
      return kis_real(a, b, cfg.float_bits);
    case 1:
      return a.add(b, cfg.float_bits);
    case 2:
      return a.mul(b, cfg.float_bits);
    case 3:
      return a.pow(b, cfg.float_bits);
    case 4: {
      if (!b.is_integer()) {
        throw DomainError("tetration height must be an integer");
      }
      Integer n = b.integer();
      if (n == -1) return Numeric(0);
      if (n == 0) return Numeric(1);
      if (n < -1) throw DomainError("tetration height must be >= -1");
      Numeric acc = a;
      for (Integer i = 1; i < n; ++i) {
        acc = a.pow(acc, cfg.float_bits);
      }
      return acc;
    }
  }
  throw DomainError("bad rank");
}

Numeric hyper_rinv(HyperRank m, const Numeric& c, const Numeric& b,
                   const HyperConfig& cfg) {
  switch (m.m) {
    case 1:
      return c.sub(b, cfg.float_bits);
    case 2:
      return c.div(b, cfg.float_bits);
    case 3:
      return c.root(b, cfg.float_bits);
    case 4:
      // a tet 1 = a, so the height-1 inverse is the identity; other heights
      // (super-roots) are outside the tower's scope.
      if (b.is_integer() && b.integer() == 1) return c;
      throw DomainError("rank-4 right inverse defined only for height 1");
    default:
      throw DomainError("right inverse defined for ranks 1..4");
  }
}

Numeric hyper_linv(HyperRank m, const Numeric& a, const Numeric& c,
                   const HyperConfig& cfg) {
  switch (m.m) {
    case 1:
      return c.sub(a, cfg.float_bits);
    case 2:
      return c.div(a, cfg.float_bits);
    case 3:
      return c.log_base(a, cfg.float_bits);
    default:
      throw DomainError("left inverse defined for ranks 1..3");
  }
}

Numeric iter_left(HyperRank m, const Numeric& a, long long n,
                  const HyperConfig& cfg) {
  Numeric acc = a;
  if (n >= 0) {
    for (long long i = 0; i < n; ++i) acc = hyper_apply(m, a, acc, cfg);
  } else {
    for (long long i = 0; i > n; --i) acc = hyper_linv(m, a, acc, cfg);
  }
  return acc;
}

Numeric iter_right(HyperRank m, const Numeric& a, long long n,
                   const HyperConfig& cfg) {
  Numeric acc = a;
  if (n >= 0) {
    for (long long i = 0; i < n; ++i) acc = hyper_apply(m, acc, a, cfg);
  } else {
    for (long long i = 0; i > n; --i) acc = hyper_rinv(m, acc, a, cfg);
  }
  return acc;
}

RankRecursionReport rank_recursion_check(HyperRank m, const Numeric& a,
                                         long long n, const HyperConfig& cfg) {
  if (m.m > 3) throw DomainError("rank recursion check needs m <= 3");
  if (n < 1) throw DomainError("rank recursion check needs n >= 1");
  HyperRank up(m.m + 1);
  Numeric iterated = iter_left(m, a, n - 1, cfg);
  Numeric closure = hyper_apply(up, a, Numeric(n), cfg);
  Numeric corrected = hyper_rinv(up, closure, Numeric(1), cfg);
  auto matches = [&](const Numeric& x, const Numeric& y) {
    if (x.is_exact() && y.is_exact()) return x.rational() == y.rational();
    return x.close_to(y, cfg.float_bits, -20);
  };
  return RankRecursionReport{iterated, closure, corrected,
                             matches(iterated, closure),
                             matches(iterated, corrected)};
}

namespace {
Integer ackermann_stack(std::uint64_t m0, std::uint64_t n0, bool modified,
                        const AckermannBudget& budget) {
  if (m0 > budget.max_m || n0 > budget.max_n) {
    throw ResourceLimit("Ackermann arguments beyond configured budget");
  }
  if (modified && n0 < 3) {
    throw DomainError("modified Ackermann needs n >= 3");
  }
  // Evaluate with an explicit work stack: the stack holds first arguments
  // still waiting for their (not yet computed) second argument. A tag marks
  // the stack depth at which a call A(m, n) completes so its value can be
  // memoized on the way back out.
  struct Tag {
    Integer m, n;
    std::size_t depth;
  };
  std::map<std::pair<Integer, Integer>, Integer> memo;
  constexpr std::size_t kMemoCap = 1u << 20;
  const Integer kMemoArgCap = 1 << 24;

  std::vector<Integer> stack{Integer(m0)};
  std::vector<Tag> tags;
  Integer n = n0;
  const Integer base_n = modified ? 3 : 0;
  while (!stack.empty()) {
    Integer m = stack.back();
    stack.pop_back();
    auto it = memo.find({m, n});
    if (it != memo.end()) {
      n = it->second;
    } else if (m == 0) {
      n = n + 1;
    } else {
      if (n <= kMemoArgCap && memo.size() < kMemoCap) {
        tags.push_back({m, n, stack.size()});
      }
      if (n == base_n) {
        stack.push_back(m - 1);
        n = base_n + 1;
      } else {
        stack.push_back(m - 1);
        stack.push_back(m);
        n = n - 1;
      }
      continue;
    }
    while (!tags.empty() && tags.back().depth == stack.size()) {
      memo.emplace(std::make_pair(tags.back().m, tags.back().n), n);
      tags.pop_back();
    }
  }
  return n;
}
}  // namespace

Integer ackermann(std::uint64_t m, std::uint64_t n,
                  const AckermannBudget& budget) {
  return ackermann_stack(m, n, false, budget);
}

Integer ackermann_mod(std::uint64_t m, std::uint64_t n,
                      const AckermannBudget& budget) {
  return ackermann_stack(m, n, true, budget);
}

}  // namespace escher
