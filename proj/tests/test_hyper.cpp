#include <doctest.h>

#include "escher/hyper.hpp"

using namespace escher;

namespace {

Numeric N(long long n) { return Numeric(n); }

bool exact_eq(const Numeric& a, const Numeric& b) {
  return a.is_exact() && b.is_exact() && a.rational() == b.rational();
}

bool near(const Numeric& a, const Numeric& b) {
  return a.close_to(b, 256, -20);
}

}  // namespace

TEST_CASE("hyper_apply examples") {
  CHECK(exact_eq(hyper_apply(HyperRank(2), N(7), N(3)), N(21)));
  CHECK(exact_eq(hyper_apply(HyperRank(3), N(7), N(4)), N(2401)));
  CHECK(exact_eq(hyper_apply(HyperRank(4), N(2), N(3)), N(16)));
  CHECK(exact_eq(hyper_apply(HyperRank(1), N(7), N(3)), N(10)));
  // rank 0 is kis on reals, principal value.
  CHECK(exact_eq(hyper_apply(HyperRank(0), N(2), N(6)), N(7)));
  // tower conventions at rank 4: b = 0 -> 1, b = -1 -> 0.
  CHECK(exact_eq(hyper_apply(HyperRank(4), N(5), N(0)), N(1)));
  CHECK(exact_eq(hyper_apply(HyperRank(4), N(5), N(-1)), N(0)));
}

TEST_CASE("iter_left examples") {
  CHECK(exact_eq(iter_left(HyperRank(1), N(7), 2), N(21)));
  CHECK(near(iter_left(HyperRank(3), N(5), -1), N(1)));  // log_a a
  CHECK(exact_eq(iter_left(HyperRank(0), N(5), 2), N(7)));
  CHECK(exact_eq(iter_left(HyperRank(2), N(7), 0), N(7)));
}

TEST_CASE("iter_right examples") {
  CHECK(exact_eq(iter_right(HyperRank(1), N(7), 2), N(21)));
  CHECK(exact_eq(iter_right(HyperRank(2), N(7), 1), N(49)));
  CHECK(exact_eq(iter_right(HyperRank(2), N(7), -1), N(1)));  // a/a
}

TEST_CASE("negative iteration at rank 0 is undefined") {
  CHECK_THROWS_AS(iter_left(HyperRank(0), N(5), -1), DomainError);
}

TEST_CASE("inverse consistency of signed iteration") {
  for (int m = 1; m <= 3; ++m) {
    Numeric a = N(m == 1 ? -3 : 5);
    CHECK(near(iter_left(HyperRank(m), a, -1),
               hyper_linv(HyperRank(m), a, a)));
    CHECK(near(iter_right(HyperRank(m), a, -1),
               hyper_rinv(HyperRank(m), a, a)));
  }
}

TEST_CASE("iteration associativity boundary") {
  for (int m = 1; m <= 2; ++m) {
    for (long long n = 0; n <= 4; ++n) {
      CHECK(exact_eq(iter_left(HyperRank(m), N(3), n),
                     iter_right(HyperRank(m), N(3), n)));
    }
  }
  // rank 3 counterexample: 3^(3^3) != (3^3)^3.
  Numeric left = iter_left(HyperRank(3), N(3), 2);
  Numeric right = iter_right(HyperRank(3), N(3), 2);
  CHECK(left.rational() != right.rational());
}

TEST_CASE("rinv/linv examples") {
  CHECK(near(hyper_rinv(HyperRank(3), N(8), N(3)), N(2)));
  CHECK(near(hyper_linv(HyperRank(3), N(2), N(8)), N(3)));
  CHECK(exact_eq(hyper_rinv(HyperRank(1), N(5), N(7)), N(-2)));
  CHECK(exact_eq(hyper_rinv(HyperRank(4), N(9), N(1)), N(9)));
  CHECK_THROWS_AS(hyper_rinv(HyperRank(2), N(5), N(0)), ZeroDivisor);
  CHECK_THROWS_AS(hyper_linv(HyperRank(3), N(1), N(8)), DomainError);
}

TEST_CASE("rank recursion checks") {
  RankRecursionReport r1 = rank_recursion_check(HyperRank(1), N(7), 3);
  CHECK(r1.closure_matches);
  CHECK(r1.corrected_matches);
  CHECK(exact_eq(r1.closure, N(21)));

  RankRecursionReport r0 = rank_recursion_check(HyperRank(0), N(5), 3);
  CHECK(r0.corrected_matches);
  CHECK_FALSE(r0.closure_matches);
  CHECK(exact_eq(r0.corrected_closure, N(7)));
  CHECK(exact_eq(r0.closure, N(8)));

  RankRecursionReport r2 = rank_recursion_check(HyperRank(2), N(7), 4);
  CHECK(r2.closure_matches);
  CHECK(r2.corrected_matches);
  CHECK(exact_eq(r2.closure, N(2401)));
}

TEST_CASE("seed property: kis iteration is (a+n)-1") {
  for (long long n = 1; n <= 6; ++n) {
    CHECK(exact_eq(iter_left(HyperRank(0), N(5), n - 1), N(5 + n - 1)));
  }
}

TEST_CASE("Ackermann closed forms") {
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CHECK(ackermann(0, n) == Integer(n + 1));
    CHECK(ackermann(1, n) == Integer(n + 2));
    CHECK(ackermann(2, n) == Integer(2 * n + 3));
    CHECK(ackermann(3, n) == (Integer(1) << (n + 3)) - 3);
  }
  CHECK(ackermann(2, 3) == 9);
  CHECK(ackermann(3, 4) == 125);
  CHECK(ackermann(3, 5) == 253);
}

TEST_CASE("modified Ackermann closed forms") {
  for (std::uint64_t n = 3; n <= 10; ++n) {
    CHECK(ackermann_mod(0, n) == Integer(n + 1));
    CHECK(ackermann_mod(1, n) == Integer(n + 2));
    CHECK(ackermann_mod(2, n) == Integer(2 * n));
    CHECK(ackermann_mod(3, n) == (Integer(1) << n));
  }
  CHECK(ackermann_mod(3, 5) == 32);
  CHECK(ackermann_mod(3, 8) == 256);
  CHECK(ackermann_mod(0, 6) == 7);
  CHECK_THROWS_AS(ackermann_mod(1, 2), DomainError);
}

TEST_CASE("Ackermann budget") {
  CHECK_THROWS_AS(ackermann(4, 2), ResourceLimit);
  CHECK_THROWS_AS(ackermann(3, 21), ResourceLimit);
  AckermannBudget wide{4, 1};
  CHECK(ackermann(4, 0, wide) == 13);
  CHECK(ackermann(4, 1, wide) == 65533);
}

TEST_CASE("Ackermann-tower bridge") {
  for (int m = 0; m <= 3; ++m) {
    for (std::uint64_t n = 3; n <= 8; ++n) {
      Numeric tower = hyper_apply(HyperRank(m), N(2), N(static_cast<long long>(n)));
      CHECK(exact_eq(tower, Numeric(Rational(ackermann_mod(
                                static_cast<std::uint64_t>(m), n)))));
    }
    // 2 o_m 4 = 2 o_{m+1} 3 and (2 o_m 2) o_{m+1} 1 = 4.
    CHECK(exact_eq(hyper_apply(HyperRank(m), N(2), N(4)),
                   hyper_apply(HyperRank(m + 1), N(2), N(3))));
    CHECK(exact_eq(hyper_apply(HyperRank(m + 1),
                               hyper_apply(HyperRank(m), N(2), N(2)), N(1)),
                   N(4)));
  }
}
