#include <doctest.h>

#include <random>

#include "escher/arith.hpp"
#include "escher/rank0.hpp"

using namespace escher;

namespace {

CxE S(long long n) { return stigma(CxE(n)); }

Rational rand_rat(std::mt19937_64& rng, long long lo, long long hi,
                  long long max_den) {
  std::uniform_int_distribution<long long> num(lo, hi), den(1, max_den);
  return Rational(num(rng), den(rng));
}

CxE rand_cxe(std::mt19937_64& rng) {
  return CxE(ExactScalar(rand_rat(rng, -20, 20, 5)),
             ExactScalar(rand_rat(rng, 0, 15, 8)));
}

CxE rand_esch(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mark(0, 1);
  return CxE(ExactScalar(rand_rat(rng, -20, 20, 5)),
             ExactScalar(Rational(mark(rng))));
}

}  // namespace

TEST_CASE("kis examples") {
  ValueSet a = kis(CxE(7), CxE(3));
  CHECK(a.principal == CxE(8));
  REQUIRE(a.alternates.size() == 1);
  CHECK(a.alternates[0] == S(8));

  ValueSet b = kis(CxE(3), S(7));
  CHECK(b.principal == CxE(4));
  CHECK(b.alternates[0] == S(4));

  ValueSet tie1 = kis(CxE(2), S(2));
  CHECK(tie1.principal == CxE(3));
  CHECK(tie1.alternates[0] == S(3));
  ValueSet tie2 = kis(S(2), CxE(2));
  CHECK(tie2.principal == S(3));
  CHECK(tie2.alternates[0] == CxE(3));
}

TEST_CASE("kis commutativity in set; tie conjugation") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    CxE x = rand_cxe(rng), y = rand_cxe(rng);
    ValueSet xy = kis(x, y), yx = kis(y, x);
    if (pseudo_cmp(x, y) != PseudoCmp::PseudoEqual) {
      CHECK(xy.principal == yx.principal);
      CHECK(xy.alternates == yx.alternates);
    } else if (x != y) {  // tie with distinct operands: y = stigma(x)
      CHECK(xy.principal == stigma(yx.principal));
      CHECK(yx.contains(xy.principal));
    }
  }
}

TEST_CASE("sik examples") {
  CHECK(sik(CxE(5), CxE(2)) == CxE(4));
  CHECK(sik(CxE(5), CxE(7)) == S(4));
  CHECK(sik(S(5), CxE(2)) == CxE(4));
  // Cross-check: kis(2, 4) value set contains s5.
  CHECK(kis(CxE(2), CxE(4)).contains(S(5)));
}

TEST_CASE("sik_closed_form examples") {
  CHECK(sik_closed_form(CxE(5), CxE(7)) == S(4));
  CHECK(sik_closed_form(S(5), S(2)) == S(4));
  CHECK(sik_closed_form(CxE(5), CxE(2)) == CxE(4));
  CHECK_THROWS_AS(
      sik_closed_form(CxE(ExactScalar(1), ExactScalar(Rational(1, 2))), CxE(0)),
      NotEscherian);
}

TEST_CASE("sik agrees with closed form on random Escherian pairs") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    CxE z = rand_esch(rng), x = rand_esch(rng);
    CHECK(sik(z, x) == sik_closed_form(z, x));
  }
}

TEST_CASE("zeration reference") {
  CHECK(zeration_reference(CxE(3), CxE(2)) == CxE(4));
  CHECK(zeration_reference(CxE(3), CxE(3)) == CxE(5));
  CHECK(zeration_reference(CxE(2), CxE(3)) == CxE(4));
  CHECK_THROWS_AS(zeration_reference(S(3), CxE(2)), NotReal);
}

TEST_CASE("kis-zeration agreement off the diagonal") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    CxE a{ExactScalar(rand_rat(rng, -20, 20, 4))};
    CxE b{ExactScalar(rand_rat(rng, -20, 20, 4))};
    if (a == b) continue;
    CHECK(kis(a, b).principal == zeration_reference(a, b));
  }
}

TEST_CASE("non-associativity witness") {
  // reals a < b < c-1: (a kis b) kis c = c+1, a kis (b kis c) = c+2.
  CxE a(1), b(3), c(6);
  CxE left = kis(kis(a, b).principal, c).principal;
  CxE right = kis(a, kis(b, c).principal).principal;
  CHECK(left == CxE(7));
  CHECK(right == CxE(8));
  CHECK(left != right);
}

TEST_CASE("closure round-trip on random pairs") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 1000; ++i) {
    CxE x = rand_cxe(rng), z = rand_cxe(rng);
    CHECK(kis(x, sik(z, x)).contains(z));
  }
}
