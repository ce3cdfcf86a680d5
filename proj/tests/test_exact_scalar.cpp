#include <doctest.h>

#include <random>

#include "escher/exact_scalar.hpp"

using namespace escher;

namespace {

ExactScalar P() { return ExactScalar::pe2(); }

Rational rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 9);
  return Rational(num(rng), den(rng));
}

ExactScalar rand_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& q : c) q = rand_rat(rng);
  return ExactScalar(c);
}

}  // namespace

TEST_CASE("scalar add examples") {
  CHECK(ExactScalar(3) + ExactScalar(Rational(1, 2)) ==
        ExactScalar(Rational(7, 2)));
  CHECK(ExactScalar(1) - P() + P() == ExactScalar(1));
  ExactScalar two_plus_3p = ExactScalar(2) + ExactScalar(3) * P();
  ExactScalar three_p = two_plus_3p + ExactScalar(-2);
  CHECK(three_p == ExactScalar(3) * P());
  CHECK(three_p.degree() == 1);
  CHECK(three_p.coeff(0) == 0);
}

TEST_CASE("scalar mul examples") {
  CHECK(ExactScalar(2) * ExactScalar(Rational(3, 2)) == ExactScalar(3));
  CHECK((ExactScalar(1) + P()) * (ExactScalar(1) - P()) ==
        ExactScalar(1) - P() * P());
  CHECK(P() * P() == P().pow(2));
}

TEST_CASE("scalar cmp examples") {
  CHECK(scalar_cmp(ExactScalar(1), ExactScalar(1)) == Cmp::Equal);
  CHECK(scalar_cmp(P(), ExactScalar(72)) == Cmp::Greater);
  CHECK(scalar_cmp(ExactScalar(1) - P(), ExactScalar(0)) == Cmp::Less);
  // A finer sandwich: 72.92706 < P < 72.92707.
  CHECK(scalar_cmp(P(), ExactScalar(Rational(7292706, 100000))) ==
        Cmp::Greater);
  CHECK(scalar_cmp(P(), ExactScalar(Rational(7292707, 100000))) == Cmp::Less);
}

TEST_CASE("scalar_floor_half_band examples") {
  auto [k1, r1] = scalar_floor_half_band(ExactScalar(3));
  CHECK(k1 == 1);
  CHECK(r1 == ExactScalar(1));
  auto [k2, r2] = scalar_floor_half_band(ExactScalar(Rational(-1, 2)));
  CHECK(k2 == -1);
  CHECK(r2 == ExactScalar(Rational(3, 2)));
  auto [k3, r3] = scalar_floor_half_band(ExactScalar(5) + ExactScalar(0) * P());
  CHECK(k3 == 2);
  CHECK(r3 == ExactScalar(1));
}

TEST_CASE("scalar_floor_half_band with P terms") {
  // P ~ 72.927: band representative is P - 72, k = 36.
  auto [k, r] = scalar_floor_half_band(P());
  CHECK(k == 36);
  CHECK(r == P() - ExactScalar(72));
  auto [lo, hi] = r.enclosure(30);
  CHECK(lo >= 0);
  CHECK(hi < 2);
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ExactScalar a = rand_scalar(rng), b = rand_scalar(rng),
                c = rand_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("cmp is a consistent total order on a sample") {
  std::mt19937_64 rng(8);
  std::vector<ExactScalar> xs;
  for (int i = 0; i < 30; ++i) xs.push_back(rand_scalar(rng));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      Cmp ab = scalar_cmp(a, b), ba = scalar_cmp(b, a);
      if (ab == Cmp::Equal) {
        CHECK(ba == Cmp::Equal);
      } else {
        CHECK(ba == (ab == Cmp::Less ? Cmp::Greater : Cmp::Less));
      }
    }
}

TEST_CASE("floor_half_band invariant on randoms") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    ExactScalar x = rand_scalar(rng);
    auto [k, r] = scalar_floor_half_band(x);
    CHECK(x - r == ExactScalar(Rational(2 * k)));
    auto [lo, hi] = r.enclosure(40);
    CHECK(lo >= 0);
    CHECK(hi < 2);
  }
}

TEST_CASE("canonical text form round-trips") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    ExactScalar x = rand_scalar(rng);
    CHECK(parse_scalar(x.str()) == x);
  }
  CHECK(ExactScalar(Rational(3, 2)).str() == "3/2");
  CHECK((ExactScalar(2) + ExactScalar(3) * P()).str() == "2 + 3*PE2");
  CHECK(P().pow(2).str() == "1*PE2^2");
  CHECK(ExactScalar(0).str() == "0");
}
