#include <doctest.h>

#include <set>

#include "escher/laws.hpp"

using namespace escher;
using namespace escher::laws;

TEST_CASE("registry contents") {
  auto ids = registered_law_ids();
  std::set<std::string> got(ids.begin(), ids.end());
  for (const char* id :
       {"14.0", "14.1", "14.2", "15.0", "15.1", "15.2", "15.3",
        "16.0", "16.1", "16.2", "16.3", "17.1", "17.2", "17.3", "18.1",
        "18.2", "18.3", "19.1", "19.2", "19.3", "20.1", "20.2", "20.3",
        "20.3S", "21.0", "21.1", "21.2", "21.3", "21.3S"}) {
    CAPTURE(id);
    CHECK(got.count(id) == 1);
  }
  CHECK(is_registered("21.3S"));
  CHECK_FALSE(is_registered("99.9"));
}

TEST_CASE("explicit bindings pass") {
  LawConfig cfg;
  SUBCASE("telescoping progression, rank 1") {
    Bindings b{{"a1", 1LL}, {"step", 2LL}, {"k", 5LL}};
    LawReport r = check_law("14.1", b, cfg);
    CHECK(r.pass());
    CHECK(r.trials == 1);
  }
  SUBCASE("distribution over kis at the bottom rank") {
    Bindings b{{"a", CxE(1)}, {"b", stigma(CxE(1))}, {"c", CxE(2)},
               {"d", CxE(5)}};
    CHECK(check_law("17.3", b, cfg).pass());
  }
  SUBCASE("multiplication unfolding at the bottom rank") {
    Bindings b{{"a", Rational(3)}, {"b", Rational(2)}};
    CHECK(check_law("21.3", b, cfg).pass());
  }
  SUBCASE("schema at an explicit rank") {
    Bindings b{{"m", 1LL}, {"a", Rational(3)}, {"b", Rational(4)},
               {"c", Rational(-2)}};
    CHECK(check_law("15.0", b, cfg).pass());
  }
}

TEST_CASE("unknown ids and out-of-window ranks") {
  CHECK_THROWS_AS(check_law("99.9", {}, {}), UnknownLaw);
  Bindings b{{"m", 0LL}, {"a1", 1LL}, {"step", 2LL}, {"k", 3LL}};
  CHECK_THROWS_AS(check_law("14.0", b, {}), UnknownLaw);
  CHECK_THROWS_AS(fuzz_law("no-such-law", 10, 1, {}), UnknownLaw);
}

TEST_CASE("short fuzz of every law passes") {
  LawConfig cfg;
  for (const LawReport& r : run_suite(/*seed=*/7, /*trials_per_law=*/100, cfg)) {
    CAPTURE(r.id);
    CAPTURE(r.rank ? *r.rank : -1);
    CHECK(r.pass());
    CHECK(r.trials == 100);
  }
}

TEST_CASE("fuzzing is deterministic in the seed") {
  LawReport a = fuzz_law("17.3", 50, 1234, {});
  LawReport b = fuzz_law("17.3", 50, 1234, {});
  CHECK(a.pass());
  CHECK(a.failures == b.failures);
}

TEST_CASE("negative control: dropping the mod-2 reduction") {
  // The defect is observable where the two sides of a law accumulate
  // different unreduced imaginary totals; 17.3 and 21.3 do, 15.3 does not
  // (both of its sides add the same operands).
  LawConfig bad;
  bad.mutation = Mutation::NaiveAdd;
  LawReport r = fuzz_law("17.3", 300, 99, bad);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.failures.empty());
  CHECK_FALSE(fuzz_law("21.3", 300, 99, bad).pass());
  // Same laws and parameters are fine without the defect.
  CHECK(fuzz_law("17.3", 300, 99, {}).pass());
  CHECK(fuzz_law("21.3", 300, 99, {}).pass());
}

TEST_CASE("negative control: value-class tie resolution") {
  LawConfig bad;
  bad.mutation = Mutation::SymmetricTie;
  LawReport r = fuzz_law("21.3S", 50, 5, bad);
  CHECK_FALSE(r.pass());
  CHECK(fuzz_law("21.3S", 50, 5, {}).pass());
}

TEST_CASE("report lines") {
  LawReport r = fuzz_law("18.2", 10, 3, {});
  CHECK(r.exact_mode);
  CHECK(r.line().find("law 18.2") == 0);
  CHECK(r.line().find("PASS") != std::string::npos);

  LawReport n = fuzz_law("18.1", 10, 3, {});
  CHECK_FALSE(n.exact_mode);
  CHECK(n.line().find("mode=numeric") != std::string::npos);
}
