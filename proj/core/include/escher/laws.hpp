#ifndef ESCHER_LAWS_HPP
#define ESCHER_LAWS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "escher/arith.hpp"
#include "escher/hyper.hpp"
#include "escher/rank0.hpp"

namespace escher::laws {

// Deliberate defect injections for negative-control runs. NaiveAdd drops the
// mod-2 reduction of the imaginary coefficient; SymmetricTie resolves
// pseudoequal kis operands by value class instead of operand position,
// collapsing s(a) kis a onto a kis s(a).
enum class Mutation { None, NaiveAdd, SymmetricTie };

struct LawConfig {
  PrecisionConfig prec{};
  unsigned float_bits = 256;
  int rel_tol_exp10 = -20;
  Mutation mutation = Mutation::None;
};

using BindingValue = std::variant<long long, Rational, CxE>;
using Bindings = std::map<std::string, BindingValue>;

struct LawReport {
  std::string id;
  std::optional<int> rank;  // set for rank-parametrized schemas
  std::uint64_t trials = 0;
  bool exact_mode = true;
  std::vector<std::string> failures;  // witness bindings, capped

  bool pass() const { return failures.empty(); }
  std::string line() const;
};

// Evaluates one instance of a law with explicit bindings. Rank-parametrized
// schemas ("14.0", "15.0", "16.0", "21.0") take the rank as binding "m";
// a rank outside the law's validity window is UnknownLaw.
LawReport check_law(const std::string& id, const Bindings& bindings,
                    const LawConfig& cfg = {});

// Seeded random trials over the law's declared domain. Deterministic given
// (id, trials, seed). Schemas fuzz every rank in their window.
LawReport fuzz_law(const std::string& id, std::uint64_t trials,
                   std::uint64_t seed, const LawConfig& cfg = {});

// Fuzzes every registered law; one report per law (and per rank for
// schemas).
std::vector<LawReport> run_suite(std::uint64_t seed,
                                 std::uint64_t trials_per_law,
                                 const LawConfig& cfg = {});

std::vector<std::string> registered_law_ids();
bool is_registered(const std::string& id);

}  // namespace escher::laws

#endif
