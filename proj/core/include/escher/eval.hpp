#ifndef ESCHER_EVAL_HPP
#define ESCHER_EVAL_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "escher/cxe.hpp"
#include "escher/expr.hpp"
#include "escher/hyper.hpp"
#include "escher/numeric.hpp"

namespace escher::eval {

// Evaluation result: an exact CxE (with the alternates of the last
// multi-valued step), a numeric value, or a comparison outcome.
struct Value {
  std::variant<CxE, Numeric, bool> v = CxE(0);
  std::vector<CxE> alternates;  // non-principal members, exact results only
  bool show_set = false;        // set by alts(...): print the full value set
};

struct Session {
  PrecisionConfig prec{};
  unsigned float_bits = 256;
  unsigned display_digits = 30;
  bool unicode = false;
  AckermannBudget budget{};
  std::map<std::string, Value> vars;
};

Value evaluate(const expr::Node& node, const Session& session);

std::string print_value(const Value& value, const Session& session);

// Convenience: parse, evaluate, bind (for `let`), print. Warnings from the
// parser are returned separately so callers can route them to stderr.
struct EvalOutcome {
  std::string printed;
  std::vector<std::string> warnings;
};
EvalOutcome eval_line(const std::string& text, Session& session);

}  // namespace escher::eval

#endif
