#ifndef ESCHER_EXPR_HPP
#define ESCHER_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "escher/exact_scalar.hpp"

namespace escher::expr {

// AST over the surface syntax. Kinds:
//   Number  literal nonnegative integer (value)
//   Const   "PE2"
//   Var     identifier
//   Prefix  name in {"s", "-"}, one arg
//   Infix   name in {"kis","sik","+","-","*","/","^","^^","<~",">~","=~"}
//   Call    name in {"cx","sm","alts","root","log","hyper","iterl","iterr",
//                    "ack","ackp","zer"}
struct Node {
  enum class Kind { Number, Const, Var, Prefix, Infix, Call };

  Kind kind;
  Integer value;  // Number only
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
  bool parenthesized = false;
};

using NodePtr = std::shared_ptr<const Node>;

struct ParseResult {
  NodePtr ast;
  // Bound variable name when the input is a `let <name> = <expr>` statement.
  std::string let_name;
  std::vector<std::string> warnings;
};

// Parses one expression or `let` statement. Precedence, tightest to loosest:
// prefix s/-; ^ ^^ (right-assoc); * /; + -; kis sik (left-assoc, chain
// warning); <~ >~ =~. Throws SyntaxError with the offending position.
ParseResult parse(const std::string& text);

}  // namespace escher::expr

#endif
