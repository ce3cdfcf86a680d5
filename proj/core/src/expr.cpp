#include "escher/expr.hpp"

#include <cctype>
#include <map>
#include <set>

#include "escher/errors.hpp"

namespace escher::expr {
namespace {

struct Token {
  enum class Kind { Number, Ident, Op, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  Integer value;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto op = [&](std::string t, std::size_t pos) {
    out.push_back({Token::Kind::Op, std::move(t), 0, pos});
  };
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
        digits += text[i++];
      out.push_back({Token::Kind::Number, digits, Integer(digits), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_'))
        ident += text[i++];
      // "s3" is the stigma prefix applied to 3.
      if (ident.size() > 1 && ident[0] == 's' &&
          ident.find_first_not_of("0123456789", 1) == std::string::npos) {
        out.push_back({Token::Kind::Ident, "s", 0, start});
        out.push_back(
            {Token::Kind::Number, ident.substr(1), Integer(ident.substr(1)),
             start + 1});
        continue;
      }
      out.push_back({Token::Kind::Ident, ident, 0, start});
      continue;
    }
    switch (c) {
      case '(':
        out.push_back({Token::Kind::LParen, "(", 0, start});
        ++i;
        break;
      case ')':
        out.push_back({Token::Kind::RParen, ")", 0, start});
        ++i;
        break;
      case ',':
      case ';':
        out.push_back({Token::Kind::Comma, ",", 0, start});
        ++i;
        break;
      case '+':
      case '-':
      case '*':
      case '/':
        op(std::string(1, c), start);
        ++i;
        break;
      case '^':
        if (i + 1 < n && text[i + 1] == '^') {
          op("^^", start);
          i += 2;
        } else {
          op("^", start);
          ++i;
        }
        break;
      case '<':
      case '>':
      case '=':
        if (i + 1 < n && text[i + 1] == '~') {
          op(std::string(1, c) + "~", start);
          i += 2;
        } else if (c == '=') {
          op("=", start);
          ++i;
        } else {
          throw SyntaxError("expected '~' after '" + std::string(1, c) + "'",
                            start);
        }
        break;
      default:
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'",
                          start);
    }
  }
  out.push_back({Token::Kind::End, "", 0, n});
  return out;
}

const std::set<std::string> kCalls = {"cx",    "sm",    "alts", "root",
                                      "log",   "hyper", "iterl", "iterr",
                                      "ack",   "ackp",  "zer"};

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ParseResult run() {
    ParseResult res;
    if (peek().kind == Token::Kind::Ident && peek().text == "let") {
      ++at_;
      if (peek().kind != Token::Kind::Ident || kCalls.count(peek().text) ||
          peek().text == "kis" || peek().text == "sik" || peek().text == "s" ||
          peek().text == "PE2" || peek().text == "let") {
        throw SyntaxError("expected variable name after 'let'", peek().pos);
      }
      res.let_name = peek().text;
      ++at_;
      expect_op("=");
    }
    res.ast = parse_expr(0);
    if (peek().kind != Token::Kind::End) {
      throw SyntaxError("unexpected trailing input '" + peek().text + "'",
                        peek().pos);
    }
    res.warnings = std::move(warnings_);
    return res;
  }

 private:
  // Left binding powers. Right-assoc ^/^^ recurse at their own power;
  // everything else at power + 1.
  static int infix_power(const std::string& op) {
    if (op == "<~" || op == ">~" || op == "=~") return 10;
    if (op == "kis" || op == "sik") return 20;
    if (op == "+" || op == "-") return 30;
    if (op == "*" || op == "/") return 40;
    if (op == "^" || op == "^^") return 50;
    return -1;
  }
  static constexpr int kPrefixPower = 60;

  const Token& peek() const { return toks_[at_]; }

  void expect_op(const std::string& text) {
    if (peek().kind != Token::Kind::Op || peek().text != text) {
      throw SyntaxError("expected '" + text + "'", peek().pos);
    }
    ++at_;
  }

  NodePtr parse_expr(int min_power) {
    NodePtr lhs = parse_prefix();
    for (;;) {
      const Token& t = peek();
      std::string op;
      if (t.kind == Token::Kind::Op) {
        op = t.text;
      } else if (t.kind == Token::Kind::Ident &&
                 (t.text == "kis" || t.text == "sik")) {
        op = t.text;
      } else {
        break;
      }
      int power = infix_power(op);
      if (power < 0 || power < min_power) break;
      ++at_;
      if ((op == "kis" || op == "sik") && lhs->kind == Node::Kind::Infix &&
          (lhs->name == "kis" || lhs->name == "sik") && !lhs->parenthesized) {
        warnings_.push_back(
            "kis/sik chain associates left; parenthesize to disambiguate");
      }
      bool right_assoc = (op == "^" || op == "^^");
      NodePtr rhs = parse_expr(right_assoc ? power : power + 1);
      lhs = make(Node{Node::Kind::Infix, 0, op, {lhs, rhs}, false});
    }
    return lhs;
  }

  NodePtr parse_prefix() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Op && t.text == "-") {
      ++at_;
      return make(
          Node{Node::Kind::Prefix, 0, "-", {parse_expr(kPrefixPower)}, false});
    }
    if (t.kind == Token::Kind::Ident && t.text == "s") {
      ++at_;
      // `s(4)` keeps call-like spelling but is the same prefix operator.
      return make(
          Node{Node::Kind::Prefix, 0, "s", {parse_expr(kPrefixPower)}, false});
    }
    return parse_atom();
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number:
        ++at_;
        return make(Node{Node::Kind::Number, t.value, "", {}, false});
      case Token::Kind::LParen: {
        ++at_;
        NodePtr inner = parse_expr(0);
        if (peek().kind != Token::Kind::RParen) {
          throw SyntaxError("expected ')'", peek().pos);
        }
        ++at_;
        Node grouped = *inner;
        grouped.parenthesized = true;
        return make(std::move(grouped));
      }
      case Token::Kind::Ident: {
        if (t.text == "PE2") {
          ++at_;
          return make(Node{Node::Kind::Const, 0, "PE2", {}, false});
        }
        if (kCalls.count(t.text)) {
          std::string name = t.text;
          std::size_t pos = t.pos;
          ++at_;
          if (peek().kind != Token::Kind::LParen) {
            throw SyntaxError("expected '(' after '" + name + "'", peek().pos);
          }
          ++at_;
          std::vector<NodePtr> args;
          if (peek().kind != Token::Kind::RParen) {
            args.push_back(parse_expr(0));
            while (peek().kind == Token::Kind::Comma) {
              ++at_;
              args.push_back(parse_expr(0));
            }
          }
          if (peek().kind != Token::Kind::RParen) {
            throw SyntaxError("expected ')'", peek().pos);
          }
          ++at_;
          check_arity(name, args.size(), pos);
          return make(Node{Node::Kind::Call, 0, name, std::move(args), false});
        }
        ++at_;
        return make(Node{Node::Kind::Var, 0, t.text, {}, false});
      }
      default:
        throw SyntaxError("expected an expression", t.pos);
    }
  }

  static void check_arity(const std::string& name, std::size_t got,
                          std::size_t pos) {
    static const std::map<std::string, std::size_t> arity = {
        {"cx", 2},   {"sm", 1},    {"alts", 1},  {"root", 2},
        {"log", 2},  {"hyper", 3}, {"iterl", 3}, {"iterr", 3},
        {"ack", 2},  {"ackp", 2},  {"zer", 2}};
    std::size_t want = arity.at(name);
    if (got != want) {
      throw SyntaxError(name + " takes " + std::to_string(want) +
                            " argument(s), got " + std::to_string(got),
                        pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::vector<std::string> warnings_;
};

}  // namespace

ParseResult parse(const std::string& text) {
  return Parser(lex(text)).run();
}

}  // namespace escher::expr
