#include <doctest.h>

#include <string>

#include "escher/eval.hpp"
#include "escher/expr.hpp"

using namespace escher;
using namespace escher::eval;
using namespace escher::expr;

namespace {

std::string run(const std::string& text, Session& s) {
  return eval_line(text, s).printed;
}

std::string run(const std::string& text) {
  Session s;
  return eval_line(text, s).printed;
}

}  // namespace

TEST_CASE("addition binds tighter than kis") {
  ParseResult p = parse("7 - 3 kis 2");
  REQUIRE(p.ast);
  CHECK(p.ast->kind == Node::Kind::Infix);
  CHECK(p.ast->name == "kis");
  REQUIRE(p.ast->args.size() == 2);
  CHECK(p.ast->args[0]->kind == Node::Kind::Infix);
  CHECK(p.ast->args[0]->name == "-");
  CHECK(run("7 - 3 kis 2") == "5");  // (7 - 3) kis 2
}

TEST_CASE("prefix stigma binds tightest") {
  CHECK(run("s 3 + s 4") == "7");
  CHECK(run("s3 + s4") == "7");   // glued form splits in the lexer
  CHECK(run("s(3 + 4)") == "s(7)");
  CHECK(run("- s 2") == "s(-2)");
}

TEST_CASE("kis chains associate left and warn") {
  Session s;
  EvalOutcome out = eval_line("2 kis 3 kis 4", s);
  CHECK(out.printed == run("(2 kis 3) kis 4"));
  REQUIRE(!out.warnings.empty());
  CHECK(out.warnings[0].find("parenthes") != std::string::npos);
  CHECK(eval_line("(2 kis 3) kis 4", s).warnings.empty());
}

TEST_CASE("sik and divided sets") {
  CHECK(run("5 sik 7") == "s(4)");
  CHECK(run("5 sik 2") == "4");
  CHECK(run("alts(s6 / 3)") == "{ cx(2; 1/3), cx(2; 1), cx(2; 5/3) }");
  CHECK(run("s6 / 3") == "cx(2; 1/3)");
  CHECK(run("6 / 4") == "3/2");
}

TEST_CASE("power tower and precedence") {
  CHECK(run("2 ^ 3 ^ 2") == "512");      // right-associative
  CHECK(run("2 + 3 * 4") == "14");
  CHECK(run("(2 + 3) * 4") == "20");
  CHECK(run("2 ^^ 3") == run("hyper(4, 2, 3)"));
}

TEST_CASE("comparisons") {
  CHECK(run("5 >~ 2") == "true");
  CHECK(run("s3 =~ 3") == "true");
  CHECK(run("s3 =~ 4") == "false");
  CHECK_THROWS_AS(parse("s3 = 3"), SyntaxError);  // '=' only binds in let
  CHECK(run("cx(0; 1/4) <~ 0") == "true");
}

TEST_CASE("let bindings") {
  Session s;
  CHECK(run("let x = s 4 + 1", s) == "x = s(5)");
  CHECK(run("x + x", s) == "10");
  CHECK_THROWS_AS(parse("let 3 = 4"), SyntaxError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("2 + * 3");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("cx(1, 2, 3)"), SyntaxError);
  CHECK_THROWS_AS(parse("(1 + 2"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
}

TEST_CASE("canonical prints parse back to the same value") {
  Session s;
  const char* exprs[] = {
      "s(0)", "cx(2; 1/3)", "cx(-5/2; 1)", "PE2", "1 + 1*PE2",
      "cx(3 - 1*PE2; 7/4)", "-7/3", "0",
  };
  for (const char* e : exprs) {
    CAPTURE(e);
    std::string once = run(e, s);
    CHECK(run(once, s) == once);
  }
}

TEST_CASE("randomized print/parse round trip") {
  Session s;
  std::uint64_t state = 42;
  auto next = [&] {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  for (int i = 0; i < 200; ++i) {
    long long re_num = static_cast<long long>(next() % 41) - 20;
    long long re_den = 1 + static_cast<long long>(next() % 4);
    long long t_num = static_cast<long long>(next() % 8);
    std::string e = "cx(" + std::to_string(re_num) + "/" +
                    std::to_string(re_den) + "; " + std::to_string(t_num) +
                    "/4)";
    std::string once = run(e, s);
    CAPTURE(e);
    CHECK(run(once, s) == once);
  }
}

TEST_CASE("unicode output mode") {
  Session s;
  s.unicode = true;
  CHECK(run("s 4", s) == "\xCF\x82(4)");
}

TEST_CASE("calls into the tower") {
  CHECK(run("hyper(2, 7, 3)") == "21");
  CHECK(run("ack(3, 4)") == "125");
  CHECK(run("ackp(3, 5)") == "32");
  CHECK(run("zer(3, 3)") == "5");
  CHECK(run("iterl(1, 7, 2)") == "21");
  CHECK(run("iterr(2, 7, 1)") == "49");
  CHECK(run("root(16, 2)").substr(0, 1) == "4");
  CHECK(run("log(2, 8)").substr(0, 1) == "3");
}
