#include "escher/eval.hpp"

#include <limits>

#include "escher/arith.hpp"
#include "escher/errors.hpp"
#include "escher/rank0.hpp"

namespace escher::eval {
namespace {

bool is_approx(const Value& v) {
  const auto* n = std::get_if<Numeric>(&v.v);
  return n && !n->is_exact();
}

CxE to_cxe(const Value& v, const char* what) {
  if (const auto* x = std::get_if<CxE>(&v.v)) return *x;
  if (const auto* n = std::get_if<Numeric>(&v.v)) {
    if (n->is_exact()) return CxE(n->rational());
    throw DomainError(std::string(what) + " needs an exact value");
  }
  throw DomainError(std::string(what) + " cannot take a comparison result");
}

Numeric to_num(const Value& v, const Session& s, const char* what) {
  if (const auto* n = std::get_if<Numeric>(&v.v)) return *n;
  if (const auto* x = std::get_if<CxE>(&v.v)) {
    if (!x->is_real())
      throw NotReal(std::string(what) + " needs a real operand");
    if (x->re().is_rational()) return Numeric(x->re().rational_value());
    // P-valued real: collapse to a float at the working precision.
    auto [lo, hi] = x->re().enclosure(digits_for_bits(s.float_bits));
    // Numeric::to_float converts the rational losslessly (boost 1.74's
    // direct rational-to-mpfr constructor rounds through a narrow
    // intermediate).
    FloatPrecisionGuard guard(s.float_bits);
    BigFloat mid =
        (Numeric(lo).to_float(s.float_bits) + Numeric(hi).to_float(s.float_bits)) / 2;
    return Numeric(BigFloat(mid), s.float_bits);
  }
  throw DomainError(std::string(what) + " cannot take a comparison result");
}

long long to_ll(const Value& v, const Session& s, const char* what) {
  Numeric n = to_num(v, s, what);
  if (!n.is_integer())
    throw DomainError(std::string(what) + " needs an integer");
  Integer i = n.integer();
  if (i > std::numeric_limits<long long>::max() ||
      i < std::numeric_limits<long long>::min())
    throw ResourceLimit(std::string(what) + " argument out of range");
  return static_cast<long long>(i);
}

Value wrap(CxE x) { return Value{std::move(x), {}, false}; }
Value wrap(Numeric n) { return Value{std::move(n), {}, false}; }
Value wrap(const ValueSet& vs) { return Value{vs.principal, vs.alternates, false}; }

Rational rat_int_pow(const Rational& base, long long e) {
  if (e < 0 && base == 0) throw ZeroDivisor("0 to a negative power");
  Rational out = 1;
  Rational b = e < 0 ? Rational(denominator(base), numerator(base)) : base;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

constexpr long long kMaxExactExponent = 1LL << 16;

Value eval_pow(const Value& lv, const Value& rv, const Session& s) {
  // Exact path: real base, bounded integer exponent.
  if (!is_approx(lv) && !is_approx(rv)) {
    CxE base = to_cxe(lv, "^");
    CxE expo = to_cxe(rv, "^");
    if (!base.is_real()) throw DomainError("^ needs a real base");
    if (expo.is_real() && expo.re().is_rational()) {
      Rational eq = expo.re().rational_value();
      if (denominator(eq) == 1) {
        Integer ei = numerator(eq);
        if (ei >= -kMaxExactExponent && ei <= kMaxExactExponent) {
          long long e = static_cast<long long>(ei);
          if (e >= 0) return wrap(CxE(base.re().pow(
              static_cast<unsigned long long>(e))));
          if (base.re().is_rational())
            return wrap(CxE(rat_int_pow(base.re().rational_value(), e)));
        }
      }
    }
  }
  Numeric b = to_num(lv, s, "^"), e = to_num(rv, s, "^");
  return wrap(b.pow(e, s.float_bits));
}

Value eval_div(const Value& lv, const Value& rv, const Session& s) {
  if (!is_approx(lv) && !is_approx(rv)) {
    CxE x = to_cxe(lv, "/");
    CxE q = to_cxe(rv, "/");
    if (q.is_real() && q.re().is_rational()) {
      Rational qr = q.re().rational_value();
      if (qr == 0) throw ZeroDivisor("division by zero");
      return wrap(div_by_rational(x, qr));
    }
  }
  Numeric a = to_num(lv, s, "/"), b = to_num(rv, s, "/");
  return wrap(a.div(b, s.float_bits));
}

Value eval_infix(const expr::Node& node, const Session& s) {
  const std::string& op = node.name;
  Value lv = evaluate(*node.args[0], s);
  Value rv = evaluate(*node.args[1], s);
  unsigned bits = s.float_bits;

  if (op == "<~" || op == ">~" || op == "=~") {
    PseudoCmp c = pseudo_cmp(to_cxe(lv, "comparison"),
                             to_cxe(rv, "comparison"), s.prec);
    bool out = (op == "<~" && c == PseudoCmp::PseudoLess) ||
               (op == ">~" && c == PseudoCmp::PseudoGreater) ||
               (op == "=~" && c == PseudoCmp::PseudoEqual);
    return Value{out, {}, false};
  }
  if (op == "kis") return wrap(kis(to_cxe(lv, "kis"), to_cxe(rv, "kis"), s.prec));
  if (op == "sik") return wrap(sik(to_cxe(lv, "sik"), to_cxe(rv, "sik"), s.prec));
  if (op == "^") return eval_pow(lv, rv, s);
  if (op == "^^") {
    Numeric a = to_num(lv, s, "^^"), b = to_num(rv, s, "^^");
    return wrap(hyper_apply(HyperRank(4), a, b, HyperConfig{bits}));
  }
  if (op == "/") return eval_div(lv, rv, s);

  // +, -, *: exact on CxE whenever both operands are exact.
  if (!is_approx(lv) && !is_approx(rv)) {
    CxE x = to_cxe(lv, op.c_str()), y = to_cxe(rv, op.c_str());
    if (op == "+") return wrap(add(x, y));
    if (op == "-") return wrap(sub(x, y));
    return wrap(mul(x, y));
  }
  Numeric a = to_num(lv, s, op.c_str()), b = to_num(rv, s, op.c_str());
  if (op == "+") return wrap(a.add(b, bits));
  if (op == "-") return wrap(a.sub(b, bits));
  return wrap(a.mul(b, bits));
}

Value eval_call(const expr::Node& node, const Session& s) {
  const std::string& f = node.name;
  std::vector<Value> args;
  for (const auto& a : node.args) args.push_back(evaluate(*a, s));
  unsigned bits = s.float_bits;
  HyperConfig hc{bits};

  if (f == "alts") {
    Value out = args[0];
    out.show_set = true;
    return out;
  }
  if (f == "cx") {
    CxE re = to_cxe(args[0], "cx"), t = to_cxe(args[1], "cx");
    if (!re.is_real() || !t.is_real())
      throw DomainError("cx needs real scalar components");
    return wrap(CxE(re.re(), t.re(), s.prec));
  }
  if (f == "sm") return wrap(stigmamodulo(to_cxe(args[0], "sm")));
  if (f == "zer")
    return wrap(zeration_reference(to_cxe(args[0], "zer"),
                                   to_cxe(args[1], "zer"), s.prec));
  if (f == "root")
    return wrap(to_num(args[0], s, "root").root(to_num(args[1], s, "root"),
                                                bits));
  if (f == "log")
    return wrap(
        to_num(args[1], s, "log").log_base(to_num(args[0], s, "log"), bits));
  if (f == "hyper") {
    long long m = to_ll(args[0], s, "hyper rank");
    return wrap(hyper_apply(HyperRank(static_cast<int>(m)),
                            to_num(args[1], s, "hyper"),
                            to_num(args[2], s, "hyper"), hc));
  }
  if (f == "iterl" || f == "iterr") {
    long long m = to_ll(args[0], s, "iteration rank");
    Numeric a = to_num(args[1], s, f.c_str());
    long long n = to_ll(args[2], s, "iteration count");
    HyperRank rank(static_cast<int>(m));
    return wrap(f == "iterl" ? iter_left(rank, a, n, hc)
                             : iter_right(rank, a, n, hc));
  }
  // ack / ackp
  long long m = to_ll(args[0], s, f.c_str());
  long long n = to_ll(args[1], s, f.c_str());
  if (m < 0 || n < 0) throw DomainError(f + " needs nonnegative arguments");
  Integer out = f == "ack"
                    ? ackermann(static_cast<std::uint64_t>(m),
                                static_cast<std::uint64_t>(n), s.budget)
                    : ackermann_mod(static_cast<std::uint64_t>(m),
                                    static_cast<std::uint64_t>(n), s.budget);
  return wrap(Numeric(Rational(out)));
}

std::string cx_form(const CxE& x) {
  return "cx(" + x.re().str() + "; " + x.im().str() + ")";
}

}  // namespace

Value evaluate(const expr::Node& node, const Session& s) {
  switch (node.kind) {
    case expr::Node::Kind::Number:
      return wrap(CxE(Rational(node.value)));
    case expr::Node::Kind::Const:
      return wrap(CxE(ExactScalar::pe2()));
    case expr::Node::Kind::Var: {
      auto it = s.vars.find(node.name);
      if (it == s.vars.end())
        throw DomainError("unbound variable '" + node.name + "'");
      return it->second;
    }
    case expr::Node::Kind::Prefix: {
      Value v = evaluate(*node.args[0], s);
      if (node.name == "s") return wrap(stigma(to_cxe(v, "s")));
      if (is_approx(v)) return wrap(std::get<Numeric>(v.v).neg());
      return wrap(negate(to_cxe(v, "-")));
    }
    case expr::Node::Kind::Infix:
      return eval_infix(node, s);
    case expr::Node::Kind::Call:
      return eval_call(node, s);
  }
  throw DomainError("malformed expression");
}

std::string print_value(const Value& value, const Session& s) {
  std::string out;
  if (const auto* b = std::get_if<bool>(&value.v)) {
    out = *b ? "true" : "false";
  } else if (const auto* n = std::get_if<Numeric>(&value.v)) {
    out = n->str(s.display_digits);
  } else {
    const CxE& p = std::get<CxE>(value.v);
    if (!value.show_set) {
      out = p.str();
    } else {
      std::vector<CxE> members{p};
      members.insert(members.end(), value.alternates.begin(),
                     value.alternates.end());
      bool uniform_cx = false;
      for (const auto& m : members) uniform_cx |= !m.is_escherian();
      out = "{ ";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += uniform_cx ? cx_form(members[i]) : members[i].str();
      }
      out += " }";
    }
  }
  if (s.unicode) {
    std::string mapped;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == 's' && i + 1 < out.size() && out[i + 1] == '(') {
        mapped += "\xCF\x82";  // U+03C2 final sigma
      } else {
        mapped += out[i];
      }
    }
    out = mapped;
  }
  return out;
}

EvalOutcome eval_line(const std::string& text, Session& session) {
  expr::ParseResult parsed = expr::parse(text);
  Value v = evaluate(*parsed.ast, session);
  EvalOutcome out;
  out.warnings = parsed.warnings;
  if (!parsed.let_name.empty()) {
    session.vars[parsed.let_name] = v;
    out.printed = parsed.let_name + " = " + print_value(v, session);
  } else {
    out.printed = print_value(v, session);
  }
  return out;
}

}  // namespace escher::eval
