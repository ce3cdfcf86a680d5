#include "escher/laws.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "escher/errors.hpp"

namespace escher::laws {
namespace {

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64) and binding generators.
// ---------------------------------------------------------------------------

struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rat(long long lo, long long hi, long long max_den) {
    return Rational(range(lo, hi), range(1, max_den));
  }

  Rational nonzero_rat(long long lo, long long hi, long long max_den) {
    for (;;) {
      Rational q = rat(lo, hi, max_den);
      if (q != 0) return q;
    }
  }

  Rational pos_rat(long long hi, long long max_den) {
    return Rational(range(1, hi), range(1, max_den));
  }

  // Random Escherian number: rational real part, stigma mark with odds 1/2.
  CxE esch() {
    ExactScalar re{rat(-12, 12, 3)};
    ExactScalar im{Rational(range(0, 1))};
    return CxE(re, im);
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Binding access and formatting.
// ---------------------------------------------------------------------------

const BindingValue& need(const Bindings& b, const std::string& key) {
  auto it = b.find(key);
  if (it == b.end()) throw DomainError("law binding missing: " + key);
  return it->second;
}

long long get_int(const Bindings& b, const std::string& key) {
  const BindingValue& v = need(b, key);
  if (const auto* n = std::get_if<long long>(&v)) return *n;
  throw DomainError("law binding " + key + " must be an integer");
}

Rational get_rat(const Bindings& b, const std::string& key) {
  const BindingValue& v = need(b, key);
  if (const auto* n = std::get_if<long long>(&v)) return Rational(*n);
  if (const auto* q = std::get_if<Rational>(&v)) return *q;
  throw DomainError("law binding " + key + " must be rational");
}

CxE get_cxe(const Bindings& b, const std::string& key) {
  const BindingValue& v = need(b, key);
  if (const auto* n = std::get_if<long long>(&v)) return CxE(*n);
  if (const auto* q = std::get_if<Rational>(&v)) return CxE(*q);
  return std::get<CxE>(v);
}

std::string binding_str(const BindingValue& v) {
  if (const auto* n = std::get_if<long long>(&v)) return std::to_string(*n);
  if (const auto* q = std::get_if<Rational>(&v)) return q->str();
  return std::get<CxE>(v).str();
}

std::string bindings_str(const Bindings& b) {
  std::string out;
  for (const auto& [k, v] : b) {
    if (!out.empty()) out += ", ";
    out += k + "=" + binding_str(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mutation-aware rank-0/rank-1 environment.
// ---------------------------------------------------------------------------

struct Env {
  const LawConfig& cfg;

  CxE add(const CxE& x, const CxE& y) const {
    if (cfg.mutation == Mutation::NaiveAdd) {
      return CxE::raw(x.re() + y.re(), x.im() + y.im());
    }
    return escher::add(x, y);
  }

  CxE sub(const CxE& x, const CxE& y) const { return add(x, negate(y)); }

  ValueSet kis(const CxE& x, const CxE& y) const {
    if (cfg.mutation == Mutation::None) {
      return escher::kis(x, y, cfg.prec);
    }
    PseudoCmp c = pseudo_cmp(x, y, cfg.prec);
    CxE w = (c == PseudoCmp::PseudoLess) ? y : x;
    if (c == PseudoCmp::PseudoEqual && cfg.mutation == Mutation::SymmetricTie) {
      // Mutated tie rule: always take the operand of lower imaginary class,
      // erasing the operand-position information.
      w = (scalar_cmp(x.im(), y.im(), cfg.prec) == Cmp::Greater) ? y : x;
    }
    CxE alt = cfg.mutation == Mutation::NaiveAdd
                  ? CxE::raw(w.re(), w.im() + ExactScalar(1))
                  : stigma(w);
    return ValueSet{add(w, CxE(1)), {add(alt, CxE(1))}};
  }
};

// ---------------------------------------------------------------------------
// Multi-valued results: a principal value plus the set of reachable values.
// Addition of sets is elementwise over all branch choices; an outer kis is
// applied to the principals and contributes its own two-valued set.
// ---------------------------------------------------------------------------

struct MV {
  CxE principal;
  std::vector<CxE> members;
};

MV mv_single(const CxE& v) { return MV{v, {v}}; }

MV mv_from_vs(const ValueSet& vs) { return MV{vs.principal, vs.members()}; }

void mv_insert(std::vector<CxE>& out, const CxE& v) {
  for (const auto& m : out)
    if (m == v) return;
  out.push_back(v);
}

MV mv_add(const MV& a, const MV& b, const Env& env) {
  MV out;
  out.principal = env.add(a.principal, b.principal);
  for (const auto& x : a.members)
    for (const auto& y : b.members) mv_insert(out.members, env.add(x, y));
  return out;
}

MV mv_sub_single(const MV& a, const CxE& b, const Env& env) {
  MV out;
  out.principal = env.sub(a.principal, b);
  for (const auto& x : a.members) mv_insert(out.members, env.sub(x, b));
  return out;
}

MV mv_kis(const MV& a, const MV& b, const Env& env) {
  return mv_from_vs(env.kis(a.principal, b.principal));
}

bool mv_eq(const MV& a, const MV& b) {
  if (a.principal != b.principal) return false;
  if (a.members.size() != b.members.size()) return false;
  for (const auto& x : a.members) {
    bool found = false;
    for (const auto& y : b.members)
      if (x == y) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

std::string mv_str(const MV& a) {
  std::string out = "{ ";
  for (size_t i = 0; i < a.members.size(); ++i) {
    if (i) out += ", ";
    out += a.members[i].str();
  }
  return out + " }";
}

// ---------------------------------------------------------------------------
// Shared comparison plumbing. Evaluators return std::nullopt on success or a
// short lhs/rhs description of the failure.
// ---------------------------------------------------------------------------

using Verdict = std::optional<std::string>;

Verdict verdict_num(const Numeric& lhs, const Numeric& rhs, bool numeric_mode,
                    const LawConfig& cfg) {
  bool ok = numeric_mode
                ? lhs.close_to(rhs, cfg.float_bits, cfg.rel_tol_exp10)
                : lhs.cmp(rhs, cfg.float_bits) == Cmp::Equal;
  if (ok) return std::nullopt;
  return "lhs=" + lhs.str() + " rhs=" + rhs.str();
}

Verdict verdict_cxe(const CxE& lhs, const CxE& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs=" + lhs.str() + " rhs=" + rhs.str();
}

Verdict verdict_mv(const MV& lhs, const MV& rhs) {
  if (mv_eq(lhs, rhs)) return std::nullopt;
  return "lhs=" + mv_str(lhs) + " rhs=" + mv_str(rhs);
}

// ---------------------------------------------------------------------------
// Rank-parametrized evaluators over the numeric tower.
// ---------------------------------------------------------------------------

Numeric ap(int m, const Numeric& a, const Numeric& b, const LawConfig& cfg) {
  return hyper_apply(HyperRank(m), a, b, HyperConfig{cfg.float_bits});
}

// 14.x: a1 o a2 o ... o ak = ((a1 o ak) o' k) rinv' 2, for a progression
// with constant step/ratio s at rank m.
Verdict eval_14(int m, const Bindings& b, const LawConfig& cfg) {
  Numeric a1{get_rat(b, "a1")};
  Numeric s{get_rat(b, "step")};
  long long k = get_int(b, "k");
  if (k < 1 || k > 16) throw DomainError("14.x needs k in 1..16");
  HyperConfig hc{cfg.float_bits};
  std::vector<Numeric> terms{a1};
  for (long long i = 1; i < k; ++i)
    terms.push_back(ap(m, terms.back(), s, cfg));
  Numeric lhs = terms[0];
  for (long long i = 1; i < k; ++i) lhs = ap(m, lhs, terms[i], cfg);
  Numeric closed = ap(m + 1, ap(m, a1, terms[k - 1], cfg), Numeric(k), cfg);
  Numeric rhs = hyper_rinv(HyperRank(m + 1), closed, Numeric(2), hc);
  return verdict_num(lhs, rhs, m == 2, cfg);
}

// 15.x: (a o' b) o (c o' b) = (a o c) o' b.
Verdict eval_15_num(int m, const Bindings& b, const LawConfig& cfg) {
  Numeric a{get_rat(b, "a")}, bb{get_rat(b, "b")}, c{get_rat(b, "c")};
  Numeric lhs = ap(m, ap(m + 1, a, bb, cfg), ap(m + 1, c, bb, cfg), cfg);
  Numeric rhs = ap(m + 1, ap(m, a, c, cfg), bb, cfg);
  return verdict_num(lhs, rhs, m == 2, cfg);
}

// 15.3: a+b kis c+b = (a kis c) + b, on E, set-wise.
Verdict eval_15_rank0(const Bindings& b, const LawConfig& cfg) {
  Env env{cfg};
  CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b"), c = get_cxe(b, "c");
  MV lhs = mv_from_vs(env.kis(env.add(a, bb), env.add(c, bb)));
  MV rhs = mv_add(mv_from_vs(env.kis(a, c)), mv_single(bb), env);
  return verdict_mv(lhs, rhs);
}

// 16.x: (b o c) rinv a = (b rinv a) o c.
Verdict eval_16(int m, const Bindings& b, const LawConfig& cfg) {
  Numeric a{get_rat(b, "a")}, bb{get_rat(b, "b")}, c{get_rat(b, "c")};
  HyperConfig hc{cfg.float_bits};
  Numeric lhs = hyper_rinv(HyperRank(m), ap(m, bb, c, cfg), a, hc);
  Numeric rhs = ap(m, hyper_rinv(HyperRank(m), bb, a, hc), c, cfg);
  return verdict_num(lhs, rhs, m == 3, cfg);
}

// 21.x: (a o'' b) o a = a o' ((a o'' (b-1)) + (a linv' a)).
Verdict eval_21(int m, const Bindings& b, const LawConfig& cfg) {
  Numeric a{get_rat(b, "a")};
  long long n = get_int(b, "b");
  HyperConfig hc{cfg.float_bits};
  Numeric lhs = ap(m, ap(m + 2, a, Numeric(n), cfg), a, cfg);
  Numeric inner = ap(m + 2, a, Numeric(n - 1), cfg)
                      .add(hyper_linv(HyperRank(m + 1), a, a, hc),
                           cfg.float_bits);
  Numeric rhs = ap(m + 1, a, inner, cfg);
  return verdict_num(lhs, rhs, m == 2, cfg);
}

// 21.3: a*b kis a = a + (a*(b-1) kis a-a), on E, set-wise.
Verdict eval_21_rank0(const Bindings& b, const LawConfig& cfg) {
  Env env{cfg};
  CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b");
  MV lhs = mv_from_vs(env.kis(mul(a, bb), a));
  CxE shifted = mul(a, env.sub(bb, CxE(1)));
  MV rhs = mv_add(mv_single(a),
                  mv_from_vs(env.kis(shifted, env.sub(a, a))), env);
  return verdict_mv(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

struct LawDef {
  std::string id;
  std::vector<int> ranks;  // empty for fixed-rank laws
  std::function<bool(int)> numeric_mode;
  std::function<Verdict(int, const Bindings&, const LawConfig&)> eval;
  std::function<Bindings(int, Rng&)> gen;
};

Bindings gen_14(int m, Rng& r) {
  Bindings b;
  if (m == 1) {
    b["a1"] = r.rat(-12, 12, 4);
    b["step"] = r.rat(-8, 8, 4);
  } else {
    b["a1"] = r.pos_rat(8, 4);
    b["step"] = r.pos_rat(8, 4);  // ratio
  }
  b["k"] = r.range(1, 6);
  return b;
}

bool tied(const CxE& x, const CxE& y) {
  return pseudo_cmp(x, y) == PseudoCmp::PseudoEqual;
}

Bindings gen_15(int m, Rng& r) {
  Bindings b;
  if (m == 0) {
    // Generic-operand law: avoid pseudoequal collisions of the kis operands.
    CxE a = r.esch(), c = r.esch();
    while (tied(a, c)) c = r.esch();
    b["a"] = a;
    b["b"] = r.esch();
    b["c"] = c;
  } else if (m == 1) {
    b["a"] = r.rat(-12, 12, 4);
    b["b"] = r.rat(-12, 12, 4);
    b["c"] = r.rat(-12, 12, 4);
  } else {
    b["a"] = r.pos_rat(10, 4);
    b["c"] = r.pos_rat(10, 4);
    b["b"] = r.rat(-6, 6, 4);
  }
  return b;
}

Bindings gen_16(int m, Rng& r) {
  Bindings b;
  if (m == 3) {
    b["a"] = r.pos_rat(5, 2);
    b["b"] = r.pos_rat(10, 4);
    b["c"] = r.rat(-3, 3, 3);
  } else {
    b["a"] = m == 1 ? r.rat(-12, 12, 4) : r.nonzero_rat(-12, 12, 4);
    b["b"] = r.rat(-12, 12, 4);
    b["c"] = r.rat(-12, 12, 4);
  }
  return b;
}

Bindings gen_21(int m, Rng& r) {
  Bindings b;
  if (m == 1) {
    b["a"] = r.nonzero_rat(-8, 8, 4);
    b["b"] = r.range(-2, 6);
  } else {
    // Keep tetration heights small and the base above 1.
    b["a"] = Rational(r.range(5, 10), 4);
    b["b"] = r.range(1, 4);
  }
  return b;
}

std::vector<LawDef> build_registry() {
  std::vector<LawDef> regs;
  auto fixed = [&](std::string id, bool numeric,
                   std::function<Verdict(const Bindings&, const LawConfig&)> ev,
                   std::function<Bindings(Rng&)> g) {
    LawDef d;
    d.id = std::move(id);
    d.numeric_mode = [numeric](int) { return numeric; };
    d.eval = [ev = std::move(ev)](int, const Bindings& b,
                                  const LawConfig& cfg) { return ev(b, cfg); };
    d.gen = [g = std::move(g)](int, Rng& r) { return g(r); };
    regs.push_back(std::move(d));
  };

  // --- 14: progression sum / product -------------------------------------
  regs.push_back(LawDef{
      "14.0",
      {1, 2},
      [](int m) { return m == 2; },
      [](int m, const Bindings& b, const LawConfig& cfg) {
        return eval_14(m, b, cfg);
      },
      [](int m, Rng& r) { return gen_14(m, r); }});
  fixed(
      "14.1", false,
      [](const Bindings& b, const LawConfig& cfg) { return eval_14(1, b, cfg); },
      [](Rng& r) { return gen_14(1, r); });
  fixed(
      "14.2", true,
      [](const Bindings& b, const LawConfig& cfg) { return eval_14(2, b, cfg); },
      [](Rng& r) { return gen_14(2, r); });

  // --- 15: distributivity family ------------------------------------------
  regs.push_back(LawDef{
      "15.0",
      {0, 1, 2},
      [](int m) { return m == 2; },
      [](int m, const Bindings& b, const LawConfig& cfg) {
        return m == 0 ? eval_15_rank0(b, cfg) : eval_15_num(m, b, cfg);
      },
      [](int m, Rng& r) { return gen_15(m, r); }});
  fixed(
      "15.1", true,
      [](const Bindings& b, const LawConfig& cfg) {
        return eval_15_num(2, b, cfg);
      },
      [](Rng& r) { return gen_15(2, r); });
  fixed(
      "15.2", false,
      [](const Bindings& b, const LawConfig& cfg) {
        return eval_15_num(1, b, cfg);
      },
      [](Rng& r) { return gen_15(1, r); });
  fixed(
      "15.3", false,
      [](const Bindings& b, const LawConfig& cfg) {
        return eval_15_rank0(b, cfg);
      },
      [](Rng& r) { return gen_15(0, r); });

  // --- 16: right-inverse commutation --------------------------------------
  regs.push_back(LawDef{
      "16.0",
      {1, 2, 3},
      [](int m) { return m == 3; },
      [](int m, const Bindings& b, const LawConfig& cfg) {
        return eval_16(m, b, cfg);
      },
      [](int m, Rng& r) { return gen_16(m, r); }});
  fixed(
      "16.1", true,
      [](const Bindings& b, const LawConfig& cfg) { return eval_16(3, b, cfg); },
      [](Rng& r) { return gen_16(3, r); });
  fixed(
      "16.2", false,
      [](const Bindings& b, const LawConfig& cfg) { return eval_16(2, b, cfg); },
      [](Rng& r) { return gen_16(2, r); });
  // 16.3: the rank-1 instance stated on E, stigma operands included:
  // (b + c) - a = (b - a) + c.
  fixed(
      "16.3", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        Env env{cfg};
        CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b"), c = get_cxe(b, "c");
        return verdict_cxe(env.sub(env.add(bb, c), a),
                           env.add(env.sub(bb, a), c));
      },
      [](Rng& r) {
        return Bindings{{"a", r.esch()}, {"b", r.esch()}, {"c", r.esch()}};
      });

  // --- 17: binomial product ------------------------------------------------
  // 17.1: (a*b)^(c+d) = a^c * a^d * b^c * b^d.
  fixed(
      "17.1", true,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        unsigned bits = cfg.float_bits;
        Numeric a{get_rat(b, "a")}, bb{get_rat(b, "b")};
        Numeric c{get_rat(b, "c")}, d{get_rat(b, "d")};
        Numeric lhs = a.mul(bb, bits).pow(c.add(d, bits), bits);
        Numeric rhs = a.pow(c, bits)
                          .mul(a.pow(d, bits), bits)
                          .mul(bb.pow(c, bits), bits)
                          .mul(bb.pow(d, bits), bits);
        return verdict_num(lhs, rhs, true, cfg);
      },
      [](Rng& r) {
        return Bindings{{"a", r.pos_rat(8, 3)},
                        {"b", r.pos_rat(8, 3)},
                        {"c", r.rat(-3, 3, 3)},
                        {"d", r.rat(-3, 3, 3)}};
      });
  // 17.2: (a+b)*(c+d) = a*c + a*d + b*c + b*d, exact.
  fixed(
      "17.2", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        (void)cfg;
        Rational a = get_rat(b, "a"), bb = get_rat(b, "b");
        Rational c = get_rat(b, "c"), d = get_rat(b, "d");
        Rational lhs = (a + bb) * (c + d);
        Rational rhs = a * c + a * d + bb * c + bb * d;
        if (lhs == rhs) return std::nullopt;
        return "lhs=" + lhs.str() + " rhs=" + rhs.str();
      },
      [](Rng& r) {
        return Bindings{{"a", r.rat(-12, 12, 4)},
                        {"b", r.rat(-12, 12, 4)},
                        {"c", r.rat(-12, 12, 4)},
                        {"d", r.rat(-12, 12, 4)}};
      });
  // 17.3: (a kis b) + (c kis d) = (a+c kis a+d) kis (b+c kis b+d), set-wise.
  fixed(
      "17.3", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        Env env{cfg};
        CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b");
        CxE c = get_cxe(b, "c"), d = get_cxe(b, "d");
        MV lhs = mv_add(mv_from_vs(env.kis(a, bb)),
                        mv_from_vs(env.kis(c, d)), env);
        MV i1 = mv_from_vs(env.kis(env.add(a, c), env.add(a, d)));
        MV i2 = mv_from_vs(env.kis(env.add(bb, c), env.add(bb, d)));
        return verdict_mv(lhs, mv_kis(i1, i2, env));
      },
      [](Rng& r) {
        CxE a = r.esch(), bb = r.esch(), c = r.esch(), d = r.esch();
        while (tied(a, bb)) bb = r.esch();
        while (tied(c, d)) d = r.esch();
        return Bindings{{"a", a}, {"b", bb}, {"c", c}, {"d", d}};
      });

  // --- 18: left-inverse distribution ---------------------------------------
  // 18.1: log_a(b*c) = log_a b + log_a c.
  fixed(
      "18.1", true,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        unsigned bits = cfg.float_bits;
        Numeric a{get_rat(b, "a")}, bb{get_rat(b, "b")}, c{get_rat(b, "c")};
        Numeric lhs = bb.mul(c, bits).log_base(a, bits);
        Numeric rhs = bb.log_base(a, bits).add(c.log_base(a, bits), bits);
        return verdict_num(lhs, rhs, true, cfg);
      },
      [](Rng& r) {
        Rational a = r.pos_rat(8, 3);
        while (a == 1) a = r.pos_rat(8, 3);
        return Bindings{
            {"a", a}, {"b", r.pos_rat(10, 3)}, {"c", r.pos_rat(10, 3)}};
      });
  // 18.2: (b+c)/a = b/a + c/a, exact.
  fixed(
      "18.2", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        (void)cfg;
        Rational a = get_rat(b, "a"), bb = get_rat(b, "b"), c = get_rat(b, "c");
        Rational lhs = (bb + c) / a;
        Rational rhs = bb / a + c / a;
        if (lhs == rhs) return std::nullopt;
        return "lhs=" + lhs.str() + " rhs=" + rhs.str();
      },
      [](Rng& r) {
        return Bindings{{"a", r.nonzero_rat(-12, 12, 4)},
                        {"b", r.rat(-12, 12, 4)},
                        {"c", r.rat(-12, 12, 4)}};
      });
  // 18.3: (b kis c) - a = (b-a) kis (c-a), set-wise on E.
  fixed(
      "18.3", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        Env env{cfg};
        CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b"), c = get_cxe(b, "c");
        MV lhs = mv_sub_single(mv_from_vs(env.kis(bb, c)), a, env);
        MV rhs = mv_kis(mv_single(env.sub(bb, a)), mv_single(env.sub(c, a)),
                        env);
        return verdict_mv(lhs, rhs);
      },
      [](Rng& r) {
        CxE bb = r.esch(), c = r.esch();
        while (tied(bb, c)) c = r.esch();
        return Bindings{{"a", r.esch()}, {"b", bb}, {"c", c}};
      });

  // --- 19: left-inverse commutation ----------------------------------------
  // 19.1: log_a(b^c) = c * log_a b.
  fixed(
      "19.1", true,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        unsigned bits = cfg.float_bits;
        Numeric a{get_rat(b, "a")}, bb{get_rat(b, "b")}, c{get_rat(b, "c")};
        Numeric lhs = bb.pow(c, bits).log_base(a, bits);
        Numeric rhs = c.mul(bb.log_base(a, bits), bits);
        return verdict_num(lhs, rhs, true, cfg);
      },
      [](Rng& r) {
        Rational a = r.pos_rat(8, 3);
        while (a == 1) a = r.pos_rat(8, 3);
        return Bindings{
            {"a", a}, {"b", r.pos_rat(10, 3)}, {"c", r.rat(-4, 4, 3)}};
      });
  // 19.2: (b*c)/a = c*(b/a), exact.
  fixed(
      "19.2", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        (void)cfg;
        Rational a = get_rat(b, "a"), bb = get_rat(b, "b"), c = get_rat(b, "c");
        Rational lhs = (bb * c) / a;
        Rational rhs = c * (bb / a);
        if (lhs == rhs) return std::nullopt;
        return "lhs=" + lhs.str() + " rhs=" + rhs.str();
      },
      [](Rng& r) {
        return Bindings{{"a", r.nonzero_rat(-12, 12, 4)},
                        {"b", r.rat(-12, 12, 4)},
                        {"c", r.rat(-12, 12, 4)}};
      });
  // 19.3: (b+c) - a = c + (b-a), on E.
  fixed(
      "19.3", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        Env env{cfg};
        CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b"), c = get_cxe(b, "c");
        return verdict_cxe(env.sub(env.add(bb, c), a),
                           env.add(c, env.sub(bb, a)));
      },
      [](Rng& r) {
        return Bindings{{"a", r.esch()}, {"b", r.esch()}, {"c", r.esch()}};
      });

  // --- 20: fraction sum ------------------------------------------------------
  // 20.1: a^(1/b) * c^(1/d) = (a^d * c^b)^(1/(b*d)).
  fixed(
      "20.1", true,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        unsigned bits = cfg.float_bits;
        Numeric a{get_rat(b, "a")}, c{get_rat(b, "c")};
        Numeric bb{get_rat(b, "b")}, d{get_rat(b, "d")};
        Numeric lhs = a.root(bb, bits).mul(c.root(d, bits), bits);
        Numeric rhs =
            a.pow(d, bits).mul(c.pow(bb, bits), bits).root(bb.mul(d, bits),
                                                           bits);
        return verdict_num(lhs, rhs, true, cfg);
      },
      [](Rng& r) {
        return Bindings{{"a", r.pos_rat(10, 3)},
                        {"b", r.range(1, 5)},
                        {"c", r.pos_rat(10, 3)},
                        {"d", r.range(1, 5)}};
      });
  // 20.2: a/b + c/d = (a*d + c*b)/(b*d), exact.
  fixed(
      "20.2", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        (void)cfg;
        Rational a = get_rat(b, "a"), bb = get_rat(b, "b");
        Rational c = get_rat(b, "c"), d = get_rat(b, "d");
        Rational lhs = a / bb + c / d;
        Rational rhs = (a * d + c * bb) / (bb * d);
        if (lhs == rhs) return std::nullopt;
        return "lhs=" + lhs.str() + " rhs=" + rhs.str();
      },
      [](Rng& r) {
        return Bindings{{"a", r.rat(-12, 12, 4)},
                        {"b", r.nonzero_rat(-12, 12, 4)},
                        {"c", r.rat(-12, 12, 4)},
                        {"d", r.nonzero_rat(-12, 12, 4)}};
      });
  // 20.3: (a-b) kis (c-d) = ((a+d) kis (b+c)) - (b+d), set-wise on E.
  fixed(
      "20.3", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        Env env{cfg};
        CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b");
        CxE c = get_cxe(b, "c"), d = get_cxe(b, "d");
        MV lhs = mv_kis(mv_single(env.sub(a, bb)), mv_single(env.sub(c, d)),
                        env);
        MV rhs = mv_sub_single(
            mv_kis(mv_single(env.add(a, d)), mv_single(env.add(bb, c)), env),
            env.add(bb, d), env);
        return verdict_mv(lhs, rhs);
      },
      [](Rng& r) {
        CxE a = r.esch(), bb = r.esch(), c = r.esch(), d = r.esch();
        while (tied(sub(a, bb), sub(c, d))) d = r.esch();
        return Bindings{{"a", a}, {"b", bb}, {"c", c}, {"d", d}};
      });
  // 20.3S: the same shift with sik in place of kis; single-valued.
  fixed(
      "20.3S", false,
      [](const Bindings& b, const LawConfig& cfg) -> Verdict {
        Env env{cfg};
        CxE a = get_cxe(b, "a"), bb = get_cxe(b, "b");
        CxE c = get_cxe(b, "c"), d = get_cxe(b, "d");
        CxE lhs = sik(env.sub(a, bb), env.sub(c, d), cfg.prec);
        CxE rhs = env.sub(sik(env.add(a, d), env.add(bb, c), cfg.prec),
                          env.add(bb, d));
        return verdict_cxe(lhs, rhs);
      },
      [](Rng& r) {
        CxE a = r.esch(), bb = r.esch(), c = r.esch(), d = r.esch();
        while (tied(sub(a, bb), sub(c, d))) d = r.esch();
        return Bindings{{"a", a}, {"b", bb}, {"c", c}, {"d", d}};
      });

  // --- 21: mixed-rank recursion ----------------------------------------------
  regs.push_back(LawDef{
      "21.0",
      {1, 2},
      [](int m) { return m == 2; },
      [](int m, const Bindings& b, const LawConfig& cfg) {
        return eval_21(m, b, cfg);
      },
      [](int m, Rng& r) { return gen_21(m, r); }});
  fixed(
      "21.1", true,
      [](const Bindings& b, const LawConfig& cfg) { return eval_21(2, b, cfg); },
      [](Rng& r) { return gen_21(2, r); });
  fixed(
      "21.2", false,
      [](const Bindings& b, const LawConfig& cfg) { return eval_21(1, b, cfg); },
      [](Rng& r) { return gen_21(1, r); });
  fixed(
      "21.3", false,
      [](const Bindings& b, const LawConfig& cfg) {
        return eval_21_rank0(b, cfg);
      },
      [](Rng& r) {
        // Redraw both operands: for a = 0 every b ties (a*b = 0 ~ a), so
        // resampling b alone would never terminate.
        CxE a = r.esch(), bb = r.esch();
        while (tied(mul(a, bb), a)) {
          a = r.esch();
          bb = r.esch();
        }
        return Bindings{{"a", a}, {"b", bb}};
      });
  // 21.3S: the pseudoequal stress case a = s0, b = 0; passes only under the
  // first-operand tie rule.
  fixed(
      "21.3S", false,
      [](const Bindings& b, const LawConfig& cfg) {
        return eval_21_rank0(b, cfg);
      },
      [](Rng&) {
        return Bindings{{"a", stigma(CxE(0))}, {"b", CxE(0)}};
      });

  return regs;
}

const std::vector<LawDef>& registry() {
  static const std::vector<LawDef> regs = build_registry();
  return regs;
}

const LawDef& find_law(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw UnknownLaw("no such law: " + id);
}

LawReport fuzz_one(const LawDef& def, std::optional<int> rank,
                   std::uint64_t trials, std::uint64_t seed,
                   const LawConfig& cfg) {
  LawReport rep;
  rep.id = def.id;
  rep.rank = rank;
  rep.trials = trials;
  int m = rank.value_or(-1);
  rep.exact_mode = !def.numeric_mode(m);
  Rng rng{seed ^ fnv1a(def.id) ^
          (rank ? 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(*rank + 1)
                : 0)};
  constexpr size_t kWitnessCap = 5;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Bindings b = def.gen(m, rng);
    Verdict v = def.eval(m, b, cfg);
    if (v && rep.failures.size() < kWitnessCap) {
      rep.failures.push_back(bindings_str(b) + ": " + *v);
    } else if (v) {
      rep.failures.push_back("...");
      break;
    }
  }
  return rep;
}

}  // namespace

std::string LawReport::line() const {
  std::ostringstream os;
  os << "law " << id;
  if (rank) os << " m=" << *rank;
  os << " trials=" << trials << " mode=" << (exact_mode ? "exact" : "numeric")
     << " " << (pass() ? "PASS" : "FAIL");
  if (!pass()) os << " (" << failures.size() << " witnesses)";
  return os.str();
}

LawReport check_law(const std::string& id, const Bindings& bindings,
                    const LawConfig& cfg) {
  const LawDef& def = find_law(id);
  LawReport rep;
  rep.id = id;
  rep.trials = 1;
  int m = -1;
  if (!def.ranks.empty()) {
    m = static_cast<int>(get_int(bindings, "m"));
    if (std::find(def.ranks.begin(), def.ranks.end(), m) == def.ranks.end()) {
      throw UnknownLaw("law " + id + " is not valid at rank m=" +
                       std::to_string(m));
    }
    rep.rank = m;
  }
  rep.exact_mode = !def.numeric_mode(m);
  if (Verdict v = def.eval(m, bindings, cfg)) {
    rep.failures.push_back(bindings_str(bindings) + ": " + *v);
  }
  return rep;
}

LawReport fuzz_law(const std::string& id, std::uint64_t trials,
                   std::uint64_t seed, const LawConfig& cfg) {
  const LawDef& def = find_law(id);
  if (def.ranks.empty()) return fuzz_one(def, std::nullopt, trials, seed, cfg);
  // Rank-parametrized schema: fuzz every rank in the window, aggregate.
  LawReport agg;
  agg.id = id;
  agg.trials = 0;
  agg.exact_mode = true;
  for (int m : def.ranks) {
    LawReport r = fuzz_one(def, m, trials, seed, cfg);
    agg.trials += r.trials;
    agg.exact_mode = agg.exact_mode && r.exact_mode;
    for (auto& f : r.failures)
      agg.failures.push_back("m=" + std::to_string(m) + " " + f);
  }
  return agg;
}

std::vector<LawReport> run_suite(std::uint64_t seed,
                                 std::uint64_t trials_per_law,
                                 const LawConfig& cfg) {
  std::vector<LawReport> out;
  for (const auto& def : registry()) {
    if (def.ranks.empty()) {
      out.push_back(fuzz_one(def, std::nullopt, trials_per_law, seed, cfg));
    } else {
      for (int m : def.ranks)
        out.push_back(fuzz_one(def, m, trials_per_law, seed, cfg));
    }
  }
  return out;
}

std::vector<std::string> registered_law_ids() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.id);
  return out;
}

bool is_registered(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return true;
  return false;
}

}  // namespace escher::laws
