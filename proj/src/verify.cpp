#include "t1kit/verify.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "t1kit/bsvp.hpp"
#include "t1kit/fregemin.hpp"
#include "t1kit/fregesim.hpp"
#include "t1kit/stdlib.hpp"

namespace t1kit {

namespace {

struct Recorder {
  SuiteResult& r;
  void check(bool ok, const std::string& msg) {
    ++r.checks;
    if (!ok) {
      ++r.failures;
      if (r.messages.size() < 10) r.messages.push_back(msg);
    }
  }
};

// Value budgets keyed by variable count (see the repo's test-budget notes).
std::size_t value_budget(std::size_t nvars) {
  if (nvars <= 2) return 6;
  if (nvars == 3) return 4;
  if (nvars == 4) return 3;
  return 2;
}

// Iterates f over all environments assigning each variable a string of
// length <= maxlen.
template <typename F>
void for_envs(const std::vector<std::string>& vars, std::size_t maxlen,
              F&& f) {
  std::vector<Bits> pool = strings_upto(maxlen);
  Env env;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == vars.size()) {
      f(env);
      return;
    }
    for (const Bits& v : pool) {
      env[vars[i]] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

Bits random_bits(std::mt19937_64& rng, std::size_t maxlen) {
  std::size_t n = rng() % (maxlen + 1);
  Bits s(n, '0');
  for (char& c : s) c = '0' + (rng() & 1);
  return s;
}

// --- axioms -----------------------------------------------------------------

std::vector<std::pair<std::string, FormulaPtr>> axiom_instances() {
  std::vector<std::pair<std::string, FormulaPtr>> out;
  for (const std::string& g : eqax_groups())
    for (const std::string& id : eqax_clause_ids(g))
      out.push_back({id, build_eqax(id, {}, {})});
  FnPtr catf = base_fn(BaseTag::Cat);
  out.push_back({"1d(cat)", build_eqax("1d", {}, {{"f", catf}})});
  FnPtr rev2 =
      lambda_fn({"u", "v"}, apply(catf, {var("v"), var("u")}), "rev2");
  for (const std::string& id : eqax_clause_ids("10"))
    out.push_back({id + "(rev2)", build_eqax(id, {}, {{"f", rev2}})});
  // Representative rank-0 CRN step functions.
  std::vector<std::pair<std::string, FnPtr>> hs = {
      {"cat", catf},
      {"zfst", lambda_fn({"u", "v"},
                         apply(base_fn(BaseTag::AllZero), {var("u")}), "zfst")},
      {"one", lambda_fn({"u", "v"}, apply(base_fn(BaseTag::One), {}), "one")},
  };
  for (const auto& [hn, h] : hs) {
    for (const std::string& id : eqax_clause_ids("11a"))
      out.push_back({id + "(" + hn + ")", build_eqax(id, {}, {{"h", h}})});
    for (const std::string& id : eqax_clause_ids("11b"))
      out.push_back({id + "(" + hn + ")", build_eqax(id, {}, {{"h", h}})});
  }
  {
    FnPtr idf = lambda_fn({"u"}, var("u"), "idf");
    FnPtr g1 = lambda_fn({"x", "z"}, var("z"), "g1");
    FnPtr h1 = lambda_fn({"x", "z", "vl", "vr"},
                         apply(catf, {var("vl"), var("vr")}), "h1");
    FnPtr g2 = lambda_fn(
        {"x", "z"}, apply(base_fn(BaseTag::AllZero), {var("z")}), "g2");
    FnPtr h2 = lambda_fn({"x", "z", "vl", "vr"}, var("vr"), "h2");
    for (const std::string& id : eqax_clause_ids("12")) {
      out.push_back({id + "(t1)",
                     build_eqax(id, {},
                                {{"g", g1}, {"h", h1}, {"hl", idf},
                                 {"hr", idf}})});
      out.push_back({id + "(t2)",
                     build_eqax(id, {},
                                {{"g", g2}, {"h", h2},
                                 {"hl", base_fn(BaseTag::LHalf)},
                                 {"hr", base_fn(BaseTag::RHalf)}})});
    }
  }
  return out;
}

void suite_axioms(Recorder& rec, std::uint64_t seed) {
  Evaluator ev;
  auto insts = axiom_instances();
  for (const auto& [id, f] : insts) {
    std::vector<std::string> vars = free_vars(f);
    std::size_t bad = 0;
    for_envs(vars, value_budget(vars.size()), [&](const Env& env) {
      if (!eval_formula(f, env, ev)) ++bad;
    });
    rec.check(bad == 0, "axiom " + id + ": " + std::to_string(bad) +
                            " exhaustive failures");
  }
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < 10000; ++i) {
    const auto& [id, f] = insts[i % insts.size()];
    Env env;
    for (const std::string& v : free_vars(f)) env[v] = random_bits(rng, 64);
    if (!eval_formula(f, env, ev)) {
      ++bad;
      if (first.empty()) first = id;
    }
  }
  rec.check(bad == 0, "axioms random: " + std::to_string(bad) +
                          " failures (first: " + first + ")");
}

// --- lengths ----------------------------------------------------------------

void suite_lengths(Recorder& rec, std::uint64_t seed) {
  const DefRegistry& reg = stdlib_registry();
  Evaluator ev;
  LengthCalc lc;
  std::mt19937_64 rng(seed);
  for (const std::string& name : reg.order) {
    FnPtr f = reg.get(name);
    std::size_t ar = static_cast<std::size_t>(fn_arity(f));
    std::size_t maxlen = ar <= 2 ? 5 : ar == 3 ? 3 : 2;
    std::vector<Bits> pool = strings_upto(maxlen);
    std::vector<Bits> args(ar);
    std::size_t bad = 0;
    auto run = [&](auto&& self, std::size_t i) -> void {
      if (i == ar) {
        std::vector<std::size_t> lens(ar);
        for (std::size_t j = 0; j < ar; ++j) lens[j] = args[j].size();
        if (ev.eval_fn(f, args).size() != lc.fn_len(f, lens)) ++bad;
        return;
      }
      for (const Bits& v : pool) {
        args[i] = v;
        self(self, i + 1);
      }
    };
    run(run, 0);
    // Exhaustive length vectors <= 5 with sampled values.
    std::vector<std::size_t> lens(ar);
    auto sweep = [&](auto&& self, std::size_t i) -> void {
      if (i == ar) {
        for (int s = 0; s < 2; ++s) {
          for (std::size_t j = 0; j < ar; ++j) {
            args[j].assign(lens[j], '0');
            for (char& c : args[j]) c = '0' + (rng() & 1);
          }
          if (ev.eval_fn(f, args).size() != lc.fn_len(f, lens)) ++bad;
        }
        return;
      }
      for (lens[i] = 0; lens[i] <= 5; ++lens[i]) self(self, i + 1);
    };
    sweep(sweep, 0);
    rec.check(bad == 0,
              "lengths " + name + ": " + std::to_string(bad) + " mismatches");
  }
}

// --- translation ------------------------------------------------------------

std::vector<std::pair<std::string, FormulaPtr>> equation_suite() {
  const DefRegistry& reg = stdlib_registry();
  auto b = [](BaseTag t) { return base_fn(t); };
  auto s = [&](const char* n) { return reg.get(n); };
  TermPtr x = var("x"), y = var("y"), z = var("z"), w = var("w");
  auto A = [&](FnPtr f, std::vector<TermPtr> a) {
    return apply(std::move(f), std::move(a));
  };
  TermPtr eps = A(b(BaseTag::Eps), {});
  TermPtr one = lit("1");
  auto C = [&](TermPtr a, TermPtr c) {
    return A(b(BaseTag::Cat), {std::move(a), std::move(c)});
  };
  std::vector<std::pair<std::string, FormulaPtr>> eqs;
  auto add = [&](const char* n, FormulaPtr f) { eqs.push_back({n, f}); };
  add("eps-cat", f_eq(C(eps, x), x));
  add("cat-eps", f_eq(C(x, eps), x));
  add("cat-assoc", f_eq(C(x, C(y, z)), C(C(x, y), z)));
  add("halves", f_eq(C(A(b(BaseTag::LHalf), {x}), A(b(BaseTag::RHalf), {x})),
                     x));
  add("allzero-allone",
      f_eq(A(b(BaseTag::AllZero), {x}),
           A(b(BaseTag::AllZero), {A(b(BaseTag::AllOne), {x})})));
  add("not-not", f_eq(A(s("notb"), {A(s("notb"), {x})}), x));
  add("rev-rev", f_eq(A(s("rev"), {A(s("rev"), {x})}), x));
  add("succ-even",
      f_eq(A(s("succ"), {C(x, lit("0"))}), C(C(lit("0"), x), one)));
  add("addn-comm", f_eq(A(s("addn"), {x, y}), A(s("addn"), {y, x})));
  add("carry-save3",
      f_eq(A(s("eqn"), {A(s("addn"), {A(s("cscar3"), {x, y, z}),
                                      A(s("csadd3"), {x, y, z})}),
                        A(s("addn"), {A(s("addn"), {x, y}), z})}),
           one));
  add("carry-save4",
      f_eq(A(s("eqn"), {A(s("addn"), {A(s("cscar"), {w, x, y, z}),
                                      A(s("csadd"), {w, x, y, z})}),
                        A(s("addn"), {A(s("addn"), {w, x}),
                                      A(s("addn"), {y, z})})}),
           one));
  add("andb-comm", f_eq(A(s("andb"), {x, y}), A(s("andb"), {y, x})));
  add("orb-zero", f_eq(A(s("orb"), {x, A(b(BaseTag::AllZero), {x})}), x));
  add("xorb-self",
      f_eq(A(s("xorb"), {x, x}), A(b(BaseTag::AllZero), {x})));
  add("impb-orb", f_eq(A(s("impb"), {x, y}),
                       A(s("orb"), {A(s("notb"), {x}), y})));
  add("lhalf-dup", f_eq(A(b(BaseTag::LHalf), {C(x, x)}), x));
  add("rchop-cat", f_eq(A(b(BaseTag::RChop), {C(x, y), y}), x));
  add("lchop-cat", f_eq(A(b(BaseTag::LChop), {x, C(x, y)}), y));
  add("ltn-succ", f_eq(A(s("ltn"), {x, A(s("succ"), {x})}), one));
  add("sum-allone",
      f_eq(A(s("eqn"), {A(s("sum"), {A(b(BaseTag::AllOne), {x})}),
                        A(s("len"), {x})}),
           one));
  add("not-fixpoint", f_eq(x, A(b(BaseTag::AllZero), {x})));  // falsifiable
  return eqs;
}

void suite_translation(Recorder& rec, std::uint64_t) {
  Evaluator ev;
  for (const auto& [name, f] : equation_suite()) {
    std::vector<std::string> vars = free_vars(f);
    std::size_t maxlen = vars.size() <= 2 ? 5 : vars.size() == 3 ? 3 : 2;
    std::size_t bad = 0;
    // Enumerate length vectors, translate once, then sweep values.
    std::vector<std::size_t> lens(vars.size());
    auto sweep = [&](auto&& self, std::size_t i) -> void {
      if (i < vars.size()) {
        for (lens[i] = 0; lens[i] <= maxlen; ++lens[i]) self(self, i + 1);
        return;
      }
      LenVec lv;
      for (std::size_t j = 0; j < vars.size(); ++j) lv[vars[j]] = lens[j];
      PropPtr p = translate(f, lv);
      Env env;
      auto values = [&](auto&& vs, std::size_t j) -> void {
        if (j == vars.size()) {
          if (eval_prop(p, env) != eval_formula(f, env, ev)) ++bad;
          return;
        }
        for (const Bits& v : all_strings(lens[j])) {
          env[vars[j]] = v;
          vs(vs, j + 1);
        }
      };
      values(values, 0);
    };
    sweep(sweep, 0);
    rec.check(bad == 0, "translation " + name + ": " + std::to_string(bad) +
                            " disagreements");
  }
  // translate(eps.x = x) is a tautology for every m <= 5.
  FormulaPtr epsx =
      f_eq(apply(base_fn(BaseTag::Cat),
                 {apply(base_fn(BaseTag::Eps), {}), var("x")}),
           var("x"));
  for (std::size_t m = 0; m <= 5; ++m)
    rec.check(taut_check(translate(epsx, {{"x", m}})),
              "translate(eps.x=x) not a tautology at m=" + std::to_string(m));
}

// --- stdlib-oracles ---------------------------------------------------------

void suite_stdlib_oracles(Recorder& rec, std::uint64_t) {
  const DefRegistry& reg = stdlib_registry();
  Evaluator ev;
  FnPtr addn = reg.get("addn"), ltn = reg.get("ltn"), eqn = reg.get("eqn");
  FnPtr succ = reg.get("succ"), sum = reg.get("sum"), len = reg.get("len");
  std::vector<Bits> pool = strings_upto(8);
  std::size_t badd = 0, blt = 0, beq = 0;
  for (const Bits& x : pool)
    for (const Bits& y : pool) {
      std::uint64_t vx = oracle::int_of(x), vy = oracle::int_of(y);
      if (oracle::int_of(ev.eval_fn(addn, {x, y})) != vx + vy) ++badd;
      if (oracle::int_of(ev.eval_fn(ltn, {x, y})) != (vx < vy ? 1u : 0u))
        ++blt;
      if (oracle::int_of(ev.eval_fn(eqn, {x, y})) != (vx == vy ? 1u : 0u))
        ++beq;
    }
  rec.check(badd == 0, "addn: " + std::to_string(badd) + " mismatches");
  rec.check(blt == 0, "ltn: " + std::to_string(blt) + " mismatches");
  rec.check(beq == 0, "eqn: " + std::to_string(beq) + " mismatches");
  std::size_t bsucc = 0, bsum = 0, blen = 0;
  for (const Bits& x : pool) {
    if (oracle::int_of(ev.eval_fn(succ, {x})) != oracle::int_of(x) + 1)
      ++bsucc;
    if (oracle::int_of(ev.eval_fn(sum, {x})) != oracle::popcount(x)) ++bsum;
    if (oracle::int_of(ev.eval_fn(len, {x})) != x.size()) ++blen;
  }
  rec.check(bsucc == 0, "succ: " + std::to_string(bsucc) + " mismatches");
  rec.check(bsum == 0, "sum: " + std::to_string(bsum) + " mismatches");
  rec.check(blen == 0, "len: " + std::to_string(blen) + " mismatches");
}

// --- php --------------------------------------------------------------------

void suite_php(Recorder& rec, std::uint64_t) {
  for (std::size_t n = 1; n <= 3; ++n)
    rec.check(php_exhaustive(stdlib_registry(), n),
              "php falsified at n=" + std::to_string(n));
}

// --- frege-sim --------------------------------------------------------------

// Regression lock for the NIND emission: line-count(m) <= C * m * base.
constexpr std::size_t kNindC = 6;

void suite_frege_sim(Recorder& rec, std::uint64_t, const std::string& data) {
  auto accept = [&](const FregeProof& p, const std::string& what) {
    CheckResult r = check_rich(p);
    rec.check(r.ok, what + ": " + r.reason);
  };
  // Axiom-group emission.
  {
    TermPtr x = var("x"), y = var("y"), z = var("z"), w = var("w");
    LenVec lv{{"x", 2}, {"y", 1}, {"z", 2}, {"w", 1},
              {"y1", 1}, {"u", 2}, {"v", 1}};
    for (const std::string& g : eqax_groups())
      for (const std::string& id : eqax_clause_ids(g))
        accept(emit_axiom_proof(id, {}, {}, lv), "axiom " + id);
    FnPtr catf = base_fn(BaseTag::Cat);
    accept(emit_axiom_proof("1d", {{"x1", x}, {"y1", y}, {"x2", z},
                                   {"y2", w}},
                            {{"f", catf}},
                            LenVec{{"x", 2}, {"y", 2}, {"z", 1}, {"w", 1}}),
           "axiom 1d");
    FnPtr rev2 =
        lambda_fn({"u", "v"}, apply(catf, {var("v"), var("u")}), "rev2");
    for (const std::string& id : eqax_clause_ids("10"))
      accept(emit_axiom_proof(id, {}, {{"f", rev2}}, lv), "axiom " + id);
    for (const std::string& id : eqax_clause_ids("11a"))
      accept(emit_axiom_proof(id, {}, {{"h", catf}}, lv), "axiom " + id);
    for (const std::string& id : eqax_clause_ids("11b"))
      accept(emit_axiom_proof(id, {}, {{"h", catf}}, lv), "axiom " + id);
    FnPtr idf = lambda_fn({"u"}, var("u"), "idf");
    FnPtr g12 = lambda_fn({"x", "z"}, var("z"), "g12");
    FnPtr h12 = lambda_fn({"x", "z", "vl", "vr"},
                          apply(catf, {var("vl"), var("vr")}), "h12");
    for (const std::string& id : eqax_clause_ids("12"))
      accept(emit_axiom_proof(
                 id, {}, {{"g", g12}, {"h", h12}, {"hl", idf}, {"hr", idf}},
                 lv),
             "axiom " + id);
  }
  // NIND on eps.x = x with the regression-locked size bound.
  {
    TermPtr x = var("x");
    FormulaPtr A = f_eq(apply(base_fn(BaseTag::Cat),
                              {apply(base_fn(BaseTag::Eps), {}), x}),
                        x);
    FormulaPtr base = substitute(A, "x", lit(""));
    FormulaPtr s0 = f_imp(
        A, substitute(A, "x", apply(base_fn(BaseTag::Cat), {x, lit("0")})));
    FormulaPtr s1 = f_imp(
        A, substitute(A, "x", apply(base_fn(BaseTag::Cat), {x, lit("1")})));
    std::size_t premise_max = 0;
    auto prover = [&premise_max](FormulaPtr f) {
      return PremiseProver([f, &premise_max](const LenVec& q) {
        FregeProof p = prove_clause(translate(f, q));
        premise_max = std::max(premise_max, p.lines.size());
        return p;
      });
    };
    for (std::size_t m = 1; m <= 12; ++m) {
      premise_max = 0;
      FregeProof p = emit_nind(prover(base), prover(s0), prover(s1), A, "x",
                               false, m, {});
      accept(p, "nind m=" + std::to_string(m));
      rec.check(p.goal->id == translate(A, LenVec{{"x", m}})->id,
                "nind goal mismatch at m=" + std::to_string(m));
      rec.check(p.lines.size() <= kNindC * m * premise_max,
                "nind size " + std::to_string(p.lines.size()) +
                    " exceeds bound at m=" + std::to_string(m) + " (base " +
                    std::to_string(premise_max) + ")");
    }
  }
  // TIND halving tree: m=3 has the figure's 5 nodes; m=8 at most 16.
  {
    TermPtr x = var("x"), z = var("z");
    FormulaPtr A = f_eq(apply(base_fn(BaseTag::Cat), {x, z}),
                        apply(base_fn(BaseTag::Cat), {x, z}));
    FnPtr idf = lambda_fn({"u"}, var("u"), "idf");
    FormulaPtr prem = f_imp(
        f_and(substitute_multi(A, {{"x", apply(base_fn(BaseTag::LHalf), {x})},
                                   {"z", apply(idf, {z})}}),
              substitute_multi(A, {{"x", apply(base_fn(BaseTag::RHalf), {x})},
                                   {"z", apply(idf, {z})}})),
        A);
    auto prover = [](FormulaPtr f) {
      return PremiseProver(
          [f](const LenVec& q) { return prove_clause(translate(f, q)); });
    };
    for (std::size_t m : {1, 3, 8}) {
      std::size_t nodes = 0;
      FregeProof p = emit_tind(prover(substitute(A, "x", lit(""))),
                               prover(substitute(A, "x", lit("0"))),
                               prover(substitute(A, "x", lit("1"))),
                               prover(prem), A, "x", "z", idf, idf, m, 2, {},
                               &nodes);
      accept(p, "tind m=" + std::to_string(m));
      if (m == 3) rec.check(nodes == 5, "tind m=3 tree has 5 nodes");
      if (m == 8) rec.check(nodes <= 16, "tind m=8 tree node bound");
    }
  }
  // Whole-proof translation of the corpus theorems.
  for (auto [file, lv] : std::vector<std::pair<std::string, LenVec>>{
           {"/corpus/eps_cat.t1p", {{"x", 3}}},
           {"/corpus/cat_assoc.t1p", {{"x", 2}, {"y", 1}, {"z", 3}}}}) {
    std::ifstream in(data + file);
    rec.check(in.good(), "missing corpus file " + file);
    if (!in.good()) continue;
    std::stringstream ss;
    ss << in.rdbuf();
    T1Proof pr = parse_proof(ss.str());
    rec.check(check_proof(pr).ok, file + " rejected by kernel");
    FregeProof fp = translate_t1_proof(pr, lv);
    accept(fp, file + " translation");
    rec.check(fp.goal->id == translate(pr.theorem, lv)->id,
              file + " translated goal mismatch");
    rec.check(taut_check(fp.goal, 20), file + " goal not a tautology");
  }
}

// --- encoding ---------------------------------------------------------------

void suite_encoding(Recorder& rec, std::uint64_t seed) {
  MinPtr g = parse_min("(p2 -> ((p10 -> F) -> p2))");
  const std::string golden =
      "10000000" "00000010" "11000000" "10000001" "10000010" "00001010"
      "11000010" "00100000" "01000010" "11000001" "00000010" "01000001"
      "01000000";
  Bits enc = encode_min(g, 3);
  rec.check(enc == golden, "golden encoding mismatch");
  rec.check(min_equal(decode_min(enc, 3), g), "golden decode mismatch");
  rec.check(encode_min(m_var(1), 3) == "00000001", "encode(p1,3) mismatch");
  rec.check(min_equal(decode_min(encode_min(m_top(), 3), 3), m_top()),
            "decode(encode(T)) mismatch");
  rec.check(formula_valid(golden, 3), "golden string not formula_valid");
  rec.check(!formula_valid(encode_min(m_var(1), 3) + encode_min(m_var(2), 3),
                           3),
            "adjacent variable blocks accepted");
  rec.check(formula_valid(encode_min(m_top(), 3), 3),
            "single T block rejected");
  std::mt19937_64 rng(seed);
  auto rnd = [&](auto&& self, int depth) -> MinPtr {
    switch (rng() % (depth > 3 ? 3 : 4)) {
      case 0: return m_var(1 + rng() % 12);
      case 1: return m_top();
      case 2: return m_bot();
      default: return m_imp(self(self, depth + 1), self(self, depth + 1));
    }
  };
  std::size_t bad = 0;
  for (int i = 0; i < 300; ++i) {
    MinPtr f = rnd(rnd, 0);
    std::size_t ell = min_ell(f);
    Bits e = encode_min(f, ell);
    if (!min_equal(decode_min(e, ell), f) || !formula_valid(e, ell)) ++bad;
  }
  rec.check(bad == 0, "round-trip failures: " + std::to_string(bad));
  // 50 seeded corruptions must be rejected.
  std::size_t tried = 0, rejected = 0;
  while (rejected < 50 && tried < 4000) {
    MinPtr f = rnd(rnd, 0);
    std::size_t ell = min_ell(f);
    Bits e = encode_min(f, ell);
    Bits c = e;
    // Structural corruption: truncate, splice, or flip a block prefix.
    switch (rng() % 3) {
      case 0: c = e.substr(std::size_t{1} << ell); break;
      case 1: c = e + e.substr(0, std::size_t{1} << ell); break;
      default: {
        std::size_t blk = (rng() % (e.size() >> ell)) << ell;
        c[blk] ^= 1;
        c[blk + 1] ^= 1;
        break;
      }
    }
    ++tried;
    if (c.empty() || !formula_valid(c, ell)) ++rejected;
  }
  rec.check(rejected >= 50, "only " + std::to_string(rejected) +
                                " corruptions rejected");
}

// --- soundness --------------------------------------------------------------

MinPtr random_min_formula(std::mt19937_64& rng, int depth) {
  switch (rng() % (depth >= 2 ? 3 : 5)) {
    case 0: return m_var(1 + rng() % 3);
    case 1: return m_top();
    case 2: return m_bot();
    default:
      return m_imp(random_min_formula(rng, depth + 1),
                   random_min_formula(rng, depth + 1));
  }
}

MinProof random_min_proof(std::mt19937_64& rng) {
  MinProof p;
  std::size_t target = 3 + rng() % 6;  // 3..8 lines
  while (p.lines.size() < target) {
    bool did_mp = false;
    if (!p.lines.empty() && (rng() & 1)) {
      // Find an applicable modus ponens pair.
      for (std::size_t j = 0; j < p.lines.size() && !did_mp; ++j) {
        const MinPtr& maj = p.lines[j].f;
        if (maj->kind != MinKind::Imp) continue;
        for (std::size_t i = 0; i < p.lines.size() && !did_mp; ++i)
          if (min_equal(p.lines[i].f, maj->a)) {
            p.lines.push_back({maj->b, i + 1, j + 1});
            did_mp = true;
          }
      }
    }
    if (did_mp) continue;
    std::size_t m = 1 + rng() % 4;
    MinPtr a = random_min_formula(rng, 1);
    MinPtr b = random_min_formula(rng, 1);
    MinPtr c = random_min_formula(rng, 2);
    MinPtr f;
    switch (m) {
      case 1: f = m_imp(a, m_imp(b, a)); break;
      case 2:
        f = m_imp(m_imp(a, m_imp(b, c)),
                  m_imp(m_imp(a, b), m_imp(a, c)));
        break;
      case 3:
        f = m_imp(m_imp(m_imp(b, m_bot()), m_imp(a, m_bot())), m_imp(a, b));
        break;
      default: f = m_top(); break;
    }
    p.lines.push_back({f, 0, m});
  }
  return p;
}

void suite_soundness(Recorder& rec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t bad_true = 0, bad_mut = 0;
  for (int t = 0; t < 200; ++t) {
    MinProof p = random_min_proof(rng);
    if (!check_min(p).ok) {
      rec.check(false, "generated proof rejected");
      continue;
    }
    std::size_t ell = 2;
    for (const MinLine& l : p.lines) ell = std::max(ell, min_ell(l.f));
    EncodedProof ep = encode_min_proof(p, ell);
    Bits last = min_f(ep.x, ep.y, ep.ell, ep.k);
    Bits top = encode_min(m_top(), ell);
    for (std::size_t v = 0; v < 8; ++v) {
      Bits vb = {char('0' + (v & 1)), char('0' + ((v >> 1) & 1)),
                 char('0' + ((v >> 2) & 1))};
      if (!min_true(vb, last, ell)) ++bad_true;
    }
    // Seeded y-bit mutations: F falls back to #T or stays this proof's
    // conclusion; either way TRUE holds everywhere.
    for (int s = 0; s < 12; ++s) {
      Bits y2 = ep.y;
      y2[rng() % y2.size()] ^= 1;
      Bits r = min_f(ep.x, y2, ep.ell, ep.k);
      if (r != top && r != last) ++bad_mut;
      Bits vb = {char('0' + (rng() & 1)), char('0' + (rng() & 1)),
                 char('0' + (rng() & 1))};
      if (!min_true(vb, r, ell)) ++bad_mut;
    }
  }
  rec.check(bad_true == 0,
            "TRUE failures: " + std::to_string(bad_true));
  rec.check(bad_mut == 0,
            "mutation probe failures: " + std::to_string(bad_mut));
}

// --- bsvp -------------------------------------------------------------------

std::vector<SentPtr> all_shapes(std::size_t n) {
  if (n == 1) return {s_leaf(false)};
  std::vector<SentPtr> out;
  for (std::size_t k = 1; k < n; ++k)
    for (const SentPtr& a : all_shapes(k))
      for (const SentPtr& b : all_shapes(n - k)) out.push_back(s_imp(a, b));
  return out;
}

SentPtr relabel(const SentPtr& s, std::uint64_t bits, std::size_t& i) {
  if (s->leaf) return s_leaf((bits >> i++) & 1);
  SentPtr a = relabel(s->a, bits, i);
  SentPtr b = relabel(s->b, bits, i);
  return s_imp(std::move(a), std::move(b));
}

void check_game(Recorder& rec, const SentPtr& s, std::size_t& bad,
                std::string& first) {
  bool want = naive_eval(s);
  PadResult pr = pad_sentence(s);
  GameResult r = play_game(pr.tree);
  bool ok = (r.winner == Player::Pebbler) == want && r.invariants_ok &&
            r.trace.size() <= pr.d && r.mistakes.size() == 1;
  (void)rec;
  if (!ok) {
    ++bad;
    if (first.empty())
      first = print_sentence(s) + (r.invariants_ok ? "" : " [" + r.audit + "]");
  }
}

void suite_bsvp(Recorder& rec, std::uint64_t seed) {
  std::size_t bad = 0, games = 0;
  std::string first;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const SentPtr& sh : all_shapes(n))
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::size_t i = 0;
        check_game(rec, relabel(sh, bits, i), bad, first);
        ++games;
      }
  std::mt19937_64 rng(seed);
  auto rnd_shape = [&](auto&& self, std::size_t n) -> SentPtr {
    if (n == 1) return s_leaf(false);
    std::size_t k = 1 + rng() % (n - 1);
    return s_imp(self(self, k), self(self, n - k));
  };
  // Deterministic sample up to 15 leaves, up to 128 labelings per shape.
  for (std::size_t n = 8; n <= 15; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      SentPtr sh = rnd_shape(rnd_shape, n);
      for (int lab = 0; lab < 128; ++lab) {
        std::size_t i = 0;
        check_game(rec, relabel(sh, rng(), i), bad, first);
        ++games;
      }
    }
  // 500 random 31-leaf sentences.
  for (int rep = 0; rep < 500; ++rep) {
    SentPtr sh = rnd_shape(rnd_shape, 31);
    std::size_t i = 0;
    check_game(rec, relabel(sh, rng(), i), bad, first);
    ++games;
  }
  rec.check(bad == 0, std::to_string(bad) + "/" + std::to_string(games) +
                          " games wrong (first: " + first + ")");
  // Opening positions per the distinguished-leaf formulas.
  {
    SentPtr s3 = parse_sentence("(T -> (T -> T))");
    GameResult r = play_game(s3);
    rec.check(!r.trace.empty() && r.trace[0].L == 1 && r.trace[0].C == 2 &&
                  r.trace[0].R == 3,
              "d=1 opening leaves wrong");
    SentPtr s31 = s_leaf(true);
    for (int i = 0; i < 30; ++i) s31 = s_imp(s_leaf(true), s31);
    GameResult r2 = play_game(s31);
    rec.check(!r2.trace.empty() && r2.trace[0].L == 8 &&
                  r2.trace[0].C == 16 && r2.trace[0].R == 24,
              "d=4 opening leaves wrong");
  }
  rec.check(leaf_rank(8) == 3 && leaf_rank(16) == 4 && leaf_rank(7) == 0,
            "leaf_rank spot checks");
}

// --- triplets ---------------------------------------------------------------

void suite_triplets(Recorder& rec, std::uint64_t) {
  std::vector<Triplet> all;
  for (int m = 0; m < 8; ++m)
    all.push_back({bool(m & 4), bool(m & 2), bool(m & 1)});
  std::size_t bad = 0;
  for (const Triplet& t : all)
    for (const Triplet& t1 : all)
      for (const Triplet& t2 : all) {
        if (!t.unscarred()) continue;
        if (!(triplet_imp(t, triplet_comp(t1, t2)) ==
              triplet_comp(triplet_imp(t, t1), t2)))
          ++bad;
        if (!(triplet_imp(triplet_comp(t1, t2), t) ==
              triplet_comp(triplet_imp(t1, t), t2)))
          ++bad;
      }
  rec.check(bad == 0,
            "composition identities: " + std::to_string(bad) + " failures");
  rec.check(triplet_imp({1, 1, 1}, {1, 0, 0}) == Triplet{1, 0, 0},
            "imp spot check");
  std::size_t bad2 = 0;
  for (const Triplet& a : all)
    if (!(triplet_comp(a, {1, 1, 0}) == Triplet{a.c, a.tt, a.tf})) ++bad2;
  rec.check(bad2 == 0, "identity-scar composition");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"axioms",  "lengths",  "translation", "stdlib-oracles", "php",
          "frege-sim", "encoding", "soundness",   "bsvp",           "triplets"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      const std::string& data_dir) {
  SuiteResult r;
  r.name = name;
  Recorder rec{r};
  if (name == "axioms") suite_axioms(rec, seed);
  else if (name == "lengths") suite_lengths(rec, seed);
  else if (name == "translation") suite_translation(rec, seed);
  else if (name == "stdlib-oracles") suite_stdlib_oracles(rec, seed);
  else if (name == "php") suite_php(rec, seed);
  else if (name == "frege-sim") suite_frege_sim(rec, seed, data_dir);
  else if (name == "encoding") suite_encoding(rec, seed);
  else if (name == "soundness") suite_soundness(rec, seed);
  else if (name == "bsvp") suite_bsvp(rec, seed);
  else if (name == "triplets") suite_triplets(rec, seed);
  else throw std::invalid_argument("unknown suite: " + name);
  return r;
}

std::string format_suite(const SuiteResult& r) {
  std::ostringstream os;
  os << "suite " << r.name << ": " << r.checks << " checks, " << r.failures
     << " failures\n";
  for (const std::string& m : r.messages) os << "  " << m << "\n";
  return os.str();
}

}  // namespace t1kit
