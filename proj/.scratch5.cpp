// Scratch: smoke-test the rich-Frege emitters.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "t1kit/fregesim.hpp"
#include "t1kit/stdlib.hpp"

using namespace t1kit;

static int fails = 0;
#define CHECK(cond)                                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::cout << "FAIL " << __LINE__ << ": " #cond << "\n";           \
      ++fails;                                                          \
    }                                                                   \
  } while (0)

static void check_ok(const FregeProof& p, const char* what) {
  CheckResult r = check_rich(p);
  if (!r.ok) {
    std::cout << "FAIL check_rich(" << what << "): line " << r.line << ": "
              << r.reason << "\n";
    ++fails;
  }
  if (!taut_check(p.goal, 16)) {
    std::cout << "FAIL taut(" << what << ")\n";
    ++fails;
  }
}

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto lap = [&](const char* what) {
    auto t1 = clock::now();
    std::cout << "  [" << what << " "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                     .count()
              << "ms]\n";
    t0 = t1;
  };

  // 1. taut prover on assorted tautologies
  {
    PropPtr a = p_atom("a", 1, 1), b = p_atom("b", 1, 1), c = p_atom("c", 1, 1);
    std::vector<PropPtr> goals = {
        p_imp(a, a),
        p_or(a, p_not(a)),
        p_iff(p_not(p_and(a, b)), p_or(p_not(a), p_not(b))),
        p_imp(p_imp(a, b), p_imp(p_imp(b, c), p_imp(a, c))),
        p_iff(p_imp(a, b), p_or(p_not(a), b)),
        p_true(),
        p_imp(p_false(), p_and(a, p_not(a))),
        p_iff(p_iff(a, b), p_iff(b, a)),
    };
    for (const PropPtr& g : goals) {
      FregeProof p = prove_taut_frege(g);
      check_ok(p, print_prop(g).c_str());
    }
    bool threw = false;
    try {
      prove_taut_frege(p_and(a, b));
    } catch (const std::runtime_error&) {
      threw = true;
    }
    CHECK(threw);
    lap("taut");
  }

  // 2. emit_axiom_proof across every group at small lengths
  {
    TermPtr x = var("x"), y = var("y"), z = var("z"), w = var("w");
    LenVec lv{{"x", 2}, {"y", 1}, {"z", 2}, {"w", 1},
              {"y1", 1}, {"u", 2}, {"v", 1}};
    std::size_t total = 0, maxlines = 0;
    std::string maxid;
    for (const std::string& g : eqax_groups()) {
      for (const std::string& id : eqax_clause_ids(g)) {
        FregeProof p = emit_axiom_proof(id, {}, {}, lv);
        check_ok(p, id.c_str());
        total += p.lines.size();
        if (p.lines.size() > maxlines) maxlines = p.lines.size(), maxid = id;
      }
    }
    // parameterized groups
    FnPtr cat = base_fn(BaseTag::Cat);
    {
      FregeProof p = emit_axiom_proof(
          "1d", {{"x1", x}, {"y1", y}, {"x2", z}, {"y2", w}}, {{"f", cat}},
          LenVec{{"x", 2}, {"y", 2}, {"z", 1}, {"w", 1}});
      check_ok(p, "1d");
    }
    {
      FnPtr rev2 = lambda_fn({"u", "v"}, apply(cat, {var("v"), var("u")}));
      for (const std::string& id : eqax_clause_ids("10"))
        check_ok(emit_axiom_proof(id, {}, {{"f", rev2}}, lv), id.c_str());
    }
    {
      FnPtr h = cat;
      for (const std::string& id : eqax_clause_ids("11a"))
        check_ok(emit_axiom_proof(id, {}, {{"h", h}}, lv), id.c_str());
      for (const std::string& id : eqax_clause_ids("11b"))
        check_ok(emit_axiom_proof(id, {}, {{"h", h}}, lv), id.c_str());
    }
    {
      FnPtr idf = lambda_fn({"u"}, var("u"));
      FnPtr g = lambda_fn({"x", "z"}, var("z"));
      FnPtr h = lambda_fn({"x", "z", "vl", "vr"},
                          apply(cat, {var("vl"), var("vr")}));
      for (const std::string& id : eqax_clause_ids("12"))
        check_ok(emit_axiom_proof(
                     id, {}, {{"g", g}, {"h", h}, {"hl", idf}, {"hr", idf}},
                     lv),
                 id.c_str());
    }
    std::cout << "axiom proofs: total lines " << total << ", max " << maxlines
              << " (" << maxid << ")\n";
    lap("axioms");
  }

  // 3. emit_nind for eps.x = x (both orientations)
  {
    TermPtr x = var("x");
    FormulaPtr A = f_eq(apply(base_fn(BaseTag::Cat),
                              {apply(base_fn(BaseTag::Eps), {}), x}),
                        x);
    FormulaPtr step0r = f_imp(A, substitute(A, "x",
        apply(base_fn(BaseTag::Cat), {x, lit("0")})));
    FormulaPtr step1r = f_imp(A, substitute(A, "x",
        apply(base_fn(BaseTag::Cat), {x, lit("1")})));
    FormulaPtr base = substitute(A, "x", lit(""));
    auto prover = [](FormulaPtr f) {
      return PremiseProver([f](const LenVec& q) {
        return prove_clause(translate(f, q));
      });
    };
    for (std::size_t m : {0, 1, 2, 3, 4, 8, 12}) {
      FregeProof p = emit_nind(prover(base), prover(step0r), prover(step1r),
                               A, "x", false, m, {});
      CheckResult r = check_rich(p);
      CHECK(r.ok);
      if (!r.ok)
        std::cout << "  nindr m=" << m << " line " << r.line << ": "
                  << r.reason << "\n";
      CHECK(p.goal->id == translate(A, LenVec{{"x", m}})->id);
      std::cout << "nindr m=" << m << ": " << p.lines.size() << " lines\n";
    }
    // left orientation: A -> A[0x], A -> A[1x]
    FormulaPtr step0l = f_imp(A, substitute(A, "x",
        apply(base_fn(BaseTag::Cat), {lit("0"), x})));
    FormulaPtr step1l = f_imp(A, substitute(A, "x",
        apply(base_fn(BaseTag::Cat), {lit("1"), x})));
    for (std::size_t m : {0, 1, 3}) {
      FregeProof p = emit_nind(prover(base), prover(step0l), prover(step1l),
                               A, "x", true, m, {});
      CheckResult r = check_rich(p);
      CHECK(r.ok);
      if (!r.ok)
        std::cout << "  nindl m=" << m << " line " << r.line << ": "
                  << r.reason << "\n";
    }
    lap("nind");
  }

  // 4. emit_tind on a toy reflexive goal
  {
    TermPtr x = var("x"), z = var("z");
    FormulaPtr A = f_eq(apply(base_fn(BaseTag::Cat), {x, z}),
                        apply(base_fn(BaseTag::Cat), {x, z}));
    FnPtr idf = lambda_fn({"u"}, var("u"));
    FormulaPtr prem = f_imp(
        f_and(substitute_multi(A, {{"x", apply(base_fn(BaseTag::LHalf), {x})},
                                   {"z", apply(idf, {z})}}),
              substitute_multi(A, {{"x", apply(base_fn(BaseTag::RHalf), {x})},
                                   {"z", apply(idf, {z})}})),
        A);
    auto prover = [](FormulaPtr f) {
      return PremiseProver([f](const LenVec& q) {
        return prove_clause(translate(f, q));
      });
    };
    for (std::size_t m : {1, 3, 8}) {
      std::size_t nodes = 0;
      FregeProof p = emit_tind(
          prover(substitute(A, "x", lit(""))),
          prover(substitute(A, "x", lit("0"))),
          prover(substitute(A, "x", lit("1"))), prover(prem), A, "x", "z",
          idf, idf, m, 2, {}, &nodes);
      CheckResult r = check_rich(p);
      CHECK(r.ok);
      if (!r.ok)
        std::cout << "  tind m=" << m << " line " << r.line << ": " << r.reason
                  << "\n";
      std::cout << "tind m=" << m << ": nodes=" << nodes << " lines="
                << p.lines.size() << "\n";
      if (m == 3) CHECK(nodes == 5);
      if (m == 8) CHECK(nodes <= 16);
    }
    lap("tind");
  }

  // 5. translate the corpus proofs
  {
    for (auto [file, lv] : std::vector<std::pair<std::string, LenVec>>{
             {"data/corpus/eps_cat.t1p", {{"x", 3}}},
             {"data/corpus/cat_assoc.t1p", {{"x", 2}, {"y", 1}, {"z", 3}}}}) {
      std::ifstream in(file);
      std::stringstream ss;
      ss << in.rdbuf();
      T1Proof pr = parse_proof(ss.str());
      CHECK(check_proof(pr).ok);
      FregeProof fp = translate_t1_proof(pr, lv);
      CheckResult r = check_rich(fp);
      CHECK(r.ok);
      if (!r.ok)
        std::cout << "  " << file << " line " << r.line << ": " << r.reason
                  << "\n";
      CHECK(fp.goal->id == translate(pr.theorem, lv)->id);
      CHECK(taut_check(fp.goal, 20));
      std::cout << file << ": " << fp.lines.size() << " frege lines\n";
    }
    lap("translate");
  }

  // 6. print/parse round trip
  {
    PropPtr a = p_atom("a", 1, 2), b = p_atom("b", 2, 3);
    FregeProof p = prove_taut_frege(p_imp(p_and(a, b), p_or(b, a)));
    FregeProof q = parse_frege(print_frege(p));
    CHECK(check_rich(q).ok);
    CHECK(q.goal->id == p.goal->id);
    CHECK(q.lines.size() == p.lines.size());
    lap("roundtrip");
  }

  std::cout << (fails ? "SMOKE FAILURES\n" : "smoke ok\n");
  return fails ? 1 : 0;
}
