// Scratch: build the two corpus proofs, check them, round-trip through the
// file format, and write them to data/corpus/.
#include <cassert>
#include <fstream>
#include <iostream>

#include "t1kit/t1check.hpp"

using namespace t1kit;

namespace {
TermPtr teps() { return apply(base_fn(BaseTag::Eps), {}); }
TermPtr t0() { return apply(base_fn(BaseTag::Zero), {}); }
TermPtr t1() { return apply(base_fn(BaseTag::One), {}); }
TermPtr cat2(TermPtr a, TermPtr b) {
  return apply(base_fn(BaseTag::Cat), {std::move(a), std::move(b)});
}
FnPtr catf() { return base_fn(BaseTag::Cat); }

// P -> (t = t), for closed-ish t.
std::size_t refl_under(T1ProofBuilder& b, const FormulaPtr& p,
                       const TermPtr& t) {
  std::size_t r = b.eqax("1a", {{"x", t}});
  return b.under(p, r);
}
}  // namespace

// theorem: (= (cat eps x) x), NIND-right on x.
T1Proof build_eps_cat() {
  T1ProofBuilder b;
  TermPtr x = var("x");
  FormulaPtr A = f_eq(cat2(teps(), x), x);

  // base: eps.eps = eps
  std::size_t base = b.eqax("3a.1", {{"x", teps()}});

  auto step = [&](const TermPtr& i) {
    // P -> (eps.(x.i) = x.i) where P = A.
    std::size_t s = b.eqax("3a." + std::string(i == t0() ? "2" : "3"),
                           {{"x", teps()}, {"y", x}});
    // careful: i is a fresh term each call; select clause by comparing print
    return s;
  };
  (void)step;

  auto make_step = [&](const std::string& clause, const TermPtr& i) {
    FormulaPtr P = A;
    // eps.(x.i) = (eps.x).i
    std::size_t s = b.eqax(clause, {{"x", teps()}, {"y", x}});
    std::size_t u1 = b.under(P, s);
    // P -> P
    std::size_t pp = b.imp_refl(P);
    // P -> (i = i)
    std::size_t uq = refl_under(b, P, i);
    // ((eps.x = x) and (i = i)) -> ((eps.x).i = x.i)
    std::size_t c = b.eqax("1d",
                           {{"x1", cat2(teps(), x)},
                            {"y1", x},
                            {"x2", i},
                            {"y2", i}},
                           {{"f", catf()}});
    std::size_t uc = b.under(P, c);
    std::size_t conj = b.and_under(pp, uq);
    std::size_t u2 = b.imp_mp(uc, conj);  // P -> ((eps.x).i = x.i)
    return b.trans_under(u1, u2);         // P -> (eps.(x.i) = x.i)
  };

  std::size_t s0 = make_step("3a.2", t0());
  std::size_t s1 = make_step("3a.3", t1());
  b.nindr(base, s0, s1, A, "x");
  return b.finish(A);
}

// theorem: (= (cat x (cat y z)) (cat (cat x y) z)), NIND-right on z.
T1Proof build_cat_assoc() {
  T1ProofBuilder b;
  TermPtr x = var("x"), y = var("y"), z = var("z");
  FormulaPtr A = f_eq(cat2(x, cat2(y, z)), cat2(cat2(x, y), z));

  // base: x.(y.eps) = (x.y).eps
  std::size_t e1 = b.eqax("3a.1", {{"x", y}});             // y.eps = y
  std::size_t rx = b.eqax("1a", {{"x", x}});               // x = x
  std::size_t c1 = b.cong2(catf(), rx, e1);                // x.(y.eps) = x.y
  std::size_t e2 = b.eqax("3a.1", {{"x", cat2(x, y)}});    // (x.y).eps = x.y
  std::size_t e2s = b.sym_intro(e2);                       // x.y = (x.y).eps
  std::size_t base = b.trans_intro(c1, e2s);

  auto make_step = [&](const std::string& clause, const TermPtr& i) {
    FormulaPtr P = A;
    // 1. x.(y.(z.i)) = x.((y.z).i)   [congruence over 3a clause]
    std::size_t s1 = b.eqax(clause, {{"x", y}, {"y", z}});  // y.(z.i)=(y.z).i
    std::size_t rx2 = b.eqax("1a", {{"x", x}});
    std::size_t t1l = b.cong2(catf(), rx2, s1);
    // 2. x.((y.z).i) = (x.(y.z)).i
    std::size_t t2 = b.eqax(clause, {{"x", x}, {"y", cat2(y, z)}});
    // 4. (x.y).(z.i) = ((x.y).z).i  (used reversed)
    std::size_t t4 = b.eqax(clause, {{"x", cat2(x, y)}, {"y", z}});
    std::size_t t4s = b.sym_intro(t4);  // ((x.y).z).i = (x.y).(z.i)

    std::size_t u1 = b.under(P, t1l);
    std::size_t u2 = b.under(P, t2);
    // 3. P -> ((x.(y.z)).i = ((x.y).z).i)
    std::size_t pp = b.imp_refl(P);
    std::size_t ui = refl_under(b, P, i);
    std::size_t c = b.eqax("1d",
                           {{"x1", cat2(x, cat2(y, z))},
                            {"y1", cat2(cat2(x, y), z)},
                            {"x2", i},
                            {"y2", i}},
                           {{"f", catf()}});
    std::size_t uc = b.under(P, c);
    std::size_t conj = b.and_under(pp, ui);
    std::size_t u3 = b.imp_mp(uc, conj);
    std::size_t u4 = b.under(P, t4s);

    std::size_t t12 = b.trans_under(u1, u2);
    std::size_t t123 = b.trans_under(t12, u3);
    return b.trans_under(t123, u4);
  };

  std::size_t s0 = make_step("3a.2", t0());
  std::size_t s1 = make_step("3a.3", t1());
  b.nindr(base, s0, s1, A, "z");
  return b.finish(A);
}

int main() {
  for (auto [name, proof] :
       {std::pair{std::string("eps_cat"), build_eps_cat()},
        std::pair{std::string("cat_assoc"), build_cat_assoc()}}) {
    CheckResult r = check_proof(proof);
    std::cout << name << ": lines=" << proof.lines.size()
              << " ok=" << r.ok;
    if (!r.ok) std::cout << " line=" << r.line << " reason=" << r.reason;
    std::cout << "\n";
    if (!r.ok) return 1;
    std::string text = print_proof(proof);
    T1Proof back = parse_proof(text);
    CheckResult r2 = check_proof(back);
    if (!r2.ok || !formula_eq(back.theorem, proof.theorem)) {
      std::cout << name << ": round-trip FAILED line=" << r2.line << " "
                << r2.reason << "\n";
      return 1;
    }
    std::ofstream out("data/corpus/" + name + ".t1p");
    out << "# theorem " << print_formula(proof.theorem) << "\n" << text;
    std::cout << name << ": round-trip ok, written\n";
  }
  return 0;
}
