#include <iostream>
#include <sstream>
#include "t1kit/propc.hpp"
#include "t1kit/stdlib.hpp"
using namespace t1kit;
int main() {
  const auto& R = stdlib_registry();
  // translate(eps . x = x, m=2) tautology
  auto A = parse_formula("(= (cat eps x) x)");
  for (size_t m = 0; m <= 5; ++m) {
    auto F = translate(A, {{"x", m}});
    std::cout << "m=" << m << " taut=" << taut_check(F) << "\n";
  }
  // bit faithfulness on succ
  FnPtr succ = R.get("succ");
  TermPtr t = apply(succ, {var("x")});
  Evaluator ev;
  bool ok = true;
  for (size_t m = 0; m <= 5 && ok; ++m) {
    LenVec lv{{"x", m}};
    PropCompiler pc(lv);
    size_t L = tlen(t, lv);
    for (const Bits& x : all_strings(m)) {
      Bits v = ev.eval(t, {{"x", x}});
      if (v.size() != L) { std::cout << "LEN MISMATCH\n"; ok=false; break; }
      for (size_t i = 1; i <= L; ++i) {
        bool b = eval_prop(pc.term_formula(t, i), {{"x", x}});
        if (b != (v[i-1]=='1')) { std::cout << "BIT MISMATCH m="<<m<<" x="<<x<<" i="<<i<<"\n"; ok=false; }
      }
    }
  }
  std::cout << "succ bit-faithful: " << (ok?"ok":"FAIL") << "\n";
  // translation soundness on x = allzero(x), m=1 -> not taut
  auto B = parse_formula("(= x (allzero x))");
  std::cout << "x=allzero(x) m=1 taut=" << taut_check(translate(B, {{"x",1}})) << " (expect 0)\n";
  // soundness for sum-equation using trn-heavy defs
  TermPtr t2 = apply(R.get("sum"), {var("x")});
  TermPtr t3 = apply(R.get("len"), {apply(base_fn(BaseTag::AllOne), {var("x")})});
  ok = true;
  for (size_t m = 0; m <= 4; ++m) {
    LenVec lv{{"x", m}};
    PropCompiler pc(lv);
    size_t L2 = tlen(t2, lv);
    for (const Bits& x : all_strings(m)) {
      Bits v = ev.eval(t2, {{"x", x}});
      for (size_t i = 1; i <= L2; ++i) {
        bool b = eval_prop(pc.term_formula(t2, i), {{"x", x}});
        if (b != (v[i-1]=='1')) { std::cout << "SUM BIT MISMATCH m="<<m<<" x="<<x<<" i="<<i<<"\n"; ok=false; }
      }
    }
  }
  std::cout << "sum bit-faithful: " << (ok?"ok":"FAIL") << "\n";
  std::ostringstream d;
  export_dimacs(translate(A, {{"x",2}}), d);
  std::cout << d.str().substr(0, 200) << "\n";
  return 0;
}
