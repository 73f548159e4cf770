#include <iostream>
#include "t1kit/propc.hpp"
using namespace t1kit;
int main() {
  TermPtr x = var("x"), z = var("z");
  FnPtr idf = lambda_fn({"u"}, var("u"));
  FormulaPtr A = f_eq(apply(base_fn(BaseTag::Cat), {x, z}),
                      apply(base_fn(BaseTag::Cat), {x, z}));
  LenVec lv{{"x", 8}, {"z", 2}};
  PropCompiler pc(lv);
  // walk all leaves of the halving tree
  auto rec = [&](auto&& self, TermPtr u, TermPtr w) -> void {
    std::size_t mu = tlen(u, lv);
    if (mu == 1) {
      PropPtr gu = translate(substitute_multi(A, {{"x", u}, {"z", w}}), lv);
      PropPtr atom = pc.term_formula(u, 1);
      PropPtr s0 = subst_atoms(gu, {{atom->id, p_false()}});
      PropPtr img0 =
          translate(substitute_multi(A, {{"x", lit("0")}, {"z", w}}), lv);
      if (s0->id != img0->id) {
        std::cout << "MISMATCH u=" << print_term(u) << "\n  gu: "
                  << print_prop(gu) << "\n  atom: " << print_prop(atom)
                  << "\n  s0:  " << print_prop(s0) << "\n  img: "
                  << print_prop(img0) << "\n";
      }
      return;
    }
    self(self, apply(base_fn(BaseTag::LHalf), {u}), apply(idf, {w}));
    self(self, apply(base_fn(BaseTag::RHalf), {u}), apply(idf, {w}));
  };
  rec(rec, x, z);
  std::cout << "done\n";
}
