#include "t1kit/fregesim.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace t1kit {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("fregesim: " + what);
}

bool same(const PropPtr& a, const PropPtr& b) { return a->id == b->id; }

// --- schema patterns --------------------------------------------------------
// Metavariables 0=A, 1=B, 2=C; constants matched by kind.

struct PPat {
  int mv = -1;
  PropKind k = PropKind::Not;
  std::shared_ptr<const PPat> a, b;
};
using PPatPtr = std::shared_ptr<const PPat>;

PPatPtr M(int mv) {
  auto p = std::make_shared<PPat>();
  p->mv = mv;
  return p;
}
PPatPtr N(PropKind k, PPatPtr a = nullptr, PPatPtr b = nullptr) {
  auto p = std::make_shared<PPat>();
  p->k = k;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}
PPatPtr Ri(PPatPtr a, PPatPtr b) { return N(PropKind::Imp, a, b); }
PPatPtr Ra(PPatPtr a, PPatPtr b) { return N(PropKind::And, a, b); }
PPatPtr Ro(PPatPtr a, PPatPtr b) { return N(PropKind::Or, a, b); }
PPatPtr Rf(PPatPtr a, PPatPtr b) { return N(PropKind::Iff, a, b); }
PPatPtr Rn(PPatPtr a) { return N(PropKind::Not, a); }

const std::vector<PPatPtr>& rich_schemas() {
  static const std::vector<PPatPtr> table = [] {
    PPatPtr A = M(0), B = M(1), C = M(2);
    std::vector<PPatPtr> t;
    t.push_back(Ri(A, Ri(B, A)));                                       // 1
    t.push_back(Ri(Ri(A, Ri(B, C)), Ri(Ri(A, B), Ri(A, C))));          // 2
    t.push_back(Ri(Ra(A, B), A));                                       // 3
    t.push_back(Ri(Ra(A, B), B));                                       // 4
    t.push_back(Ri(A, Ri(B, Ra(A, B))));                                // 5
    t.push_back(Ri(A, Ro(A, B)));                                       // 6
    t.push_back(Ri(B, Ro(A, B)));                                       // 7
    t.push_back(Ri(Ri(A, C), Ri(Ri(B, C), Ri(Ro(A, B), C))));          // 8
    t.push_back(Ri(Ri(A, B), Ri(Ri(A, Rn(B)), Rn(A))));                // 9
    t.push_back(Ri(Rn(Rn(A)), A));                                      // 10
    t.push_back(Ri(Rf(A, B), Ri(A, B)));                                // 11
    t.push_back(Ri(Rf(A, B), Ri(B, A)));                                // 12
    t.push_back(Ri(Ri(A, B), Ri(Ri(B, A), Rf(A, B))));                 // 13
    t.push_back(N(PropKind::True));                                     // 14
    t.push_back(Ri(N(PropKind::False), A));                             // 15
    return t;
  }();
  return table;
}

bool pmatch(const PPatPtr& p, const PropPtr& f,
            std::array<PropPtr, 3>& bind) {
  if (p->mv >= 0) {
    if (!bind[p->mv]) {
      bind[p->mv] = f;
      return true;
    }
    return same(bind[p->mv], f);
  }
  if (f->kind != p->k) return false;
  if (p->a && !pmatch(p->a, f->a, bind)) return false;
  if (p->b && !pmatch(p->b, f->b, bind)) return false;
  return true;
}

}  // namespace

bool match_rich_schema(int id, const PropPtr& f) {
  if (id < 1 || id > kNumRichSchemas) return false;
  std::array<PropPtr, 3> bind{};
  return pmatch(rich_schemas()[static_cast<std::size_t>(id - 1)], f, bind);
}

CheckResult check_rich(const FregeProof& p) {
  if (p.lines.empty()) return {false, 0, "empty proof"};
  for (std::size_t k = 1; k <= p.lines.size(); ++k) {
    const FregeLine& ln = p.lines[k - 1];
    if (ln.schema > 0) {
      if (!match_rich_schema(ln.schema, ln.f))
        return {false, k,
                "not an instance of schema " + std::to_string(ln.schema)};
    } else {
      if (ln.p1 < 1 || ln.p1 >= k || ln.p2 < 1 || ln.p2 >= k)
        return {false, k, "mp: bad premise reference"};
      const PropPtr& imp = p.lines[ln.p1 - 1].f;
      const PropPtr& ant = p.lines[ln.p2 - 1].f;
      if (imp->kind != PropKind::Imp || !same(imp->a, ant) ||
          !same(imp->b, ln.f))
        return {false, k, "mp: premises do not yield this line"};
    }
  }
  if (!same(p.lines.back().f, p.goal))
    return {false, 0, "last line differs from the goal"};
  return {};
}

FregeProof subst_frege(const FregeProof& p,
                       const std::map<std::size_t, PropPtr>& atom_repl) {
  std::map<std::size_t, PropPtr> repl = atom_repl;
  FregeProof out;
  out.lines.reserve(p.lines.size());
  for (const FregeLine& ln : p.lines)
    out.lines.push_back(
        FregeLine{subst_atoms(ln.f, repl), ln.schema, ln.p1, ln.p2});
  out.goal = subst_atoms(p.goal, repl);
  return out;
}

// --- builder ----------------------------------------------------------------

std::size_t FregeBuilder::push(PropPtr f, int schema, std::size_t p1,
                               std::size_t p2) {
  lines_.push_back(Line{std::move(f), schema, p1, p2});
  return lines_.size();
}

const PropPtr& FregeBuilder::at(std::size_t i) const {
  if (i < 1 || i > lines_.size())
    throw std::logic_error("frege builder: bad line index");
  return lines_[i - 1].f;
}

std::size_t FregeBuilder::ax(int id, PropPtr f) {
  if (!match_rich_schema(id, f))
    throw std::logic_error("frege builder: not an instance of schema " +
                           std::to_string(id) + ": " + print_prop(f));
  return push(std::move(f), id);
}

std::size_t FregeBuilder::mp(std::size_t imp, std::size_t ant) {
  PropPtr fi = at(imp);
  PropPtr fa = at(ant);
  if (fi->kind != PropKind::Imp || !same(fi->a, fa))
    throw std::logic_error("frege builder: mp premises do not fit: " +
                           print_prop(fi) + " vs " + print_prop(fa));
  return push(fi->b, 0, imp, ant);
}

std::size_t FregeBuilder::assume(PropPtr h) {
  std::size_t i = push(std::move(h), -1);
  hyps_.push_back(i);
  return i;
}

std::size_t FregeBuilder::append(const FregeProof& p) {
  std::size_t off = lines_.size();
  for (const FregeLine& ln : p.lines)
    push(ln.f, ln.schema, ln.schema > 0 ? 0 : ln.p1 + off,
         ln.schema > 0 ? 0 : ln.p2 + off);
  return lines_.size();
}

std::size_t FregeBuilder::inst(const FregeProof& tpl,
                               const std::map<std::size_t, PropPtr>& repl) {
  return append(subst_frege(tpl, repl));
}

std::size_t FregeBuilder::imp_refl(const PropPtr& p) {
  PropPtr pp = p_imp(p, p);
  std::size_t a1 = ax(1, p_imp(p, pp));
  std::size_t a2 = ax(1, p_imp(p, p_imp(pp, p)));
  std::size_t a3 = ax(2, p_imp(at(a2), p_imp(at(a1), pp)));
  return mp(mp(a3, a2), a1);
}

std::size_t FregeBuilder::syll(std::size_t ab, std::size_t bc) {
  PropPtr fab = at(ab);
  PropPtr fbc = at(bc);
  if (fab->kind != PropKind::Imp || fbc->kind != PropKind::Imp ||
      !same(fab->b, fbc->a))
    throw std::logic_error("frege builder: syll premises do not fit");
  std::size_t u = ax(1, p_imp(fbc, p_imp(fab->a, fbc)));
  std::size_t m1 = mp(u, bc);
  std::size_t a2 = ax(2, p_imp(at(m1), p_imp(fab, p_imp(fab->a, fbc->b))));
  return mp(mp(a2, m1), ab);
}

std::size_t FregeBuilder::under(const PropPtr& p, std::size_t theorem) {
  PropPtr t = at(theorem);
  std::size_t a = ax(1, p_imp(t, p_imp(p, t)));
  return mp(a, theorem);
}

std::size_t FregeBuilder::imp_mp(std::size_t pxy, std::size_t px) {
  PropPtr f = at(pxy);
  if (f->kind != PropKind::Imp || f->b->kind != PropKind::Imp)
    throw std::logic_error("frege builder: imp_mp expects P->(X->Y)");
  std::size_t a =
      ax(2, p_imp(f, p_imp(p_imp(f->a, f->b->a), p_imp(f->a, f->b->b))));
  return mp(mp(a, pxy), px);
}

std::size_t FregeBuilder::and_under(std::size_t px, std::size_t py) {
  PropPtr fx = at(px);
  PropPtr fy = at(py);
  if (fx->kind != PropKind::Imp || fy->kind != PropKind::Imp ||
      !same(fx->a, fy->a))
    throw std::logic_error("frege builder: and_under expects P->X, P->Y");
  std::size_t a5 =
      ax(5, p_imp(fx->b, p_imp(fy->b, p_and(fx->b, fy->b))));
  std::size_t u = under(fx->a, a5);
  return imp_mp(imp_mp(u, px), py);
}

std::size_t FregeBuilder::and_intro(std::size_t x, std::size_t y) {
  std::size_t a5 = ax(5, p_imp(at(x), p_imp(at(y), p_and(at(x), at(y)))));
  return mp(mp(a5, x), y);
}

std::size_t FregeBuilder::discharge() {
  if (hyps_.empty())
    throw std::logic_error("frege builder: no open hypothesis");
  std::size_t pos = hyps_.back();
  hyps_.pop_back();
  PropPtr H = lines_[pos - 1].f;
  std::size_t old_n = lines_.size();
  std::vector<Line> tail(lines_.begin() + static_cast<long>(pos) - 1,
                         lines_.end());
  lines_.resize(pos - 1);
  std::map<std::size_t, std::size_t> img;    // old tail idx -> guarded line
  std::map<std::size_t, std::size_t> early;  // old prefix idx -> guarded line
  auto old_formula = [&](std::size_t i) -> const PropPtr& {
    return i < pos ? lines_[i - 1].f : tail[i - pos].f;
  };
  auto guard_of = [&](std::size_t i) -> std::size_t {
    if (i >= pos) return img.at(i);
    auto it = early.find(i);
    if (it != early.end()) return it->second;
    PropPtr L = lines_[i - 1].f;
    std::size_t a = push(p_imp(L, p_imp(H, L)), 1);
    std::size_t g = push(p_imp(H, L), 0, a, i);
    early[i] = g;
    return g;
  };
  for (std::size_t oi = pos; oi <= old_n; ++oi) {
    const Line& L = tail[oi - pos];
    if (L.schema == -1) {
      if (oi != pos)
        throw std::logic_error("frege builder: inner hypothesis still open");
      img[oi] = imp_refl(H);
    } else if (L.schema > 0) {
      std::size_t s = push(L.f, L.schema);
      std::size_t a = push(p_imp(L.f, p_imp(H, L.f)), 1);
      img[oi] = push(p_imp(H, L.f), 0, a, s);
    } else {
      PropPtr X = old_formula(L.p2);
      PropPtr Y = L.f;
      std::size_t gi = guard_of(L.p1);
      std::size_t ga = guard_of(L.p2);
      std::size_t a2 = push(
          p_imp(p_imp(H, p_imp(X, Y)), p_imp(p_imp(H, X), p_imp(H, Y))), 2);
      std::size_t m1 = push(p_imp(p_imp(H, X), p_imp(H, Y)), 0, a2, gi);
      img[oi] = push(p_imp(H, Y), 0, m1, ga);
    }
  }
  return img.at(old_n);
}

FregeProof FregeBuilder::to_proof(std::size_t goal) const {
  if (!hyps_.empty())
    throw std::logic_error("frege builder: open hypotheses remain");
  FregeProof p;
  p.goal = at(goal);
  p.lines.reserve(lines_.size());
  for (const Line& ln : lines_)
    p.lines.push_back(FregeLine{ln.f, ln.schema, ln.p1, ln.p2});
  return p;
}

// --- template library -------------------------------------------------------

namespace {

// From lines proving A and (not A), derives Z (ex falso); hypothesis-free.
std::size_t from_contradiction(FregeBuilder& b, std::size_t ia,
                               std::size_t ina, const PropPtr& z) {
  PropPtr A = b.at(ia);
  PropPtr nA = b.at(ina);
  PropPtr nz = p_not(z);
  std::size_t m1 = b.mp(b.ax(1, p_imp(A, p_imp(nz, A))), ia);
  std::size_t m2 = b.mp(b.ax(1, p_imp(nA, p_imp(nz, nA))), ina);
  std::size_t a9 = b.ax(
      9, p_imp(p_imp(nz, A), p_imp(p_imp(nz, p_not(A)), p_not(nz))));
  std::size_t nn = b.mp(b.mp(a9, m1), m2);
  return b.mp(b.ax(10, p_imp(p_not(nz), z)), nn);
}

// Derives (a or (not a)).
std::size_t excluded_middle(FregeBuilder& b, const PropPtr& a) {
  PropPtr em = p_or(a, p_not(a));
  PropPtr nem = p_not(em);
  std::size_t h = b.assume(nem);
  std::size_t a6 = b.ax(6, p_imp(a, em));
  std::size_t g = b.mp(b.ax(1, p_imp(nem, p_imp(a, nem))), h);
  std::size_t a9 = b.ax(9, p_imp(p_imp(a, em), p_imp(p_imp(a, nem),
                                                     p_not(a))));
  std::size_t na = b.mp(b.mp(a9, a6), g);
  b.mp(b.ax(7, p_imp(p_not(a), em)), na);
  std::size_t d = b.discharge();  // (not em) -> em
  std::size_t a9b =
      b.ax(9, p_imp(p_imp(nem, em), p_imp(p_imp(nem, nem), p_not(nem))));
  std::size_t r = b.imp_refl(nem);
  std::size_t nn = b.mp(b.mp(a9b, d), r);
  return b.mp(b.ax(10, p_imp(p_not(nem), em)), nn);
}

struct TemplateLib {
  PropPtr a, b, c, d, l, g;
  FregeProof not_bot;   // (not F)
  FregeProof and_f1;    // (not a) -> (not (a and b))
  FregeProof and_f2;    // (not b) -> (not (a and b))
  FregeProof or_f;      // (not a) -> ((not b) -> (not (a or b)))
  FregeProof imp_f1;    // (not a) -> (a -> b)
  FregeProof imp_tf;    // a -> ((not b) -> (not (a -> b)))
  FregeProof iff_tt;    // a -> (b -> (a iff b))
  FregeProof iff_ff;    // (not a) -> ((not b) -> (a iff b))
  FregeProof iff_tf;    // a -> ((not b) -> (not (a iff b)))
  FregeProof iff_ft;    // (not a) -> (b -> (not (a iff b)))
  FregeProof not_t;     // a -> (not (not a))
  FregeProof to_true;   // a -> (a iff T)
  FregeProof to_false;  // (not a) -> (a iff F)
  FregeProof em_merge;  // (a -> g) -> (((not a) -> g) -> g)
  FregeProof merge;     // ((l and a) -> g) -> (((l and (not a)) -> g)
                        //   -> (l -> g))
  FregeProof cong_not;  // (a iff b) -> ((not a) iff (not b))
  FregeProof cong_and;  // (a iff b) -> ((c iff d) -> ((a and c) iff (b and d)))
  FregeProof cong_or;
  FregeProof cong_imp;
  FregeProof cong_iff;
  FregeProof qlem_f;    // (not a) -> ((((not a) and b) or (a and c)) iff b)
  FregeProof qlem_t;    // a -> ((((not a) and b) or (a and c)) iff c)
  FregeProof qlem_same; // (((not a) and b) or (a and b)) iff b
};

const TemplateLib& templates() {
  static const TemplateLib lib = [] {
    TemplateLib T;
    PropPtr A = T.a = p_atom("#a", 1, 1);
    PropPtr B = T.b = p_atom("#b", 1, 1);
    PropPtr C = T.c = p_atom("#c", 1, 1);
    PropPtr D = T.d = p_atom("#d", 1, 1);
    PropPtr L = T.l = p_atom("#l", 1, 1);
    PropPtr G = T.g = p_atom("#g", 1, 1);
    PropPtr nA = p_not(A), nB = p_not(B);

    {  // not F
      FregeBuilder b;
      std::size_t a1 = b.ax(15, p_imp(p_false(), p_true()));
      std::size_t a2 = b.ax(15, p_imp(p_false(), p_not(p_true())));
      std::size_t a9 = b.ax(
          9, p_imp(b.at(a1), p_imp(b.at(a2), p_not(p_false()))));
      T.not_bot = b.to_proof(b.mp(b.mp(a9, a1), a2));
    }
    {  // and_f1 / and_f2
      for (int which = 0; which < 2; ++which) {
        FregeBuilder b;
        PropPtr ab = p_and(A, B);
        PropPtr tgt = which == 0 ? A : B;
        std::size_t h = b.assume(p_not(tgt));
        std::size_t pr = b.ax(which == 0 ? 3 : 4, p_imp(ab, tgt));
        std::size_t u =
            b.mp(b.ax(1, p_imp(p_not(tgt), p_imp(ab, p_not(tgt)))), h);
        std::size_t a9 =
            b.ax(9, p_imp(p_imp(ab, tgt),
                          p_imp(p_imp(ab, p_not(tgt)), p_not(ab))));
        b.mp(b.mp(a9, pr), u);
        (which == 0 ? T.and_f1 : T.and_f2) = b.to_proof(b.discharge());
      }
    }
    {  // or_f
      FregeBuilder b;
      PropPtr ab = p_or(A, B);
      std::size_t h1 = b.assume(nA);
      std::size_t h2 = b.assume(nB);
      std::size_t h3 = b.assume(A);
      from_contradiction(b, h3, h1, B);
      std::size_t d = b.discharge();  // A -> B
      std::size_t rb = b.imp_refl(B);
      std::size_t a8 = b.ax(
          8, p_imp(p_imp(A, B), p_imp(p_imp(B, B), p_imp(ab, B))));
      std::size_t m = b.mp(b.mp(a8, d), rb);
      std::size_t u = b.mp(b.ax(1, p_imp(nB, p_imp(ab, nB))), h2);
      std::size_t a9 =
          b.ax(9, p_imp(p_imp(ab, B), p_imp(p_imp(ab, nB), p_not(ab))));
      b.mp(b.mp(a9, m), u);
      b.discharge();
      T.or_f = b.to_proof(b.discharge());
    }
    {  // imp_f1
      FregeBuilder b;
      std::size_t h1 = b.assume(nA);
      std::size_t h2 = b.assume(A);
      from_contradiction(b, h2, h1, B);
      b.discharge();
      T.imp_f1 = b.to_proof(b.discharge());
    }
    {  // imp_tf
      FregeBuilder b;
      PropPtr ab = p_imp(A, B);
      std::size_t h1 = b.assume(A);
      std::size_t h2 = b.assume(nB);
      std::size_t h3 = b.assume(ab);
      b.mp(h3, h1);
      std::size_t d = b.discharge();  // (A->B) -> B
      std::size_t u = b.mp(b.ax(1, p_imp(nB, p_imp(ab, nB))), h2);
      std::size_t a9 =
          b.ax(9, p_imp(p_imp(ab, B), p_imp(p_imp(ab, nB), p_not(ab))));
      b.mp(b.mp(a9, d), u);
      b.discharge();
      T.imp_tf = b.to_proof(b.discharge());
    }
    {  // iff_tt
      FregeBuilder b;
      std::size_t h1 = b.assume(A);
      std::size_t h2 = b.assume(B);
      std::size_t i1 = b.mp(b.ax(1, p_imp(B, p_imp(A, B))), h2);
      std::size_t i2 = b.mp(b.ax(1, p_imp(A, p_imp(B, A))), h1);
      std::size_t a13 = b.ax(
          13, p_imp(p_imp(A, B), p_imp(p_imp(B, A), p_iff(A, B))));
      b.mp(b.mp(a13, i1), i2);
      b.discharge();
      T.iff_tt = b.to_proof(b.discharge());
    }
    {  // iff_ff
      FregeBuilder b;
      std::size_t h1 = b.assume(nA);
      std::size_t h2 = b.assume(nB);
      std::size_t h3 = b.assume(A);
      from_contradiction(b, h3, h1, B);
      std::size_t i1 = b.discharge();  // A -> B
      std::size_t h4 = b.assume(B);
      from_contradiction(b, h4, h2, A);
      std::size_t i2 = b.discharge();  // B -> A
      std::size_t a13 = b.ax(
          13, p_imp(p_imp(A, B), p_imp(p_imp(B, A), p_iff(A, B))));
      b.mp(b.mp(a13, i1), i2);
      b.discharge();
      T.iff_ff = b.to_proof(b.discharge());
    }
    {  // iff_tf and iff_ft
      for (int which = 0; which < 2; ++which) {
        FregeBuilder b;
        PropPtr ab = p_iff(A, B);
        // which 0: A true, B false, use (A iff B) -> (A -> B).
        // which 1: A false, B true, use (A iff B) -> (B -> A).
        PropPtr have = which == 0 ? A : B;         // true one
        PropPtr lack = which == 0 ? B : A;         // false one
        std::size_t h1 = b.assume(which == 0 ? A : nA);
        std::size_t h2 = b.assume(which == 0 ? nB : B);
        std::size_t htrue = which == 0 ? h1 : h2;
        std::size_t hfalse = which == 0 ? h2 : h1;
        std::size_t h3 = b.assume(ab);
        std::size_t a1112 = b.ax(which == 0 ? 11 : 12,
                                 p_imp(ab, p_imp(have, lack)));
        b.mp(b.mp(a1112, h3), htrue);
        std::size_t d = b.discharge();  // (A iff B) -> lack
        std::size_t u = b.mp(
            b.ax(1, p_imp(p_not(lack), p_imp(ab, p_not(lack)))), hfalse);
        std::size_t a9 = b.ax(
            9, p_imp(p_imp(ab, lack), p_imp(p_imp(ab, p_not(lack)),
                                            p_not(ab))));
        b.mp(b.mp(a9, d), u);
        b.discharge();
        (which == 0 ? T.iff_tf : T.iff_ft) = b.to_proof(b.discharge());
      }
    }
    {  // not_t
      FregeBuilder b;
      std::size_t h1 = b.assume(A);
      std::size_t m = b.mp(b.ax(1, p_imp(A, p_imp(nA, A))), h1);
      std::size_t r = b.imp_refl(nA);
      std::size_t a9 = b.ax(
          9, p_imp(p_imp(nA, A), p_imp(p_imp(nA, nA), p_not(nA))));
      b.mp(b.mp(a9, m), r);
      T.not_t = b.to_proof(b.discharge());
    }
    {  // to_true
      FregeBuilder b;
      std::size_t h1 = b.assume(A);
      std::size_t t = b.ax(14, p_true());
      std::size_t i1 = b.mp(b.ax(1, p_imp(p_true(), p_imp(A, p_true()))), t);
      std::size_t i2 = b.mp(b.ax(1, p_imp(A, p_imp(p_true(), A))), h1);
      std::size_t a13 = b.ax(13, p_imp(b.at(i1), p_imp(b.at(i2),
                                                       p_iff(A, p_true()))));
      b.mp(b.mp(a13, i1), i2);
      T.to_true = b.to_proof(b.discharge());
    }
    {  // to_false
      FregeBuilder b;
      std::size_t h1 = b.assume(nA);
      std::size_t h2 = b.assume(A);
      from_contradiction(b, h2, h1, p_false());
      std::size_t d1 = b.discharge();  // A -> F
      std::size_t f15 = b.ax(15, p_imp(p_false(), A));
      std::size_t a13 = b.ax(13, p_imp(b.at(d1), p_imp(b.at(f15),
                                                       p_iff(A, p_false()))));
      b.mp(b.mp(a13, d1), f15);
      T.to_false = b.to_proof(b.discharge());
    }
    {  // em_merge
      FregeBuilder b;
      std::size_t h1 = b.assume(p_imp(A, G));
      std::size_t h2 = b.assume(p_imp(nA, G));
      std::size_t e = excluded_middle(b, A);
      std::size_t a8 = b.ax(
          8, p_imp(p_imp(A, G), p_imp(p_imp(nA, G),
                                      p_imp(p_or(A, nA), G))));
      b.mp(b.mp(b.mp(a8, h1), h2), e);
      b.discharge();
      T.em_merge = b.to_proof(b.discharge());
    }
    {  // merge
      FregeBuilder b;
      std::size_t h1 = b.assume(p_imp(p_and(L, A), G));
      std::size_t h2 = b.assume(p_imp(p_and(L, nA), G));
      std::size_t h3 = b.assume(L);
      std::size_t h4 = b.assume(A);
      b.mp(h1, b.and_intro(h3, h4));
      std::size_t d1 = b.discharge();  // A -> G
      std::size_t h5 = b.assume(nA);
      b.mp(h2, b.and_intro(h3, h5));
      std::size_t d2 = b.discharge();  // (not A) -> G
      std::size_t e = excluded_middle(b, A);
      std::size_t a8 = b.ax(
          8, p_imp(p_imp(A, G), p_imp(p_imp(nA, G),
                                      p_imp(p_or(A, nA), G))));
      b.mp(b.mp(b.mp(a8, d1), d2), e);
      b.discharge();
      b.discharge();
      T.merge = b.to_proof(b.discharge());
    }
    {  // cong_not
      FregeBuilder b;
      std::size_t h1 = b.assume(p_iff(A, B));
      std::size_t ba = b.mp(b.ax(12, p_imp(p_iff(A, B), p_imp(B, A))), h1);
      std::size_t ab = b.mp(b.ax(11, p_imp(p_iff(A, B), p_imp(A, B))), h1);
      std::size_t h2 = b.assume(nA);
      std::size_t u1 = b.mp(b.ax(1, p_imp(nA, p_imp(B, nA))), h2);
      std::size_t a9 = b.ax(
          9, p_imp(p_imp(B, A), p_imp(p_imp(B, nA), p_not(B))));
      b.mp(b.mp(a9, ba), u1);
      std::size_t i1 = b.discharge();  // (not A) -> (not B)
      std::size_t h3 = b.assume(nB);
      std::size_t u2 = b.mp(b.ax(1, p_imp(nB, p_imp(A, nB))), h3);
      std::size_t a9b = b.ax(
          9, p_imp(p_imp(A, B), p_imp(p_imp(A, nB), p_not(A))));
      b.mp(b.mp(a9b, ab), u2);
      std::size_t i2 = b.discharge();  // (not B) -> (not A)
      std::size_t a13 = b.ax(13, p_imp(b.at(i1), p_imp(b.at(i2),
                                                       p_iff(nA, nB))));
      b.mp(b.mp(a13, i1), i2);
      T.cong_not = b.to_proof(b.discharge());
    }
    // binary congruence templates
    for (int which = 0; which < 4; ++which) {
      PropKind kind = which == 0   ? PropKind::And
                      : which == 1 ? PropKind::Or
                      : which == 2 ? PropKind::Imp
                                   : PropKind::Iff;
      auto conn = [&](const PropPtr& x, const PropPtr& y) {
        switch (kind) {
          case PropKind::And: return p_and(x, y);
          case PropKind::Or: return p_or(x, y);
          case PropKind::Imp: return p_imp(x, y);
          default: return p_iff(x, y);
        }
      };
      FregeBuilder b;
      std::size_t h1 = b.assume(p_iff(A, B));
      std::size_t h2 = b.assume(p_iff(C, D));
      std::size_t iab = b.mp(b.ax(11, p_imp(p_iff(A, B), p_imp(A, B))), h1);
      std::size_t iba = b.mp(b.ax(12, p_imp(p_iff(A, B), p_imp(B, A))), h1);
      std::size_t icd = b.mp(b.ax(11, p_imp(p_iff(C, D), p_imp(C, D))), h2);
      std::size_t idc = b.mp(b.ax(12, p_imp(p_iff(C, D), p_imp(D, C))), h2);
      PropPtr lhs = conn(A, C), rhs = conn(B, D);
      // forward: lhs -> rhs, backward: rhs -> lhs
      std::size_t fwd = 0, bwd = 0;
      for (int dir = 0; dir < 2; ++dir) {
        PropPtr from = dir == 0 ? lhs : rhs;
        PropPtr to = dir == 0 ? rhs : lhs;
        PropPtr f1 = dir == 0 ? A : B, t1 = dir == 0 ? B : A;
        PropPtr f2 = dir == 0 ? C : D, t2 = dir == 0 ? D : C;
        std::size_t m1 = dir == 0 ? iab : iba;  // f1 -> t1
        std::size_t m2 = dir == 0 ? icd : idc;  // f2 -> t2
        std::size_t m1r = dir == 0 ? iba : iab;  // t1 -> f1
        std::size_t res;
        if (kind == PropKind::And) {
          std::size_t h = b.assume(from);
          std::size_t x1 = b.mp(b.ax(3, p_imp(from, f1)), h);
          std::size_t x2 = b.mp(b.ax(4, p_imp(from, f2)), h);
          b.and_intro(b.mp(m1, x1), b.mp(m2, x2));
          res = b.discharge();
        } else if (kind == PropKind::Or) {
          std::size_t ha = b.assume(f1);
          b.mp(b.ax(6, p_imp(t1, to)), b.mp(m1, ha));
          std::size_t da = b.discharge();  // f1 -> to
          std::size_t hb = b.assume(f2);
          b.mp(b.ax(7, p_imp(t2, to)), b.mp(m2, hb));
          std::size_t db = b.discharge();  // f2 -> to
          std::size_t a8 = b.ax(8, p_imp(b.at(da), p_imp(b.at(db),
                                                         p_imp(from, to))));
          res = b.mp(b.mp(a8, da), db);
        } else if (kind == PropKind::Imp) {
          std::size_t h = b.assume(from);   // f1 -> f2
          std::size_t ht = b.assume(t1);
          std::size_t x1 = b.mp(m1r, ht);   // f1
          std::size_t x2 = b.mp(h, x1);     // f2
          b.mp(m2, x2);                     // t2
          b.discharge();
          res = b.discharge();
        } else {  // Iff
          std::size_t h = b.assume(from);   // f1 iff f2
          std::size_t i12 = b.mp(b.ax(11, p_imp(from, p_imp(f1, f2))), h);
          std::size_t i21 = b.mp(b.ax(12, p_imp(from, p_imp(f2, f1))), h);
          std::size_t ht = b.assume(t1);
          b.mp(m2, b.mp(i12, b.mp(m1r, ht)));
          std::size_t j1 = b.discharge();   // t1 -> t2
          std::size_t m2r = dir == 0 ? idc : icd;  // t2 -> f2
          std::size_t ht2 = b.assume(t2);
          b.mp(m1, b.mp(i21, b.mp(m2r, ht2)));
          std::size_t j2 = b.discharge();   // t2 -> t1
          std::size_t a13 = b.ax(13, p_imp(b.at(j1), p_imp(b.at(j2),
                                                           p_iff(t1, t2))));
          b.mp(b.mp(a13, j1), j2);
          res = b.discharge();
        }
        (dir == 0 ? fwd : bwd) = res;
      }
      std::size_t a13 = b.ax(13, p_imp(b.at(fwd), p_imp(b.at(bwd),
                                                        p_iff(lhs, rhs))));
      b.mp(b.mp(a13, fwd), bwd);
      b.discharge();
      FregeProof pr = b.to_proof(b.discharge());
      (which == 0   ? T.cong_and
       : which == 1 ? T.cong_or
       : which == 2 ? T.cong_imp
                    : T.cong_iff) = pr;
    }
    {  // qlem_f
      FregeBuilder b;
      PropPtr q = p_or(p_and(nA, B), p_and(A, C));
      std::size_t h1 = b.assume(nA);
      std::size_t e1 = b.ax(4, p_imp(p_and(nA, B), B));
      std::size_t h3 = b.assume(p_and(A, C));
      std::size_t xa = b.mp(b.ax(3, p_imp(p_and(A, C), A)), h3);
      from_contradiction(b, xa, h1, B);
      std::size_t e2 = b.discharge();  // (A and C) -> B
      std::size_t a8 = b.ax(8, p_imp(b.at(e1), p_imp(b.at(e2),
                                                     p_imp(q, B))));
      std::size_t qb = b.mp(b.mp(a8, e1), e2);
      std::size_t h4 = b.assume(B);
      std::size_t cc = b.and_intro(h1, h4);
      b.mp(b.ax(6, p_imp(p_and(nA, B), q)), cc);
      std::size_t bq = b.discharge();  // B -> q
      std::size_t a13 = b.ax(13, p_imp(b.at(qb), p_imp(b.at(bq),
                                                       p_iff(q, B))));
      b.mp(b.mp(a13, qb), bq);
      T.qlem_f = b.to_proof(b.discharge());
    }
    {  // qlem_t
      FregeBuilder b;
      PropPtr q = p_or(p_and(nA, B), p_and(A, C));
      std::size_t h1 = b.assume(A);
      std::size_t h2 = b.assume(p_and(nA, B));
      std::size_t na = b.mp(b.ax(3, p_imp(p_and(nA, B), nA)), h2);
      from_contradiction(b, h1, na, C);
      std::size_t e1 = b.discharge();  // (not A and B) -> C
      std::size_t e2 = b.ax(4, p_imp(p_and(A, C), C));
      std::size_t a8 = b.ax(8, p_imp(b.at(e1), p_imp(b.at(e2),
                                                     p_imp(q, C))));
      std::size_t qc = b.mp(b.mp(a8, e1), e2);
      std::size_t h3 = b.assume(C);
      std::size_t cc = b.and_intro(h1, h3);
      b.mp(b.ax(7, p_imp(p_and(A, C), q)), cc);
      std::size_t cq = b.discharge();  // C -> q
      std::size_t a13 = b.ax(13, p_imp(b.at(qc), p_imp(b.at(cq),
                                                       p_iff(q, C))));
      b.mp(b.mp(a13, qc), cq);
      T.qlem_t = b.to_proof(b.discharge());
    }
    {  // qlem_same
      FregeBuilder b;
      PropPtr q = p_or(p_and(nA, B), p_and(A, B));
      std::size_t e1 = b.ax(4, p_imp(p_and(nA, B), B));
      std::size_t e2 = b.ax(4, p_imp(p_and(A, B), B));
      std::size_t a8 = b.ax(8, p_imp(b.at(e1), p_imp(b.at(e2),
                                                     p_imp(q, B))));
      std::size_t qb = b.mp(b.mp(a8, e1), e2);
      std::size_t h1 = b.assume(B);
      std::size_t ha = b.assume(A);
      b.mp(b.ax(7, p_imp(p_and(A, B), q)), b.and_intro(ha, h1));
      std::size_t da = b.discharge();  // A -> q
      std::size_t hn = b.assume(nA);
      b.mp(b.ax(6, p_imp(p_and(nA, B), q)), b.and_intro(hn, h1));
      std::size_t dn = b.discharge();  // (not A) -> q
      std::size_t e = excluded_middle(b, A);
      std::size_t a8b = b.ax(8, p_imp(b.at(da), p_imp(b.at(dn),
                                                      p_imp(p_or(A, nA), q))));
      b.mp(b.mp(b.mp(a8b, da), dn), e);
      std::size_t bq = b.discharge();  // B -> q
      std::size_t a13 = b.ax(13, p_imp(b.at(qb), p_imp(b.at(bq),
                                                       p_iff(q, B))));
      T.qlem_same = b.to_proof(b.mp(b.mp(a13, qb), bq));
    }
    return T;
  }();
  return lib;
}

std::size_t iff_refl_line(FregeBuilder& b, const PropPtr& x) {
  std::size_t r = b.imp_refl(x);
  std::size_t a13 = b.ax(
      13, p_imp(p_imp(x, x), p_imp(p_imp(x, x), p_iff(x, x))));
  return b.mp(b.mp(a13, r), r);
}

}  // namespace

// --- truth-table prover -----------------------------------------------------

namespace {

struct LeafProver {
  FregeBuilder& b;
  const TemplateLib& T;
  PropPtr L;  // guard
  std::map<std::size_t, std::size_t> lit;  // atom id -> line: L -> +-atom
  std::map<std::size_t, bool> value;       // atom id -> assigned value
  std::map<std::size_t, std::pair<std::size_t, bool>> memo;  // node id

  std::size_t via(const FregeProof& tpl,
                  const std::map<std::size_t, PropPtr>& repl,
                  std::initializer_list<std::size_t> args) {
    std::size_t t = b.inst(tpl, repl);
    std::size_t cur = b.under(L, t);
    for (std::size_t a : args) cur = b.imp_mp(cur, a);
    return cur;
  }

  // Returns (line proving L -> S or L -> not S, truth value of S).
  std::pair<std::size_t, bool> ev(const PropPtr& s) {
    auto hit = memo.find(s->id);
    if (hit != memo.end()) return hit->second;
    std::pair<std::size_t, bool> out;
    switch (s->kind) {
      case PropKind::True:
        out = {b.under(L, b.ax(14, p_true())), true};
        break;
      case PropKind::False:
        out = {b.under(L, b.append(T.not_bot)), false};
        break;
      case PropKind::Atom:
        out = {lit.at(s->id), value.at(s->id)};
        break;
      case PropKind::Not: {
        auto [la, va] = ev(s->a);
        if (!va) {
          out = {la, true};
        } else {
          out = {via(T.not_t, {{T.a->id, s->a}}, {la}), false};
        }
        break;
      }
      case PropKind::And: {
        auto [la, va] = ev(s->a);
        auto [lc, vc] = ev(s->b);
        std::map<std::size_t, PropPtr> r{{T.a->id, s->a}, {T.b->id, s->b}};
        if (va && vc)
          out = {b.and_under(la, lc), true};
        else if (!va)
          out = {via(T.and_f1, r, {la}), false};
        else
          out = {via(T.and_f2, r, {lc}), false};
        break;
      }
      case PropKind::Or: {
        auto [la, va] = ev(s->a);
        auto [lc, vc] = ev(s->b);
        std::map<std::size_t, PropPtr> r{{T.a->id, s->a}, {T.b->id, s->b}};
        if (va) {
          std::size_t a6 = b.ax(6, p_imp(s->a, s));
          out = {b.imp_mp(b.under(L, a6), la), true};
        } else if (vc) {
          std::size_t a7 = b.ax(7, p_imp(s->b, s));
          out = {b.imp_mp(b.under(L, a7), lc), true};
        } else {
          out = {via(T.or_f, r, {la, lc}), false};
        }
        break;
      }
      case PropKind::Imp: {
        auto [la, va] = ev(s->a);
        auto [lc, vc] = ev(s->b);
        std::map<std::size_t, PropPtr> r{{T.a->id, s->a}, {T.b->id, s->b}};
        if (vc) {
          std::size_t a1 = b.ax(1, p_imp(s->b, s));
          out = {b.imp_mp(b.under(L, a1), lc), true};
        } else if (!va) {
          out = {via(T.imp_f1, r, {la}), true};
        } else {
          out = {via(T.imp_tf, r, {la, lc}), false};
        }
        break;
      }
      case PropKind::Iff: {
        auto [la, va] = ev(s->a);
        auto [lc, vc] = ev(s->b);
        std::map<std::size_t, PropPtr> r{{T.a->id, s->a}, {T.b->id, s->b}};
        if (va && vc)
          out = {via(T.iff_tt, r, {la, lc}), true};
        else if (!va && !vc)
          out = {via(T.iff_ff, r, {la, lc}), true};
        else if (va)
          out = {via(T.iff_tf, r, {la, lc}), false};
        else
          out = {via(T.iff_ft, r, {la, lc}), false};
        break;
      }
    }
    memo[s->id] = out;
    return out;
  }
};

}  // namespace

FregeProof prove_taut_frege(const PropPtr& goal, std::size_t max_atoms) {
  std::vector<PropPtr> atoms = collect_atoms(goal);
  if (atoms.size() > max_atoms)
    throw std::runtime_error(
        "prove_taut_frege: " + std::to_string(atoms.size()) +
        " atoms exceed the limit of " + std::to_string(max_atoms));
  FregeBuilder b;
  const TemplateLib& T = templates();

  // branch(L, depth): line proving L -> goal under the partial assignment.
  std::vector<std::pair<PropPtr, bool>> assign;
  auto branch = [&](auto&& self, const PropPtr& L) -> std::size_t {
    if (assign.size() == atoms.size()) {
      LeafProver lp{b, T, L, {}, {}, {}};
      // literal extraction: L = ((T and l1) and l2)...
      std::vector<PropPtr> spine;  // prefixes from root down
      {
        PropPtr cur = L;
        while (cur->kind == PropKind::And) {
          spine.push_back(cur);
          cur = cur->a;
        }
      }
      // spine[0] = L, spine.back() = (T and l1); literal i (1-based) lives
      // in spine[n-i] as the right conjunct.
      std::size_t n = assign.size();
      for (std::size_t i = 0; i < n; ++i) {
        const auto& [atom, val] = assign[i];
        std::size_t cur = b.imp_refl(L);
        for (std::size_t kdx = 0; kdx + 1 < n - i; ++kdx) {
          const PropPtr& node = spine[kdx];
          cur = b.syll(cur, b.ax(3, p_imp(node, node->a)));
        }
        const PropPtr& node = spine[n - 1 - i];
        cur = b.syll(cur, b.ax(4, p_imp(node, node->b)));
        lp.lit[atom->id] = cur;
        lp.value[atom->id] = val;
      }
      auto [lg, vg] = lp.ev(goal);
      if (!vg)
        throw std::runtime_error("prove_taut_frege: not a tautology (" +
                                 print_prop(goal) + ")");
      return lg;
    }
    const PropPtr& atom = atoms[assign.size()];
    assign.emplace_back(atom, true);
    std::size_t pt = self(self, p_and(L, atom));
    assign.back().second = false;
    std::size_t pf = self(self, p_and(L, p_not(atom)));
    assign.pop_back();
    std::size_t mg = b.inst(
        T.merge, {{T.l->id, L}, {T.a->id, atom}, {T.g->id, goal}});
    return b.mp(b.mp(mg, pt), pf);
  };
  std::size_t root = branch(branch, p_true());  // T -> goal
  std::size_t g = b.mp(root, b.ax(14, p_true()));
  return b.to_proof(g);
}

// --- structural clause prover -----------------------------------------------

namespace {

bool cond_shape(const PropPtr& q, PropPtr& sel, PropPtr& b0, PropPtr& b1) {
  if (q->kind != PropKind::Or) return false;
  const PropPtr& l = q->a;
  const PropPtr& r = q->b;
  if (l->kind != PropKind::And || r->kind != PropKind::And) return false;
  if (l->a->kind != PropKind::Not) return false;
  if (!same(l->a->a, r->a)) return false;
  sel = r->a;
  b0 = l->b;
  b1 = r->b;
  return true;
}

std::size_t clause_line(FregeBuilder& b, const PropPtr& g, std::size_t tt) {
  const TemplateLib& T = templates();
  switch (g->kind) {
    case PropKind::True:
      return b.ax(14, g);
    case PropKind::And: {
      std::size_t x = clause_line(b, g->a, tt);
      std::size_t y = clause_line(b, g->b, tt);
      return b.and_intro(x, y);
    }
    case PropKind::Not:
      if (g->a->kind == PropKind::False) return b.append(T.not_bot);
      break;
    case PropKind::Imp:
      try {
        std::size_t y = clause_line(b, g->b, tt);
        return b.mp(b.ax(1, p_imp(g->b, g)), y);
      } catch (const std::runtime_error&) {
      }
      break;
    case PropKind::Iff: {
      if (same(g->a, g->b)) return iff_refl_line(b, g->a);
      // conditional expansions against their selected branch, on either side
      for (int side = 0; side < 2; ++side) {
        const PropPtr& q = side == 0 ? g->a : g->b;
        const PropPtr& rhs = side == 0 ? g->b : g->a;
        PropPtr sel, br0, br1;
        if (!cond_shape(q, sel, br0, br1)) continue;
        std::size_t qr = 0;  // line proving q iff rhs
        if (sel->kind == PropKind::False && same(br0, rhs)) {
          std::size_t t = b.inst(T.qlem_f, {{T.a->id, sel},
                                            {T.b->id, br0},
                                            {T.c->id, br1}});
          qr = b.mp(t, b.append(T.not_bot));
        } else if (sel->kind == PropKind::True && same(br1, rhs)) {
          std::size_t t = b.inst(T.qlem_t, {{T.a->id, sel},
                                            {T.b->id, br0},
                                            {T.c->id, br1}});
          qr = b.mp(t, b.ax(14, p_true()));
        } else if (same(br0, br1) && same(br0, rhs)) {
          qr = b.inst(T.qlem_same, {{T.a->id, sel}, {T.b->id, br0}});
        } else {
          continue;
        }
        if (side == 0) return qr;
        // flip: from (q iff rhs) derive (rhs iff q)
        std::size_t i1 = b.mp(b.ax(11, p_imp(b.at(qr), p_imp(q, rhs))), qr);
        std::size_t i2 = b.mp(b.ax(12, p_imp(b.at(qr), p_imp(rhs, q))), qr);
        std::size_t a13 = b.ax(13, p_imp(b.at(i2), p_imp(b.at(i1),
                                                         p_iff(rhs, q))));
        return b.mp(b.mp(a13, i2), i1);
      }
      break;
    }
    default:
      break;
  }
  return b.append(prove_taut_frege(g, tt));
}

}  // namespace

FregeProof prove_clause(const PropPtr& goal, std::size_t tt_atoms) {
  FregeBuilder b;
  std::size_t l = clause_line(b, goal, tt_atoms);
  return b.to_proof(l);
}

FregeProof emit_axiom_proof(const std::string& id,
                            const std::map<std::string, TermPtr>& ti,
                            const std::map<std::string, FnPtr>& fi,
                            const LenVec& lv) {
  FormulaPtr f = build_eqax(id, ti, fi);
  PropPtr g = translate(f, lv);
  return prove_clause(g);
}

// --- congruence emitter -----------------------------------------------------

namespace {

// Emits guarded equivalences P -> (phi iff phi'), where phi' replaces the
// given atoms; each replaced atom needs a line proving P -> (atom iff repl).
class CongProver {
 public:
  CongProver(FregeBuilder& b, PropPtr premise,
             std::map<std::size_t, std::pair<PropPtr, std::size_t>> repl)
      : b_(b), p_(std::move(premise)), repl_(std::move(repl)) {}

  // Returns (line of P -> (phi iff phi'), phi').
  std::pair<std::size_t, PropPtr> emit(const PropPtr& phi) {
    const TemplateLib& T = templates();
    if (!touched(phi)) {
      std::size_t r = iff_refl_line(b_, phi);
      return {b_.under(p_, r), phi};
    }
    if (phi->kind == PropKind::Atom) {
      const auto& [to, line] = repl_.at(phi->id);
      return {line, to};
    }
    if (phi->kind == PropKind::Not) {
      auto [la, fa] = emit(phi->a);
      std::size_t t = b_.inst(T.cong_not, {{T.a->id, phi->a}, {T.b->id, fa}});
      std::size_t u = b_.under(p_, t);
      return {b_.imp_mp(u, la), p_not(fa)};
    }
    auto [la, fa] = emit(phi->a);
    auto [lc, fc] = emit(phi->b);
    const FregeProof* tpl = nullptr;
    PropPtr out;
    switch (phi->kind) {
      case PropKind::And: tpl = &T.cong_and; out = p_and(fa, fc); break;
      case PropKind::Or: tpl = &T.cong_or; out = p_or(fa, fc); break;
      case PropKind::Imp: tpl = &T.cong_imp; out = p_imp(fa, fc); break;
      case PropKind::Iff: tpl = &T.cong_iff; out = p_iff(fa, fc); break;
      default:
        throw std::logic_error("cong: unexpected node");
    }
    std::size_t t = b_.inst(*tpl, {{T.a->id, phi->a},
                                   {T.b->id, fa},
                                   {T.c->id, phi->b},
                                   {T.d->id, fc}});
    std::size_t u = b_.under(p_, t);
    return {b_.imp_mp(b_.imp_mp(u, la), lc), out};
  }

 private:
  bool touched(const PropPtr& f) {
    auto hit = touched_.find(f->id);
    if (hit != touched_.end()) return hit->second;
    bool t = false;
    if (f->kind == PropKind::Atom) {
      t = repl_.count(f->id) > 0;
    } else {
      if (f->a) t = touched(f->a);
      if (!t && f->b) t = touched(f->b);
    }
    touched_[f->id] = t;
    return t;
  }

  FregeBuilder& b_;
  PropPtr p_;
  std::map<std::size_t, std::pair<PropPtr, std::size_t>> repl_;
  std::map<std::size_t, bool> touched_;
};

// Splits a left-associated conjunction into its conjunct list.
std::vector<PropPtr> conj_list(const PropPtr& f) {
  std::vector<PropPtr> out;
  PropPtr cur = f;
  while (cur->kind == PropKind::And) {
    out.push_back(cur->b);
    cur = cur->a;
  }
  out.push_back(cur);
  std::reverse(out.begin(), out.end());
  return out;
}

// Line proving conj -> (i-th conjunct), 1-based, left-associated shape.
std::size_t conj_project(FregeBuilder& b, const PropPtr& conj, std::size_t i,
                         std::size_t total) {
  if (total == 1) return b.imp_refl(conj);
  std::size_t cur = b.imp_refl(conj);
  PropPtr node = conj;
  for (std::size_t k = total; k > i; --k) {
    cur = b.syll(cur, b.ax(3, p_imp(node, node->a)));
    node = node->a;
  }
  if (i > 1) {
    cur = b.syll(cur, b.ax(4, p_imp(node, node->b)));
  }
  return cur;
}

TermPtr ones_lit(std::size_t k) { return lit(Bits(k, '1')); }

TermPtr chop_term(const std::string& x, bool left, std::size_t k) {
  if (k == 0) return var(x);
  if (left)
    return apply(base_fn(BaseTag::LChop), {ones_lit(k), var(x)});
  return apply(base_fn(BaseTag::RChop), {var(x), ones_lit(k)});
}

TermPtr cat_term(TermPtr a, TermPtr b) {
  return apply(base_fn(BaseTag::Cat), {std::move(a), std::move(b)});
}

}  // namespace

// --- NIND emission ----------------------------------------------------------

FregeProof emit_nind(const PremiseProver& peps, const PremiseProver& p0,
                     const PremiseProver& p1, const FormulaPtr& a,
                     const std::string& x, bool left, std::size_t m,
                     LenVec lv) {
  const TemplateLib& T = templates();
  lv[x] = m;
  auto B = [&](std::size_t k) {
    return translate(substitute(a, x, chop_term(x, left, k)), lv);
  };
  LenVec lve = lv;
  lve.erase(x);
  FregeProof pe = peps(lve);
  expect(same(pe.goal, B(m)), "nind: base premise goal mismatch");
  if (m == 0) return pe;

  FregeBuilder b;
  std::size_t cur = b.append(pe);
  for (std::size_t k = m; k-- > 0;) {
    std::size_t j = m - k;  // length of the chopped variable at this link
    PropPtr Bk = B(k);
    PropPtr Bk1 = B(k + 1);
    TermPtr tk1 = chop_term(x, left, k + 1);
    // case terms t_k = t_{k+1} extended by one bit
    std::array<TermPtr, 2> ext;
    for (int bit = 0; bit < 2; ++bit) {
      TermPtr c = lit(bit ? "1" : "0");
      ext[bit] = left ? cat_term(c, tk1) : cat_term(tk1, c);
    }
    std::array<PropPtr, 2> P, Ap;
    for (int bit = 0; bit < 2; ++bit) {
      P[bit] = translate(f_eq(chop_term(x, left, k), ext[bit]), lv);
      Ap[bit] = translate(substitute(a, x, ext[bit]), lv);
    }
    // the case bit of t_k
    PropPtr atom = term_formula(chop_term(x, left, k), lv, left ? 1 : j);
    expect(atom->kind == PropKind::Atom, "nind: case bit is not an atom");
    expect(same(subst_atoms(Bk, {{atom->id, p_false()}}), Ap[0]) &&
               same(subst_atoms(Bk, {{atom->id, p_true()}}), Ap[1]),
           "nind: case instances are not bit substitutions");
    // premise images at this length
    LenVec lvp = lv;
    lvp[x] = j - 1;
    std::array<std::size_t, 2> sub;
    for (int bit = 0; bit < 2; ++bit) {
      FregeProof q = (bit ? p1 : p0)(lvp);
      std::map<std::size_t, PropPtr> map;
      for (std::size_t i = 1; i + 1 <= j; ++i)
        map[p_atom(x, i, j - 1)->id] = term_formula(tk1, lv, i);
      FregeProof s = subst_frege(q, map);
      expect(same(s.goal, p_imp(Bk1, Ap[bit])),
             "nind: step premise image mismatch");
      sub[bit] = b.append(s);
    }
    // bridges P[bit] -> (Bk iff Ap[bit])
    std::size_t chd = left ? 1 : j;  // index of the changed conjunct
    std::array<std::size_t, 2> bridge;
    for (int bit = 0; bit < 2; ++bit) {
      PropPtr cnst = bit ? p_true() : p_false();
      std::size_t proj = conj_project(b, P[bit], chd, j);
      expect(same(b.at(proj)->b, p_iff(atom, cnst)),
             "nind: case equation has unexpected shape");
      CongProver cp(b, P[bit], {{atom->id, {cnst, proj}}});
      auto [line, img] = cp.emit(Bk);
      expect(same(img, Ap[bit]), "nind: bridge image mismatch");
      bridge[bit] = line;
    }
    // D = P[0] or P[1]
    PropPtr D = p_or(P[0], P[1]);
    std::size_t dline;
    {
      std::size_t tf = b.inst(T.to_false, {{T.a->id, atom}});
      std::size_t tt = b.inst(T.to_true, {{T.a->id, atom}});
      // reflexive conjuncts, proved outside the hypotheses
      std::vector<PropPtr> cl = conj_list(P[0]);
      std::map<std::size_t, std::size_t> refl;  // conjunct pos -> line
      for (std::size_t i = 1; i <= j; ++i) {
        if (i == chd) continue;
        expect(cl[i - 1]->kind == PropKind::Iff &&
                   same(cl[i - 1]->a, cl[i - 1]->b),
               "nind: non-case conjunct is not reflexive");
        refl[i] = iff_refl_line(b, cl[i - 1]->a);
      }
      std::array<std::size_t, 2> dhalf;
      for (int bit = 0; bit < 2; ++bit) {
        std::size_t h = b.assume(bit ? atom : p_not(atom));
        std::size_t cj = b.mp(bit ? tt : tf, h);
        std::size_t acc = 0;
        for (std::size_t i = 1; i <= j; ++i) {
          std::size_t li = i == chd ? cj : refl.at(i);
          acc = i == 1 ? li : b.and_intro(acc, li);
        }
        b.mp(b.ax(bit ? 7 : 6, p_imp(P[bit], D)), acc);
        dhalf[bit] = b.discharge();
      }
      std::size_t e = b.inst(T.em_merge, {{T.a->id, atom}, {T.g->id, D}});
      dline = b.mp(b.mp(e, dhalf[1]), dhalf[0]);
    }
    // link: Bk1 -> Bk
    std::size_t h = b.assume(Bk1);
    std::array<std::size_t, 2> cases;
    for (int bit = 0; bit < 2; ++bit) {
      std::size_t h2 = b.assume(P[bit]);
      std::size_t iff = b.mp(bridge[bit], h2);
      std::size_t ai = b.mp(sub[bit], h);
      std::size_t a12 = b.ax(
          12, p_imp(p_iff(Bk, Ap[bit]), p_imp(Ap[bit], Bk)));
      b.mp(b.mp(a12, iff), ai);
      cases[bit] = b.discharge();
    }
    std::size_t a8 = b.ax(8, p_imp(b.at(cases[0]),
                                   p_imp(b.at(cases[1]), p_imp(D, Bk))));
    b.mp(b.mp(b.mp(a8, cases[0]), cases[1]), dline);
    std::size_t link = b.discharge();  // Bk1 -> Bk
    cur = b.mp(link, cur);
  }
  expect(same(b.at(cur), translate(a, lv)), "nind: conclusion mismatch");
  return b.to_proof(cur);
}

// --- TIND emission ----------------------------------------------------------

FregeProof emit_tind(const PremiseProver& peps, const PremiseProver& p0,
                     const PremiseProver& p1, const PremiseProver& step,
                     const FormulaPtr& a, const std::string& x,
                     const std::string& z, const FnPtr& hl, const FnPtr& hr,
                     std::size_t m, std::size_t p, LenVec lv,
                     std::size_t* node_count) {
  const TemplateLib& T = templates();
  lv[x] = m;
  lv[z] = p;
  LengthCalc lc;
  std::size_t nodes = 0;
  if (m == 0) {
    LenVec lve = lv;
    lve.erase(x);
    FregeProof pe = peps(lve);
    expect(same(pe.goal, translate(a, lv)), "tind: m=0 goal mismatch");
    if (node_count) *node_count = 1;
    return pe;
  }
  FregeBuilder b;
  auto zsub = [&](const TermPtr& w, std::size_t zl) {
    std::map<std::size_t, PropPtr> map;
    for (std::size_t jj = 1; jj <= zl; ++jj)
      map[p_atom(z, jj, zl)->id] = term_formula(w, lv, jj);
    return map;
  };
  auto build = [&](auto&& self, const TermPtr& u, const TermPtr& w)
      -> std::size_t {
    ++nodes;
    std::size_t mu = lc.term_len(u, lv);
    std::size_t zl = lc.term_len(w, lv);
    PropPtr gu = translate(substitute_multi(a, {{x, u}, {z, w}}), lv);
    if (mu == 1) {
      PropPtr atom = term_formula(u, lv, 1);
      expect(atom->kind == PropKind::Atom, "tind: leaf bit is not an atom");
      LenVec lvp = lv;
      lvp.erase(x);
      lvp[z] = zl;
      std::array<std::size_t, 2> base;
      std::array<PropPtr, 2> img;
      for (int bit = 0; bit < 2; ++bit) {
        FregeProof q = (bit ? p1 : p0)(lvp);
        FregeProof s = subst_frege(q, zsub(w, zl));
        img[bit] = translate(
            substitute_multi(a, {{x, lit(bit ? "1" : "0")}, {z, w}}), lv);
        expect(same(s.goal, img[bit]), "tind: leaf premise image mismatch");
        expect(same(subst_atoms(gu, {{atom->id,
                                      bit ? p_true() : p_false()}}),
                    img[bit]),
               "tind: leaf case is not a bit substitution");
        base[bit] = b.append(s);
      }
      std::size_t tf = b.inst(T.to_false, {{T.a->id, atom}});
      std::size_t tt = b.inst(T.to_true, {{T.a->id, atom}});
      std::array<std::size_t, 2> bridge;
      for (int bit = 0; bit < 2; ++bit) {
        PropPtr cnst = bit ? p_true() : p_false();
        PropPtr prem = p_iff(atom, cnst);
        std::size_t pr = b.imp_refl(prem);
        CongProver cp(b, prem, {{atom->id, {cnst, pr}}});
        auto [line, fi] = cp.emit(gu);
        expect(same(fi, img[bit]), "tind: leaf bridge mismatch");
        bridge[bit] = line;
      }
      std::array<std::size_t, 2> half;
      for (int bit = 0; bit < 2; ++bit) {
        std::size_t h = b.assume(bit ? atom : p_not(atom));
        std::size_t cj = b.mp(bit ? tt : tf, h);
        std::size_t iff = b.mp(bridge[bit], cj);
        std::size_t a12 = b.ax(12, p_imp(p_iff(gu, img[bit]),
                                         p_imp(img[bit], gu)));
        b.mp(b.mp(a12, iff), base[bit]);
        half[bit] = b.discharge();
      }
      std::size_t e = b.inst(T.em_merge, {{T.a->id, atom}, {T.g->id, gu}});
      return b.mp(b.mp(e, half[1]), half[0]);
    }
    TermPtr ul = apply(base_fn(BaseTag::LHalf), {u});
    TermPtr ur = apply(base_fn(BaseTag::RHalf), {u});
    TermPtr wl = apply(hl, {w});
    TermPtr wr = apply(hr, {w});
    std::size_t cl = self(self, ul, wl);
    std::size_t cr = self(self, ur, wr);
    std::size_t conj = b.and_intro(cl, cr);
    LenVec lvs = lv;
    lvs[x] = mu;
    lvs[z] = zl;
    FregeProof st = step(lvs);
    std::map<std::size_t, PropPtr> map = zsub(w, zl);
    for (std::size_t i = 1; i <= mu; ++i)
      map[p_atom(x, i, mu)->id] = term_formula(u, lv, i);
    FregeProof si = subst_frege(st, map);
    expect(same(si.goal, p_imp(p_and(b.at(cl), b.at(cr)), gu)),
           "tind: step image mismatch");
    std::size_t sl = b.append(si);
    return b.mp(sl, conj);
  };
  std::size_t root = build(build, var(x), var(z));
  if (node_count) *node_count = nodes;
  expect(same(b.at(root), translate(a, lv)), "tind: conclusion mismatch");
  return b.to_proof(root);
}

// --- whole-proof translation ------------------------------------------------

namespace {

std::string lv_key(const LenVec& lv) {
  std::string s;
  for (const auto& [k, v] : lv) s += k + ":" + std::to_string(v) + ";";
  return s;
}

}  // namespace

FregeProof translate_t1_proof(const T1Proof& proof, const LenVec& lv) {
  std::map<std::pair<std::size_t, std::string>, FregeProof> memo;
  LengthCalc lc;
  auto emitl = [&](auto&& self, std::size_t k, const LenVec& l)
      -> const FregeProof& {
    auto key = std::make_pair(k, lv_key(l));
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    const ProofLine& ln = proof.lines.at(k - 1);
    const Justification& j = ln.just;
    PropPtr goal = translate(ln.formula, l);
    FregeProof out;
    switch (j.kind) {
      case JustKind::PropAx: {
        FregeBuilder b;
        out = b.to_proof(b.ax(std::stoi(j.axiom_id), goal));
        break;
      }
      case JustKind::EqAx:
        out = emit_axiom_proof(j.axiom_id, j.term_inst, j.fn_inst, l);
        break;
      case JustKind::MP: {
        std::size_t i1 = j.premises.at(0), i2 = j.premises.at(1);
        const FormulaPtr& f1 = proof.lines.at(i1 - 1).formula;
        bool first_is_imp =
            f1->kind == FormulaKind::Imp &&
            same(translate(f1->b, l), goal);
        std::size_t imp = first_is_imp ? i1 : i2;
        std::size_t ant = first_is_imp ? i2 : i1;
        FregeBuilder b;
        std::size_t li = b.append(self(self, imp, l));
        std::size_t la = b.append(self(self, ant, l));
        out = b.to_proof(b.mp(li, la));
        break;
      }
      case JustKind::Subst: {
        std::size_t pl = lc.term_len(j.term, l);
        LenVec li = l;
        li[j.var] = pl;
        const FregeProof& inner = self(self, j.premises.at(0), li);
        std::map<std::size_t, PropPtr> map;
        for (std::size_t i = 1; i <= pl; ++i)
          map[p_atom(j.var, i, pl)->id] = term_formula(j.term, l, i);
        out = subst_frege(inner, map);
        break;
      }
      case JustKind::NindL:
      case JustKind::NindR: {
        std::size_t m = l.at(j.var);
        auto prem = [&](std::size_t idx) {
          return PremiseProver([&self, idx](const LenVec& q) {
            return self(self, idx, q);
          });
        };
        out = emit_nind(prem(j.premises.at(0)), prem(j.premises.at(1)),
                        prem(j.premises.at(2)), j.schema, j.var,
                        j.kind == JustKind::NindL, m, l);
        break;
      }
      case JustKind::Tind: {
        std::size_t m = l.at(j.var);
        std::size_t p = l.at(j.var2);
        auto prem = [&](std::size_t idx) {
          return PremiseProver([&self, idx](const LenVec& q) {
            return self(self, idx, q);
          });
        };
        out = emit_tind(prem(j.premises.at(0)), prem(j.premises.at(1)),
                        prem(j.premises.at(2)), prem(j.premises.at(3)),
                        j.schema, j.var, j.var2, j.hl, j.hr, m, p, l);
        break;
      }
    }
    expect(same(out.goal, goal), "translate_t1_proof: goal mismatch at line " +
                                     std::to_string(k));
    return memo.emplace(key, std::move(out)).first->second;
  };
  return emitl(emitl, proof.lines.size(), lv);
}

// --- printing / parsing -----------------------------------------------------

std::string print_frege(const FregeProof& p) {
  std::ostringstream os;
  os << "goal: " << print_prop(p.goal) << "\n";
  for (std::size_t k = 1; k <= p.lines.size(); ++k) {
    const FregeLine& ln = p.lines[k - 1];
    os << k << ": " << print_prop(ln.f) << " ; ";
    if (ln.schema > 0)
      os << "ax " << ln.schema;
    else
      os << "mp " << ln.p1 << " " << ln.p2;
    os << "\n";
  }
  return os.str();
}

namespace {

struct PropParser {
  const std::string& s;
  std::size_t p = 0;
  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  std::string word() {
    ws();
    std::size_t start = p;
    while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p])) &&
           s[p] != '(' && s[p] != ')')
      ++p;
    if (start == p) throw std::runtime_error("prop parse: expected token");
    return s.substr(start, p - start);
  }
  PropPtr parse() {
    ws();
    if (p >= s.size()) throw std::runtime_error("prop parse: early end");
    if (s[p] == '(') {
      ++p;
      std::string head = word();
      PropPtr out;
      if (head == "not") {
        out = p_not(parse());
      } else {
        PropPtr a = parse();
        PropPtr b = parse();
        if (head == "and") out = p_and(a, b);
        else if (head == "or") out = p_or(a, b);
        else if (head == "imp") out = p_imp(a, b);
        else if (head == "iff") out = p_iff(a, b);
        else throw std::runtime_error("prop parse: bad head " + head);
      }
      ws();
      if (p >= s.size() || s[p] != ')')
        throw std::runtime_error("prop parse: missing )");
      ++p;
      return out;
    }
    std::string w = word();
    if (w == "T") return p_true();
    if (w == "F") return p_false();
    std::size_t lb = w.find('[');
    std::size_t sl = w.find('/', lb);
    if (lb == std::string::npos || sl == std::string::npos || w.back() != ']')
      throw std::runtime_error("prop parse: bad atom " + w);
    return p_atom(w.substr(0, lb),
                  std::stoul(w.substr(lb + 1, sl - lb - 1)),
                  std::stoul(w.substr(sl + 1, w.size() - sl - 2)));
  }
};

}  // namespace

PropPtr parse_prop(const std::string& text) {
  PropParser pp{text};
  PropPtr f = pp.parse();
  pp.ws();
  if (pp.p != text.size())
    throw std::runtime_error("prop parse: trailing text");
  return f;
}

FregeProof parse_frege(const std::string& text) {
  FregeProof out;
  std::istringstream in(text);
  std::string raw;
  bool have_goal = false;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    try {
      if (!have_goal) {
        if (line.compare(a, 5, "goal:") != 0)
          throw std::runtime_error("expected 'goal: <formula>' first");
        out.goal = parse_prop(line.substr(a + 5));
        have_goal = true;
        continue;
      }
      std::size_t colon = line.find(':', a);
      std::size_t semi = line.rfind(';');
      if (colon == std::string::npos || semi == std::string::npos)
        throw std::runtime_error("expected '<k>: <formula> ; <just>'");
      std::size_t k = std::stoul(line.substr(a, colon - a));
      if (k != out.lines.size() + 1)
        throw std::runtime_error("out-of-order line number");
      FregeLine ln;
      ln.f = parse_prop(line.substr(colon + 1, semi - colon - 1));
      std::istringstream js(line.substr(semi + 1));
      std::string head;
      js >> head;
      if (head == "ax") {
        js >> ln.schema;
      } else if (head == "mp") {
        ln.schema = 0;
        js >> ln.p1 >> ln.p2;
      } else {
        throw std::runtime_error("bad justification " + head);
      }
      out.lines.push_back(std::move(ln));
    } catch (const std::exception& e) {
      throw std::runtime_error("frege proof line " + std::to_string(lineno) +
                               ": " + e.what());
    }
  }
  if (!have_goal) throw std::runtime_error("frege proof has no goal");
  return out;
}

}  // namespace t1kit
