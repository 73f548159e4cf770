#include "t1kit/t1check.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace t1kit {

namespace {

// --- shorthand term builders ------------------------------------------------

TermPtr v(const std::string& n) { return var(n); }
TermPtr teps() { return apply(base_fn(BaseTag::Eps), {}); }
TermPtr t0() { return apply(base_fn(BaseTag::Zero), {}); }
TermPtr t1() { return apply(base_fn(BaseTag::One), {}); }
TermPtr cat2(TermPtr a, TermPtr b) {
  return apply(base_fn(BaseTag::Cat), {std::move(a), std::move(b)});
}
TermPtr az(TermPtr a) { return apply(base_fn(BaseTag::AllZero), {std::move(a)}); }
TermPtr ao(TermPtr a) { return apply(base_fn(BaseTag::AllOne), {std::move(a)}); }
TermPtr lh(TermPtr a) { return apply(base_fn(BaseTag::LHalf), {std::move(a)}); }
TermPtr rh(TermPtr a) { return apply(base_fn(BaseTag::RHalf), {std::move(a)}); }
// y |> x : drop |y| leftmost bits of x.
TermPtr lchop2(TermPtr y, TermPtr x) {
  return apply(base_fn(BaseTag::LChop), {std::move(y), std::move(x)});
}
// x <| y : drop |y| rightmost bits of x.
TermPtr rchop2(TermPtr x, TermPtr y) {
  return apply(base_fn(BaseTag::RChop), {std::move(x), std::move(y)});
}
TermPtr cond4(TermPtr w, TermPtr x, TermPtr y, TermPtr z) {
  return apply(base_fn(BaseTag::Cond),
               {std::move(w), std::move(x), std::move(y), std::move(z)});
}
// x CEL (y,z): y when |x| is even, z when |x| is odd.
TermPtr cel(const TermPtr& x, TermPtr y, TermPtr z) {
  return cond4(lchop2(lh(x), rh(x)), std::move(y), z, z);
}

// --- normalization ----------------------------------------------------------
// The constants can be written as bare symbols (0-ary applications) or as
// string literals; the kernel compares formulas modulo that choice.

TermPtr norm_term(const TermPtr& t) {
  if (t->kind != TermKind::Apply) return t;
  if (t->fn->kind == FnKind::Base && t->args.empty()) {
    switch (t->fn->tag) {
      case BaseTag::Eps:
        return lit("");
      case BaseTag::Zero:
        return lit("0");
      case BaseTag::One:
        return lit("1");
      default:
        break;
    }
  }
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  bool changed = false;
  for (const auto& a : t->args) {
    args.push_back(norm_term(a));
    changed = changed || args.back() != a;
  }
  return changed ? apply(t->fn, std::move(args)) : t;
}

FormulaPtr norm_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return f_eq(norm_term(f->t), norm_term(f->u));
    case FormulaKind::Not:
      return f_not(norm_formula(f->a));
    case FormulaKind::And:
      return f_and(norm_formula(f->a), norm_formula(f->b));
    case FormulaKind::Or:
      return f_or(norm_formula(f->a), norm_formula(f->b));
    case FormulaKind::Imp:
      return f_imp(norm_formula(f->a), norm_formula(f->b));
    case FormulaKind::Iff:
      return f_iff(norm_formula(f->a), norm_formula(f->b));
  }
  throw std::logic_error("bad formula kind");
}

bool eqf(const FormulaPtr& a, const FormulaPtr& b) {
  return formula_eq(norm_formula(a), norm_formula(b));
}

// --- propositional schemas --------------------------------------------------
// Metavariables 0=A, 1=B, 2=C.

struct Pat {
  int mv = -1;  // >= 0: metavariable
  FormulaKind k = FormulaKind::Not;
  std::shared_ptr<const Pat> a, b;
};
using PatPtr = std::shared_ptr<const Pat>;

PatPtr P(int mv) {
  auto p = std::make_shared<Pat>();
  p->mv = mv;
  return p;
}
PatPtr P(FormulaKind k, PatPtr a, PatPtr b = nullptr) {
  auto p = std::make_shared<Pat>();
  p->k = k;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}
PatPtr Pimp(PatPtr a, PatPtr b) {
  return P(FormulaKind::Imp, std::move(a), std::move(b));
}
PatPtr Pand(PatPtr a, PatPtr b) {
  return P(FormulaKind::And, std::move(a), std::move(b));
}
PatPtr Por(PatPtr a, PatPtr b) {
  return P(FormulaKind::Or, std::move(a), std::move(b));
}
PatPtr Piff(PatPtr a, PatPtr b) {
  return P(FormulaKind::Iff, std::move(a), std::move(b));
}
PatPtr Pnot(PatPtr a) { return P(FormulaKind::Not, std::move(a)); }

const std::vector<PatPtr>& prop_schemas() {
  static const std::vector<PatPtr> table = [] {
    PatPtr A = P(0), B = P(1), C = P(2);
    std::vector<PatPtr> t;
    t.push_back(Pimp(A, Pimp(B, A)));                                   // 1
    t.push_back(Pimp(Pimp(A, Pimp(B, C)),
                     Pimp(Pimp(A, B), Pimp(A, C))));                    // 2
    t.push_back(Pimp(Pand(A, B), A));                                   // 3
    t.push_back(Pimp(Pand(A, B), B));                                   // 4
    t.push_back(Pimp(A, Pimp(B, Pand(A, B))));                          // 5
    t.push_back(Pimp(A, Por(A, B)));                                    // 6
    t.push_back(Pimp(B, Por(A, B)));                                    // 7
    t.push_back(Pimp(Pimp(A, C),
                     Pimp(Pimp(B, C), Pimp(Por(A, B), C))));            // 8
    t.push_back(Pimp(Pimp(A, B), Pimp(Pimp(A, Pnot(B)), Pnot(A))));     // 9
    t.push_back(Pimp(Pnot(Pnot(A)), A));                                // 10
    t.push_back(Pimp(Piff(A, B), Pimp(A, B)));                          // 11
    t.push_back(Pimp(Piff(A, B), Pimp(B, A)));                          // 12
    t.push_back(Pimp(Pimp(A, B), Pimp(Pimp(B, A), Piff(A, B))));        // 13
    return t;
  }();
  return table;
}

bool match_pat(const PatPtr& p, const FormulaPtr& f,
               std::array<FormulaPtr, 3>& bind) {
  if (p->mv >= 0) {
    if (!bind[p->mv]) {
      bind[p->mv] = f;
      return true;
    }
    return formula_eq(bind[p->mv], f);
  }
  if (f->kind != p->k) return false;
  if (!match_pat(p->a, f->a, bind)) return false;
  return !p->b || match_pat(p->b, f->b, bind);
}

// --- equality / defining axiom clauses --------------------------------------

FnPtr need_fn(const std::map<std::string, FnPtr>& fns, const std::string& key,
              const std::string& id) {
  auto it = fns.find(key);
  if (it == fns.end() || !it->second)
    throw std::invalid_argument("axiom " + id + " needs symbol " + key);
  return it->second;
}

std::vector<TermPtr> yvars(int k) {
  std::vector<TermPtr> ys;
  for (int i = 1; i <= k; ++i) ys.push_back(v("y" + std::to_string(i)));
  return ys;
}

std::vector<FormulaPtr> group_clauses(const std::string& group,
                                      const std::map<std::string, FnPtr>& fns) {
  TermPtr x = v("x"), y = v("y"), z = v("z"), w = v("w");
  std::vector<FormulaPtr> c;
  if (group == "1a") {
    c.push_back(f_eq(x, x));
  } else if (group == "1b") {
    c.push_back(f_imp(f_eq(x, y), f_eq(y, x)));
  } else if (group == "1c") {
    c.push_back(f_imp(f_and(f_eq(x, y), f_eq(y, z)), f_eq(x, z)));
  } else if (group == "1d") {
    FnPtr f = need_fn(fns, "f", group);
    int k = fn_arity(f);
    if (k < 1) throw std::invalid_argument("axiom 1d needs arity >= 1");
    std::vector<TermPtr> xs, ys;
    FormulaPtr prem;
    for (int i = 1; i <= k; ++i) {
      xs.push_back(v("x" + std::to_string(i)));
      ys.push_back(v("y" + std::to_string(i)));
      FormulaPtr e = f_eq(xs.back(), ys.back());
      prem = prem ? f_and(prem, e) : e;
    }
    c.push_back(f_imp(prem, f_eq(apply(f, xs), apply(f, ys))));
  } else if (group == "2") {
    c.push_back(f_not(f_eq(teps(), t0())));
    c.push_back(f_not(f_eq(t0(), t1())));
    c.push_back(f_not(f_eq(t1(), teps())));
  } else if (group == "3a") {
    c.push_back(f_eq(cat2(x, teps()), x));
    c.push_back(f_eq(cat2(x, cat2(y, t0())), cat2(cat2(x, y), t0())));
    c.push_back(f_eq(cat2(x, cat2(y, t1())), cat2(cat2(x, y), t1())));
  } else if (group == "3b") {
    c.push_back(f_imp(f_eq(cat2(x, y), teps()),
                      f_and(f_eq(x, teps()), f_eq(y, teps()))));
  } else if (group == "3c") {
    c.push_back(f_imp(f_eq(cat2(x, y), t0()),
                      f_or(f_and(f_eq(x, teps()), f_eq(y, t0())),
                           f_and(f_eq(x, t0()), f_eq(y, teps())))));
    c.push_back(f_imp(f_eq(cat2(x, y), t1()),
                      f_or(f_and(f_eq(x, teps()), f_eq(y, t1())),
                           f_and(f_eq(x, t1()), f_eq(y, teps())))));
  } else if (group == "4a") {
    c.push_back(f_eq(lchop2(teps(), x), x));
    c.push_back(f_eq(lchop2(cat2(t0(), y), x), lchop2(t0(), lchop2(y, x))));
    c.push_back(f_eq(lchop2(cat2(t1(), y), x), lchop2(t1(), lchop2(y, x))));
  } else if (group == "4b") {
    c.push_back(f_eq(lchop2(t0(), teps()), teps()));
    c.push_back(f_eq(lchop2(t0(), cat2(t0(), x)), x));
    c.push_back(f_eq(lchop2(t0(), cat2(t1(), x)), x));
    c.push_back(f_eq(lchop2(t1(), teps()), teps()));
    c.push_back(f_eq(lchop2(t1(), cat2(t0(), x)), x));
    c.push_back(f_eq(lchop2(t1(), cat2(t1(), x)), x));
  } else if (group == "4c") {
    c.push_back(f_iff(f_eq(lchop2(y, x), teps()),
                      f_not(f_eq(lchop2(x, cat2(y, t0())), teps()))));
    c.push_back(f_iff(f_not(f_eq(lchop2(x, cat2(y, t0())), teps())),
                      f_not(f_eq(lchop2(x, cat2(y, t1())), teps()))));
  } else if (group == "5a") {
    c.push_back(f_eq(x, rchop2(x, teps())));
    c.push_back(f_eq(rchop2(rchop2(x, y), t0()), rchop2(x, cat2(y, t0()))));
    c.push_back(f_eq(rchop2(rchop2(x, y), t1()), rchop2(x, cat2(y, t1()))));
  } else if (group == "5b") {
    c.push_back(f_eq(teps(), rchop2(teps(), t0())));
    c.push_back(f_eq(x, rchop2(cat2(x, t0()), t0())));
    c.push_back(f_eq(x, rchop2(cat2(x, t1()), t0())));
    c.push_back(f_eq(teps(), rchop2(teps(), t1())));
    c.push_back(f_eq(x, rchop2(cat2(x, t0()), t1())));
    c.push_back(f_eq(x, rchop2(cat2(x, t1()), t1())));
  } else if (group == "5c") {
    c.push_back(f_iff(f_not(f_eq(teps(), rchop2(cat2(t1(), y), x))),
                      f_not(f_eq(teps(), rchop2(cat2(t0(), y), x)))));
    c.push_back(f_iff(f_not(f_eq(teps(), rchop2(cat2(t0(), y), x))),
                      f_eq(teps(), rchop2(x, y))));
  } else if (group == "6a") {
    c.push_back(f_eq(az(teps()), teps()));
    c.push_back(f_eq(az(cat2(x, t0())), cat2(az(x), t0())));
    c.push_back(f_eq(az(cat2(x, t1())), cat2(az(x), t0())));
  } else if (group == "6b") {
    c.push_back(f_eq(ao(teps()), teps()));
    c.push_back(f_eq(ao(cat2(x, t0())), cat2(ao(x), t1())));
    c.push_back(f_eq(ao(cat2(x, t1())), cat2(ao(x), t1())));
  } else if (group == "7") {
    c.push_back(f_eq(cond4(teps(), x, y, z), x));
    c.push_back(f_eq(cond4(cat2(w, t0()), x, y, z),
                     cat2(az(rchop2(z, y)), y)));
    c.push_back(f_eq(cond4(cat2(w, t1()), x, y, z),
                     cat2(az(rchop2(y, z)), z)));
  } else if (group == "8a") {
    c.push_back(f_eq(cat2(lh(x), rh(x)), x));
  } else if (group == "8b") {
    c.push_back(f_eq(rchop2(lh(x), rh(x)), teps()));
    c.push_back(f_eq(lchop2(t1(), lchop2(lh(x), rh(x))), teps()));
  } else if (group == "9a") {
    for (const TermPtr& i : {t0(), t1()})
      c.push_back(f_eq(
          lh(cat2(x, i)),
          cel(x, lh(x), cat2(lh(x), rchop2(cat2(rh(x), i), rh(x))))));
  } else if (group == "9b") {
    for (const TermPtr& i : {t0(), t1()})
      c.push_back(f_eq(rh(cat2(x, i)),
                       cel(x, cat2(rh(x), i), lchop2(t1(), cat2(rh(x), i)))));
  } else if (group == "9c") {
    for (const TermPtr& i : {t0(), t1()})
      c.push_back(f_eq(lh(cat2(i, x)),
                       cel(x, rchop2(cat2(i, lh(x)), t1()), cat2(i, lh(x)))));
  } else if (group == "9d") {
    for (const TermPtr& i : {t0(), t1()})
      c.push_back(f_eq(
          rh(cat2(i, x)),
          cel(x, cat2(lchop2(lh(x), cat2(i, lh(x))), rh(x)), rh(x))));
  } else if (group == "10") {
    FnPtr f = need_fn(fns, "f", group);
    if (f->kind != FnKind::Lambda)
      throw std::invalid_argument("axiom 10 needs a lambda symbol");
    std::vector<TermPtr> args;
    for (const auto& p : f->params) args.push_back(v(p));
    c.push_back(f_eq(apply(f, args), f->body));
  } else if (group == "11a") {
    FnPtr h = need_fn(fns, "h", group);
    FnPtr F = lcrn_fn(h);
    if (auto err = wf_check(F)) throw std::invalid_argument(*err);
    std::vector<TermPtr> ys = yvars(fn_arity(h) - 1);
    auto crn = [&](TermPtr first) {
      std::vector<TermPtr> a{std::move(first)};
      a.insert(a.end(), ys.begin(), ys.end());
      return apply(F, std::move(a));
    };
    auto step = [&](TermPtr first) {
      std::vector<TermPtr> a{first};
      a.insert(a.end(), ys.begin(), ys.end());
      TermPtr hx = apply(h, std::move(a));
      return rchop2(cat2(hx, t0()), hx);
    };
    c.push_back(f_eq(crn(teps()), teps()));
    c.push_back(f_eq(crn(cat2(t0(), x)),
                     cat2(step(cat2(t0(), x)), crn(x))));
    c.push_back(f_eq(crn(cat2(t1(), x)),
                     cat2(step(cat2(t1(), x)), crn(x))));
  } else if (group == "11b") {
    FnPtr h = need_fn(fns, "h", group);
    FnPtr F = rcrn_fn(h);
    if (auto err = wf_check(F)) throw std::invalid_argument(*err);
    std::vector<TermPtr> ys = yvars(fn_arity(h) - 1);
    auto crn = [&](TermPtr first) {
      std::vector<TermPtr> a{std::move(first)};
      a.insert(a.end(), ys.begin(), ys.end());
      return apply(F, std::move(a));
    };
    auto step = [&](TermPtr first) {
      std::vector<TermPtr> a{first};
      a.insert(a.end(), ys.begin(), ys.end());
      TermPtr hx = apply(h, std::move(a));
      return lchop2(hx, cat2(t0(), hx));
    };
    c.push_back(f_eq(crn(teps()), teps()));
    c.push_back(f_eq(crn(cat2(x, t0())),
                     cat2(crn(x), step(cat2(x, t0())))));
    c.push_back(f_eq(crn(cat2(x, t1())),
                     cat2(crn(x), step(cat2(x, t1())))));
  } else if (group == "12") {
    FnPtr g = need_fn(fns, "g", group);
    FnPtr h = need_fn(fns, "h", group);
    FnPtr hl = need_fn(fns, "hl", group);
    FnPtr hr = need_fn(fns, "hr", group);
    FnPtr F = trn_fn(g, h, hl, hr);
    if (auto err = wf_check(F)) throw std::invalid_argument(*err);
    std::vector<TermPtr> ys = yvars(fn_arity(g) - 2);
    auto args_of = [&](TermPtr a, TermPtr b) {
      std::vector<TermPtr> a2{std::move(a), std::move(b)};
      a2.insert(a2.end(), ys.begin(), ys.end());
      return a2;
    };
    std::vector<TermPtr> hargs = args_of(x, z);
    hargs.push_back(apply(F, args_of(lh(x), apply(hl, {z}))));
    hargs.push_back(apply(F, args_of(rh(x), apply(hr, {z}))));
    TermPtr t = apply(h, std::move(hargs));
    c.push_back(f_eq(apply(F, args_of(x, z)),
                     cond4(rchop2(x, t1()), apply(g, args_of(x, z)), t, t)));
  } else {
    throw std::invalid_argument("unknown axiom group " + group);
  }
  return c;
}

FormulaPtr conj_left(const std::vector<FormulaPtr>& cs) {
  FormulaPtr f = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) f = f_and(f, cs[i]);
  return f;
}

// --- rule instances ---------------------------------------------------------

FormulaPtr subst_const(const FormulaPtr& a, const std::string& x,
                       const TermPtr& c) {
  return substitute(a, x, c);
}

struct NindShape {
  FormulaPtr base, step0, step1;
};

NindShape nind_shape(const FormulaPtr& a, const std::string& x, bool left) {
  NindShape s;
  s.base = subst_const(a, x, teps());
  TermPtr xv = v(x);
  TermPtr s0 = left ? cat2(t0(), xv) : cat2(xv, t0());
  TermPtr s1 = left ? cat2(t1(), xv) : cat2(xv, t1());
  s.step0 = f_imp(a, substitute(a, x, s0));
  s.step1 = f_imp(a, substitute(a, x, s1));
  return s;
}

struct TindShape {
  FormulaPtr base_eps, base_0, base_1, step;
};

TindShape tind_shape(const FormulaPtr& a, const std::string& x,
                     const std::string& z, const FnPtr& hl, const FnPtr& hr) {
  if (fn_arity(hl) != 1 || fn_arity(hr) != 1 || fn_rank(hl) != 0 ||
      fn_rank(hr) != 0)
    throw std::invalid_argument("tind: hl/hr must be unary of rank 0");
  TindShape s;
  s.base_eps = subst_const(a, x, teps());
  s.base_0 = subst_const(a, x, t0());
  s.base_1 = subst_const(a, x, t1());
  TermPtr xv = v(x), zv = v(z);
  FormulaPtr al = substitute_multi(
      a, {{x, lh(xv)}, {z, apply(hl, {zv})}});
  FormulaPtr ar = substitute_multi(
      a, {{x, rh(xv)}, {z, apply(hr, {zv})}});
  s.step = f_imp(f_and(al, ar), a);
  return s;
}

}  // namespace

// --- public axiom interface -------------------------------------------------

bool match_prop_schema(const std::string& id, const FormulaPtr& formula) {
  int n = 0;
  try {
    n = std::stoi(id);
  } catch (...) {
    return false;
  }
  if (n < 1 || n > kNumPropSchemas) return false;
  std::array<FormulaPtr, 3> bind{};
  return match_pat(prop_schemas()[static_cast<std::size_t>(n - 1)], formula,
                   bind);
}

FormulaPtr build_eqax(const std::string& id,
                      const std::map<std::string, TermPtr>& term_inst,
                      const std::map<std::string, FnPtr>& fn_inst) {
  std::string group = id;
  int clause = 0;  // 0: whole-group conjunction
  if (auto dot = id.find('.'); dot != std::string::npos) {
    group = id.substr(0, dot);
    try {
      clause = std::stoi(id.substr(dot + 1));
    } catch (...) {
      throw std::invalid_argument("bad axiom id " + id);
    }
  }
  std::vector<FormulaPtr> cs = group_clauses(group, fn_inst);
  if (clause < 0 || clause > static_cast<int>(cs.size()))
    throw std::invalid_argument("axiom " + group + " has no clause " + id);
  FormulaPtr f = clause == 0 ? conj_left(cs)
                             : cs[static_cast<std::size_t>(clause - 1)];
  if (!term_inst.empty()) f = substitute_multi(f, term_inst);
  return f;
}

std::vector<std::string> eqax_clause_ids(const std::string& group) {
  std::map<std::string, FnPtr> fns;
  // Representative symbols so parameterized groups can be enumerated.
  if (group == "1d" || group == "10")
    fns["f"] = group == "10"
                   ? lambda_fn({"x", "y"}, cat2(v("y"), v("x")))
                   : base_fn(BaseTag::Cat);
  if (group == "11a" || group == "11b") fns["h"] = base_fn(BaseTag::Cat);
  if (group == "12") {
    fns["g"] = base_fn(BaseTag::Cat);
    fns["h"] = lambda_fn({"x", "z", "vl", "vr"}, cat2(v("vl"), v("vr")));
    fns["hl"] = fns["hr"] = lambda_fn({"z"}, v("z"));
  }
  std::size_t n = group_clauses(group, fns).size();
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= n; ++i)
    ids.push_back(group + "." + std::to_string(i));
  return ids;
}

std::vector<std::string> eqax_groups() {
  return {"1a", "1b", "1c", "2",  "3a", "3b", "3c", "4a", "4b", "4c", "5a",
          "5b", "5c", "6a", "6b", "7",  "8a", "8b", "9a", "9b", "9c", "9d"};
}

// --- checking ---------------------------------------------------------------

namespace {

CheckResult fail(std::size_t line, std::string reason) {
  return CheckResult{false, line, std::move(reason)};
}

const FormulaPtr* premise(const T1Proof& p, std::size_t k, std::size_t i) {
  if (i < 1 || i >= k) return nullptr;
  return &p.lines[i - 1].formula;
}

}  // namespace

CheckResult check_line(const T1Proof& proof, std::size_t k) {
  if (k < 1 || k > proof.lines.size()) return fail(k, "no such line");
  const ProofLine& ln = proof.lines[k - 1];
  const Justification& j = ln.just;
  auto prem = [&](std::size_t which) -> const FormulaPtr* {
    if (which >= j.premises.size()) return nullptr;
    return premise(proof, k, j.premises[which]);
  };
  switch (j.kind) {
    case JustKind::PropAx:
      if (!match_prop_schema(j.axiom_id, ln.formula))
        return fail(k, "not an instance of propositional schema " + j.axiom_id);
      return {};
    case JustKind::EqAx: {
      FormulaPtr inst;
      try {
        inst = build_eqax(j.axiom_id, j.term_inst, j.fn_inst);
      } catch (const std::exception& e) {
        return fail(k, e.what());
      }
      if (!eqf(inst, ln.formula))
        return fail(k, "formula differs from axiom " + j.axiom_id +
                           " instance " + print_formula(inst));
      return {};
    }
    case JustKind::MP: {
      const FormulaPtr* a = prem(0);
      const FormulaPtr* b = prem(1);
      if (!a || !b) return fail(k, "mp: bad premise reference");
      auto fits = [&](const FormulaPtr& imp, const FormulaPtr& ant) {
        return imp->kind == FormulaKind::Imp && eqf(imp->a, ant) &&
               eqf(imp->b, ln.formula);
      };
      if (!fits(*a, *b) && !fits(*b, *a))
        return fail(k, "mp: premises do not yield this line");
      return {};
    }
    case JustKind::Subst: {
      const FormulaPtr* a = prem(0);
      if (!a) return fail(k, "subst: bad premise reference");
      if (!j.term) return fail(k, "subst: missing term");
      if (!eqf(substitute(*a, j.var, j.term), ln.formula))
        return fail(k, "subst: line is not the substitution instance");
      return {};
    }
    case JustKind::NindL:
    case JustKind::NindR: {
      if (!j.schema) return fail(k, "nind: missing formula A");
      NindShape s = nind_shape(j.schema, j.var, j.kind == JustKind::NindL);
      const FormulaPtr* b = prem(0);
      const FormulaPtr* s0 = prem(1);
      const FormulaPtr* s1 = prem(2);
      if (!b || !s0 || !s1) return fail(k, "nind: bad premise reference");
      if (!eqf(*b, s.base)) return fail(k, "nind: base premise mismatch");
      if (!eqf(*s0, s.step0)) return fail(k, "nind: 0-step premise mismatch");
      if (!eqf(*s1, s.step1)) return fail(k, "nind: 1-step premise mismatch");
      if (!eqf(ln.formula, j.schema))
        return fail(k, "nind: conclusion is not A");
      return {};
    }
    case JustKind::Tind: {
      if (!j.schema) return fail(k, "tind: missing formula A");
      if (!j.hl || !j.hr) return fail(k, "tind: missing hl/hr");
      TindShape s;
      try {
        s = tind_shape(j.schema, j.var, j.var2, j.hl, j.hr);
      } catch (const std::exception& e) {
        return fail(k, e.what());
      }
      const FormulaPtr* p0 = prem(0);
      const FormulaPtr* p1 = prem(1);
      const FormulaPtr* p2 = prem(2);
      const FormulaPtr* p3 = prem(3);
      if (!p0 || !p1 || !p2 || !p3)
        return fail(k, "tind: bad premise reference");
      if (!eqf(*p0, s.base_eps)) return fail(k, "tind: A[eps] mismatch");
      if (!eqf(*p1, s.base_0)) return fail(k, "tind: A[0] mismatch");
      if (!eqf(*p2, s.base_1)) return fail(k, "tind: A[1] mismatch");
      if (!eqf(*p3, s.step)) return fail(k, "tind: step premise mismatch");
      if (!eqf(ln.formula, j.schema))
        return fail(k, "tind: conclusion is not A");
      return {};
    }
  }
  return fail(k, "bad justification kind");
}

CheckResult check_proof(const T1Proof& proof) {
  if (proof.lines.empty()) return fail(0, "empty proof");
  for (std::size_t k = 1; k <= proof.lines.size(); ++k) {
    CheckResult r = check_line(proof, k);
    if (!r.ok) return r;
  }
  if (!eqf(proof.lines.back().formula, proof.theorem))
    return fail(0, "last line differs from the stated theorem");
  return {};
}

// --- proof file parsing / printing ------------------------------------------

namespace {

void skip_ws(const std::string& s, std::size_t& p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

std::string next_word(const std::string& s, std::size_t& p) {
  skip_ws(s, p);
  std::size_t start = p;
  while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p])) &&
         s[p] != '{' && s[p] != ';')
    ++p;
  return s.substr(start, p - start);
}

// One s-expression: either a bare token or a balanced parenthesized form
// (string literals respected).
std::string next_sexpr(const std::string& s, std::size_t& p) {
  skip_ws(s, p);
  if (p >= s.size()) throw std::runtime_error("expected expression");
  std::size_t start = p;
  if (s[p] != '(') return next_word(s, p);
  int depth = 0;
  bool in_str = false;
  for (; p < s.size(); ++p) {
    char ch = s[p];
    if (in_str) {
      if (ch == '"') in_str = false;
      continue;
    }
    if (ch == '"') in_str = true;
    else if (ch == '(') ++depth;
    else if (ch == ')') {
      if (--depth == 0) {
        ++p;
        return s.substr(start, p - start);
      }
    }
  }
  throw std::runtime_error("unbalanced parentheses");
}

std::size_t next_index(const std::string& s, std::size_t& p) {
  std::string w = next_word(s, p);
  try {
    return static_cast<std::size_t>(std::stoul(w));
  } catch (...) {
    throw std::runtime_error("expected a line number, got '" + w + "'");
  }
}

// Splits "key:=value, key:=value" (top level commas only).
std::vector<std::pair<std::string, std::string>> parse_inst_body(
    const std::string& body) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t p = 0;
  while (true) {
    skip_ws(body, p);
    if (p >= body.size()) break;
    std::size_t eq = body.find(":=", p);
    if (eq == std::string::npos)
      throw std::runtime_error("expected key:=value in instantiation");
    std::string key = body.substr(p, eq - p);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.pop_back();
    p = eq + 2;
    skip_ws(body, p);
    std::size_t vstart = p;
    int depth = 0;
    bool in_str = false;
    while (p < body.size()) {
      char ch = body[p];
      if (in_str) {
        if (ch == '"') in_str = false;
      } else if (ch == '"') {
        in_str = true;
      } else if (ch == '(') {
        ++depth;
      } else if (ch == ')') {
        --depth;
      } else if (ch == ',' && depth == 0) {
        break;
      }
      ++p;
    }
    std::string val = body.substr(vstart, p - vstart);
    while (!val.empty() && std::isspace(static_cast<unsigned char>(val.back())))
      val.pop_back();
    out.emplace_back(key, val);
    if (p < body.size() && body[p] == ',') ++p;
  }
  return out;
}

bool is_fn_key(const std::string& k) {
  return k == "f" || k == "g" || k == "h" || k == "hl" || k == "hr";
}

Justification parse_justification(const std::string& s, const NameEnv* names) {
  Justification j;
  std::size_t p = 0;
  std::string head = next_word(s, p);
  if (head == "propax") {
    j.kind = JustKind::PropAx;
    j.axiom_id = next_word(s, p);
  } else if (head == "eqax") {
    j.kind = JustKind::EqAx;
    j.axiom_id = next_word(s, p);
    skip_ws(s, p);
    if (p < s.size() && s[p] == '{') {
      std::size_t close = s.rfind('}');
      if (close == std::string::npos || close < p)
        throw std::runtime_error("unterminated instantiation block");
      for (auto& [key, val] : parse_inst_body(s.substr(p + 1, close - p - 1))) {
        if (is_fn_key(key))
          j.fn_inst[key] = parse_fn(val, names);
        else
          j.term_inst[key] = parse_term(val, names);
      }
      p = close + 1;
    }
  } else if (head == "mp") {
    j.kind = JustKind::MP;
    j.premises = {next_index(s, p), next_index(s, p)};
  } else if (head == "subst") {
    j.kind = JustKind::Subst;
    j.premises = {next_index(s, p)};
    j.var = next_word(s, p);
    j.term = parse_term(next_sexpr(s, p), names);
  } else if (head == "nindl" || head == "nindr") {
    j.kind = head == "nindl" ? JustKind::NindL : JustKind::NindR;
    j.premises = {next_index(s, p), next_index(s, p), next_index(s, p)};
    skip_ws(s, p);
    if (s.compare(p, 2, "A=") != 0)
      throw std::runtime_error("nind: expected A=<formula>");
    p += 2;
    j.schema = parse_formula(next_sexpr(s, p), names);
    if (next_word(s, p) != "on")
      throw std::runtime_error("nind: expected 'on <var>'");
    j.var = next_word(s, p);
  } else if (head == "tind") {
    j.kind = JustKind::Tind;
    j.premises = {next_index(s, p), next_index(s, p), next_index(s, p),
                  next_index(s, p)};
    skip_ws(s, p);
    if (s.compare(p, 2, "A=") != 0)
      throw std::runtime_error("tind: expected A=<formula>");
    p += 2;
    j.schema = parse_formula(next_sexpr(s, p), names);
    if (next_word(s, p) != "on")
      throw std::runtime_error("tind: expected 'on <x> <z>'");
    j.var = next_word(s, p);
    j.var2 = next_word(s, p);
    skip_ws(s, p);
    if (s.compare(p, 3, "hl=") != 0)
      throw std::runtime_error("tind: expected hl=<fn>");
    p += 3;
    j.hl = parse_fn(next_sexpr(s, p), names);
    skip_ws(s, p);
    if (s.compare(p, 3, "hr=") != 0)
      throw std::runtime_error("tind: expected hr=<fn>");
    p += 3;
    j.hr = parse_fn(next_sexpr(s, p), names);
  } else {
    throw std::runtime_error("unknown justification '" + head + "'");
  }
  skip_ws(s, p);
  if (p < s.size())
    throw std::runtime_error("trailing text in justification: '" +
                             s.substr(p) + "'");
  return j;
}

// Splits a proof line at the top-level ';' separating formula and
// justification.
std::size_t find_separator(const std::string& s) {
  int depth = 0;
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (in_str) {
      if (ch == '"') in_str = false;
    } else if (ch == '"') {
      in_str = true;
    } else if (ch == '(') {
      ++depth;
    } else if (ch == ')') {
      --depth;
    } else if (ch == ';' && depth == 0) {
      return i;
    }
  }
  throw std::runtime_error("missing ';' between formula and justification");
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

T1Proof parse_proof(const std::string& text, const NameEnv* names) {
  T1Proof proof;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_theorem = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    try {
      if (!have_theorem) {
        if (line.compare(0, 8, "theorem:") != 0)
          throw std::runtime_error("expected 'theorem: <formula>' first");
        proof.theorem = parse_formula(trim(line.substr(8)), names);
        have_theorem = true;
        continue;
      }
      std::size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("expected '<k>: <formula> ; <just>'");
      std::size_t k = std::stoul(line.substr(0, colon));
      if (k != proof.lines.size() + 1)
        throw std::runtime_error("line numbered " + std::to_string(k) +
                                 ", expected " +
                                 std::to_string(proof.lines.size() + 1));
      std::string rest = line.substr(colon + 1);
      std::size_t sep = find_separator(rest);
      ProofLine ln;
      ln.formula = parse_formula(trim(rest.substr(0, sep)), names);
      ln.just = parse_justification(trim(rest.substr(sep + 1)), names);
      proof.lines.push_back(std::move(ln));
    } catch (const std::exception& e) {
      throw std::runtime_error("proof line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  if (!have_theorem) throw std::runtime_error("proof has no theorem line");
  return proof;
}

namespace {

std::string print_justification(const Justification& j) {
  std::ostringstream os;
  switch (j.kind) {
    case JustKind::PropAx:
      os << "propax " << j.axiom_id;
      break;
    case JustKind::EqAx: {
      os << "eqax " << j.axiom_id;
      if (!j.term_inst.empty() || !j.fn_inst.empty()) {
        os << " {";
        bool first = true;
        for (const auto& [k, f] : j.fn_inst) {
          os << (first ? "" : ", ") << k << ":=" << print_fn(f);
          first = false;
        }
        for (const auto& [k, t] : j.term_inst) {
          os << (first ? "" : ", ") << k << ":=" << print_term(t);
          first = false;
        }
        os << "}";
      }
      break;
    }
    case JustKind::MP:
      os << "mp " << j.premises[0] << " " << j.premises[1];
      break;
    case JustKind::Subst:
      os << "subst " << j.premises[0] << " " << j.var << " "
         << print_term(j.term);
      break;
    case JustKind::NindL:
    case JustKind::NindR:
      os << (j.kind == JustKind::NindL ? "nindl " : "nindr ") << j.premises[0]
         << " " << j.premises[1] << " " << j.premises[2]
         << " A=" << print_formula(j.schema) << " on " << j.var;
      break;
    case JustKind::Tind:
      os << "tind " << j.premises[0] << " " << j.premises[1] << " "
         << j.premises[2] << " " << j.premises[3]
         << " A=" << print_formula(j.schema) << " on " << j.var << " "
         << j.var2 << " hl=" << print_fn(j.hl) << " hr=" << print_fn(j.hr);
      break;
  }
  return os.str();
}

}  // namespace

std::string print_proof(const T1Proof& proof) {
  std::ostringstream os;
  os << "theorem: " << print_formula(proof.theorem) << "\n";
  for (std::size_t k = 1; k <= proof.lines.size(); ++k) {
    const ProofLine& ln = proof.lines[k - 1];
    os << k << ": " << print_formula(ln.formula) << " ; "
       << print_justification(ln.just) << "\n";
  }
  return os.str();
}

// --- builder ----------------------------------------------------------------

std::size_t T1ProofBuilder::push(FormulaPtr f, Justification j) {
  lines_.push_back(ProofLine{std::move(f), std::move(j)});
  return lines_.size();
}

const FormulaPtr& T1ProofBuilder::formula(std::size_t line) const {
  if (line < 1 || line > lines_.size())
    throw std::logic_error("builder: bad line index");
  return lines_[line - 1].formula;
}

std::size_t T1ProofBuilder::propax(const std::string& id,
                                   const FormulaPtr& instance) {
  if (!match_prop_schema(id, instance))
    throw std::logic_error("builder: not an instance of schema " + id + ": " +
                           print_formula(instance));
  Justification j;
  j.kind = JustKind::PropAx;
  j.axiom_id = id;
  return push(instance, std::move(j));
}

std::size_t T1ProofBuilder::eqax(const std::string& id,
                                 std::map<std::string, TermPtr> term_inst,
                                 std::map<std::string, FnPtr> fn_inst) {
  FormulaPtr f = build_eqax(id, term_inst, fn_inst);
  Justification j;
  j.kind = JustKind::EqAx;
  j.axiom_id = id;
  j.term_inst = std::move(term_inst);
  j.fn_inst = std::move(fn_inst);
  return push(std::move(f), std::move(j));
}

std::size_t T1ProofBuilder::mp(std::size_t imp_line, std::size_t ant_line) {
  const FormulaPtr& imp = formula(imp_line);
  const FormulaPtr& ant = formula(ant_line);
  if (imp->kind != FormulaKind::Imp || !eqf(imp->a, ant))
    throw std::logic_error("builder: mp premises do not fit");
  Justification j;
  j.kind = JustKind::MP;
  j.premises = {imp_line, ant_line};
  return push(imp->b, std::move(j));
}

std::size_t T1ProofBuilder::subst(std::size_t line, const std::string& x,
                                  const TermPtr& t) {
  FormulaPtr f = substitute(formula(line), x, t);
  Justification j;
  j.kind = JustKind::Subst;
  j.premises = {line};
  j.var = x;
  j.term = t;
  return push(std::move(f), std::move(j));
}

std::size_t T1ProofBuilder::nindr(std::size_t base, std::size_t step0,
                                  std::size_t step1, const FormulaPtr& a,
                                  const std::string& x) {
  NindShape s = nind_shape(a, x, /*left=*/false);
  if (!eqf(formula(base), s.base) || !eqf(formula(step0), s.step0) ||
      !eqf(formula(step1), s.step1))
    throw std::logic_error("builder: nindr premises do not fit");
  Justification j;
  j.kind = JustKind::NindR;
  j.premises = {base, step0, step1};
  j.schema = a;
  j.var = x;
  return push(a, std::move(j));
}

std::size_t T1ProofBuilder::nindl(std::size_t base, std::size_t step0,
                                  std::size_t step1, const FormulaPtr& a,
                                  const std::string& x) {
  NindShape s = nind_shape(a, x, /*left=*/true);
  if (!eqf(formula(base), s.base) || !eqf(formula(step0), s.step0) ||
      !eqf(formula(step1), s.step1))
    throw std::logic_error("builder: nindl premises do not fit");
  Justification j;
  j.kind = JustKind::NindL;
  j.premises = {base, step0, step1};
  j.schema = a;
  j.var = x;
  return push(a, std::move(j));
}

std::size_t T1ProofBuilder::under(const FormulaPtr& p, std::size_t t) {
  const FormulaPtr& x = formula(t);
  std::size_t ax = propax("1", f_imp(x, f_imp(p, x)));
  return mp(ax, t);
}

std::size_t T1ProofBuilder::imp_mp(std::size_t pxy, std::size_t px) {
  const FormulaPtr& f = formula(pxy);
  if (f->kind != FormulaKind::Imp || f->b->kind != FormulaKind::Imp)
    throw std::logic_error("builder: imp_mp expects P->(X->Y)");
  FormulaPtr p = f->a, x = f->b->a, y = f->b->b;
  std::size_t ax = propax(
      "2", f_imp(f, f_imp(f_imp(p, x), f_imp(p, y))));
  std::size_t m = mp(ax, pxy);
  return mp(m, px);
}

std::size_t T1ProofBuilder::and_under(std::size_t px, std::size_t py) {
  const FormulaPtr& fx = formula(px);
  const FormulaPtr& fy = formula(py);
  if (fx->kind != FormulaKind::Imp || fy->kind != FormulaKind::Imp ||
      !eqf(fx->a, fy->a))
    throw std::logic_error("builder: and_under expects P->X and P->Y");
  FormulaPtr p = fx->a, x = fx->b, y = fy->b;
  std::size_t ax5 =
      propax("5", f_imp(x, f_imp(y, f_and(x, y))));
  std::size_t u = under(p, ax5);
  std::size_t a = imp_mp(u, px);
  return imp_mp(a, py);
}

namespace {

void destructure_eq(const FormulaPtr& f, TermPtr& a, TermPtr& b,
                    const char* who) {
  if (f->kind != FormulaKind::Eq)
    throw std::logic_error(std::string("builder: ") + who +
                           " expects an equation");
  a = f->t;
  b = f->u;
}

}  // namespace

std::size_t T1ProofBuilder::trans_under(std::size_t pab, std::size_t pbc) {
  const FormulaPtr& fab = formula(pab);
  const FormulaPtr& fbc = formula(pbc);
  if (fab->kind != FormulaKind::Imp || fbc->kind != FormulaKind::Imp ||
      !eqf(fab->a, fbc->a))
    throw std::logic_error("builder: trans_under expects P->.. premises");
  TermPtr a, b, b2, c;
  destructure_eq(fab->b, a, b, "trans_under");
  destructure_eq(fbc->b, b2, c, "trans_under");
  std::size_t ax = eqax("1c", {{"x", a}, {"y", b}, {"z", c}});
  std::size_t u = under(fab->a, ax);
  std::size_t conj = and_under(pab, pbc);
  return imp_mp(u, conj);
}

std::size_t T1ProofBuilder::sym_under(std::size_t pab) {
  const FormulaPtr& fab = formula(pab);
  if (fab->kind != FormulaKind::Imp)
    throw std::logic_error("builder: sym_under expects P->(a=b)");
  TermPtr a, b;
  destructure_eq(fab->b, a, b, "sym_under");
  std::size_t ax = eqax("1b", {{"x", a}, {"y", b}});
  std::size_t u = under(fab->a, ax);
  return imp_mp(u, pab);
}

std::size_t T1ProofBuilder::imp_refl(const FormulaPtr& p) {
  FormulaPtr pp = f_imp(p, p);
  std::size_t a1 = propax("1", f_imp(p, pp));
  std::size_t a2 = propax("1", f_imp(p, f_imp(pp, p)));
  std::size_t a3 =
      propax("2", f_imp(formula(a2), f_imp(formula(a1), pp)));
  std::size_t m = mp(a3, a2);
  return mp(m, a1);
}

std::size_t T1ProofBuilder::and_intro(std::size_t x, std::size_t y) {
  const FormulaPtr& fx = formula(x);
  const FormulaPtr& fy = formula(y);
  std::size_t ax = propax("5", f_imp(fx, f_imp(fy, f_and(fx, fy))));
  std::size_t m = mp(ax, x);
  return mp(m, y);
}

std::size_t T1ProofBuilder::sym_intro(std::size_t ab) {
  TermPtr a, b;
  destructure_eq(formula(ab), a, b, "sym_intro");
  std::size_t ax = eqax("1b", {{"x", a}, {"y", b}});
  return mp(ax, ab);
}

std::size_t T1ProofBuilder::trans_intro(std::size_t ab, std::size_t bc) {
  TermPtr a, b, b2, c;
  destructure_eq(formula(ab), a, b, "trans_intro");
  destructure_eq(formula(bc), b2, c, "trans_intro");
  std::size_t ax = eqax("1c", {{"x", a}, {"y", b}, {"z", c}});
  std::size_t conj = and_intro(ab, bc);
  return mp(ax, conj);
}

std::size_t T1ProofBuilder::cong2(const FnPtr& f, std::size_t e1,
                                  std::size_t e2) {
  if (fn_arity(f) != 2)
    throw std::logic_error("builder: cong2 needs a binary symbol");
  TermPtr a1, b1, a2, b2;
  destructure_eq(formula(e1), a1, b1, "cong2");
  destructure_eq(formula(e2), a2, b2, "cong2");
  std::size_t ax =
      eqax("1d", {{"x1", a1}, {"y1", b1}, {"x2", a2}, {"y2", b2}},
           {{"f", f}});
  std::size_t conj = and_intro(e1, e2);
  return mp(ax, conj);
}

T1Proof T1ProofBuilder::finish(const FormulaPtr& theorem) const {
  T1Proof p;
  p.theorem = theorem;
  p.lines = lines_;
  return p;
}

}  // namespace t1kit
