#include "t1kit/propc.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

namespace t1kit {

// --- hash-consed construction -----------------------------------------------

namespace {

struct ConsTables {
  PropPtr truev, falsev;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, PropPtr> atoms;
  std::map<std::tuple<int, std::size_t, std::size_t>, PropPtr> nodes;
  std::size_t next_id = 0;

  PropPtr make(PropKind k, PropPtr a = nullptr, PropPtr b = nullptr) {
    auto n = std::make_shared<PropNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    n->id = next_id++;
    return n;
  }
};

ConsTables& tables() {
  static ConsTables t;
  return t;
}

PropPtr cons(PropKind k, PropPtr a, PropPtr b) {
  auto& t = tables();
  std::tuple<int, std::size_t, std::size_t> key{
      static_cast<int>(k), a->id, b ? b->id : static_cast<std::size_t>(-1)};
  auto it = t.nodes.find(key);
  if (it != t.nodes.end()) return it->second;
  PropPtr n = t.make(k, std::move(a), std::move(b));
  t.nodes.emplace(key, n);
  return n;
}

}  // namespace

PropPtr p_true() {
  auto& t = tables();
  if (!t.truev) t.truev = t.make(PropKind::True);
  return t.truev;
}

PropPtr p_false() {
  auto& t = tables();
  if (!t.falsev) t.falsev = t.make(PropKind::False);
  return t.falsev;
}

PropPtr p_atom(const std::string& var, std::size_t index, std::size_t mlen) {
  auto& t = tables();
  std::tuple<std::string, std::size_t, std::size_t> key{var, index, mlen};
  auto it = t.atoms.find(key);
  if (it != t.atoms.end()) return it->second;
  PropPtr n = t.make(PropKind::Atom);
  auto* mut = const_cast<PropNode*>(n.get());
  mut->var = var;
  mut->index = index;
  mut->mlen = mlen;
  t.atoms.emplace(key, n);
  return n;
}

PropPtr p_not(PropPtr a) { return cons(PropKind::Not, std::move(a), nullptr); }
PropPtr p_and(PropPtr a, PropPtr b) {
  return cons(PropKind::And, std::move(a), std::move(b));
}
PropPtr p_or(PropPtr a, PropPtr b) {
  return cons(PropKind::Or, std::move(a), std::move(b));
}
PropPtr p_imp(PropPtr a, PropPtr b) {
  return cons(PropKind::Imp, std::move(a), std::move(b));
}
PropPtr p_iff(PropPtr a, PropPtr b) {
  return cons(PropKind::Iff, std::move(a), std::move(b));
}

std::string print_prop(const PropPtr& f) {
  switch (f->kind) {
    case PropKind::True: return "T";
    case PropKind::False: return "F";
    case PropKind::Atom:
      return f->var + "[" + std::to_string(f->index) + "/" +
             std::to_string(f->mlen) + "]";
    case PropKind::Not: return "(not " + print_prop(f->a) + ")";
    case PropKind::And:
      return "(and " + print_prop(f->a) + " " + print_prop(f->b) + ")";
    case PropKind::Or:
      return "(or " + print_prop(f->a) + " " + print_prop(f->b) + ")";
    case PropKind::Imp:
      return "(imp " + print_prop(f->a) + " " + print_prop(f->b) + ")";
    case PropKind::Iff:
      return "(iff " + print_prop(f->a) + " " + print_prop(f->b) + ")";
  }
  return "?";
}

// --- term formulas ----------------------------------------------------------

namespace {
TermPtr zeros_lit(std::size_t n) { return lit(Bits(n, '0')); }
}  // namespace

PropPtr PropCompiler::term_formula(const TermPtr& t, std::size_t i) {
  if (i < 1) throw std::out_of_range("term_formula: index must be >= 1");
  std::pair<const void*, std::size_t> key{t.get(), i};
  auto hit = cache_.find(key);
  if (hit != cache_.end()) return hit->second;

  PropPtr out;
  switch (t->kind) {
    case TermKind::Var: {
      std::size_t m = len_.term_len(t, lv_);
      if (i > m) throw std::out_of_range("term_formula: index out of range");
      out = p_atom(t->var, i, m);
      break;
    }
    case TermKind::Lit: {
      if (i > t->lit.size()) {
        throw std::out_of_range("term_formula: index out of range");
      }
      out = t->lit[i - 1] == '1' ? p_true() : p_false();
      break;
    }
    case TermKind::Apply: {
      const FnPtr& f = t->fn;
      auto expand = [&](std::size_t slot, auto make) -> const TermPtr& {
        std::pair<const void*, std::size_t> ekey{t.get(), slot};
        auto it = expand_.find(ekey);
        if (it == expand_.end()) {
          it = expand_.emplace(ekey, make()).first;
        }
        return it->second;
      };
      switch (f->kind) {
        case FnKind::Base: {
          const auto& as = t->args;
          switch (f->tag) {
            case BaseTag::Eps:
              throw std::out_of_range("term_formula: eps has no bits");
            case BaseTag::Zero: out = p_false(); break;
            case BaseTag::One: out = p_true(); break;
            case BaseTag::AllZero: out = p_false(); break;
            case BaseTag::AllOne: out = p_true(); break;
            case BaseTag::LHalf:
              out = term_formula(as[0], i);
              break;
            case BaseTag::RHalf:
              out = term_formula(as[0], i + len_.term_len(as[0], lv_) / 2);
              break;
            case BaseTag::LChop:
              out = term_formula(as[1], i + len_.term_len(as[0], lv_));
              break;
            case BaseTag::RChop:
              out = term_formula(as[0], i);
              break;
            case BaseTag::Cat: {
              std::size_t m = len_.term_len(as[0], lv_);
              out = (i <= m) ? term_formula(as[0], i)
                             : term_formula(as[1], i - m);
              break;
            }
            case BaseTag::Cond: {
              std::size_t m = len_.term_len(as[0], lv_);
              if (m == 0) {
                out = term_formula(as[1], i);
              } else {
                PropPtr sel = term_formula(as[0], m);
                // selected branch, left-zero-padded to max length
                const TermPtr& b0 = expand(100, [&] {
                  return apply(base_fn(BaseTag::Cat),
                               {apply(base_fn(BaseTag::AllZero),
                                      {apply(base_fn(BaseTag::RChop),
                                             {as[3], as[2]})}),
                                as[2]});
                });
                const TermPtr& b1 = expand(101, [&] {
                  return apply(base_fn(BaseTag::Cat),
                               {apply(base_fn(BaseTag::AllZero),
                                      {apply(base_fn(BaseTag::RChop),
                                             {as[2], as[3]})}),
                                as[3]});
                });
                out = p_or(p_and(p_not(sel), term_formula(b0, i)),
                           p_and(sel, term_formula(b1, i)));
              }
              break;
            }
          }
          break;
        }
        case FnKind::Lambda: {
          const TermPtr& body = expand(0, [&] {
            TermPtr b = f->body;
            // Parameters are distinct; arguments contain no parameter names
            // (bodies are closed), so sequential substitution is simultaneous.
            for (std::size_t k = 0; k < f->params.size(); ++k) {
              b = substitute(b, f->params[k], t->args[k]);
            }
            return b;
          });
          out = term_formula(body, i);
          break;
        }
        case FnKind::LCrn: {
          // bit i = leftmost bit of h(suffix from i, params) . "0"
          const TermPtr& whole = expand(i, [&] {
            TermPtr suffix =
                i == 1 ? t->args[0]
                       : apply(base_fn(BaseTag::LChop),
                               {zeros_lit(i - 1), t->args[0]});
            std::vector<TermPtr> hargs = t->args;
            hargs[0] = suffix;
            return apply(base_fn(BaseTag::Cat),
                         {apply(f->h, hargs), lit("0")});
          });
          out = term_formula(whole, 1);
          break;
        }
        case FnKind::RCrn: {
          // bit i = rightmost bit of "0" . h(prefix up to i, params)
          std::size_t m = len_.term_len(t->args[0], lv_);
          const TermPtr& whole = expand(i, [&] {
            TermPtr prefix =
                i == m ? t->args[0]
                       : apply(base_fn(BaseTag::RChop),
                               {t->args[0], zeros_lit(m - i)});
            std::vector<TermPtr> hargs = t->args;
            hargs[0] = prefix;
            return apply(base_fn(BaseTag::Cat),
                         {lit("0"), apply(f->h, hargs)});
          });
          out = term_formula(whole, len_.term_len(whole, lv_));
          break;
        }
        case FnKind::Trn: {
          std::size_t m = len_.term_len(t->args[0], lv_);
          if (m <= 1) {
            const TermPtr& gterm = expand(0, [&] { return apply(f->g, t->args); });
            out = term_formula(gterm, i);
          } else {
            const TermPtr& hterm = expand(0, [&] {
              std::vector<TermPtr> left = t->args, right = t->args;
              left[0] = apply(base_fn(BaseTag::LHalf), {t->args[0]});
              left[1] = apply(f->hl, {t->args[1]});
              right[0] = apply(base_fn(BaseTag::RHalf), {t->args[0]});
              right[1] = apply(f->hr, {t->args[1]});
              std::vector<TermPtr> hargs = t->args;
              hargs.push_back(apply(t->fn, left));
              hargs.push_back(apply(t->fn, right));
              return apply(f->h, hargs);
            });
            out = term_formula(hterm, i);
          }
          break;
        }
      }
      break;
    }
  }
  cache_.emplace(key, out);
  return out;
}

PropPtr PropCompiler::translate(const FormulaPtr& a) {
  switch (a->kind) {
    case FormulaKind::Eq: {
      std::size_t m = len_.term_len(a->t, lv_);
      std::size_t n = len_.term_len(a->u, lv_);
      if (m != n) return p_false();
      if (m == 0) return p_true();
      PropPtr acc;
      for (std::size_t i = 1; i <= m; ++i) {
        PropPtr bit = p_iff(term_formula(a->t, i), term_formula(a->u, i));
        acc = acc ? p_and(acc, bit) : bit;
      }
      return acc;
    }
    case FormulaKind::Not:
      return p_not(translate(a->a));
    case FormulaKind::And:
      return p_and(translate(a->a), translate(a->b));
    case FormulaKind::Or:
      return p_or(translate(a->a), translate(a->b));
    case FormulaKind::Imp:
      return p_imp(translate(a->a), translate(a->b));
    case FormulaKind::Iff:
      return p_iff(translate(a->a), translate(a->b));
  }
  throw std::logic_error("bad formula node");
}

PropPtr term_formula(const TermPtr& t, const LenVec& lv, std::size_t i) {
  PropCompiler pc(lv);
  return pc.term_formula(t, i);
}

PropPtr translate(const FormulaPtr& a, const LenVec& lv) {
  PropCompiler pc(lv);
  return pc.translate(a);
}

// --- evaluation -------------------------------------------------------------

namespace {

template <typename AtomFn>
bool eval_memo(const PropPtr& f, std::map<std::size_t, bool>& memo,
               const AtomFn& atom_val) {
  switch (f->kind) {
    case PropKind::True: return true;
    case PropKind::False: return false;
    case PropKind::Atom: return atom_val(f);
    default: break;
  }
  auto it = memo.find(f->id);
  if (it != memo.end()) return it->second;
  bool v = false;
  switch (f->kind) {
    case PropKind::Not:
      v = !eval_memo(f->a, memo, atom_val);
      break;
    case PropKind::And:
      v = eval_memo(f->a, memo, atom_val) && eval_memo(f->b, memo, atom_val);
      break;
    case PropKind::Or:
      v = eval_memo(f->a, memo, atom_val) || eval_memo(f->b, memo, atom_val);
      break;
    case PropKind::Imp:
      v = !eval_memo(f->a, memo, atom_val) || eval_memo(f->b, memo, atom_val);
      break;
    case PropKind::Iff:
      v = eval_memo(f->a, memo, atom_val) == eval_memo(f->b, memo, atom_val);
      break;
    default:
      break;
  }
  memo.emplace(f->id, v);
  return v;
}

}  // namespace

bool eval_prop(const PropPtr& f, const Env& env) {
  std::map<std::size_t, bool> memo;
  return eval_memo(f, memo, [&env](const PropPtr& a) {
    auto it = env.find(a->var);
    if (it == env.end()) {
      throw std::out_of_range("eval_prop: no value for '" + a->var + "'");
    }
    if (it->second.size() < a->index) {
      throw std::out_of_range("eval_prop: '" + a->var + "' shorter than index");
    }
    return it->second[a->index - 1] == '1';
  });
}

bool eval_prop_atoms(const PropPtr& f,
                     const std::map<std::size_t, bool>& val) {
  std::map<std::size_t, bool> memo;
  return eval_memo(f, memo, [&val](const PropPtr& a) {
    auto it = val.find(a->id);
    if (it == val.end()) {
      throw std::out_of_range("eval_prop_atoms: unassigned atom");
    }
    return it->second;
  });
}

namespace {

void collect_atoms_rec(const PropPtr& f, std::map<std::size_t, PropPtr>& seen,
                       std::map<std::size_t, bool>& visited) {
  if (visited.count(f->id)) return;
  visited[f->id] = true;
  if (f->kind == PropKind::Atom) {
    seen.emplace(f->id, f);
    return;
  }
  if (f->a) collect_atoms_rec(f->a, seen, visited);
  if (f->b) collect_atoms_rec(f->b, seen, visited);
}

}  // namespace

std::vector<PropPtr> collect_atoms(const PropPtr& f) {
  std::map<std::size_t, PropPtr> seen;
  std::map<std::size_t, bool> visited;
  collect_atoms_rec(f, seen, visited);
  std::vector<PropPtr> out;
  for (auto& [id, a] : seen) out.push_back(a);
  std::sort(out.begin(), out.end(), [](const PropPtr& a, const PropPtr& b) {
    return std::tie(a->var, a->mlen, a->index) <
           std::tie(b->var, b->mlen, b->index);
  });
  return out;
}

bool taut_check(const PropPtr& f, std::size_t max_atoms) {
  std::vector<PropPtr> atoms = collect_atoms(f);
  if (atoms.size() > max_atoms) {
    throw std::runtime_error("taut_check: " + std::to_string(atoms.size()) +
                             " atoms exceed the budget; use export_dimacs");
  }
  std::size_t n = atoms.size();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::map<std::size_t, bool> val;
    for (std::size_t k = 0; k < n; ++k) {
      val[atoms[k]->id] = ((mask >> k) & 1) != 0;
    }
    if (!eval_prop_atoms(f, val)) return false;
  }
  return true;
}

// --- DIMACS export ----------------------------------------------------------

namespace {

void number_nodes(const PropPtr& f, std::map<std::size_t, int>& num) {
  if (num.count(f->id)) return;
  if (f->a) number_nodes(f->a, num);
  if (f->b) number_nodes(f->b, num);
  int v = static_cast<int>(num.size()) + 1;
  num[f->id] = v;
}

void gather_clauses(const PropPtr& f, const std::map<std::size_t, int>& num,
                    std::map<std::size_t, bool>& done,
                    std::vector<std::vector<int>>& cls) {
  if (done.count(f->id)) return;
  done[f->id] = true;
  int x = num.at(f->id);
  int a = f->a ? num.at(f->a->id) : 0;
  int b = f->b ? num.at(f->b->id) : 0;
  switch (f->kind) {
    case PropKind::True: cls.push_back({x}); break;
    case PropKind::False: cls.push_back({-x}); break;
    case PropKind::Atom: break;
    case PropKind::Not:
      cls.push_back({-x, -a});
      cls.push_back({x, a});
      break;
    case PropKind::And:
      cls.push_back({-x, a});
      cls.push_back({-x, b});
      cls.push_back({x, -a, -b});
      break;
    case PropKind::Or:
      cls.push_back({-x, a, b});
      cls.push_back({x, -a});
      cls.push_back({x, -b});
      break;
    case PropKind::Imp:
      cls.push_back({-x, -a, b});
      cls.push_back({x, a});
      cls.push_back({x, -b});
      break;
    case PropKind::Iff:
      cls.push_back({-x, -a, b});
      cls.push_back({-x, a, -b});
      cls.push_back({x, a, b});
      cls.push_back({x, -a, -b});
      break;
  }
  if (f->a) gather_clauses(f->a, num, done, cls);
  if (f->b) gather_clauses(f->b, num, done, cls);
}

}  // namespace

void export_dimacs(const PropPtr& f, std::ostream& os) {
  std::map<std::size_t, int> num;
  number_nodes(f, num);
  std::vector<std::vector<int>> cls;
  std::map<std::size_t, bool> done;
  gather_clauses(f, num, done, cls);
  cls.push_back({-num.at(f->id)});  // assert NOT f
  os << "c CNF of the negation of the formula; UNSAT iff tautology\n";
  for (const PropPtr& a : collect_atoms(f)) {
    os << "c var " << num.at(a->id) << " = " << a->var << "[" << a->index
       << "/" << a->mlen << "]\n";
  }
  os << "c all other variables are Tseitin gate definitions\n";
  os << "p cnf " << num.size() << ' ' << cls.size() << "\n";
  for (const auto& c : cls) {
    for (int l : c) os << l << ' ';
    os << "0\n";
  }
}

namespace {

PropPtr subst_atoms_rec(const PropPtr& f,
                        const std::map<std::size_t, PropPtr>& repl,
                        std::map<std::size_t, PropPtr>& memo) {
  auto it = memo.find(f->id);
  if (it != memo.end()) return it->second;
  PropPtr out;
  switch (f->kind) {
    case PropKind::True:
    case PropKind::False:
      out = f;
      break;
    case PropKind::Atom: {
      auto r = repl.find(f->id);
      out = r == repl.end() ? f : r->second;
      break;
    }
    case PropKind::Not:
      out = p_not(subst_atoms_rec(f->a, repl, memo));
      break;
    case PropKind::And:
      out = p_and(subst_atoms_rec(f->a, repl, memo),
                  subst_atoms_rec(f->b, repl, memo));
      break;
    case PropKind::Or:
      out = p_or(subst_atoms_rec(f->a, repl, memo),
                 subst_atoms_rec(f->b, repl, memo));
      break;
    case PropKind::Imp:
      out = p_imp(subst_atoms_rec(f->a, repl, memo),
                  subst_atoms_rec(f->b, repl, memo));
      break;
    case PropKind::Iff:
      out = p_iff(subst_atoms_rec(f->a, repl, memo),
                  subst_atoms_rec(f->b, repl, memo));
      break;
  }
  memo.emplace(f->id, out);
  return out;
}

}  // namespace

PropPtr subst_atoms(const PropPtr& f,
                    const std::map<std::size_t, PropPtr>& repl) {
  std::map<std::size_t, PropPtr> memo;
  return subst_atoms_rec(f, repl, memo);
}

}  // namespace t1kit
