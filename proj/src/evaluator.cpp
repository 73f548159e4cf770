#include "t1kit/evaluator.hpp"

#include <sstream>

namespace t1kit {

void DefRegistry::add(const std::string& name, FnPtr f) {
  auto named = std::make_shared<FunctionSymbol>(*f);
  named->name = name;
  env[name] = named;
  order.push_back(name);
}

FnPtr DefRegistry::get(const std::string& name) const {
  auto it = env.find(name);
  if (it == env.end()) {
    throw std::out_of_range("no definition named '" + name + "'");
  }
  return it->second;
}

bool DefRegistry::has(const std::string& name) const {
  return env.count(name) != 0;
}

namespace {

std::string memo_key(const void* sym, const std::vector<Bits>& args) {
  std::ostringstream os;
  os << sym;
  for (const auto& a : args) os << '|' << a;
  return os.str();
}

}  // namespace

Bits Evaluator::eval(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->var);
      if (it == env.end()) {
        throw std::out_of_range("unbound variable '" + t->var + "'");
      }
      return it->second;
    }
    case TermKind::Lit:
      return t->lit;
    case TermKind::Apply: {
      std::vector<Bits> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(eval(a, env));
      return eval_fn(t->fn, args);
    }
  }
  throw std::logic_error("bad term node");
}

Bits Evaluator::eval_fn(const FnPtr& f, const std::vector<Bits>& args) {
  if (static_cast<int>(args.size()) != fn_arity(f)) {
    throw std::invalid_argument("eval: arity mismatch for " + print_fn(f));
  }
  switch (f->kind) {
    case FnKind::Base:
      return base_apply(f->tag, args);
    case FnKind::Lambda: {
      Env bound;
      for (std::size_t i = 0; i < f->params.size(); ++i) {
        bound[f->params[i]] = args[i];
      }
      return eval(f->body, bound);
    }
    case FnKind::LCrn: {
      // Result bit j is the leftmost bit of h(x_j..x_m, params)·0.
      const Bits& x = args[0];
      Bits out;
      std::vector<Bits> hargs(args);
      for (std::size_t j = 0; j < x.size(); ++j) {
        hargs[0] = x.substr(j);
        Bits hv = eval_fn(f->h, hargs);
        out.push_back(hv.empty() ? '0' : hv.front());
      }
      return out;
    }
    case FnKind::RCrn: {
      // Result bit j is the rightmost bit of 0·h(x_1..x_j, params).
      const Bits& x = args[0];
      Bits out;
      std::vector<Bits> hargs(args);
      for (std::size_t j = 1; j <= x.size(); ++j) {
        hargs[0] = x.substr(0, j);
        Bits hv = eval_fn(f->h, hargs);
        out.push_back(hv.empty() ? '0' : hv.back());
      }
      return out;
    }
    case FnKind::Trn: {
      std::string key = memo_key(f.get(), args);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
      const Bits& x = args[0];
      const Bits& z = args[1];
      Bits out;
      if (x.size() <= 1) {
        std::vector<Bits> gargs(args);
        out = eval_fn(f->g, gargs);
      } else {
        std::vector<Bits> left(args), right(args);
        left[0] = lhalf(x);
        left[1] = eval_fn(f->hl, {z});
        right[0] = rhalf(x);
        right[1] = eval_fn(f->hr, {z});
        std::vector<Bits> hargs(args);
        hargs.push_back(eval_fn(f, left));
        hargs.push_back(eval_fn(f, right));
        out = eval_fn(f->h, hargs);
      }
      memo_.emplace(std::move(key), out);
      return out;
    }
  }
  throw std::logic_error("bad symbol kind");
}

Bits eval(const TermPtr& t, const Env& env) {
  Evaluator ev;
  return ev.eval(t, env);
}

bool eval_formula(const FormulaPtr& f, const Env& env, Evaluator& ev) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return ev.eval(f->t, env) == ev.eval(f->u, env);
    case FormulaKind::Not:
      return !eval_formula(f->a, env, ev);
    case FormulaKind::And:
      return eval_formula(f->a, env, ev) && eval_formula(f->b, env, ev);
    case FormulaKind::Or:
      return eval_formula(f->a, env, ev) || eval_formula(f->b, env, ev);
    case FormulaKind::Imp:
      return !eval_formula(f->a, env, ev) || eval_formula(f->b, env, ev);
    case FormulaKind::Iff:
      return eval_formula(f->a, env, ev) == eval_formula(f->b, env, ev);
  }
  throw std::logic_error("bad formula node");
}

bool eval_formula(const FormulaPtr& f, const Env& env) {
  Evaluator ev;
  return eval_formula(f, env, ev);
}

std::vector<Bits> all_strings(std::size_t n) {
  std::vector<Bits> out;
  out.reserve(static_cast<std::size_t>(1) << n);
  Bits s(n, '0');
  for (std::size_t v = 0; v < (static_cast<std::size_t>(1) << n); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      s[n - 1 - i] = static_cast<char>('0' + ((v >> i) & 1));
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Bits> strings_upto(std::size_t n) {
  std::vector<Bits> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = all_strings(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Counterexample falsify(const FormulaPtr& a, std::size_t maxlen) {
  std::vector<std::string> vars = free_vars(a);
  std::vector<Bits> domain = strings_upto(maxlen);
  std::vector<std::size_t> idx(vars.size(), 0);
  Evaluator ev;
  while (true) {
    Env env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = domain[idx[i]];
    if (!eval_formula(a, env, ev)) return {true, env};
    // odometer over the domain
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < domain.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
    if (vars.empty()) break;
  }
  return {};
}

bool php_exhaustive(const DefRegistry& defs, std::size_t n) {
  FnPtr php = defs.get("php");
  Evaluator ev;
  Bits ones(n, '1');
  for (const Bits& a : all_strings(n * (n + 1))) {
    if (ev.eval_fn(php, {a, ones}) != "1") return false;
  }
  return true;
}

}  // namespace t1kit
