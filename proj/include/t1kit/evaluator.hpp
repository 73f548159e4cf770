#pragma once
// Big-step evaluation of terms, the named-definition registry, and simple
// semantic helpers (formula truth, exhaustive falsification support).

#include <map>
#include <string>
#include <vector>

#include "t1kit/termlang.hpp"

namespace t1kit {

// Variable valuation.
using Env = std::map<std::string, Bits>;

// Ordered registry of named definitions.
struct DefRegistry {
  NameEnv env;
  std::vector<std::string> order;  // insertion order

  void add(const std::string& name, FnPtr f);
  FnPtr get(const std::string& name) const;  // throws if absent
  bool has(const std::string& name) const;
};

// Evaluates a closed-over-env term.  Holds a memo table for recursion-heavy
// symbols (TRN, CRN); reuse one Evaluator across calls for speed, or use the
// free function below for one-shot evaluation.
class Evaluator {
 public:
  Bits eval(const TermPtr& t, const Env& env);
  Bits eval_fn(const FnPtr& f, const std::vector<Bits>& args);

 private:
  std::map<std::string, Bits> memo_;  // key: symbol identity + args
};

Bits eval(const TermPtr& t, const Env& env);

// Classical truth of a quantifier-free formula under env (Eq compares values;
// unequal lengths make Eq false).
bool eval_formula(const FormulaPtr& f, const Env& env, Evaluator& ev);
bool eval_formula(const FormulaPtr& f, const Env& env);

// Exhaustively searches environments with all |var| <= maxlen for one
// falsifying A; returns it, or an empty optional-like flag via bool.
struct Counterexample {
  bool found = false;
  Env env;
};
Counterexample falsify(const FormulaPtr& a, std::size_t maxlen);

// Enumeration helper: all bit strings of length exactly n / up to n.
std::vector<Bits> all_strings(std::size_t n);
std::vector<Bits> strings_upto(std::size_t n);

// Pigeonhole check: php(a, 1^n) = "1" for every a in {0,1}^{n(n+1)}.
bool php_exhaustive(const DefRegistry& defs, std::size_t n);

}  // namespace t1kit
