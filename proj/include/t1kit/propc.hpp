#pragma once
// Propositional formulas with structural sharing; term formulas (bit i of a
// term from the bits of its variables), translations of quantifier-free
// formulas, evaluation, exhaustive tautology checking, DIMACS export.

#include <iosfwd>
#include <map>

#include "t1kit/evaluator.hpp"
#include "t1kit/lengths.hpp"

namespace t1kit {

enum class PropKind { True, False, Atom, Not, And, Or, Imp, Iff };

struct PropNode;
using PropPtr = std::shared_ptr<const PropNode>;

struct PropNode {
  PropKind kind;
  std::string var;        // Atom
  std::size_t index = 0;  // Atom: bit index, 1-based
  std::size_t mlen = 0;   // Atom: declared variable length
  PropPtr a, b;
  std::size_t id = 0;     // unique per distinct structure (hash-consed)
};

// Hash-consed constructors: structurally equal formulas share one node.
PropPtr p_true();
PropPtr p_false();
PropPtr p_atom(const std::string& var, std::size_t index, std::size_t mlen);
PropPtr p_not(PropPtr a);
PropPtr p_and(PropPtr a, PropPtr b);
PropPtr p_or(PropPtr a, PropPtr b);
PropPtr p_imp(PropPtr a, PropPtr b);
PropPtr p_iff(PropPtr a, PropPtr b);

std::string print_prop(const PropPtr& f);

// Compiler from terms/formulas to propositional formulas, relative to a
// length vector.  Holds expansion caches; reuse per length vector.
class PropCompiler {
 public:
  explicit PropCompiler(LenVec lv) : lv_(std::move(lv)) {}

  // Bit i (1-based from the left) of t; requires 1 <= i <= tlen(t).
  PropPtr term_formula(const TermPtr& t, std::size_t i);
  // Bitwise-iff conjunction for equations (False on length mismatch, True on
  // both empty); homomorphic on connectives.
  PropPtr translate(const FormulaPtr& a);

  const LenVec& lv() const { return lv_; }

 private:
  LenVec lv_;
  LengthCalc len_;
  std::map<std::pair<const void*, std::size_t>, PropPtr> cache_;
  std::map<std::pair<const void*, std::size_t>, TermPtr> expand_;
};

PropPtr term_formula(const TermPtr& t, const LenVec& lv, std::size_t i);
PropPtr translate(const FormulaPtr& a, const LenVec& lv);

// Evaluation under a bit-string environment (Atom(x,i,m) reads bit i of
// env[x]; throws if |env[x]| < i).
bool eval_prop(const PropPtr& f, const Env& env);
// Evaluation under direct atom values keyed by node id.
bool eval_prop_atoms(const PropPtr& f, const std::map<std::size_t, bool>& val);

// Distinct atoms, sorted by (var, mlen, index).
std::vector<PropPtr> collect_atoms(const PropPtr& f);

// Exhaustive tautology check; throws std::runtime_error if more than
// max_atoms distinct atoms (use export_dimacs then).
bool taut_check(const PropPtr& f, std::size_t max_atoms = 24);

// Tseitin-style CNF of NOT f (UNSAT iff f is a tautology).
void export_dimacs(const PropPtr& f, std::ostream& os);

// Atom substitution (by atom node id) with structural rebuilding.
PropPtr subst_atoms(const PropPtr& f,
                    const std::map<std::size_t, PropPtr>& repl);

}  // namespace t1kit
