#pragma once
// Proof objects and checker: a fixed propositional Hilbert base (schemas
// 1-13 + modus ponens), the equality/defining axiom groups, and the rules
// Substitution, NIND (left/right), TIND.

#include <map>
#include <string>
#include <vector>

#include "t1kit/evaluator.hpp"

namespace t1kit {

enum class JustKind { PropAx, EqAx, MP, Subst, NindL, NindR, Tind };

struct Justification {
  JustKind kind = JustKind::MP;
  std::string axiom_id;                       // propax/eqax
  std::map<std::string, TermPtr> term_inst;   // eqax metavariables
  std::map<std::string, FnPtr> fn_inst;       // eqax f/g/h/hl/hr
  std::vector<std::size_t> premises;          // 1-based line numbers
  std::string var, var2;                      // subst/nind var; tind x z
  TermPtr term;                               // subst replacement
  FormulaPtr schema;                          // nind/tind formula A
  FnPtr hl, hr;                               // tind
};

struct ProofLine {
  FormulaPtr formula;
  Justification just;
};

struct T1Proof {
  FormulaPtr theorem;
  std::vector<ProofLine> lines;
};

struct CheckResult {
  bool ok = true;
  std::size_t line = 0;  // 1-based failing line (0 = whole-proof issue)
  std::string reason;
};

// Number of propositional schemas (ids "1".."13").
constexpr int kNumPropSchemas = 13;

// Matches `formula` against propositional schema `id`; metavariables may be
// instantiated by arbitrary formulas.
bool match_prop_schema(const std::string& id, const FormulaPtr& formula);

// Constructs the instance of equality/defining axiom clause `id` under the
// given instantiation (unlisted metavariables stay free variables).
// Ids: "1a","1b","1c","1d","2","3a".."9d","10","11a","11b","12", optionally
// with a clause suffix like "3a.2".  Throws std::invalid_argument on unknown
// id or missing required instantiation (f/h/g/hl/hr, beta arguments).
FormulaPtr build_eqax(const std::string& id,
                      const std::map<std::string, TermPtr>& term_inst,
                      const std::map<std::string, FnPtr>& fn_inst);

// All clause ids of a group ("3a" -> {"3a.1","3a.2","3a.3"}); groups needing
// symbol parameters (1d, 10, 11a, 11b, 12) report their variable-only clause
// ids and are handled specially by the conformance suite.
std::vector<std::string> eqax_clause_ids(const std::string& group);
std::vector<std::string> eqax_groups();  // "2".."9d" pattern groups

CheckResult check_line(const T1Proof& proof, std::size_t k);  // 1-based
CheckResult check_proof(const T1Proof& proof);

// --- file format ------------------------------------------------------------
// theorem: <formula>
// k: <formula> ; <justification>
// Justifications: `propax 5`, `eqax 3a.2 {x:=eps, y:=(cat x x)}`,
// `mp 2 5`, `subst 4 x (cat x y)`, `nindl i1 i2 i3 A=<formula> on x`,
// `nindr ...`, `tind i1 i2 i3 i4 A=<formula> on x z hl=<fn> hr=<fn>`.
T1Proof parse_proof(const std::string& text, const NameEnv* names = nullptr);
std::string print_proof(const T1Proof& proof);

// --- proof construction helper ----------------------------------------------
// Builds kernel-checkable proofs; every emitted line is formed from the
// axiom/rule constructors, so the result passes check_proof by construction.
class T1ProofBuilder {
 public:
  // Each method appends line(s) and returns the (1-based) index of the last.
  std::size_t propax(const std::string& id, const FormulaPtr& instance);
  std::size_t eqax(const std::string& id,
                   std::map<std::string, TermPtr> term_inst = {},
                   std::map<std::string, FnPtr> fn_inst = {});
  std::size_t mp(std::size_t imp_line, std::size_t ant_line);
  std::size_t subst(std::size_t line, const std::string& x, const TermPtr& t);
  std::size_t nindr(std::size_t base, std::size_t step0, std::size_t step1,
                    const FormulaPtr& a, const std::string& x);
  std::size_t nindl(std::size_t base, std::size_t step0, std::size_t step1,
                    const FormulaPtr& a, const std::string& x);

  // Derived conveniences (expand to primitive lines).
  // From theorem line t, derive P -> formula(t).
  std::size_t under(const FormulaPtr& p, std::size_t t);
  // From lines P->(X->Y) and P->X derive P->Y.
  std::size_t imp_mp(std::size_t pxy, std::size_t px);
  // From lines P->X and P->Y derive P->(X and Y).
  std::size_t and_under(std::size_t px, std::size_t py);
  // From lines P->(a=b) and P->(b=c) derive P->(a=c).
  std::size_t trans_under(std::size_t pab, std::size_t pbc);
  // From line P->(a=b) derive P->(b=a).
  std::size_t sym_under(std::size_t pab);
  // P -> P.
  std::size_t imp_refl(const FormulaPtr& p);
  // From theorem lines X and Y derive X and Y.
  std::size_t and_intro(std::size_t x, std::size_t y);
  // From theorem line a=b derive b=a.
  std::size_t sym_intro(std::size_t ab);
  // From theorem lines a=b and b=c derive a=c.
  std::size_t trans_intro(std::size_t ab, std::size_t bc);
  // From theorem lines a1=b1 and a2=b2 derive f(a1,a2)=f(b1,b2).
  std::size_t cong2(const FnPtr& f, std::size_t e1, std::size_t e2);

  const FormulaPtr& formula(std::size_t line) const;
  T1Proof finish(const FormulaPtr& theorem) const;
  std::size_t size() const { return lines_.size(); }

 private:
  std::size_t push(FormulaPtr f, Justification j);
  std::vector<ProofLine> lines_;
};

}  // namespace t1kit
