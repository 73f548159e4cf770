#pragma once
// Frege proofs over the full connective set (15 axiom schemas + modus
// ponens): checker, atom substitution, tautology provers, and emitters for
// the propositional translations of the axioms and rules.

#include <functional>

#include "t1kit/propc.hpp"
#include "t1kit/t1check.hpp"

namespace t1kit {

// Schemas 1-13 as in the first-order propositional base, plus 14: T and
// 15: F -> A.
constexpr int kNumRichSchemas = 15;

struct FregeLine {
  PropPtr f;
  int schema = 0;  // > 0: axiom schema id; 0: modus ponens
  std::size_t p1 = 0, p2 = 0;  // MP premises (1-based, earlier lines)
};

struct FregeProof {
  PropPtr goal;
  std::vector<FregeLine> lines;
};

bool match_rich_schema(int id, const PropPtr& f);
CheckResult check_rich(const FregeProof& p);

// Replaces atoms (keyed by node id) by arbitrary formulas in every line;
// validity is preserved.
FregeProof subst_frege(const FregeProof& p,
                       const std::map<std::size_t, PropPtr>& atom_repl);

std::string print_frege(const FregeProof& p);
FregeProof parse_frege(const std::string& text);
PropPtr parse_prop(const std::string& text);

// Proof construction with hypothesis management.  Lines are 1-based.  A
// discharge() rewrites every line derived since the matching assume() into
// its implication-guarded form, so indices into that region become stale;
// use the returned index of the guarded final line.
class FregeBuilder {
 public:
  std::size_t ax(int id, PropPtr f);
  std::size_t mp(std::size_t imp, std::size_t ant);
  std::size_t assume(PropPtr h);
  std::size_t discharge();  // returns guarded image of the last line
  std::size_t append(const FregeProof& p);  // splice; returns its last line
  std::size_t inst(const FregeProof& tpl,
                   const std::map<std::size_t, PropPtr>& atom_repl);

  // Derived combinators (hypothesis-free).
  std::size_t imp_refl(const PropPtr& p);           // P -> P
  std::size_t syll(std::size_t ab, std::size_t bc); // A->B, B->C => A->C
  std::size_t under(const PropPtr& p, std::size_t theorem);  // P -> thm
  std::size_t imp_mp(std::size_t pxy, std::size_t px);       // => P -> Y
  std::size_t and_under(std::size_t px, std::size_t py);  // => P->(X and Y)
  std::size_t and_intro(std::size_t x, std::size_t y);    // => X and Y

  const PropPtr& at(std::size_t i) const;
  std::size_t size() const { return lines_.size(); }
  bool in_hypothesis() const { return !hyps_.empty(); }
  FregeProof to_proof(std::size_t goal) const;  // requires no open hypothesis

 private:
  struct Line {
    PropPtr f;
    int schema;  // > 0 axiom, 0 MP, -1 hypothesis
    std::size_t p1, p2;
  };
  std::size_t push(PropPtr f, int schema, std::size_t p1 = 0,
                   std::size_t p2 = 0);
  std::vector<Line> lines_;
  std::vector<std::size_t> hyps_;  // line indices of open hypotheses
};

// Tautology proof by guarded truth-table expansion over the distinct atoms;
// throws std::runtime_error above max_atoms.
FregeProof prove_taut_frege(const PropPtr& goal, std::size_t max_atoms = 8);

// Structural strategies (constant T, reflexive iff, conjunction split,
// implication with provable consequent, conditional-selector lemmas) with
// prove_taut_frege as fallback on small residual goals; throws when stuck.
FregeProof prove_clause(const PropPtr& goal, std::size_t tt_atoms = 8);

// Proof of translate(build_eqax(id, ti, fi), lv).
FregeProof emit_axiom_proof(const std::string& id,
                            const std::map<std::string, TermPtr>& ti,
                            const std::map<std::string, FnPtr>& fi,
                            const LenVec& lv);

// Premise proofs are supplied per length vector because the inductive
// constructions need instances of the premises at every intermediate length.
using PremiseProver = std::function<FregeProof(const LenVec&)>;

// Proof of translate(A, lv + {x:m}) from proofs of the three premises
// A[eps], A -> A[0x]/A[x0], A -> A[1x]/A[x1] (left selects the 0x/1x form).
// p0/p1 are queried at lengths {x: 0..m-1}; peps once.
FregeProof emit_nind(const PremiseProver& peps, const PremiseProver& p0,
                     const PremiseProver& p1, const FormulaPtr& a,
                     const std::string& x, bool left, std::size_t m,
                     LenVec lv);

// Proof of translate(A, lv + {x:m, z:p}) from proofs of A[eps,z], A[0,z],
// A[1,z] (queried at the z-lengths arising in the halving tree) and the step
// implication (queried at each {x:mu, z:zl} node).  node_count, when given,
// receives the number of tree nodes.
FregeProof emit_tind(const PremiseProver& peps, const PremiseProver& p0,
                     const PremiseProver& p1, const PremiseProver& step,
                     const FormulaPtr& a, const std::string& x,
                     const std::string& z, const FnPtr& hl, const FnPtr& hr,
                     std::size_t m, std::size_t p, LenVec lv,
                     std::size_t* node_count = nullptr);

// Translates a checked proof line by line into a Frege proof of
// translate(theorem, lv).  Throws on degenerate translations or missing
// lengths.
FregeProof translate_t1_proof(const T1Proof& proof, const LenVec& lv);

}  // namespace t1kit
