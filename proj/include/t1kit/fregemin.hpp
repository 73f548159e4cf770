#pragma once
// Minimal implicational proof system (variables, T, F, -> only) with a
// block-based binary encoding of formulas and proofs, a proof checker, the
// proof-extraction function F, and game-based sentence evaluation.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "t1kit/bitstr.hpp"
#include "t1kit/bsvp.hpp"

namespace t1kit {

enum class MinKind { Top, Bot, Var, Imp };

struct MinFormula;
using MinPtr = std::shared_ptr<const MinFormula>;
struct MinFormula {
  MinKind kind = MinKind::Top;
  std::size_t idx = 0;  // variable index, from 1
  MinPtr a, b;          // Imp operands
};

MinPtr m_top();
MinPtr m_bot();
MinPtr m_var(std::size_t idx);
MinPtr m_imp(MinPtr a, MinPtr b);
bool min_equal(const MinPtr& a, const MinPtr& b);

// Text form: `T`, `F`, `p<idx>`, `(A -> B)`.
std::string print_min(const MinPtr& f);
MinPtr parse_min(const std::string& text);

// --- block encoding ---------------------------------------------------------
// Symbols map to blocks of 2^ell bits.  The two leading bits select the
// symbol class (00 atom, 10 "(", 11 "->", 01 ")"); variables continue with
// the index in binary (third bit 0), constants with 1 then all-0 (F) or
// all-1 (T); brackets and arrows carry the bracket nesting depth of their
// position in the trailing bits.

// Smallest ell whose blocks fit every index and depth in f.
std::size_t min_ell(const MinPtr& f);
Bits encode_min(const MinPtr& f, std::size_t ell);
// Inverse; throws std::invalid_argument on malformed input.  Leading all-zero
// padding blocks are ignored.
MinPtr decode_min(const Bits& s, std::size_t ell);
// Whether s (after removing leading all-zero padding blocks) is the encoding
// of a well-formed formula with consistent depth annotations.
bool formula_valid(const Bits& s, std::size_t ell);

// --- proofs -----------------------------------------------------------------
// Axiom schemes:
//   1: (A -> (B -> A))
//   2: ((A -> (B -> C)) -> ((A -> B) -> (A -> C)))
//   3: (((B -> F) -> (A -> F)) -> (A -> B))
//   4: T
// Rule (modus ponens): from A and (A -> B) infer B.
bool match_min_axiom(std::size_t m, const MinPtr& f);

struct MinLine {
  MinPtr f;
  // j1 == 0: axiom scheme j2.  Otherwise modus ponens with premises j1, j2
  // (1-based earlier lines) where line j2 is (line j1 -> this line).
  std::size_t j1 = 0, j2 = 0;
};
struct MinProof {
  std::vector<MinLine> lines;
};

struct MinCheck {
  bool ok = true;
  std::size_t line = 0;  // 1-based offending line when !ok
  std::string reason;
};
MinCheck check_min(const MinProof& p);

// Text form: one line per step, `<formula> ; ax <m>` or `<formula> ; mp <j1> <j2>`.
std::string print_min_proof(const MinProof& p);
MinProof parse_min_proof(const std::string& text);

// x: the k formula encodings, each left-padded with all-zero blocks to a
// common length and concatenated.  y: the k justification pairs <j1,j2>,
// each component in `width` bits where width = bitlength(k) + 1.
struct EncodedProof {
  Bits x, y;
  std::size_t k = 0, ell = 0, width = 0;
};
EncodedProof encode_min_proof(const MinProof& p, std::size_t ell);

// Extraction: if (x, y) encodes a valid k-line proof at block size 2^ell,
// the encoding of its last line (padding stripped); otherwise encode(T).
Bits min_f(const Bits& x, const Bits& y, std::size_t ell, std::size_t k);

// Game evaluation of the formula encoded in x under the assignment v
// (variable p_i reads bit i of v, counted from 1; 0 beyond the end):
// substitute, pad, play the pebbling game, report a Pebbler win.
bool min_value(const Bits& v, const Bits& x, std::size_t ell);

// formula_valid(x) and min_value(v, x).
bool min_true(const Bits& v, const Bits& x, std::size_t ell);

}  // namespace t1kit
