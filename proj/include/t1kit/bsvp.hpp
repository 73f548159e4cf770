#pragma once
// The pebbling game for the Boolean sentence value problem: sentence trees,
// padding, leaf ranks, the distinguished-node transition table, mistake
// detection with honest strategies, and the truth-triplet algebra.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace t1kit {

// --- sentences --------------------------------------------------------------
// Binary trees whose leaves hold a truth value and whose internal nodes are
// the connective "->" (left operand first).
struct Sentence;
using SentPtr = std::shared_ptr<const Sentence>;
struct Sentence {
  bool leaf = true;
  bool value = false;  // leaf label
  SentPtr a, b;        // internal: a -> b
};

SentPtr s_leaf(bool v);
SentPtr s_imp(SentPtr a, SentPtr b);

// Text form: `T`, `F`, `(A -> B)`.
SentPtr parse_sentence(const std::string& text);
std::string print_sentence(const SentPtr& s);

std::size_t leaf_count(const SentPtr& s);
bool naive_eval(const SentPtr& s);  // independent recursive oracle

// Pads to the smallest 2^{d+1}-1 leaves by repeatedly prepending (T -> .);
// each prepend adds one leaf and preserves the value of the original root,
// which sits `pads` right-child steps below the new root (the mask node).
struct PadResult {
  SentPtr tree;
  std::size_t d = 0;
  std::size_t pads = 0;
};
PadResult pad_sentence(const SentPtr& s);

// Largest k such that 2^k divides the leaf number (leaves numbered from 1).
std::size_t leaf_rank(std::size_t k);

// --- explicit game tree -----------------------------------------------------
struct GameTree {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Node {
    std::size_t parent = npos, left = npos, right = npos;
    std::size_t lo = 0, hi = 0;  // leaf-number interval covered
    bool value = false;          // true value of the subsentence
    std::size_t depth = 0;
  };
  std::vector<Node> nodes;  // index 0 is the root
  std::vector<std::size_t> leaf_node;  // leaf number (1-based) -> node index

  static GameTree build(const SentPtr& s);
  bool is_leaf(std::size_t n) const { return nodes[n].left == npos; }
  // u ancestor-or-equal of v.
  bool anceq(std::size_t u, std::size_t v) const;
  std::size_t lca(std::size_t u, std::size_t v) const;
  std::size_t mask_node(std::size_t pads) const;  // right-spine descent
};

// --- game -------------------------------------------------------------------
enum class Player { Pebbler, Challenger };
enum class Challenge { A, U, U1, U2, V, V1, V2 };
const char* challenge_name(Challenge c);

struct Mistake {
  Player who;
  std::size_t round;  // round in which it was made (0 = forced opening)
  std::string what;
};

// Relative order of A, U, V on the path from C to the root (the Pebbler's
// three structure bits, reported honestly).
enum class ARel { AAboveUV, UVAboveA, UAboveAAboveV, VAboveAAboveU };

struct RoundRecord {
  std::size_t i = 0;          // round number, from 1
  std::size_t A = 0, B = 0;   // node indices
  std::size_t U = 0, V = 0, U1 = 0, U2 = 0, V1 = 0, V2 = 0;
  std::size_t L = 0, C = 0, R = 0;  // leaf numbers
  bool u_above_v = false;
  ARel a_rel = ARel::AAboveUV;
  Challenge challenged = Challenge::A;
  std::size_t challenged_node = 0;
};

struct GameResult {
  Player winner = Player::Pebbler;
  std::vector<RoundRecord> trace;
  std::vector<Mistake> mistakes;  // in order of occurrence
  bool invariants_ok = true;
  std::string audit;  // first violated condition, if any
};

// Honest Pebbler (true values, truthful structure bits) against an honest
// Challenger (lowest incorrectly pebbled candidate; stalls legally when all
// pebbles are correct).  Requires a padded sentence (2^{d+1}-1 leaves).
// Throws std::logic_error if the game fails to produce a mistake by round d.
GameResult play_game(const SentPtr& padded);

std::string format_trace(const GameResult& r);

// --- truth triplets ---------------------------------------------------------
struct Triplet {
  bool c = false, tt = false, tf = false;
  bool unscarred() const { return tt == tf; }
  bool operator==(const Triplet&) const = default;
};

Triplet triplet_or(const Triplet& a, const Triplet& b);
Triplet triplet_imp(const Triplet& a, const Triplet& b);
Triplet triplet_comp(const Triplet& a, const Triplet& b);

}  // namespace t1kit
