// Scratch: smoke-test the minimal system encoding and checker.
#include <iostream>
#include <random>

#include "t1kit/fregemin.hpp"

using namespace t1kit;

static int fails = 0;
#define CHECK(cond)                                           \
  do {                                                        \
    if (!(cond)) {                                            \
      std::cout << "FAIL " << __LINE__ << ": " #cond << "\n"; \
      ++fails;                                                \
    }                                                         \
  } while (0)

int main() {
  // Golden encoding.
  MinPtr g = parse_min("(p2 -> ((p10 -> F) -> p2))");
  std::string want =
      "10000000" "00000010" "11000000" "10000001" "10000010" "00001010"
      "11000010" "00100000" "01000010" "11000001" "00000010" "01000001"
      "01000000";
  Bits enc = encode_min(g, 3);
  CHECK(enc == want);
  CHECK(min_equal(decode_min(enc, 3), g));
  CHECK(encode_min(m_var(1), 3) == "00000001");
  CHECK(min_ell(g) == 3);
  CHECK(formula_valid(enc, 3));
  CHECK(formula_valid("00000000" + enc, 3));  // padding tolerated
  CHECK(!formula_valid(enc.substr(8), 3));
  CHECK(!formula_valid("", 3));

  // Random round trips and corruption rejection.
  std::mt19937_64 rng(0);
  auto rnd = [&](auto&& self, int depth) -> MinPtr {
    switch (rng() % (depth > 3 ? 3 : 4)) {
      case 0: return m_var(1 + rng() % 10);
      case 1: return m_top();
      case 2: return m_bot();
      default: return m_imp(self(self, depth + 1), self(self, depth + 1));
    }
  };
  int corrupt_rejected = 0, corrupt_total = 0;
  for (int i = 0; i < 300; ++i) {
    MinPtr f = rnd(rnd, 0);
    std::size_t ell = min_ell(f);
    Bits e = encode_min(f, ell);
    CHECK(min_equal(decode_min(e, ell), f));
    CHECK(min_equal(parse_min(print_min(f)), f));
    Bits c = e;
    c[rng() % c.size()] ^= 1;
    ++corrupt_total;
    if (!formula_valid(c, ell)) ++corrupt_rejected;
    else CHECK(min_equal(decode_min(c, ell), decode_min(c, ell)));
  }
  std::cout << "corruptions rejected: " << corrupt_rejected << "/"
            << corrupt_total << "\n";

  // A -> A proof, checker, proof encoding, extraction, mutation.
  std::string ptext =
      "(p1 -> ((p1 -> p1) -> p1)) ; ax 1\n"
      "((p1 -> ((p1 -> p1) -> p1)) -> ((p1 -> (p1 -> p1)) -> (p1 -> p1))) ; ax 2\n"
      "((p1 -> (p1 -> p1)) -> (p1 -> p1)) ; mp 1 2\n"
      "(p1 -> (p1 -> p1)) ; ax 1\n"
      "(p1 -> p1) ; mp 4 3\n";
  MinProof pr = parse_min_proof(ptext);
  CHECK(check_min(pr).ok);
  CHECK(parse_min_proof(print_min_proof(pr)).lines.size() == 5);
  EncodedProof ep = encode_min_proof(pr, 3);
  Bits last = min_f(ep.x, ep.y, ep.ell, ep.k);
  CHECK(last == encode_min(parse_min("(p1 -> p1)"), 3));
  // Theorems hold in every assignment.
  for (int v = 0; v < 2; ++v) {
    Bits vb(1, '0' + v);
    CHECK(min_true(vb, last, 3));
  }
  CHECK(!min_true("0", encode_min(m_var(1), 3), 3));
  CHECK(min_true("1", encode_min(m_var(1), 3), 3));
  // Mutating y either keeps a valid proof or collapses to #T.
  Bits topenc = encode_min(m_top(), 3);
  int to_top = 0, still = 0;
  for (std::size_t i = 0; i < ep.y.size(); ++i) {
    Bits y2 = ep.y;
    y2[i] ^= 1;
    Bits r = min_f(ep.x, y2, ep.ell, ep.k);
    if (r == topenc) ++to_top;
    else ++still;
    for (int v = 0; v < 2; ++v) CHECK(min_true(Bits(1, '0' + v), r, 3));
  }
  std::cout << "y mutations: " << to_top << " -> T, " << still
            << " still valid\n";

  // Broken proofs rejected.
  {
    MinProof bad = pr;
    bad.lines[4].j1 = 3;
    CHECK(!check_min(bad).ok);
    EncodedProof be = encode_min_proof(pr, 3);
    Bits r = min_f(be.x.substr(8), be.y, be.ell, be.k);
    CHECK(r == topenc);
  }

  std::cout << (fails ? "SMOKE FAILURES\n" : "smoke ok\n");
  return fails ? 1 : 0;
}
