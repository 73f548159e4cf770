#pragma once
// Bit-string value domain: finite strings over {0,1}, 1-based indexing from
// the left everywhere in the toolkit.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace t1kit {

// A bit string is an std::string containing only '0' and '1'.  "" is epsilon.
using Bits = std::string;

// Throws std::invalid_argument if s contains a character outside {0,1}.
void check_bits(const Bits& s);

Bits allzero(const Bits& x);  // 0^|x|
Bits allone(const Bits& x);   // 1^|x|
Bits lhalf(const Bits& x);    // floor(|x|/2) leftmost bits
Bits rhalf(const Bits& x);    // ceil(|x|/2) rightmost bits
Bits lchop(const Bits& y, const Bits& x);  // x with |y| leftmost bits removed
Bits rchop(const Bits& x, const Bits& y);  // x with |y| rightmost bits removed
Bits cat(const Bits& x, const Bits& y);

// cond(w,x,y,z): w = eps -> x; w ends in 0 -> selected y, left-zero-padded to
// max(|y|,|z|); w ends in 1 -> selected z, left-zero-padded likewise.
Bits cond(const Bits& w, const Bits& x, const Bits& y, const Bits& z);

// Base-function tags; arities: Eps/Zero/One 0, AllZero..RHalf 1,
// LChop/RChop/Cat 2, Cond 4.
enum class BaseTag {
  Eps, Zero, One, AllZero, AllOne, LHalf, RHalf, LChop, RChop, Cat, Cond
};

int base_arity(BaseTag tag);
const char* base_name(BaseTag tag);  // s-expression spelling

// Applies a base function; throws std::invalid_argument on arity mismatch.
Bits base_apply(BaseTag tag, const std::vector<Bits>& args);

// Independent brute-force oracles (no algebra code involved).
namespace oracle {
std::size_t popcount(const Bits& x);
std::uint64_t int_of(const Bits& x);        // binary value, msb first
Bits bits_of(std::uint64_t n);              // minimal-width binary, "" for 0
Bits reverse(const Bits& x);
std::size_t next_pow2_len(const Bits& x);   // smallest power of two >= |x|, >= 1
}  // namespace oracle

}  // namespace t1kit
