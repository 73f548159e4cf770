#pragma once
// The standard library of named definitions: string combinators, boolean
// connectives, bitwise maps, numeric functions (successor, addition,
// carry-save counting), tupling, and the pigeonhole-principle family.

#include "t1kit/evaluator.hpp"

namespace t1kit {

// Builds the full registry; every entry passes wf_check.
const DefRegistry& stdlib_registry();

// Higher-order builders used by the stdlib (exposed for tests).
//
// strn(g, h): simultaneous tree recursion on a string x with parameters
//   y1..yn: value is g(x, ys) when |x| <= 1, else h(x, ys, vl, vr) on the
//   recursive values of the two halves.  g has arity n+1, h arity n+3.
FnPtr strn(const FnPtr& g, const FnPtr& h, std::string name = "");

// lcrn_multi(reg, h, m): m-string left CRN; h takes m recursion strings
// (aligned suffixes, left-zero-padded to the longest input) plus the
// trailing parameters.  rcrn_multi is the prefix/right-zero-padded dual.
FnPtr lcrn_multi(const DefRegistry& reg, const FnPtr& h, int m,
                 std::string name = "");
FnPtr rcrn_multi(const DefRegistry& reg, const FnPtr& h, int m,
                 std::string name = "");

// Serializes the registry as a definition file ("def NAME = ...").
std::string dump_stdlib_defs();

}  // namespace t1kit
