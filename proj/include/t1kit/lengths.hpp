#pragma once
// Exact output-length functions over input lengths (the executable face of
// length-determinism).

#include "t1kit/termlang.hpp"

#include <map>

namespace t1kit {

using LenVec = std::map<std::string, std::size_t>;

class LengthCalc {
 public:
  std::size_t term_len(const TermPtr& t, const LenVec& lv);
  std::size_t fn_len(const FnPtr& f, const std::vector<std::size_t>& arg_lens);

 private:
  // Per-call memo over shared term structure (expanded terms are DAGs; a
  // plain tree walk is exponential).  Keyed by node address + length vector;
  // lives only for one public call, so addresses stay valid.
  using DagMemo = std::map<std::pair<const void*, std::string>, std::size_t>;
  std::size_t term_rec(const TermPtr& t, const LenVec& lv,
                       const std::string& lvkey, DagMemo& memo);
  std::size_t fn_rec(const FnPtr& f, const std::vector<std::size_t>& arg_lens,
                     DagMemo& memo);
  std::map<std::string, std::size_t> memo_;  // TRN: symbol identity + lengths
};

std::size_t tlen(const TermPtr& t, const LenVec& lv);

}  // namespace t1kit
