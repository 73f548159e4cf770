#include "t1kit/lengths.hpp"

#include <algorithm>
#include <sstream>

namespace t1kit {

namespace {
std::size_t monus(std::size_t a, std::size_t b) { return a > b ? a - b : 0; }

std::string lv_key(const LenVec& lv) {
  std::ostringstream os;
  for (const auto& [name, n] : lv) os << name << '=' << n << ';';
  return os.str();
}
}  // namespace

std::size_t LengthCalc::term_len(const TermPtr& t, const LenVec& lv) {
  DagMemo memo;
  return term_rec(t, lv, lv_key(lv), memo);
}

std::size_t LengthCalc::fn_len(const FnPtr& f,
                               const std::vector<std::size_t>& arg_lens) {
  DagMemo memo;
  return fn_rec(f, arg_lens, memo);
}

std::size_t LengthCalc::term_rec(const TermPtr& t, const LenVec& lv,
                                 const std::string& lvkey, DagMemo& memo) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = lv.find(t->var);
      if (it == lv.end()) {
        throw std::out_of_range("no length for variable '" + t->var + "'");
      }
      return it->second;
    }
    case TermKind::Lit:
      return t->lit.size();
    case TermKind::Apply: {
      DagMemo::key_type key{t.get(), lvkey};
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      std::vector<std::size_t> lens;
      lens.reserve(t->args.size());
      for (const auto& a : t->args) lens.push_back(term_rec(a, lv, lvkey, memo));
      std::size_t out = fn_rec(t->fn, lens, memo);
      memo.emplace(key, out);
      return out;
    }
  }
  throw std::logic_error("bad term node");
}

std::size_t LengthCalc::fn_rec(const FnPtr& f,
                               const std::vector<std::size_t>& arg_lens,
                               DagMemo& memo) {
  switch (f->kind) {
    case FnKind::Base:
      switch (f->tag) {
        case BaseTag::Eps: return 0;
        case BaseTag::Zero:
        case BaseTag::One: return 1;
        case BaseTag::AllZero:
        case BaseTag::AllOne: return arg_lens[0];
        case BaseTag::LHalf: return arg_lens[0] / 2;
        case BaseTag::RHalf: return (arg_lens[0] + 1) / 2;
        case BaseTag::LChop: return monus(arg_lens[1], arg_lens[0]);
        case BaseTag::RChop: return monus(arg_lens[0], arg_lens[1]);
        case BaseTag::Cat: return arg_lens[0] + arg_lens[1];
        case BaseTag::Cond:
          return arg_lens[0] == 0 ? arg_lens[1]
                                  : std::max(arg_lens[2], arg_lens[3]);
      }
      throw std::logic_error("bad base tag");
    case FnKind::Lambda: {
      LenVec lv;
      for (std::size_t i = 0; i < f->params.size(); ++i) {
        lv[f->params[i]] = arg_lens[i];
      }
      return term_rec(f->body, lv, lv_key(lv), memo);
    }
    case FnKind::LCrn:
    case FnKind::RCrn:
      return arg_lens[0];
    case FnKind::Trn: {
      std::ostringstream key;
      key << f.get();
      for (auto n : arg_lens) key << ',' << n;
      auto it = memo_.find(key.str());
      if (it != memo_.end()) return it->second;
      std::size_t m = arg_lens[0];
      std::size_t out;
      if (m <= 1) {
        out = fn_rec(f->g, arg_lens, memo);
      } else {
        std::size_t p = arg_lens[1];
        std::vector<std::size_t> left(arg_lens), right(arg_lens);
        left[0] = m / 2;
        left[1] = fn_rec(f->hl, {p}, memo);
        right[0] = (m + 1) / 2;
        right[1] = fn_rec(f->hr, {p}, memo);
        std::vector<std::size_t> hargs(arg_lens);
        hargs.push_back(fn_rec(f, left, memo));
        hargs.push_back(fn_rec(f, right, memo));
        out = fn_rec(f->h, hargs, memo);
      }
      memo_.emplace(key.str(), out);
      return out;
    }
  }
  throw std::logic_error("bad symbol kind");
}

std::size_t tlen(const TermPtr& t, const LenVec& lv) {
  LengthCalc lc;
  return lc.term_len(t, lv);
}

}  // namespace t1kit
