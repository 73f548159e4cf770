#include "t1kit/bitstr.hpp"

#include <algorithm>

namespace t1kit {

void check_bits(const Bits& s) {
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string contains '" + std::string(1, c) +
                                  "'");
    }
  }
}

Bits allzero(const Bits& x) { return Bits(x.size(), '0'); }
Bits allone(const Bits& x) { return Bits(x.size(), '1'); }

Bits rhalf(const Bits& x) {
  std::size_t keep = (x.size() + 1) / 2;
  return x.substr(x.size() - keep);
}

Bits lhalf(const Bits& x) { return x.substr(0, x.size() / 2); }

Bits lchop(const Bits& y, const Bits& x) {
  if (y.size() >= x.size()) return "";
  return x.substr(y.size());
}

Bits rchop(const Bits& x, const Bits& y) {
  if (y.size() >= x.size()) return "";
  return x.substr(0, x.size() - y.size());
}

Bits cat(const Bits& x, const Bits& y) { return x + y; }

Bits cond(const Bits& w, const Bits& x, const Bits& y, const Bits& z) {
  if (w.empty()) return x;
  std::size_t width = std::max(y.size(), z.size());
  const Bits& sel = (w.back() == '0') ? y : z;
  return Bits(width - sel.size(), '0') + sel;
}

int base_arity(BaseTag tag) {
  switch (tag) {
    case BaseTag::Eps:
    case BaseTag::Zero:
    case BaseTag::One:
      return 0;
    case BaseTag::AllZero:
    case BaseTag::AllOne:
    case BaseTag::LHalf:
    case BaseTag::RHalf:
      return 1;
    case BaseTag::LChop:
    case BaseTag::RChop:
    case BaseTag::Cat:
      return 2;
    case BaseTag::Cond:
      return 4;
  }
  return -1;
}

const char* base_name(BaseTag tag) {
  switch (tag) {
    case BaseTag::Eps: return "eps";
    case BaseTag::Zero: return "zero";
    case BaseTag::One: return "one";
    case BaseTag::AllZero: return "allzero";
    case BaseTag::AllOne: return "allone";
    case BaseTag::LHalf: return "lhalf";
    case BaseTag::RHalf: return "rhalf";
    case BaseTag::LChop: return "lchop";
    case BaseTag::RChop: return "rchop";
    case BaseTag::Cat: return "cat";
    case BaseTag::Cond: return "cond";
  }
  return "?";
}

Bits base_apply(BaseTag tag, const std::vector<Bits>& args) {
  if (static_cast<int>(args.size()) != base_arity(tag)) {
    throw std::invalid_argument(std::string("arity mismatch for ") +
                                base_name(tag));
  }
  switch (tag) {
    case BaseTag::Eps: return "";
    case BaseTag::Zero: return "0";
    case BaseTag::One: return "1";
    case BaseTag::AllZero: return allzero(args[0]);
    case BaseTag::AllOne: return allone(args[0]);
    case BaseTag::LHalf: return lhalf(args[0]);
    case BaseTag::RHalf: return rhalf(args[0]);
    case BaseTag::LChop: return lchop(args[0], args[1]);
    case BaseTag::RChop: return rchop(args[0], args[1]);
    case BaseTag::Cat: return cat(args[0], args[1]);
    case BaseTag::Cond: return cond(args[0], args[1], args[2], args[3]);
  }
  throw std::invalid_argument("unknown base tag");
}

namespace oracle {

std::size_t popcount(const Bits& x) {
  return static_cast<std::size_t>(std::count(x.begin(), x.end(), '1'));
}

std::uint64_t int_of(const Bits& x) {
  std::uint64_t v = 0;
  for (char c : x) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

Bits bits_of(std::uint64_t n) {
  Bits out;
  while (n > 0) {
    out.push_back(static_cast<char>('0' + (n & 1)));
    n >>= 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Bits reverse(const Bits& x) { return Bits(x.rbegin(), x.rend()); }

std::size_t next_pow2_len(const Bits& x) {
  std::size_t p = 1;
  while (p < x.size()) p *= 2;
  return p;
}

}  // namespace oracle
}  // namespace t1kit
