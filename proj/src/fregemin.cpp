#include "t1kit/fregemin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace t1kit {

MinPtr m_top() {
  static const MinPtr t = std::make_shared<MinFormula>(MinFormula{MinKind::Top});
  return t;
}

MinPtr m_bot() {
  static const MinPtr b = std::make_shared<MinFormula>(MinFormula{MinKind::Bot});
  return b;
}

MinPtr m_var(std::size_t idx) {
  if (idx == 0) throw std::invalid_argument("variable indices start at 1");
  auto f = std::make_shared<MinFormula>();
  f->kind = MinKind::Var;
  f->idx = idx;
  return f;
}

MinPtr m_imp(MinPtr a, MinPtr b) {
  auto f = std::make_shared<MinFormula>();
  f->kind = MinKind::Imp;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

bool min_equal(const MinPtr& a, const MinPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case MinKind::Top:
    case MinKind::Bot: return true;
    case MinKind::Var: return a->idx == b->idx;
    case MinKind::Imp:
      return min_equal(a->a, b->a) && min_equal(a->b, b->b);
  }
  return false;
}

std::string print_min(const MinPtr& f) {
  switch (f->kind) {
    case MinKind::Top: return "T";
    case MinKind::Bot: return "F";
    case MinKind::Var: return "p" + std::to_string(f->idx);
    case MinKind::Imp:
      return "(" + print_min(f->a) + " -> " + print_min(f->b) + ")";
  }
  return "?";
}

namespace {

struct MinTextParser {
  const std::string& t;
  std::size_t pos = 0;
  explicit MinTextParser(const std::string& text) : t(text) {}
  void ws() {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
      ++pos;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("formula parse error at offset " +
                                std::to_string(pos) + ": " + why);
  }
  MinPtr parse() {
    ws();
    if (pos >= t.size()) fail("unexpected end");
    char c = t[pos];
    if (c == 'T') return ++pos, m_top();
    if (c == 'F') return ++pos, m_bot();
    if (c == 'p') {
      ++pos;
      std::size_t start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
        ++pos;
      if (pos == start) fail("expected variable index");
      return m_var(std::stoul(t.substr(start, pos - start)));
    }
    if (c != '(') fail("expected T, F, p<idx> or '('");
    ++pos;
    MinPtr a = parse();
    ws();
    if (pos + 1 >= t.size() || t[pos] != '-' || t[pos + 1] != '>')
      fail("expected '->'");
    pos += 2;
    MinPtr b = parse();
    ws();
    if (pos >= t.size() || t[pos] != ')') fail("expected ')'");
    ++pos;
    return m_imp(std::move(a), std::move(b));
  }
};

std::size_t bitlen(std::size_t n) {
  std::size_t w = 0;
  while (n) n >>= 1, ++w;
  return w;
}

std::string to_bin(std::size_t n, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = width; i-- > 0 && n; n >>= 1) s[i] = '0' + (n & 1);
  if (n) throw std::invalid_argument("value does not fit in field width");
  return s;
}

void min_stats(const MinPtr& f, std::size_t depth, std::size_t& maxvar,
               std::size_t& maxdepth) {
  if (f->kind == MinKind::Var) maxvar = std::max(maxvar, f->idx);
  if (f->kind == MinKind::Imp) {
    maxdepth = std::max(maxdepth, depth);
    min_stats(f->a, depth + 1, maxvar, maxdepth);
    min_stats(f->b, depth + 1, maxvar, maxdepth);
  }
}

}  // namespace

MinPtr parse_min(const std::string& text) {
  MinTextParser p(text);
  MinPtr f = p.parse();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::size_t min_ell(const MinPtr& f) {
  std::size_t w = 0, depth = 0;
  min_stats(f, 0, w, depth);
  std::size_t ell_a = 1 + bitlen(w + 1) - 1;  // 1 + floor(lg(w+1))
  for (std::size_t ell = 2;; ++ell) {
    std::size_t bs = std::size_t{1} << ell;
    if (bs >= ell_a + 2 && bitlen(w) <= bs - 3 && bitlen(depth) <= bs - 2)
      return ell;
  }
}

Bits encode_min(const MinPtr& f, std::size_t ell) {
  if (ell < 2) throw std::invalid_argument("block size must be at least 4");
  std::size_t bs = std::size_t{1} << ell;
  {
    std::size_t w = 0, depth = 0;
    min_stats(f, 0, w, depth);
    if (bitlen(w) > bs - 3 || bitlen(depth) > bs - 2)
      throw std::invalid_argument("block size too small for formula");
  }
  Bits out;
  auto rec = [&](auto&& self, const MinPtr& g, std::size_t j) -> void {
    switch (g->kind) {
      case MinKind::Var:
        out += "00" + to_bin(g->idx, bs - 2);
        return;
      case MinKind::Bot:
        out += "001" + std::string(bs - 3, '0');
        return;
      case MinKind::Top:
        out += "001" + std::string(bs - 3, '1');
        return;
      case MinKind::Imp:
        out += "10" + to_bin(j, bs - 2);
        self(self, g->a, j + 1);
        out += "11" + to_bin(j, bs - 2);
        self(self, g->b, j + 1);
        out += "01" + to_bin(j, bs - 2);
        return;
    }
  };
  rec(rec, f, 0);
  return out;
}

namespace {

enum class Tok { Var, Top, Bot, LP, Imp, RP };
struct Token {
  Tok kind;
  std::size_t val = 0;  // variable index or bracket depth
};

// Tokenizes after stripping leading all-zero padding blocks; returns false
// on any malformed block (including an interior all-zero block, which would
// be variable index 0).
bool tokenize_blocks(const Bits& s, std::size_t ell, std::vector<Token>& out) {
  std::size_t bs = std::size_t{1} << ell;
  if (s.size() % bs != 0) return false;
  std::size_t pos = 0;
  while (pos < s.size() &&
         s.compare(pos, bs, std::string(bs, '0')) == 0)
    pos += bs;
  if (pos == s.size()) return false;  // no formula at all
  for (; pos < s.size(); pos += bs) {
    for (std::size_t i = 0; i < bs; ++i)
      if (s[pos + i] != '0' && s[pos + i] != '1') return false;
    std::string_view blk(s.data() + pos, bs);
    std::size_t tail = 0;
    for (std::size_t i = 2; i < bs; ++i)
      tail = tail * 2 + (blk[i] == '1');
    if (blk[0] == '0' && blk[1] == '0') {
      if (blk[2] == '0') {
        std::size_t idx = tail;  // leading annotation bit is 0
        if (idx == 0) return false;
        out.push_back({Tok::Var, idx});
      } else {
        bool all0 = true, all1 = true;
        for (std::size_t i = 3; i < bs; ++i)
          (blk[i] == '0' ? all1 : all0) = false;
        if (all0)
          out.push_back({Tok::Bot, 0});
        else if (all1)
          out.push_back({Tok::Top, 0});
        else
          return false;
      }
    } else if (blk[0] == '1' && blk[1] == '0') {
      out.push_back({Tok::LP, tail});
    } else if (blk[0] == '1' && blk[1] == '1') {
      out.push_back({Tok::Imp, tail});
    } else {
      out.push_back({Tok::RP, tail});
    }
  }
  return true;
}

// Recursive descent for F_j := T | F | p_i | (_j F_{j+1} ->_j F_{j+1} )_j.
// The root bracket depth is read from the first bracket.
MinPtr parse_tokens(const std::vector<Token>& ts, std::size_t& pos,
                    std::size_t j) {
  if (pos >= ts.size()) return nullptr;
  const Token& t = ts[pos];
  switch (t.kind) {
    case Tok::Var: ++pos; return m_var(t.val);
    case Tok::Top: ++pos; return m_top();
    case Tok::Bot: ++pos; return m_bot();
    case Tok::LP: {
      if (t.val != j) return nullptr;
      ++pos;
      MinPtr a = parse_tokens(ts, pos, j + 1);
      if (!a) return nullptr;
      if (pos >= ts.size() || ts[pos].kind != Tok::Imp || ts[pos].val != j)
        return nullptr;
      ++pos;
      MinPtr b = parse_tokens(ts, pos, j + 1);
      if (!b) return nullptr;
      if (pos >= ts.size() || ts[pos].kind != Tok::RP || ts[pos].val != j)
        return nullptr;
      ++pos;
      return m_imp(std::move(a), std::move(b));
    }
    default: return nullptr;
  }
}

MinPtr decode_tokens(const std::vector<Token>& ts) {
  std::size_t root = ts.front().kind == Tok::LP ? ts.front().val : 0;
  std::size_t pos = 0;
  MinPtr f = parse_tokens(ts, pos, root);
  if (!f || pos != ts.size()) return nullptr;
  return f;
}

}  // namespace

MinPtr decode_min(const Bits& s, std::size_t ell) {
  std::vector<Token> ts;
  if (!tokenize_blocks(s, ell, ts))
    throw std::invalid_argument("malformed formula encoding");
  MinPtr f = decode_tokens(ts);
  if (!f) throw std::invalid_argument("malformed formula encoding");
  return f;
}

bool formula_valid(const Bits& s, std::size_t ell) {
  std::vector<Token> ts;
  if (!tokenize_blocks(s, ell, ts)) return false;
  return decode_tokens(ts) != nullptr;
}

// --- proofs -----------------------------------------------------------------

bool match_min_axiom(std::size_t m, const MinPtr& f) {
  auto imp = [](const MinPtr& g) { return g->kind == MinKind::Imp; };
  switch (m) {
    case 1:  // (A -> (B -> A))
      return imp(f) && imp(f->b) && min_equal(f->a, f->b->b);
    case 2: {  // ((A -> (B -> C)) -> ((A -> B) -> (A -> C)))
      if (!imp(f) || !imp(f->a) || !imp(f->a->b) || !imp(f->b) ||
          !imp(f->b->a) || !imp(f->b->b))
        return false;
      const MinPtr& a = f->a->a;
      const MinPtr& b = f->a->b->a;
      const MinPtr& c = f->a->b->b;
      return min_equal(f->b->a->a, a) && min_equal(f->b->a->b, b) &&
             min_equal(f->b->b->a, a) && min_equal(f->b->b->b, c);
    }
    case 3: {  // (((B -> F) -> (A -> F)) -> (A -> B))
      if (!imp(f) || !imp(f->a) || !imp(f->a->a) || !imp(f->a->b) ||
          !imp(f->b))
        return false;
      const MinPtr& b = f->a->a->a;
      const MinPtr& a = f->a->b->a;
      return f->a->a->b->kind == MinKind::Bot &&
             f->a->b->b->kind == MinKind::Bot && min_equal(f->b->a, a) &&
             min_equal(f->b->b, b);
    }
    case 4:
      return f->kind == MinKind::Top;
    default:
      return false;
  }
}

MinCheck check_min(const MinProof& p) {
  auto bad = [](std::size_t line, const std::string& why) {
    return MinCheck{false, line, why};
  };
  if (p.lines.empty()) return bad(0, "empty proof");
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const MinLine& l = p.lines[i];
    if (!l.f) return bad(i + 1, "missing formula");
    if (l.j1 == 0) {
      if (!match_min_axiom(l.j2, l.f))
        return bad(i + 1, "not an instance of axiom scheme " +
                              std::to_string(l.j2));
    } else {
      if (l.j1 > i || l.j2 > i || l.j2 == 0)
        return bad(i + 1, "premise index out of range");
      const MinPtr& maj = p.lines[l.j2 - 1].f;
      if (maj->kind != MinKind::Imp ||
          !min_equal(maj->a, p.lines[l.j1 - 1].f) || !min_equal(maj->b, l.f))
        return bad(i + 1, "modus ponens premises do not match");
    }
  }
  return {};
}

std::string print_min_proof(const MinProof& p) {
  std::ostringstream os;
  for (const MinLine& l : p.lines) {
    os << print_min(l.f) << " ; ";
    if (l.j1 == 0)
      os << "ax " << l.j2 << "\n";
    else
      os << "mp " << l.j1 << " " << l.j2 << "\n";
  }
  return os.str();
}

MinProof parse_min_proof(const std::string& text) {
  MinProof p;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t ns = line.find_first_not_of(" \t\r");
    if (ns == std::string::npos || line[ns] == '#') continue;
    std::size_t semi = line.rfind(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("proof line missing justification: " + line);
    MinLine l;
    l.f = parse_min(line.substr(0, semi));
    std::istringstream js(line.substr(semi + 1));
    std::string kind;
    js >> kind;
    if (kind == "ax") {
      if (!(js >> l.j2)) throw std::invalid_argument("bad axiom id: " + line);
    } else if (kind == "mp") {
      if (!(js >> l.j1 >> l.j2) || l.j1 == 0)
        throw std::invalid_argument("bad premise indices: " + line);
    } else {
      throw std::invalid_argument("unknown justification: " + line);
    }
    p.lines.push_back(std::move(l));
  }
  return p;
}

EncodedProof encode_min_proof(const MinProof& p, std::size_t ell) {
  MinCheck c = check_min(p);
  if (!c.ok)
    throw std::invalid_argument("line " + std::to_string(c.line) + ": " +
                                c.reason);
  std::size_t bs = std::size_t{1} << ell;
  EncodedProof e;
  e.k = p.lines.size();
  e.ell = ell;
  // Axiom ids go up to 4, so the component width is at least 3 bits.
  e.width = std::max<std::size_t>(bitlen(e.k) + 1, 3);
  std::vector<Bits> encs;
  std::size_t seg = 0;
  for (const MinLine& l : p.lines) {
    encs.push_back(encode_min(l.f, ell));
    seg = std::max(seg, encs.back().size());
  }
  for (std::size_t i = 0; i < e.k; ++i) {
    e.x += std::string(seg - encs[i].size(), '0') + encs[i];
    e.y += to_bin(p.lines[i].j1, e.width) + to_bin(p.lines[i].j2, e.width);
  }
  (void)bs;
  return e;
}

Bits min_f(const Bits& x, const Bits& y, std::size_t ell, std::size_t k) {
  std::size_t bs = std::size_t{1} << ell;
  Bits top = encode_min(m_top(), ell);
  if (k == 0 || x.size() % k != 0) return top;
  std::size_t seg = x.size() / k;
  if (seg == 0 || seg % bs != 0) return top;
  std::size_t width = std::max<std::size_t>(bitlen(k) + 1, 3);
  if (y.size() != 2 * width * k) return top;
  std::vector<MinPtr> fs(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Token> ts;
    Bits s = x.substr(i * seg, seg);
    if (!tokenize_blocks(s, ell, ts)) return top;
    fs[i] = decode_tokens(ts);
    if (!fs[i]) return top;
  }
  auto field = [&](std::size_t i) -> std::size_t {
    std::size_t v = 0;
    for (std::size_t j = 0; j < width; ++j) {
      char c = y[i * width + j];
      if (c != '0' && c != '1') return static_cast<std::size_t>(-1);
      v = v * 2 + (c == '1');
    }
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j1 = field(2 * i), j2 = field(2 * i + 1);
    if (j1 == static_cast<std::size_t>(-1) ||
        j2 == static_cast<std::size_t>(-1))
      return top;
    if (j1 == 0) {
      if (!match_min_axiom(j2, fs[i])) return top;
    } else {
      if (j1 > i || j2 > i || j2 == 0) return top;
      const MinPtr& maj = fs[j2 - 1];
      if (maj->kind != MinKind::Imp || !min_equal(maj->a, fs[j1 - 1]) ||
          !min_equal(maj->b, fs[i]))
        return top;
    }
  }
  // Last segment with padding stripped.
  Bits last = x.substr((k - 1) * seg, seg);
  std::size_t pos = 0;
  while (pos + bs <= last.size() &&
         last.compare(pos, bs, std::string(bs, '0')) == 0)
    pos += bs;
  return last.substr(pos);
}

bool min_value(const Bits& v, const Bits& x, std::size_t ell) {
  MinPtr f = decode_min(x, ell);
  auto rec = [&](auto&& self, const MinPtr& g) -> SentPtr {
    switch (g->kind) {
      case MinKind::Top: return s_leaf(true);
      case MinKind::Bot: return s_leaf(false);
      case MinKind::Var:
        return s_leaf(g->idx <= v.size() && v[g->idx - 1] == '1');
      case MinKind::Imp:
        return s_imp(self(self, g->a), self(self, g->b));
    }
    throw std::logic_error("unreachable");
  };
  GameResult r = play_game(pad_sentence(rec(rec, f)).tree);
  return r.winner == Player::Pebbler;
}

bool min_true(const Bits& v, const Bits& x, std::size_t ell) {
  return formula_valid(x, ell) && min_value(v, x, ell);
}

}  // namespace t1kit
