#include "t1kit/bsvp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace t1kit {

// --- sentences --------------------------------------------------------------

SentPtr s_leaf(bool v) {
  auto s = std::make_shared<Sentence>();
  s->leaf = true;
  s->value = v;
  return s;
}

SentPtr s_imp(SentPtr a, SentPtr b) {
  auto s = std::make_shared<Sentence>();
  s->leaf = false;
  s->a = std::move(a);
  s->b = std::move(b);
  return s;
}

namespace {

struct SentParser {
  const std::string& t;
  std::size_t pos = 0;
  explicit SentParser(const std::string& text) : t(text) {}
  void ws() {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
      ++pos;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("sentence parse error at offset " +
                                std::to_string(pos) + ": " + why);
  }
  SentPtr parse() {
    ws();
    if (pos >= t.size()) fail("unexpected end");
    char c = t[pos];
    if (c == 'T' || c == 'F') {
      ++pos;
      return s_leaf(c == 'T');
    }
    if (c != '(') fail("expected T, F or '('");
    ++pos;
    SentPtr a = parse();
    ws();
    if (pos + 1 >= t.size() || t[pos] != '-' || t[pos + 1] != '>')
      fail("expected '->'");
    pos += 2;
    SentPtr b = parse();
    ws();
    if (pos >= t.size() || t[pos] != ')') fail("expected ')'");
    ++pos;
    return s_imp(std::move(a), std::move(b));
  }
};

}  // namespace

SentPtr parse_sentence(const std::string& text) {
  SentParser p(text);
  SentPtr s = p.parse();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

std::string print_sentence(const SentPtr& s) {
  if (s->leaf) return s->value ? "T" : "F";
  return "(" + print_sentence(s->a) + " -> " + print_sentence(s->b) + ")";
}

std::size_t leaf_count(const SentPtr& s) {
  return s->leaf ? 1 : leaf_count(s->a) + leaf_count(s->b);
}

bool naive_eval(const SentPtr& s) {
  if (s->leaf) return s->value;
  return !naive_eval(s->a) || naive_eval(s->b);
}

PadResult pad_sentence(const SentPtr& s) {
  std::size_t n = leaf_count(s);
  PadResult r;
  std::size_t target = 1;  // 2^{d+1} - 1
  r.d = 0;
  while (target < n) {
    target = 2 * target + 1;
    ++r.d;
  }
  r.pads = target - n;
  r.tree = s;
  for (std::size_t i = 0; i < r.pads; ++i) r.tree = s_imp(s_leaf(true), r.tree);
  return r;
}

std::size_t leaf_rank(std::size_t k) {
  if (k == 0) throw std::invalid_argument("leaf numbers start at 1");
  std::size_t r = 0;
  while ((k & 1) == 0) k >>= 1, ++r;
  return r;
}

// --- explicit game tree -----------------------------------------------------

GameTree GameTree::build(const SentPtr& s) {
  GameTree t;
  t.leaf_node.push_back(npos);  // leaves are numbered from 1
  auto rec = [&](auto&& self, const SentPtr& u, std::size_t parent,
                 std::size_t depth) -> std::size_t {
    std::size_t id = t.nodes.size();
    t.nodes.push_back({});
    t.nodes[id].parent = parent;
    t.nodes[id].depth = depth;
    if (u->leaf) {
      t.nodes[id].lo = t.nodes[id].hi = t.leaf_node.size();
      t.nodes[id].value = u->value;
      t.leaf_node.push_back(id);
      return id;
    }
    std::size_t l = self(self, u->a, id, depth + 1);
    std::size_t r = self(self, u->b, id, depth + 1);
    t.nodes[id].left = l;
    t.nodes[id].right = r;
    t.nodes[id].lo = t.nodes[l].lo;
    t.nodes[id].hi = t.nodes[r].hi;
    t.nodes[id].value = !t.nodes[l].value || t.nodes[r].value;
    return id;
  };
  rec(rec, s, npos, 0);
  return t;
}

bool GameTree::anceq(std::size_t u, std::size_t v) const {
  return nodes[u].lo <= nodes[v].lo && nodes[v].hi <= nodes[u].hi;
}

std::size_t GameTree::lca(std::size_t u, std::size_t v) const {
  while (!anceq(u, v)) u = nodes[u].parent;
  return u;
}

std::size_t GameTree::mask_node(std::size_t pads) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < pads; ++i) n = nodes[n].right;
  return n;
}

// --- game -------------------------------------------------------------------

const char* challenge_name(Challenge c) {
  switch (c) {
    case Challenge::A: return "A";
    case Challenge::U: return "U";
    case Challenge::U1: return "U1";
    case Challenge::U2: return "U2";
    case Challenge::V: return "V";
    case Challenge::V1: return "V1";
    case Challenge::V2: return "V2";
  }
  return "?";
}

namespace {

constexpr std::size_t npos = GameTree::npos;

struct Pebble {
  bool has[2] = {false, false};
  std::size_t placed[2] = {0, 0};  // round of first placement per value
};

struct Game {
  const GameTree& t;
  std::size_t d;
  std::size_t nl;  // number of leaves
  std::map<std::size_t, Pebble> pebbles;
  std::set<std::size_t> agreed;            // nodes carrying an agreed pebble
  std::vector<std::size_t> challenged;     // node history, round order
  GameResult res;

  Game(const GameTree& tree, std::size_t depth)
      : t(tree), d(depth), nl(tree.leaf_node.size() - 1) {}

  bool truth(std::size_t n) const { return t.nodes[n].value; }

  void place(std::size_t n, bool v, std::size_t round) {
    Pebble& p = pebbles[n];
    if (!p.has[v]) {
      p.has[v] = true;
      p.placed[v] = round;
    }
  }

  // Single asserted value, if the node carries exactly one.
  std::optional<bool> asserted(std::size_t n) const {
    auto it = pebbles.find(n);
    if (it == pebbles.end()) return std::nullopt;
    if (it->second.has[0] && it->second.has[1]) return std::nullopt;
    return it->second.has[1];
  }

  bool pebbled(std::size_t n) const { return pebbles.count(n) != 0; }

  // Value an input contributes to a gate check: leaf label, else the single
  // asserted pebble value.
  std::optional<bool> input_value(std::size_t n) const {
    if (t.is_leaf(n)) return t.nodes[n].value;
    return asserted(n);
  }

  // First Pebbler mistake on the whole board, in the order double pebble,
  // wrong leaf, incompatible gate.
  std::optional<std::string> scan_pebbler() const {
    for (const auto& [n, p] : pebbles) {
      if (p.has[0] && p.has[1])
        return "node " + std::to_string(n) + " pebbled with both 0 and 1";
      bool v = p.has[1];
      if (t.is_leaf(n) && v != t.nodes[n].value)
        return "leaf " + std::to_string(t.nodes[n].lo) + " pebbled incorrectly";
    }
    for (const auto& [n, p] : pebbles) {
      if (t.is_leaf(n)) continue;
      std::optional<bool> l = input_value(t.nodes[n].left);
      std::optional<bool> r = input_value(t.nodes[n].right);
      if (l && r && p.has[1] != (!*l || *r))
        return "gate " + std::to_string(n) +
               " pebbled incompatibly with its inputs";
    }
    return std::nullopt;
  }

  // Challenger mistake entailed by challenging node n (history and agreed
  // set reflect the state before this challenge).
  std::optional<std::string> challenge_mistake(std::size_t n) const {
    for (std::size_t prev : challenged)
      if (n != prev && t.anceq(n, prev))
        return "challenged node " + std::to_string(n) +
               " above a previously challenged node";
    for (std::size_t g : agreed)
      if (t.anceq(g, n))
        return "challenged node " + std::to_string(n) +
               " at or below an agreed pebble";
    std::optional<bool> a = asserted(n);
    if (t.is_leaf(n)) {
      if (a && *a == t.nodes[n].value)
        return "correctly pebbled leaf " + std::to_string(t.nodes[n].lo) +
               " challenged";
      return std::nullopt;
    }
    std::optional<bool> l = input_value(t.nodes[n].left);
    std::optional<bool> r = input_value(t.nodes[n].right);
    if (a && l && r && *a == (!*l || *r))
      return "correctly pebbled gate " + std::to_string(n) +
             " with determined inputs challenged";
    return std::nullopt;
  }

  void commit_challenge(std::size_t n, std::size_t round) {
    challenged.push_back(n);
    // Pebbles placed this round strictly below the challenged node are agreed
    // from the next round on.
    for (const auto& [m, p] : pebbles)
      for (int v = 0; v < 2; ++v)
        if (p.has[v] && p.placed[v] == round && m != n && t.anceq(n, m))
          agreed.insert(m);
  }

  std::size_t recompute_b(std::size_t a, std::size_t leafc) const {
    std::size_t best = npos;
    for (const auto& [n, p] : pebbles) {
      (void)p;
      if (n != a && t.anceq(a, n) && t.anceq(n, leafc) &&
          (best == npos || t.nodes[n].depth < t.nodes[best].depth))
        best = n;
    }
    return best == npos ? leafc : best;
  }

  void audit(std::size_t i, std::size_t a, std::size_t b, std::size_t lf,
             std::size_t cf, std::size_t rf) {
    if (!res.invariants_ok) return;
    auto bad = [&](const std::string& why) {
      res.invariants_ok = false;
      res.audit = "round " + std::to_string(i) + ": " + why;
    };
    std::size_t leafc = t.leaf_node[cf];
    if (!t.anceq(a, b) || !t.anceq(b, leafc) || (a == b && b != leafc))
      return bad("condition 1 violated");
    if (recompute_b(a, leafc) != b) return bad("condition 2 violated");
    if (lf == rf || lf < 1 || rf < 1 || cf < 1 || lf > nl || rf > nl ||
        cf > nl || leaf_rank(lf) != d - i || leaf_rank(rf) != d - i ||
        leaf_rank(cf) <= d - i)
      return bad("condition 3 violated");
    std::size_t rad = std::size_t{1} << (d - i);
    for (std::size_t k = t.nodes[a].lo; k <= t.nodes[a].hi; ++k) {
      if (k >= t.nodes[b].lo && k <= t.nodes[b].hi) continue;
      bool nearl = k + rad > lf && k < lf + rad;
      bool nearr = k + rad > rf && k < rf + rad;
      if (!nearl && !nearr) return bad("condition 4 violated");
    }
  }
};

}  // namespace

GameResult play_game(const SentPtr& padded) {
  GameTree t = GameTree::build(padded);
  std::size_t nl = t.leaf_node.size() - 1;
  std::size_t d = 0;
  while ((std::size_t{2} << d) - 1 < nl) ++d;
  if ((std::size_t{2} << d) - 1 != nl)
    throw std::invalid_argument("sentence is not padded to 2^{d+1}-1 leaves");

  Game g(t, d);
  GameResult& res = g.res;

  // Round 0: the Pebbler pebbles the root with 1 and the Challenger
  // challenges the root.
  g.place(0, true, 0);
  if (auto m = g.scan_pebbler()) {
    res.mistakes.push_back({Player::Pebbler, 0, *m});
    res.winner = Player::Challenger;
    return res;
  }
  if (auto m = g.challenge_mistake(0)) {
    g.commit_challenge(0, 0);
    res.mistakes.push_back({Player::Challenger, 0, *m});
    res.winner = Player::Pebbler;
    return res;
  }
  g.commit_challenge(0, 0);
  if (d == 0)
    throw std::logic_error("round 0 produced no mistake on a single leaf");

  std::size_t A = 0;
  std::size_t Cf = std::size_t{1} << d;
  std::size_t B = g.recompute_b(A, t.leaf_node[Cf]);
  std::size_t Lf = std::size_t{1} << (d - 1);
  std::size_t Rf = Cf + Lf;
  g.audit(1, A, B, Lf, Cf, Rf);

  for (std::size_t i = 1; i <= d; ++i) {
    RoundRecord rec;
    rec.i = i;
    rec.A = A;
    rec.B = B;
    rec.L = Lf;
    rec.C = Cf;
    rec.R = Rf;
    std::size_t leafc = t.leaf_node[Cf];
    std::size_t U = t.lca(t.leaf_node[Lf], leafc);
    std::size_t V = t.lca(leafc, t.leaf_node[Rf]);
    rec.U = U;
    rec.V = V;
    rec.U1 = t.nodes[U].left;
    rec.U2 = t.nodes[U].right;
    rec.V1 = t.nodes[V].left;
    rec.V2 = t.nodes[V].right;
    if (U == V || !t.anceq(U, leafc) || U == leafc || !t.anceq(V, leafc) ||
        V == leafc) {
      res.invariants_ok = false;
      res.audit = "round " + std::to_string(i) +
                  ": U and V are not distinct strict ancestors of C";
    }

    // Honest Pebbler: correct values on the six distinguished nodes,
    // truthful structure bits.
    for (std::size_t n : {U, V, rec.U1, rec.U2, rec.V1, rec.V2})
      g.place(n, t.nodes[n].value, i);
    rec.u_above_v = t.nodes[U].depth < t.nodes[V].depth;
    std::size_t da = t.nodes[A].depth, du = t.nodes[U].depth,
                dv = t.nodes[V].depth;
    if (da < du && da < dv)
      rec.a_rel = ARel::AAboveUV;
    else if (du <= da && dv <= da)
      rec.a_rel = ARel::UVAboveA;
    else if (du <= da)
      rec.a_rel = ARel::UAboveAAboveV;
    else
      rec.a_rel = ARel::VAboveAAboveU;

    if (auto m = g.scan_pebbler()) {
      res.trace.push_back(rec);
      res.mistakes.push_back({Player::Pebbler, i, *m});
      res.winner = Player::Challenger;
      return res;
    }

    // Honest Challenger: the lowest incorrectly pebbled legal candidate
    // that is not itself an immediate mistake; otherwise the lowest legal
    // candidate whose challenge is not an immediate mistake; otherwise any
    // legal candidate (a forced mistake).
    std::vector<std::pair<Challenge, std::size_t>> cand = {
        {Challenge::U1, rec.U1}, {Challenge::U2, rec.U2},
        {Challenge::V1, rec.V1}, {Challenge::V2, rec.V2},
        {Challenge::U, U},       {Challenge::V, V},
        {Challenge::A, A}};
    std::vector<std::pair<Challenge, std::size_t>> legal;
    for (auto& [c, n] : cand)
      if (t.anceq(A, n) && !t.anceq(B, n)) legal.push_back({c, n});
    if (legal.empty())
      throw std::logic_error("no legal challenge in round " +
                             std::to_string(i));
    auto deeper = [&](const std::pair<Challenge, std::size_t>& x,
                      const std::pair<Challenge, std::size_t>& y) {
      return t.nodes[x.second].depth > t.nodes[y.second].depth;
    };
    std::stable_sort(legal.begin(), legal.end(), deeper);
    std::optional<std::pair<Challenge, std::size_t>> pick;
    for (auto& cn : legal) {
      std::optional<bool> a = g.asserted(cn.second);
      bool incorrect =
          g.pebbled(cn.second) && (!a || *a != t.nodes[cn.second].value);
      if (incorrect && !g.challenge_mistake(cn.second)) {
        pick = cn;
        break;
      }
    }
    if (!pick)
      for (auto& cn : legal)
        if (!g.challenge_mistake(cn.second)) {
          pick = cn;
          break;
        }
    if (!pick) pick = legal.front();

    rec.challenged = pick->first;
    rec.challenged_node = pick->second;
    res.trace.push_back(rec);
    std::optional<std::string> cm = g.challenge_mistake(pick->second);
    g.commit_challenge(pick->second, i);
    if (cm) {
      res.mistakes.push_back({Player::Challenger, i, *cm});
      res.winner = Player::Pebbler;
      return res;
    }
    if (pick->first == Challenge::U || pick->first == Challenge::V)
      throw std::logic_error("game ended without a mistake in round " +
                             std::to_string(i));
    if (i == d)
      throw std::logic_error("no mistake by round d");

    // Transition table for the distinguished leaves.
    std::size_t e = std::size_t{1} << (d - i - 1);
    std::size_t L2 = Lf, C2 = Cf, R2 = Rf;
    bool uv = rec.u_above_v;
    switch (pick->first) {
      case Challenge::U1:
        C2 = Lf;
        R2 = Lf + e;
        L2 = Lf - e;
        break;
      case Challenge::U2:
        R2 = uv ? Rf + e : Rf - e;
        L2 = Lf + e;
        break;
      case Challenge::V1:
        R2 = Rf - e;
        L2 = uv ? Lf + e : Lf - e;
        break;
      case Challenge::V2:
        C2 = Rf;
        R2 = Rf + e;
        L2 = Rf - e;
        break;
      case Challenge::A:
        switch (rec.a_rel) {
          case ARel::AAboveUV: R2 = Rf + e; L2 = Lf - e; break;
          case ARel::UVAboveA: R2 = Rf - e; L2 = Lf + e; break;
          case ARel::UAboveAAboveV: R2 = Rf + e; L2 = Lf + e; break;
          case ARel::VAboveAAboveU: R2 = Rf - e; L2 = Lf - e; break;
        }
        break;
      default:
        break;
    }
    A = pick->second;
    Lf = L2;
    Cf = C2;
    Rf = R2;
    B = g.recompute_b(A, t.leaf_node[Cf]);
    g.audit(i + 1, A, B, Lf, Cf, Rf);
  }
  throw std::logic_error("game did not terminate");
}

std::string format_trace(const GameResult& r) {
  std::ostringstream os;
  for (const RoundRecord& rc : r.trace) {
    os << "round " << rc.i << ": A=" << rc.A << " B=" << rc.B << " L=" << rc.L
       << " C=" << rc.C << " R=" << rc.R << " U=" << rc.U << " V=" << rc.V
       << " challenge=" << challenge_name(rc.challenged) << "("
       << rc.challenged_node << ")\n";
  }
  for (const Mistake& m : r.mistakes)
    os << "mistake (round " << m.round << ", "
       << (m.who == Player::Pebbler ? "pebbler" : "challenger")
       << "): " << m.what << "\n";
  os << "winner: " << (r.winner == Player::Pebbler ? "pebbler" : "challenger")
     << "\n";
  return os.str();
}

// --- truth triplets ---------------------------------------------------------

Triplet triplet_or(const Triplet& a, const Triplet& b) {
  return {a.c || b.c, (a.c && a.tt) || (b.c && b.tt),
          (a.c && a.tf) || (b.c && b.tf)};
}

Triplet triplet_imp(const Triplet& a, const Triplet& b) {
  return {a.c && b.c, !a.tt || b.tt, !a.tf || b.tf};
}

Triplet triplet_comp(const Triplet& a, const Triplet& b) {
  return {a.c && b.c, b.tt ? a.tt : a.tf, b.tf ? a.tt : a.tf};
}

}  // namespace t1kit
