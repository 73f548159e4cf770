#include "t1kit/termlang.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace t1kit {

// --- constructors -----------------------------------------------------------

FnPtr base_fn(BaseTag tag) {
  static std::array<FnPtr, 11> cache = [] {
    std::array<FnPtr, 11> a;
    for (int i = 0; i < 11; ++i) {
      auto s = std::make_shared<FunctionSymbol>();
      s->kind = FnKind::Base;
      s->tag = static_cast<BaseTag>(i);
      a[static_cast<std::size_t>(i)] = s;
    }
    return a;
  }();
  return cache[static_cast<std::size_t>(tag)];
}

FnPtr lambda_fn(std::vector<std::string> params, TermPtr body,
                std::string name) {
  auto s = std::make_shared<FunctionSymbol>();
  s->kind = FnKind::Lambda;
  s->params = std::move(params);
  s->body = std::move(body);
  s->name = std::move(name);
  return s;
}

FnPtr lcrn_fn(FnPtr h, std::string name) {
  auto s = std::make_shared<FunctionSymbol>();
  s->kind = FnKind::LCrn;
  s->h = std::move(h);
  s->name = std::move(name);
  return s;
}

FnPtr rcrn_fn(FnPtr h, std::string name) {
  auto s = std::make_shared<FunctionSymbol>();
  s->kind = FnKind::RCrn;
  s->h = std::move(h);
  s->name = std::move(name);
  return s;
}

FnPtr trn_fn(FnPtr g, FnPtr h, FnPtr hl, FnPtr hr, std::string name) {
  auto s = std::make_shared<FunctionSymbol>();
  s->kind = FnKind::Trn;
  s->g = std::move(g);
  s->h = std::move(h);
  s->hl = std::move(hl);
  s->hr = std::move(hr);
  s->name = std::move(name);
  return s;
}

TermPtr var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr lit(Bits value) {
  check_bits(value);
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lit;
  t->lit = std::move(value);
  return t;
}

TermPtr apply(FnPtr fn, std::vector<TermPtr> args) {
  if (static_cast<int>(args.size()) != fn_arity(fn)) {
    throw std::invalid_argument("apply: arity mismatch for " +
                                print_fn(fn));
  }
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Apply;
  t->fn = std::move(fn);
  t->args = std::move(args);
  return t;
}

static std::shared_ptr<T1Formula> mk_formula(FormulaKind k) {
  auto f = std::make_shared<T1Formula>();
  f->kind = k;
  return f;
}

FormulaPtr f_eq(TermPtr t, TermPtr u) {
  auto f = mk_formula(FormulaKind::Eq);
  f->t = std::move(t);
  f->u = std::move(u);
  return f;
}
FormulaPtr f_not(FormulaPtr a) {
  auto f = mk_formula(FormulaKind::Not);
  f->a = std::move(a);
  return f;
}
static FormulaPtr bin(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  auto f = mk_formula(k);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return bin(FormulaKind::And, std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return bin(FormulaKind::Or, std::move(a), std::move(b));
}
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) {
  return bin(FormulaKind::Imp, std::move(a), std::move(b));
}
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) {
  return bin(FormulaKind::Iff, std::move(a), std::move(b));
}

// --- structural queries -----------------------------------------------------

int fn_arity(const FnPtr& f) {
  switch (f->kind) {
    case FnKind::Base: return base_arity(f->tag);
    case FnKind::Lambda: return static_cast<int>(f->params.size());
    case FnKind::LCrn:
    case FnKind::RCrn: return fn_arity(f->h);
    case FnKind::Trn: return fn_arity(f->g);
  }
  return -1;
}

int fn_rank(const FnPtr& f) {
  switch (f->kind) {
    case FnKind::Base: return 0;
    case FnKind::Lambda: return term_rank(f->body);
    case FnKind::LCrn:
    case FnKind::RCrn: return fn_rank(f->h);
    case FnKind::Trn: return 1;
  }
  return 0;
}

int term_rank(const TermPtr& t) {
  if (t->kind != TermKind::Apply) return 0;
  int r = fn_rank(t->fn);
  for (const auto& a : t->args) r = std::max(r, term_rank(a));
  return r;
}

static void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == TermKind::Var) {
    out.insert(t->var);
  } else if (t->kind == TermKind::Apply) {
    for (const auto& a : t->args) collect_vars(a, out);
  }
}

static void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Eq:
      collect_vars(f->t, out);
      collect_vars(f->u, out);
      break;
    case FormulaKind::Not:
      collect_vars(f->a, out);
      break;
    default:
      collect_vars(f->a, out);
      collect_vars(f->b, out);
      break;
  }
}

std::vector<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> s;
  collect_vars(t, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

std::optional<std::string> wf_check_term(const TermPtr& t) {
  if (t->kind != TermKind::Apply) return std::nullopt;
  if (static_cast<int>(t->args.size()) != fn_arity(t->fn)) {
    return "argument count does not match arity of " + print_fn(t->fn);
  }
  if (auto v = wf_check(t->fn)) return v;
  for (const auto& a : t->args) {
    if (auto v = wf_check_term(a)) return v;
  }
  return std::nullopt;
}

std::optional<std::string> wf_check(const FnPtr& f) {
  switch (f->kind) {
    case FnKind::Base:
      return std::nullopt;
    case FnKind::Lambda: {
      if (!f->body) return "Lambda has no body";
      std::set<std::string> fv;
      collect_vars(f->body, fv);
      for (const auto& v : fv) {
        if (std::find(f->params.begin(), f->params.end(), v) ==
            f->params.end()) {
          return "unbound variable '" + v + "' in Lambda body";
        }
      }
      return wf_check_term(f->body);
    }
    case FnKind::LCrn:
    case FnKind::RCrn: {
      if (fn_arity(f->h) < 1) return "CRN step function must take >= 1 argument";
      return wf_check(f->h);
    }
    case FnKind::Trn: {
      if (fn_rank(f->h) != 0) return "TRN.h must be rank 0";
      if (fn_rank(f->hl) != 0) return "TRN.hl must be rank 0";
      if (fn_rank(f->hr) != 0) return "TRN.hr must be rank 0";
      if (fn_arity(f->hl) != 1) return "TRN.hl must be 1-place";
      if (fn_arity(f->hr) != 1) return "TRN.hr must be 1-place";
      if (fn_arity(f->g) < 2) return "TRN.g must take >= 2 arguments";
      if (fn_arity(f->h) != fn_arity(f->g) + 2) {
        return "TRN.h arity must be arity(g)+2";
      }
      for (const auto& s : {f->g, f->h, f->hl, f->hr}) {
        if (auto v = wf_check(s)) return v;
      }
      return std::nullopt;
    }
  }
  return "unknown symbol kind";
}

bool fn_eq(const FnPtr& a, const FnPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FnKind::Base:
      return a->tag == b->tag;
    case FnKind::Lambda:
      return a->params == b->params && term_eq(a->body, b->body);
    case FnKind::LCrn:
    case FnKind::RCrn:
      return fn_eq(a->h, b->h);
    case FnKind::Trn:
      return fn_eq(a->g, b->g) && fn_eq(a->h, b->h) && fn_eq(a->hl, b->hl) &&
             fn_eq(a->hr, b->hr);
  }
  return false;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->var == b->var;
    case TermKind::Lit: return a->lit == b->lit;
    case TermKind::Apply: {
      if (!fn_eq(a->fn, b->fn)) return false;
      if (a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!term_eq(a->args[i], b->args[i])) return false;
      }
      return true;
    }
  }
  return false;
}

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == FormulaKind::Eq) {
    return term_eq(a->t, b->t) && term_eq(a->u, b->u);
  }
  if (a->kind == FormulaKind::Not) return formula_eq(a->a, b->a);
  return formula_eq(a->a, b->a) && formula_eq(a->b, b->b);
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& by) {
  switch (t->kind) {
    case TermKind::Var:
      return t->var == x ? by : t;
    case TermKind::Lit:
      return t;
    case TermKind::Apply: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      bool changed = false;
      for (const auto& a : t->args) {
        auto s = substitute(a, x, by);
        changed |= (s.get() != a.get());
        args.push_back(std::move(s));
      }
      if (!changed) return t;
      return apply(t->fn, std::move(args));
    }
  }
  return t;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& x,
                      const TermPtr& by) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return f_eq(substitute(f->t, x, by), substitute(f->u, x, by));
    case FormulaKind::Not:
      return f_not(substitute(f->a, x, by));
    case FormulaKind::And:
      return f_and(substitute(f->a, x, by), substitute(f->b, x, by));
    case FormulaKind::Or:
      return f_or(substitute(f->a, x, by), substitute(f->b, x, by));
    case FormulaKind::Imp:
      return f_imp(substitute(f->a, x, by), substitute(f->b, x, by));
    case FormulaKind::Iff:
      return f_iff(substitute(f->a, x, by), substitute(f->b, x, by));
  }
  return f;
}

TermPtr substitute_multi(const TermPtr& t,
                         const std::map<std::string, TermPtr>& by) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = by.find(t->var);
      return it == by.end() ? t : it->second;
    }
    case TermKind::Lit:
      return t;
    case TermKind::Apply: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      bool changed = false;
      for (const auto& a : t->args) {
        auto s = substitute_multi(a, by);
        changed |= (s.get() != a.get());
        args.push_back(std::move(s));
      }
      if (!changed) return t;
      return apply(t->fn, std::move(args));
    }
  }
  return t;
}

FormulaPtr substitute_multi(const FormulaPtr& f,
                            const std::map<std::string, TermPtr>& by) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return f_eq(substitute_multi(f->t, by), substitute_multi(f->u, by));
    case FormulaKind::Not:
      return f_not(substitute_multi(f->a, by));
    case FormulaKind::And:
      return f_and(substitute_multi(f->a, by), substitute_multi(f->b, by));
    case FormulaKind::Or:
      return f_or(substitute_multi(f->a, by), substitute_multi(f->b, by));
    case FormulaKind::Imp:
      return f_imp(substitute_multi(f->a, by), substitute_multi(f->b, by));
    case FormulaKind::Iff:
      return f_iff(substitute_multi(f->a, by), substitute_multi(f->b, by));
  }
  return f;
}

// --- tokenizer --------------------------------------------------------------

namespace {

enum class TokKind { LParen, RParen, Symbol, String, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() &&
           (std::isspace(static_cast<unsigned char>(s_[i_])) != 0)) {
      ++i_;
    }
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {TokKind::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (c == '(') {
      tok_ = {TokKind::LParen, "(", i_++};
    } else if (c == ')') {
      tok_ = {TokKind::RParen, ")", i_++};
    } else if (c == '"') {
      std::size_t start = i_++;
      std::string body;
      while (i_ < s_.size() && s_[i_] != '"') body.push_back(s_[i_++]);
      if (i_ >= s_.size()) throw ParseError(start, "unterminated string");
      ++i_;
      tok_ = {TokKind::String, body, start};
    } else {
      std::size_t start = i_;
      std::string body;
      while (i_ < s_.size() && s_[i_] != '(' && s_[i_] != ')' &&
             s_[i_] != '"' &&
             std::isspace(static_cast<unsigned char>(s_[i_])) == 0) {
        body.push_back(s_[i_++]);
      }
      tok_ = {TokKind::Symbol, body, start};
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

std::optional<BaseTag> base_tag_of(const std::string& s) {
  static const std::map<std::string, BaseTag> table = {
      {"eps", BaseTag::Eps},         {"zero", BaseTag::Zero},
      {"one", BaseTag::One},         {"allzero", BaseTag::AllZero},
      {"allone", BaseTag::AllOne},   {"lhalf", BaseTag::LHalf},
      {"rhalf", BaseTag::RHalf},     {"lchop", BaseTag::LChop},
      {"rchop", BaseTag::RChop},     {"cat", BaseTag::Cat},
      {"cond", BaseTag::Cond}};
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

class Parser {
 public:
  Parser(const std::string& text, const NameEnv* names)
      : lex_(text), names_(names) {}

  TermPtr term() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case TokKind::String: {
        Token tok = lex_.take();
        try {
          return lit(tok.text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(tok.pos, e.what());
        }
      }
      case TokKind::Symbol: {
        Token tok = lex_.take();
        // Bare 0-ary symbols are applications; anything else is a variable.
        if (auto bt = base_tag_of(tok.text)) {
          if (base_arity(*bt) == 0) return apply(base_fn(*bt), {});
          throw ParseError(tok.pos,
                           "'" + tok.text + "' needs arguments; write (" +
                               tok.text + " ...)");
        }
        if (FnPtr f = lookup(tok.text)) {
          if (fn_arity(f) == 0) return apply(f, {});
          throw ParseError(tok.pos, "'" + tok.text +
                                        "' is a function name; apply it");
        }
        return var(tok.text);
      }
      case TokKind::LParen: {
        Token open = lex_.take();
        FnPtr f = fn_head(open.pos);
        std::vector<TermPtr> args;
        while (lex_.peek().kind != TokKind::RParen) {
          if (lex_.peek().kind == TokKind::End) {
            throw ParseError(open.pos, "unterminated application");
          }
          args.push_back(term());
        }
        lex_.take();  // ')'
        if (static_cast<int>(args.size()) != fn_arity(f)) {
          throw ParseError(open.pos,
                           "arity mismatch: " + print_fn(f) + " expects " +
                               std::to_string(fn_arity(f)) + " arguments, got " +
                               std::to_string(args.size()));
        }
        return apply(std::move(f), std::move(args));
      }
      default:
        throw ParseError(t.pos, "expected a term");
    }
  }

  FnPtr fn_expr() {
    const Token& t = lex_.peek();
    if (t.kind == TokKind::Symbol) {
      Token tok = lex_.take();
      if (auto bt = base_tag_of(tok.text)) return base_fn(*bt);
      if (FnPtr f = lookup(tok.text)) return f;
      throw ParseError(tok.pos, "unknown function '" + tok.text + "'");
    }
    if (t.kind == TokKind::LParen) {
      Token open = lex_.take();
      FnPtr f = fn_head(open.pos);
      expect(TokKind::RParen, "')'");
      return f;
    }
    throw ParseError(t.pos, "expected a function expression");
  }

  FormulaPtr formula() {
    const Token& t = lex_.peek();
    if (t.kind != TokKind::LParen) throw ParseError(t.pos, "expected '('");
    Token open = lex_.take();
    Token head = expect(TokKind::Symbol, "connective");
    FormulaPtr out;
    if (head.text == "=") {
      TermPtr a = term();
      TermPtr b = term();
      out = f_eq(std::move(a), std::move(b));
    } else if (head.text == "not") {
      out = f_not(formula());
    } else if (head.text == "and" || head.text == "or" || head.text == "imp" ||
               head.text == "iff") {
      FormulaPtr a = formula();
      FormulaPtr b = formula();
      if (head.text == "and") out = f_and(a, b);
      else if (head.text == "or") out = f_or(a, b);
      else if (head.text == "imp") out = f_imp(a, b);
      else out = f_iff(a, b);
    } else {
      throw ParseError(head.pos, "unknown connective '" + head.text + "'");
    }
    (void)open;
    expect(TokKind::RParen, "')'");
    return out;
  }

  void finish() {
    if (lex_.peek().kind != TokKind::End) {
      throw ParseError(lex_.peek().pos, "trailing input");
    }
  }

 private:
  FnPtr lookup(const std::string& name) const {
    if (names_ == nullptr) return nullptr;
    auto it = names_->find(name);
    return it == names_->end() ? nullptr : it->second;
  }

  Token expect(TokKind k, const std::string& what) {
    if (lex_.peek().kind != k) {
      throw ParseError(lex_.peek().pos, "expected " + what);
    }
    return lex_.take();
  }

  // Parses the head position of a parenthesized form: either a plain
  // function expression followed by arguments (handled by caller), or one of
  // the binder forms lam/lcrn/rcrn/trn, whose sub-structure is consumed here.
  FnPtr fn_head(std::size_t open_pos) {
    const Token& t = lex_.peek();
    if (t.kind == TokKind::LParen) {
      // Nested function expression as head, e.g. ((lam (x) x) "0").
      Token open = lex_.take();
      FnPtr f = binder_or_fn(open.pos);
      return f;
    }
    if (t.kind != TokKind::Symbol) {
      throw ParseError(open_pos, "expected a function in head position");
    }
    Token head = lex_.take();
    if (head.text == "lam" || head.text == "lcrn" || head.text == "rcrn" ||
        head.text == "trn") {
      return binder_body(head);
    }
    if (auto bt = base_tag_of(head.text)) return base_fn(*bt);
    if (FnPtr f = lookup(head.text)) return f;
    throw ParseError(head.pos, "unknown function '" + head.text + "'");
  }

  // After consuming '(', parse the full binder (or plain fn) up to its ')'.
  FnPtr binder_or_fn(std::size_t open_pos) {
    Token head = expect(TokKind::Symbol, "function form");
    FnPtr f;
    if (head.text == "lam" || head.text == "lcrn" || head.text == "rcrn" ||
        head.text == "trn") {
      f = binder_body(head);
    } else if (auto bt = base_tag_of(head.text)) {
      f = base_fn(*bt);
    } else if ((f = lookup(head.text)) == nullptr) {
      throw ParseError(open_pos, "unknown function '" + head.text + "'");
    }
    expect(TokKind::RParen, "')'");
    return f;
  }

  // head token already consumed; parses the rest of the binder form (without
  // the closing paren of the enclosing application).
  FnPtr binder_body(const Token& head) {
    if (head.text == "lam") {
      Token open = expect(TokKind::LParen, "parameter list");
      (void)open;
      std::vector<std::string> params;
      while (lex_.peek().kind == TokKind::Symbol) {
        params.push_back(lex_.take().text);
      }
      expect(TokKind::RParen, "')' after parameters");
      TermPtr body = term();
      FnPtr f = lambda_fn(std::move(params), std::move(body));
      if (auto v = wf_check(f)) throw ParseError(head.pos, *v);
      return f;
    }
    if (head.text == "lcrn" || head.text == "rcrn") {
      FnPtr h = fn_expr();
      FnPtr f = head.text == "lcrn" ? lcrn_fn(std::move(h))
                                    : rcrn_fn(std::move(h));
      if (auto v = wf_check(f)) throw ParseError(head.pos, *v);
      return f;
    }
    // trn
    FnPtr g = fn_expr();
    FnPtr h = fn_expr();
    FnPtr hl = fn_expr();
    FnPtr hr = fn_expr();
    FnPtr f = trn_fn(std::move(g), std::move(h), std::move(hl), std::move(hr));
    if (auto v = wf_check(f)) throw ParseError(head.pos, *v);
    return f;
  }

  Lexer lex_;
  const NameEnv* names_;
};

}  // namespace

TermPtr parse_term(const std::string& text, const NameEnv* names) {
  Parser p(text, names);
  TermPtr t = p.term();
  p.finish();
  return t;
}

FormulaPtr parse_formula(const std::string& text, const NameEnv* names) {
  Parser p(text, names);
  FormulaPtr f = p.formula();
  p.finish();
  return f;
}

FnPtr parse_fn(const std::string& text, const NameEnv* names) {
  Parser p(text, names);
  FnPtr f = p.fn_expr();
  p.finish();
  return f;
}

// --- printing ---------------------------------------------------------------

std::string print_fn(const FnPtr& f, bool expand_names) {
  if (!expand_names && !f->name.empty()) return f->name;
  switch (f->kind) {
    case FnKind::Base:
      return base_name(f->tag);
    case FnKind::Lambda: {
      std::ostringstream os;
      os << "(lam (";
      for (std::size_t i = 0; i < f->params.size(); ++i) {
        if (i) os << ' ';
        os << f->params[i];
      }
      os << ") " << print_term(f->body) << ")";
      return os.str();
    }
    case FnKind::LCrn:
      return "(lcrn " + print_fn(f->h, expand_names) + ")";
    case FnKind::RCrn:
      return "(rcrn " + print_fn(f->h, expand_names) + ")";
    case FnKind::Trn:
      return "(trn " + print_fn(f->g, expand_names) + " " +
             print_fn(f->h, expand_names) + " " +
             print_fn(f->hl, expand_names) + " " +
             print_fn(f->hr, expand_names) + ")";
  }
  return "?";
}

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
      return t->var;
    case TermKind::Lit:
      return "\"" + t->lit + "\"";
    case TermKind::Apply: {
      if (t->args.empty() && t->fn->kind == FnKind::Base) {
        return base_name(t->fn->tag);
      }
      std::ostringstream os;
      os << '(' << print_fn(t->fn);
      for (const auto& a : t->args) os << ' ' << print_term(a);
      os << ')';
      return os.str();
    }
  }
  return "?";
}

std::string print_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return "(= " + print_term(f->t) + " " + print_term(f->u) + ")";
    case FormulaKind::Not:
      return "(not " + print_formula(f->a) + ")";
    case FormulaKind::And:
      return "(and " + print_formula(f->a) + " " + print_formula(f->b) + ")";
    case FormulaKind::Or:
      return "(or " + print_formula(f->a) + " " + print_formula(f->b) + ")";
    case FormulaKind::Imp:
      return "(imp " + print_formula(f->a) + " " + print_formula(f->b) + ")";
    case FormulaKind::Iff:
      return "(iff " + print_formula(f->a) + " " + print_formula(f->b) + ")";
  }
  return "?";
}

// --- definition files -------------------------------------------------------

void parse_defs(const std::string& text, NameEnv& env,
                std::vector<std::string>* order) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (line.compare(first, 4, "def ") != 0) {
      throw ParseError(lineno, "definition line must start with 'def'");
    }
    std::size_t eq = line.find('=', first);
    if (eq == std::string::npos) {
      throw ParseError(lineno, "missing '=' in definition");
    }
    std::string name = line.substr(first + 4, eq - first - 4);
    // trim
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) throw ParseError(lineno, "empty definition name");
    FnPtr f = parse_fn(line.substr(eq + 1), &env);
    auto named = std::make_shared<FunctionSymbol>(*f);
    named->name = name;
    env[name] = named;
    if (order != nullptr) order->push_back(name);
  }
}

}  // namespace t1kit
