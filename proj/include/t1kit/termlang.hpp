#pragma once
// AST, ranks, well-formedness, substitution, parsing and printing for the
// term language and its quantifier-free formulas.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "t1kit/bitstr.hpp"

namespace t1kit {

struct FunctionSymbol;
struct Term;
struct T1Formula;
using FnPtr = std::shared_ptr<const FunctionSymbol>;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const T1Formula>;

enum class FnKind { Base, Lambda, LCrn, RCrn, Trn };

struct FunctionSymbol {
  FnKind kind = FnKind::Base;
  BaseTag tag = BaseTag::Eps;        // Base
  std::vector<std::string> params;   // Lambda
  TermPtr body;                      // Lambda (closed over params)
  FnPtr h;                           // LCrn / RCrn / Trn step
  FnPtr g, hl, hr;                   // Trn
  std::string name;                  // optional registered name (printing)
};

enum class TermKind { Var, Lit, Apply };

struct Term {
  TermKind kind;
  std::string var;            // Var
  Bits lit;                   // Lit
  FnPtr fn;                   // Apply
  std::vector<TermPtr> args;  // Apply
};

enum class FormulaKind { Eq, Not, And, Or, Imp, Iff };

struct T1Formula {
  FormulaKind kind;
  TermPtr t, u;       // Eq
  FormulaPtr a, b;    // connectives (Not uses a only)
};

// --- constructors -----------------------------------------------------------
FnPtr base_fn(BaseTag tag);  // canonical singletons
FnPtr lambda_fn(std::vector<std::string> params, TermPtr body,
                std::string name = "");
FnPtr lcrn_fn(FnPtr h, std::string name = "");
FnPtr rcrn_fn(FnPtr h, std::string name = "");
FnPtr trn_fn(FnPtr g, FnPtr h, FnPtr hl, FnPtr hr, std::string name = "");

TermPtr var(std::string name);
TermPtr lit(Bits value);
TermPtr apply(FnPtr fn, std::vector<TermPtr> args);

FormulaPtr f_eq(TermPtr t, TermPtr u);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);

// --- structural queries -----------------------------------------------------
int fn_arity(const FnPtr& f);
int fn_rank(const FnPtr& f);
int term_rank(const TermPtr& t);

// ok -> nullopt; otherwise a description of the first violated condition.
std::optional<std::string> wf_check(const FnPtr& f);
std::optional<std::string> wf_check_term(const TermPtr& t);

// Free variables of a term/formula (sorted, deduplicated).
std::vector<std::string> free_vars(const TermPtr& t);
std::vector<std::string> free_vars(const FormulaPtr& f);

bool fn_eq(const FnPtr& a, const FnPtr& b);
bool term_eq(const TermPtr& a, const TermPtr& b);
bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);

// Replace every free occurrence of x; Lambda bodies are closed, so
// substitution never descends into function symbols.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& by);
FormulaPtr substitute(const FormulaPtr& f, const std::string& x,
                      const TermPtr& by);

// Simultaneous substitution of several variables in one pass.
TermPtr substitute_multi(const TermPtr& t,
                         const std::map<std::string, TermPtr>& by);
FormulaPtr substitute_multi(const FormulaPtr& f,
                            const std::map<std::string, TermPtr>& by);

// --- parsing / printing -----------------------------------------------------
// Name environment for user definitions (NAME -> symbol).
using NameEnv = std::map<std::string, FnPtr>;

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t p, const std::string& what)
      : std::runtime_error(what + " (at offset " + std::to_string(p) + ")"),
        pos(p) {}
};

TermPtr parse_term(const std::string& text, const NameEnv* names = nullptr);
FormulaPtr parse_formula(const std::string& text,
                         const NameEnv* names = nullptr);
// Parses a function expression (base symbol, name, lam/lcrn/rcrn/trn form).
FnPtr parse_fn(const std::string& text, const NameEnv* names = nullptr);

std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);
std::string print_fn(const FnPtr& f, bool expand_names = false);

// Definition files: lines "def NAME = <fn-expression>"; later lines may use
// earlier names.  Blank lines and lines starting with '#' are ignored.
// Definitions are appended to env in file order.
void parse_defs(const std::string& text, NameEnv& env,
                std::vector<std::string>* order = nullptr);

}  // namespace t1kit
