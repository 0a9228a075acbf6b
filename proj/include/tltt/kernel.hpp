// Bidirectional elaborator for the two-level object theory: typing,
// weak-head normalization, type-directed conversion, the eliminator
// discipline, the axiom-constant registry, and whole-module checking.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/syntax.hpp"

namespace tltt {

enum class ErrCode : uint8_t {
  ParseError,
  ScopeError,
  TypeMismatch,
  EliminatorSortError,
  UniverseError,
  UnknownAxiom,
};

const char* to_string(ErrCode c);

struct TypeError : std::runtime_error {
  ErrCode code;
  TypeError(ErrCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Names of the recognized axiom constants. Anything else is UnknownAxiom.
// UA, funext, funext_e, UIP and eqtoid are on by default; the inverse
// axioms and cofibrant_exonat must be requested explicitly.
class AxiomRegistry {
 public:
  AxiomRegistry();

  // Throws UnknownAxiom for names outside the fixed table.
  void enable(const std::string& name);
  bool enabled(const std::string& name) const;

  static const std::vector<std::string>& known();

 private:
  std::set<std::string> enabled_;
};

enum class DeclKind : uint8_t { Def, Postulate, AxiomUse };

// A core declaration as produced by name resolution.
struct Declaration {
  DeclKind kind = DeclKind::Def;
  std::string name;
  TermPtr type;  // null for an untyped def (type inferred from body)
  TermPtr body;  // null for postulates
  int line = 0, col = 0;
};

struct DeclOutcome {
  std::string name;
  bool accepted = false;
  std::optional<ErrCode> error;
  std::string message;
  int line = 0, col = 0;
};

struct ModuleReport {
  std::string file;
  std::vector<DeclOutcome> decls;
  long long elapsed_ms = 0;

  bool all_accepted() const {
    for (const auto& d : decls)
      if (!d.accepted) return false;
    return true;
  }
};

struct GlobalDef {
  std::string name;
  TermPtr type;
  TermPtr body;  // null for postulates and axiom constants
};

// Checked top-level constants. Frozen between declarations; the kernel
// only appends after a declaration has been fully accepted.
class GlobalEnv {
 public:
  const GlobalDef* find(const std::string& name) const;
  void add(GlobalDef def);
  size_t size() const { return defs_.size(); }
  void truncate(size_t n);

 private:
  std::vector<GlobalDef> defs_;
  std::map<std::string, size_t> index_;
};

class Kernel {
 public:
  Kernel(GlobalEnv& env, const AxiomRegistry& axioms) : env_(env), axioms_(axioms) {}

  // Type synthesis for inferable terms; throws TypeError.
  TermPtr infer(const Context& ctx, const TermPtr& t);

  // Checks t against a well-formed type, up to conversion and the
  // directional subsorting Fib <= Exo on universes.
  void check(const Context& ctx, const TermPtr& t, const TermPtr& ty);

  // Universe classification of a well-formed type expression.
  Sort sort_of(const Context& ctx, const TermPtr& ty);

  // The two-level discipline: rejects exactly Fib target with Exo motive.
  static void check_eliminator(const Sort& target, const Sort& motive);
  static bool eliminator_allowed(const Sort& target, const Sort& motive);

  // Weak-head normalization; beta for every eliminator on canonical
  // scrutinees, definition unfolding for globals, no reduction for axioms.
  TermPtr whnf(const TermPtr& t);

  // Type-directed definitional equality: beta everywhere, eta for Pi and
  // Sigma at both levels and for Unit/UnitE.
  bool conv(const Context& ctx, const TermPtr& a, const TermPtr& b, const TermPtr& ty);

  // Conversion of two type expressions.
  bool conv_type(const Context& ctx, const TermPtr& a, const TermPtr& b);

  // Checks that `ty` is a well-formed type and returns its sort.
  Sort check_is_type(const Context& ctx, const TermPtr& ty);

  const GlobalEnv& env() const { return env_; }
  const AxiomRegistry& axioms() const { return axioms_; }

  // Type of a registry axiom constant at the given universe level, or null
  // if the constant does not exist at that level.
  static TermPtr axiom_constant_type(const std::string& name, int level);
  // Resolves a surface identifier (e.g. "UA0", "inv_nat") to an axiom
  // constant name if it denotes one.
  static bool is_axiom_constant_name(const std::string& ident);

 private:
  TermPtr infer_eliminator(const Context& ctx, const TermPtr& t);
  bool conv_whnf(const Context& ctx, TermPtr a, TermPtr b, const TermPtr& ty);
  TermPtr neutral_spine_type(const Context& ctx, const TermPtr& neutral);
  bool conv_neutral(const Context& ctx, const TermPtr& a, const TermPtr& b, TermPtr* ty_out);
  bool subtype(const Context& ctx, const TermPtr& a, const TermPtr& b);

  GlobalEnv& env_;
  const AxiomRegistry& axioms_;
};

// Processes declarations in order; a rejected declaration is recorded and
// skipped, it does not abort the module or bind its name.
ModuleReport check_module(const std::string& file, const std::vector<Declaration>& decls,
                          GlobalEnv& env, const AxiomRegistry& axioms);

}  // namespace tltt
