// Concrete syntax for `.2ltt` modules: lexing, parsing, resolution of
// surface names to de Bruijn core terms, and a round-tripping printer.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tltt/kernel.hpp"
#include "tltt/syntax.hpp"

namespace tltt {

struct SExpr;

struct SurfaceError {
  ErrCode code;
  std::string message;
  int line = 0, col = 0;
};

// One parsed declaration: `def`/`postulate` with optional type/body, or an
// axiom-use pragma (`axiom NAME`).
struct SurfaceDecl {
  DeclKind kind = DeclKind::Def;
  std::string name;
  SExpr* type = nullptr;  // owned by the SurfaceModule arena
  SExpr* body = nullptr;
  int line = 0, col = 0;
};

struct SurfaceModule {
  std::vector<SurfaceDecl> decls;
  // Declarations that failed to parse, with their diagnostics; parsing
  // recovers at the next top-level keyword.
  std::vector<SurfaceError> parse_errors;
  std::vector<std::shared_ptr<SExpr>> arena;
};

SurfaceModule parse_module(const std::string& text);

// Resolves one surface declaration against the accepted globals. Throws
// TypeError with ScopeError/ParseError codes.
Declaration resolve_decl(const SurfaceDecl& decl, const GlobalEnv& env);

// Parses and resolves a closed term (no globals, keywords only); used for
// kernel-internal type schemas and for tests.
TermPtr parse_closed_term(const std::string& src);

// Parses and resolves a term against an environment (tests, tooling).
TermPtr parse_term_in(const std::string& src, const GlobalEnv& env);

// Core-term printer; parse(print(t)) resolves to an alpha-equal term.
std::string print_term(const TermPtr& t);
std::string print_term_in_ctx(const TermPtr& t, const std::vector<std::string>& names);

// Full pipeline for one module: parse, then per declaration resolve and
// kernel-check, recording every outcome. Accepted declarations extend `env`.
ModuleReport check_source(const std::string& file, const std::string& text, GlobalEnv& env,
                          const AxiomRegistry& axioms);

}  // namespace tltt
