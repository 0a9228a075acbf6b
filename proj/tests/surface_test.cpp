#include <doctest.h>

#include <random>

#include "tltt/kernel.hpp"
#include "tltt/surface.hpp"

using namespace tltt;

TEST_CASE("parse basics") {
  SurfaceModule m = parse_module("def id : (A : U0) -> A -> A := \\A x. x");
  REQUIRE(m.parse_errors.empty());
  REQUIRE(m.decls.size() == 1);
  CHECK(m.decls[0].kind == DeclKind::Def);
  CHECK(m.decls[0].name == "id");

  SurfaceModule p = parse_module(
      "postulate UIPc : (A : Ue0) ->e (a b : A) ->e (p q : EqE A a b) ->e EqE (EqE A a b) p q");
  REQUIRE(p.parse_errors.empty());
  REQUIRE(p.decls.size() == 1);
  CHECK(p.decls[0].kind == DeclKind::Postulate);
}

TEST_CASE("parse error carries position") {
  SurfaceModule m = parse_module("def bad := (");
  REQUIRE(m.parse_errors.size() == 1);
  CHECK(m.parse_errors[0].code == ErrCode::ParseError);
  CHECK(m.parse_errors[0].line == 1);
  CHECK(m.parse_errors[0].col >= 12);
}

TEST_CASE("resolution: globals, scope errors, shadowing") {
  GlobalEnv env;
  AxiomRegistry ax;
  ModuleReport r1 = check_source("a.2ltt", "def one : Nat := suc zero\ndef two : Nat := suc one",
                                 env, ax);
  CHECK(r1.all_accepted());

  ModuleReport r2 = check_source("b.2ltt", "def x : Nat := foo", env, ax);
  CHECK(!r2.all_accepted());
  CHECK(r2.decls[0].error == ErrCode::ScopeError);
  CHECK(r2.decls[0].message.find("foo") != std::string::npos);

  // \x. \x. x resolves to the inner binder.
  TermPtr t = parse_term_in("\\x. \\x. x", env);
  CHECK(alpha_eq(t, mk::lam("x", mk::lam("x", mk::var(0)))));
}

TEST_CASE("printer round-trips representative terms") {
  GlobalEnv env;
  std::vector<std::string> sources = {
      "\\x. x",
      "(A : U0) -> (B : (_ : A) -> U0) -> (a : A) -> B a",
      "(_ : NatE) *e NatE",
      "natelime (\\m. Nat) zero (\\k r. suc r) (suce zeroe)",
      "(x : Nat) * ((_ : Unit) -> Nat)",
      "J (\\a b p. Nat) (\\a. zero) zero zero refl",
      "\\f. \\x. f (f x)",
      "EqE ((a : NatE) ->e NatE) (\\a. a) (\\a. suce a)",
      "sumelim (\\s. Nat) (\\a. a) (\\b. zero) (inl zero : Sum Nat Nat)",
      "treeelime (\\t. NatE) (\\x. zeroe) (\\l n r a b. suce a) (nodee (leafe stare) stare (leafe stare))",
  };
  for (const auto& s : sources) {
    CAPTURE(s);
    TermPtr t = parse_term_in(s, env);
    std::string printed = print_term(t);
    CAPTURE(printed);
    TermPtr back = parse_term_in(printed, env);
    CHECK(alpha_eq(t, back));
  }
}

namespace {

// Tiny generator of random well-formed closed core terms (untyped but
// well-scoped), used to stress the printer round-trip.
struct Gen {
  std::mt19937 rng;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr go(int depth, int scope) {
    if (depth <= 0) {
      switch (pick(scope > 0 ? 5 : 4)) {
        case 0: return mk::node(TermKind::Zero, {});
        case 1: return mk::node(TermKind::Nat, {});
        case 2: return mk::u(pick(2));
        case 3: return mk::node(TermKind::StarE, {});
        default: return mk::var(pick(scope));
      }
    }
    switch (pick(8)) {
      case 0: return mk::lam("v", go(depth - 1, scope + 1));
      case 1: return mk::app(go(depth - 1, scope), go(depth - 1, scope));
      case 2: return mk::pi("v", go(depth - 1, scope), go(depth - 1, scope + 1));
      case 3: return mk::sigmae("v", go(depth - 1, scope), go(depth - 1, scope + 1));
      case 4: return mk::node(TermKind::Suc, {go(depth - 1, scope)});
      case 5: return mk::node(TermKind::Pair, {go(depth - 1, scope), go(depth - 1, scope)});
      case 6:
        return mk::node(TermKind::NatElim, {go(depth - 1, scope), go(depth - 1, scope),
                                            go(depth - 1, scope), go(depth - 1, scope)});
      default:
        return mk::node(TermKind::EqE,
                        {go(depth - 1, scope), go(depth - 1, scope), go(depth - 1, scope)});
    }
  }
};

}  // namespace

TEST_CASE("printer round-trips random well-scoped terms") {
  GlobalEnv env;
  Gen g{std::mt19937{12345}};
  for (int i = 0; i < 300; ++i) {
    TermPtr t = g.go(4, 0);
    std::string s = print_term(t);
    CAPTURE(s);
    TermPtr back = parse_term_in(s, env);
    CHECK(alpha_eq(t, back));
  }
}

TEST_CASE("axiom pragma handling") {
  GlobalEnv env;
  AxiomRegistry ax;
  ModuleReport r = check_source("c.2ltt", "axiom UIP\naxiom bogus_axiom", env, ax);
  REQUIRE(r.decls.size() == 2);
  CHECK(r.decls[0].accepted);
  CHECK(!r.decls[1].accepted);
  CHECK(r.decls[1].error == ErrCode::UnknownAxiom);

  // A recognized but disabled axiom is reported as UnknownAxiom as well.
  ModuleReport r2 = check_source("d.2ltt", "axiom inv_nat", env, ax);
  CHECK(!r2.decls[0].accepted);
  AxiomRegistry ax2;
  ax2.enable("inv_nat");
  ModuleReport r3 = check_source("e.2ltt", "axiom inv_nat\ndef f : (n : Nat) ->e NatE := inv_nat",
                                 env, ax2);
  CHECK(r3.all_accepted());
}
