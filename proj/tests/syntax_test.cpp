#include <doctest.h>

#include "tltt/syntax.hpp"

using namespace tltt;

TEST_CASE("shift basics") {
  // shift(var 0, 1, 0) = var 1
  CHECK(alpha_eq(shift(mk::var(0), 1, 0), mk::var(1)));
  // bound variable untouched: shift(\. var 0, 5, 0) = \. var 0
  TermPtr id = mk::lam("x", mk::var(0));
  CHECK(alpha_eq(shift(id, 5, 0), id));
  // cutoff semantics: shift(app(var 0, var 2), 1, 1) = app(var 0, var 3)
  TermPtr t = mk::app(mk::var(0), mk::var(2));
  CHECK(alpha_eq(shift(t, 1, 1), mk::app(mk::var(0), mk::var(3))));
  // identity when by = 0
  CHECK(shift(t, 0, 0) == t);
}

TEST_CASE("subst basics") {
  TermPtr zero = mk::node(TermKind::Zero, {});
  CHECK(alpha_eq(subst(mk::var(0), 0, zero), zero));
  // under a binder the replacement is shifted: subst(\. var 1, 0, zero) = \. zero
  CHECK(alpha_eq(subst(mk::lam("x", mk::var(1)), 0, zero), mk::lam("x", zero)));
  // Pi codomain: subst(Pi(Nat, var 1), 0, Nat)
  TermPtr nat = mk::node(TermKind::Nat, {});
  TermPtr pi = mk::pi("x", nat, mk::var(1));
  CHECK(alpha_eq(subst(pi, 0, nat), mk::pi("x", nat, shift(nat, 1))));
}

TEST_CASE("substitution cancels shift") {
  TermPtr t = mk::app(mk::lam("x", mk::app(mk::var(0), mk::var(1))), mk::var(0));
  TermPtr u = mk::node(TermKind::Zero, {});
  CHECK(alpha_eq(subst(shift(t, 1, 0), 0, u), t));
}

TEST_CASE("flavor tags are part of syntactic identity") {
  CHECK(!alpha_eq(mk::node(TermKind::Nat, {}), mk::node(TermKind::NatE, {})));
  CHECK(is_exo_flavor(TermKind::NatE));
  CHECK(!is_exo_flavor(TermKind::Nat));
}

TEST_CASE("subsort relation") {
  CHECK(subsort({SortKind::Fib, 0}, {SortKind::Exo, 0}));
  CHECK(!subsort({SortKind::Exo, 0}, {SortKind::Fib, 0}));
  CHECK(!subsort({SortKind::Fib, 0}, {SortKind::Fib, 1}));  // no level cumulativity
  CHECK(subsort({SortKind::Exo, 2}, {SortKind::Exo, 2}));
}
