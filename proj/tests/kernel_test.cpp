#include <doctest.h>

#include "tltt/kernel.hpp"
#include "tltt/surface.hpp"

using namespace tltt;

namespace {

struct Fixture {
  GlobalEnv env;
  AxiomRegistry axioms;
  Kernel kernel{env, axioms};

  TermPtr t(const std::string& src) { return parse_term_in(src, env); }
};

}  // namespace

TEST_CASE("infer on basic formers") {
  Fixture f;
  CHECK(alpha_eq(f.kernel.infer({}, f.t("Nat")), mk::u(0)));
  CHECK(alpha_eq(f.kernel.infer({}, f.t("NatE")), mk::ue(0)));
  CHECK(alpha_eq(f.kernel.infer({}, f.t("U0")), mk::u(1)));
  // app(annot(\x. x, Nat -> Nat), zero) : Nat
  TermPtr app = f.t("((\\x. x) : Nat -> Nat) zero");
  CHECK(alpha_eq(f.kernel.infer({}, app), f.t("Nat")));
}

TEST_CASE("universe ceiling") {
  Fixture f;
  CHECK(alpha_eq(f.kernel.infer({}, f.t("U1")), mk::u(2)));
  CHECK_THROWS_AS(f.kernel.infer({}, f.t("U2")), TypeError);
  try {
    f.kernel.infer({}, f.t("U2"));
  } catch (const TypeError& e) {
    CHECK(e.code == ErrCode::UniverseError);
  }
}

TEST_CASE("sort_of distinguishes flavors syntactically") {
  Fixture f;
  CHECK(f.kernel.sort_of({}, f.t("Nat")) == Sort{SortKind::Fib, 0});
  CHECK(f.kernel.sort_of({}, f.t("NatE")) == Sort{SortKind::Exo, 0});
  // SigmaE over fibrant components is still Exo: syntactic, not up-to-iso.
  CHECK(f.kernel.sort_of({}, f.t("(_ : Nat) *e Nat")) == Sort{SortKind::Exo, 0});
  CHECK(f.kernel.sort_of({}, f.t("(_ : Nat) * Nat")) == Sort{SortKind::Fib, 0});
}

TEST_CASE("check: subsorting accepts Fib where Exo expected, not reverse") {
  Fixture f;
  CHECK_NOTHROW(f.kernel.check({}, f.t("Nat"), mk::ue(0)));
  CHECK_THROWS_AS(f.kernel.check({}, f.t("NatE"), mk::u(0)), TypeError);
  // star : Unit does not check against UnitE; the iso is a theorem, not a
  // conversion.
  CHECK_THROWS_AS(f.kernel.check({}, f.t("star"), f.t("UnitE")), TypeError);
  CHECK_NOTHROW(f.kernel.check({}, f.t("stare"), f.t("UnitE")));
  CHECK_NOTHROW(f.kernel.check({}, f.t("\\x. x"), f.t("(_ : Nat) -> Nat")));
}

TEST_CASE("eliminator discipline: the 36-pair matrix") {
  int checked = 0;
  for (int tk = 0; tk < 2; ++tk)
    for (int tl = 0; tl <= 2; ++tl)
      for (int mk_ = 0; mk_ < 2; ++mk_)
        for (int ml = 0; ml <= 2; ++ml) {
          Sort target{tk == 0 ? SortKind::Fib : SortKind::Exo, tl};
          Sort motive{mk_ == 0 ? SortKind::Fib : SortKind::Exo, ml};
          bool expect = !(target.kind == SortKind::Fib && motive.kind == SortKind::Exo);
          CHECK(Kernel::eliminator_allowed(target, motive) == expect);
          ++checked;
        }
  CHECK(checked == 36);
}

TEST_CASE("figure-2 elimination is rejected end to end") {
  Fixture f;
  // Define ntoe : Nat -> NatE by recursion: lifts Nat into the exo level.
  TermPtr bad = f.t("(\\n. natelim (\\m. NatE) zeroe (\\k r. suce r) n) : (n : Nat) ->e NatE");
  try {
    f.kernel.infer({}, bad);
    CHECK(false);
  } catch (const TypeError& e) {
    CHECK(e.code == ErrCode::EliminatorSortError);
  }
  // The exo-level recursion into a fibrant motive is fine.
  TermPtr good = f.t("(\\n. natelime (\\m. Nat) zero (\\k r. suc r) n) : (n : NatE) ->e Nat");
  CHECK_NOTHROW(f.kernel.infer({}, good));
  // Levels do not matter for the restriction, only kinds.
  // Motive lands in U1 (it returns elements of U0): Fib target, Fib level-1
  // motive, allowed.
  TermPtr lvl = f.t("(\\n. natelim (\\m. U0) Nat (\\k r. r) n) : (n : Nat) -> U0");
  CHECK_NOTHROW(f.kernel.infer({}, lvl));
}

TEST_CASE("whnf: recursor and J beta") {
  Fixture f;
  // natelim on suc zero steps to the successor branch.
  TermPtr t = f.t("natelim (\\m. Nat) zero (\\k r. suc r) (suc zero)");
  CHECK(alpha_eq(f.kernel.whnf(t), f.t("suc (natelim (\\m. Nat) zero (\\k r. suc r) zero)")));
  TermPtr j = f.t("J (\\a b p. Nat) (\\a. zero) zero zero refl");
  CHECK(alpha_eq(f.kernel.whnf(j), f.t("zero")));
  CHECK(alpha_eq(f.kernel.whnf(f.t("((\\x. x) : Nat -> Nat) zero")), f.t("zero")));
}

TEST_CASE("conv: eta for Pi, Sigma, Unit; flavors distinct") {
  Fixture f;
  Context ctx;
  ctx.push_back({"f", f.t("(_ : Nat) -> Nat"), Sort{SortKind::Fib, 0}});
  // f ~ \x. f x
  TermPtr eta = mk::lam("x", mk::app(mk::var(1), mk::var(0)));
  CHECK(f.kernel.conv(ctx, mk::var(0), eta, ctx[0].type));

  Context ctx2;
  ctx2.push_back({"p", f.t("(_ : Nat) * Nat"), Sort{SortKind::Fib, 0}});
  TermPtr pe = mk::node(TermKind::Pair, {mk::node(TermKind::Fst, {mk::var(0)}),
                                         mk::node(TermKind::Snd, {mk::var(0)})});
  CHECK(f.kernel.conv(ctx2, mk::var(0), pe, ctx2[0].type));

  Context ctx3;
  ctx3.push_back({"u", f.t("Unit"), Sort{SortKind::Fib, 0}});
  CHECK(f.kernel.conv(ctx3, mk::var(0), f.t("star"), f.t("Unit")));

  CHECK(!f.kernel.conv({}, f.t("Nat"), f.t("NatE"), mk::ue(0)));
}

TEST_CASE("axiom registry") {
  AxiomRegistry reg;
  CHECK(reg.enabled("UA"));
  CHECK(reg.enabled("funext_e"));
  CHECK(!reg.enabled("inv_nat"));
  CHECK_NOTHROW(reg.enable("inv_nat"));
  CHECK(reg.enabled("inv_nat"));
  CHECK_THROWS_AS(reg.enable("UIP_on_Id"), TypeError);

  Fixture f;
  // eqtoid is available by default and typed at fibrant carriers only.
  CHECK_NOTHROW(f.kernel.infer({}, f.t("eqtoid0")));
  // inv_nat is off by default.
  CHECK_THROWS_AS(f.kernel.infer({}, f.t("inv_nat")), TypeError);
}

TEST_CASE("check_module error recovery and scoping") {
  GlobalEnv env;
  AxiomRegistry axioms;
  std::string src =
      "def idnat : (n : Nat) -> Nat := \\n. n\n"
      "def broken : Nat := star\n"
      "def usesbroken : Nat := broken\n"
      "def ok : Nat := idnat zero\n";
  ModuleReport rep = check_source("m.2ltt", src, env, axioms);
  REQUIRE(rep.decls.size() == 4);
  CHECK(rep.decls[0].accepted);
  CHECK(!rep.decls[1].accepted);
  CHECK(rep.decls[1].error == ErrCode::TypeMismatch);
  CHECK(!rep.decls[2].accepted);
  CHECK(rep.decls[2].error == ErrCode::ScopeError);  // rejected name not bound
  CHECK(rep.decls[3].accepted);
}

TEST_CASE("subject reduction on small well-typed terms") {
  Fixture f;
  std::vector<std::string> samples = {
      "((\\x. x) : Nat -> Nat) zero",
      "natelim (\\m. Nat) zero (\\k r. suc (suc r)) (suc (suc zero))",
      "fst (pair zero star : (_ : Nat) * Unit)",
      "sumelim (\\s. Nat) (\\a. a) (\\b. zero) (inl zero : Sum Nat Unit)",
  };
  for (const auto& s : samples) {
    TermPtr t = f.t(s);
    TermPtr ty = f.kernel.infer({}, t);
    TermPtr n = f.kernel.whnf(t);
    TermPtr ty2 = f.kernel.infer({}, n);
    CHECK(f.kernel.conv_type({}, ty, ty2));
  }
}
