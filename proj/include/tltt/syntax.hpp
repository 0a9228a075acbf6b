// Core term language: de Bruijn syntax for both levels of the theory,
// substitution calculus, and sort (universe-flavor) bookkeeping.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tltt {

enum class SortKind : uint8_t { Fib, Exo };

// Universe classification of a well-formed type. Levels run 0..2; there is
// no level cumulativity, only the kind ordering Fib <= Exo at equal level.
struct Sort {
  SortKind kind = SortKind::Fib;
  int level = 0;

  bool operator==(const Sort&) const = default;
};

constexpr int kMaxLevel = 2;

inline bool subsort(const Sort& a, const Sort& b) {
  if (a.level != b.level) return false;
  return a.kind == b.kind || (a.kind == SortKind::Fib && b.kind == SortKind::Exo);
}

enum class TermKind : uint8_t {
  Var,    // de Bruijn index
  Univ,   // universe, carries a Sort
  Global, // reference to a checked top-level definition/postulate
  Axiom,  // registry axiom constant (opaque, no reduction)
  Annot,  // (t : T)

  Pi, PiE, Lam, App,
  Sigma, SigmaE, Pair, PairE, Fst, Snd,
  Unit, UnitE, Star, StarE, UnitElim, UnitElimE,
  Empty, EmptyE, EmptyElim, EmptyElimE,
  Nat, NatE, Zero, ZeroE, Suc, SucE, NatElim, NatElimE,
  Sum, SumE, Inl, InlE, Inr, InrE, SumElim, SumElimE,
  Id, EqE, Refl, ReflE, J, JE,
  List, ListE, Nil, NilE, Cons, ConsE, ListElim, ListElimE,
  Tree, TreeE, Leaf, LeafE, Node, NodeE, TreeElim, TreeElimE,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term node. `num` is the variable index (Var) or universe level
// (Univ); `name` is the constant name (Global/Axiom) or a binder hint
// (Pi/Sigma/Lam families). Child slots and their binder depths are fixed
// per kind, see child_binder_depth.
struct Term {
  TermKind kind;
  int num = 0;
  SortKind usort = SortKind::Fib;
  std::string name;
  std::vector<TermPtr> kids;
};

// Children lying under one extra binder:
//   Pi/PiE/Sigma/SigmaE: kid 1 (codomain), Lam: kid 0 (body).
// Eliminator motives and branches are ordinary function-valued terms, not
// binder children.
inline int child_binder_depth(TermKind k, size_t child) {
  switch (k) {
    case TermKind::Pi:
    case TermKind::PiE:
    case TermKind::Sigma:
    case TermKind::SigmaE:
      return child == 1 ? 1 : 0;
    case TermKind::Lam:
      return child == 0 ? 1 : 0;
    default:
      return 0;
  }
}

bool is_exo_flavor(TermKind k);

// Structural alpha-equality (de Bruijn makes this plain equality).
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Standard de Bruijn shift: adds `by` to every free index >= cutoff.
// Shifting by a negative amount below a free index is an internal error.
TermPtr shift(const TermPtr& t, int by, int cutoff = 0);

// Capture-avoiding substitution of `with` for index `at` (free indices
// above `at` are decremented).
TermPtr subst(const TermPtr& t, int at, const TermPtr& with);

// Context entry: binder hint, type as a term, and that type's sort.
struct CtxEntry {
  std::string hint;
  TermPtr type;
  Sort sort;
};

// Telescope; index 0 refers to the last entry.
using Context = std::vector<CtxEntry>;

inline const CtxEntry& ctx_lookup(const Context& ctx, int ix) {
  return ctx.at(ctx.size() - 1 - static_cast<size_t>(ix));
}

std::string to_string(const Sort& s);

// Construction helpers used by the kernel, tests, and the axiom table.
namespace mk {

TermPtr var(int ix);
TermPtr univ(SortKind k, int level);
TermPtr global(const std::string& name);
TermPtr axiom(const std::string& name);
TermPtr annot(TermPtr t, TermPtr ty);

TermPtr node(TermKind k, std::vector<TermPtr> kids, std::string name = "");

TermPtr pi(std::string hint, TermPtr dom, TermPtr cod);
TermPtr pie(std::string hint, TermPtr dom, TermPtr cod);
TermPtr arrow(TermPtr dom, TermPtr cod);   // non-dependent Pi
TermPtr arrowe(TermPtr dom, TermPtr cod);  // non-dependent PiE
TermPtr lam(std::string hint, TermPtr body);
TermPtr app(TermPtr f, TermPtr a);
TermPtr apps(TermPtr f, std::initializer_list<TermPtr> args);
TermPtr sigma(std::string hint, TermPtr dom, TermPtr cod);
TermPtr sigmae(std::string hint, TermPtr dom, TermPtr cod);

inline TermPtr u(int level) { return univ(SortKind::Fib, level); }
inline TermPtr ue(int level) { return univ(SortKind::Exo, level); }

}  // namespace mk

}  // namespace tltt
