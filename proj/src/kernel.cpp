#include "tltt/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>

#include "tltt/surface.hpp"

namespace tltt {

using mk::app;
using mk::apps;
using mk::var;

const char* to_string(ErrCode c) {
  switch (c) {
    case ErrCode::ParseError: return "ParseError";
    case ErrCode::ScopeError: return "ScopeError";
    case ErrCode::TypeMismatch: return "TypeMismatch";
    case ErrCode::EliminatorSortError: return "EliminatorSortError";
    case ErrCode::UniverseError: return "UniverseError";
    case ErrCode::UnknownAxiom: return "UnknownAxiom";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(ErrCode c, const std::string& msg) { throw TypeError(c, msg); }

std::string show(const TermPtr& t) { return print_term(t); }

}  // namespace

// ---------------------------------------------------------------------------
// AxiomRegistry

const std::vector<std::string>& AxiomRegistry::known() {
  static const std::vector<std::string> k = {
      "UA",        "funext",    "funext_e", "UIP",     "eqtoid",
      "inv_coproduct", "inv_empty", "inv_nat",  "cofibrant_exonat"};
  return k;
}

AxiomRegistry::AxiomRegistry() {
  enabled_ = {"UA", "funext", "funext_e", "UIP", "eqtoid"};
}

void AxiomRegistry::enable(const std::string& name) {
  const auto& k = known();
  if (std::find(k.begin(), k.end(), name) == k.end())
    fail(ErrCode::UnknownAxiom, "unknown axiom '" + name + "'");
  enabled_.insert(name);
}

bool AxiomRegistry::enabled(const std::string& name) const {
  return enabled_.count(name) > 0;
}

// ---------------------------------------------------------------------------
// Axiom constants
//
// Constants are level-instantiated: UA0/UA1, funext0/funext1, funext_e0/
// funext_e1, UIP0/UIP1, eqtoid0/eqtoid1, inv_coproduct0/inv_coproduct1, and
// the level-free inv_empty/inv_nat. cofibrant_exonat introduces no constant;
// corpus files postulate its components locally. None of them reduce.

namespace {

struct AxiomSpec {
  std::string base;
  int level;  // -1 for level-free constants
  std::string type_src;
};

std::string subst_level(std::string src, int lvl) {
  const std::string l = std::to_string(lvl);
  std::string out;
  for (size_t i = 0; i < src.size();) {
    if (src.compare(i, 3, "Ue0") == 0) {
      out += "Ue" + l;
      i += 3;
    } else if (src.compare(i, 2, "U0") == 0) {
      out += "U" + l;
      i += 2;
    } else {
      out += src[i++];
    }
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& axiom_type_sources() {
  // Equivalence is spelled out with contractible fibers, matching the
  // object-language definition the corpus uses.
  static const std::string fib = "((a : A) * Eq B (f a) b)";
  static const std::vector<std::pair<std::string, std::string>> src = {
      {"UA",
       "(A : U0) -> (B : U0) -> "
       "((f : (_ : A) -> B) * ((b : B) -> ((c : " + fib + ") * ((z : " + fib +
           ") -> Eq " + fib + " c z)))) -> Eq U0 A B"},
      {"funext",
       "(A : U0) -> (B : (_ : A) -> U0) -> (f : (a : A) -> B a) -> "
       "(g : (a : A) -> B a) -> ((a : A) -> Eq (B a) (f a) (g a)) -> "
       "Eq ((a : A) -> B a) f g"},
      {"funext_e",
       "(A : Ue0) ->e (B : (_ : A) ->e Ue0) ->e (f : (a : A) ->e B a) ->e "
       "(g : (a : A) ->e B a) ->e ((a : A) ->e EqE (B a) (f a) (g a)) ->e "
       "EqE ((a : A) ->e B a) f g"},
      {"UIP",
       "(A : Ue0) ->e (a : A) ->e (b : A) ->e (p : EqE A a b) ->e "
       "(q : EqE A a b) ->e EqE (EqE A a b) p q"},
      {"eqtoid",
       "(A : U0) ->e (a : A) ->e (b : A) ->e (p : EqE A a b) ->e Eq A a b"},
      {"inv_coproduct", "(A : U0) ->e (C : U0) ->e (s : Sum A C) ->e SumE A C"},
      {"inv_empty", "(z : Empty) ->e EmptyE"},
      {"inv_nat", "(n : Nat) ->e NatE"},
  };
  return src;
}

bool axiom_is_leveled(const std::string& base) {
  return base != "inv_empty" && base != "inv_nat";
}

// Splits an identifier like "funext_e1" into ("funext_e", 1). Returns false
// when the identifier is not an axiom constant.
bool split_axiom_ident(const std::string& ident, std::string* base, int* level) {
  for (const auto& [b, _] : axiom_type_sources()) {
    if (axiom_is_leveled(b)) {
      if (ident.size() == b.size() + 1 && ident.compare(0, b.size(), b) == 0 &&
          ident.back() >= '0' && ident.back() <= '1') {
        *base = b;
        *level = ident.back() - '0';
        return true;
      }
    } else if (ident == b) {
      *base = b;
      *level = -1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool Kernel::is_axiom_constant_name(const std::string& ident) {
  std::string base;
  int level;
  return split_axiom_ident(ident, &base, &level);
}

TermPtr Kernel::axiom_constant_type(const std::string& name, int) {
  static std::map<std::string, TermPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  std::string base;
  int level;
  if (!split_axiom_ident(name, &base, &level)) return nullptr;
  std::string src;
  for (const auto& [b, s] : axiom_type_sources())
    if (b == base) src = s;
  if (level > 0) src = subst_level(src, level);
  TermPtr ty = parse_closed_term(src);
  cache[name] = ty;
  return ty;
}

// ---------------------------------------------------------------------------
// GlobalEnv

const GlobalDef* GlobalEnv::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &defs_[it->second];
}

void GlobalEnv::add(GlobalDef def) {
  index_[def.name] = defs_.size();
  defs_.push_back(std::move(def));
}

void GlobalEnv::truncate(size_t n) {
  while (defs_.size() > n) {
    index_.erase(defs_.back().name);
    defs_.pop_back();
  }
}

// ---------------------------------------------------------------------------
// Eliminator discipline

bool Kernel::eliminator_allowed(const Sort& target, const Sort& motive) {
  return !(target.kind == SortKind::Fib && motive.kind == SortKind::Exo);
}

void Kernel::check_eliminator(const Sort& target, const Sort& motive) {
  if (!eliminator_allowed(target, motive))
    fail(ErrCode::EliminatorSortError,
         "cannot eliminate a fibrant target (" + to_string(target) +
             ") into a non-fibrant motive (" + to_string(motive) + ")");
}

// ---------------------------------------------------------------------------
// Weak-head normalization

namespace {

bool is_global_with_body(const GlobalEnv& env, const TermPtr& t, const GlobalDef** out) {
  if (t->kind != TermKind::Global) return false;
  const GlobalDef* d = env.find(t->name);
  if (!d || !d->body) return false;
  if (out) *out = d;
  return true;
}

TermPtr whnf_impl(const GlobalEnv& env, TermPtr t, bool delta) {
  for (;;) {
    switch (t->kind) {
      case TermKind::Annot:
        t = t->kids[0];
        continue;
      case TermKind::Global: {
        const GlobalDef* d;
        if (delta && is_global_with_body(env, t, &d)) {
          t = d->body;
          continue;
        }
        return t;
      }
      case TermKind::App: {
        TermPtr f = whnf_impl(env, t->kids[0], delta);
        if (f->kind == TermKind::Lam) {
          t = subst(f->kids[0], 0, t->kids[1]);
          continue;
        }
        if (f == t->kids[0]) return t;
        return mk::node(TermKind::App, {f, t->kids[1]});
      }
      case TermKind::Fst:
      case TermKind::Snd: {
        TermPtr p = whnf_impl(env, t->kids[0], delta);
        if (p->kind == TermKind::Pair || p->kind == TermKind::PairE) {
          t = p->kids[t->kind == TermKind::Fst ? 0 : 1];
          continue;
        }
        if (p == t->kids[0]) return t;
        return mk::node(t->kind, {p});
      }
      case TermKind::UnitElim:
      case TermKind::UnitElimE: {
        TermPtr s = whnf_impl(env, t->kids[2], delta);
        if (s->kind == TermKind::Star || s->kind == TermKind::StarE) {
          t = t->kids[1];
          continue;
        }
        if (s == t->kids[2]) return t;
        return mk::node(t->kind, {t->kids[0], t->kids[1], s});
      }
      case TermKind::NatElim:
      case TermKind::NatElimE: {
        TermPtr s = whnf_impl(env, t->kids[3], delta);
        if (s->kind == TermKind::Zero || s->kind == TermKind::ZeroE) {
          t = t->kids[1];
          continue;
        }
        if (s->kind == TermKind::Suc || s->kind == TermKind::SucE) {
          TermPtr rec = mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s->kids[0]});
          t = apps(t->kids[2], {s->kids[0], rec});
          continue;
        }
        if (s == t->kids[3]) return t;
        return mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s});
      }
      case TermKind::SumElim:
      case TermKind::SumElimE: {
        TermPtr s = whnf_impl(env, t->kids[3], delta);
        if (s->kind == TermKind::Inl || s->kind == TermKind::InlE) {
          t = app(t->kids[1], s->kids[0]);
          continue;
        }
        if (s->kind == TermKind::Inr || s->kind == TermKind::InrE) {
          t = app(t->kids[2], s->kids[0]);
          continue;
        }
        if (s == t->kids[3]) return t;
        return mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s});
      }
      case TermKind::J:
      case TermKind::JE: {
        TermPtr p = whnf_impl(env, t->kids[4], delta);
        if (p->kind == TermKind::Refl || p->kind == TermKind::ReflE) {
          t = app(t->kids[1], t->kids[2]);
          continue;
        }
        if (p == t->kids[4]) return t;
        return mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], t->kids[3], p});
      }
      case TermKind::ListElim:
      case TermKind::ListElimE: {
        TermPtr s = whnf_impl(env, t->kids[3], delta);
        if (s->kind == TermKind::Nil || s->kind == TermKind::NilE) {
          t = t->kids[1];
          continue;
        }
        if (s->kind == TermKind::Cons || s->kind == TermKind::ConsE) {
          TermPtr rec = mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s->kids[1]});
          t = apps(t->kids[2], {s->kids[0], s->kids[1], rec});
          continue;
        }
        if (s == t->kids[3]) return t;
        return mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s});
      }
      case TermKind::TreeElim:
      case TermKind::TreeElimE: {
        TermPtr s = whnf_impl(env, t->kids[3], delta);
        if (s->kind == TermKind::Leaf || s->kind == TermKind::LeafE) {
          t = app(t->kids[1], s->kids[0]);
          continue;
        }
        if (s->kind == TermKind::Node || s->kind == TermKind::NodeE) {
          TermPtr recl = mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s->kids[0]});
          TermPtr recr = mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s->kids[2]});
          t = apps(t->kids[2], {s->kids[0], s->kids[1], s->kids[2], recl, recr});
          continue;
        }
        if (s == t->kids[3]) return t;
        return mk::node(t->kind, {t->kids[0], t->kids[1], t->kids[2], s});
      }
      case TermKind::EmptyElim:
      case TermKind::EmptyElimE: {
        TermPtr s = whnf_impl(env, t->kids[1], delta);
        if (s == t->kids[1]) return t;
        return mk::node(t->kind, {t->kids[0], s});
      }
      default:
        return t;
    }
  }
}

}  // namespace

TermPtr Kernel::whnf(const TermPtr& t) { return whnf_impl(env_, t, true); }

// ---------------------------------------------------------------------------
// Conversion

bool Kernel::conv_type(const Context& ctx, const TermPtr& a, const TermPtr& b) {
  // Types are terms of some universe; the universe itself is irrelevant to
  // the comparison, so reuse the term-level algorithm at a dummy universe.
  return conv_whnf(ctx, a, b, mk::u(0));
}

bool Kernel::conv(const Context& ctx, const TermPtr& a, const TermPtr& b, const TermPtr& ty) {
  TermPtr tyW = whnf(ty);
  switch (tyW->kind) {
    case TermKind::Unit:
    case TermKind::UnitE:
      return true;  // eta: the unit types have a unique inhabitant
    case TermKind::Pi:
    case TermKind::PiE: {
      Context ctx2 = ctx;
      Sort ds{SortKind::Fib, 0};  // sort not needed below
      ctx2.push_back({tyW->name, tyW->kids[0], ds});
      TermPtr a1 = app(shift(a, 1), var(0));
      TermPtr b1 = app(shift(b, 1), var(0));
      return conv(ctx2, a1, b1, tyW->kids[1]);
    }
    case TermKind::Sigma:
    case TermKind::SigmaE: {
      TermPtr fa = mk::node(TermKind::Fst, {a});
      TermPtr fb = mk::node(TermKind::Fst, {b});
      if (!conv(ctx, fa, fb, tyW->kids[0])) return false;
      TermPtr sa = mk::node(TermKind::Snd, {a});
      TermPtr sb = mk::node(TermKind::Snd, {b});
      return conv(ctx, sa, sb, subst(tyW->kids[1], 0, fa));
    }
    case TermKind::Univ:
      return conv_whnf(ctx, a, b, tyW);
    default:
      return conv_whnf(ctx, a, b, tyW);
  }
}

namespace {

// Collects an application spine: returns head, fills args outermost-last.
TermPtr spine(const TermPtr& t, std::vector<TermPtr>* args) {
  TermPtr h = t;
  while (h->kind == TermKind::App) {
    args->push_back(h->kids[1]);
    h = h->kids[0];
  }
  std::reverse(args->begin(), args->end());
  return h;
}

bool is_neutral_head(TermKind k) {
  switch (k) {
    case TermKind::Var:
    case TermKind::Global:
    case TermKind::Axiom:
    case TermKind::Fst:
    case TermKind::Snd:
    case TermKind::UnitElim:
    case TermKind::UnitElimE:
    case TermKind::EmptyElim:
    case TermKind::EmptyElimE:
    case TermKind::NatElim:
    case TermKind::NatElimE:
    case TermKind::SumElim:
    case TermKind::SumElimE:
    case TermKind::J:
    case TermKind::JE:
    case TermKind::ListElim:
    case TermKind::ListElimE:
    case TermKind::TreeElim:
    case TermKind::TreeElimE:
    case TermKind::App:
      return true;
    default:
      return false;
  }
}

}  // namespace

// Compares two neutrals; on success stores the (synthesized) type of the
// common value in *ty_out when requested.
bool Kernel::conv_neutral(const Context& ctx, const TermPtr& a, const TermPtr& b, TermPtr* ty_out) {
  if (a->kind == TermKind::App || b->kind == TermKind::App) {
    std::vector<TermPtr> aargs, bargs;
    TermPtr ah = spine(a, &aargs);
    TermPtr bh = spine(b, &bargs);
    if (aargs.size() != bargs.size()) return false;
    TermPtr hty;
    if (!conv_neutral(ctx, ah, bh, &hty)) return false;
    for (size_t i = 0; i < aargs.size(); ++i) {
      TermPtr w = whnf(hty);
      if (w->kind != TermKind::Pi && w->kind != TermKind::PiE) return false;
      if (!conv(ctx, aargs[i], bargs[i], w->kids[0])) return false;
      hty = subst(w->kids[1], 0, aargs[i]);
    }
    if (ty_out) *ty_out = hty;
    return true;
  }
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var:
      if (a->num != b->num) return false;
      if (ty_out) *ty_out = shift(ctx_lookup(ctx, a->num).type, a->num + 1);
      return true;
    case TermKind::Global: {
      if (a->name != b->name) return false;
      const GlobalDef* d = env_.find(a->name);
      if (!d) return false;
      if (ty_out) *ty_out = d->type;
      return true;
    }
    case TermKind::Axiom: {
      if (a->name != b->name) return false;
      if (ty_out) *ty_out = axiom_constant_type(a->name, 0);
      return true;
    }
    case TermKind::Fst:
    case TermKind::Snd: {
      TermPtr pty;
      if (!conv_neutral(ctx, a->kids[0], b->kids[0], &pty)) return false;
      TermPtr w = whnf(pty);
      if (w->kind != TermKind::Sigma && w->kind != TermKind::SigmaE) return false;
      if (ty_out) {
        *ty_out = a->kind == TermKind::Fst
                      ? w->kids[0]
                      : subst(w->kids[1], 0, mk::node(TermKind::Fst, {a->kids[0]}));
      }
      return true;
    }
    default:
      break;
  }
  // Stuck eliminator: compare all components; types come from the left side.
  if (is_neutral_head(a->kind) && a->kids.size() == b->kids.size()) {
    for (size_t i = 0; i < a->kids.size(); ++i) {
      TermPtr ka = a->kids[i];
      TermPtr kb = b->kids[i];
      TermPtr kt;
      try {
        kt = infer(ctx, ka);
      } catch (const TypeError&) {
        if (!alpha_eq(ka, kb)) return false;
        continue;
      }
      if (!conv(ctx, ka, kb, kt)) return false;
    }
    if (ty_out) *ty_out = infer(ctx, a);
    return true;
  }
  return false;
}

bool Kernel::conv_whnf(const Context& ctx, TermPtr a, TermPtr b, const TermPtr& ty) {
  // Cheap pass without definition unfolding.
  TermPtr a0 = whnf_impl(env_, a, false);
  TermPtr b0 = whnf_impl(env_, b, false);
  if (alpha_eq(a0, b0)) return true;

  // Same defined head: try spine equality before unfolding.
  {
    std::vector<TermPtr> aargs, bargs;
    TermPtr ah = spine(a0, &aargs);
    TermPtr bh = spine(b0, &bargs);
    if (ah->kind == TermKind::Global && bh->kind == TermKind::Global && ah->name == bh->name &&
        aargs.size() == bargs.size() && env_.find(ah->name)) {
      bool ok = true;
      TermPtr hty = env_.find(ah->name)->type;
      for (size_t i = 0; i < aargs.size() && ok; ++i) {
        TermPtr w = whnf(hty);
        if (w->kind != TermKind::Pi && w->kind != TermKind::PiE) {
          ok = false;
          break;
        }
        if (!conv(ctx, aargs[i], bargs[i], w->kids[0])) ok = false;
        hty = subst(w->kids[1], 0, aargs[i]);
      }
      if (ok) return true;
    }
  }

  TermPtr aw = whnf_impl(env_, a0, true);
  TermPtr bw = whnf_impl(env_, b0, true);
  if (alpha_eq(aw, bw)) return true;

  // Unit eta: a star may only meet a star or a neutral of the same unit
  // type, and then the two sides are equal.
  if (aw->kind == TermKind::Star || bw->kind == TermKind::Star ||
      aw->kind == TermKind::StarE || bw->kind == TermKind::StarE) {
    auto unit_ok = [](const TermPtr& x) {
      return x->kind == TermKind::Star || x->kind == TermKind::StarE || is_neutral_head(x->kind);
    };
    return unit_ok(aw) && unit_ok(bw);
  }

  // Eta: constructor against neutral for functions and pairs.
  if (aw->kind == TermKind::Lam || bw->kind == TermKind::Lam) {
    Context ctx2 = ctx;
    ctx2.push_back({"x", mk::u(0), Sort{}});  // type unused by untyped eta step
    TermPtr a1 = whnf(app(shift(aw, 1), var(0)));
    TermPtr b1 = whnf(app(shift(bw, 1), var(0)));
    return conv_whnf(ctx2, a1, b1, mk::u(0));
  }
  if (aw->kind == TermKind::Pair || aw->kind == TermKind::PairE ||
      bw->kind == TermKind::Pair || bw->kind == TermKind::PairE) {
    TermPtr fa = whnf(mk::node(TermKind::Fst, {aw}));
    TermPtr fb = whnf(mk::node(TermKind::Fst, {bw}));
    TermPtr sa = whnf(mk::node(TermKind::Snd, {aw}));
    TermPtr sb = whnf(mk::node(TermKind::Snd, {bw}));
    return conv_whnf(ctx, fa, fb, mk::u(0)) && conv_whnf(ctx, sa, sb, mk::u(0));
  }

  if (aw->kind != bw->kind) {
    if (is_neutral_head(aw->kind) && is_neutral_head(bw->kind))
      return conv_neutral(ctx, aw, bw, nullptr);
    return false;
  }

  switch (aw->kind) {
    case TermKind::Var:
    case TermKind::Univ:
      return alpha_eq(aw, bw);
    case TermKind::Global:
    case TermKind::Axiom:
      return conv_neutral(ctx, aw, bw, nullptr);
    case TermKind::Pi:
    case TermKind::PiE:
    case TermKind::Sigma:
    case TermKind::SigmaE: {
      if (!conv_whnf(ctx, aw->kids[0], bw->kids[0], mk::u(0))) return false;
      Context ctx2 = ctx;
      ctx2.push_back({aw->name, aw->kids[0], Sort{}});
      return conv_whnf(ctx2, aw->kids[1], bw->kids[1], mk::u(0));
    }
    default:
      break;
  }

  if (is_neutral_head(aw->kind)) return conv_neutral(ctx, aw, bw, nullptr);

  // Remaining canonical forms: both sides share a constructor or first-order
  // former; compare components at their (known) types.
  switch (aw->kind) {
    case TermKind::Zero:
    case TermKind::ZeroE:
    case TermKind::Refl:
    case TermKind::ReflE:
    case TermKind::Nil:
    case TermKind::NilE:
    case TermKind::Unit:
    case TermKind::UnitE:
    case TermKind::Empty:
    case TermKind::EmptyE:
    case TermKind::Nat:
    case TermKind::NatE:
      return true;
    case TermKind::Suc:
      return conv(ctx, aw->kids[0], bw->kids[0], mk::node(TermKind::Nat, {}));
    case TermKind::SucE:
      return conv(ctx, aw->kids[0], bw->kids[0], mk::node(TermKind::NatE, {}));
    case TermKind::Id:
    case TermKind::EqE:
      return conv_type(ctx, aw->kids[0], bw->kids[0]) &&
             conv(ctx, aw->kids[1], bw->kids[1], aw->kids[0]) &&
             conv(ctx, aw->kids[2], bw->kids[2], aw->kids[0]);
    case TermKind::Sum:
    case TermKind::SumE:
    case TermKind::Tree:
    case TermKind::TreeE:
      return conv_type(ctx, aw->kids[0], bw->kids[0]) &&
             conv_type(ctx, aw->kids[1], bw->kids[1]);
    case TermKind::List:
    case TermKind::ListE:
      return conv_type(ctx, aw->kids[0], bw->kids[0]);
    case TermKind::Inl:
    case TermKind::InlE:
    case TermKind::Inr:
    case TermKind::InrE: {
      TermPtr w = whnf(ty);
      bool left = aw->kind == TermKind::Inl || aw->kind == TermKind::InlE;
      if (w->kind == TermKind::Sum || w->kind == TermKind::SumE)
        return conv(ctx, aw->kids[0], bw->kids[0], w->kids[left ? 0 : 1]);
      return conv_whnf(ctx, aw->kids[0], bw->kids[0], mk::u(0));
    }
    case TermKind::Cons:
    case TermKind::ConsE: {
      TermPtr w = whnf(ty);
      if (w->kind == TermKind::List || w->kind == TermKind::ListE)
        return conv(ctx, aw->kids[0], bw->kids[0], w->kids[0]) &&
               conv(ctx, aw->kids[1], bw->kids[1], w);
      return conv_whnf(ctx, aw->kids[0], bw->kids[0], mk::u(0)) &&
             conv_whnf(ctx, aw->kids[1], bw->kids[1], mk::u(0));
    }
    case TermKind::Leaf:
    case TermKind::LeafE: {
      TermPtr w = whnf(ty);
      if (w->kind == TermKind::Tree || w->kind == TermKind::TreeE)
        return conv(ctx, aw->kids[0], bw->kids[0], w->kids[1]);
      return conv_whnf(ctx, aw->kids[0], bw->kids[0], mk::u(0));
    }
    case TermKind::Node:
    case TermKind::NodeE: {
      TermPtr w = whnf(ty);
      if (w->kind == TermKind::Tree || w->kind == TermKind::TreeE)
        return conv(ctx, aw->kids[0], bw->kids[0], w) &&
               conv(ctx, aw->kids[1], bw->kids[1], w->kids[0]) &&
               conv(ctx, aw->kids[2], bw->kids[2], w);
      return conv_whnf(ctx, aw->kids[0], bw->kids[0], mk::u(0)) &&
             conv_whnf(ctx, aw->kids[1], bw->kids[1], mk::u(0)) &&
             conv_whnf(ctx, aw->kids[2], bw->kids[2], mk::u(0));
    }
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Typing

Sort Kernel::check_is_type(const Context& ctx, const TermPtr& ty) {
  TermPtr k = whnf(infer(ctx, ty));
  if (k->kind != TermKind::Univ)
    fail(ErrCode::TypeMismatch, "expected a type, but `" + show(ty) + "` has type `" + show(k) + "`");
  return Sort{k->usort, k->num};
}

Sort Kernel::sort_of(const Context& ctx, const TermPtr& ty) { return check_is_type(ctx, ty); }

bool Kernel::subtype(const Context& ctx, const TermPtr& a, const TermPtr& b) {
  if (conv_type(ctx, a, b)) return true;
  TermPtr aw = whnf(a);
  TermPtr bw = whnf(b);
  return aw->kind == TermKind::Univ && bw->kind == TermKind::Univ &&
         aw->num == bw->num && aw->usort == SortKind::Fib && bw->usort == SortKind::Exo;
}

// Validates that `motive` is a (possibly exo) function telescope with the
// expected domains and a universe codomain; returns the codomain sort.
// Lambda motives are elaborated directly (their body must be a type under
// the expected binders); anything else must infer to a matching telescope.
static Sort walk_motive(Kernel& k, const Context& ctx0, const TermPtr& motive,
                        const std::vector<TermPtr>& doms) {
  Context ctx = ctx0;
  TermPtr m = motive;
  size_t i = 0;
  while (i < doms.size() && m->kind == TermKind::Lam) {
    ctx.push_back({m->name.empty() ? "x" : m->name, doms[i], Sort{}});
    m = m->kids[0];
    ++i;
  }
  if (i == doms.size()) return k.check_is_type(ctx, m);

  TermPtr mty = k.infer(ctx, m);
  for (; i < doms.size(); ++i) {
    TermPtr w = k.whnf(mty);
    if (w->kind != TermKind::Pi && w->kind != TermKind::PiE)
      fail(ErrCode::TypeMismatch,
           "eliminator motive `" + show(motive) + "` is not a function of the right shape");
    if (!k.conv_type(ctx, w->kids[0], doms[i]))
      fail(ErrCode::TypeMismatch, "eliminator motive domain mismatch: expected `" + show(doms[i]) +
                                      "`, found `" + show(w->kids[0]) + "`");
    ctx.push_back({w->name, w->kids[0], Sort{}});
    mty = w->kids[1];
  }
  TermPtr w = k.whnf(mty);
  if (w->kind != TermKind::Univ)
    fail(ErrCode::TypeMismatch, "eliminator motive must land in a universe");
  return Sort{w->usort, w->num};
}

// Chooses the function former matching the sorts of domain and codomain: a
// fibrant arrow needs both sides fibrant.
static TermPtr mk_fun(const Sort& dom, const Sort& cod, const std::string& hint, TermPtr d,
                      TermPtr c) {
  if (dom.kind == SortKind::Fib && cod.kind == SortKind::Fib)
    return mk::pi(hint, std::move(d), std::move(c));
  return mk::pie(hint, std::move(d), std::move(c));
}

TermPtr Kernel::infer_eliminator(const Context& ctx, const TermPtr& t) {
  const TermKind k = t->kind;
  const bool exo =
      k == TermKind::UnitElimE || k == TermKind::EmptyElimE || k == TermKind::NatElimE ||
      k == TermKind::SumElimE || k == TermKind::JE || k == TermKind::ListElimE ||
      k == TermKind::TreeElimE;

  const TermPtr& motive = t->kids[0];
  const TermPtr& scrut = t->kids.back();

  auto finish = [&](const Sort& target, const Sort& msort) { check_eliminator(target, msort); };

  switch (k) {
    case TermKind::UnitElim:
    case TermKind::UnitElimE: {
      TermPtr unit = mk::node(exo ? TermKind::UnitE : TermKind::Unit, {});
      check(ctx, scrut, unit);
      Sort msort = walk_motive(*this, ctx, motive, {unit});
      finish(Sort{exo ? SortKind::Exo : SortKind::Fib, 0}, msort);
      TermPtr star = mk::node(exo ? TermKind::StarE : TermKind::Star, {});
      check(ctx, t->kids[1], app(motive, star));
      return app(motive, scrut);
    }
    case TermKind::EmptyElim:
    case TermKind::EmptyElimE: {
      TermPtr empty = mk::node(exo ? TermKind::EmptyE : TermKind::Empty, {});
      check(ctx, scrut, empty);
      Sort msort = walk_motive(*this, ctx, motive, {empty});
      finish(Sort{exo ? SortKind::Exo : SortKind::Fib, 0}, msort);
      return app(motive, scrut);
    }
    case TermKind::NatElim:
    case TermKind::NatElimE: {
      TermPtr nat = mk::node(exo ? TermKind::NatE : TermKind::Nat, {});
      check(ctx, scrut, nat);
      Sort msort = walk_motive(*this, ctx, motive, {nat});
      Sort tsort{exo ? SortKind::Exo : SortKind::Fib, 0};
      finish(tsort, msort);
      TermPtr zero = mk::node(exo ? TermKind::ZeroE : TermKind::Zero, {});
      check(ctx, t->kids[1], app(motive, zero));
      // step : (k : Nat) -> motive k -> motive (suc k)
      TermPtr m1 = shift(motive, 1);
      TermPtr m2 = shift(motive, 2);
      TermPtr suck = mk::node(exo ? TermKind::SucE : TermKind::Suc, {var(1)});
      TermPtr inner = mk_fun(msort, msort, "_", app(m1, var(0)), app(m2, suck));
      TermPtr step_ty = mk_fun(tsort, msort, "k", nat, inner);
      check(ctx, t->kids[2], step_ty);
      return app(motive, scrut);
    }
    case TermKind::SumElim:
    case TermKind::SumElimE: {
      TermPtr sty = whnf(infer(ctx, scrut));
      TermKind want = exo ? TermKind::SumE : TermKind::Sum;
      if (sty->kind != want)
        fail(ErrCode::TypeMismatch, "sum eliminator target has type `" + show(sty) + "`");
      TermPtr A = whnf(sty->kids[0]), B = whnf(sty->kids[1]);
      Sort tsort = check_is_type(ctx, sty);
      Sort msort = walk_motive(*this, ctx, motive, {sty});
      finish(tsort, msort);
      Sort sA = check_is_type(ctx, A);
      Sort sB = check_is_type(ctx, B);
      TermPtr inl = mk::node(exo ? TermKind::InlE : TermKind::Inl, {var(0)});
      TermPtr inr = mk::node(exo ? TermKind::InrE : TermKind::Inr, {var(0)});
      check(ctx, t->kids[1], mk_fun(sA, msort, "a", A, app(shift(motive, 1), inl)));
      check(ctx, t->kids[2], mk_fun(sB, msort, "b", B, app(shift(motive, 1), inr)));
      return app(motive, scrut);
    }
    case TermKind::J:
    case TermKind::JE: {
      const TermPtr& a = t->kids[2];
      const TermPtr& b = t->kids[3];
      const TermPtr& p = t->kids[4];
      TermPtr A = whnf(infer(ctx, a));
      Sort sA = check_is_type(ctx, A);
      if (!exo && sA.kind != SortKind::Fib)
        fail(ErrCode::TypeMismatch, "identity type requires a fibrant carrier");
      check(ctx, b, A);
      TermKind eqk = exo ? TermKind::EqE : TermKind::Id;
      TermPtr eqty = mk::node(eqk, {A, a, b});
      check(ctx, p, eqty);
      Sort tsort{exo ? SortKind::Exo : SortKind::Fib, sA.level};
      // motive : (x y : A) -> Eq A x y -> Univ
      TermPtr A1 = shift(A, 1), A2 = shift(A, 2);
      TermPtr eq_xy = mk::node(eqk, {A2, var(1), var(0)});
      Sort msort = walk_motive(*this, ctx, motive, {A, A1, eq_xy});
      finish(tsort, msort);
      // base : (x : A) -> motive x x refl
      TermPtr refl = mk::node(exo ? TermKind::ReflE : TermKind::Refl, {});
      TermPtr base_cod = apps(shift(motive, 1), {var(0), var(0), refl});
      check(ctx, t->kids[1], mk_fun(sA, msort, "x", A, base_cod));
      return apps(motive, {a, b, p});
    }
    case TermKind::ListElim:
    case TermKind::ListElimE: {
      TermPtr sty = whnf(infer(ctx, scrut));
      TermKind want = exo ? TermKind::ListE : TermKind::List;
      if (sty->kind != want)
        fail(ErrCode::TypeMismatch, "list eliminator target has type `" + show(sty) + "`");
      TermPtr A = whnf(sty->kids[0]);
      Sort sA = check_is_type(ctx, A);
      Sort tsort = check_is_type(ctx, sty);
      Sort msort = walk_motive(*this, ctx, motive, {sty});
      finish(tsort, msort);
      TermPtr nil = mk::node(exo ? TermKind::NilE : TermKind::Nil, {});
      check(ctx, t->kids[1], app(motive, nil));
      // cons case : (h : A) -> (tl : List A) -> motive tl -> motive (cons h tl)
      TermPtr consk = mk::node(exo ? TermKind::ConsE : TermKind::Cons, {var(2), var(1)});
      TermPtr inner2 = mk_fun(msort, msort, "_", app(shift(motive, 2), var(0)),
                              app(shift(motive, 3), consk));
      TermPtr inner1 = mk_fun(tsort, msort, "tl", shift(sty, 1), inner2);
      check(ctx, t->kids[2], mk_fun(sA, msort, "h", A, inner1));
      return app(motive, scrut);
    }
    case TermKind::TreeElim:
    case TermKind::TreeElimE: {
      TermPtr sty = whnf(infer(ctx, scrut));
      TermKind want = exo ? TermKind::TreeE : TermKind::Tree;
      if (sty->kind != want)
        fail(ErrCode::TypeMismatch, "tree eliminator target has type `" + show(sty) + "`");
      TermPtr N = whnf(sty->kids[0]), L = whnf(sty->kids[1]);
      Sort sN = check_is_type(ctx, N);
      Sort sL = check_is_type(ctx, L);
      Sort tsort = check_is_type(ctx, sty);
      Sort msort = walk_motive(*this, ctx, motive, {sty});
      finish(tsort, msort);
      TermPtr leaf = mk::node(exo ? TermKind::LeafE : TermKind::Leaf, {var(0)});
      check(ctx, t->kids[1], mk_fun(sL, msort, "x", L, app(shift(motive, 1), leaf)));
      // node case : (l : T) -> (n : N) -> (r : T) -> motive l -> motive r
      //             -> motive (node l n r)
      TermPtr nodek = mk::node(exo ? TermKind::NodeE : TermKind::Node, {var(4), var(3), var(2)});
      TermPtr c5 = app(shift(motive, 5), nodek);
      TermPtr c4 = mk_fun(msort, msort, "_", app(shift(motive, 4), var(1)), c5);
      TermPtr c3 = mk_fun(msort, msort, "_", app(shift(motive, 3), var(2)), c4);
      TermPtr c2 = mk_fun(tsort, msort, "r", shift(sty, 2), c3);
      TermPtr c1 = mk_fun(sN, msort, "n", shift(N, 1), c2);
      check(ctx, t->kids[2], mk_fun(tsort, msort, "l", sty, c1));
      return app(motive, scrut);
    }
    default:
      throw std::logic_error("infer_eliminator: not an eliminator");
  }
}

TermPtr Kernel::infer(const Context& ctx, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: {
      if (t->num < 0 || static_cast<size_t>(t->num) >= ctx.size())
        fail(ErrCode::ScopeError, "variable index " + std::to_string(t->num) + " out of scope");
      return shift(ctx_lookup(ctx, t->num).type, t->num + 1);
    }
    case TermKind::Univ: {
      if (t->num + 1 > kMaxLevel)
        fail(ErrCode::UniverseError,
             "universe " + show(t) + " has no type (levels stop at " + std::to_string(kMaxLevel) + ")");
      return mk::univ(t->usort, t->num + 1);
    }
    case TermKind::Global: {
      const GlobalDef* d = env_.find(t->name);
      if (!d) fail(ErrCode::ScopeError, "unknown constant '" + t->name + "'");
      return d->type;
    }
    case TermKind::Axiom: {
      std::string base;
      int lvl;
      if (!split_axiom_ident(t->name, &base, &lvl))
        fail(ErrCode::UnknownAxiom, "unknown axiom constant '" + t->name + "'");
      if (!axioms_.enabled(base))
        fail(ErrCode::UnknownAxiom, "axiom '" + base + "' is not enabled");
      return axiom_constant_type(t->name, lvl);
    }
    case TermKind::Annot: {
      check_is_type(ctx, t->kids[1]);
      check(ctx, t->kids[0], t->kids[1]);
      return t->kids[1];
    }
    case TermKind::App: {
      TermPtr fty = whnf(infer(ctx, t->kids[0]));
      if (fty->kind != TermKind::Pi && fty->kind != TermKind::PiE)
        fail(ErrCode::TypeMismatch,
             "application of non-function `" + show(t->kids[0]) + "` : `" + show(fty) + "`");
      check(ctx, t->kids[1], fty->kids[0]);
      return subst(fty->kids[1], 0, t->kids[1]);
    }
    case TermKind::Fst:
    case TermKind::Snd: {
      TermPtr pty = whnf(infer(ctx, t->kids[0]));
      if (pty->kind != TermKind::Sigma && pty->kind != TermKind::SigmaE)
        fail(ErrCode::TypeMismatch, "projection from non-pair type `" + show(pty) + "`");
      if (t->kind == TermKind::Fst) return pty->kids[0];
      return subst(pty->kids[1], 0, mk::node(TermKind::Fst, {t->kids[0]}));
    }

    case TermKind::Pi:
    case TermKind::Sigma: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      if (sA.kind != SortKind::Fib)
        fail(ErrCode::TypeMismatch, (t->kind == TermKind::Pi ? std::string("Pi") : "Sigma") +
                                        " requires a fibrant domain, found `" + show(t->kids[0]) +
                                        "` : " + to_string(sA));
      Context ctx2 = ctx;
      ctx2.push_back({t->name, t->kids[0], sA});
      Sort sB = check_is_type(ctx2, t->kids[1]);
      if (sB.kind != SortKind::Fib)
        fail(ErrCode::TypeMismatch, (t->kind == TermKind::Pi ? std::string("Pi") : "Sigma") +
                                        " requires a fibrant codomain, found sort " + to_string(sB));
      return mk::u(std::max(sA.level, sB.level));
    }
    case TermKind::PiE:
    case TermKind::SigmaE: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      Context ctx2 = ctx;
      ctx2.push_back({t->name, t->kids[0], sA});
      Sort sB = check_is_type(ctx2, t->kids[1]);
      return mk::ue(std::max(sA.level, sB.level));
    }
    case TermKind::Unit:
    case TermKind::Empty:
    case TermKind::Nat:
      return mk::u(0);
    case TermKind::UnitE:
    case TermKind::EmptyE:
    case TermKind::NatE:
      return mk::ue(0);
    case TermKind::Sum:
    case TermKind::Tree: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      Sort sB = check_is_type(ctx, t->kids[1]);
      if (sA.kind != SortKind::Fib || sB.kind != SortKind::Fib)
        fail(ErrCode::TypeMismatch, "fibrant former applied to non-fibrant component");
      return mk::u(std::max(sA.level, sB.level));
    }
    case TermKind::SumE:
    case TermKind::TreeE: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      Sort sB = check_is_type(ctx, t->kids[1]);
      return mk::ue(std::max(sA.level, sB.level));
    }
    case TermKind::List: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      if (sA.kind != SortKind::Fib)
        fail(ErrCode::TypeMismatch, "List requires a fibrant element type");
      return mk::u(sA.level);
    }
    case TermKind::ListE: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      return mk::ue(sA.level);
    }
    case TermKind::Id: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      if (sA.kind != SortKind::Fib)
        fail(ErrCode::TypeMismatch, "identity type requires a fibrant carrier, found " +
                                        to_string(sA) + " `" + show(t->kids[0]) + "`");
      check(ctx, t->kids[1], t->kids[0]);
      check(ctx, t->kids[2], t->kids[0]);
      return mk::u(sA.level);
    }
    case TermKind::EqE: {
      Sort sA = check_is_type(ctx, t->kids[0]);
      check(ctx, t->kids[1], t->kids[0]);
      check(ctx, t->kids[2], t->kids[0]);
      return mk::ue(sA.level);
    }

    case TermKind::Star:
      return mk::node(TermKind::Unit, {});
    case TermKind::StarE:
      return mk::node(TermKind::UnitE, {});
    case TermKind::Zero:
      return mk::node(TermKind::Nat, {});
    case TermKind::ZeroE:
      return mk::node(TermKind::NatE, {});
    case TermKind::Suc:
      check(ctx, t->kids[0], mk::node(TermKind::Nat, {}));
      return mk::node(TermKind::Nat, {});
    case TermKind::SucE:
      check(ctx, t->kids[0], mk::node(TermKind::NatE, {}));
      return mk::node(TermKind::NatE, {});

    case TermKind::UnitElim:
    case TermKind::UnitElimE:
    case TermKind::EmptyElim:
    case TermKind::EmptyElimE:
    case TermKind::NatElim:
    case TermKind::NatElimE:
    case TermKind::SumElim:
    case TermKind::SumElimE:
    case TermKind::J:
    case TermKind::JE:
    case TermKind::ListElim:
    case TermKind::ListElimE:
    case TermKind::TreeElim:
    case TermKind::TreeElimE:
      return infer_eliminator(ctx, t);

    case TermKind::Lam:
      fail(ErrCode::TypeMismatch, "cannot infer the type of an unannotated lambda");
    case TermKind::Pair:
    case TermKind::PairE:
    case TermKind::Inl:
    case TermKind::InlE:
    case TermKind::Inr:
    case TermKind::InrE:
    case TermKind::Refl:
    case TermKind::ReflE:
    case TermKind::Nil:
    case TermKind::NilE:
    case TermKind::Cons:
    case TermKind::ConsE:
    case TermKind::Leaf:
    case TermKind::LeafE:
    case TermKind::Node:
    case TermKind::NodeE:
      fail(ErrCode::TypeMismatch,
           "constructor `" + show(t) + "` needs a checking context or an annotation");
  }
  throw std::logic_error("infer: unhandled kind");
}

void Kernel::check(const Context& ctx, const TermPtr& t, const TermPtr& ty) {
  switch (t->kind) {
    case TermKind::Lam: {
      TermPtr w = whnf(ty);
      if (w->kind != TermKind::Pi && w->kind != TermKind::PiE)
        fail(ErrCode::TypeMismatch, "lambda checked against non-function type `" + show(w) + "`");
      Context ctx2 = ctx;
      ctx2.push_back({t->name.empty() ? w->name : t->name, w->kids[0], Sort{}});
      check(ctx2, t->kids[0], w->kids[1]);
      return;
    }
    case TermKind::Pair:
    case TermKind::PairE: {
      TermPtr w = whnf(ty);
      TermKind want = t->kind == TermKind::Pair ? TermKind::Sigma : TermKind::SigmaE;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "pair constructor flavor does not match type `" + show(w) + "`");
      check(ctx, t->kids[0], w->kids[0]);
      check(ctx, t->kids[1], subst(w->kids[1], 0, t->kids[0]));
      return;
    }
    case TermKind::Inl:
    case TermKind::InlE:
    case TermKind::Inr:
    case TermKind::InrE: {
      TermPtr w = whnf(ty);
      bool exo = t->kind == TermKind::InlE || t->kind == TermKind::InrE;
      TermKind want = exo ? TermKind::SumE : TermKind::Sum;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "injection flavor does not match type `" + show(w) + "`");
      bool left = t->kind == TermKind::Inl || t->kind == TermKind::InlE;
      check(ctx, t->kids[0], w->kids[left ? 0 : 1]);
      return;
    }
    case TermKind::Refl:
    case TermKind::ReflE: {
      TermPtr w = whnf(ty);
      TermKind want = t->kind == TermKind::Refl ? TermKind::Id : TermKind::EqE;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "refl flavor does not match type `" + show(w) + "`");
      if (!conv(ctx, w->kids[1], w->kids[2], w->kids[0]))
        fail(ErrCode::TypeMismatch, "refl: endpoints `" + show(w->kids[1]) + "` and `" +
                                        show(w->kids[2]) + "` are not convertible");
      return;
    }
    case TermKind::Nil:
    case TermKind::NilE: {
      TermPtr w = whnf(ty);
      TermKind want = t->kind == TermKind::Nil ? TermKind::List : TermKind::ListE;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "nil flavor does not match type `" + show(w) + "`");
      return;
    }
    case TermKind::Cons:
    case TermKind::ConsE: {
      TermPtr w = whnf(ty);
      TermKind want = t->kind == TermKind::Cons ? TermKind::List : TermKind::ListE;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "cons flavor does not match type `" + show(w) + "`");
      check(ctx, t->kids[0], w->kids[0]);
      check(ctx, t->kids[1], w);
      return;
    }
    case TermKind::Leaf:
    case TermKind::LeafE: {
      TermPtr w = whnf(ty);
      TermKind want = t->kind == TermKind::Leaf ? TermKind::Tree : TermKind::TreeE;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "leaf flavor does not match type `" + show(w) + "`");
      check(ctx, t->kids[0], w->kids[1]);
      return;
    }
    case TermKind::Node:
    case TermKind::NodeE: {
      TermPtr w = whnf(ty);
      TermKind want = t->kind == TermKind::Node ? TermKind::Tree : TermKind::TreeE;
      if (w->kind != want)
        fail(ErrCode::TypeMismatch, "node flavor does not match type `" + show(w) + "`");
      check(ctx, t->kids[0], w);
      check(ctx, t->kids[1], w->kids[0]);
      check(ctx, t->kids[2], w);
      return;
    }
    case TermKind::Annot: {
      check_is_type(ctx, t->kids[1]);
      check(ctx, t->kids[0], t->kids[1]);
      if (!subtype(ctx, t->kids[1], ty))
        fail(ErrCode::TypeMismatch, "annotation `" + show(t->kids[1]) +
                                        "` does not match expected type `" + show(ty) + "`");
      return;
    }
    default: {
      TermPtr got = infer(ctx, t);
      if (!subtype(ctx, got, ty))
        fail(ErrCode::TypeMismatch, "term `" + show(t) + "` has type `" + show(got) +
                                        "` but `" + show(ty) + "` was expected");
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Module checking

ModuleReport check_module(const std::string& file, const std::vector<Declaration>& decls,
                          GlobalEnv& env, const AxiomRegistry& axioms) {
  ModuleReport rep;
  rep.file = file;
  auto t0 = std::chrono::steady_clock::now();
  Kernel kernel(env, axioms);

  for (const auto& d : decls) {
    DeclOutcome out;
    out.name = d.name;
    out.line = d.line;
    out.col = d.col;
    try {
      if (d.kind == DeclKind::AxiomUse) {
        const auto& k = AxiomRegistry::known();
        if (std::find(k.begin(), k.end(), d.name) == k.end())
          fail(ErrCode::UnknownAxiom, "unknown axiom '" + d.name + "'");
        if (!axioms.enabled(d.name))
          fail(ErrCode::UnknownAxiom, "axiom '" + d.name + "' is not enabled");
        out.accepted = true;
      } else {
        if (env.find(d.name) != nullptr)
          fail(ErrCode::ScopeError, "duplicate definition of '" + d.name + "'");
        if (d.kind == DeclKind::Postulate) {
          kernel.check_is_type({}, d.type);
          env.add({d.name, d.type, nullptr});
        } else {
          TermPtr ty = d.type;
          if (ty) {
            kernel.check_is_type({}, ty);
            kernel.check({}, d.body, ty);
          } else {
            ty = kernel.infer({}, d.body);
          }
          env.add({d.name, ty, d.body});
        }
        out.accepted = true;
      }
    } catch (const TypeError& e) {
      out.accepted = false;
      out.error = e.code;
      out.message = e.what();
    }
    rep.decls.push_back(std::move(out));
  }

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

}  // namespace tltt
