#include "tltt/syntax.hpp"

#include <stdexcept>

namespace tltt {

bool is_exo_flavor(TermKind k) {
  switch (k) {
    case TermKind::PiE:
    case TermKind::SigmaE:
    case TermKind::PairE:
    case TermKind::UnitE:
    case TermKind::StarE:
    case TermKind::UnitElimE:
    case TermKind::EmptyE:
    case TermKind::EmptyElimE:
    case TermKind::NatE:
    case TermKind::ZeroE:
    case TermKind::SucE:
    case TermKind::NatElimE:
    case TermKind::SumE:
    case TermKind::InlE:
    case TermKind::InrE:
    case TermKind::SumElimE:
    case TermKind::EqE:
    case TermKind::ReflE:
    case TermKind::JE:
    case TermKind::ListE:
    case TermKind::NilE:
    case TermKind::ConsE:
    case TermKind::ListElimE:
    case TermKind::TreeE:
    case TermKind::LeafE:
    case TermKind::NodeE:
    case TermKind::TreeElimE:
      return true;
    default:
      return false;
  }
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var:
      return a->num == b->num;
    case TermKind::Univ:
      return a->num == b->num && a->usort == b->usort;
    case TermKind::Global:
    case TermKind::Axiom:
      return a->name == b->name;
    default:
      break;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!alpha_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {

TermPtr clone_with_kids(const Term& t, std::vector<TermPtr> kids) {
  auto r = std::make_shared<Term>(t);
  r->kids = std::move(kids);
  return r;
}

}  // namespace

TermPtr shift(const TermPtr& t, int by, int cutoff) {
  if (by == 0) return t;
  switch (t->kind) {
    case TermKind::Var: {
      if (t->num < cutoff) return t;
      int nn = t->num + by;
      if (nn < 0) throw std::logic_error("shift: free index underflow");
      return mk::var(nn);
    }
    case TermKind::Univ:
    case TermKind::Global:
    case TermKind::Axiom:
      return t;
    default:
      break;
  }
  bool changed = false;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (size_t i = 0; i < t->kids.size(); ++i) {
    int d = child_binder_depth(t->kind, i);
    TermPtr k = shift(t->kids[i], by, cutoff + d);
    changed = changed || k != t->kids[i];
    kids.push_back(std::move(k));
  }
  if (!changed) return t;
  return clone_with_kids(*t, std::move(kids));
}

TermPtr subst(const TermPtr& t, int at, const TermPtr& with) {
  switch (t->kind) {
    case TermKind::Var: {
      if (t->num == at) return shift(with, at, 0);
      if (t->num > at) return mk::var(t->num - 1);
      return t;
    }
    case TermKind::Univ:
    case TermKind::Global:
    case TermKind::Axiom:
      return t;
    default:
      break;
  }
  bool changed = false;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (size_t i = 0; i < t->kids.size(); ++i) {
    int d = child_binder_depth(t->kind, i);
    TermPtr k = subst(t->kids[i], at + d, with);
    changed = changed || k != t->kids[i];
    kids.push_back(std::move(k));
  }
  if (!changed) return t;
  return clone_with_kids(*t, std::move(kids));
}

std::string to_string(const Sort& s) {
  return (s.kind == SortKind::Fib ? "Fib " : "Exo ") + std::to_string(s.level);
}

namespace mk {

TermPtr var(int ix) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->num = ix;
  return t;
}

TermPtr univ(SortKind k, int level) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Univ;
  t->usort = k;
  t->num = level;
  return t;
}

TermPtr global(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Global;
  t->name = name;
  return t;
}

TermPtr axiom(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Axiom;
  t->name = name;
  return t;
}

TermPtr node(TermKind k, std::vector<TermPtr> kids, std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->name = std::move(name);
  t->kids = std::move(kids);
  return t;
}

TermPtr annot(TermPtr t, TermPtr ty) {
  return node(TermKind::Annot, {std::move(t), std::move(ty)});
}

TermPtr pi(std::string hint, TermPtr dom, TermPtr cod) {
  return node(TermKind::Pi, {std::move(dom), std::move(cod)}, std::move(hint));
}

TermPtr pie(std::string hint, TermPtr dom, TermPtr cod) {
  return node(TermKind::PiE, {std::move(dom), std::move(cod)}, std::move(hint));
}

TermPtr arrow(TermPtr dom, TermPtr cod) {
  return pi("_", std::move(dom), shift(cod, 1, 0));
}

TermPtr arrowe(TermPtr dom, TermPtr cod) {
  return pie("_", std::move(dom), shift(cod, 1, 0));
}

TermPtr lam(std::string hint, TermPtr body) {
  return node(TermKind::Lam, {std::move(body)}, std::move(hint));
}

TermPtr app(TermPtr f, TermPtr a) {
  return node(TermKind::App, {std::move(f), std::move(a)});
}

TermPtr apps(TermPtr f, std::initializer_list<TermPtr> args) {
  TermPtr r = std::move(f);
  for (const auto& a : args) r = app(r, a);
  return r;
}

TermPtr sigma(std::string hint, TermPtr dom, TermPtr cod) {
  return node(TermKind::Sigma, {std::move(dom), std::move(cod)}, std::move(hint));
}

TermPtr sigmae(std::string hint, TermPtr dom, TermPtr cod) {
  return node(TermKind::SigmaE, {std::move(dom), std::move(cod)}, std::move(hint));
}

}  // namespace mk

}  // namespace tltt
