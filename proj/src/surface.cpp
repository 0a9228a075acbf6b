#include "tltt/surface.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace tltt {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok : uint8_t {
  Ident, LParen, RParen, Colon, ColonEq, Arrow, ArrowE, Star, StarE,
  Lambda, Dot, KwDef, KwPostulate, KwAxiom, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct ParseExc {
  std::string msg;
  int line, col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string t, int l, int c) { out.push_back({k, std::move(t), l, c}); };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '\r' || c == ' ' || c == '\t') {
      ++i;
      ++col;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    int l = line, cl = col;
    if (c == '(') { push(Tok::LParen, "(", l, cl); ++i; ++col; continue; }
    if (c == ')') { push(Tok::RParen, ")", l, cl); ++i; ++col; continue; }
    if (c == '.') { push(Tok::Dot, ".", l, cl); ++i; ++col; continue; }
    if (c == '\\') { push(Tok::Lambda, "\\", l, cl); ++i; ++col; continue; }
    if (c == ':') {
      if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::ColonEq, ":=", l, cl); i += 2; col += 2; }
      else { push(Tok::Colon, ":", l, cl); ++i; ++col; }
      continue;
    }
    if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        if (i + 2 < s.size() && s[i + 2] == 'e' && (i + 3 >= s.size() || !ident_char(s[i + 3]))) {
          push(Tok::ArrowE, "->e", l, cl); i += 3; col += 3;
        } else {
          push(Tok::Arrow, "->", l, cl); i += 2; col += 2;
        }
        continue;
      }
      throw ParseExc{"stray '-'", l, cl};
    }
    if (c == '*') {
      if (i + 1 < s.size() && s[i + 1] == 'e' && (i + 2 >= s.size() || !ident_char(s[i + 2]))) {
        push(Tok::StarE, "*e", l, cl); i += 2; col += 2;
      } else {
        push(Tok::Star, "*", l, cl); ++i; ++col;
      }
      continue;
    }
    if (ident_start(c)) {
      size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string w = s.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      if (w == "def") push(Tok::KwDef, w, l, cl);
      else if (w == "postulate") push(Tok::KwPostulate, w, l, cl);
      else if (w == "axiom") push(Tok::KwAxiom, w, l, cl);
      else push(Tok::Ident, w, l, cl);
      continue;
    }
    throw ParseExc{std::string("unexpected character '") + c + "'", l, cl};
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Surface AST

enum class SK : uint8_t { Ident, App, Lam, Binder, Annot };

}  // namespace

struct SExpr {
  SK k;
  std::string name;                    // Ident; Binder variable
  SExpr* a = nullptr;                  // App fun / Binder dom / Annot term / Lam body
  SExpr* b = nullptr;                  // App arg / Binder cod / Annot type
  std::vector<std::string> lam_names;  // Lam binders, outermost first
  bool exo = false;                    // Binder flavor
  bool is_sigma = false;
  int line = 0, col = 0;
};

namespace {

struct Parser {
  const std::vector<Token>& ts;
  size_t pos = 0;
  SurfaceModule* mod;

  const Token& peek(size_t k = 0) const { return ts[std::min(pos + k, ts.size() - 1)]; }
  const Token& next() { return ts[std::min(pos++, ts.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void err(const std::string& expected) {
    const Token& t = peek();
    throw ParseExc{"expected " + expected + ", found '" + (t.kind == Tok::End ? "<eof>" : t.text) + "'",
                   t.line, t.col};
  }

  SExpr* alloc(SK k) {
    mod->arena.push_back(std::make_shared<SExpr>());
    SExpr* e = mod->arena.back().get();
    e->k = k;
    e->line = peek().line;
    e->col = peek().col;
    return e;
  }

  std::string expect_ident(const char* what) {
    if (!at(Tok::Ident)) err(what);
    return next().text;
  }

  // Scans a chain of binder groups "(x y : T) (z : U)" starting at `p`;
  // returns the index just past the chain, or 0 if `p` does not start a
  // well-shaped group. Interior terms are skipped by paren counting.
  size_t scan_binder_chain(size_t p) const {
    size_t q = p;
    bool any = false;
    for (;;) {
      if (ts[q].kind != Tok::LParen) break;
      size_t r = q + 1;
      if (ts[r].kind != Tok::Ident) break;
      while (ts[r].kind == Tok::Ident) ++r;
      if (ts[r].kind != Tok::Colon) break;
      int depth = 1;
      ++r;
      while (depth > 0) {
        if (ts[r].kind == Tok::End) return 0;
        if (ts[r].kind == Tok::LParen) ++depth;
        if (ts[r].kind == Tok::RParen) --depth;
        ++r;
      }
      q = r;
      any = true;
    }
    return any ? q : 0;
  }

  bool binder_chain_before(std::initializer_list<Tok> follow) const {
    size_t q = scan_binder_chain(pos);
    if (q == 0) return false;
    for (Tok f : follow)
      if (ts[q].kind == f) return true;
    return false;
  }

  struct Group {
    std::vector<std::string> names;
    SExpr* type;
  };

  std::vector<Group> parse_binder_groups() {
    std::vector<Group> gs;
    while (at(Tok::LParen) && scan_binder_chain(pos) != 0) {
      next();
      Group g;
      while (at(Tok::Ident)) g.names.push_back(next().text);
      if (!at(Tok::Colon)) err("':' in binder");
      next();
      g.type = parse_term();
      if (!at(Tok::RParen)) err("')'");
      next();
      gs.push_back(std::move(g));
    }
    return gs;
  }

  SExpr* build_binders(const std::vector<Group>& gs, bool sigma, bool exo, SExpr* body) {
    SExpr* acc = body;
    for (auto g = gs.rbegin(); g != gs.rend(); ++g) {
      for (auto n = g->names.rbegin(); n != g->names.rend(); ++n) {
        SExpr* e = alloc(SK::Binder);
        e->name = *n;
        e->a = g->type;
        e->b = acc;
        e->is_sigma = sigma;
        e->exo = exo;
        acc = e;
      }
    }
    return acc;
  }

  SExpr* parse_term() {
    SExpr* e = parse_arrow();
    if (at(Tok::Colon)) {
      next();
      SExpr* ty = parse_arrow();
      SExpr* an = alloc(SK::Annot);
      an->a = e;
      an->b = ty;
      return an;
    }
    return e;
  }

  SExpr* parse_arrow() {
    if (binder_chain_before({Tok::Arrow, Tok::ArrowE})) {
      auto gs = parse_binder_groups();
      bool exo = at(Tok::ArrowE);
      if (!at(Tok::Arrow) && !at(Tok::ArrowE)) err("'->' after binder");
      next();
      SExpr* body = parse_arrow();
      return build_binders(gs, false, exo, body);
    }
    SExpr* left = parse_prod();
    if (at(Tok::Arrow) || at(Tok::ArrowE)) {
      bool exo = at(Tok::ArrowE);
      next();
      SExpr* right = parse_arrow();
      SExpr* e = alloc(SK::Binder);
      e->name = "_";
      e->a = left;
      e->b = right;
      e->exo = exo;
      return e;
    }
    return left;
  }

  SExpr* parse_prod() {
    if (binder_chain_before({Tok::Star, Tok::StarE})) {
      auto gs = parse_binder_groups();
      bool exo = at(Tok::StarE);
      if (!at(Tok::Star) && !at(Tok::StarE)) err("'*' after binder");
      next();
      SExpr* body = parse_prod();
      return build_binders(gs, true, exo, body);
    }
    SExpr* left = parse_app();
    if (at(Tok::Star) || at(Tok::StarE)) {
      bool exo = at(Tok::StarE);
      next();
      SExpr* right = parse_prod();
      SExpr* e = alloc(SK::Binder);
      e->name = "_";
      e->a = left;
      e->b = right;
      e->exo = exo;
      e->is_sigma = true;
      return e;
    }
    return left;
  }

  bool atom_start() const {
    return at(Tok::Ident) || at(Tok::LParen) || at(Tok::Lambda);
  }

  SExpr* parse_app() {
    SExpr* f = parse_atom();
    while (atom_start()) {
      // A '(' that begins a binder chain followed by an arrow or star
      // belongs to an enclosing Pi/Sigma, not to this application.
      if (at(Tok::LParen) &&
          binder_chain_before({Tok::Arrow, Tok::ArrowE, Tok::Star, Tok::StarE}))
        break;
      SExpr* a = parse_atom();
      SExpr* e = alloc(SK::App);
      e->a = f;
      e->b = a;
      e->line = f->line;
      e->col = f->col;
      f = e;
    }
    return f;
  }

  SExpr* parse_atom() {
    if (at(Tok::Ident)) {
      SExpr* e = alloc(SK::Ident);
      e->name = next().text;
      return e;
    }
    if (at(Tok::LParen)) {
      next();
      SExpr* e = parse_term();
      if (!at(Tok::RParen)) err("')'");
      next();
      return e;
    }
    if (at(Tok::Lambda)) {
      SExpr* e = alloc(SK::Lam);
      next();
      while (at(Tok::Ident)) e->lam_names.push_back(next().text);
      if (e->lam_names.empty()) err("binder name after '\\'");
      if (!at(Tok::Dot)) err("'.' after lambda binders");
      next();
      e->a = parse_term();
      return e;
    }
    err("a term");
  }
};

// ---------------------------------------------------------------------------
// Keyword table

struct KwInfo {
  TermKind kind;
  int arity;
};

const std::map<std::string, KwInfo>& keyword_table() {
  static const std::map<std::string, KwInfo> t = {
      {"Nat", {TermKind::Nat, 0}},        {"NatE", {TermKind::NatE, 0}},
      {"Unit", {TermKind::Unit, 0}},      {"UnitE", {TermKind::UnitE, 0}},
      {"Empty", {TermKind::Empty, 0}},    {"EmptyE", {TermKind::EmptyE, 0}},
      {"zero", {TermKind::Zero, 0}},      {"zeroe", {TermKind::ZeroE, 0}},
      {"star", {TermKind::Star, 0}},      {"stare", {TermKind::StarE, 0}},
      {"nil", {TermKind::Nil, 0}},        {"nile", {TermKind::NilE, 0}},
      {"refl", {TermKind::Refl, 0}},      {"refle", {TermKind::ReflE, 0}},
      {"suc", {TermKind::Suc, 1}},        {"suce", {TermKind::SucE, 1}},
      {"fst", {TermKind::Fst, 1}},        {"snd", {TermKind::Snd, 1}},
      {"inl", {TermKind::Inl, 1}},        {"inle", {TermKind::InlE, 1}},
      {"inr", {TermKind::Inr, 1}},        {"inre", {TermKind::InrE, 1}},
      {"leaf", {TermKind::Leaf, 1}},      {"leafe", {TermKind::LeafE, 1}},
      {"List", {TermKind::List, 1}},      {"ListE", {TermKind::ListE, 1}},
      {"pair", {TermKind::Pair, 2}},      {"paire", {TermKind::PairE, 2}},
      {"cons", {TermKind::Cons, 2}},      {"conse", {TermKind::ConsE, 2}},
      {"Sum", {TermKind::Sum, 2}},        {"SumE", {TermKind::SumE, 2}},
      {"Tree", {TermKind::Tree, 2}},      {"TreeE", {TermKind::TreeE, 2}},
      {"emptyelim", {TermKind::EmptyElim, 2}},
      {"emptyelime", {TermKind::EmptyElimE, 2}},
      {"Eq", {TermKind::Id, 3}},          {"EqE", {TermKind::EqE, 3}},
      {"node", {TermKind::Node, 3}},      {"nodee", {TermKind::NodeE, 3}},
      {"unitelim", {TermKind::UnitElim, 3}},
      {"unitelime", {TermKind::UnitElimE, 3}},
      {"natelim", {TermKind::NatElim, 4}},
      {"natelime", {TermKind::NatElimE, 4}},
      {"sumelim", {TermKind::SumElim, 4}},
      {"sumelime", {TermKind::SumElimE, 4}},
      {"listelim", {TermKind::ListElim, 4}},
      {"listelime", {TermKind::ListElimE, 4}},
      {"treeelim", {TermKind::TreeElim, 4}},
      {"treeelime", {TermKind::TreeElimE, 4}},
      {"J", {TermKind::J, 5}},            {"JE", {TermKind::JE, 5}},
  };
  return t;
}

bool universe_keyword(const std::string& w, SortKind* k, int* lvl) {
  if (w.size() == 2 && w[0] == 'U' && w[1] >= '0' && w[1] <= '2') {
    *k = SortKind::Fib;
    *lvl = w[1] - '0';
    return true;
  }
  if (w.size() == 3 && w[0] == 'U' && w[1] == 'e' && w[2] >= '0' && w[2] <= '2') {
    *k = SortKind::Exo;
    *lvl = w[2] - '0';
    return true;
  }
  return false;
}

bool reserved_name(const std::string& w) {
  SortKind k;
  int l;
  return keyword_table().count(w) > 0 || universe_keyword(w, &k, &l) ||
         Kernel::is_axiom_constant_name(w);
}

// ---------------------------------------------------------------------------
// Resolver

struct Resolver {
  const GlobalEnv* env;
  std::vector<std::string> locals;  // innermost last

  [[noreturn]] void err(ErrCode c, const std::string& msg, const SExpr* at) {
    throw ParseExc{msg + "\t" + to_string(c), at ? at->line : 0, at ? at->col : 0};
  }

  TermPtr resolve(const SExpr* e) {
    switch (e->k) {
      case SK::Ident:
        return resolve_ident(e);
      case SK::Annot: {
        TermPtr t = resolve(e->a);
        TermPtr ty = resolve(e->b);
        return mk::annot(t, ty);
      }
      case SK::Lam: {
        size_t n0 = locals.size();
        for (const auto& n : e->lam_names) locals.push_back(n);
        TermPtr body = resolve(e->a);
        locals.resize(n0);
        for (auto it = e->lam_names.rbegin(); it != e->lam_names.rend(); ++it)
          body = mk::lam(*it, body);
        return body;
      }
      case SK::Binder: {
        TermPtr dom = resolve(e->a);
        locals.push_back(e->name);
        TermPtr cod = resolve(e->b);
        locals.pop_back();
        TermKind k = e->is_sigma ? (e->exo ? TermKind::SigmaE : TermKind::Sigma)
                                 : (e->exo ? TermKind::PiE : TermKind::Pi);
        return mk::node(k, {dom, cod}, e->name);
      }
      case SK::App: {
        std::vector<const SExpr*> args;
        const SExpr* h = e;
        while (h->k == SK::App) {
          args.push_back(h->b);
          h = h->a;
        }
        std::reverse(args.begin(), args.end());
        size_t consumed = 0;
        TermPtr head = resolve_head(h, args, &consumed);
        for (size_t i = consumed; i < args.size(); ++i) head = mk::app(head, resolve(args[i]));
        return head;
      }
    }
    throw std::logic_error("resolve: bad node");
  }

  TermPtr resolve_ident(const SExpr* e) {
    size_t dummy = 0;
    return resolve_head(e, {}, &dummy);
  }

  // Resolves a spine head. Keyword heads consume their fixed arity from
  // `args`; under-applied keywords are eta-expanded.
  TermPtr resolve_head(const SExpr* h, const std::vector<const SExpr*>& args, size_t* consumed) {
    *consumed = 0;
    if (h->k != SK::Ident) return resolve(h);
    const std::string& w = h->name;

    SortKind uk;
    int ul;
    if (universe_keyword(w, &uk, &ul)) return mk::univ(uk, ul);

    auto kw = keyword_table().find(w);
    if (kw != keyword_table().end()) {
      const int arity = kw->second.arity;
      const size_t have = std::min<size_t>(arity, args.size());
      std::vector<TermPtr> kids;
      for (size_t i = 0; i < have; ++i) kids.push_back(resolve(args[i]));
      *consumed = have;
      int missing = arity - static_cast<int>(have);
      if (missing == 0) return mk::node(kw->second.kind, std::move(kids));
      // eta-expand: \x1..xm. kw a1^  .. ak^ x1..xm
      for (auto& k : kids) k = shift(k, missing);
      for (int i = missing - 1; i >= 0; --i) kids.push_back(mk::var(i));
      TermPtr t = mk::node(kw->second.kind, std::move(kids));
      for (int i = 0; i < missing; ++i) t = mk::lam("x", t);
      return t;
    }

    if (w != "_") {
      for (size_t i = 0; i < locals.size(); ++i) {
        if (locals[locals.size() - 1 - i] == w) return mk::var(static_cast<int>(i));
      }
    }
    if (Kernel::is_axiom_constant_name(w)) return mk::axiom(w);
    if (env && env->find(w)) return mk::global(w);
    err(ErrCode::ScopeError, "unbound identifier '" + w + "'", h);
  }
};

ErrCode take_code(std::string& msg, ErrCode dflt) {
  // Resolver errors ride on ParseExc; the code is appended after a tab.
  auto p = msg.rfind('\t');
  if (p == std::string::npos) return dflt;
  std::string tail = msg.substr(p + 1);
  msg = msg.substr(0, p);
  for (auto c : {ErrCode::ParseError, ErrCode::ScopeError, ErrCode::TypeMismatch,
                 ErrCode::EliminatorSortError, ErrCode::UniverseError, ErrCode::UnknownAxiom})
    if (tail == to_string(c)) return c;
  return dflt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

SurfaceModule parse_module(const std::string& text) {
  SurfaceModule mod;
  std::vector<Token> ts;
  try {
    ts = tokenize(text);
  } catch (const ParseExc& e) {
    mod.parse_errors.push_back({ErrCode::ParseError, e.msg, e.line, e.col});
    return mod;
  }
  Parser p{ts, 0, &mod};
  while (!p.at(Tok::End)) {
    try {
      SurfaceDecl d;
      d.line = p.peek().line;
      d.col = p.peek().col;
      if (p.at(Tok::KwAxiom)) {
        p.next();
        d.kind = DeclKind::AxiomUse;
        d.name = p.expect_ident("axiom name");
        mod.decls.push_back(d);
        continue;
      }
      if (p.at(Tok::KwDef) || p.at(Tok::KwPostulate)) {
        d.kind = p.at(Tok::KwDef) ? DeclKind::Def : DeclKind::Postulate;
        p.next();
        d.name = p.expect_ident("declaration name");
        if (p.at(Tok::Colon)) {
          p.next();
          d.type = p.parse_arrow();
        }
        if (p.at(Tok::ColonEq)) {
          p.next();
          d.body = p.parse_term();
        }
        if (d.kind == DeclKind::Postulate && d.type == nullptr)
          throw ParseExc{"postulate '" + d.name + "' needs a type", d.line, d.col};
        if (d.kind == DeclKind::Def && d.body == nullptr)
          throw ParseExc{"def '" + d.name + "' needs a body", d.line, d.col};
        mod.decls.push_back(d);
        continue;
      }
      p.err("'def', 'postulate' or 'axiom'");
    } catch (const ParseExc& e) {
      mod.parse_errors.push_back({ErrCode::ParseError, e.msg, e.line, e.col});
      if (!p.at(Tok::End)) p.next();  // always make progress
      while (!p.at(Tok::End) && !p.at(Tok::KwDef) && !p.at(Tok::KwPostulate) && !p.at(Tok::KwAxiom))
        p.next();
    }
  }
  return mod;
}

Declaration resolve_decl(const SurfaceDecl& d, const GlobalEnv& env) {
  Declaration out;
  out.kind = d.kind;
  out.name = d.name;
  out.line = d.line;
  out.col = d.col;
  if (d.kind == DeclKind::AxiomUse) return out;
  if (reserved_name(d.name))
    throw TypeError(ErrCode::ParseError, "'" + d.name + "' is a reserved name");
  Resolver r{&env, {}};
  try {
    if (d.type) out.type = r.resolve(d.type);
    if (d.body) out.body = r.resolve(d.body);
  } catch (const ParseExc& e) {
    std::string msg = e.msg;
    ErrCode code = take_code(msg, ErrCode::ParseError);
    throw TypeError(code, msg + " (line " + std::to_string(e.line) + ", col " +
                              std::to_string(e.col) + ")");
  }
  return out;
}

TermPtr parse_term_in(const std::string& src, const GlobalEnv& env) {
  std::vector<Token> ts = tokenize(src);
  SurfaceModule mod;
  Parser p{ts, 0, &mod};
  SExpr* e = p.parse_term();
  if (!p.at(Tok::End)) p.err("end of input");
  Resolver r{&env, {}};
  try {
    return r.resolve(e);
  } catch (const ParseExc& ex) {
    std::string msg = ex.msg;
    ErrCode code = take_code(msg, ErrCode::ParseError);
    throw TypeError(code, msg);
  }
}

TermPtr parse_closed_term(const std::string& src) {
  static GlobalEnv empty;
  return parse_term_in(src, empty);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

bool uses_var(const TermPtr& t, int ix) {
  switch (t->kind) {
    case TermKind::Var:
      return t->num == ix;
    case TermKind::Univ:
    case TermKind::Global:
    case TermKind::Axiom:
      return false;
    default:
      break;
  }
  for (size_t i = 0; i < t->kids.size(); ++i)
    if (uses_var(t->kids[i], ix + child_binder_depth(t->kind, i))) return true;
  return false;
}

const char* keyword_for(TermKind k) {
  for (const auto& [w, info] : keyword_table())
    if (info.kind == k) return w.c_str();
  return nullptr;
}

struct Printer {
  std::vector<std::string> names;

  std::string fresh(const std::string& hint, bool used) {
    if (!used) return "_";
    std::string base = (hint.empty() || hint == "_") ? "x" : hint;
    std::string cand = base;
    while (std::find(names.begin(), names.end(), cand) != names.end() || reserved_name(cand))
      cand += "'";
    return cand;
  }

  // prec: 0 = term, 1 = arrow, 2 = prod, 3 = app, 4 = atom
  std::string go(const TermPtr& t, int prec) {
    switch (t->kind) {
      case TermKind::Var: {
        size_t ix = static_cast<size_t>(t->num);
        if (ix < names.size()) return names[names.size() - 1 - ix];
        return "#" + std::to_string(t->num);
      }
      case TermKind::Univ:
        return (t->usort == SortKind::Fib ? "U" : "Ue") + std::to_string(t->num);
      case TermKind::Global:
      case TermKind::Axiom:
        return t->name;
      case TermKind::Annot:
        return wrap(prec, 0, go(t->kids[0], 1) + " : " + go(t->kids[1], 1));
      case TermKind::Lam: {
        std::vector<std::string> bound;
        TermPtr body = t;
        std::string head = "\\";
        while (body->kind == TermKind::Lam) {
          std::string n = fresh(body->name, uses_var(body->kids[0], 0));
          if (n == "_") n = fresh("x", true);
          head += (bound.empty() ? "" : " ") + n;
          bound.push_back(n);
          names.push_back(n);
          body = body->kids[0];
        }
        std::string s = head + ". " + go(body, 0);
        names.resize(names.size() - bound.size());
        return wrap(prec, 0, s);
      }
      case TermKind::Pi:
      case TermKind::PiE:
      case TermKind::Sigma:
      case TermKind::SigmaE: {
        bool sigma = t->kind == TermKind::Sigma || t->kind == TermKind::SigmaE;
        bool exo = t->kind == TermKind::PiE || t->kind == TermKind::SigmaE;
        const char* op = sigma ? (exo ? " *e " : " * ") : (exo ? " ->e " : " -> ");
        int level = sigma ? 2 : 1;
        bool dep = uses_var(t->kids[1], 0);
        std::string s;
        if (dep) {
          std::string n = fresh(t->name, true);
          s = "(" + n + " : " + go(t->kids[0], 0) + ")" + op;
          names.push_back(n);
          s += go(t->kids[1], level);
          names.pop_back();
        } else {
          s = go(t->kids[0], level + 1) + op;
          names.push_back("_");
          s += go(t->kids[1], level);
          names.pop_back();
        }
        return wrap(prec, level, s);
      }
      case TermKind::App: {
        std::string s = go(t->kids[0], 3) + " " + go(t->kids[1], 4);
        return wrap(prec, 3, s);
      }
      default: {
        const char* kw = keyword_for(t->kind);
        if (!kw) throw std::logic_error("print: unhandled kind");
        if (t->kids.empty()) return kw;
        std::string s = kw;
        for (const auto& k : t->kids) s += " " + go(k, 4);
        return wrap(prec, 3, s);
      }
    }
  }

  static std::string wrap(int prec, int level, std::string s) {
    if (prec > level) return "(" + std::move(s) + ")";
    return s;
  }
};

}  // namespace

std::string print_term(const TermPtr& t) {
  Printer p;
  return p.go(t, 0);
}

std::string print_term_in_ctx(const TermPtr& t, const std::vector<std::string>& names) {
  Printer p;
  p.names = names;
  return p.go(t, 0);
}

// ---------------------------------------------------------------------------
// Whole-file checking

ModuleReport check_source(const std::string& file, const std::string& text, GlobalEnv& env,
                          const AxiomRegistry& axioms) {
  auto t0 = std::chrono::steady_clock::now();
  ModuleReport rep;
  rep.file = file;

  SurfaceModule mod = parse_module(text);
  for (const auto& pe : mod.parse_errors) {
    DeclOutcome out;
    out.name = "<parse>";
    out.accepted = false;
    out.error = pe.code;
    out.message = pe.message;
    out.line = pe.line;
    out.col = pe.col;
    rep.decls.push_back(std::move(out));
  }

  for (const auto& sd : mod.decls) {
    DeclOutcome out;
    out.name = sd.name;
    out.line = sd.line;
    out.col = sd.col;
    try {
      Declaration d = resolve_decl(sd, env);
      ModuleReport one = check_module(file, {d}, env, axioms);
      out = one.decls.at(0);
      out.line = sd.line;
      out.col = sd.col;
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
