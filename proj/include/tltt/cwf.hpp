// Finite presheaf categories with families: base categories, presheaves,
// the category of elements, context extension with its universal property,
// Pi/Sigma/Eq/Nat formers, and exhaustive law checking.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tltt::cwf {

// Canonical element code: an atom or a tagged tuple. Total ordering makes
// every set and map in the engine deterministic.
struct Code {
  int64_t atom = 0;
  std::string tag;
  std::vector<Code> kids;

  friend bool operator==(const Code& a, const Code& b) {
    return a.atom == b.atom && a.tag == b.tag && a.kids == b.kids;
  }
  friend bool operator<(const Code& a, const Code& b) {
    if (a.atom != b.atom) return a.atom < b.atom;
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.kids < b.kids;
  }
  std::string str() const;
};

Code atom(int64_t n);
Code tup(std::vector<Code> kids);
Code tag(std::string t, std::vector<Code> kids);

using FinSet = std::set<Code>;
using FinFun = std::map<Code, Code>;

struct CwfError : std::runtime_error {
  explicit CwfError(const std::string& m) : std::runtime_error(m) {}
};

struct FinCategory {
  struct Arrow {
    std::string id, src, dst;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;                                  // identities included
  std::map<std::string, std::string> identity;                // obj -> arrow id
  std::map<std::pair<std::string, std::string>, std::string> comp;  // (g,f) -> g.f

  const Arrow& arrow(const std::string& id) const;
  bool has_arrow(const std::string& id) const;
  // g after f; f : a -> b, g : b -> c.
  std::string compose(const std::string& g, const std::string& f) const;
  std::vector<std::string> homs(const std::string& src, const std::string& dst) const;
};

// nullopt when all laws hold; otherwise the first violated law with witnesses.
std::optional<std::string> validate_category(const FinCategory& C);

struct Presheaf {
  const FinCategory* C = nullptr;
  std::map<std::string, FinSet> at;                  // object -> elements
  std::map<std::string, FinFun> restr;               // arrow -> (P(dst) -> P(src))

  const FinSet& fiber(const std::string& obj) const { return at.at(obj); }
  Code rest(const std::string& arrow, const Code& x) const;
};

std::optional<std::string> validate_presheaf(const Presheaf& P);

// A presheaf over the category of elements of P.
struct DepType {
  const Presheaf* base = nullptr;
  std::map<std::pair<std::string, Code>, FinSet> at;  // (obj, x in P(obj)) -> fiber
  // (arrow tau : D -> G, x in P(G)) -> map A(G,x) -> A(D, x[tau])
  std::map<std::pair<std::string, Code>, FinFun> restr_by_arrow_x;

  const FinSet& fiber(const std::string& obj, const Code& x) const;
  Code rest(const std::string& arrow, const Code& x, const Code& a) const;
};

std::optional<std::string> validate_deptype(const DepType& A);

// An element of Tm(P, A): a dependent, natural choice of fiber elements.
struct TermFamily {
  std::map<std::pair<std::string, Code>, Code> at;
  Code operator()(const std::string& obj, const Code& x) const { return at.at({obj, x}); }
};

std::optional<std::string> validate_term(const Presheaf& P, const DepType& A,
                                         const TermFamily& a);

// Natural transformation Q -> P.
struct Morphism {
  std::map<std::pair<std::string, Code>, Code> at;
  Code operator()(const std::string& obj, const Code& q) const { return at.at({obj, q}); }
};

std::optional<std::string> validate_morphism(const Presheaf& Q, const Presheaf& P,
                                             const Morphism& f);

FinCategory elements_category(const Presheaf& P);

Presheaf terminal_presheaf(const FinCategory& C);
Presheaf representable(const FinCategory& C, const std::string& obj);

struct Extension {
  Presheaf ext;       // P.A
  Morphism proj;      // p_A : P.A -> P
  TermFamily q;       // q_A in Tm(P.A, A[p_A])
};

Extension ctx_extend(const Presheaf& P, const DepType& A);

DepType ty_subst(const DepType& A, const Presheaf& Q, const Morphism& sigma);
TermFamily tm_subst(const TermFamily& a, const Presheaf& Q, const Morphism& sigma);
Morphism compose(const Presheaf& A, const Presheaf& B, const Presheaf& C, const Morphism& g,
                 const Morphism& f);  // g after f, f : A -> B, g : B -> C

// All natural transformations Q -> P (size-capped; throws CwfError on blowup).
std::vector<Morphism> enumerate_morphisms(const Presheaf& Q, const Presheaf& P,
                                          size_t cap = 2000000);

std::vector<TermFamily> enumerate_terms(const Presheaf& P, const DepType& A,
                                        size_t cap = 2000000);

// theta with p_A . theta = tau and q_A[theta] = b; existence is constructive.
Morphism extension_factor(const Presheaf& Q, const Presheaf& P, const DepType& A,
                          const Extension& PA, const Morphism& tau, const TermFamily& b);

// sigma^+ : D.A[sigma] -> G.A over sigma, plus the pullback square check by
// cone enumeration from representables; returns nullopt if the square is a
// pullback, else a witness description.
struct SigmaPlus {
  Morphism map;
  std::optional<std::string> pullback_failure;
};
SigmaPlus sigma_plus(const Presheaf& Delta, const Presheaf& Gamma, const Morphism& sigma,
                     const DepType& A);

DepType pi(const Presheaf& P, const DepType& A, const Extension& PA, const DepType& B,
           size_t cap = 500000);
DepType sigma(const Presheaf& P, const DepType& A, const Extension& PA, const DepType& B);
// Eq_A over P.A.A[p_A].
DepType eq(const Presheaf& P, const DepType& A, const Extension& PA, const Extension& PAA);
// Bounded natural-number type over the terminal presheaf: constant {0..k-1}.
DepType nat_bounded(const FinCategory& C, const Presheaf& terminal, int k);

// Dependent products/sums/equality over the trivial category reduce to
// plain finite-set arithmetic; exposed for the counting cross-checks.
uint64_t count_dependent_functions(const std::vector<uint64_t>& fiber_sizes_by_point);

struct LawReport {
  int instances = 0;
  int laws_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct LawCaps {
  int max_objects = 3;
  int max_nonid_arrows = 6;
  int max_fiber = 3;
  size_t enum_cap = 200000;
};

// Runs every displayed equation of the type-former blocks on one instance
// built over (C, P, A, B, tau); records failures with law names.
void check_cwf_laws_instance(const Presheaf& P, const DepType& A, LawReport& rep,
                             const LawCaps& caps, std::mt19937_64& rng);

// Randomized harness over generated categories/presheaves; `mutate` selects
// a seeded defect (0 = none) and the report must then contain a failure.
LawReport check_cwf_laws(uint64_t seed, int trials, const LawCaps& caps, int mutate = 0);

// Random generators (shared with the two-level harness).
FinCategory random_category(std::mt19937_64& rng, const LawCaps& caps);
Presheaf random_presheaf(const FinCategory& C, std::mt19937_64& rng, int max_fiber);
DepType random_deptype(const Presheaf& P, std::mt19937_64& rng, int max_fiber,
                       int min_fiber = 0);

// JSON spec-file loader: {objects, arrows:[{id,src,dst}], compose:[[g,f,gf]],
// presheaf:{at:{obj:[codes]}, restrict:{arrow:{code:code}}}}.
struct SpecFile {
  FinCategory category;
  std::optional<Presheaf> presheaf;
};
SpecFile load_spec_file(const std::string& path);

}  // namespace tltt::cwf
