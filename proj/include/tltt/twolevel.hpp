// Two-level structure: the finite-families base CwF, the presheaf two-level
// CwF over it, semantic cofibrancy of bounded exo-nat, and the bounded
// verification of the cofibrant-exo-nat theorem.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tltt/cwf.hpp"

namespace tltt::twolevel {

using cwf::Code;
using cwf::FinSet;

// The finite-families CwF: contexts are finite sets, a type over G assigns
// each point a fiber size in {1..s}, terms are sections (choices of a fiber
// element per point), context extension is disjoint union.
struct FamSetCwF {
  int size_bound = 2;

  using Ctx = FinSet;
  // A type is a map point -> size (1..size_bound).
  using Ty = std::map<Code, int>;
  // A term/section is a map point -> chosen element (< size at that point).
  using Tm = std::map<Code, int>;

  static Ty ty_subst(const Ty& A, const std::map<Code, Code>& sigma);
  static Tm tm_subst(const Tm& a, const std::map<Code, Code>& sigma);

  // Extension G.A as a set of pair codes (x, i).
  static Ctx extend(const Ctx& G, const Ty& A);

  static std::vector<Tm> all_terms(const Ctx& G, const Ty& A);
  static uint64_t term_count(const Ctx& G, const Ty& A);

  // Pointwise formers.
  static Ty pi(const Ctx& G, const Ty& A, const Ty& B_over_ext);
  static Ty sigma(const Ctx& G, const Ty& A, const Ty& B_over_ext);
  static Ty eq(const Ctx& G, const Ty& A, const Tm& a, const Tm& b);
  static Ty nat_bounded(const Ctx& G, int k);
  static Ty contractible_part(const Ty& A);  // isContr(A) pointwise: 1 iff size 1

  // Exo-nat products at bound k: the pointwise product of the k sizes.
  static Ty omega(const Ctx& G, const std::vector<Ty>& Y);

  // Explicit mutually inverse maps for clause 1 of the product property:
  // phi : Tm(G, Omega(Y)) -> tuple of Tm(G, Y_a); psi inverts. Encoded by
  // mixed-radix digits at each point.
  static std::vector<Tm> phi(const Ctx& G, const std::vector<Ty>& Y, const Tm& t);
  static Tm psi(const Ctx& G, const std::vector<Ty>& Y, const std::vector<Tm>& parts);
};

// Verification report, JSON-serializable.
struct CofibReport {
  int bound = 0;
  int size_cap = 0;
  int ctx_cap = 0;
  int trials = 0;
  bool ty_iso = true;
  bool contractibility = true;
  bool naturality_fig4 = true;
  bool naturality_fig5 = true;
  std::vector<std::string> witnesses;
  bool ok() const {
    return ty_iso && contractibility && naturality_fig4 && naturality_fig5 && witnesses.empty();
  }
  std::string to_json() const;
};

// Checks the base CwF laws and the Omega product property by enumeration.
std::optional<std::string> validate_famset_cwf(int size_bound, int max_ctx);

// Checks Tm(G, Omega(Y)) against the categorical product at one instance.
std::optional<std::string> check_omega_instance(const FamSetCwF::Ctx& G,
                                                const std::vector<FamSetCwF::Ty>& Y);

// Bounded Theorem-5.2 run: builds the presheaf two-level structure over the
// small full subcategory of contexts of size <= ctx_cap, forms Theta^Ty and
// Theta^Tm for bounded exo-nat, and verifies the iso, contractibility
// transfer, and both naturality diagrams on `trials` sampled inputs.
// `mutate_theta` reindexes Theta at one object to confirm the harness
// detects a non-natural variant.
CofibReport verify_cofibrant_exonat(int bound, int size_cap, int ctx_cap, int trials,
                                    uint64_t seed, bool mutate_theta = false);

}  // namespace tltt::twolevel
