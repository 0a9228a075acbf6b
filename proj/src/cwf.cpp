#include "tltt/cwf.hpp"
namespace tltt::cwf {
namespace { [[noreturn]] void nyi() { throw CwfError("not yet implemented"); } }
std::string Code::str() const { nyi(); }
Code atom(int64_t n) { Code c; c.atom = n; return c; }
Code tup(std::vector<Code> kids) { Code c; c.atom = -1; c.kids = std::move(kids); return c; }
Code tag(std::string t, std::vector<Code> kids) { Code c; c.atom = -1; c.tag = std::move(t); c.kids = std::move(kids); return c; }
const FinCategory::Arrow& FinCategory::arrow(const std::string&) const { nyi(); }
bool FinCategory::has_arrow(const std::string&) const { nyi(); }
std::string FinCategory::compose(const std::string&, const std::string&) const { nyi(); }
std::vector<std::string> FinCategory::homs(const std::string&, const std::string&) const { nyi(); }
std::optional<std::string> validate_category(const FinCategory&) { nyi(); }
Code Presheaf::rest(const std::string&, const Code&) const { nyi(); }
std::optional<std::string> validate_presheaf(const Presheaf&) { nyi(); }
const FinSet& DepType::fiber(const std::string&, const Code&) const { nyi(); }
Code DepType::rest(const std::string&, const Code&, const Code&) const { nyi(); }
std::optional<std::string> validate_deptype(const DepType&) { nyi(); }
std::optional<std::string> validate_term(const Presheaf&, const DepType&, const TermFamily&) { nyi(); }
std::optional<std::string> validate_morphism(const Presheaf&, const Presheaf&, const Morphism&) { nyi(); }
FinCategory elements_category(const Presheaf&) { nyi(); }
Presheaf terminal_presheaf(const FinCategory&) { nyi(); }
Presheaf representable(const FinCategory&, const std::string&) { nyi(); }
Extension ctx_extend(const Presheaf&, const DepType&) { nyi(); }
DepType ty_subst(const DepType&, const Presheaf&, const Morphism&) { nyi(); }
TermFamily tm_subst(const TermFamily&, const Presheaf&, const Morphism&) { nyi(); }
Morphism compose(const Presheaf&, const Presheaf&, const Presheaf&, const Morphism&, const Morphism&) { nyi(); }
std::vector<Morphism> enumerate_morphisms(const Presheaf&, const Presheaf&, size_t) { nyi(); }
std::vector<TermFamily> enumerate_terms(const Presheaf&, const DepType&, size_t) { nyi(); }
Morphism extension_factor(const Presheaf&, const Presheaf&, const DepType&, const Extension&, const Morphism&, const TermFamily&) { nyi(); }
SigmaPlus sigma_plus(const Presheaf&, const Presheaf&, const Morphism&, const DepType&) { nyi(); }
DepType pi(const Presheaf&, const DepType&, const Extension&, const DepType&, size_t) { nyi(); }
DepType sigma(const Presheaf&, const DepType&, const Extension&, const DepType&) { nyi(); }
DepType eq(const Presheaf&, const DepType&, const Extension&, const Extension&) { nyi(); }
DepType nat_bounded(const FinCategory&, const Presheaf&, int) { nyi(); }
uint64_t count_dependent_functions(const std::vector<uint64_t>&) { nyi(); }
void check_cwf_laws_instance(const Presheaf&, const DepType&, LawReport&, const LawCaps&, std::mt19937_64&) { nyi(); }
LawReport check_cwf_laws(uint64_t, int, const LawCaps&, int) { nyi(); }
FinCategory random_category(std::mt19937_64&, const LawCaps&) { nyi(); }
Presheaf random_presheaf(const FinCategory&, std::mt19937_64&, int) { nyi(); }
DepType random_deptype(const Presheaf&, std::mt19937_64&, int, int) { nyi(); }
SpecFile load_spec_file(const std::string&) { nyi(); }
}
