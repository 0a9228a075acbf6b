#include "tltt/twolevel.hpp"
namespace tltt::twolevel {
namespace { [[noreturn]] void nyi() { throw cwf::CwfError("not yet implemented"); } }
FamSetCwF::Ty FamSetCwF::ty_subst(const Ty&, const std::map<Code, Code>&) { nyi(); }
FamSetCwF::Tm FamSetCwF::tm_subst(const Tm&, const std::map<Code, Code>&) { nyi(); }
FamSetCwF::Ctx FamSetCwF::extend(const Ctx&, const Ty&) { nyi(); }
std::vector<FamSetCwF::Tm> FamSetCwF::all_terms(const Ctx&, const Ty&) { nyi(); }
uint64_t FamSetCwF::term_count(const Ctx&, const Ty&) { nyi(); }
FamSetCwF::Ty FamSetCwF::pi(const Ctx&, const Ty&, const Ty&) { nyi(); }
FamSetCwF::Ty FamSetCwF::sigma(const Ctx&, const Ty&, const Ty&) { nyi(); }
FamSetCwF::Ty FamSetCwF::eq(const Ctx&, const Ty&, const Tm&, const Tm&) { nyi(); }
FamSetCwF::Ty FamSetCwF::nat_bounded(const Ctx&, int) { nyi(); }
FamSetCwF::Ty FamSetCwF::contractible_part(const Ty&) { nyi(); }
FamSetCwF::Ty FamSetCwF::omega(const Ctx&, const std::vector<Ty>&) { nyi(); }
std::vector<FamSetCwF::Tm> FamSetCwF::phi(const Ctx&, const std::vector<Ty>&, const Tm&) { nyi(); }
FamSetCwF::Tm FamSetCwF::psi(const Ctx&, const std::vector<Ty>&, const std::vector<Tm>&) { nyi(); }
std::string CofibReport::to_json() const { nyi(); }
std::optional<std::string> validate_famset_cwf(int, int) { nyi(); }
std::optional<std::string> check_omega_instance(const FamSetCwF::Ctx&, const std::vector<FamSetCwF::Ty>&) { nyi(); }
CofibReport verify_cofibrant_exonat(int, int, int, int, uint64_t, bool) { nyi(); }
}
