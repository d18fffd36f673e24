#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstrukt/butterfly.hpp"
#include "obstrukt/cohomology.hpp"
#include "obstrukt/fingroup.hpp"
#include "obstrukt/xmod.hpp"

namespace obk {

// Factor system for an extension of C by a (possibly nonabelian) kernel K:
// a normalized lift C -> Aut(K) and a normalized set map C x C -> K whose
// induced multiplication on K x C is a group.
struct FactorSystem {
  FiniteGroup c, k;
  std::vector<Idx> lift;  // lift[x] = index into aut_eval of structure_of(K)
  std::vector<Idx> fset;  // fset[x*|C|+y] in K, normalized

  Idx fs(Idx x, Idx y) const { return fset[static_cast<size_t>(x) * c.order + y]; }
};

struct AbstractKernel {
  FiniteGroup c, k;
  GroupStructureReport k_structure;
  Homomorphism psi0;  // C -> Out(K)
};

AbstractKernel make_abstract_kernel(const FiniteGroup& c, const FiniteGroup& k,
                                    const std::vector<Idx>& psi0_images, long long budget = 0);

// The two factor-system identities, checked directly.
bool factor_system_conditions(const FactorSystem& fs, const GroupStructureReport& kst);
// The oracle: the induced K x C multiplication table, validated as a group.
FiniteGroup group_of_factor_system(const FactorSystem& fs, const GroupStructureReport& kst);

// Non-abelian extension data induced by a factor system.
struct NonabelianExtension {
  FiniteGroup k, e, c;
  Homomorphism kmap;  // K -> E
  Homomorphism fmap;  // E -> C
};
NonabelianExtension ext_of_factor_system(const FactorSystem& fs, const GroupStructureReport& kst);

// Equivalence: an isomorphism of the induced extensions fixing K pointwise
// and inducing the identity on C (a re-sectioning h: C -> K).
bool factor_systems_equivalent(const FactorSystem& a, const FactorSystem& b,
                               const GroupStructureReport& kst);

// The canonical faithful crossed extension Z(K) -> K -> Aut(K) -> Out(K).
CrossedExtension canonical_faithful_xext(const FiniteGroup& k, long long budget = 0);
// The canonical action of Out(K) on Z(K).
AbelianAction canonical_center_action(const GroupStructureReport& kst, const FiniteGroup& k);

// All equivalence classes of extensions inducing psi0, as canonical
// factor-system representatives in lexicographic order.
std::vector<FactorSystem> ext_classes(const AbstractKernel& ak, long long budget = 0);

struct Obstruction {
  Cochain cocycle;  // omega_K . (psi0 x psi0 x psi0) over (C, Z(K), psi0^* zeta_K)
  bool vanishes = false;
};
Obstruction obstruction_class(const AbstractKernel& ak, long long budget = 0);

struct SMLReport {
  bool obstruction_vanishes = false;
  std::vector<FactorSystem> ext_classes;
  CohomologyGroup h2;  // H^2(C, Z(K), psi0^* zeta_K)
  bool counts_match = false;    // |classes| = |H^2| when nonempty
  bool torsor_verified = false; // central Z^2 action simply transitive on classes
  std::string violation;        // nonempty when something failed
};

SMLReport sml_report(const AbstractKernel& ak, long long budget = 0);

}  // namespace obk
