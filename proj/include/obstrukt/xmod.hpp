#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstrukt/cohomology.hpp"
#include "obstrukt/fingroup.hpp"

namespace obk {

// A crossed module: boundary G2 -> G1 plus an action of G1 on G2 by
// automorphisms, satisfying equivariance and the Peiffer identity.
struct CrossedModule {
  FiniteGroup g2, g1;
  Homomorphism boundary;  // G2 -> G1
  std::vector<Idx> act;   // act[g1*|G2|+g2]

  Idx act_on(Idx a1, Idx a2) const { return act[static_cast<size_t>(a1) * g2.order + a2]; }
};

CrossedModule validate_xmod(const Homomorphism& boundary, const std::vector<Idx>& act);

// 0 -> B -j-> G2 -d-> G1 -p-> C -> 1 with d a crossed module.
struct CrossedExtension {
  CrossedModule xm;
  FiniteGroup b, c;
  Homomorphism j;  // B -> G2, kernel of the boundary
  Homomorphism p;  // G1 -> C, cokernel of the boundary

  Idx j_preimage(Idx g2) const;  // -1 when not in j(B)
  Idx section(Idx x) const;      // smallest-index p-preimage, s(0) = 0
};

CrossedExtension validate_xext(const CrossedModule& xm, const FiniteGroup& b, const FiniteGroup& c,
                               const Homomorphism& j, const Homomorphism& p);
// Canonical kernel/cokernel choice for a crossed module.
CrossedExtension xext_of_xmod(const CrossedModule& xm);
// The zero crossed extension B -1-> B -0-> C -1-> C of a module.
CrossedExtension zero_xext(const AbelianAction& module);

// The induced C-module structure on B (the functor Pi).
AbelianAction pi(const CrossedExtension& x);

struct XExtMorphism {
  Homomorphism gamma;  // C -> C'
  Homomorphism f1;     // G1 -> G1'
  Homomorphism f2;     // G2 -> G2'
  Homomorphism beta;   // B -> B'
};

// Builds the induced (gamma, beta) from (f1, f2) and checks all squares.
XExtMorphism make_xext_morphism(const CrossedExtension& x, const CrossedExtension& xp,
                                const Homomorphism& f1, const Homomorphism& f2);
XExtMorphism identity_xext_morphism(const CrossedExtension& x);
XExtMorphism compose_xext_morphisms(const XExtMorphism& outer, const XExtMorphism& inner);

// All crossed-extension morphisms x -> xp, ordered by (f1, f2) image tuples.
std::vector<XExtMorphism> enumerate_xext_morphisms(const CrossedExtension& x,
                                                   const CrossedExtension& xp,
                                                   long long budget = 0);

struct MorphismClass {
  bool weak_equivalence = false;  // pi0 and pi1 isomorphisms
  bool final_morphism = false;    // pi0 iso, pi1 surjective
  bool discrete_fibration = false;  // f2 iso
};

MorphismClass morphism_class(const XExtMorphism& m);

// The degree-3 cocycle of a crossed extension over pi(x), built from the
// canonical section and canonical factor lift.
Cochain three_cocycle_of(const CrossedExtension& x);
// Test hook: same construction with caller-chosen section s and lift m.
Cochain three_cocycle_with_choices(const CrossedExtension& x, const std::vector<Idx>& s,
                                   const std::vector<Idx>& m);

struct XExtTransport {
  CrossedExtension pushforward;  // phi_* X  (B replaced by B')
  CrossedExtension pullback;     // phi0^* X' (G1' replaced by G1' x_{C'} C)
};
XExtTransport transport_xext(const CrossedExtension& x, const CrossedExtension& xp,
                             const Homomorphism& phi0, const Homomorphism& phi);

}  // namespace obk
