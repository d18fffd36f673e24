#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstrukt/cohomology.hpp"
#include "obstrukt/fingroup.hpp"

namespace obk {

// Extension of C by an abelian kernel B:  0 -> B -k-> E -f-> C -> 1.
struct Extension {
  FiniteGroup b, e, c;
  Homomorphism k;  // injective, image = ker f
  Homomorphism f;  // surjective

  Idx section(Idx x) const;            // smallest-index preimage, s(0) = 0
  Idx kernel_preimage(Idx eidx) const; // k^-1 on im(k), -1 elsewhere
  AbelianAction induced_action() const;
};

Extension validate_extension(const FiniteGroup& b, const FiniteGroup& e, const FiniteGroup& c,
                             const Homomorphism& k, const Homomorphism& f);

struct ExtensionMorphism {
  Homomorphism phi1;  // B -> B'
  Homomorphism mid;   // E -> E'
  Homomorphism phi0;  // C -> C'
};

ExtensionMorphism validate_extension_morphism(const Extension& e, const Extension& ep,
                                              const Homomorphism& phi1, const Homomorphism& mid,
                                              const Homomorphism& phi0);

// E = B x C with (b,x)(b',y) = (b + x.b' + eps(x,y), xy); index = b*|C| + x.
Extension ext_of_cocycle(const AbelianAction& action, const Cochain& eps);
Extension split_extension(const AbelianAction& action);

struct ExtCocycle {
  AbelianAction action;
  Cochain eps;
};
ExtCocycle cocycle_of_ext(const Extension& e);
// Test hook: same construction with a caller-chosen section.
ExtCocycle cocycle_of_ext_with_section(const Extension& e, const std::vector<Idx>& section);

struct TransportResult {
  Extension pushforward;  // phi1_* E,  over (C, B', phi0^* xi')
  Extension pullback;     // phi0^* E', over (C, B', phi0^* xi')
};
TransportResult transport(const Extension& e, const Extension& ep, const Homomorphism& phi0,
                          const Homomorphism& phi1);

Extension baer_sum(const Extension& e1, const Extension& e2);

// All group homomorphisms E -> E' commuting with (phi0, phi1).
std::vector<Homomorphism> extension_homset(const Extension& e, const Extension& ep,
                                           const Homomorphism& phi0, const Homomorphism& phi1,
                                           long long budget = 0);

// Raw oracle: fibre isomorphism search by brute force over homs.
std::optional<Homomorphism> find_fibre_iso_raw(const Extension& e1, const Extension& e2,
                                               long long budget = 0);

struct ClassificationReport {
  Extension pushforward_ext, pullback_ext;
  std::optional<ExtensionMorphism> fibre_iso;  // pushforward -> pullback over identities
  std::vector<ExtensionMorphism> homset;       // morphisms E -> E' over (phi0, phi1)
  std::vector<Cochain> z1;                     // crossed homomorphisms C -> B'
  std::vector<std::vector<int>> action_table;  // action_table[t][h] = index of t*h
  bool cocycle_criterion = false;              // [phi1.eps] = [eps'.(phi0 x phi0)]
  TorsorVerdict verdict = TorsorVerdict::Violation;
  std::string violation;
};

ClassificationReport classify(const Extension& e, const Extension& ep, const Homomorphism& phi0,
                              const Homomorphism& phi1, long long budget = 0);

}  // namespace obk
