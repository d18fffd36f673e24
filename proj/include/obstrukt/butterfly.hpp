#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstrukt/cohomology.hpp"
#include "obstrukt/xmod.hpp"

namespace obk {

// The five-group diagram of a butterfly src -> dst: wings kappa, iota and
// legs delta, gamma, with (delta, iota) short exact.
struct Butterfly {
  CrossedExtension src;  // X, on H2 -> H1
  CrossedExtension dst;  // X', on G2 -> G1
  FiniteGroup e;
  Homomorphism kappa;  // H2 -> E
  Homomorphism iota;   // G2 -> E
  Homomorphism delta;  // E -> H1
  Homomorphism gamma;  // E -> G1
};

struct ButterflyFlags {
  bool representable = false;  // delta split by a homomorphism
  bool flippable = false;      // (gamma, kappa) also short exact
};

Butterfly validate_butterfly(const CrossedExtension& src, const CrossedExtension& dst,
                             const FiniteGroup& e, const Homomorphism& kappa,
                             const Homomorphism& iota, const Homomorphism& delta,
                             const Homomorphism& gamma);

ButterflyFlags butterfly_flags(const Butterfly& b, long long budget = 0);

// The representable butterfly of a crossed-extension morphism; E is the
// pullback of the associated groupoid's domain map along f1, realized on
// the carrier H1 x G2' with delta split epic by construction.
Butterfly from_morphism(const CrossedExtension& src, const CrossedExtension& dst,
                        const XExtMorphism& m);
Butterfly identity_butterfly(const CrossedExtension& x);

// Swaps the two crossed modules; only defined for flippable butterflies.
Butterfly flip(const Butterfly& b);

struct ButterflySpan {
  CrossedExtension middle;  // on H2 x G2 -> E
  XExtMorphism left;        // middle -> src, a weak equivalence
  XExtMorphism right;       // middle -> dst
};
ButterflySpan span_of(const Butterfly& b);

// Composite butterfly (b2 after b1): quotient of the pullback E x_{G1} E'
// by the diagonal image of the shared top group.
Butterfly compose_butterflies(const Butterfly& b2, const Butterfly& b1);

struct ModuleMorphismPair {
  Homomorphism phi0;  // C -> C'
  Homomorphism phi;   // B -> B'
};

// P on arrows: descend gamma/delta to the cokernels and match the kernels
// through the butterfly's antidiagonal.
ModuleMorphismPair project(const Butterfly& b);

// Two-cell search: an iso E -> E' commuting with both wings and both legs.
std::optional<Homomorphism> find_two_cell(const Butterfly& a, const Butterfly& b,
                                          long long budget = 0);
bool butterflies_isomorphic(const Butterfly& a, const Butterfly& b, long long budget = 0);

std::string serialize_butterfly_data(const Butterfly& b);  // canonical ordering key

struct WeakHomReport {
  std::vector<Butterfly> classes;  // canonical representatives, sorted
  long long h2_order = 0;          // |H^2(C, B', phi0^* xi')|
  bool cocycle_criterion = false;  // [phi.eps] = [eps'.(phi0 x phi0 x phi0)]
  bool count_matches = false;      // |classes| in {0, h2_order}
  bool existence_matches = false;  // nonempty iff cocycle_criterion
  long long gamma_class_count = -1;  // auto-classes of phi0^* X' when requested
};

// Iso-classes of butterflies over (phi0, phi), enumerated through nonabelian
// factor systems on the canonical carrier G2' x H1 and deduplicated by
// two-cell search; cross-checked against H^2 and the 3-cocycle criterion.
WeakHomReport weak_hom_set(const CrossedExtension& x, const CrossedExtension& xp,
                           const Homomorphism& phi0, const Homomorphism& phi,
                           long long budget = 0, bool with_gamma_check = false);

}  // namespace obk
