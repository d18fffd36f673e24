#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "obstrukt/fingroup.hpp"
#include "obstrukt/lattice.hpp"

namespace obk {

// Invariant-factor decomposition of a finite abelian group, with coordinate
// tables in both directions. Factors d1 | d2 | ... are all > 1.
struct AbelianDecomp {
  FiniteGroup group;
  std::vector<Int> factors;
  std::vector<Idx> generators;             // one element per factor
  std::vector<std::vector<Int>> coords;    // coords[elem], entries in [0, d_i)
  std::map<std::vector<Int>, Idx> lookup;  // coords -> element

  Idx elem_of(std::vector<Int> c) const;   // reduces mod factors first
};

AbelianDecomp abelian_decomp(const FiniteGroup& b);

// Normalized bar-resolution cochain C^n -> B for the module (C, B, action).
// values is the full |C|^n table, flattened row-major; entries at tuples
// containing the identity of C must be 0.
struct Cochain {
  int degree = 0;
  AbelianAction action;
  std::vector<Idx> values;

  Idx value_at(const std::vector<Idx>& args) const;
  bool is_zero() const;
  bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(int degree, const AbelianAction& action);
Cochain make_cochain(int degree, const AbelianAction& action, std::vector<Idx> values);

Cochain add_cochains(const Cochain& a, const Cochain& b);
Cochain negate_cochain(const Cochain& a);
Cochain sub_cochains(const Cochain& a, const Cochain& b);

// Precompose every slot with psi0 (the module becomes the psi0-pullback).
Cochain pullback_cochain(const Cochain& c, const Homomorphism& psi0);
// Apply phi1 : B -> B' to the values; target_action is the C-action on B'.
Cochain push_cochain(const Cochain& c, const Homomorphism& phi1, const AbelianAction& target_action);

// Standard bar-resolution differential; input degree <= 3.
Cochain differential(const Cochain& c);
bool is_cocycle(const Cochain& c);

// ker d^n / im d^{n-1} as an abelian group via integer lattices and SNF.
class CohomologyGroup {
 public:
  int degree = 0;
  AbelianAction action;
  std::vector<Int> invariant_factors;   // empty means the trivial group
  std::vector<Cochain> representatives; // one cocycle per factor

  long long order() const;
  // Coordinates of a cocycle in the invariant-factor presentation.
  std::vector<Int> decompose(const Cochain& cocycle) const;
  // One cocycle for every cohomology class, in coordinate lex order.
  std::vector<Cochain> all_class_representatives(long long budget = 0) const;

  std::shared_ptr<const struct CohomLatticeData> data;
};

CohomologyGroup cohomology_group(int n, const AbelianAction& action, long long budget = 0);

// Witness b with d(b) = c, or nullopt; throws NotACocycle when d(c) != 0.
std::optional<Cochain> coboundary_witness(const Cochain& c);
inline bool is_coboundary(const Cochain& c) { return coboundary_witness(c).has_value(); }

// Every cocycle of the given degree, canonically ordered. The degree-1 list
// is the group of crossed homomorphisms Z^1.
std::vector<Cochain> cocycle_list(int n, const AbelianAction& action, long long budget = 0);

}  // namespace obk
