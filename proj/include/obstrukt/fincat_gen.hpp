#pragma once

#include <cstdint>

#include "obstrukt/fincat.hpp"

namespace obk {

// Deterministic cross-platform generator state (splitmix64).
struct Rng {
  uint64_t state = 0;
  uint64_t next();
  int below(int n);  // uniform-ish in [0, n)
};

// A seeded fibrewise opfibration with groupoidal fibres, glued Grothendieck
// style over a forest base: poset fibres for the middle level and action
// groupoids of a small group for the top level. The construction satisfies
// the fibrewise-opfibration axioms by design and is validated before being
// returned; instances are resampled until they fit max_morphisms.
FOFTriple random_fof_instance(uint64_t seed, int max_morphisms = 200);

}  // namespace obk
