#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstrukt/error.hpp"

namespace obk {

using Idx = int;

enum class TorsorVerdict { Empty, Torsor, Violation };
const char* to_string(TorsorVerdict v);

// A finite group on indices 0..order-1, given by its multiplication table.
// After validation the identity always sits at index 0.
struct FiniteGroup {
  int order = 0;
  std::vector<Idx> table;    // row-major: table[x*order+y] = x*y
  Idx identity = 0;
  std::vector<Idx> inverse;  // two-sided inverses

  Idx mul(Idx x, Idx y) const { return table[static_cast<size_t>(x) * order + y]; }
  Idx inv(Idx x) const { return inverse[x]; }
  Idx conj(Idx g, Idx x) const { return mul(mul(g, x), inv(g)); }
  Idx pow(Idx x, long long n) const;

  bool is_abelian() const;
  int element_order(Idx x) const;

  bool operator==(const FiniteGroup&) const = default;
};

struct Homomorphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Idx> images;  // images[x] in target

  Idx apply(Idx x) const { return images[x]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  std::vector<Idx> kernel() const;  // sorted element set of source
  std::vector<Idx> image() const;   // sorted element set of target

  bool operator==(const Homomorphism&) const = default;
};

// Action of a group C on an abelian group B by automorphisms.
struct AbelianAction {
  FiniteGroup actor;   // C
  FiniteGroup module;  // B, abelian
  std::vector<Idx> act;  // act[c*|B|+b]

  Idx apply(Idx c, Idx b) const { return act[static_cast<size_t>(c) * module.order + b]; }
  bool is_trivial() const;

  bool operator==(const AbelianAction&) const = default;
};

struct GroupStructureReport {
  std::vector<Idx> center;                 // sorted subgroup of G
  FiniteGroup automorphisms;               // Aut(G)
  std::vector<std::vector<Idx>> aut_eval;  // aut_eval[a][x] = a(x)
  std::vector<Idx> inner;                  // Inn(G) as sorted indices into Aut(G)
  FiniteGroup outer;                       // Out(G) = Aut/Inn
  Homomorphism out_proj;                   // Aut(G) -> Out(G)
  Homomorphism conj;                       // G -> Aut(G)
};

// --- validation and construction ---------------------------------------

// Rejects non-groups with NoIdentity / NoInverse / NotAssociative, naming the
// first violating element or triple. Re-indexes so the identity is 0.
FiniteGroup validate_group(const std::vector<std::vector<Idx>>& table);
FiniteGroup validate_group_flat(int order, std::vector<Idx> flat);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);  // index = x*|b|+y

Homomorphism make_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<Idx> images);
Homomorphism identity_hom(const FiniteGroup& g);
Homomorphism zero_hom(const FiniteGroup& src, const FiniteGroup& dst);
Homomorphism compose_homs(const Homomorphism& outer, const Homomorphism& inner);  // outer . inner
Homomorphism inverse_hom(const Homomorphism& iso);

// All homomorphisms src -> dst, sorted lexicographically by image tuple.
std::vector<Homomorphism> enumerate_homs(const FiniteGroup& src, const FiniteGroup& dst,
                                         long long budget = 0);

std::optional<Homomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                             long long budget = 0);

// Center, Aut, Inn, Out and conj: G -> Aut(G).
GroupStructureReport structure_of(const FiniteGroup& g, long long budget = 0);

AbelianAction trivial_action(const FiniteGroup& c, const FiniteGroup& b);
AbelianAction make_action(const FiniteGroup& c, const FiniteGroup& b, const std::vector<Idx>& act);
// The paper's pulled-back module structure: act'(c',b) = act(psi0(c'), b).
AbelianAction pullback_action(const Homomorphism& psi0, const AbelianAction& action);

// --- subgroups, quotients, helpers --------------------------------------

struct SubgroupEmbedding {
  FiniteGroup sub;
  Homomorphism incl;        // sub -> ambient
  std::vector<Idx> elems;   // sorted ambient indices; elems[i] = incl(i)
  Idx pos_of(Idx ambient) const;  // -1 when not in subgroup
};

struct QuotientProjection {
  FiniteGroup quo;
  Homomorphism proj;        // ambient -> quo
  std::vector<Idx> reps;    // reps[q] = smallest ambient element of coset q
};

std::vector<Idx> generated_subgroup(const FiniteGroup& g, const std::vector<Idx>& gens);
std::vector<Idx> minimal_generators(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const std::vector<Idx>& elems);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Idx>& elems);

SubgroupEmbedding subgroup_from(const FiniteGroup& g, std::vector<Idx> elems);
QuotientProjection quotient_by(const FiniteGroup& g, const std::vector<Idx>& normal_elems);

std::string describe_abelian(const FiniteGroup& g);  // e.g. "Z/2 + Z/4"

}  // namespace obk
