#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstrukt/fingroup.hpp"

namespace obk {

// A finite category: indexed morphisms with an explicit composition table.
struct FinCategory {
  struct Mor {
    Idx src = 0, dst = 0;
  };
  int num_objects = 0;
  std::vector<Mor> mors;
  std::vector<Idx> identity;           // object -> identity morphism
  std::vector<std::vector<Idx>> comp;  // comp[g][f] = g.f, -1 when undefined

  int num_morphisms() const { return static_cast<int>(mors.size()); }
  Idx compose(Idx g, Idx f) const { return comp[g][f]; }
  std::vector<Idx> homset(Idx a, Idx b) const;  // morphisms a -> b, ascending
};

FinCategory validate_category(int num_objects, std::vector<FinCategory::Mor> mors,
                              std::vector<Idx> identity, std::vector<std::vector<Idx>> comp);

struct FunctorTable {
  FinCategory source, target;
  std::vector<Idx> obj_map;
  std::vector<Idx> mor_map;

  Idx on_obj(Idx o) const { return obj_map[o]; }
  Idx on_mor(Idx f) const { return mor_map[f]; }
};

FunctorTable validate_functor(const FinCategory& src, const FinCategory& dst,
                              std::vector<Idx> obj_map, std::vector<Idx> mor_map);
FunctorTable identity_functor(const FinCategory& c);

// Lemma-style cartesian test: composition with f must biject the hom-sets
// over every (x', alpha). On failure the witness names (x', alpha).
struct CartesianWitness {
  Idx obj = -1, alpha = -1;
  int liftings = 0;  // 0 or >= 2 for the named failure
};
bool is_cartesian(const FunctorTable& p, Idx f, CartesianWitness* witness = nullptr);
bool is_opcartesian(const FunctorTable& p, Idx f, CartesianWitness* witness = nullptr);

// Cartesian lifting of phi at y (smallest morphism index), -1 when none.
Idx cartesian_lifting(const FunctorTable& p, Idx phi, Idx y);
Idx opcartesian_lifting(const FunctorTable& p, Idx phi, Idx x);

bool is_fibration(const FunctorTable& p, std::string* why = nullptr);
bool is_opfibration(const FunctorTable& p, std::string* why = nullptr);

// A fibrewise opfibration (P, F, G): G.P = F strictly, F and G fibrations,
// P a fibred morphism, and every fibre restriction P_b an opfibration.
struct FOFTriple {
  FinCategory x, m, b;
  FunctorTable p;  // X -> M
  FunctorTable f;  // X -> B
  FunctorTable g;  // M -> B
};

struct FofCheck {
  bool ok = false;
  std::string reason;  // first failure, with witnesses
};

FofCheck check_fof(const FOFTriple& t);
FOFTriple make_fof_triple(FinCategory x, FinCategory m, FinCategory b, FunctorTable p,
                          FunctorTable f, FunctorTable g);  // throws on failure

// Every P-vertical morphism must be invertible in its fibre.
bool fibres_groupoidal(const FOFTriple& t, std::string* witness = nullptr);

// The factorization data and bijection of the abstract classification:
// w cartesian over G(phi), phi = phi_k . phi_v, u opcartesian in the fibre,
// and the bijection (f -> w.f.u) between the two hom-sets.
struct PhiBijection {
  Idx w = -1, u = -1;          // morphisms of X
  Idx phi_k = -1, phi_v = -1;  // morphisms of M
  Idx pulled_y = -1;           // object phi^* y
  Idx pushed_x = -1;           // object phi_* x
  std::vector<Idx> fibre_homset;  // X_{P(phi^*y)}(phi_* x, phi^* y)
  std::vector<Idx> homset;        // X_phi(x, y)
  std::vector<int> bijection;     // fibre_homset index -> homset index
  bool bijective = false;
  std::string violation;
};

PhiBijection phi_bijection(const FOFTriple& t, Idx x, Idx y, Idx phi);

struct TorsorReport {
  std::vector<Idx> homset;            // X_phi(x, y)
  FiniteGroup acting_group;           // H = vertical automorphisms of phi^* y
  std::vector<Idx> h_morphisms;       // group element -> morphism of X
  std::vector<std::vector<int>> action;  // action[h][i] = index of h * homset[i]
  TorsorVerdict verdict = TorsorVerdict::Violation;
  std::string violation;
};

// Throws FibresNotGroupoidal when some P-fibre is not a groupoid.
TorsorReport torsor_certificate(const FOFTriple& t, Idx x, Idx y, Idx phi);

}  // namespace obk
