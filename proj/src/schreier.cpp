#include "obstrukt/schreier.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace obk {

AbstractKernel make_abstract_kernel(const FiniteGroup& c, const FiniteGroup& k,
                                    const std::vector<Idx>& psi0_images, long long budget) {
  AbstractKernel ak;
  ak.c = c;
  ak.k = k;
  ak.k_structure = structure_of(k, budget);
  ak.psi0 = make_hom(c, ak.k_structure.outer, psi0_images);
  return ak;
}

bool factor_system_conditions(const FactorSystem& fs, const GroupStructureReport& kst) {
  const FiniteGroup& c = fs.c;
  const FiniteGroup& k = fs.k;
  auto ev = [&](Idx aut, Idx kk) { return kst.aut_eval[aut][kk]; };
  if (fs.lift[c.identity] != kst.automorphisms.identity) return false;
  for (Idx x = 0; x < c.order; ++x)
    if (fs.fs(x, c.identity) != k.identity || fs.fs(c.identity, x) != k.identity) return false;
  // lift(x) lift(y) = conj(fset(x,y)) lift(xy)
  for (Idx x = 0; x < c.order; ++x)
    for (Idx y = 0; y < c.order; ++y)
      for (Idx kk = 0; kk < k.order; ++kk)
        if (ev(fs.lift[x], ev(fs.lift[y], kk)) != k.conj(fs.fs(x, y), ev(fs.lift[c.mul(x, y)], kk)))
          return false;
  // lift(x)(fset(y,z)) fset(x,yz) = fset(x,y) fset(xy,z)
  for (Idx x = 0; x < c.order; ++x)
    for (Idx y = 0; y < c.order; ++y)
      for (Idx z = 0; z < c.order; ++z)
        if (k.mul(ev(fs.lift[x], fs.fs(y, z)), fs.fs(x, c.mul(y, z))) !=
            k.mul(fs.fs(x, y), fs.fs(c.mul(x, y), z)))
          return false;
  return true;
}

namespace {

std::vector<Idx> factor_system_table(const FactorSystem& fs, const GroupStructureReport& kst) {
  const FiniteGroup& c = fs.c;
  const FiniteGroup& k = fs.k;
  int n = k.order * c.order;
  auto idx = [&](Idx a, Idx x) { return a * c.order + x; };
  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < k.order; ++a)
    for (Idx x = 0; x < c.order; ++x)
      for (Idx b = 0; b < k.order; ++b)
        for (Idx y = 0; y < c.order; ++y)
          flat[static_cast<size_t>(idx(a, x)) * n + idx(b, y)] =
              idx(k.mul(k.mul(a, kst.aut_eval[fs.lift[x]][b]), fs.fs(x, y)), c.mul(x, y));
  return flat;
}

}  // namespace

FiniteGroup group_of_factor_system(const FactorSystem& fs, const GroupStructureReport& kst) {
  return validate_group_flat(fs.k.order * fs.c.order, factor_system_table(fs, kst));
}

NonabelianExtension ext_of_factor_system(const FactorSystem& fs, const GroupStructureReport& kst) {
  NonabelianExtension out;
  out.k = fs.k;
  out.c = fs.c;
  out.e = group_of_factor_system(fs, kst);
  std::vector<Idx> kim(fs.k.order), fim(out.e.order);
  for (Idx a = 0; a < fs.k.order; ++a) kim[a] = a * fs.c.order + fs.c.identity;
  for (Idx a = 0; a < fs.k.order; ++a)
    for (Idx x = 0; x < fs.c.order; ++x) fim[a * fs.c.order + x] = x;
  out.kmap = make_hom(fs.k, out.e, kim);
  out.fmap = make_hom(out.e, fs.c, fim);
  return out;
}

bool factor_systems_equivalent(const FactorSystem& a, const FactorSystem& b,
                               const GroupStructureReport& kst) {
  if (!(a.c == b.c) || !(a.k == b.k)) return false;
  const FiniteGroup& c = a.c;
  const FiniteGroup& k = a.k;
  auto ev = [&](Idx aut, Idx kk) { return kst.aut_eval[aut][kk]; };
  // re-sectioning by a normalized h: C -> K
  std::vector<Idx> h(c.order, k.identity);
  std::vector<Idx> slots;
  for (Idx x = 0; x < c.order; ++x)
    if (x != c.identity) slots.push_back(x);
  std::vector<Idx> pick(slots.size(), 0);
  while (true) {
    for (size_t i = 0; i < slots.size(); ++i) h[slots[i]] = pick[i];
    bool ok = true;
    for (Idx kk = 0; kk < k.order && ok; ++kk)
      for (Idx x = 0; x < c.order && ok; ++x)
        for (Idx y = 0; y < c.order && ok; ++y)
          ok = k.mul(k.mul(ev(a.lift[x], kk), a.fs(x, y)), h[c.mul(x, y)]) ==
               k.mul(k.mul(h[x], ev(b.lift[x], kk)), k.mul(ev(b.lift[x], h[y]), b.fs(x, y)));
    if (ok) return true;
    if (slots.empty()) return false;
    int pos = static_cast<int>(slots.size()) - 1;
    while (pos >= 0 && ++pick[pos] == k.order) pick[pos--] = 0;
    if (pos < 0) return false;
  }
}

CrossedExtension canonical_faithful_xext(const FiniteGroup& k, long long budget) {
  GroupStructureReport kst = structure_of(k, budget);
  std::vector<Idx> act(static_cast<size_t>(kst.automorphisms.order) * k.order);
  for (Idx a = 0; a < kst.automorphisms.order; ++a)
    for (Idx kk = 0; kk < k.order; ++kk)
      act[static_cast<size_t>(a) * k.order + kk] = kst.aut_eval[a][kk];
  CrossedModule xm = validate_xmod(kst.conj, act);
  return xext_of_xmod(xm);
}

AbelianAction canonical_center_action(const GroupStructureReport& kst, const FiniteGroup& k) {
  auto zsub = subgroup_from(k, kst.center);
  const FiniteGroup& out = kst.outer;
  std::vector<Idx> act(static_cast<size_t>(out.order) * zsub.sub.order);
  for (Idx o = 0; o < out.order; ++o) {
    Idx rep = -1;
    for (Idx a = 0; a < kst.automorphisms.order && rep < 0; ++a)
      if (kst.out_proj.apply(a) == o) rep = a;
    for (Idx z = 0; z < zsub.sub.order; ++z) {
      Idx img = zsub.pos_of(kst.aut_eval[rep][zsub.elems[z]]);
      if (img < 0) fail(ErrorKind::InternalError, "automorphism does not preserve the centre");
      act[static_cast<size_t>(o) * zsub.sub.order + z] = img;
    }
  }
  return make_action(out, zsub.sub, act);
}

std::vector<FactorSystem> ext_classes(const AbstractKernel& ak, long long budget) {
  budget = resolve_budget(budget);
  const FiniteGroup& c = ak.c;
  const FiniteGroup& k = ak.k;
  const GroupStructureReport& kst = ak.k_structure;

  // candidate lifts: per x, the automorphisms in the psi0(x)-coset of Inn(K)
  std::vector<std::vector<Idx>> cosets(c.order);
  for (Idx x = 0; x < c.order; ++x) {
    if (x == c.identity) {
      cosets[x] = {kst.automorphisms.identity};
      continue;
    }
    for (Idx a = 0; a < kst.automorphisms.order; ++a)
      if (kst.out_proj.apply(a) == ak.psi0.apply(x)) cosets[x].push_back(a);
  }
  int free_cells = (c.order - 1) * (c.order - 1);
  double lift_count = 1;
  for (Idx x = 0; x < c.order; ++x)
    if (x != c.identity) lift_count *= static_cast<double>(cosets[x].size());
  check_budget(lift_count * std::pow(static_cast<double>(k.order), free_cells), budget,
               "factor-system enumeration");

  std::vector<Idx> lift_slots, pair_slots;
  for (Idx x = 0; x < c.order; ++x)
    if (x != c.identity) lift_slots.push_back(x);
  for (Idx x = 0; x < c.order; ++x)
    for (Idx y = 0; y < c.order; ++y)
      if (x != c.identity && y != c.identity) pair_slots.push_back(x * c.order + y);

  std::vector<FactorSystem> classes;
  FactorSystem fs;
  fs.c = c;
  fs.k = k;
  fs.lift.assign(c.order, kst.automorphisms.identity);
  fs.fset.assign(static_cast<size_t>(c.order) * c.order, k.identity);

  std::vector<size_t> lpick(lift_slots.size(), 0);
  while (true) {
    for (size_t i = 0; i < lift_slots.size(); ++i) fs.lift[lift_slots[i]] = cosets[lift_slots[i]][lpick[i]];

    std::vector<Idx> fpick(pair_slots.size(), 0);
    while (true) {
      for (size_t i = 0; i < pair_slots.size(); ++i) fs.fset[pair_slots[i]] = fpick[i];

      bool valid = factor_system_conditions(fs, kst);
      // the group-table oracle must agree with the two identities
      bool oracle;
      try {
        validate_group_flat(k.order * c.order, factor_system_table(fs, kst));
        oracle = true;
      } catch (const Error&) {
        oracle = false;
      }
      if (valid != oracle)
        fail(ErrorKind::InternalError, "factor-system identities disagree with the group oracle");

      if (valid) {
        bool duplicate = false;
        for (FactorSystem& cls : classes)
          if (factor_systems_equivalent(cls, fs, kst)) {
            if (std::make_pair(fs.lift, fs.fset) < std::make_pair(cls.lift, cls.fset)) cls = fs;
            duplicate = true;
            break;
          }
        if (!duplicate) classes.push_back(fs);
      }

      if (pair_slots.empty()) break;
      int pos = static_cast<int>(pair_slots.size()) - 1;
      while (pos >= 0 && ++fpick[pos] == k.order) fpick[pos--] = 0;
      if (pos < 0) break;
    }

    if (lift_slots.empty()) break;
    int pos = static_cast<int>(lift_slots.size()) - 1;
    while (pos >= 0 && ++lpick[pos] == cosets[lift_slots[pos]].size()) lpick[pos--] = 0;
    if (pos < 0) break;
  }

  std::sort(classes.begin(), classes.end(), [](const FactorSystem& a, const FactorSystem& b) {
    return std::make_pair(a.lift, a.fset) < std::make_pair(b.lift, b.fset);
  });
  return classes;
}

Obstruction obstruction_class(const AbstractKernel& ak, long long budget) {
  CrossedExtension canon = canonical_faithful_xext(ak.k, budget);
  Cochain omega = three_cocycle_of(canon);
  // psi0 lands in the canonical cokernel, which is Out(K) by construction
  if (!(canon.c == ak.k_structure.outer))
    fail(ErrorKind::InternalError, "canonical cokernel differs from Out(K)");
  Obstruction out{pullback_cochain(omega, ak.psi0), false};
  out.vanishes = is_coboundary(out.cocycle);
  return out;
}

SMLReport sml_report(const AbstractKernel& ak, long long budget) {
  SMLReport rep;
  Obstruction obs = obstruction_class(ak, budget);
  rep.obstruction_vanishes = obs.vanishes;
  rep.ext_classes = ext_classes(ak, budget);
  AbelianAction zeta = canonical_center_action(ak.k_structure, ak.k);
  AbelianAction pulled = pullback_action(ak.psi0, zeta);
  rep.h2 = cohomology_group(2, pulled, budget);

  if (rep.obstruction_vanishes != !rep.ext_classes.empty()) {
    rep.violation = "obstruction verdict disagrees with the extension enumeration";
    return rep;
  }
  if (rep.ext_classes.empty()) {
    rep.counts_match = true;
    rep.torsor_verified = true;  // vacuously; nothing to act on
    return rep;
  }
  rep.counts_match = static_cast<long long>(rep.ext_classes.size()) == rep.h2.order();
  if (!rep.counts_match) {
    rep.violation = "class count differs from |H^2|";
    return rep;
  }

  // central 2-cocycles act by fset -> fset . j(z); the induced action of
  // H^2 on the class set must be simply transitive
  auto zsub = subgroup_from(ak.k, ak.k_structure.center);
  std::vector<Cochain> z2 = cocycle_list(2, pulled, budget);
  size_t ncls = rep.ext_classes.size();
  std::vector<std::vector<long long>> pair_counts(ncls, std::vector<long long>(ncls, 0));
  for (const Cochain& z : z2) {
    for (size_t i = 0; i < ncls; ++i) {
      FactorSystem moved = rep.ext_classes[i];
      for (Idx x = 0; x < ak.c.order; ++x)
        for (Idx y = 0; y < ak.c.order; ++y) {
          Idx add = zsub.elems[z.value_at({x, y})];
          moved.fset[static_cast<size_t>(x) * ak.c.order + y] =
              ak.k.mul(moved.fs(x, y), add);
        }
      if (!factor_system_conditions(moved, ak.k_structure)) {
        rep.violation = "central cocycle action leaves the factor-system variety";
        return rep;
      }
      int target = -1;
      for (size_t jx = 0; jx < ncls; ++jx)
        if (factor_systems_equivalent(rep.ext_classes[jx], moved, ak.k_structure)) {
          target = static_cast<int>(jx);
          break;
        }
      if (target < 0) {
        rep.violation = "central cocycle action leaves the class set";
        return rep;
      }
      pair_counts[i][target] += 1;
    }
  }
  long long expected = static_cast<long long>(z2.size()) / rep.h2.order();
  for (size_t i = 0; i < ncls; ++i)
    for (size_t jx = 0; jx < ncls; ++jx)
      if (pair_counts[i][jx] != expected) {
        rep.violation = "H^2 action on classes is not simply transitive";
        return rep;
      }
  rep.torsor_verified = true;
  return rep;
}

}  // namespace obk
