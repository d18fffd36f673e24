#include "obstrukt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "obstrukt/butterfly.hpp"
#include "obstrukt/cohomology.hpp"
#include "obstrukt/fincat_gen.hpp"
#include "obstrukt/opext.hpp"
#include "obstrukt/schreier.hpp"
#include "obstrukt/xmod.hpp"

namespace obk {

namespace {

struct Suite {
  SuiteResult result;
  int failures = 0;

  explicit Suite(std::string name) { result.name = std::move(name); }
  void line(const std::string& s) { result.lines.push_back(s); }
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      result.lines.push_back("VIOLATION: " + what);
    }
  }
  SuiteResult finish() {
    result.pass = failures == 0;
    return result;
  }
};

std::string fmt_count(const std::string& label, long long n) {
  return label + ": " + std::to_string(n);
}

// --------------------------------------------------------------------------
// shared small-group tables

FiniteGroup v4() { return product_group(cyclic_group(2), cyclic_group(2)); }

FiniteGroup s3() {
  return split_extension(make_action(cyclic_group(2), cyclic_group(3), {0, 1, 2, 0, 2, 1})).e;
}

std::vector<FiniteGroup> groups_of_order_upto(int n) {
  std::vector<FiniteGroup> out;
  out.push_back(trivial_group());
  if (n >= 2) out.push_back(cyclic_group(2));
  if (n >= 3) out.push_back(cyclic_group(3));
  if (n >= 4) {
    out.push_back(cyclic_group(4));
    out.push_back(v4());
  }
  if (n >= 5) out.push_back(cyclic_group(5));
  if (n >= 6) {
    out.push_back(cyclic_group(6));
    out.push_back(s3());
  }
  return out;
}

// all actions of c on abelian b, via homs into Aut(b)
std::vector<AbelianAction> all_actions(const FiniteGroup& c, const FiniteGroup& b,
                                       long long budget) {
  GroupStructureReport st = structure_of(b, budget);
  std::vector<AbelianAction> out;
  for (const Homomorphism& rho : enumerate_homs(c, st.automorphisms, budget)) {
    std::vector<Idx> act(static_cast<size_t>(c.order) * b.order);
    for (Idx x = 0; x < c.order; ++x)
      for (Idx v = 0; v < b.order; ++v)
        act[static_cast<size_t>(x) * b.order + v] = st.aut_eval[rho.apply(x)][v];
    out.push_back(make_action(c, b, act));
  }
  return out;
}

std::vector<Homomorphism> equivariant_homs(const AbelianAction& xi, const AbelianAction& xip,
                                           const Homomorphism& phi0, long long budget) {
  AbelianAction pulled = pullback_action(phi0, xip);
  std::vector<Homomorphism> out;
  for (const Homomorphism& phi1 : enumerate_homs(xi.module, xip.module, budget)) {
    bool ok = true;
    for (Idx x = 0; x < xi.actor.order && ok; ++x)
      for (Idx v = 0; v < xi.module.order && ok; ++v)
        ok = phi1.apply(xi.apply(x, v)) == pulled.apply(x, phi1.apply(v));
    if (ok) out.push_back(phi1);
  }
  return out;
}

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// --------------------------------------------------------------------------
// criterion 1: the abstract torsor theorem on seeded random instances

SuiteResult suite_abstract_torsor(uint64_t seed, long long budget) {
  Suite s("abstract-torsor");
  (void)budget;
  const int instances = 100;
  long long checks = 0, torsors = 0, empties = 0;
  for (int i = 1; i <= instances; ++i) {
    FOFTriple t = random_fof_instance(seed + static_cast<uint64_t>(i), 200);
    s.expect(t.x.num_morphisms() <= 200, "instance exceeds the morphism cap");
    s.expect(check_fof(t).ok, "generated instance fails validation");
    s.expect(fibres_groupoidal(t), "generated instance has non-groupoidal fibres");
    for (Idx x = 0; x < t.x.num_objects; ++x)
      for (Idx y = 0; y < t.x.num_objects; ++y)
        for (Idx phi = 0; phi < t.m.num_morphisms(); ++phi) {
          if (t.m.mors[phi].src != t.p.on_obj(x) || t.m.mors[phi].dst != t.p.on_obj(y)) continue;
          TorsorReport rep = torsor_certificate(t, x, y, phi);
          ++checks;
          if (rep.verdict == TorsorVerdict::Violation)
            s.expect(false, "instance " + std::to_string(i) + ": " + rep.violation);
          else if (rep.verdict == TorsorVerdict::Torsor) {
            ++torsors;
            s.expect(rep.homset.size() == static_cast<size_t>(rep.acting_group.order),
                     "|homset| != |H|");
          } else {
            ++empties;
          }
        }
  }
  s.line(fmt_count("instances", instances));
  s.line(fmt_count("obstruction problems checked", checks));
  s.line(fmt_count("torsor verdicts", torsors));
  s.line(fmt_count("empty verdicts", empties));
  return s.finish();
}

// --------------------------------------------------------------------------
// criterion 2: the OPEXT classification sweep

SuiteResult suite_opext_classification(long long budget) {
  Suite s("opext-classification");
  std::vector<FiniteGroup> gs = {cyclic_group(2), cyclic_group(3), cyclic_group(4), v4()};

  struct Module {
    AbelianAction xi;
    std::vector<Extension> reps;
  };
  std::vector<Module> modules;
  for (const FiniteGroup& c : gs)
    for (const FiniteGroup& b : gs) {
      if (b.order * c.order > 12) continue;
      for (const AbelianAction& xi : all_actions(c, b, budget)) {
        Module m;
        m.xi = xi;
        CohomologyGroup h2 = cohomology_group(2, xi, budget);
        for (const Cochain& rep : h2.all_class_representatives(budget))
          m.reps.push_back(ext_of_cocycle(xi, rep));
        modules.push_back(std::move(m));
      }
    }

  long long pairs = 0, empty = 0, torsor = 0;
  for (const Module& m : modules)
    for (const Module& mp : modules)
      for (const Homomorphism& phi0 : enumerate_homs(m.xi.actor, mp.xi.actor, budget))
        for (const Homomorphism& phi1 : equivariant_homs(m.xi, mp.xi, phi0, budget))
          for (const Extension& e : m.reps)
            for (const Extension& ep : mp.reps) {
              ClassificationReport rep = classify(e, ep, phi0, phi1, budget);
              ++pairs;
              s.expect(rep.verdict != TorsorVerdict::Violation,
                       "classification violation: " + rep.violation);
              // the raw isomorphism oracle must agree with the cocycle route
              bool raw = find_fibre_iso_raw(rep.pushforward_ext, rep.pullback_ext, budget)
                             .has_value();
              s.expect(raw == rep.fibre_iso.has_value(),
                       "raw fibre-isomorphism search disagrees with the cocycle route");
              if (rep.verdict == TorsorVerdict::Torsor) {
                ++torsor;
                s.expect(rep.homset.size() == rep.z1.size(), "|homset| != |Z1|");
              } else {
                ++empty;
              }
            }
  s.line(fmt_count("modules", static_cast<long long>(modules.size())));
  s.line(fmt_count("classified extension pairs", pairs));
  s.line(fmt_count("torsor verdicts", torsor));
  s.line(fmt_count("empty verdicts", empty));
  return s.finish();
}

// --------------------------------------------------------------------------
// criterion 3: the cohomology engine against brute force

long long brute_h_order(int n, const AbelianAction& action) {
  const FiniteGroup& cg = action.actor;
  const FiniteGroup& bg = action.module;
  std::vector<size_t> slots_n, slots_nm1;
  size_t total_n = 1, total_nm1 = 1;
  for (int i = 0; i < n; ++i) total_n *= cg.order;
  for (int i = 0; i + 1 < n; ++i) total_nm1 *= cg.order;
  auto collect = [&](int deg, size_t total, std::vector<size_t>& out) {
    for (size_t i = 0; i < total; ++i) {
      size_t rem = i;
      bool has_e = false;
      for (int k = 0; k < deg; ++k) {
        if (static_cast<Idx>(rem % cg.order) == cg.identity) has_e = true;
        rem /= cg.order;
      }
      if (!has_e) out.push_back(i);
    }
  };
  collect(n, total_n, slots_n);
  collect(n - 1, total_nm1, slots_nm1);

  long long cocycles = 0;
  {
    std::vector<Idx> vals(slots_n.size(), 0);
    while (true) {
      Cochain c = zero_cochain(n, action);
      for (size_t i = 0; i < slots_n.size(); ++i) c.values[slots_n[i]] = vals[i];
      if (differential(c).is_zero()) ++cocycles;
      int pos = static_cast<int>(vals.size()) - 1;
      while (pos >= 0 && ++vals[pos] == bg.order) vals[pos--] = 0;
      if (pos < 0) break;
    }
  }
  std::set<std::vector<Idx>> boundaries;
  {
    std::vector<Idx> vals(slots_nm1.size(), 0);
    while (true) {
      Cochain c = zero_cochain(n - 1, action);
      for (size_t i = 0; i < slots_nm1.size(); ++i) c.values[slots_nm1[i]] = vals[i];
      boundaries.insert(differential(c).values);
      int pos = static_cast<int>(vals.size()) - 1;
      while (pos >= 0 && ++vals[pos] == bg.order) vals[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return cocycles / static_cast<long long>(boundaries.size());
}

SuiteResult suite_cohomology(uint64_t seed, long long budget) {
  Suite s("cohomology");
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);

  CohomologyGroup a = cohomology_group(2, trivial_action(z2, z2), budget);
  s.expect(a.invariant_factors == std::vector<Int>{2}, "H2(Z2,Z2,triv) != Z/2");
  CohomologyGroup b = cohomology_group(2, trivial_action(z3, z3), budget);
  s.expect(b.invariant_factors == std::vector<Int>{3}, "H2(Z3,Z3,triv) != Z/3");
  CohomologyGroup c = cohomology_group(2, make_action(z2, z3, {0, 1, 2, 0, 2, 1}), budget);
  s.expect(c.invariant_factors.empty(), "H2(Z2,Z3,inversion) != 0");
  s.expect(cocycle_list(1, trivial_action(z2, z2), budget).size() == 2,
           "Z1(Z2,Z2,triv) does not have order 2");

  // SNF path vs brute force wherever the search space is feasible
  std::vector<AbelianAction> mods = {
      trivial_action(z2, z2),
      trivial_action(z2, z4),
      trivial_action(z2, v4()),
      trivial_action(z3, z3),
      trivial_action(z4, z2),
      trivial_action(v4(), z2),
      make_action(z2, z3, {0, 1, 2, 0, 2, 1}),
      make_action(z2, z4, {0, 1, 2, 3, 0, 3, 2, 1}),
  };
  long long compared = 0;
  for (const AbelianAction& mod : mods)
    for (int n = 1; n <= 2; ++n) {
      double space = std::pow(static_cast<double>(mod.module.order),
                              std::pow(static_cast<double>(mod.actor.order - 1), n));
      if (space > 1e6) continue;
      long long lattice = cohomology_group(n, mod, budget).order();
      long long brute = brute_h_order(n, mod);
      s.expect(lattice == brute, "SNF path disagrees with brute force");
      ++compared;
    }
  s.line(fmt_count("SNF-vs-brute instances", compared));

  // d.d = 0 on 1000 seeded random cochains, exact
  std::vector<AbelianAction> dmods = {trivial_action(z2, z2), trivial_action(z3, z3),
                                      make_action(z2, z3, {0, 1, 2, 0, 2, 1}),
                                      trivial_action(z4, v4())};
  uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
  int dd = 0;
  for (int rep = 0; rep < 250; ++rep)
    for (const AbelianAction& mod : dmods) {
      int degree = static_cast<int>(splitmix(state) % 3);
      Cochain cc = zero_cochain(degree, mod);
      for (size_t i = 0; i < cc.values.size(); ++i) {
        size_t rem = i;
        bool has_e = false;
        for (int k = 0; k < degree; ++k) {
          if (static_cast<Idx>(rem % mod.actor.order) == mod.actor.identity) has_e = true;
          rem /= mod.actor.order;
        }
        if (!has_e) cc.values[i] = static_cast<Idx>(splitmix(state) % mod.module.order);
      }
      s.expect(differential(differential(cc)).is_zero(), "d.d != 0");
      ++dd;
    }
  s.line(fmt_count("d.d = 0 random cochains", dd));
  return s.finish();
}

// --------------------------------------------------------------------------
// corpus for the butterfly suites

std::vector<CrossedExtension> xext_corpus_upto4(long long budget) {
  std::vector<CrossedExtension> out;
  std::vector<FiniteGroup> gs = groups_of_order_upto(4);
  for (const FiniteGroup& g2 : gs)
    for (const FiniteGroup& g1 : gs) {
      GroupStructureReport st = structure_of(g2, budget);
      for (const Homomorphism& boundary : enumerate_homs(g2, g1, budget))
        for (const Homomorphism& rho : enumerate_homs(g1, st.automorphisms, budget)) {
          std::vector<Idx> act(static_cast<size_t>(g1.order) * g2.order);
          for (Idx a = 0; a < g1.order; ++a)
            for (Idx t = 0; t < g2.order; ++t)
              act[static_cast<size_t>(a) * g2.order + t] = st.aut_eval[rho.apply(a)][t];
          try {
            out.push_back(xext_of_xmod(validate_xmod(boundary, act)));
          } catch (const Error&) {
            // not a crossed module; skip
          }
        }
    }
  return out;
}

std::vector<CrossedExtension> shipped_xexts() {
  Bundle bundle;
  for (const auto& [name, content] : canonical_fixtures()) parse_text_into(bundle, content, name);
  std::vector<CrossedExtension> out;
  for (const char* name :
       {"zero22", "zero33", "zero32", "zero2v4", "conj-z3", "mul2", "mul2tw", "trivon2"})
    out.push_back(bundle.xexts.at(name).xext);
  return out;
}

bool module_pair_is_iso(const ModuleMorphismPair& pr) {
  return pr.phi0.is_bijective() && pr.phi.is_bijective();
}

// criterion 4: butterfly calculus on the exhaustive small corpus
SuiteResult suite_butterfly_calculus(long long budget) {
  Suite s("butterfly-calculus");
  std::vector<CrossedExtension> corpus = xext_corpus_upto4(budget);
  s.line(fmt_count("crossed extensions with components of order <= 4",
                   static_cast<long long>(corpus.size())));

  long long id_checked = 0;
  for (const CrossedExtension& x : corpus) {
    Butterfly id = identity_butterfly(x);
    ButterflyFlags flags = butterfly_flags(id, budget);
    s.expect(flags.representable && flags.flippable, "identity butterfly flags wrong");
    ModuleMorphismPair pr = project(id);
    s.expect(pr.phi0.images == identity_hom(x.c).images &&
                 pr.phi.images == identity_hom(x.b).images,
             "identity butterfly does not project to the identity");
    ButterflySpan span = span_of(id);
    s.expect(morphism_class(span.left).weak_equivalence, "left span leg not a weak equivalence");
    Butterfly comp = compose_butterflies(id, id);
    s.expect(butterflies_isomorphic(comp, id, budget), "compose(id,id) not isomorphic to id");
    // flippable here, so the flip must invert it up to two-cells
    Butterfly back = flip(id);
    s.expect(butterflies_isomorphic(compose_butterflies(back, id), id, budget),
             "flip is not a left inverse");
    ++id_checked;
  }
  s.line(fmt_count("identity butterflies checked", id_checked));

  // morphism-level checks on the shipped fixtures plus the diagram-17 instance
  std::vector<CrossedExtension> fixtures = shipped_xexts();
  long long proj_checked = 0, flip_checked = 0;
  std::vector<Butterfly> composable;
  for (const CrossedExtension& x : fixtures)
    for (const CrossedExtension& xp : fixtures)
      for (const XExtMorphism& m : enumerate_xext_morphisms(x, xp, budget)) {
        Butterfly bf = from_morphism(x, xp, m);
        ModuleMorphismPair pr = project(bf);
        s.expect(pr.phi0.images == m.gamma.images && pr.phi.images == m.beta.images,
                 "project(from_morphism) != Pi");
        ButterflyFlags flags = butterfly_flags(bf, budget);
        s.expect(flags.representable, "from_morphism is not representable");
        bool we = morphism_class(m).weak_equivalence;
        if (we) s.expect(flags.flippable, "weak equivalence gave a non-flippable butterfly");
        // flippable <=> invertible class; projecting to a non-iso certifies
        // non-invertibility since P is functorial on classes
        if (flags.flippable) {
          Butterfly back = flip(bf);
          s.expect(butterflies_isomorphic(compose_butterflies(back, bf), identity_butterfly(x),
                                          budget),
                   "flip(b).b is not the identity class");
          s.expect(butterflies_isomorphic(compose_butterflies(bf, back), identity_butterfly(xp),
                                          budget),
                   "b.flip(b) is not the identity class");
          ++flip_checked;
        } else {
          s.expect(!module_pair_is_iso(pr), "non-flippable butterfly projects to an isomorphism");
        }
        ButterflySpan span = span_of(bf);
        Homomorphism pi0 = compose_homs(span.right.gamma, inverse_hom(span.left.gamma));
        Homomorphism pi1 = compose_homs(span.right.beta, inverse_hom(span.left.beta));
        s.expect(pi0.images == pr.phi0.images && pi1.images == pr.phi.images,
                 "span projection disagrees with project");
        if (composable.size() < 24) composable.push_back(bf);
        ++proj_checked;
      }
  s.line(fmt_count("fixture morphisms checked", proj_checked));
  s.line(fmt_count("flippable inverses verified", flip_checked));

  // unit laws on a capped deterministic set of fixture butterflies
  long long unit_checked = 0;
  for (const Butterfly& bf : composable) {
    if (unit_checked >= 16) break;
    Butterfly lu = compose_butterflies(identity_butterfly(bf.dst), bf);
    Butterfly ru = compose_butterflies(bf, identity_butterfly(bf.src));
    s.expect(butterflies_isomorphic(lu, bf, budget), "left unit law fails");
    s.expect(butterflies_isomorphic(ru, bf, budget), "right unit law fails");
    ++unit_checked;
  }
  s.line(fmt_count("unit laws checked", unit_checked));

  // the diagram-17 butterfly
  {
    Bundle bundle;
    for (const auto& [name, content] : canonical_fixtures()) parse_text_into(bundle, content, name);
    const Butterfly& d17 = bundle.butterflies.at("diag17").butterfly;
    ButterflyFlags flags = butterfly_flags(d17, budget);
    s.expect(flags.representable && !flags.flippable, "diagram-17 flags are wrong");
    ModuleMorphismPair pr = project(d17);
    s.expect(pr.phi0.images == std::vector<Idx>{0, 1}, "diagram-17 phi0 is not the identity");
    s.expect(!module_pair_is_iso(pr), "diagram-17 projects to an isomorphism");
    Butterfly lu = compose_butterflies(identity_butterfly(d17.dst), d17);
    Butterfly ru = compose_butterflies(d17, identity_butterfly(d17.src));
    s.expect(butterflies_isomorphic(lu, d17, budget), "left unit law fails for diagram-17");
    s.expect(butterflies_isomorphic(ru, d17, budget), "right unit law fails for diagram-17");
  }

  // associativity up to two-cell and functoriality of project on composable
  // fixture butterflies
  long long assoc_checked = 0, funct_checked = 0;
  for (const Butterfly& b1 : composable)
    for (const Butterfly& b2 : composable) {
      if (!(b1.dst.xm.boundary == b2.src.xm.boundary) || !(b1.dst.xm.act == b2.src.xm.act))
        continue;
      Butterfly c21 = compose_butterflies(b2, b1);
      ModuleMorphismPair pc = project(c21);
      ModuleMorphismPair p1 = project(b1);
      ModuleMorphismPair p2 = project(b2);
      s.expect(pc.phi0.images == compose_homs(p2.phi0, p1.phi0).images &&
                   pc.phi.images == compose_homs(p2.phi, p1.phi).images,
               "project is not functorial under composition");
      ++funct_checked;
      for (const Butterfly& b3 : composable) {
        if (!(b2.dst.xm.boundary == b3.src.xm.boundary) || !(b2.dst.xm.act == b3.src.xm.act))
          continue;
        if (assoc_checked >= 40) break;
        Butterfly lhs = compose_butterflies(b3, c21);
        Butterfly rhs = compose_butterflies(compose_butterflies(b3, b2), b1);
        s.expect(butterflies_isomorphic(lhs, rhs, budget), "associativity fails up to two-cell");
        ++assoc_checked;
      }
    }
  s.line(fmt_count("functoriality checks", funct_checked));
  s.line(fmt_count("associativity checks", assoc_checked));
  return s.finish();
}

// criterion 5: weak-map classification on shipped fixtures
SuiteResult suite_weak_maps(long long budget) {
  Suite s("weak-maps");
  std::vector<CrossedExtension> fixtures = shipped_xexts();
  long long swept = 0, nonempty = 0;
  for (const CrossedExtension& x : fixtures)
    for (const CrossedExtension& xp : fixtures) {
      AbelianAction xi = pi(x);
      AbelianAction xip = pi(xp);
      for (const Homomorphism& phi0 : enumerate_homs(xi.actor, xip.actor, budget))
        for (const Homomorphism& phi : equivariant_homs(xi, xip, phi0, budget)) {
          WeakHomReport rep = weak_hom_set(x, xp, phi0, phi, budget);
          s.expect(rep.count_matches, "class count not in {0, |H2|}");
          s.expect(rep.existence_matches,
                   "nonemptiness disagrees with the 3-cocycle criterion");
          ++swept;
          if (!rep.classes.empty()) ++nonempty;
        }
    }
  s.line(fmt_count("weak hom-sets classified", swept));
  s.line(fmt_count("nonempty weak hom-sets", nonempty));

  // pinned instances
  {
    CrossedExtension zero22 = zero_xext(trivial_action(cyclic_group(2), cyclic_group(2)));
    WeakHomReport rep =
        weak_hom_set(zero22, zero22, identity_hom(zero22.c), identity_hom(zero22.b), budget, true);
    s.expect(rep.classes.size() == 2, "zero22 self weak maps != 2");
    s.expect(rep.gamma_class_count == rep.h2_order, "|Gamma| != |H2| on zero22");
  }
  {
    std::vector<CrossedExtension> fs = shipped_xexts();
    const CrossedExtension& mul2 = fs[5];
    const CrossedExtension& zero22 = fs[0];
    WeakHomReport rep =
        weak_hom_set(mul2, zero22, identity_hom(mul2.c), identity_hom(mul2.b), budget);
    s.expect(rep.classes.size() == 2, "mul2 -> zero22 weak maps != 2");
  }
  {
    CrossedExtension zero22 = zero_xext(trivial_action(cyclic_group(2), cyclic_group(2)));
    CrossedExtension ztriv = zero_xext(trivial_action(trivial_group(), trivial_group()));
    WeakHomReport rep = weak_hom_set(zero22, ztriv, zero_hom(zero22.c, ztriv.c),
                                     zero_hom(zero22.b, ztriv.b), budget);
    s.expect(rep.classes.size() == 1, "maps into the trivial module != 1 class");
  }
  return s.finish();
}

// criterion 6: the Schreier-Mac Lane sweep
SuiteResult suite_schreier_mac_lane(long long budget) {
  Suite s("schreier-mac-lane");
  std::vector<FiniteGroup> cs = groups_of_order_upto(3);
  std::vector<FiniteGroup> ks = groups_of_order_upto(6);
  long long kernels = 0, classes_total = 0;
  for (const FiniteGroup& c : cs)
    for (const FiniteGroup& k : ks) {
      GroupStructureReport kst = structure_of(k, budget);
      for (const Homomorphism& psi0 : enumerate_homs(c, kst.outer, budget)) {
        SMLReport rep = sml_report(make_abstract_kernel(c, k, psi0.images, budget), budget);
        s.expect(rep.violation.empty(), "SML violation: " + rep.violation);
        s.expect(rep.obstruction_vanishes == !rep.ext_classes.empty(),
                 "obstruction verdict disagrees with enumeration");
        if (!rep.ext_classes.empty()) {
          s.expect(rep.counts_match, "class count != |H2|");
          s.expect(rep.torsor_verified, "H2 action not simply transitive");
        }
        ++kernels;
        classes_total += static_cast<long long>(rep.ext_classes.size());
      }
    }
  s.line(fmt_count("abstract kernels swept", kernels));
  s.line(fmt_count("extension classes found", classes_total));

  // pinned instances
  SMLReport a = sml_report(make_abstract_kernel(cyclic_group(2), cyclic_group(3), {0, 1}, budget),
                           budget);
  s.expect(a.ext_classes.size() == 1, "(Z2,Z3,id) != 1 class");
  SMLReport b = sml_report(make_abstract_kernel(cyclic_group(2), cyclic_group(2), {0, 0}, budget),
                           budget);
  s.expect(b.ext_classes.size() == 2, "(Z2,Z2,triv) != 2 classes");
  return s.finish();
}

// criterion 7: cross-stack consistency of the finite-category encoding
SuiteResult suite_cross_stack(long long budget) {
  Suite s("cross-stack");
  FiniteGroup z2 = cyclic_group(2);
  AbelianAction triv = trivial_action(z2, z2);
  FOFTriple t = encode_opext_universe({triv}, budget);
  FofCheck chk = check_fof(t);
  s.expect(chk.ok, "encoded OPEXT triangle fails validation: " + chk.reason);
  s.expect(fibres_groupoidal(t), "encoded OPEXT triangle has non-groupoidal fibres");

  // rebuild the representative extensions and the module-morphism list in the
  // exact object/morphism order used by the encoder
  CohomologyGroup h2 = cohomology_group(2, triv, budget);
  std::vector<Extension> reps;
  for (const Cochain& rep : h2.all_class_representatives(budget))
    reps.push_back(ext_of_cocycle(triv, rep));
  std::vector<std::pair<Homomorphism, Homomorphism>> mod_morphisms;
  for (const Homomorphism& phi0 : enumerate_homs(z2, z2, budget))
    for (const Homomorphism& phi1 : equivariant_homs(triv, triv, phi0, budget))
      mod_morphisms.emplace_back(phi0, phi1);
  s.expect(static_cast<int>(mod_morphisms.size()) == t.m.num_morphisms(),
           "module morphism count differs from the encoding");

  long long compared = 0;
  for (Idx x = 0; x < t.x.num_objects; ++x)
    for (Idx y = 0; y < t.x.num_objects; ++y)
      for (Idx phi = 0; phi < t.m.num_morphisms(); ++phi) {
        if (t.m.mors[phi].src != t.p.on_obj(x) || t.m.mors[phi].dst != t.p.on_obj(y)) continue;
        TorsorReport abstract_rep = torsor_certificate(t, x, y, phi);
        s.expect(abstract_rep.verdict != TorsorVerdict::Violation,
                 "abstract verdict is a violation");
        const Homomorphism& phi0 = mod_morphisms[phi].first;
        const Homomorphism& phi1 = mod_morphisms[phi].second;
        ClassificationReport concrete = classify(reps[x], reps[y], phi0, phi1, budget);
        s.expect(concrete.verdict == abstract_rep.verdict, "verdicts differ across the stack");
        s.expect(concrete.homset.size() == abstract_rep.homset.size(),
                 "hom-set sizes differ across the stack");
        if (concrete.verdict == TorsorVerdict::Torsor)
          s.expect(concrete.z1.size() == static_cast<size_t>(abstract_rep.acting_group.order),
                   "|Z1| != |H| across the stack");
        ++compared;
      }
  s.line(fmt_count("cross-checked obstruction problems", compared));
  return s.finish();
}

// criterion 8 (file half): parse -> serialize byte identity
SuiteResult suite_io_roundtrip(const std::string& fixtures_dir) {
  Suite s("io-roundtrip");
  auto files = canonical_fixtures();
  Bundle bundle;
  for (const auto& [name, content] : files) parse_text_into(bundle, content, name);
  for (const auto& [name, content] : files)
    s.expect(serialize_file(bundle, name) == content,
             "canonical corpus round trip differs for " + name);
  s.line(fmt_count("canonical files round-tripped", static_cast<long long>(files.size())));

  if (!fixtures_dir.empty()) {
    long long checked = 0;
    Bundle disk;
    for (const auto& [name, content] : files) {
      std::ifstream in(fixtures_dir + "/" + name, std::ios::binary);
      if (!in) {
        s.expect(false, "missing fixture file " + name);
        continue;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      s.expect(ss.str() == content, "fixture file " + name + " differs from the canonical form");
      parse_text_into(disk, ss.str(), name);
      s.expect(serialize_file(disk, name) == ss.str(), "disk round trip differs for " + name);
      ++checked;
    }
    s.line(fmt_count("fixture files checked on disk", checked));
  }
  return s.finish();
}

}  // namespace

// ---------------------------------------------------------------------------

FOFTriple encode_opext_universe(const std::vector<AbelianAction>& modules, long long budget) {
  // base category: the distinct acting groups with all homomorphisms
  std::vector<FiniteGroup> bases;
  std::vector<int> module_base(modules.size());
  for (size_t i = 0; i < modules.size(); ++i) {
    int found = -1;
    for (size_t j = 0; j < bases.size(); ++j)
      if (bases[j] == modules[i].actor) found = static_cast<int>(j);
    if (found < 0) {
      found = static_cast<int>(bases.size());
      bases.push_back(modules[i].actor);
    }
    module_base[i] = found;
  }
  struct BMor {
    int src, dst;
    Homomorphism hom;
  };
  std::vector<BMor> bmors;
  for (size_t a = 0; a < bases.size(); ++a)
    for (size_t b = 0; b < bases.size(); ++b)
      for (const Homomorphism& h : enumerate_homs(bases[a], bases[b], budget))
        bmors.push_back(BMor{static_cast<int>(a), static_cast<int>(b), h});
  auto bmor_index = [&](int src, int dst, const std::vector<Idx>& images) {
    for (size_t i = 0; i < bmors.size(); ++i)
      if (bmors[i].src == src && bmors[i].dst == dst && bmors[i].hom.images == images)
        return static_cast<Idx>(i);
    fail(ErrorKind::InternalError, "missing base morphism");
  };
  std::vector<FinCategory::Mor> bcm(bmors.size());
  std::vector<Idx> bident(bases.size(), -1);
  for (size_t i = 0; i < bmors.size(); ++i) {
    bcm[i] = FinCategory::Mor{bmors[i].src, bmors[i].dst};
    if (bmors[i].src == bmors[i].dst &&
        bmors[i].hom.images == identity_hom(bases[bmors[i].src]).images)
      bident[bmors[i].src] = static_cast<Idx>(i);
  }
  std::vector<std::vector<Idx>> bcomp(bmors.size(), std::vector<Idx>(bmors.size(), -1));
  for (size_t g = 0; g < bmors.size(); ++g)
    for (size_t f = 0; f < bmors.size(); ++f) {
      if (bmors[f].dst != bmors[g].src) continue;
      bcomp[g][f] = bmor_index(bmors[f].src, bmors[g].dst,
                               compose_homs(bmors[g].hom, bmors[f].hom).images);
    }
  FinCategory bcat =
      validate_category(static_cast<int>(bases.size()), bcm, bident, bcomp);

  // module category: objects the modules, arrows the equivariant pairs
  struct MMor {
    int src, dst;
    Homomorphism phi0, phi1;
  };
  std::vector<MMor> mmors;
  for (size_t a = 0; a < modules.size(); ++a)
    for (size_t b = 0; b < modules.size(); ++b)
      for (const Homomorphism& phi0 : enumerate_homs(modules[a].actor, modules[b].actor, budget))
        for (const Homomorphism& phi1 : equivariant_homs(modules[a], modules[b], phi0, budget))
          mmors.push_back(MMor{static_cast<int>(a), static_cast<int>(b), phi0, phi1});
  auto mmor_index = [&](int src, int dst, const std::vector<Idx>& i0, const std::vector<Idx>& i1) {
    for (size_t i = 0; i < mmors.size(); ++i)
      if (mmors[i].src == src && mmors[i].dst == dst && mmors[i].phi0.images == i0 &&
          mmors[i].phi1.images == i1)
        return static_cast<Idx>(i);
    fail(ErrorKind::InternalError, "missing module morphism");
  };
  std::vector<FinCategory::Mor> mcm(mmors.size());
  std::vector<Idx> mident(modules.size(), -1);
  for (size_t i = 0; i < mmors.size(); ++i) {
    mcm[i] = FinCategory::Mor{mmors[i].src, mmors[i].dst};
    if (mmors[i].src == mmors[i].dst &&
        mmors[i].phi0.images == identity_hom(modules[mmors[i].src].actor).images &&
        mmors[i].phi1.images == identity_hom(modules[mmors[i].src].module).images)
      mident[mmors[i].src] = static_cast<Idx>(i);
  }
  std::vector<std::vector<Idx>> mcomp(mmors.size(), std::vector<Idx>(mmors.size(), -1));
  for (size_t g = 0; g < mmors.size(); ++g)
    for (size_t f = 0; f < mmors.size(); ++f) {
      if (mmors[f].dst != mmors[g].src) continue;
      mcomp[g][f] = mmor_index(mmors[f].src, mmors[g].dst,
                               compose_homs(mmors[g].phi0, mmors[f].phi0).images,
                               compose_homs(mmors[g].phi1, mmors[f].phi1).images);
    }
  FinCategory mcat = validate_category(static_cast<int>(modules.size()), mcm, mident, mcomp);

  // extension category: objects the class representatives of every module
  struct XObj {
    int module;
    Extension ext;
  };
  std::vector<XObj> xobjs;
  for (size_t i = 0; i < modules.size(); ++i) {
    CohomologyGroup h2 = cohomology_group(2, modules[i], budget);
    for (const Cochain& rep : h2.all_class_representatives(budget))
      xobjs.push_back(XObj{static_cast<int>(i), ext_of_cocycle(modules[i], rep)});
  }
  struct XMor {
    int src, dst;
    Homomorphism hom;  // on the middle groups, preserving the kernels
    Idx over;          // module morphism index
  };
  std::vector<XMor> xmors;
  for (size_t a = 0; a < xobjs.size(); ++a)
    for (size_t b = 0; b < xobjs.size(); ++b) {
      const Extension& e = xobjs[a].ext;
      const Extension& ep = xobjs[b].ext;
      for (const Homomorphism& h : enumerate_homs(e.e, ep.e, budget)) {
        // kernel preservation determines phi1 and phi0
        std::vector<Idx> phi1(e.b.order, -1), phi0(e.c.order, -1);
        bool ok = true;
        for (Idx v = 0; v < e.b.order && ok; ++v) {
          phi1[v] = ep.kernel_preimage(h.apply(e.k.apply(v)));
          ok = phi1[v] >= 0;
        }
        for (Idx u = 0; u < e.e.order && ok; ++u) {
          Idx cx = e.f.apply(u);
          Idx img = ep.f.apply(h.apply(u));
          if (phi0[cx] < 0)
            phi0[cx] = img;
          else
            ok = phi0[cx] == img;
        }
        if (!ok) continue;
        Idx over = -1;
        for (size_t i = 0; i < mmors.size(); ++i)
          if (mmors[i].src == xobjs[a].module && mmors[i].dst == xobjs[b].module &&
              mmors[i].phi0.images == phi0 && mmors[i].phi1.images == phi1)
            over = static_cast<Idx>(i);
        if (over < 0) continue;  // not equivariant, not a module morphism
        xmors.push_back(XMor{static_cast<int>(a), static_cast<int>(b), h, over});
      }
    }
  auto xmor_index = [&](int src, int dst, const std::vector<Idx>& images) {
    for (size_t i = 0; i < xmors.size(); ++i)
      if (xmors[i].src == src && xmors[i].dst == dst && xmors[i].hom.images == images)
        return static_cast<Idx>(i);
    fail(ErrorKind::InternalError, "extension morphisms are not closed under composition");
  };
  std::vector<FinCategory::Mor> xcm(xmors.size());
  std::vector<Idx> xident(xobjs.size(), -1);
  for (size_t i = 0; i < xmors.size(); ++i) {
    xcm[i] = FinCategory::Mor{xmors[i].src, xmors[i].dst};
    if (xmors[i].src == xmors[i].dst &&
        xmors[i].hom.images == identity_hom(xobjs[xmors[i].src].ext.e).images)
      xident[xmors[i].src] = static_cast<Idx>(i);
  }
  std::vector<std::vector<Idx>> xcomp(xmors.size(), std::vector<Idx>(xmors.size(), -1));
  for (size_t g = 0; g < xmors.size(); ++g)
    for (size_t f = 0; f < xmors.size(); ++f) {
      if (xmors[f].dst != xmors[g].src) continue;
      xcomp[g][f] =
          xmor_index(xmors[f].src, xmors[g].dst, compose_homs(xmors[g].hom, xmors[f].hom).images);
    }
  FinCategory xcat = validate_category(static_cast<int>(xobjs.size()), xcm, xident, xcomp);

  // the three functors
  std::vector<Idx> p_obj(xobjs.size()), p_mor(xmors.size());
  for (size_t o = 0; o < xobjs.size(); ++o) p_obj[o] = xobjs[o].module;
  for (size_t i = 0; i < xmors.size(); ++i) p_mor[i] = xmors[i].over;
  FunctorTable p = validate_functor(xcat, mcat, p_obj, p_mor);

  std::vector<Idx> g_obj(modules.size()), g_mor(mmors.size());
  for (size_t o = 0; o < modules.size(); ++o) g_obj[o] = module_base[o];
  for (size_t i = 0; i < mmors.size(); ++i)
    g_mor[i] = bmor_index(module_base[mmors[i].src], module_base[mmors[i].dst],
                          mmors[i].phi0.images);
  FunctorTable g = validate_functor(mcat, bcat, g_obj, g_mor);

  std::vector<Idx> f_obj(xobjs.size()), f_mor(xmors.size());
  for (size_t o = 0; o < xobjs.size(); ++o) f_obj[o] = g_obj[xobjs[o].module];
  for (size_t i = 0; i < xmors.size(); ++i) f_mor[i] = g_mor[xmors[i].over];
  FunctorTable f = validate_functor(xcat, bcat, f_obj, f_mor);

  return make_fof_triple(std::move(xcat), std::move(mcat), std::move(bcat), std::move(p),
                         std::move(f), std::move(g));
}

std::vector<std::string> verify_suite_names() {
  return {"abstract-torsor", "opext-classification", "cohomology",       "butterfly-calculus",
          "weak-maps",       "schreier-mac-lane",    "cross-stack",      "io-roundtrip"};
}

SuiteResult run_verify_suite(const std::string& name, uint64_t seed, long long budget,
                             const std::string& fixtures_dir) {
  budget = resolve_budget(budget);
  if (name == "abstract-torsor") return suite_abstract_torsor(seed, budget);
  if (name == "opext-classification") return suite_opext_classification(budget);
  if (name == "cohomology") return suite_cohomology(seed, budget);
  if (name == "butterfly-calculus") return suite_butterfly_calculus(budget);
  if (name == "weak-maps") return suite_weak_maps(budget);
  if (name == "schreier-mac-lane") return suite_schreier_mac_lane(budget);
  if (name == "cross-stack") return suite_cross_stack(budget);
  if (name == "io-roundtrip") return suite_io_roundtrip(fixtures_dir);
  fail(ErrorKind::ValidationError, "unknown verify suite '" + name + "'");
}

}  // namespace obk
