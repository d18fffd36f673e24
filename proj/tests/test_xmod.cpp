#include "doctest.h"

#include <algorithm>

#include "obstrukt/xmod.hpp"

using namespace obk;

namespace {

FiniteGroup s3() {
  // symmetric group via the split extension Z3 x| Z2 (tables agree up to iso)
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  AbelianAction inv = make_action(z2, z3, {0, 1, 2, 0, 2, 1});
  int n = 6;
  std::vector<Idx> flat(36);
  auto idx = [](Idx b, Idx x) { return b * 2 + x; };
  for (Idx b1 = 0; b1 < 3; ++b1)
    for (Idx x1 = 0; x1 < 2; ++x1)
      for (Idx b2 = 0; b2 < 3; ++b2)
        for (Idx x2 = 0; x2 < 2; ++x2)
          flat[static_cast<size_t>(idx(b1, x1)) * n + idx(b2, x2)] =
              idx(z3.mul(b1, inv.apply(x1, b2)), z2.mul(x1, x2));
  return validate_group_flat(n, flat);
}

// X: Z2 -> Z4 -(mult by 2)-> Z4 -> Z2 with trivial actions
CrossedExtension mul2_xext() {
  FiniteGroup z4 = cyclic_group(4);
  Homomorphism dbl = make_hom(z4, z4, {0, 2, 0, 2});
  std::vector<Idx> triv_act(16);
  for (Idx a = 0; a < 4; ++a)
    for (Idx t = 0; t < 4; ++t) triv_act[static_cast<size_t>(a) * 4 + t] = t;
  return xext_of_xmod(validate_xmod(dbl, triv_act));
}

std::vector<Idx> conj_action_table(const FiniteGroup& g) {
  std::vector<Idx> act(static_cast<size_t>(g.order) * g.order);
  for (Idx a = 0; a < g.order; ++a)
    for (Idx t = 0; t < g.order; ++t) act[static_cast<size_t>(a) * g.order + t] = g.conj(a, t);
  return act;
}

}  // namespace

TEST_CASE("validate_xmod: conjugation inclusion, zero maps, Peiffer violation") {
  FiniteGroup s = s3();

  // N = Z3 normal in S3 with conjugation action of S3 on N
  std::vector<Idx> n_elems;
  for (Idx x = 0; x < 6; ++x)
    if (s.element_order(x) != 2) n_elems.push_back(x);
  auto emb = subgroup_from(s, n_elems);
  std::vector<Idx> act(static_cast<size_t>(s.order) * emb.sub.order);
  for (Idx a = 0; a < s.order; ++a)
    for (Idx t = 0; t < emb.sub.order; ++t)
      act[static_cast<size_t>(a) * emb.sub.order + t] = emb.pos_of(s.conj(a, emb.elems[t]));
  CrossedModule conj_incl = validate_xmod(emb.incl, act);
  CHECK(conj_incl.g2.order == 3);

  // zero boundary Z2 -> Z2 with trivial action is a crossed module
  FiniteGroup z2 = cyclic_group(2);
  std::vector<Idx> triv22 = {0, 1, 0, 1};
  CHECK_NOTHROW(validate_xmod(zero_hom(z2, z2), triv22));

  // zero boundary S3 -> Z2 with trivial action violates Peiffer
  std::vector<Idx> triv_s3(static_cast<size_t>(z2.order) * s.order);
  for (Idx a = 0; a < z2.order; ++a)
    for (Idx t = 0; t < s.order; ++t) triv_s3[static_cast<size_t>(a) * s.order + t] = t;
  CHECK_THROWS_WITH_AS(validate_xmod(zero_hom(s, z2), triv_s3),
                       doctest::Contains("PeifferViolation"), Error);
}

TEST_CASE("pi: isomorphism boundary, conjugation extension of Z3, zero boundary") {
  // boundary an isomorphism: B and C trivial
  FiniteGroup z3 = cyclic_group(3);
  std::vector<Idx> conj3 = conj_action_table(z3);
  CrossedExtension xiso = xext_of_xmod(validate_xmod(identity_hom(z3), conj3));
  CHECK(xiso.b.order == 1);
  CHECK(xiso.c.order == 1);

  // conjugation crossed extension of Z3: C = Out(Z3) = Z2 acting by inversion
  FiniteGroup z2 = cyclic_group(2);
  AbelianAction inv = make_action(z2, z3, {0, 1, 2, 0, 2, 1});
  CrossedExtension xconj = zero_xext(inv);
  AbelianAction induced = pi(xconj);
  CHECK(induced.actor.order == 2);
  CHECK(induced.apply(1, 1) == 2);

  // zero boundary Z2 -> Z2, trivial action
  CrossedExtension xz = zero_xext(trivial_action(z2, z2));
  CHECK(pi(xz).is_trivial());
}

TEST_CASE("morphism_class: identity, discrete fibration only, final only") {
  FiniteGroup z2 = cyclic_group(2), z4 = cyclic_group(4), triv = trivial_group();

  CrossedExtension x22 = zero_xext(trivial_action(z2, z2));
  MorphismClass mc_id = morphism_class(identity_xext_morphism(x22));
  CHECK(mc_id.weak_equivalence);
  CHECK(mc_id.final_morphism);
  CHECK(mc_id.discrete_fibration);

  // f2 iso, pi0 not iso: (Z2 -> Z2 -> 1 -> 1) into the zero xext on (Z2,Z2)
  CrossedExtension xsmall = zero_xext(trivial_action(triv, z2));
  XExtMorphism df = make_xext_morphism(xsmall, x22, zero_hom(triv, z2), identity_hom(z2));
  MorphismClass mc_df = morphism_class(df);
  CHECK(mc_df.discrete_fibration);
  CHECK_FALSE(mc_df.final_morphism);
  CHECK_FALSE(mc_df.weak_equivalence);

  // pi0 iso, pi1 epi non-iso: zero xext on (Z2,Z4) onto zero xext on (Z2,Z2)
  CrossedExtension x24 = zero_xext(trivial_action(z2, z4));
  XExtMorphism fin = make_xext_morphism(x24, x22, identity_hom(z2), make_hom(z4, z2, {0, 1, 0, 1}));
  MorphismClass mc_fin = morphism_class(fin);
  CHECK(mc_fin.final_morphism);
  CHECK_FALSE(mc_fin.weak_equivalence);
  CHECK_FALSE(mc_fin.discrete_fibration);

  // cross-check of definitions: weak equivalence iff final and pi1 injective
  for (const XExtMorphism& m : enumerate_xext_morphisms(x24, x22)) {
    MorphismClass mc = morphism_class(m);
    CHECK(mc.weak_equivalence == (mc.final_morphism && m.beta.is_injective()));
  }
}

TEST_CASE("a weak equivalence need not be invertible") {
  FiniteGroup z2 = cyclic_group(2), triv = trivial_group();
  FiniteGroup v4 = product_group(z2, z2);

  // X: Z2 -> V4 -pr1-> Z2 -> 1 (trivial action), X': Z2 = Z2 -> 1 -> 1
  Homomorphism pr1 = make_hom(v4, z2, {0, 0, 1, 1});
  std::vector<Idx> triv_act(static_cast<size_t>(z2.order) * v4.order);
  for (Idx a = 0; a < z2.order; ++a)
    for (Idx t = 0; t < v4.order; ++t) triv_act[static_cast<size_t>(a) * v4.order + t] = t;
  CrossedExtension x = xext_of_xmod(validate_xmod(pr1, triv_act));
  CHECK(x.c.order == 1);
  CHECK(x.b.order == 2);

  CrossedExtension xp = zero_xext(trivial_action(triv, z2));
  Homomorphism f2 = make_hom(v4, z2, {0, 1, 0, 1});  // pr2: kills the boundary kernel's complement
  XExtMorphism we = make_xext_morphism(x, xp, zero_hom(z2, triv), f2);
  CHECK(morphism_class(we).weak_equivalence);
  CHECK_FALSE(f2.is_bijective());

  // no inverse: nothing composes with it to the identity on either side
  for (const XExtMorphism& g : enumerate_xext_morphisms(xp, x)) {
    XExtMorphism round = compose_xext_morphisms(g, we);
    CHECK_FALSE(round.f2.images == identity_hom(v4).images);
  }
}

TEST_CASE("pi is functorial on fixture morphisms") {
  FiniteGroup z2 = cyclic_group(2), z4 = cyclic_group(4);
  CrossedExtension x24 = zero_xext(trivial_action(z2, z4));
  CrossedExtension x22 = zero_xext(trivial_action(z2, z2));
  for (const XExtMorphism& m1 : enumerate_xext_morphisms(x24, x22))
    for (const XExtMorphism& m2 : enumerate_xext_morphisms(x22, x22)) {
      XExtMorphism comp = compose_xext_morphisms(m2, m1);
      CHECK(comp.gamma.images == compose_homs(m2.gamma, m1.gamma).images);
      CHECK(comp.beta.images == compose_homs(m2.beta, m1.beta).images);
    }
}

TEST_CASE("three_cocycle_of: zero extension, split p, mul2 regression value") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);

  // the zero crossed extension yields the zero cocycle
  CrossedExtension xz = zero_xext(make_action(z2, z3, {0, 1, 2, 0, 2, 1}));
  CHECK(three_cocycle_of(xz).is_zero());

  // p split by a homomorphism with m = 0 choosable: any zero_xext qualifies,
  // and the class is a coboundary
  CrossedExtension xz22 = zero_xext(trivial_action(z2, z2));
  CHECK(is_coboundary(three_cocycle_of(xz22)));

  // mul2: Z2 -> Z4 -2-> Z4 -> Z2. Canonical choices give the zero cochain
  // exactly; pinned as a regression value (class is trivial).
  CrossedExtension xm = mul2_xext();
  Cochain om = three_cocycle_of(xm);
  CHECK(differential(om).is_zero());
  CHECK(om.is_zero());
  CHECK(is_coboundary(om));
}

TEST_CASE("three_cocycle_of is section-independent up to coboundary") {
  CrossedExtension xm = mul2_xext();
  const FiniteGroup& c = xm.c;
  const FiniteGroup& g1 = xm.xm.g1;
  // alternative section: largest-index preimages; alternative lift: largest
  std::vector<Idx> s(c.order), m(static_cast<size_t>(c.order) * c.order);
  for (Idx cx = 0; cx < c.order; ++cx) {
    s[cx] = g1.identity;
    if (cx != c.identity)
      for (Idx a = 0; a < g1.order; ++a)
        if (xm.p.apply(a) == cx) s[cx] = a;  // keeps the last one
  }
  for (Idx a = 0; a < c.order; ++a)
    for (Idx bx = 0; bx < c.order; ++bx) {
      Idx target = g1.mul(g1.mul(s[a], s[bx]), g1.inv(s[c.mul(a, bx)]));
      Idx pick = xm.xm.g2.identity;
      if (a != c.identity && bx != c.identity)
        for (Idx t = 0; t < xm.xm.g2.order; ++t)
          if (xm.xm.boundary.apply(t) == target) pick = t;  // keeps the last one
      m[static_cast<size_t>(a) * c.order + bx] = pick;
    }
  Cochain alt = three_cocycle_with_choices(xm, s, m);
  CHECK(differential(alt).is_zero());
  CHECK(is_coboundary(sub_cochains(three_cocycle_of(xm), alt)));
}

TEST_CASE("transport_xext: identities, order count, pullback along the trivial map") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), triv = trivial_group();
  CrossedExtension xm = mul2_xext();

  XExtTransport tid = transport_xext(xm, xm, identity_hom(z2), identity_hom(z2));
  CHECK(tid.pushforward.xm.g2.order == 4);
  CHECK(tid.pullback.xm.g1.order == 4);
  // canonical isos back to the input exist
  bool found_push = false, found_pull = false;
  for (const XExtMorphism& m : enumerate_xext_morphisms(tid.pushforward, xm))
    if (m.f1.is_bijective() && m.f2.is_bijective() && m.beta.is_bijective() &&
        m.gamma.is_bijective())
      found_push = true;
  for (const XExtMorphism& m : enumerate_xext_morphisms(tid.pullback, xm))
    if (m.f1.is_bijective() && m.f2.is_bijective() && m.beta.is_bijective() &&
        m.gamma.is_bijective())
      found_pull = true;
  CHECK(found_push);
  CHECK(found_pull);

  // |B' x^B G2| = |B'| |G2| / |B| : push mul2 along Z2 -> Z3? not equivariant;
  // use zero xext on (Z2, Z2) pushed along Z2 -> Z4 doubling
  FiniteGroup z4 = cyclic_group(4);
  CrossedExtension x22 = zero_xext(trivial_action(z2, z2));
  CrossedExtension x24 = zero_xext(trivial_action(z2, z4));
  XExtTransport tp = transport_xext(x22, x24, identity_hom(z2), make_hom(z2, z4, {0, 2}));
  CHECK(tp.pushforward.xm.g2.order == 4 * 2 / 2);

  // pullback along the map from the trivial group: C becomes trivial, G2 stays
  CrossedExtension xconj = zero_xext(make_action(z2, z3, {0, 1, 2, 0, 2, 1}));
  XExtTransport tt = transport_xext(zero_xext(trivial_action(triv, triv)), xconj,
                                    make_hom(triv, z2, {0}), zero_hom(triv, z3));
  CHECK(tt.pullback.c.order == 1);
  CHECK(tt.pullback.xm.g2.order == 3);
}

TEST_CASE("the inversion-twisted doubling has an essential 3-cocycle class") {
  FiniteGroup z4 = cyclic_group(4);
  std::vector<Idx> tw(16);
  for (Idx a = 0; a < 4; ++a)
    for (Idx t = 0; t < 4; ++t) tw[static_cast<size_t>(a) * 4 + t] = (a % 2 == 0) ? t : z4.inv(t);
  CrossedExtension xtw = xext_of_xmod(validate_xmod(make_hom(z4, z4, {0, 2, 0, 2}), tw));
  CHECK(pi(xtw).is_trivial());
  Cochain om = three_cocycle_of(xtw);
  CHECK(differential(om).is_zero());
  CHECK_FALSE(om.is_zero());
  CHECK_FALSE(is_coboundary(om));
}
