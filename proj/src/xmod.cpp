#include "obstrukt/xmod.hpp"

#include <algorithm>

namespace obk {

namespace {

void check_group_action(const FiniteGroup& actor, const FiniteGroup& target,
                        const std::vector<Idx>& act) {
  if (act.size() != static_cast<size_t>(actor.order) * target.order)
    fail(ErrorKind::ValidationError, "action table has wrong size");
  auto ap = [&](Idx a, Idx t) { return act[static_cast<size_t>(a) * target.order + t]; };
  for (Idx a = 0; a < actor.order; ++a) {
    std::vector<char> seen(target.order, 0);
    for (Idx t = 0; t < target.order; ++t) {
      Idx w = ap(a, t);
      if (w < 0 || w >= target.order || seen[w])
        fail(ErrorKind::NotAutomorphism, "act(" + std::to_string(a) + ",-) is not a bijection");
      seen[w] = 1;
    }
    for (Idx t = 0; t < target.order; ++t)
      for (Idx u = 0; u < target.order; ++u)
        if (ap(a, target.mul(t, u)) != target.mul(ap(a, t), ap(a, u)))
          fail(ErrorKind::NotAutomorphism, "act(" + std::to_string(a) + ",-) is not multiplicative");
  }
  for (Idx t = 0; t < target.order; ++t)
    if (ap(actor.identity, t) != t) fail(ErrorKind::NotFunctorial, "act(e,-) is not the identity");
  for (Idx a = 0; a < actor.order; ++a)
    for (Idx b = 0; b < actor.order; ++b)
      for (Idx t = 0; t < target.order; ++t)
        if (ap(actor.mul(a, b), t) != ap(a, ap(b, t)))
          fail(ErrorKind::NotFunctorial, "action is not functorial");
}

}  // namespace

CrossedModule validate_xmod(const Homomorphism& boundary, const std::vector<Idx>& act) {
  CrossedModule xm{boundary.source, boundary.target, boundary, act};
  check_group_action(xm.g1, xm.g2, act);
  const FiniteGroup& g1 = xm.g1;
  const FiniteGroup& g2 = xm.g2;
  for (Idx a = 0; a < g1.order; ++a)
    for (Idx t = 0; t < g2.order; ++t)
      if (boundary.apply(xm.act_on(a, t)) != g1.conj(a, boundary.apply(t)))
        fail(ErrorKind::PrecrossedViolation,
             "equivariance fails at g1=" + std::to_string(a) + ", g2=" + std::to_string(t));
  for (Idx t = 0; t < g2.order; ++t)
    for (Idx u = 0; u < g2.order; ++u)
      if (xm.act_on(boundary.apply(t), u) != g2.conj(t, u))
        fail(ErrorKind::PeifferViolation,
             "Peiffer identity fails at g2=" + std::to_string(t) + ", g2'=" + std::to_string(u));
  return xm;
}

Idx CrossedExtension::j_preimage(Idx g2) const {
  for (Idx v = 0; v < b.order; ++v)
    if (j.apply(v) == g2) return v;
  return -1;
}

Idx CrossedExtension::section(Idx x) const {
  if (x == c.identity) return xm.g1.identity;
  for (Idx a = 0; a < xm.g1.order; ++a)
    if (p.apply(a) == x) return a;
  fail(ErrorKind::InternalError, "cokernel projection is not surjective");
}

CrossedExtension validate_xext(const CrossedModule& xm, const FiniteGroup& b, const FiniteGroup& c,
                               const Homomorphism& j, const Homomorphism& p) {
  if (!b.is_abelian()) fail(ErrorKind::NotAbelian, "crossed extension kernel must be abelian");
  if (!(j.source == b) || !(j.target == xm.g2) || !(p.source == xm.g1) || !(p.target == c))
    fail(ErrorKind::SourceTargetMismatch, "crossed extension maps do not line up");
  if (!j.is_injective()) fail(ErrorKind::ValidationError, "kernel map is not injective");
  if (!p.is_surjective()) fail(ErrorKind::ValidationError, "cokernel projection is not surjective");
  if (j.image() != xm.boundary.kernel())
    fail(ErrorKind::ValidationError, "im(j) != ker(boundary)");
  if (xm.boundary.image() != p.kernel())
    fail(ErrorKind::ValidationError, "im(boundary) != ker(p)");
  // the kernel of a crossed module is central in G2
  for (Idx v = 0; v < b.order; ++v)
    for (Idx t = 0; t < xm.g2.order; ++t)
      if (xm.g2.mul(j.apply(v), t) != xm.g2.mul(t, j.apply(v)))
        fail(ErrorKind::ValidationError, "kernel is not central in G2");
  return CrossedExtension{xm, b, c, j, p};
}

CrossedExtension xext_of_xmod(const CrossedModule& xm) {
  auto emb = subgroup_from(xm.g2, xm.boundary.kernel());
  auto quo = quotient_by(xm.g1, xm.boundary.image());
  return validate_xext(xm, emb.sub, quo.quo, emb.incl, quo.proj);
}

CrossedExtension zero_xext(const AbelianAction& module) {
  Homomorphism zero = zero_hom(module.module, module.actor);
  CrossedModule xm = validate_xmod(zero, module.act);
  return validate_xext(xm, module.module, module.actor, identity_hom(module.module),
                       identity_hom(module.actor));
}

AbelianAction pi(const CrossedExtension& x) {
  const FiniteGroup& c = x.c;
  const FiniteGroup& b = x.b;
  std::vector<Idx> act(static_cast<size_t>(c.order) * b.order);
  for (Idx cx = 0; cx < c.order; ++cx) {
    Idx g1 = x.section(cx);
    for (Idx v = 0; v < b.order; ++v) {
      Idx img = x.j_preimage(x.xm.act_on(g1, x.j.apply(v)));
      if (img < 0) fail(ErrorKind::InternalError, "G1-action does not preserve the kernel");
      act[static_cast<size_t>(cx) * b.order + v] = img;
    }
  }
  // independence of the preimage choice
  for (Idx a = 0; a < x.xm.g1.order; ++a)
    for (Idx v = 0; v < b.order; ++v)
      if (x.j_preimage(x.xm.act_on(a, x.j.apply(v))) !=
          act[static_cast<size_t>(x.p.apply(a)) * b.order + v])
        fail(ErrorKind::InternalError, "induced module structure depends on the preimage");
  return make_action(c, b, act);
}

XExtMorphism make_xext_morphism(const CrossedExtension& x, const CrossedExtension& xp,
                                const Homomorphism& f1, const Homomorphism& f2) {
  if (!(f1.source == x.xm.g1) || !(f1.target == xp.xm.g1) || !(f2.source == x.xm.g2) ||
      !(f2.target == xp.xm.g2))
    fail(ErrorKind::SourceTargetMismatch, "morphism legs do not line up");
  for (Idx t = 0; t < x.xm.g2.order; ++t)
    if (xp.xm.boundary.apply(f2.apply(t)) != f1.apply(x.xm.boundary.apply(t)))
      fail(ErrorKind::ValidationError, "boundary square does not commute");
  for (Idx a = 0; a < x.xm.g1.order; ++a)
    for (Idx t = 0; t < x.xm.g2.order; ++t)
      if (f2.apply(x.xm.act_on(a, t)) != xp.xm.act_on(f1.apply(a), f2.apply(t)))
        fail(ErrorKind::ValidationError, "morphism is not equivariant");
  std::vector<Idx> beta_im(x.b.order);
  for (Idx v = 0; v < x.b.order; ++v) {
    Idx w = xp.j_preimage(f2.apply(x.j.apply(v)));
    if (w < 0) fail(ErrorKind::ValidationError, "f2 does not restrict to the kernels");
    beta_im[v] = w;
  }
  std::vector<Idx> gamma_im(x.c.order);
  for (Idx cx = 0; cx < x.c.order; ++cx) gamma_im[cx] = xp.p.apply(f1.apply(x.section(cx)));
  for (Idx a = 0; a < x.xm.g1.order; ++a)
    if (xp.p.apply(f1.apply(a)) != gamma_im[x.p.apply(a)])
      fail(ErrorKind::ValidationError, "f1 does not descend to the cokernels");
  return XExtMorphism{make_hom(x.c, xp.c, gamma_im), f1, f2, make_hom(x.b, xp.b, beta_im)};
}

XExtMorphism identity_xext_morphism(const CrossedExtension& x) {
  return make_xext_morphism(x, x, identity_hom(x.xm.g1), identity_hom(x.xm.g2));
}

XExtMorphism compose_xext_morphisms(const XExtMorphism& outer, const XExtMorphism& inner) {
  return XExtMorphism{compose_homs(outer.gamma, inner.gamma), compose_homs(outer.f1, inner.f1),
                      compose_homs(outer.f2, inner.f2), compose_homs(outer.beta, inner.beta)};
}

std::vector<XExtMorphism> enumerate_xext_morphisms(const CrossedExtension& x,
                                                   const CrossedExtension& xp, long long budget) {
  std::vector<XExtMorphism> out;
  for (const Homomorphism& f1 : enumerate_homs(x.xm.g1, xp.xm.g1, budget))
    for (const Homomorphism& f2 : enumerate_homs(x.xm.g2, xp.xm.g2, budget)) {
      bool ok = true;
      for (Idx t = 0; t < x.xm.g2.order && ok; ++t)
        ok = xp.xm.boundary.apply(f2.apply(t)) == f1.apply(x.xm.boundary.apply(t));
      for (Idx a = 0; a < x.xm.g1.order && ok; ++a)
        for (Idx t = 0; t < x.xm.g2.order && ok; ++t)
          ok = f2.apply(x.xm.act_on(a, t)) == xp.xm.act_on(f1.apply(a), f2.apply(t));
      if (ok) out.push_back(make_xext_morphism(x, xp, f1, f2));
    }
  return out;
}

MorphismClass morphism_class(const XExtMorphism& m) {
  MorphismClass out;
  bool pi0_iso = m.gamma.is_bijective();
  out.weak_equivalence = pi0_iso && m.beta.is_bijective();
  out.final_morphism = pi0_iso && m.beta.is_surjective();
  out.discrete_fibration = m.f2.is_bijective();
  return out;
}

Cochain three_cocycle_with_choices(const CrossedExtension& x, const std::vector<Idx>& s,
                                   const std::vector<Idx>& m) {
  const FiniteGroup& c = x.c;
  const FiniteGroup& g1 = x.xm.g1;
  const FiniteGroup& g2 = x.xm.g2;
  if (s.size() != static_cast<size_t>(c.order) || s[c.identity] != g1.identity)
    fail(ErrorKind::ValidationError, "section must be normalized");
  for (Idx cx = 0; cx < c.order; ++cx)
    if (x.p.apply(s[cx]) != cx) fail(ErrorKind::ValidationError, "section does not split p");
  auto mat = [&](Idx a, Idx bx) { return m[static_cast<size_t>(a) * c.order + bx]; };
  if (m.size() != static_cast<size_t>(c.order) * c.order)
    fail(ErrorKind::ValidationError, "factor lift has wrong size");
  for (Idx a = 0; a < c.order; ++a)
    for (Idx bx = 0; bx < c.order; ++bx) {
      Idx target = g1.mul(g1.mul(s[a], s[bx]), g1.inv(s[c.mul(a, bx)]));
      if (x.xm.boundary.apply(mat(a, bx)) != target)
        fail(ErrorKind::ValidationError, "factor lift does not cover the section defect");
      if ((a == c.identity || bx == c.identity) && mat(a, bx) != g2.identity)
        fail(ErrorKind::ValidationError, "factor lift must be normalized");
    }

  AbelianAction module = pi(x);
  Cochain omega = zero_cochain(3, module);
  for (Idx a = 0; a < c.order; ++a)
    for (Idx bx = 0; bx < c.order; ++bx)
      for (Idx cz = 0; cz < c.order; ++cz) {
        Idx lhs = g2.mul(mat(a, bx), mat(c.mul(a, bx), cz));
        Idx rhs = g2.mul(x.xm.act_on(s[a], mat(bx, cz)), mat(a, c.mul(bx, cz)));
        Idx val = g2.mul(lhs, g2.inv(rhs));
        Idx w = x.j_preimage(val);
        if (w < 0) fail(ErrorKind::InternalError, "associator escapes the kernel");
        omega.values[(static_cast<size_t>(a) * c.order + bx) * c.order + cz] = w;
      }
  omega = make_cochain(3, module, omega.values);
  if (!differential(omega).is_zero())
    fail(ErrorKind::InternalError, "extracted 3-cochain is not a cocycle");
  return omega;
}

Cochain three_cocycle_of(const CrossedExtension& x) {
  const FiniteGroup& c = x.c;
  const FiniteGroup& g1 = x.xm.g1;
  std::vector<Idx> s(c.order);
  for (Idx cx = 0; cx < c.order; ++cx) s[cx] = x.section(cx);
  std::vector<Idx> m(static_cast<size_t>(c.order) * c.order, x.xm.g2.identity);
  for (Idx a = 0; a < c.order; ++a)
    for (Idx bx = 0; bx < c.order; ++bx) {
      Idx target = g1.mul(g1.mul(s[a], s[bx]), g1.inv(s[c.mul(a, bx)]));
      Idx pick = -1;
      for (Idx t = 0; t < x.xm.g2.order; ++t)
        if (x.xm.boundary.apply(t) == target) {
          pick = t;
          break;
        }
      if (pick < 0) fail(ErrorKind::InternalError, "section defect is not in the boundary image");
      m[static_cast<size_t>(a) * c.order + bx] = pick;
    }
  return three_cocycle_with_choices(x, s, m);
}

XExtTransport transport_xext(const CrossedExtension& x, const CrossedExtension& xp,
                             const Homomorphism& phi0, const Homomorphism& phi) {
  if (!(phi0.source == x.c) || !(phi0.target == xp.c) || !(phi.source == x.b) ||
      !(phi.target == xp.b))
    fail(ErrorKind::SourceTargetMismatch, "transport maps do not line up");
  AbelianAction xi = pi(x);
  AbelianAction pulled = pullback_action(phi0, pi(xp));
  for (Idx cx = 0; cx < x.c.order; ++cx)
    for (Idx v = 0; v < x.b.order; ++v)
      if (phi.apply(xi.apply(cx, v)) != pulled.apply(cx, phi.apply(v)))
        fail(ErrorKind::NotEquivariant, "phi is not equivariant");

  XExtTransport out;

  // pullback: replace G1' by G1' x_{C'} C, keep G2' and B'
  {
    const FiniteGroup& g1p = xp.xm.g1;
    FiniteGroup prod = product_group(g1p, x.c);
    std::vector<Idx> elems;
    for (Idx a = 0; a < g1p.order; ++a)
      for (Idx cx = 0; cx < x.c.order; ++cx)
        if (xp.p.apply(a) == phi0.apply(cx)) elems.push_back(a * x.c.order + cx);
    auto emb = subgroup_from(prod, elems);
    std::vector<Idx> bim(xp.xm.g2.order);
    for (Idx t = 0; t < xp.xm.g2.order; ++t)
      bim[t] = emb.pos_of(xp.xm.boundary.apply(t) * x.c.order + x.c.identity);
    Homomorphism boundary = make_hom(xp.xm.g2, emb.sub, bim);
    std::vector<Idx> act(static_cast<size_t>(emb.sub.order) * xp.xm.g2.order);
    for (Idx i = 0; i < emb.sub.order; ++i) {
      Idx a = emb.elems[i] / x.c.order;
      for (Idx t = 0; t < xp.xm.g2.order; ++t)
        act[static_cast<size_t>(i) * xp.xm.g2.order + t] = xp.xm.act_on(a, t);
    }
    CrossedModule xm = validate_xmod(boundary, act);
    std::vector<Idx> pim(emb.sub.order);
    for (Idx i = 0; i < emb.sub.order; ++i) pim[i] = emb.elems[i] % x.c.order;
    out.pullback = validate_xext(xm, xp.b, x.c, xp.j, make_hom(emb.sub, x.c, pim));
  }

  // pushforward: replace G2 by (B' x G2)/{(phi(b), j(b)^-1)}, keep G1 and C
  {
    const FiniteGroup& bp = xp.b;
    const FiniteGroup& g2 = x.xm.g2;
    FiniteGroup prod = product_group(bp, g2);
    std::vector<Idx> nelems;
    for (Idx v = 0; v < x.b.order; ++v)
      nelems.push_back(phi.apply(v) * g2.order + g2.inv(x.j.apply(v)));
    std::sort(nelems.begin(), nelems.end());
    if (!is_normal_subgroup(prod, nelems))
      fail(ErrorKind::InternalError, "push-forward congruence is not normal");
    auto quo = quotient_by(prod, nelems);
    if (quo.quo.order != bp.order * g2.order / x.b.order)
      fail(ErrorKind::InternalError, "push-forward has the wrong order");

    std::vector<Idx> dim(quo.quo.order);
    for (Idx q = 0; q < quo.quo.order; ++q) dim[q] = x.xm.boundary.apply(quo.reps[q] % g2.order);
    // well-definedness of the induced boundary and action over each coset
    std::vector<Idx> act(static_cast<size_t>(x.xm.g1.order) * quo.quo.order, -1);
    for (Idx vb = 0; vb < bp.order; ++vb)
      for (Idx t = 0; t < g2.order; ++t) {
        Idx q = quo.proj.apply(vb * g2.order + t);
        if (x.xm.boundary.apply(t) != dim[q])
          fail(ErrorKind::InternalError, "push-forward boundary is not well defined");
        for (Idx a = 0; a < x.xm.g1.order; ++a) {
          Idx image = quo.proj.apply(pulled.apply(x.p.apply(a), vb) * g2.order + x.xm.act_on(a, t));
          Idx& slot = act[static_cast<size_t>(a) * quo.quo.order + q];
          if (slot < 0)
            slot = image;
          else if (slot != image)
            fail(ErrorKind::InternalError, "push-forward action is not well defined");
        }
      }
    CrossedModule xm = validate_xmod(make_hom(quo.quo, x.xm.g1, dim), act);
    std::vector<Idx> jim(bp.order);
    for (Idx v = 0; v < bp.order; ++v) jim[v] = quo.proj.apply(v * g2.order + g2.identity);
    out.pushforward = validate_xext(xm, bp, x.c, make_hom(bp, quo.quo, jim), x.p);
  }

  // both transports must land over the pulled-back module
  if (!(pi(out.pushforward) == pulled) || !(pi(out.pullback) == pulled))
    fail(ErrorKind::InternalError, "transport does not induce the pulled-back module");
  return out;
}

}  // namespace obk
