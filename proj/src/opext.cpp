#include "obstrukt/opext.hpp"

#include <algorithm>

namespace obk {

Idx Extension::section(Idx x) const {
  if (x == c.identity) return e.identity;
  for (Idx u = 0; u < e.order; ++u)
    if (f.apply(u) == x) return u;
  fail(ErrorKind::InternalError, "projection is not surjective");
}

Idx Extension::kernel_preimage(Idx eidx) const {
  for (Idx v = 0; v < b.order; ++v)
    if (k.apply(v) == eidx) return v;
  return -1;
}

AbelianAction Extension::induced_action() const {
  AbelianAction a;
  a.actor = c;
  a.module = b;
  a.act.resize(static_cast<size_t>(c.order) * b.order);
  for (Idx x = 0; x < c.order; ++x) {
    Idx s = section(x);
    for (Idx v = 0; v < b.order; ++v) {
      Idx img = kernel_preimage(e.conj(s, k.apply(v)));
      if (img < 0) fail(ErrorKind::ValidationError, "kernel is not stable under conjugation");
      a.act[static_cast<size_t>(x) * b.order + v] = img;
    }
  }
  return a;
}

Extension validate_extension(const FiniteGroup& b, const FiniteGroup& e, const FiniteGroup& c,
                             const Homomorphism& k, const Homomorphism& f) {
  if (!b.is_abelian()) fail(ErrorKind::NotAbelian, "extension kernel must be abelian");
  if (!(k.source == b) || !(k.target == e) || !(f.source == e) || !(f.target == c))
    fail(ErrorKind::SourceTargetMismatch, "extension maps do not line up");
  if (!k.is_injective()) fail(ErrorKind::ValidationError, "kernel map is not injective");
  if (!f.is_surjective()) fail(ErrorKind::ValidationError, "projection is not surjective");
  if (k.image() != f.kernel()) fail(ErrorKind::ValidationError, "im(k) != ker(f)");

  Extension ext{b, e, c, k, f};
  // the induced action must not depend on the chosen preimage
  for (Idx u = 0; u < e.order; ++u) {
    Idx s = ext.section(f.apply(u));
    for (Idx v = 0; v < b.order; ++v)
      if (ext.kernel_preimage(e.conj(u, k.apply(v))) != ext.kernel_preimage(e.conj(s, k.apply(v))))
        fail(ErrorKind::ValidationError, "induced action depends on the preimage choice");
  }
  make_action(c, b, ext.induced_action().act);  // full axiom check
  return ext;
}

ExtensionMorphism validate_extension_morphism(const Extension& e, const Extension& ep,
                                              const Homomorphism& phi1, const Homomorphism& mid,
                                              const Homomorphism& phi0) {
  if (!(phi1.source == e.b) || !(phi1.target == ep.b) || !(mid.source == e.e) ||
      !(mid.target == ep.e) || !(phi0.source == e.c) || !(phi0.target == ep.c))
    fail(ErrorKind::SourceTargetMismatch, "morphism legs do not line up");
  for (Idx v = 0; v < e.b.order; ++v)
    if (mid.apply(e.k.apply(v)) != ep.k.apply(phi1.apply(v)))
      fail(ErrorKind::ValidationError, "left square does not commute");
  for (Idx u = 0; u < e.e.order; ++u)
    if (ep.f.apply(mid.apply(u)) != phi0.apply(e.f.apply(u)))
      fail(ErrorKind::ValidationError, "right square does not commute");
  return ExtensionMorphism{phi1, mid, phi0};
}

Extension ext_of_cocycle(const AbelianAction& action, const Cochain& eps) {
  if (!(eps.action == action) || eps.degree != 2)
    fail(ErrorKind::ModuleMismatch, "cocycle does not match the module");
  if (!is_cocycle(eps)) fail(ErrorKind::NotACocycle, "d2(eps) != 0");
  const FiniteGroup& bg = action.module;
  const FiniteGroup& cg = action.actor;
  int n = bg.order * cg.order;
  auto idx = [&](Idx b, Idx x) { return b * cg.order + x; };
  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (Idx b1 = 0; b1 < bg.order; ++b1)
    for (Idx x1 = 0; x1 < cg.order; ++x1)
      for (Idx b2 = 0; b2 < bg.order; ++b2)
        for (Idx x2 = 0; x2 < cg.order; ++x2) {
          Idx b = bg.mul(bg.mul(b1, action.apply(x1, b2)), eps.value_at({x1, x2}));
          flat[static_cast<size_t>(idx(b1, x1)) * n + idx(b2, x2)] = idx(b, cg.mul(x1, x2));
        }
  FiniteGroup e = validate_group_flat(n, std::move(flat));
  std::vector<Idx> kim(bg.order), fim(n);
  for (Idx v = 0; v < bg.order; ++v) kim[v] = idx(v, cg.identity);
  for (Idx b = 0; b < bg.order; ++b)
    for (Idx x = 0; x < cg.order; ++x) fim[idx(b, x)] = x;
  return validate_extension(bg, e, cg, make_hom(bg, e, kim), make_hom(e, cg, fim));
}

Extension split_extension(const AbelianAction& action) {
  return ext_of_cocycle(action, zero_cochain(2, action));
}

ExtCocycle cocycle_of_ext_with_section(const Extension& ext, const std::vector<Idx>& s) {
  if (s.size() != static_cast<size_t>(ext.c.order) || s[ext.c.identity] != ext.e.identity)
    fail(ErrorKind::ValidationError, "section must be normalized");
  for (Idx x = 0; x < ext.c.order; ++x)
    if (ext.f.apply(s[x]) != x) fail(ErrorKind::ValidationError, "section does not split f");
  ExtCocycle out{ext.induced_action(), zero_cochain(2, ext.induced_action())};
  const FiniteGroup& e = ext.e;
  for (Idx x = 0; x < ext.c.order; ++x)
    for (Idx y = 0; y < ext.c.order; ++y) {
      Idx val = ext.kernel_preimage(e.mul(e.mul(s[x], s[y]), e.inv(s[ext.c.mul(x, y)])));
      if (val < 0) fail(ErrorKind::InternalError, "factor set escapes the kernel");
      out.eps.values[static_cast<size_t>(x) * ext.c.order + y] = val;
    }
  out.eps = make_cochain(2, out.action, out.eps.values);  // re-validate normalization
  if (!is_cocycle(out.eps)) fail(ErrorKind::InternalError, "extracted factor set is not a cocycle");
  return out;
}

ExtCocycle cocycle_of_ext(const Extension& ext) {
  std::vector<Idx> s(ext.c.order);
  for (Idx x = 0; x < ext.c.order; ++x) s[x] = ext.section(x);
  return cocycle_of_ext_with_section(ext, s);
}

namespace {

// h(k1(b) s1(x)) = k2(b + t(x)) s2(x); a homomorphism iff d1(t) = eps1 - eps2.
Homomorphism transfer_hom(const Extension& e1, const Extension& e2, const Cochain& t) {
  const FiniteGroup& bg = e1.b;
  std::vector<Idx> im(e1.e.order);
  for (Idx u = 0; u < e1.e.order; ++u) {
    Idx x = e1.f.apply(u);
    Idx b = e1.kernel_preimage(e1.e.mul(u, e1.e.inv(e1.section(x))));
    if (b < 0) fail(ErrorKind::InternalError, "element does not factor through the section");
    Idx bshift = bg.mul(b, t.value_at({x}));
    im[u] = e2.e.mul(e2.k.apply(bshift), e2.section(x));
  }
  return make_hom(e1.e, e2.e, std::move(im));
}

}  // namespace

TransportResult transport(const Extension& e, const Extension& ep, const Homomorphism& phi0,
                          const Homomorphism& phi1) {
  if (!(phi0.source == e.c) || !(phi0.target == ep.c) || !(phi1.source == e.b) ||
      !(phi1.target == ep.b))
    fail(ErrorKind::SourceTargetMismatch, "transport maps do not line up");
  AbelianAction xi = e.induced_action();
  AbelianAction pulled = pullback_action(phi0, ep.induced_action());
  for (Idx x = 0; x < e.c.order; ++x)
    for (Idx v = 0; v < e.b.order; ++v)
      if (phi1.apply(xi.apply(x, v)) != pulled.apply(x, phi1.apply(v)))
        fail(ErrorKind::NotEquivariant, "phi1 is not equivariant at (" + std::to_string(x) + "," +
                                            std::to_string(v) + ")");

  TransportResult out;

  // pullback E' x_{C'} C
  {
    FiniteGroup prod = product_group(ep.e, e.c);
    std::vector<Idx> elems;
    for (Idx u = 0; u < ep.e.order; ++u)
      for (Idx x = 0; x < e.c.order; ++x)
        if (ep.f.apply(u) == phi0.apply(x)) elems.push_back(u * e.c.order + x);
    auto emb = subgroup_from(prod, elems);
    std::vector<Idx> kim(ep.b.order), fim(emb.sub.order);
    for (Idx v = 0; v < ep.b.order; ++v)
      kim[v] = emb.pos_of(ep.k.apply(v) * e.c.order + e.c.identity);
    for (Idx i = 0; i < emb.sub.order; ++i) fim[i] = emb.elems[i] % e.c.order;
    out.pullback = validate_extension(ep.b, emb.sub, e.c, make_hom(ep.b, emb.sub, kim),
                                      make_hom(emb.sub, e.c, fim));
  }

  // pushforward: (B' x| E) / {(phi1(b), k(b)^-1)}, the product twisted by the
  // pulled-back action through f so the congruence subgroup is normal
  {
    const FiniteGroup& bp = ep.b;
    int n = bp.order * e.e.order;
    auto idx = [&](Idx b, Idx u) { return b * e.e.order + u; };
    std::vector<Idx> flat(static_cast<size_t>(n) * n);
    for (Idx b1 = 0; b1 < bp.order; ++b1)
      for (Idx u1 = 0; u1 < e.e.order; ++u1)
        for (Idx b2 = 0; b2 < bp.order; ++b2)
          for (Idx u2 = 0; u2 < e.e.order; ++u2) {
            Idx b = bp.mul(b1, pulled.apply(e.f.apply(u1), b2));
            flat[static_cast<size_t>(idx(b1, u1)) * n + idx(b2, u2)] = idx(b, e.e.mul(u1, u2));
          }
    FiniteGroup sd = validate_group_flat(n, std::move(flat));
    std::vector<Idx> nelems;
    for (Idx v = 0; v < e.b.order; ++v)
      nelems.push_back(idx(phi1.apply(v), e.e.inv(e.k.apply(v))));
    std::sort(nelems.begin(), nelems.end());
    if (!is_normal_subgroup(sd, nelems))
      fail(ErrorKind::InternalError, "push-forward congruence is not normal");
    auto quo = quotient_by(sd, nelems);
    if (quo.quo.order != bp.order * e.c.order)
      fail(ErrorKind::InternalError, "push-forward has the wrong order");
    std::vector<Idx> kim(bp.order), fim(quo.quo.order);
    for (Idx v = 0; v < bp.order; ++v) kim[v] = quo.proj.apply(idx(v, e.e.identity));
    for (Idx q = 0; q < quo.quo.order; ++q) fim[q] = e.f.apply(quo.reps[q] % e.e.order);
    out.pushforward = validate_extension(bp, quo.quo, e.c, make_hom(bp, quo.quo, kim),
                                         make_hom(quo.quo, e.c, fim));
  }
  return out;
}

Extension baer_sum(const Extension& e1, const Extension& e2) {
  if (!(e1.b == e2.b) || !(e1.c == e2.c))
    fail(ErrorKind::ModuleMismatch, "Baer sum needs the same (C,B)");
  ExtCocycle c1 = cocycle_of_ext(e1), c2 = cocycle_of_ext(e2);
  if (!(c1.action == c2.action)) fail(ErrorKind::ModuleMismatch, "Baer sum needs the same action");
  return ext_of_cocycle(c1.action, add_cochains(c1.eps, c2.eps));
}

std::vector<Homomorphism> extension_homset(const Extension& e, const Extension& ep,
                                           const Homomorphism& phi0, const Homomorphism& phi1,
                                           long long budget) {
  std::vector<Homomorphism> out;
  for (const Homomorphism& h : enumerate_homs(e.e, ep.e, budget)) {
    bool ok = true;
    for (Idx v = 0; v < e.b.order && ok; ++v)
      ok = h.apply(e.k.apply(v)) == ep.k.apply(phi1.apply(v));
    for (Idx u = 0; u < e.e.order && ok; ++u)
      ok = ep.f.apply(h.apply(u)) == phi0.apply(e.f.apply(u));
    if (ok) out.push_back(h);
  }
  return out;
}

std::optional<Homomorphism> find_fibre_iso_raw(const Extension& e1, const Extension& e2,
                                               long long budget) {
  if (!(e1.b == e2.b) || !(e1.c == e2.c)) return std::nullopt;
  for (const Homomorphism& h :
       extension_homset(e1, e2, identity_hom(e1.c), identity_hom(e1.b), budget))
    if (h.is_bijective()) return h;
  return std::nullopt;
}

ClassificationReport classify(const Extension& e, const Extension& ep, const Homomorphism& phi0,
                              const Homomorphism& phi1, long long budget) {
  ClassificationReport rep;
  AbelianAction pulled = pullback_action(phi0, ep.induced_action());

  TransportResult tr = transport(e, ep, phi0, phi1);  // validates equivariance
  rep.pushforward_ext = tr.pushforward;
  rep.pullback_ext = tr.pullback;

  ExtCocycle push_c = cocycle_of_ext(tr.pushforward);
  ExtCocycle pull_c = cocycle_of_ext(tr.pullback);
  if (!(push_c.action == pulled) || !(pull_c.action == pulled)) {
    rep.verdict = TorsorVerdict::Violation;
    rep.violation = "transports do not induce the pulled-back module";
    return rep;
  }

  // fibre isomorphism via cocycle classes (raw table search is the test oracle)
  if (auto w = coboundary_witness(sub_cochains(push_c.eps, pull_c.eps))) {
    Homomorphism h = transfer_hom(tr.pushforward, tr.pullback, *w);
    if (!h.is_bijective()) {
      rep.verdict = TorsorVerdict::Violation;
      rep.violation = "fibre morphism is not an isomorphism (short five fails)";
      return rep;
    }
    rep.fibre_iso = validate_extension_morphism(tr.pushforward, tr.pullback, identity_hom(ep.b), h,
                                                identity_hom(e.c));
  }

  for (const Homomorphism& h : extension_homset(e, ep, phi0, phi1, budget))
    rep.homset.push_back(ExtensionMorphism{phi1, h, phi0});

  rep.z1 = cocycle_list(1, pulled, budget);

  ExtCocycle ec = cocycle_of_ext(e);
  ExtCocycle epc = cocycle_of_ext(ep);
  rep.cocycle_criterion = is_coboundary(
      sub_cochains(push_cochain(ec.eps, phi1, pulled), pullback_cochain(epc.eps, phi0)));

  // three independently computed existence routes must agree
  bool nonempty = !rep.homset.empty();
  if (nonempty != rep.fibre_iso.has_value() || nonempty != rep.cocycle_criterion) {
    rep.verdict = TorsorVerdict::Violation;
    rep.violation = "existence criteria disagree";
    return rep;
  }
  if (!nonempty) {
    rep.verdict = TorsorVerdict::Empty;
    return rep;
  }

  // the Z^1 action t*h = (u -> k'(t(f(u))).h(u)) must be simply transitive
  auto hom_index = [&](const std::vector<Idx>& images) -> int {
    for (size_t i = 0; i < rep.homset.size(); ++i)
      if (rep.homset[i].mid.images == images) return static_cast<int>(i);
    return -1;
  };
  rep.action_table.assign(rep.z1.size(), std::vector<int>(rep.homset.size(), -1));
  for (size_t ti = 0; ti < rep.z1.size(); ++ti)
    for (size_t hi = 0; hi < rep.homset.size(); ++hi) {
      std::vector<Idx> im(e.e.order);
      for (Idx u = 0; u < e.e.order; ++u)
        im[u] = ep.e.mul(ep.k.apply(rep.z1[ti].value_at({e.f.apply(u)})),
                         rep.homset[hi].mid.apply(u));
      int target = hom_index(im);
      if (target < 0) {
        rep.verdict = TorsorVerdict::Violation;
        rep.violation = "Z1 action leaves the hom-set";
        return rep;
      }
      rep.action_table[ti][hi] = target;
    }
  if (rep.z1.size() != rep.homset.size()) {
    rep.verdict = TorsorVerdict::Violation;
    rep.violation = "|homset| != |Z1|";
    return rep;
  }
  for (size_t h1 = 0; h1 < rep.homset.size(); ++h1)
    for (size_t h2 = 0; h2 < rep.homset.size(); ++h2) {
      int count = 0;
      for (size_t ti = 0; ti < rep.z1.size(); ++ti)
        if (rep.action_table[ti][h1] == static_cast<int>(h2)) ++count;
      if (count != 1) {
        rep.verdict = TorsorVerdict::Violation;
        rep.violation = "action is not simply transitive";
        return rep;
      }
    }
  rep.verdict = TorsorVerdict::Torsor;
  return rep;
}

}  // namespace obk
