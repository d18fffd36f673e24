#include "obstrukt/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace obk {

std::vector<Idx> FinCategory::homset(Idx a, Idx b) const {
  std::vector<Idx> out;
  for (Idx f = 0; f < num_morphisms(); ++f)
    if (mors[f].src == a && mors[f].dst == b) out.push_back(f);
  return out;
}

FinCategory validate_category(int num_objects, std::vector<FinCategory::Mor> mors,
                              std::vector<Idx> identity, std::vector<std::vector<Idx>> comp) {
  FinCategory c;
  c.num_objects = num_objects;
  c.mors = std::move(mors);
  c.identity = std::move(identity);
  c.comp = std::move(comp);
  int m = c.num_morphisms();
  if (num_objects <= 0) fail(ErrorKind::ValidationError, "category needs at least one object");
  if (static_cast<int>(c.identity.size()) != num_objects)
    fail(ErrorKind::ValidationError, "identity list has wrong length");
  for (const auto& mor : c.mors)
    if (mor.src < 0 || mor.src >= num_objects || mor.dst < 0 || mor.dst >= num_objects)
      fail(ErrorKind::ValidationError, "morphism endpoints out of range");
  if (static_cast<int>(c.comp.size()) != m)
    fail(ErrorKind::ValidationError, "composition table has wrong size");
  for (const auto& row : c.comp)
    if (static_cast<int>(row.size()) != m) fail(ErrorKind::ValidationError, "composition table not square");

  for (Idx o = 0; o < num_objects; ++o) {
    Idx e = c.identity[o];
    if (e < 0 || e >= m || c.mors[e].src != o || c.mors[e].dst != o)
      fail(ErrorKind::ValidationError, "identity of object " + std::to_string(o) + " is not an endomorphism");
  }
  for (Idx g = 0; g < m; ++g)
    for (Idx f = 0; f < m; ++f) {
      bool composable = c.mors[f].dst == c.mors[g].src;
      Idx gf = c.comp[g][f];
      if (!composable) {
        if (gf != -1) fail(ErrorKind::ValidationError, "composition defined on non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= m)
        fail(ErrorKind::ValidationError, "missing composite for a composable pair");
      if (c.mors[gf].src != c.mors[f].src || c.mors[gf].dst != c.mors[g].dst)
        fail(ErrorKind::ValidationError, "composite has wrong endpoints");
    }
  for (Idx f = 0; f < m; ++f) {
    if (c.comp[f][c.identity[c.mors[f].src]] != f)
      fail(ErrorKind::ValidationError, "right identity law fails at morphism " + std::to_string(f));
    if (c.comp[c.identity[c.mors[f].dst]][f] != f)
      fail(ErrorKind::ValidationError, "left identity law fails at morphism " + std::to_string(f));
  }
  for (Idx h = 0; h < m; ++h)
    for (Idx g = 0; g < m; ++g) {
      if (c.mors[g].dst != c.mors[h].src) continue;
      Idx hg = c.comp[h][g];
      for (Idx f = 0; f < m; ++f) {
        if (c.mors[f].dst != c.mors[g].src) continue;
        if (c.comp[hg][f] != c.comp[h][c.comp[g][f]])
          fail(ErrorKind::NotAssociative, "morphism triple (" + std::to_string(h) + "," +
                                              std::to_string(g) + "," + std::to_string(f) + ")");
      }
    }
  return c;
}

FunctorTable validate_functor(const FinCategory& src, const FinCategory& dst,
                              std::vector<Idx> obj_map, std::vector<Idx> mor_map) {
  if (static_cast<int>(obj_map.size()) != src.num_objects ||
      static_cast<int>(mor_map.size()) != src.num_morphisms())
    fail(ErrorKind::ValidationError, "functor tables have wrong sizes");
  for (Idx o : obj_map)
    if (o < 0 || o >= dst.num_objects) fail(ErrorKind::ValidationError, "object image out of range");
  for (Idx f : mor_map)
    if (f < 0 || f >= dst.num_morphisms())
      fail(ErrorKind::ValidationError, "morphism image out of range");
  for (Idx f = 0; f < src.num_morphisms(); ++f) {
    if (dst.mors[mor_map[f]].src != obj_map[src.mors[f].src] ||
        dst.mors[mor_map[f]].dst != obj_map[src.mors[f].dst])
      fail(ErrorKind::ValidationError, "functor breaks sources/targets at morphism " + std::to_string(f));
  }
  for (Idx o = 0; o < src.num_objects; ++o)
    if (mor_map[src.identity[o]] != dst.identity[obj_map[o]])
      fail(ErrorKind::ValidationError, "functor breaks identities at object " + std::to_string(o));
  for (Idx g = 0; g < src.num_morphisms(); ++g)
    for (Idx f = 0; f < src.num_morphisms(); ++f) {
      if (src.mors[f].dst != src.mors[g].src) continue;
      if (mor_map[src.comp[g][f]] != dst.comp[mor_map[g]][mor_map[f]])
        fail(ErrorKind::ValidationError, "functor breaks composition at (" + std::to_string(g) + "," +
                                             std::to_string(f) + ")");
    }
  return FunctorTable{src, dst, std::move(obj_map), std::move(mor_map)};
}

FunctorTable identity_functor(const FinCategory& c) {
  std::vector<Idx> om(c.num_objects), mm(c.num_morphisms());
  for (Idx o = 0; o < c.num_objects; ++o) om[o] = o;
  for (Idx f = 0; f < c.num_morphisms(); ++f) mm[f] = f;
  return FunctorTable{c, c, std::move(om), std::move(mm)};
}

namespace {

// morphisms of c bucketed by source object, computed once per check
std::vector<std::vector<Idx>> bucket_by_src(const FinCategory& c) {
  std::vector<std::vector<Idx>> out(c.num_objects);
  for (Idx f = 0; f < c.num_morphisms(); ++f) out[c.mors[f].src].push_back(f);
  return out;
}

}  // namespace

bool is_cartesian(const FunctorTable& p, Idx f, CartesianWitness* witness) {
  const FinCategory& x = p.source;
  const FinCategory& base = p.target;
  Idx sx = x.mors[f].src, dx = x.mors[f].dst;
  std::vector<std::vector<Idx>> by_src = bucket_by_src(x);
  for (Idx x2 = 0; x2 < x.num_objects; ++x2) {
    // collect candidate arrows out of x2 once
    std::vector<Idx> into_sx, into_dx;
    for (Idx h : by_src[x2]) {
      if (x.mors[h].dst == sx) into_sx.push_back(h);
      if (x.mors[h].dst == dx) into_dx.push_back(h);
    }
    for (Idx alpha = 0; alpha < base.num_morphisms(); ++alpha) {
      if (base.mors[alpha].src != p.on_obj(x2) || base.mors[alpha].dst != p.on_obj(sx)) continue;
      Idx target_img = base.compose(p.on_mor(f), alpha);
      // every k: x2 -> dst(f) over P(f).alpha must have exactly one lifting
      for (Idx k : into_dx) {
        if (p.on_mor(k) != target_img) continue;
        int liftings = 0;
        for (Idx h : into_sx)
          if (p.on_mor(h) == alpha && x.compose(f, h) == k) ++liftings;
        if (liftings != 1) {
          if (witness) *witness = CartesianWitness{x2, alpha, liftings};
          return false;
        }
      }
      // injectivity: distinct liftings over alpha compose to distinct arrows
      std::vector<Idx> composites;
      for (Idx h : into_sx)
        if (p.on_mor(h) == alpha) composites.push_back(x.compose(f, h));
      std::sort(composites.begin(), composites.end());
      if (std::adjacent_find(composites.begin(), composites.end()) != composites.end()) {
        if (witness) *witness = CartesianWitness{x2, alpha, 2};
        return false;
      }
    }
  }
  return true;
}

bool is_opcartesian(const FunctorTable& p, Idx f, CartesianWitness* witness) {
  const FinCategory& x = p.source;
  const FinCategory& base = p.target;
  Idx sx = x.mors[f].src, dx = x.mors[f].dst;
  std::vector<std::vector<Idx>> from_dx_by_dst(x.num_objects), from_sx_by_dst(x.num_objects);
  for (Idx h = 0; h < x.num_morphisms(); ++h) {
    if (x.mors[h].src == dx) from_dx_by_dst[x.mors[h].dst].push_back(h);
    if (x.mors[h].src == sx) from_sx_by_dst[x.mors[h].dst].push_back(h);
  }
  for (Idx y2 = 0; y2 < x.num_objects; ++y2)
    for (Idx beta = 0; beta < base.num_morphisms(); ++beta) {
      if (base.mors[beta].src != p.on_obj(dx) || base.mors[beta].dst != p.on_obj(y2)) continue;
      Idx target_img = base.compose(beta, p.on_mor(f));
      for (Idx k : from_sx_by_dst[y2]) {
        if (p.on_mor(k) != target_img) continue;
        int liftings = 0;
        for (Idx h : from_dx_by_dst[y2])
          if (p.on_mor(h) == beta && x.compose(h, f) == k) ++liftings;
        if (liftings != 1) {
          if (witness) *witness = CartesianWitness{y2, beta, liftings};
          return false;
        }
      }
      std::vector<Idx> composites;
      for (Idx h : from_dx_by_dst[y2])
        if (p.on_mor(h) == beta) composites.push_back(x.compose(h, f));
      std::sort(composites.begin(), composites.end());
      if (std::adjacent_find(composites.begin(), composites.end()) != composites.end()) {
        if (witness) *witness = CartesianWitness{y2, beta, 2};
        return false;
      }
    }
  return true;
}

Idx cartesian_lifting(const FunctorTable& p, Idx phi, Idx y) {
  for (Idx f = 0; f < p.source.num_morphisms(); ++f)
    if (p.source.mors[f].dst == y && p.on_mor(f) == phi && is_cartesian(p, f)) return f;
  return -1;
}

Idx opcartesian_lifting(const FunctorTable& p, Idx phi, Idx x) {
  for (Idx f = 0; f < p.source.num_morphisms(); ++f)
    if (p.source.mors[f].src == x && p.on_mor(f) == phi && is_opcartesian(p, f)) return f;
  return -1;
}

bool is_fibration(const FunctorTable& p, std::string* why) {
  for (Idx phi = 0; phi < p.target.num_morphisms(); ++phi)
    for (Idx y = 0; y < p.source.num_objects; ++y) {
      if (p.on_obj(y) != p.target.mors[phi].dst) continue;
      if (cartesian_lifting(p, phi, y) < 0) {
        if (why) {
          std::ostringstream os;
          os << "no cartesian lifting of base morphism " << phi << " at object " << y;
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

bool is_opfibration(const FunctorTable& p, std::string* why) {
  for (Idx phi = 0; phi < p.target.num_morphisms(); ++phi)
    for (Idx x = 0; x < p.source.num_objects; ++x) {
      if (p.on_obj(x) != p.target.mors[phi].src) continue;
      if (opcartesian_lifting(p, phi, x) < 0) {
        if (why) {
          std::ostringstream os;
          os << "no opcartesian lifting of base morphism " << phi << " at object " << x;
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

namespace {

// Materialized fibre of a functor over a base object, with index back-maps.
struct Fibre {
  FinCategory cat;
  std::vector<Idx> obj_back, mor_back;  // fibre index -> ambient index
  std::vector<Idx> obj_fwd, mor_fwd;    // ambient index -> fibre index or -1
};

Fibre fibre_over(const FunctorTable& p, Idx base_obj) {
  Fibre out;
  const FinCategory& x = p.source;
  out.obj_fwd.assign(x.num_objects, -1);
  out.mor_fwd.assign(x.num_morphisms(), -1);
  for (Idx o = 0; o < x.num_objects; ++o)
    if (p.on_obj(o) == base_obj) {
      out.obj_fwd[o] = static_cast<Idx>(out.obj_back.size());
      out.obj_back.push_back(o);
    }
  Idx base_id = p.target.identity[base_obj];
  for (Idx f = 0; f < x.num_morphisms(); ++f)
    if (p.on_mor(f) == base_id) {
      out.mor_fwd[f] = static_cast<Idx>(out.mor_back.size());
      out.mor_back.push_back(f);
    }
  int m = static_cast<int>(out.mor_back.size());
  std::vector<FinCategory::Mor> mors(m);
  for (int i = 0; i < m; ++i)
    mors[i] = FinCategory::Mor{out.obj_fwd[x.mors[out.mor_back[i]].src],
                               out.obj_fwd[x.mors[out.mor_back[i]].dst]};
  std::vector<Idx> ident(out.obj_back.size());
  for (size_t o = 0; o < out.obj_back.size(); ++o) ident[o] = out.mor_fwd[x.identity[out.obj_back[o]]];
  std::vector<std::vector<Idx>> comp(m, std::vector<Idx>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (mors[f].dst != mors[g].src) continue;
      Idx ambient = x.compose(out.mor_back[g], out.mor_back[f]);
      comp[g][f] = out.mor_fwd[ambient];
      if (comp[g][f] < 0) fail(ErrorKind::InternalError, "fibre is not closed under composition");
    }
  // laws are inherited from the validated ambient category
  out.cat.num_objects = static_cast<int>(out.obj_back.size());
  out.cat.mors = std::move(mors);
  out.cat.identity = std::move(ident);
  out.cat.comp = std::move(comp);
  return out;
}

FunctorTable restrict_to_fibres(const FunctorTable& p, const Fibre& from, const Fibre& to) {
  std::vector<Idx> om(from.obj_back.size()), mm(from.mor_back.size());
  for (size_t o = 0; o < from.obj_back.size(); ++o) {
    om[o] = to.obj_fwd[p.on_obj(from.obj_back[o])];
    if (om[o] < 0) fail(ErrorKind::InternalError, "fibre restriction escapes the target fibre");
  }
  for (size_t f = 0; f < from.mor_back.size(); ++f) {
    mm[f] = to.mor_fwd[p.on_mor(from.mor_back[f])];
    if (mm[f] < 0) fail(ErrorKind::InternalError, "fibre restriction escapes the target fibre");
  }
  return validate_functor(from.cat, to.cat, std::move(om), std::move(mm));
}

}  // namespace

FofCheck check_fof(const FOFTriple& t) {
  FofCheck out;
  // strict commutation G.P = F
  for (Idx o = 0; o < t.x.num_objects; ++o)
    if (t.g.on_obj(t.p.on_obj(o)) != t.f.on_obj(o)) {
      out.reason = "G.P != F on object " + std::to_string(o);
      return out;
    }
  for (Idx f = 0; f < t.x.num_morphisms(); ++f)
    if (t.g.on_mor(t.p.on_mor(f)) != t.f.on_mor(f)) {
      out.reason = "G.P != F on morphism " + std::to_string(f);
      return out;
    }
  std::string why;
  if (!is_fibration(t.f, &why)) {
    out.reason = "F is not a fibration: " + why;
    return out;
  }
  if (!is_fibration(t.g, &why)) {
    out.reason = "G is not a fibration: " + why;
    return out;
  }
  // P is a morphism of fibrations: it preserves cartesian morphisms
  for (Idx f = 0; f < t.x.num_morphisms(); ++f)
    if (is_cartesian(t.f, f) && !is_cartesian(t.g, t.p.on_mor(f))) {
      out.reason = "P does not preserve cartesianness at morphism " + std::to_string(f);
      return out;
    }
  // fibrewise opfibration: each restriction P_b is an opfibration
  for (Idx b0 = 0; b0 < t.b.num_objects; ++b0) {
    Fibre xb = fibre_over(t.f, b0);
    Fibre mb = fibre_over(t.g, b0);
    FunctorTable pb = restrict_to_fibres(t.p, xb, mb);
    if (!is_opfibration(pb, &why)) {
      out.reason = "P restricted over base object " + std::to_string(b0) +
                   " is not an opfibration: " + why;
      return out;
    }
  }
  out.ok = true;
  return out;
}

FOFTriple make_fof_triple(FinCategory x, FinCategory m, FinCategory b, FunctorTable p,
                          FunctorTable f, FunctorTable g) {
  FOFTriple t{std::move(x), std::move(m), std::move(b), std::move(p), std::move(f), std::move(g)};
  FofCheck chk = check_fof(t);
  if (!chk.ok) {
    if (chk.reason.rfind("G.P != F", 0) == 0) fail(ErrorKind::CompositionMismatch, chk.reason);
    fail(ErrorKind::ValidationError, chk.reason);
  }
  return t;
}

bool fibres_groupoidal(const FOFTriple& t, std::string* witness) {
  for (Idx f = 0; f < t.x.num_morphisms(); ++f) {
    Idx img = t.p.on_mor(f);
    if (t.m.identity[t.m.mors[img].src] != img) continue;  // not P-vertical
    Idx sx = t.x.mors[f].src, dx = t.x.mors[f].dst;
    bool invertible = false;
    for (Idx h = 0; h < t.x.num_morphisms(); ++h) {
      if (t.x.mors[h].src != dx || t.x.mors[h].dst != sx) continue;
      if (t.p.on_mor(h) != t.m.identity[t.m.mors[img].src]) continue;
      if (t.x.compose(h, f) == t.x.identity[sx] && t.x.compose(f, h) == t.x.identity[dx]) {
        invertible = true;
        break;
      }
    }
    if (!invertible) {
      if (witness) *witness = "vertical morphism " + std::to_string(f) + " has no vertical inverse";
      return false;
    }
  }
  return true;
}

PhiBijection phi_bijection(const FOFTriple& t, Idx x, Idx y, Idx phi) {
  PhiBijection out;
  if (t.m.mors[phi].src != t.p.on_obj(x) || t.m.mors[phi].dst != t.p.on_obj(y))
    fail(ErrorKind::ValidationError, "phi is not a morphism P(x) -> P(y)");

  Idx gphi = t.g.on_mor(phi);
  out.w = cartesian_lifting(t.f, gphi, y);
  if (out.w < 0) fail(ErrorKind::InternalError, "F-cartesian lifting vanished");
  out.pulled_y = t.x.mors[out.w].src;
  out.phi_k = t.p.on_mor(out.w);
  if (!is_cartesian(t.g, out.phi_k))
    fail(ErrorKind::InternalError, "P(w) is not G-cartesian");

  // phi_v: the unique vertical comparison with phi_k . phi_v = phi
  Idx fx = t.f.on_obj(x);
  out.phi_v = -1;
  for (Idx v = 0; v < t.m.num_morphisms(); ++v) {
    if (t.m.mors[v].src != t.p.on_obj(x) || t.m.mors[v].dst != t.p.on_obj(out.pulled_y)) continue;
    if (t.g.on_mor(v) != t.b.identity[fx]) continue;
    if (t.m.compose(out.phi_k, v) != phi) continue;
    if (out.phi_v >= 0) fail(ErrorKind::InternalError, "vertical comparison is not unique");
    out.phi_v = v;
  }
  if (out.phi_v < 0) fail(ErrorKind::InternalError, "vertical comparison does not exist");

  // opcartesian lifting of phi_v at x inside the fibre over F(x)
  Fibre xf = fibre_over(t.f, fx);
  Fibre mf = fibre_over(t.g, fx);
  FunctorTable pf = restrict_to_fibres(t.p, xf, mf);
  Idx u_local = opcartesian_lifting(pf, mf.mor_fwd[out.phi_v], xf.obj_fwd[x]);
  if (u_local < 0) fail(ErrorKind::InternalError, "fibre opcartesian lifting vanished");
  out.u = xf.mor_back[u_local];
  out.pushed_x = t.x.mors[out.u].dst;

  Idx vertical_id = t.m.identity[t.p.on_obj(out.pulled_y)];
  for (Idx h = 0; h < t.x.num_morphisms(); ++h)
    if (t.x.mors[h].src == out.pushed_x && t.x.mors[h].dst == out.pulled_y &&
        t.p.on_mor(h) == vertical_id)
      out.fibre_homset.push_back(h);
  for (Idx h = 0; h < t.x.num_morphisms(); ++h)
    if (t.x.mors[h].src == x && t.x.mors[h].dst == y && t.p.on_mor(h) == phi)
      out.homset.push_back(h);

  out.bijective = true;
  std::vector<int> hits(out.homset.size(), 0);
  for (Idx h : out.fibre_homset) {
    Idx composite = t.x.compose(out.w, t.x.compose(h, out.u));
    auto it = std::find(out.homset.begin(), out.homset.end(), composite);
    if (it == out.homset.end()) {
      out.bijective = false;
      out.violation = "transport leaves the hom-set";
      out.bijection.push_back(-1);
      continue;
    }
    int pos = static_cast<int>(it - out.homset.begin());
    out.bijection.push_back(pos);
    hits[pos] += 1;
  }
  for (int hcount : hits)
    if (hcount != 1) {
      out.bijective = false;
      if (out.violation.empty()) out.violation = "transport is not a bijection";
    }
  if (out.fibre_homset.size() != out.homset.size()) {
    out.bijective = false;
    if (out.violation.empty()) out.violation = "hom-set sizes differ";
  }
  return out;
}

TorsorReport torsor_certificate(const FOFTriple& t, Idx x, Idx y, Idx phi) {
  std::string gw;
  if (!fibres_groupoidal(t, &gw)) fail(ErrorKind::FibresNotGroupoidal, gw);

  TorsorReport rep;
  PhiBijection bij = phi_bijection(t, x, y, phi);
  rep.homset = bij.homset;
  if (!bij.bijective) {
    rep.verdict = TorsorVerdict::Violation;
    rep.violation = "Phi is not a bijection: " + bij.violation;
    return rep;
  }

  // H: vertical endomorphisms of phi^* y, a group under composition
  Idx py = bij.pulled_y;
  Idx vertical_id = t.m.identity[t.p.on_obj(py)];
  for (Idx h = 0; h < t.x.num_morphisms(); ++h)
    if (t.x.mors[h].src == py && t.x.mors[h].dst == py && t.p.on_mor(h) == vertical_id)
      rep.h_morphisms.push_back(h);
  {  // put the identity first so no re-indexing happens
    auto it = std::find(rep.h_morphisms.begin(), rep.h_morphisms.end(), t.x.identity[py]);
    if (it == rep.h_morphisms.end())
      fail(ErrorKind::InternalError, "identity missing from vertical endomorphisms");
    std::iter_swap(rep.h_morphisms.begin(), it);
  }
  int n = static_cast<int>(rep.h_morphisms.size());
  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Idx comp = t.x.compose(rep.h_morphisms[i], rep.h_morphisms[j]);
      auto it = std::find(rep.h_morphisms.begin(), rep.h_morphisms.end(), comp);
      if (it == rep.h_morphisms.end())
        fail(ErrorKind::InternalError, "vertical endomorphisms are not closed");
      flat[static_cast<size_t>(i) * n + j] = static_cast<Idx>(it - rep.h_morphisms.begin());
    }
  rep.acting_group = validate_group_flat(n, std::move(flat));

  if (rep.homset.empty()) {
    // consistency: no vertical morphism (hence no iso) pushed_x -> pulled_y
    if (!bij.fibre_homset.empty()) {
      rep.verdict = TorsorVerdict::Violation;
      rep.violation = "empty hom-set but transported fibre hom-set is nonempty";
      return rep;
    }
    rep.verdict = TorsorVerdict::Empty;
    return rep;
  }

  // transferred action: h * (w f u) = w (h f) u
  rep.action.assign(n, std::vector<int>(rep.homset.size(), -1));
  for (int hi = 0; hi < n; ++hi)
    for (size_t fi = 0; fi < bij.fibre_homset.size(); ++fi) {
      Idx moved = t.x.compose(rep.h_morphisms[hi], bij.fibre_homset[fi]);
      auto it = std::find(bij.fibre_homset.begin(), bij.fibre_homset.end(), moved);
      if (it == bij.fibre_homset.end()) {
        rep.verdict = TorsorVerdict::Violation;
        rep.violation = "action leaves the fibre hom-set";
        return rep;
      }
      rep.action[hi][bij.bijection[fi]] =
          bij.bijection[static_cast<size_t>(it - bij.fibre_homset.begin())];
    }
  if (static_cast<size_t>(n) != rep.homset.size()) {
    rep.verdict = TorsorVerdict::Violation;
    rep.violation = "|homset| != |H|";
    return rep;
  }
  for (size_t f1 = 0; f1 < rep.homset.size(); ++f1)
    for (size_t f2 = 0; f2 < rep.homset.size(); ++f2) {
      int count = 0;
      for (int hi = 0; hi < n; ++hi)
        if (rep.action[hi][f1] == static_cast<int>(f2)) ++count;
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
