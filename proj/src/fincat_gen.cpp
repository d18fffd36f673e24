#include "obstrukt/fincat_gen.hpp"

#include <algorithm>
#include <map>

namespace obk {

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }

namespace {

// A forest poset: parent[i] is an ancestor link (-1 at roots). x <= y iff y is
// an ancestor-or-self of x, so paths between comparable nodes are unique.
struct Forest {
  std::vector<int> parent;
  int size() const { return static_cast<int>(parent.size()); }
  bool leq(int x, int y) const {
    for (int cur = x; cur >= 0; cur = parent[cur])
      if (cur == y) return true;
    return false;
  }
};

Forest random_forest(Rng& rng, int n) {
  Forest f;
  f.parent.assign(n, -1);
  for (int i = 1; i < n; ++i) f.parent[i] = rng.below(i + 1) - 1;  // -1 or 0..i-1
  return f;
}

std::vector<std::pair<int, int>> comparable_pairs(const Forest& f) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      if (f.leq(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::vector<int>> monotone_maps(const Forest& from, const Forest& to) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(from.size(), 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < from.size() && ok; ++x)
      for (int y = 0; y < from.size() && ok; ++y)
        if (from.leq(x, y)) ok = to.leq(map[x], map[y]);
    if (ok) out.push_back(map);
    int pos = from.size() - 1;
    while (pos >= 0 && ++map[pos] == to.size()) map[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

FiniteGroup small_group(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return trivial_group();
    case 1:
    case 2: return cyclic_group(2);
    case 3: return cyclic_group(3);
    case 4: return cyclic_group(4);
    default: return product_group(cyclic_group(2), cyclic_group(2));
  }
}

// An H-set on {0..ns-1}: act[h*ns + s], built from a random endomorphism of
// the full transformation structure via homs into the symmetric group.
std::vector<Idx> random_h_set(Rng& rng, const FiniteGroup& h, int ns, FiniteGroup& sym_out,
                              Homomorphism& rho_out) {
  // symmetric group on ns letters
  std::vector<std::vector<Idx>> perms;
  std::vector<Idx> p(ns);
  for (int i = 0; i < ns; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  std::map<std::vector<Idx>, Idx> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<Idx> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Idx> comp(ns);
      for (int s = 0; s < ns; ++s) comp[s] = perms[i][perms[j][s]];
      flat[static_cast<size_t>(i) * m + j] = index.at(comp);
    }
  sym_out = validate_group_flat(m, flat);
  // identity permutation may have been re-indexed; recover the element lists
  // by noting validate_group_flat only swaps index 0 with the identity slot
  // (identity tuple is lexicographically first, hence already index 0)
  auto homs = enumerate_homs(h, sym_out);
  rho_out = homs[rng.below(static_cast<int>(homs.size()))];
  std::vector<Idx> act(static_cast<size_t>(h.order) * ns);
  for (Idx g = 0; g < h.order; ++g)
    for (int s = 0; s < ns; ++s) act[static_cast<size_t>(g) * ns + s] = perms[rho_out.apply(g)][s];
  return act;
}

// Endofunctor of the action groupoid: a group endomorphism theta with a
// theta-equivariant carrier map sigma.
struct GroupoidEndo {
  std::vector<Idx> theta;  // H -> H
  std::vector<Idx> sigma;  // S -> S
};

std::vector<GroupoidEndo> groupoid_endos(const FiniteGroup& h, int ns,
                                         const std::vector<Idx>& act) {
  std::vector<GroupoidEndo> out;
  auto ap = [&](Idx g, int s) { return act[static_cast<size_t>(g) * ns + s]; };
  for (const Homomorphism& theta : enumerate_homs(h, h)) {
    std::vector<Idx> sigma(ns, 0);
    while (true) {
      bool ok = true;
      for (Idx g = 0; g < h.order && ok; ++g)
        for (int s = 0; s < ns && ok; ++s) ok = sigma[ap(g, s)] == ap(theta.apply(g), sigma[s]);
      if (ok) out.push_back(GroupoidEndo{theta.images, sigma});
      int pos = ns - 1;
      while (pos >= 0 && ++sigma[pos] == ns) sigma[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

GroupoidEndo compose_endos(const GroupoidEndo& outer, const GroupoidEndo& inner) {
  GroupoidEndo out;
  out.theta.resize(inner.theta.size());
  out.sigma.resize(inner.sigma.size());
  for (size_t i = 0; i < inner.theta.size(); ++i) out.theta[i] = outer.theta[inner.theta[i]];
  for (size_t i = 0; i < inner.sigma.size(); ++i) out.sigma[i] = outer.sigma[inner.sigma[i]];
  return out;
}

GroupoidEndo identity_endo(const FiniteGroup& h, int ns) {
  GroupoidEndo out;
  out.theta.resize(h.order);
  out.sigma.resize(ns);
  for (Idx g = 0; g < h.order; ++g) out.theta[g] = g;
  for (int s = 0; s < ns; ++s) out.sigma[s] = s;
  return out;
}

struct CandidateInstance {
  FOFTriple triple;
  int x_mors = 0;
  bool ok = false;
};

CandidateInstance build_instance(Rng& rng, int max_morphisms, int min_morphisms) {
  CandidateInstance out;

  int nb = 1 + rng.below(3);
  Forest base = random_forest(rng, nb);
  auto base_pairs = comparable_pairs(base);

  std::vector<Forest> fibres;
  for (int b = 0; b < nb; ++b) fibres.push_back(random_forest(rng, 1 + rng.below(2)));

  FiniteGroup h = small_group(rng);
  int ns = 1 + rng.below(3);
  FiniteGroup sym;
  Homomorphism rho;
  std::vector<Idx> hact = random_h_set(rng, h, ns, sym, rho);
  std::vector<GroupoidEndo> endo_pool = groupoid_endos(h, ns, hact);

  // transitions along cover edges (child -> parent), composed along the
  // unique ancestor chains; identity edges map to identities
  std::vector<std::vector<int>> mmap(nb);       // per node: monotone map from parent fibre
  std::vector<GroupoidEndo> gmap(nb, identity_endo(h, ns));
  for (int b = 0; b < nb; ++b) {
    if (base.parent[b] < 0) continue;
    auto maps = monotone_maps(fibres[base.parent[b]], fibres[b]);
    mmap[b] = maps[rng.below(static_cast<int>(maps.size()))];
    gmap[b] = endo_pool[rng.below(static_cast<int>(endo_pool.size()))];
  }
  // T for a comparable pair (a <= anc): compose covers down the chain a,
  // parent(a), ... anc; realized as map fibre[anc] -> fibre[a]
  auto transition = [&](int a, int anc) {
    std::vector<int> m(fibres[anc].size());
    for (int i = 0; i < fibres[anc].size(); ++i) m[i] = i;
    GroupoidEndo g = identity_endo(h, ns);
    std::vector<int> chain;
    for (int cur = a; cur != anc; cur = base.parent[cur]) chain.push_back(cur);
    // walk from anc downwards: apply the cover map of each child node
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      std::vector<int> composed(m.size());
      for (size_t i = 0; i < m.size(); ++i) composed[i] = mmap[*it][m[i]];
      m = std::move(composed);
      g = compose_endos(gmap[*it], g);
    }
    return std::make_pair(m, g);
  };

  // ---- M: objects (b, m), morphisms (beta, vertical poset arrow) ----
  std::vector<std::pair<int, int>> mobjs;
  std::map<std::pair<int, int>, Idx> mobj_index;
  for (int b = 0; b < nb; ++b)
    for (int mm = 0; mm < fibres[b].size(); ++mm) {
      mobj_index[{b, mm}] = static_cast<Idx>(mobjs.size());
      mobjs.emplace_back(b, mm);
    }

  struct MMor {
    int beta;  // index into base_pairs
    Idx src, dst;
  };
  std::vector<MMor> mmors;
  std::map<std::tuple<int, Idx, Idx>, Idx> mmor_index;
  for (size_t bi = 0; bi < base_pairs.size(); ++bi) {
    auto [a, anc] = base_pairs[bi];
    auto [tmap, tendo] = transition(a, anc);
    (void)tendo;
    for (int msrc = 0; msrc < fibres[a].size(); ++msrc)
      for (int mdst = 0; mdst < fibres[anc].size(); ++mdst)
        if (fibres[a].leq(msrc, tmap[mdst])) {
          mmor_index[{static_cast<int>(bi), mobj_index.at({a, msrc}), mobj_index.at({anc, mdst})}] =
              static_cast<Idx>(mmors.size());
          mmors.push_back(MMor{static_cast<int>(bi), mobj_index.at({a, msrc}),
                               mobj_index.at({anc, mdst})});
        }
  }

  // ---- X: objects (b, m, s), morphisms (beta, poset arrow, h) ----
  std::vector<std::tuple<int, int, int>> xobjs;
  std::map<std::tuple<int, int, int>, Idx> xobj_index;
  for (int b = 0; b < nb; ++b)
    for (int mm = 0; mm < fibres[b].size(); ++mm)
      for (int s = 0; s < ns; ++s) {
        xobj_index[{b, mm, s}] = static_cast<Idx>(xobjs.size());
        xobjs.emplace_back(b, mm, s);
      }

  struct XMor {
    int beta;
    Idx src, dst;
    Idx hval;
  };
  std::vector<XMor> xmors;
  auto hap = [&](Idx g, int s) { return hact[static_cast<size_t>(g) * ns + s]; };
  for (size_t bi = 0; bi < base_pairs.size(); ++bi) {
    auto [a, anc] = base_pairs[bi];
    auto [tmap, tendo] = transition(a, anc);
    for (int msrc = 0; msrc < fibres[a].size(); ++msrc)
      for (int mdst = 0; mdst < fibres[anc].size(); ++mdst) {
        if (!fibres[a].leq(msrc, tmap[mdst])) continue;
        for (int ssrc = 0; ssrc < ns; ++ssrc)
          for (int sdst = 0; sdst < ns; ++sdst)
            for (Idx g = 0; g < h.order; ++g)
              if (hap(g, ssrc) == tendo.sigma[sdst])
                xmors.push_back(XMor{static_cast<int>(bi), xobj_index.at({a, msrc, ssrc}),
                                     xobj_index.at({anc, mdst, sdst}), g});
      }
  }
  out.x_mors = static_cast<int>(xmors.size());
  if (out.x_mors > max_morphisms || out.x_mors < min_morphisms) return out;

  // ---- base category tables ----
  std::map<std::pair<int, int>, Idx> bpair_index;
  for (size_t bi = 0; bi < base_pairs.size(); ++bi)
    bpair_index[base_pairs[bi]] = static_cast<Idx>(bi);
  std::vector<FinCategory::Mor> bmors(base_pairs.size());
  std::vector<Idx> bident(nb);
  for (size_t bi = 0; bi < base_pairs.size(); ++bi) {
    bmors[bi] = FinCategory::Mor{base_pairs[bi].first, base_pairs[bi].second};
    if (base_pairs[bi].first == base_pairs[bi].second) bident[base_pairs[bi].first] = static_cast<Idx>(bi);
  }
  std::vector<std::vector<Idx>> bcomp(base_pairs.size(), std::vector<Idx>(base_pairs.size(), -1));
  for (size_t g2 = 0; g2 < base_pairs.size(); ++g2)
    for (size_t f2 = 0; f2 < base_pairs.size(); ++f2)
      if (base_pairs[f2].second == base_pairs[g2].first)
        bcomp[g2][f2] = bpair_index.at({base_pairs[f2].first, base_pairs[g2].second});
  FinCategory bcat = validate_category(nb, bmors, bident, bcomp);

  // ---- M category tables ----
  std::vector<FinCategory::Mor> mcmors(mmors.size());
  std::vector<Idx> mident(mobjs.size(), -1);
  for (size_t i = 0; i < mmors.size(); ++i) {
    mcmors[i] = FinCategory::Mor{mmors[i].src, mmors[i].dst};
    if (mmors[i].src == mmors[i].dst &&
        base_pairs[mmors[i].beta].first == base_pairs[mmors[i].beta].second)
      mident[mmors[i].src] = static_cast<Idx>(i);
  }
  std::vector<std::vector<Idx>> mcomp(mmors.size(), std::vector<Idx>(mmors.size(), -1));
  for (size_t g2 = 0; g2 < mmors.size(); ++g2)
    for (size_t f2 = 0; f2 < mmors.size(); ++f2) {
      if (mmors[f2].dst != mmors[g2].src) continue;
      Idx beta = bcomp[mmors[g2].beta][mmors[f2].beta];
      mcomp[g2][f2] = mmor_index.at({beta, mmors[f2].src, mmors[g2].dst});
    }
  FinCategory mcat = validate_category(static_cast<int>(mobjs.size()), mcmors, mident, mcomp);

  // ---- X category tables ----
  std::map<std::tuple<int, Idx, Idx, Idx>, Idx> xmor_index;
  for (size_t i = 0; i < xmors.size(); ++i)
    xmor_index[{xmors[i].beta, xmors[i].src, xmors[i].dst, xmors[i].hval}] = static_cast<Idx>(i);
  std::vector<FinCategory::Mor> xcmors(xmors.size());
  std::vector<Idx> xident(xobjs.size(), -1);
  for (size_t i = 0; i < xmors.size(); ++i) {
    xcmors[i] = FinCategory::Mor{xmors[i].src, xmors[i].dst};
    if (xmors[i].src == xmors[i].dst && xmors[i].hval == h.identity &&
        base_pairs[xmors[i].beta].first == base_pairs[xmors[i].beta].second)
      xident[xmors[i].src] = static_cast<Idx>(i);
  }
  std::vector<std::vector<Idx>> xcomp(xmors.size(), std::vector<Idx>(xmors.size(), -1));
  for (size_t g2 = 0; g2 < xmors.size(); ++g2)
    for (size_t f2 = 0; f2 < xmors.size(); ++f2) {
      if (xmors[f2].dst != xmors[g2].src) continue;
      Idx beta = bcomp[xmors[g2].beta][xmors[f2].beta];
      int a_src = std::get<0>(xobjs[xmors[f2].src]);
      (void)a_src;
      // composite h-part: theta_beta1(h2) . h1 where beta1 is the first leg
      auto [a1, anc1] = base_pairs[xmors[f2].beta];
      auto [tmap1, tendo1] = transition(a1, anc1);
      (void)tmap1;
      Idx hcomp = h.mul(tendo1.theta[xmors[g2].hval], xmors[f2].hval);
      xcomp[g2][f2] = xmor_index.at({beta, xmors[f2].src, xmors[g2].dst, hcomp});
    }
  FinCategory xcat = validate_category(static_cast<int>(xobjs.size()), xcmors, xident, xcomp);

  // ---- functors ----
  std::vector<Idx> p_obj(xobjs.size()), p_mor(xmors.size());
  for (size_t o = 0; o < xobjs.size(); ++o)
    p_obj[o] = mobj_index.at({std::get<0>(xobjs[o]), std::get<1>(xobjs[o])});
  for (size_t i = 0; i < xmors.size(); ++i)
    p_mor[i] = mmor_index.at({xmors[i].beta, p_obj[xmors[i].src], p_obj[xmors[i].dst]});
  FunctorTable p = validate_functor(xcat, mcat, p_obj, p_mor);

  std::vector<Idx> f_obj(xobjs.size()), f_mor(xmors.size());
  for (size_t o = 0; o < xobjs.size(); ++o) f_obj[o] = std::get<0>(xobjs[o]);
  for (size_t i = 0; i < xmors.size(); ++i) f_mor[i] = xmors[i].beta;
  FunctorTable f = validate_functor(xcat, bcat, f_obj, f_mor);

  std::vector<Idx> g_obj(mobjs.size()), g_mor(mmors.size());
  for (size_t o = 0; o < mobjs.size(); ++o) g_obj[o] = mobjs[o].first;
  for (size_t i = 0; i < mmors.size(); ++i) g_mor[i] = mmors[i].beta;
  FunctorTable g = validate_functor(mcat, bcat, g_obj, g_mor);

  out.triple = make_fof_triple(std::move(xcat), std::move(mcat), std::move(bcat), std::move(p),
                               std::move(f), std::move(g));
  out.ok = true;
  return out;
}

}  // namespace

FOFTriple random_fof_instance(uint64_t seed, int max_morphisms) {
  // reject degenerate draws so the suite exercises nontrivial hom-sets
  int min_morphisms = std::min(12, max_morphisms);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Rng rng{seed * 0x100000001b3ULL + static_cast<uint64_t>(attempt) * 0x9e3779b9ULL};
    CandidateInstance cand = build_instance(rng, max_morphisms, min_morphisms);
    if (cand.ok) return cand.triple;
  }
  fail(ErrorKind::InternalError, "could not draw an instance within the morphism cap");
}

}  // namespace obk
