#include "obstrukt/fingroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace obk {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::ModuleMismatch: return "ModuleMismatch";
    case ErrorKind::PrecrossedViolation: return "PrecrossedViolation";
    case ErrorKind::PeifferViolation: return "PeifferViolation";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::FibresNotGroupoidal: return "FibresNotGroupoidal";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Error";
}

const char* to_string(TorsorVerdict v) {
  switch (v) {
    case TorsorVerdict::Empty: return "Empty";
    case TorsorVerdict::Torsor: return "Torsor";
    case TorsorVerdict::Violation: return "Violation";
  }
  return "?";
}

long long default_budget() {
  static long long cached = [] {
    if (const char* env = std::getenv("OBSTRUKT_BUDGET")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 100000000LL;  // 1e8 candidate maps
  }();
  return cached;
}

long long resolve_budget(long long requested) { return requested > 0 ? requested : default_budget(); }

// ---------------------------------------------------------------------------

Idx FiniteGroup::pow(Idx x, long long n) const {
  if (n < 0) return pow(inv(x), -n);
  Idx acc = identity;
  for (long long i = 0; i < n; ++i) acc = mul(acc, x);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (Idx x = 0; x < order; ++x)
    for (Idx y = x + 1; y < order; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int FiniteGroup::element_order(Idx x) const {
  Idx acc = x;
  int n = 1;
  while (acc != identity) {
    acc = mul(acc, x);
    ++n;
  }
  return n;
}

FiniteGroup validate_group_flat(int order, std::vector<Idx> flat) {
  if (order <= 0) fail(ErrorKind::ValidationError, "group order must be positive");
  if (flat.size() != static_cast<size_t>(order) * order)
    fail(ErrorKind::ValidationError, "table is not square");
  for (Idx v : flat)
    if (v < 0 || v >= order) fail(ErrorKind::ValidationError, "table entry out of range");

  auto at = [&](Idx x, Idx y) { return flat[static_cast<size_t>(x) * order + y]; };

  // identity
  Idx e = -1;
  for (Idx c = 0; c < order && e < 0; ++c) {
    bool ok = true;
    for (Idx x = 0; x < order && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) fail(ErrorKind::NoIdentity, "no two-sided identity element");

  // re-index so the identity is 0 (canonical serialization)
  if (e != 0) {
    std::vector<Idx> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);  // involution
    std::vector<Idx> relabeled(flat.size());
    for (Idx x = 0; x < order; ++x)
      for (Idx y = 0; y < order; ++y)
        relabeled[static_cast<size_t>(perm[x]) * order + perm[y]] = perm[at(x, y)];
    flat = std::move(relabeled);
    e = 0;
  }

  // inverses
  std::vector<Idx> inverse(order, -1);
  for (Idx x = 0; x < order; ++x) {
    for (Idx y = 0; y < order; ++y)
      if (at(x, y) == e && at(y, x) == e) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0)
      fail(ErrorKind::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }

  // associativity, exhaustively
  for (Idx x = 0; x < order; ++x)
    for (Idx y = 0; y < order; ++y)
      for (Idx z = 0; z < order; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          fail(ErrorKind::NotAssociative, "triple (" + std::to_string(x) + "," + std::to_string(y) +
                                              "," + std::to_string(z) + ")");

  FiniteGroup g;
  g.order = order;
  g.table = std::move(flat);
  g.identity = 0;
  g.inverse = std::move(inverse);
  return g;
}

FiniteGroup validate_group(const std::vector<std::vector<Idx>>& table) {
  int order = static_cast<int>(table.size());
  std::vector<Idx> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order) fail(ErrorKind::ValidationError, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_group_flat(order, std::move(flat));
}

FiniteGroup trivial_group() { return validate_group_flat(1, {0}); }

FiniteGroup cyclic_group(int n) {
  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) flat[static_cast<size_t>(x) * n + y] = (x + y) % n;
  return validate_group_flat(n, std::move(flat));
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order * b.order;
  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (Idx x1 = 0; x1 < a.order; ++x1)
    for (Idx y1 = 0; y1 < b.order; ++y1)
      for (Idx x2 = 0; x2 < a.order; ++x2)
        for (Idx y2 = 0; y2 < b.order; ++y2) {
          Idx u = x1 * b.order + y1, v = x2 * b.order + y2;
          flat[static_cast<size_t>(u) * n + v] = a.mul(x1, x2) * b.order + b.mul(y1, y2);
        }
  return validate_group_flat(n, std::move(flat));
}

// ---------------------------------------------------------------------------

bool Homomorphism::is_injective() const {
  std::vector<char> seen(target.order, 0);
  for (Idx v : images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> seen(target.order, 0);
  for (Idx v : images) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<Idx> Homomorphism::kernel() const {
  std::vector<Idx> ker;
  for (Idx x = 0; x < source.order; ++x)
    if (images[x] == target.identity) ker.push_back(x);
  return ker;
}

std::vector<Idx> Homomorphism::image() const {
  std::vector<Idx> im(images);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

Homomorphism make_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<Idx> images) {
  if (images.size() != static_cast<size_t>(src.order))
    fail(ErrorKind::ValidationError, "homomorphism image list has wrong length");
  for (Idx v : images)
    if (v < 0 || v >= dst.order) fail(ErrorKind::ValidationError, "homomorphism image out of range");
  if (images[src.identity] != dst.identity)
    fail(ErrorKind::ValidationError, "map does not preserve the identity");
  for (Idx x = 0; x < src.order; ++x)
    for (Idx y = 0; y < src.order; ++y)
      if (images[src.mul(x, y)] != dst.mul(images[x], images[y]))
        fail(ErrorKind::ValidationError, "map is not multiplicative at (" + std::to_string(x) + "," +
                                             std::to_string(y) + ")");
  return Homomorphism{src, dst, std::move(images)};
}

Homomorphism identity_hom(const FiniteGroup& g) {
  std::vector<Idx> im(g.order);
  std::iota(im.begin(), im.end(), 0);
  return Homomorphism{g, g, std::move(im)};
}

Homomorphism zero_hom(const FiniteGroup& src, const FiniteGroup& dst) {
  return Homomorphism{src, dst, std::vector<Idx>(src.order, dst.identity)};
}

Homomorphism compose_homs(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target != outer.source)
    fail(ErrorKind::SourceTargetMismatch, "cannot compose homomorphisms");
  std::vector<Idx> im(inner.source.order);
  for (Idx x = 0; x < inner.source.order; ++x) im[x] = outer.images[inner.images[x]];
  return Homomorphism{inner.source, outer.target, std::move(im)};
}

Homomorphism inverse_hom(const Homomorphism& iso) {
  if (iso.source.order != iso.target.order || !iso.is_bijective())
    fail(ErrorKind::ValidationError, "homomorphism is not invertible");
  std::vector<Idx> im(iso.target.order);
  for (Idx x = 0; x < iso.source.order; ++x) im[iso.images[x]] = x;
  return Homomorphism{iso.target, iso.source, std::move(im)};
}

// ---------------------------------------------------------------------------

std::vector<Idx> generated_subgroup(const FiniteGroup& g, const std::vector<Idx>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<Idx> queue{g.identity};
  in[g.identity] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    Idx x = queue[head];
    for (Idx gen : gens) {
      Idx y = g.mul(x, gen);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Idx> out;
  for (Idx x = 0; x < g.order; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Idx> minimal_generators(const FiniteGroup& g) {
  std::vector<Idx> gens;
  std::vector<Idx> closure{g.identity};
  for (Idx x = 0; x < g.order; ++x) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = generated_subgroup(g, gens);
    if (static_cast<int>(closure.size()) == g.order) break;
  }
  return gens;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Idx>& elems) {
  if (elems.empty()) return false;
  std::vector<char> in(g.order, 0);
  for (Idx x : elems) in[x] = 1;
  if (!in[g.identity]) return false;
  for (Idx x : elems)
    for (Idx y : elems)
      if (!in[g.mul(x, y)]) return false;
  for (Idx x : elems)
    if (!in[g.inv(x)]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Idx>& elems) {
  if (!is_subgroup(g, elems)) return false;
  std::vector<char> in(g.order, 0);
  for (Idx x : elems) in[x] = 1;
  for (Idx n : elems)
    for (Idx x = 0; x < g.order; ++x)
      if (!in[g.conj(x, n)]) return false;
  return true;
}

SubgroupEmbedding subgroup_from(const FiniteGroup& g, std::vector<Idx> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(g, elems)) fail(ErrorKind::ValidationError, "element set is not a subgroup");
  int n = static_cast<int>(elems.size());
  std::vector<Idx> pos(g.order, -1);
  for (int i = 0; i < n; ++i) pos[elems[i]] = i;
  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = pos[g.mul(elems[i], elems[j])];
  SubgroupEmbedding out;
  out.sub = validate_group_flat(n, std::move(flat));
  out.elems = std::move(elems);
  out.incl = Homomorphism{out.sub, g, out.elems};
  return out;
}

Idx SubgroupEmbedding::pos_of(Idx ambient) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), ambient);
  if (it == elems.end() || *it != ambient) return -1;
  return static_cast<Idx>(it - elems.begin());
}

QuotientProjection quotient_by(const FiniteGroup& g, const std::vector<Idx>& normal_elems) {
  if (!is_normal_subgroup(g, normal_elems))
    fail(ErrorKind::ValidationError, "element set is not a normal subgroup");
  std::vector<Idx> coset_of(g.order, -1);
  std::vector<Idx> reps;
  for (Idx x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    Idx q = static_cast<Idx>(reps.size());
    reps.push_back(x);  // x is the smallest element of its coset by scan order
    for (Idx n : normal_elems) coset_of[g.mul(x, n)] = q;
  }
  int m = static_cast<int>(reps.size());
  std::vector<Idx> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) flat[static_cast<size_t>(i) * m + j] = coset_of[g.mul(reps[i], reps[j])];
  QuotientProjection out;
  out.quo = validate_group_flat(m, std::move(flat));
  out.reps = std::move(reps);
  out.proj = Homomorphism{g, out.quo, coset_of};
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Homomorphism> enumerate_homs(const FiniteGroup& src, const FiniteGroup& dst,
                                         long long budget) {
  budget = resolve_budget(budget);
  std::vector<Idx> gens = minimal_generators(src);
  int k = static_cast<int>(gens.size());
  check_budget(std::pow(static_cast<double>(dst.order), k), budget,
               "homomorphism enumeration " + std::to_string(src.order) + "->" + std::to_string(dst.order));

  // Express every source element as (known element) * generator, in BFS order.
  std::vector<std::pair<Idx, int>> expr(src.order, {-1, -1});  // (parent, generator slot)
  std::vector<Idx> discovery{src.identity};
  {
    std::vector<char> known(src.order, 0);
    known[src.identity] = 1;
    for (size_t head = 0; head < discovery.size(); ++head)
      for (int i = 0; i < k; ++i) {
        Idx y = src.mul(discovery[head], gens[i]);
        if (!known[y]) {
          known[y] = 1;
          expr[y] = {discovery[head], i};
          discovery.push_back(y);
        }
      }
    if (discovery.size() != static_cast<size_t>(src.order))
      fail(ErrorKind::InternalError, "generators do not generate the group");
  }

  std::vector<int> gen_order(k);
  for (int i = 0; i < k; ++i) gen_order[i] = src.element_order(gens[i]);

  std::vector<Homomorphism> out;
  std::vector<Idx> choice(std::max(k, 1), 0);
  std::vector<Idx> img(src.order);
  while (true) {
    bool viable = true;
    for (int i = 0; i < k && viable; ++i)
      viable = dst.pow(choice[i], gen_order[i]) == dst.identity;  // order must divide
    if (viable) {
      img[src.identity] = dst.identity;
      for (size_t t = 1; t < discovery.size(); ++t) {
        Idx x = discovery[t];
        img[x] = dst.mul(img[expr[x].first], choice[expr[x].second]);
      }
      bool ok = true;
      for (Idx x = 0; x < src.order && ok; ++x)
        for (Idx y = 0; y < src.order && ok; ++y)
          ok = img[src.mul(x, y)] == dst.mul(img[x], img[y]);
      if (ok) out.push_back(Homomorphism{src, dst, img});
    }
    if (k == 0) break;
    int pos = k - 1;
    while (pos >= 0 && ++choice[pos] == dst.order) choice[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Homomorphism& a, const Homomorphism& b) { return a.images < b.images; });
  return out;
}

std::optional<Homomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                             long long budget) {
  if (a.order != b.order) return std::nullopt;
  for (const Homomorphism& h : enumerate_homs(a, b, budget))
    if (h.is_bijective()) return h;
  return std::nullopt;
}

GroupStructureReport structure_of(const FiniteGroup& g, long long budget) {
  GroupStructureReport rep;
  for (Idx z = 0; z < g.order; ++z) {
    bool central = true;
    for (Idx x = 0; x < g.order && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) rep.center.push_back(z);
  }

  std::vector<std::vector<Idx>> auts;
  for (const Homomorphism& h : enumerate_homs(g, g, budget))
    if (h.is_bijective()) auts.push_back(h.images);
  // already lex-sorted; the identity tuple is lex-least among bijections fixing 0
  int m = static_cast<int>(auts.size());
  std::map<std::vector<Idx>, Idx> aut_index;
  for (int i = 0; i < m; ++i) aut_index[auts[i]] = i;

  std::vector<Idx> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Idx> comp(g.order);
      for (Idx x = 0; x < g.order; ++x) comp[x] = auts[i][auts[j][x]];
      flat[static_cast<size_t>(i) * m + j] = aut_index.at(comp);
    }
  rep.automorphisms = validate_group_flat(m, std::move(flat));
  rep.aut_eval = auts;

  std::vector<Idx> conj_im(g.order);
  for (Idx a = 0; a < g.order; ++a) {
    std::vector<Idx> c(g.order);
    for (Idx x = 0; x < g.order; ++x) c[x] = g.conj(a, x);
    auto it = aut_index.find(c);
    if (it == aut_index.end()) fail(ErrorKind::InternalError, "conjugation is not an automorphism");
    conj_im[a] = it->second;
  }
  rep.conj = Homomorphism{g, rep.automorphisms, conj_im};

  rep.inner = rep.conj.image();
  auto q = quotient_by(rep.automorphisms, rep.inner);
  rep.outer = q.quo;
  rep.out_proj = q.proj;
  return rep;
}

// ---------------------------------------------------------------------------

bool AbelianAction::is_trivial() const {
  for (Idx c = 0; c < actor.order; ++c)
    for (Idx b = 0; b < module.order; ++b)
      if (apply(c, b) != b) return false;
  return true;
}

AbelianAction trivial_action(const FiniteGroup& c, const FiniteGroup& b) {
  if (!b.is_abelian()) fail(ErrorKind::NotAbelian, "module group is not abelian");
  AbelianAction a;
  a.actor = c;
  a.module = b;
  a.act.resize(static_cast<size_t>(c.order) * b.order);
  for (Idx x = 0; x < c.order; ++x)
    for (Idx v = 0; v < b.order; ++v) a.act[static_cast<size_t>(x) * b.order + v] = v;
  return a;
}

AbelianAction make_action(const FiniteGroup& c, const FiniteGroup& b, const std::vector<Idx>& act) {
  if (!b.is_abelian()) fail(ErrorKind::NotAbelian, "module group is not abelian");
  if (act.size() != static_cast<size_t>(c.order) * b.order)
    fail(ErrorKind::ValidationError, "action table has wrong size");
  AbelianAction a;
  a.actor = c;
  a.module = b;
  a.act = act;
  for (Idx x = 0; x < c.order; ++x) {
    std::vector<char> seen(b.order, 0);
    for (Idx v = 0; v < b.order; ++v) {
      Idx w = a.apply(x, v);
      if (w < 0 || w >= b.order || seen[w])
        fail(ErrorKind::NotAutomorphism, "act(" + std::to_string(x) + ",-) is not a bijection");
      seen[w] = 1;
    }
    for (Idx v = 0; v < b.order; ++v)
      for (Idx w = 0; w < b.order; ++w)
        if (a.apply(x, b.mul(v, w)) != b.mul(a.apply(x, v), a.apply(x, w)))
          fail(ErrorKind::NotAutomorphism, "act(" + std::to_string(x) + ",-) is not additive");
  }
  for (Idx v = 0; v < b.order; ++v)
    if (a.apply(c.identity, v) != v)
      fail(ErrorKind::NotFunctorial, "act(e,-) is not the identity");
  for (Idx x = 0; x < c.order; ++x)
    for (Idx y = 0; y < c.order; ++y)
      for (Idx v = 0; v < b.order; ++v)
        if (a.apply(c.mul(x, y), v) != a.apply(x, a.apply(y, v)))
          fail(ErrorKind::NotFunctorial,
               "act(" + std::to_string(x) + "*" + std::to_string(y) + ",-) is not functorial");
  return a;
}

AbelianAction pullback_action(const Homomorphism& psi0, const AbelianAction& action) {
  if (psi0.target != action.actor)
    fail(ErrorKind::SourceTargetMismatch, "pullback along a map into a different actor");
  const FiniteGroup& c2 = psi0.source;
  AbelianAction a;
  a.actor = c2;
  a.module = action.module;
  a.act.resize(static_cast<size_t>(c2.order) * action.module.order);
  for (Idx x = 0; x < c2.order; ++x)
    for (Idx v = 0; v < action.module.order; ++v)
      a.act[static_cast<size_t>(x) * action.module.order + v] = action.apply(psi0.apply(x), v);
  return a;
}

}  // namespace obk
