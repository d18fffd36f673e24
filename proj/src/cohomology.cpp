#include "obstrukt/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace obk {

// ---------------------------------------------------------------------------
// abelian decomposition

AbelianDecomp abelian_decomp(const FiniteGroup& b) {
  if (!b.is_abelian()) fail(ErrorKind::NotAbelian, "cannot decompose a nonabelian group");
  int n = b.order;
  IntMat rel(n, n * n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      int c = i * n + j;
      rel.at(i, c) += 1;
      rel.at(j, c) += 1;
      rel.at(b.mul(i, j), c) -= 1;
    }
  SmithForm sf = smith_form(rel);

  AbelianDecomp out;
  out.group = b;
  std::vector<int> kept;  // positions with d > 1
  for (int i = 0; i < n; ++i) {
    Int d = sf.s.at(i, i);
    if (d == 0) fail(ErrorKind::InternalError, "abelian decomposition not finite");
    if (d > 1) {
      kept.push_back(i);
      out.factors.push_back(d);
    }
  }
  // generator for factor k: evaluate Pinv e_{pos} as a word in the elements
  for (int pos : kept) {
    Idx acc = b.identity;
    for (int j = 0; j < n; ++j) {
      Int coef = sf.pinv.at(j, pos);
      if (coef != 0) acc = b.mul(acc, b.pow(j, coef));
    }
    out.generators.push_back(acc);
  }
  // coordinates: elem i -> (P e_i) at kept positions, mod factors
  out.coords.resize(n);
  for (Idx i = 0; i < n; ++i) {
    std::vector<Int> c;
    for (size_t k = 0; k < kept.size(); ++k) {
      Int v = sf.p.at(kept[k], i) % out.factors[k];
      if (v < 0) v += out.factors[k];
      c.push_back(v);
    }
    out.coords[i] = c;
    if (!out.lookup.emplace(c, i).second)
      fail(ErrorKind::InternalError, "abelian coordinates are not unique");
  }
  return out;
}

Idx AbelianDecomp::elem_of(std::vector<Int> c) const {
  for (size_t k = 0; k < factors.size(); ++k) {
    c[k] %= factors[k];
    if (c[k] < 0) c[k] += factors[k];
  }
  auto it = lookup.find(c);
  if (it == lookup.end()) fail(ErrorKind::InternalError, "coordinates out of range");
  return it->second;
}

std::string describe_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) return "nonabelian";
  AbelianDecomp d = abelian_decomp(g);
  if (d.factors.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < d.factors.size(); ++i) {
    if (i) os << " + ";
    os << "Z/" << d.factors[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// cochains

namespace {

size_t table_size(int degree, int corder) {
  size_t s = 1;
  for (int i = 0; i < degree; ++i) s *= static_cast<size_t>(corder);
  return s;
}

size_t flat_index(const std::vector<Idx>& args, int corder) {
  size_t idx = 0;
  for (Idx a : args) idx = idx * corder + a;
  return idx;
}

bool tuple_has_identity(const std::vector<Idx>& args, Idx e) {
  return std::find(args.begin(), args.end(), e) != args.end();
}

// iterate all argument tuples of a given degree
template <typename F>
void for_each_tuple(int degree, int corder, F&& f) {
  std::vector<Idx> args(degree, 0);
  size_t total = table_size(degree, corder);
  for (size_t i = 0; i < total; ++i) {
    size_t rem = i;
    for (int k = degree - 1; k >= 0; --k) {
      args[k] = static_cast<Idx>(rem % corder);
      rem /= corder;
    }
    f(args, i);
  }
}

}  // namespace

Idx Cochain::value_at(const std::vector<Idx>& args) const {
  return values[flat_index(args, action.actor.order)];
}

bool Cochain::is_zero() const {
  Idx z = action.module.identity;
  return std::all_of(values.begin(), values.end(), [z](Idx v) { return v == z; });
}

Cochain zero_cochain(int degree, const AbelianAction& action) {
  Cochain c;
  c.degree = degree;
  c.action = action;
  c.values.assign(table_size(degree, action.actor.order), action.module.identity);
  return c;
}

Cochain make_cochain(int degree, const AbelianAction& action, std::vector<Idx> values) {
  if (degree < 0) fail(ErrorKind::ValidationError, "negative cochain degree");
  if (values.size() != table_size(degree, action.actor.order))
    fail(ErrorKind::ValidationError, "cochain table has wrong size");
  for (Idx v : values)
    if (v < 0 || v >= action.module.order) fail(ErrorKind::ValidationError, "cochain value out of range");
  Cochain c;
  c.degree = degree;
  c.action = action;
  c.values = std::move(values);
  for_each_tuple(degree, action.actor.order, [&](const std::vector<Idx>& args, size_t i) {
    if (tuple_has_identity(args, action.actor.identity) && c.values[i] != action.module.identity)
      fail(ErrorKind::ValidationError, "cochain is not normalized");
  });
  return c;
}

static void require_same_module(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || !(a.action == b.action))
    fail(ErrorKind::ModuleMismatch, "cochains live over different modules");
}

Cochain add_cochains(const Cochain& a, const Cochain& b) {
  require_same_module(a, b);
  Cochain out = a;
  const FiniteGroup& m = a.action.module;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = m.mul(a.values[i], b.values[i]);
  return out;
}

Cochain negate_cochain(const Cochain& a) {
  Cochain out = a;
  const FiniteGroup& m = a.action.module;
  for (Idx& v : out.values) v = m.inv(v);
  return out;
}

Cochain sub_cochains(const Cochain& a, const Cochain& b) { return add_cochains(a, negate_cochain(b)); }

Cochain pullback_cochain(const Cochain& c, const Homomorphism& psi0) {
  AbelianAction pulled = pullback_action(psi0, c.action);
  Cochain out = zero_cochain(c.degree, pulled);
  for_each_tuple(c.degree, pulled.actor.order, [&](const std::vector<Idx>& args, size_t i) {
    std::vector<Idx> mapped(args.size());
    for (size_t k = 0; k < args.size(); ++k) mapped[k] = psi0.apply(args[k]);
    out.values[i] = c.value_at(mapped);
  });
  return out;
}

Cochain push_cochain(const Cochain& c, const Homomorphism& phi1, const AbelianAction& target_action) {
  if (!(phi1.source == c.action.module) || !(phi1.target == target_action.module) ||
      !(target_action.actor == c.action.actor))
    fail(ErrorKind::ModuleMismatch, "push_cochain: incompatible module data");
  Cochain out = zero_cochain(c.degree, target_action);
  for (size_t i = 0; i < c.values.size(); ++i) out.values[i] = phi1.apply(c.values[i]);
  return out;
}

Cochain differential(const Cochain& c) {
  if (c.degree > 3) fail(ErrorKind::DegreeTooHigh, "differential only implemented for degree <= 3");
  int n = c.degree;
  const FiniteGroup& cg = c.action.actor;
  const FiniteGroup& bg = c.action.module;
  Cochain out = zero_cochain(n + 1, c.action);
  for_each_tuple(n + 1, cg.order, [&](const std::vector<Idx>& args, size_t i) {
    Idx acc = bg.identity;
    // x0 . c(x1..xn)
    {
      std::vector<Idx> t(args.begin() + 1, args.end());
      acc = bg.mul(acc, c.action.apply(args[0], c.value_at(t)));
    }
    // alternating inner terms
    for (int k = 1; k <= n; ++k) {
      std::vector<Idx> t;
      t.reserve(n);
      for (int j = 0; j < k - 1; ++j) t.push_back(args[j]);
      t.push_back(cg.mul(args[k - 1], args[k]));
      for (int j = k + 1; j <= n; ++j) t.push_back(args[j]);
      Idx v = c.value_at(t);
      acc = bg.mul(acc, (k % 2 == 1) ? bg.inv(v) : v);
    }
    // last term (-1)^{n+1} c(x0..x_{n-1})
    {
      std::vector<Idx> t(args.begin(), args.end() - 1);
      Idx v = c.value_at(t);
      acc = bg.mul(acc, ((n + 1) % 2 == 1) ? bg.inv(v) : v);
    }
    out.values[i] = acc;
  });
  return out;
}

bool is_cocycle(const Cochain& c) { return differential(c).is_zero(); }

// ---------------------------------------------------------------------------
// the lattice behind H^n

struct CohomLatticeData {
  AbelianAction action;
  int degree = 0;
  AbelianDecomp bdec;
  int rank = 0;  // number of invariant factors of B

  std::vector<std::vector<Idx>> tuples_n;    // nonidentity tuples, degree n
  std::vector<std::vector<Idx>> tuples_np1;  // degree n+1
  std::vector<std::vector<Idx>> tuples_nm1;  // degree n-1
  IntMat d_n;        // a_{n+1} x a_n
  IntMat d_nm1;      // a_n x a_{n-1}
  IntMat basis;      // columns: basis of the cocycle lattice L in Z^{a_n}
  ColEchelon basis_solver;    // echelon of basis (basis is already echelon)
  SmithForm quotient_smith;   // SNF of boundary generators in basis coords
  std::vector<int> kept;      // SNF positions with d > 1
  std::vector<Int> rel_mod_n;     // modulus per coordinate of Z^{a_n}
  std::vector<Int> rel_mod_np1;

  int a(int which) const;  // 0: n-1, 1: n, 2: n+1
  std::vector<Int> vec_of(const Cochain& c) const;
  Cochain cochain_of(const std::vector<Int>& x, int degree) const;
};

namespace {

std::vector<std::vector<Idx>> nonidentity_tuples(int degree, const FiniteGroup& c) {
  std::vector<std::vector<Idx>> out;
  if (degree == 0) {
    out.push_back({});
    return out;
  }
  std::vector<Idx> cur(degree, 1);
  if (c.order == 1) return out;  // no nonidentity elements
  while (true) {
    out.push_back(cur);
    int pos = degree - 1;
    while (pos >= 0 && ++cur[pos] == c.order) cur[pos--] = 1;
    if (pos < 0) break;
  }
  return out;
}

// D matrix for d : C^deg -> C^{deg+1} on nonidentity tuples.
IntMat differential_matrix(const AbelianAction& action, const AbelianDecomp& bdec, int deg,
                           const std::vector<std::vector<Idx>>& dom_tuples,
                           const std::vector<std::vector<Idx>>& cod_tuples) {
  const FiniteGroup& cg = action.actor;
  int r = static_cast<int>(bdec.factors.size());
  std::map<std::vector<Idx>, int> dom_index;
  for (size_t i = 0; i < dom_tuples.size(); ++i) dom_index[dom_tuples[i]] = static_cast<int>(i);

  // action matrices on B coordinates
  std::vector<IntMat> act_mat(cg.order, IntMat(r, r));
  for (Idx x = 0; x < cg.order; ++x)
    for (int j = 0; j < r; ++j) {
      Idx img = action.apply(x, bdec.generators[j]);
      const std::vector<Int>& co = bdec.coords[img];
      for (int i = 0; i < r; ++i) act_mat[x].at(i, j) = co[i];
    }

  IntMat d(static_cast<int>(cod_tuples.size()) * r, static_cast<int>(dom_tuples.size()) * r);
  Idx e = cg.identity;
  for (size_t s = 0; s < cod_tuples.size(); ++s) {
    const std::vector<Idx>& args = cod_tuples[s];
    auto add_block = [&](const std::vector<Idx>& t, int sign, const IntMat* mat) {
      if (tuple_has_identity(t, e)) return;
      int col_block = dom_index.at(t);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          Int v = mat ? mat->at(i, j) : (i == j ? 1 : 0);
          if (v != 0)
            d.at(static_cast<int>(s) * r + i, col_block * r + j) += sign * v;
        }
    };
    {
      std::vector<Idx> t(args.begin() + 1, args.end());
      add_block(t, +1, &act_mat[args[0]]);
    }
    for (int k = 1; k <= deg; ++k) {
      std::vector<Idx> t;
      for (int j = 0; j < k - 1; ++j) t.push_back(args[j]);
      t.push_back(cg.mul(args[k - 1], args[k]));
      for (int j = k + 1; j <= deg; ++j) t.push_back(args[j]);
      add_block(t, (k % 2 == 1) ? -1 : +1, nullptr);
    }
    {
      std::vector<Idx> t(args.begin(), args.end() - 1);
      add_block(t, ((deg + 1) % 2 == 1) ? -1 : +1, nullptr);
    }
  }
  return d;
}

std::vector<Int> rel_moduli(size_t ntuples, const std::vector<Int>& factors) {
  std::vector<Int> out;
  out.reserve(ntuples * factors.size());
  for (size_t t = 0; t < ntuples; ++t)
    for (Int f : factors) out.push_back(f);
  return out;
}

ColEchelon echelon_of_echelon_basis(const IntMat& basis) {
  // basis columns are already in echelon form; build the solver directly
  ColEchelon ech;
  ech.h = basis;
  ech.u = IntMat::identity(basis.cols);
  for (int c = 0; c < basis.cols; ++c) {
    int r = 0;
    while (r < basis.rows && basis.at(r, c) == 0) ++r;
    if (r < basis.rows) ech.pivots.emplace_back(r, c);
  }
  return ech;
}

}  // namespace

int CohomLatticeData::a(int which) const {
  switch (which) {
    case 0: return static_cast<int>(tuples_nm1.size()) * rank;
    case 1: return static_cast<int>(tuples_n.size()) * rank;
    default: return static_cast<int>(tuples_np1.size()) * rank;
  }
}

std::vector<Int> CohomLatticeData::vec_of(const Cochain& c) const {
  const std::vector<std::vector<Idx>>& tup =
      c.degree == degree ? tuples_n : (c.degree == degree - 1 ? tuples_nm1 : tuples_np1);
  std::vector<Int> x;
  x.reserve(tup.size() * rank);
  for (const auto& t : tup) {
    const std::vector<Int>& co = bdec.coords[c.value_at(t)];
    x.insert(x.end(), co.begin(), co.end());
  }
  return x;
}

Cochain CohomLatticeData::cochain_of(const std::vector<Int>& x, int deg) const {
  const std::vector<std::vector<Idx>>& tup =
      deg == degree ? tuples_n : (deg == degree - 1 ? tuples_nm1 : tuples_np1);
  Cochain out = zero_cochain(deg, action);
  for (size_t t = 0; t < tup.size(); ++t) {
    std::vector<Int> co(x.begin() + t * rank, x.begin() + (t + 1) * rank);
    out.values[flat_index(tup[t], action.actor.order)] = bdec.elem_of(co);
  }
  return out;
}

CohomologyGroup cohomology_group(int n, const AbelianAction& action, long long budget) {
  if (n < 1 || n > 3) fail(ErrorKind::DegreeTooHigh, "cohomology_group supports degrees 1..3");
  budget = resolve_budget(budget);

  auto data = std::make_shared<CohomLatticeData>();
  data->action = action;
  data->degree = n;
  data->bdec = abelian_decomp(action.module);
  data->rank = static_cast<int>(data->bdec.factors.size());

  CohomologyGroup out;
  out.degree = n;
  out.action = action;
  out.data = data;
  if (data->rank == 0 || action.actor.order == 1) return out;  // trivial module or trivial group

  data->tuples_nm1 = nonidentity_tuples(n - 1, action.actor);
  data->tuples_n = nonidentity_tuples(n, action.actor);
  data->tuples_np1 = nonidentity_tuples(n + 1, action.actor);

  double mat_cells = static_cast<double>(data->a(2)) * data->a(1);
  check_budget(mat_cells, budget, "cohomology matrix of degree " + std::to_string(n));

  data->d_n = differential_matrix(action, data->bdec, n, data->tuples_n, data->tuples_np1);
  data->d_nm1 = differential_matrix(action, data->bdec, n - 1, data->tuples_nm1, data->tuples_n);
  data->rel_mod_n = rel_moduli(data->tuples_n.size(), data->bdec.factors);
  data->rel_mod_np1 = rel_moduli(data->tuples_np1.size(), data->bdec.factors);

  int an = data->a(1), anm1 = data->a(0), anp1 = data->a(2);

  // cocycle lattice L = { x : d_n x = 0 mod relations }
  IntMat k(anp1, an + anp1);
  for (int r = 0; r < anp1; ++r)
    for (int c = 0; c < an; ++c) k.at(r, c) = data->d_n.at(r, c);
  for (int r = 0; r < anp1; ++r) k.at(r, an + r) = data->rel_mod_np1[r];
  std::vector<std::vector<Int>> ker = kernel_basis(k);
  IntMat gen(an, static_cast<int>(ker.size()));
  for (size_t c = 0; c < ker.size(); ++c)
    for (int r = 0; r < an; ++r) gen.at(r, static_cast<int>(c)) = ker[c][r];
  ColEchelon gen_ech = column_echelon(std::move(gen));
  int lrank = static_cast<int>(gen_ech.pivots.size());
  if (lrank != an) fail(ErrorKind::InternalError, "cocycle lattice is not full rank");
  data->basis = IntMat(an, lrank);
  for (int c = 0; c < lrank; ++c)
    for (int r = 0; r < an; ++r) data->basis.at(r, c) = gen_ech.h.at(r, c);
  data->basis_solver = echelon_of_echelon_basis(data->basis);

  // boundary lattice generators: columns of d_{n-1} and the relations
  IntMat bd(an, anm1 + an);
  for (int r = 0; r < an; ++r)
    for (int c = 0; c < anm1; ++c) bd.at(r, c) = data->d_nm1.at(r, c);
  for (int r = 0; r < an; ++r) bd.at(r, anm1 + r) = data->rel_mod_n[r];

  IntMat cmat(lrank, bd.cols);
  for (int c = 0; c < bd.cols; ++c) {
    std::vector<Int> col(an);
    for (int r = 0; r < an; ++r) col[r] = bd.at(r, c);
    auto z = solve_linear(data->basis_solver, col);
    if (!z) fail(ErrorKind::InternalError, "boundary outside the cocycle lattice");
    for (int r = 0; r < lrank; ++r) cmat.at(r, c) = (*z)[r];
  }
  data->quotient_smith = smith_form(std::move(cmat));
  for (int i = 0; i < lrank; ++i) {
    Int d = data->quotient_smith.s.at(i, i);
    if (d == 0) fail(ErrorKind::InternalError, "cohomology group is not finite");
    if (d > 1) {
      data->kept.push_back(i);
      out.invariant_factors.push_back(d);
    }
  }
  for (int pos : data->kept) {
    std::vector<Int> coeff(lrank);
    for (int r = 0; r < lrank; ++r) coeff[r] = data->quotient_smith.pinv.at(r, pos);
    std::vector<Int> x(an, 0);
    for (int c = 0; c < lrank; ++c)
      if (coeff[c] != 0)
        for (int r = 0; r < an; ++r)
          x[r] = checked_add(x[r], checked_mul(data->basis.at(r, c), coeff[c]));
    out.representatives.push_back(data->cochain_of(x, n));
  }
  return out;
}

long long CohomologyGroup::order() const {
  long long o = 1;
  for (Int f : invariant_factors) o *= f;
  return o;
}

std::vector<Int> CohomologyGroup::decompose(const Cochain& cocycle) const {
  if (cocycle.degree != degree || !(cocycle.action == action))
    fail(ErrorKind::ModuleMismatch, "decompose: cochain over a different module");
  if (!is_cocycle(cocycle)) fail(ErrorKind::NotACocycle, "decompose requires a cocycle");
  if (invariant_factors.empty()) return {};
  const CohomLatticeData& d = *data;
  std::vector<Int> x = d.vec_of(cocycle);
  auto z = solve_linear(d.basis_solver, x);
  if (!z) fail(ErrorKind::InternalError, "cocycle not in the cocycle lattice");
  std::vector<Int> out;
  for (size_t k = 0; k < d.kept.size(); ++k) {
    Int y = 0;
    for (int c = 0; c < d.quotient_smith.p.cols; ++c)
      if ((*z)[c] != 0) y = checked_add(y, checked_mul(d.quotient_smith.p.at(d.kept[k], c), (*z)[c]));
    Int m = invariant_factors[k];
    y %= m;
    if (y < 0) y += m;
    out.push_back(y);
  }
  return out;
}

std::vector<Cochain> CohomologyGroup::all_class_representatives(long long budget) const {
  budget = resolve_budget(budget);
  check_budget(static_cast<double>(order()), budget, "class representative enumeration");
  std::vector<Cochain> out;
  std::vector<Int> coord(invariant_factors.size(), 0);
  while (true) {
    Cochain c = zero_cochain(degree, action);
    for (size_t k = 0; k < coord.size(); ++k)
      for (Int i = 0; i < coord[k]; ++i) c = add_cochains(c, representatives[k]);
    out.push_back(std::move(c));
    int pos = static_cast<int>(coord.size()) - 1;
    while (pos >= 0 && ++coord[pos] == invariant_factors[pos]) coord[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::optional<Cochain> coboundary_witness(const Cochain& c) {
  if (c.degree < 1) fail(ErrorKind::ValidationError, "coboundary_witness needs degree >= 1");
  if (!is_cocycle(c)) fail(ErrorKind::NotACocycle, "input to coboundary_witness is not a cocycle");
  const AbelianAction& action = c.action;
  AbelianDecomp bdec = abelian_decomp(action.module);
  int r = static_cast<int>(bdec.factors.size());
  if (r == 0 || action.actor.order == 1) return zero_cochain(c.degree - 1, action);

  auto tup_nm1 = nonidentity_tuples(c.degree - 1, action.actor);
  auto tup_n = nonidentity_tuples(c.degree, action.actor);
  IntMat d = differential_matrix(action, bdec, c.degree - 1, tup_nm1, tup_n);
  int an = static_cast<int>(tup_n.size()) * r;
  int anm1 = static_cast<int>(tup_nm1.size()) * r;
  IntMat aug(an, anm1 + an);
  for (int i = 0; i < an; ++i)
    for (int j = 0; j < anm1; ++j) aug.at(i, j) = d.at(i, j);
  std::vector<Int> moduli = rel_moduli(tup_n.size(), bdec.factors);
  for (int i = 0; i < an; ++i) aug.at(i, anm1 + i) = moduli[i];

  std::vector<Int> x;
  x.reserve(static_cast<size_t>(an));
  for (const auto& t : tup_n) {
    const std::vector<Int>& co = bdec.coords[c.value_at(t)];
    x.insert(x.end(), co.begin(), co.end());
  }
  ColEchelon ech = column_echelon(std::move(aug));
  auto w = solve_linear(ech, x);
  if (!w) return std::nullopt;

  Cochain out = zero_cochain(c.degree - 1, action);
  for (size_t t = 0; t < tup_nm1.size(); ++t) {
    std::vector<Int> co((*w).begin() + t * r, (*w).begin() + (t + 1) * r);
    out.values[flat_index(tup_nm1[t], action.actor.order)] = bdec.elem_of(co);
  }
  // the solver works mod relations, so re-check the witness exactly
  if (!(sub_cochains(differential(out), c).is_zero()))
    fail(ErrorKind::InternalError, "coboundary witness does not verify");
  return out;
}

std::vector<Cochain> cocycle_list(int n, const AbelianAction& action, long long budget) {
  budget = resolve_budget(budget);
  std::vector<Cochain> out;
  AbelianDecomp bdec = abelian_decomp(action.module);
  int r = static_cast<int>(bdec.factors.size());
  if (r == 0) {
    out.push_back(zero_cochain(n, action));
    return out;
  }
  auto tup_n = nonidentity_tuples(n, action.actor);
  auto tup_np1 = nonidentity_tuples(n + 1, action.actor);
  IntMat d = differential_matrix(action, bdec, n, tup_n, tup_np1);
  int an = static_cast<int>(tup_n.size()) * r;
  int anp1 = static_cast<int>(tup_np1.size()) * r;
  IntMat k(anp1, an + anp1);
  for (int i = 0; i < anp1; ++i)
    for (int j = 0; j < an; ++j) k.at(i, j) = d.at(i, j);
  std::vector<Int> mod_np1 = rel_moduli(tup_np1.size(), bdec.factors);
  for (int i = 0; i < anp1; ++i) k.at(i, an + i) = mod_np1[i];
  std::vector<std::vector<Int>> ker = kernel_basis(k);

  std::vector<Int> mod_n = rel_moduli(tup_n.size(), bdec.factors);
  auto reduce = [&](std::vector<Int> v) {
    for (int i = 0; i < an; ++i) {
      v[i] %= mod_n[i];
      if (v[i] < 0) v[i] += mod_n[i];
    }
    return v;
  };
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> gens;
  for (const auto& kv : ker) gens.push_back(reduce(std::vector<Int>(kv.begin(), kv.begin() + an)));
  std::vector<std::vector<Int>> queue{std::vector<Int>(an, 0)};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<Int> nxt(an);
      for (int i = 0; i < an; ++i) nxt[i] = queue[head][i] + g[i];
      nxt = reduce(std::move(nxt));
      if (seen.insert(nxt).second) {
        check_budget(static_cast<double>(seen.size()), budget, "cocycle enumeration");
        queue.push_back(std::move(nxt));
      }
    }
  }
  for (const auto& v : seen) {
    Cochain c = zero_cochain(n, action);
    for (size_t t = 0; t < tup_n.size(); ++t) {
      std::vector<Int> co(v.begin() + t * r, v.begin() + (t + 1) * r);
      c.values[flat_index(tup_n[t], action.actor.order)] = bdec.elem_of(co);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cochain& a, const Cochain& b) { return a.values < b.values; });
  return out;
}

}  // namespace obk
