#include "doctest.h"

#include <algorithm>
#include <array>
#include <vector>

#include "obstrukt/fingroup.hpp"

using namespace obk;

namespace {

// Oracle: S3 as compositions of the permutations of {0,1,2}.
std::vector<std::vector<Idx>> s3_table_from_permutations() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<Idx>(i);
    return Idx{-1};
  };
  std::vector<std::vector<Idx>> table(6, std::vector<Idx>(6));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index_of(comp);
    }
  return table;
}

// Oracle: every map src -> dst fixing e, tested for multiplicativity directly.
int brute_force_hom_count(const FiniteGroup& src, const FiniteGroup& dst) {
  int n = src.order;
  std::vector<Idx> img(n, 0);
  int count = 0;
  while (true) {
    bool ok = img[src.identity] == dst.identity;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) ok = img[src.mul(x, y)] == dst.mul(img[x], img[y]);
    if (ok) ++count;
    int pos = n - 1;
    while (pos >= 0 && ++img[pos] == dst.order) img[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("validate_group accepts Z2 and rejects non-groups") {
  FiniteGroup z2 = validate_group({{0, 1}, {1, 0}});
  CHECK(z2.order == 2);
  CHECK(z2.identity == 0);
  CHECK(z2.inv(1) == 1);

  CHECK_THROWS_WITH_AS(validate_group({{0, 1}, {0, 1}}), doctest::Contains("NoIdentity"), Error);
  // associative magma with identity but missing inverses: min(x,y) on {0,1,2} with 2 as identity
  CHECK_THROWS_WITH_AS(validate_group({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}),
                       doctest::Contains("NoInverse"), Error);
  // Z6 with one intercalate swapped: still a loop with two-sided inverses,
  // but (1.1).2 = 1 while 1.(1.2) = 4
  CHECK_THROWS_WITH_AS(validate_group({{0, 1, 2, 3, 4, 5},
                                       {1, 5, 3, 4, 2, 0},
                                       {2, 3, 4, 5, 0, 1},
                                       {3, 4, 5, 0, 1, 2},
                                       {4, 2, 0, 1, 5, 3},
                                       {5, 0, 1, 2, 3, 4}}),
                       doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("validate_group re-indexes the identity to 0") {
  // Z2 written with identity at index 1
  FiniteGroup g = validate_group({{1, 0}, {0, 1}});
  CHECK(g.identity == 0);
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("S3 from the permutation oracle is a valid nonabelian group") {
  FiniteGroup s3 = validate_group(s3_table_from_permutations());
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
  for (Idx x = 0; x < 6; ++x)
    for (Idx y = 0; y < 6; ++y)
      for (Idx z = 0; z < 6; ++z) CHECK(s3.mul(s3.mul(x, y), z) == s3.mul(x, s3.mul(y, z)));
}

TEST_CASE("enumerate_homs matches brute force on small pairs") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  FiniteGroup s3 = validate_group(s3_table_from_permutations());
  FiniteGroup triv = trivial_group();

  CHECK(enumerate_homs(z2, z2).size() == 2);  // zero and identity
  CHECK(enumerate_homs(z3, z2).size() == 1);  // zero only
  CHECK(enumerate_homs(s3, triv).size() == 1);
  CHECK(enumerate_homs(z4, z4).size() == 4);

  for (auto [a, b] : std::vector<std::pair<FiniteGroup, FiniteGroup>>{
           {z2, z2}, {z3, z2}, {z2, z3}, {z4, z2}, {z3, s3}, {s3, z2}, {z4, s3}}) {
    auto homs = enumerate_homs(a, b);
    CHECK(static_cast<int>(homs.size()) == brute_force_hom_count(a, b));
    // deterministic lexicographic order
    for (size_t i = 1; i < homs.size(); ++i) CHECK(homs[i - 1].images < homs[i].images);
    for (const auto& h : homs)
      for (Idx x = 0; x < a.order; ++x)
        for (Idx y = 0; y < a.order; ++y)
          CHECK(h.images[a.mul(x, y)] == b.mul(h.images[x], h.images[y]));
  }
}

TEST_CASE("enumerate_homs respects the candidate budget") {
  FiniteGroup z4 = cyclic_group(4);
  CHECK_THROWS_WITH_AS(enumerate_homs(z4, z4, 3), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("structure_of on S3, Z4 and the trivial group") {
  FiniteGroup s3 = validate_group(s3_table_from_permutations());
  GroupStructureReport rep = structure_of(s3);
  CHECK(rep.center.size() == 1);
  CHECK(rep.automorphisms.order == 6);
  CHECK(rep.inner.size() == 6);
  CHECK(rep.outer.order == 1);

  FiniteGroup z4 = cyclic_group(4);
  GroupStructureReport rz4 = structure_of(z4);
  CHECK(rz4.center.size() == 4);
  CHECK(rz4.automorphisms.order == 2);
  CHECK(rz4.inner.size() == 1);
  CHECK(rz4.outer.order == 2);

  GroupStructureReport rt = structure_of(trivial_group());
  CHECK(rt.automorphisms.order == 1);
  CHECK(rt.outer.order == 1);
}

TEST_CASE("structure_of invariants: conj, center, |Aut| = |Inn|.|Out|") {
  for (const FiniteGroup& g : {validate_group(s3_table_from_permutations()), cyclic_group(4),
                               product_group(cyclic_group(2), cyclic_group(2))}) {
    GroupStructureReport rep = structure_of(g);
    CHECK(rep.automorphisms.order ==
          static_cast<int>(rep.inner.size()) * rep.outer.order);
    for (Idx a = 0; a < g.order; ++a)
      for (Idx x = 0; x < g.order; ++x)
        CHECK(rep.aut_eval[rep.conj.apply(a)][x] == g.conj(a, x));
    // Z(G) = ker conj
    CHECK(rep.center == rep.conj.kernel());
  }
}

TEST_CASE("make_action validates and pullbacks compose") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);

  AbelianAction triv = trivial_action(z2, z3);
  CHECK(triv.is_trivial());

  // Z2 acting on Z3 by inversion
  AbelianAction inv = make_action(z2, z3, {0, 1, 2, 0, 2, 1});
  CHECK(inv.apply(1, 1) == 2);

  // act(1,-) not injective
  CHECK_THROWS_WITH_AS(make_action(z2, z3, {0, 1, 2, 0, 0, 1}), doctest::Contains("NotAutomorphism"),
                       Error);
  // S3 module is not abelian
  FiniteGroup s3 = validate_group(s3_table_from_permutations());
  std::vector<Idx> id_act(static_cast<size_t>(z2.order) * s3.order);
  for (Idx c = 0; c < z2.order; ++c)
    for (Idx b = 0; b < s3.order; ++b) id_act[static_cast<size_t>(c) * s3.order + b] = b;
  CHECK_THROWS_WITH_AS(make_action(z2, s3, id_act), doctest::Contains("NotAbelian"), Error);

  // pullback along composites: psi: Z4 -> Z2 the quotient, then twice
  FiniteGroup z4 = cyclic_group(4);
  Homomorphism q = make_hom(z4, z2, {0, 1, 0, 1});
  AbelianAction pulled = pullback_action(q, inv);
  CHECK(pulled.apply(1, 1) == 2);
  CHECK(pulled.apply(2, 1) == 1);
  Homomorphism idz4 = identity_hom(z4);
  CHECK(pullback_action(idz4, pulled) == pulled);
  // pulling back along psi then psi' equals pulling back along psi.psi'
  Homomorphism z8q = make_hom(cyclic_group(8), z4, {0, 1, 2, 3, 0, 1, 2, 3});
  CHECK(pullback_action(z8q, pulled) == pullback_action(compose_homs(q, z8q), inv));
}

TEST_CASE("subgroups and quotients are canonical") {
  FiniteGroup s3 = validate_group(s3_table_from_permutations());
  // A3 = the three even permutations; find them as elements of order dividing 3
  std::vector<Idx> a3;
  for (Idx x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.push_back(x);
  REQUIRE(a3.size() == 3);
  CHECK(is_normal_subgroup(s3, a3));
  auto emb = subgroup_from(s3, a3);
  CHECK(emb.sub.order == 3);
  auto quo = quotient_by(s3, a3);
  CHECK(quo.quo.order == 2);
  CHECK(quo.proj.apply(0) == 0);

  auto gens = minimal_generators(s3);
  CHECK(generated_subgroup(s3, gens).size() == 6);
  CHECK(gens.size() <= 2);
}
