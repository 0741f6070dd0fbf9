#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "approxcommute/subgroups.hpp"
#include "oracles.hpp"

using namespace approxcommute;

namespace {

std::vector<std::vector<std::int64_t>> to_input(const oracle::Table& t) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : t) out.emplace_back(row.begin(), row.end());
  return out;
}

// Same multiplication up to relabelling by `map` (table ids -> group ids).
bool isomorphic_via(const oracle::Table& t, const Group& g, const std::vector<int>& map) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (int(g.mul(map[a], map[b])) != map[t[a][b]]) return false;
  return true;
}

}  // namespace

TEST_CASE("tables: trivial, C2 and S3") {
  auto t1 = build_from_table({{0}});
  CHECK(t1->order() == 1);
  auto c2 = build_from_table({{0, 1}, {1, 0}});
  CHECK(c2->order() == 2);
  CHECK(c2->inv(1) == 1);

  const auto s3 = oracle::perm_table({{1, 0, 2}, {1, 2, 0}}, 3);
  auto g = build_from_table(to_input(s3));
  CHECK(g->order() == 6);
  CHECK(g->class_count() == 3);
  CHECK(oracle::conjugacy_classes(s3).size() == 3);
}

TEST_CASE("tables: identity is moved to id 0 and labels follow") {
  // C3 with identity at index 2
  auto g = build_from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"});
  CHECK(g->label(0) == "e");
  for (ElementId x = 0; x < 3; ++x) {
    CHECK(g->mul(0, x) == x);
    CHECK(g->mul(x, g->inv(x)) == 0);
  }
  CHECK(g->mul(1, 1) == 2);
}

TEST_CASE("tables: validation errors") {
  CHECK_ERROR_KIND(build_from_table({{0, 1}, {1}}), BadTable);
  CHECK_ERROR_KIND(build_from_table({{0, 2}, {1, 0}}), BadTable);
  CHECK_ERROR_KIND(build_from_table({{0, 0}, {1, 1}}), NotLatinSquare);
  // Latin square without identity
  CHECK_ERROR_KIND(build_from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), NoIdentity);
  // Latin square with identity 0 but not associative: a quasigroup of order 5
  const std::vector<std::vector<std::int64_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_ERROR_KIND(build_from_table(loop), NotAssociative);
}

TEST_CASE("tables: sampled associativity above the cap still rejects a bad loop") {
  const std::vector<std::vector<std::int64_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_ERROR_KIND(build_from_table(loop, {}, 2), NotAssociative);
  auto q = oracle::quaternion_units();
  CHECK(build_from_table(to_input(q), {}, 2)->order() == 8);
}

TEST_CASE("permutations: closures match the brute-force oracle") {
  CHECK(build_from_permutations({}, 3)->order() == 1);
  CHECK(build_from_permutations({{1, 0}}, 2)->order() == 2);
  CHECK(build_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3)->order() == 6);

  const std::vector<std::vector<oracle::Perm>> cases = {
      {{1, 0, 2, 3}, {1, 2, 3, 0}},
      {{1, 2, 0, 3}, {0, 2, 3, 1}},
      {{1, 0, 3, 2}, {2, 3, 0, 1}},
      {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}},
  };
  for (const auto& gens : cases) {
    const int d = int(gens.front().size());
    std::vector<Permutation> pg;
    for (const auto& p : gens) pg.emplace_back(p.begin(), p.end());
    auto g = build_from_permutations(pg, d);
    const auto t = oracle::perm_table(gens, d);
    CHECK(g->order() == t.size());
    CHECK(g->class_count() == oracle::conjugacy_classes(t).size());
  }
}

TEST_CASE("permutations: errors and labels") {
  CHECK_ERROR_KIND(build_from_permutations({{0, 0, 1}}, 3), BadPermutation);
  CHECK_ERROR_KIND(build_from_permutations({{0, 1}}, 3), BadPermutation);
  CHECK_ERROR_KIND(build_from_permutations({{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}, 6, 100), OrderCapExceeded);
  auto g = build_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
  CHECK(g->label(0) == "()");
  CHECK(g->label(1) == "(0 1)");
  CHECK(cycle_notation({1, 2, 0, 4, 3}) == "(0 1 2)(3 4)");
}

TEST_CASE("quaternion family agrees with Hamilton's units") {
  auto q = quaternion_group(8);
  const auto t = oracle::quaternion_units();
  // x = i, y = j: x^a y^b with id b*4 + a
  // i^0..3 = 1, i, -1, -i; j-coset: x^a j
  const int i_pow[4] = {0, 2, 1, 3};
  std::vector<int> map(8);
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 4; ++a) {
      const int unit = b == 0 ? i_pow[a] : t[i_pow[a]][4];
      map[unit] = b * 4 + a;
    }
  CHECK(isomorphic_via(t, *q, map));
  CHECK(quaternion_group(16)->class_count() == 7);
  CHECK_ERROR_KIND(quaternion_group(6), BadParams);
}

TEST_CASE("direct products") {
  auto trivial = cyclic_group(1);
  auto h = dihedral_group(4);
  auto p = direct_product(trivial, h);
  CHECK(p->order() == 8);
  for (ElementId a = 0; a < 8; ++a)
    for (ElementId b = 0; b < 8; ++b) CHECK(p->mul(a, b) == h->mul(a, b));

  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  for (ElementId x = 1; x < 4; ++x) CHECK(v4->mul(x, x) == 0);

  auto s3c2 = support::s3_c2();
  CHECK(s3c2->order() == 12);
  CHECK(s3c2->class_count() == 6);
  CHECK(oracle::conjugacy_classes(oracle::table_of(*s3c2)).size() == 6);
  CHECK_ERROR_KIND(direct_product(symmetric_group(4), symmetric_group(4), 100), OrderCapExceeded);
}

TEST_CASE("group invariants on every small group") {
  for (const auto& g : support::small_groups()) {
    const auto n = g->order();
    for (ElementId a = 0; a < n; ++a) {
      std::vector<bool> row(n), col(n);
      for (ElementId b = 0; b < n; ++b) row[g->mul(a, b)] = col[g->mul(b, a)] = true;
      CHECK(std::count(row.begin(), row.end(), true) == std::ptrdiff_t(n));
      CHECK(std::count(col.begin(), col.end(), true) == std::ptrdiff_t(n));
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->mul(g->inv(a), a) == 0);
      CHECK(g->mul(0, a) == a);
    }
    std::size_t total = 0;
    for (std::size_t c = 0; c < g->class_count(); ++c) total += g->class_members(c).size();
    CHECK(total == n);
    CHECK(g->class_count() == oracle::conjugacy_classes(oracle::table_of(*g)).size());
  }
}

TEST_CASE("subgroup closure") {
  auto s3 = support::s3();
  CHECK(subgroup_closure(Subset::identity_only(s3)).size() == 1);
  // (0 1 2) is generator index 2 in BFS order
  ElementId three_cycle = 0;
  for (ElementId x = 0; x < 6; ++x)
    if (s3->mul(x, x) != 0 && x != 0) three_cycle = x;
  const auto c3 = subgroup_closure(Subset::of(s3, {three_cycle}));
  CHECK(c3.size() == 3);
  CHECK(is_subgroup(c3));
  CHECK(is_normal_subgroup(c3));

  auto t = oracle::table_of(*s3);
  CHECK(oracle::to_set(c3) == oracle::closure(t, {int(three_cycle)}));
}

TEST_CASE("centralizers and classes") {
  auto s3 = support::s3();
  const auto all = Subset::all(s3);
  CHECK(centralizer_in(all, 0) == all);
  CHECK(centralizer_in(all, 1).size() == 2);  // (0 1)
  auto c6 = cyclic_group(6);
  const auto some = Subset::of(c6, {1, 4, 5});
  CHECK(centralizer_in(some, 3) == some);
  CHECK(conjugacy_class_under(1, Subset::identity_only(s3)).size() == 1);
  CHECK(conjugacy_class_under(2, Subset::all(c6)).size() == 1);

  for (const auto& g : support::small_groups()) {
    const auto whole = Subset::all(g);
    for (ElementId x = 0; x < g->order(); ++x) {
      const auto cent = centralizer_in(whole, x);
      CHECK(is_subgroup(cent));
      CHECK(conjugacy_class_under(x, whole).size() * cent.size() == g->order());
      CHECK(class_size_under(x, whole) == g->class_size_of(x));
      CHECK(g->centralizer_order(x) == cent.size());
    }
  }
}

TEST_CASE("class under T has the size of the commutator set [g,T]") {
  SplitMix64 rng(7);
  for (const auto& g : support::small_groups()) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto t = support::random_subset(g, rng);
      const auto x = ElementId(rng.uniform(g->order()));
      std::set<ElementId> comms;
      for (auto y : t) comms.insert(g->commutator(x, y));
      CHECK(conjugacy_class_under(x, t).size() == comms.size());
    }
  }
}

TEST_CASE("commutator subgroups") {
  auto s3 = support::s3();
  const auto all = Subset::all(s3);
  CHECK(commutator_subgroup(all, all).size() == 3);
  auto s3c2 = support::s3_c2();
  CHECK(commutator_subgroup(center(s3c2), Subset::all(s3c2)).size() == 1);
  auto q8 = quaternion_group(8);
  CHECK(commutator_subgroup(Subset::all(q8), Subset::all(q8)).size() == 2);
}

TEST_CASE("normal subgroups agree with brute-force enumeration") {
  CHECK(normal_subgroups(cyclic_group(7)).size() == 2);
  CHECK(normal_subgroups(support::s3()).size() == 3);
  CHECK(normal_subgroups(dihedral_group(4)).size() == 6);
  for (const auto& g : support::small_groups()) {
    const auto mine = normal_subgroups(g);
    std::set<oracle::ElemSet> got;
    for (const auto& n : mine) {
      CHECK(is_normal_subgroup(n));
      got.insert(oracle::to_set(n));
    }
    CHECK(got.size() == mine.size());
    CHECK(got == oracle::normal_subgroups(oracle::table_of(*g)));
  }
  CHECK_ERROR_KIND(normal_subgroups(cyclic_group(30), 10), ClassCountCapExceeded);
}

TEST_CASE("quotients") {
  auto s3 = support::s3();
  auto id = quotient(Subset::identity_only(s3));
  CHECK(id.target->order() == 6);
  auto triv = quotient(Subset::all(s3));
  CHECK(triv.target->order() == 1);
  const auto normals = normal_subgroups(s3);
  const auto a3 = normals[1];
  CHECK(a3.size() == 3);
  auto q = quotient(a3);
  CHECK(q.target->order() == 2);
  CHECK(q.target->is_abelian());

  const auto not_normal = subgroup_closure(Subset::of(s3, {1}));
  CHECK_ERROR_KIND(quotient(not_normal), NotNormal);
  CHECK_ERROR_KIND(quotient(Subset::of(s3, {0, 1, 2})), NotSubgroup);

  for (const auto& g : support::small_groups())
    for (const auto& n : normal_subgroups(g)) {
      const auto m = quotient(n);
      CHECK(m.target->order() * n.size() == g->order());
      bool hom = true;
      for (ElementId a = 0; a < g->order(); ++a)
        for (ElementId b = 0; b < g->order(); ++b)
          hom = hom && m.project(g->mul(a, b)) == m.target->mul(m.project(a), m.project(b));
      CHECK(hom);
      std::size_t kernel = 0;
      for (ElementId a = 0; a < g->order(); ++a)
        if (m.project(a) == 0) {
          ++kernel;
          CHECK(n.contains(a));
        }
      CHECK(kernel == n.size());
    }
}
