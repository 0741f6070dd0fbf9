#include "approxcommute/families.hpp"

#include <stdexcept>

#include "approxcommute/error.hpp"
#include "approxcommute/subgroups.hpp"

namespace approxcommute {

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "cyclic group of order 0");
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = ElementId((a + b) % n);
  return Group::from_trusted_table(n, std::move(t));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "dihedral group of a 0-gon");
  const auto order = 2 * n;
  std::vector<ElementId> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto i = a % n, ja = a / n, j = b % n, jb = b / n;
      // r^i s^ja r^j s^jb = r^(i +- j) s^(ja + jb)
      const auto rot = ja == 0 ? (i + j) % n : (i + n - j) % n;
      t[a * order + b] = ElementId(((ja + jb) % 2) * n + rot);
    }
  return Group::from_trusted_table(order, std::move(t));
}

GroupPtr quaternion_group(std::size_t order) {
  if (order < 8 || order % 4 != 0) throw Error(ErrorKind::BadParams, "quaternion order must be a multiple of 4, >= 8");
  const auto m2 = order / 2, m = order / 4;
  std::vector<ElementId> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto i = a % m2, ja = a / m2, j = b % m2, jb = b / m2;
      auto rot = ja == 0 ? (i + j) % m2 : (i + m2 - j) % m2;
      if (ja == 1 && jb == 1) rot = (rot + m) % m2;
      t[a * order + b] = ElementId(((ja + jb) % 2) * m2 + rot);
    }
  return Group::from_trusted_table(order, std::move(t));
}

GroupPtr symmetric_group(std::size_t degree, std::size_t order_cap) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    Permutation swap(degree), cycle(degree);
    for (std::uint32_t i = 0; i < degree; ++i) swap[i] = i, cycle[i] = std::uint32_t((i + 1) % degree);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    if (degree > 2) gens.push_back(cycle);
  }
  return build_from_permutations(gens, degree, order_cap);
}

GroupPtr alternating_group(std::size_t degree, std::size_t order_cap) {
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < degree; ++i) {
    Permutation p(degree);
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
    p[0] = 1, p[1] = i, p[i] = 0;
    gens.push_back(p);
  }
  return build_from_permutations(gens, degree, order_cap);
}

void validate(const ExampleParams& p) {
  if (p.n < 2) throw Error(ErrorKind::BadParams, "n must be at least 2");
  if (p.k < 1 || p.k >= p.n) throw Error(ErrorKind::BadParams, "k must satisfy 1 <= k < n");
  if (p.u_order < 1) throw Error(ErrorKind::BadParams, "u must be positive");
  if (p.n > 24) throw Error(ErrorKind::BadParams, "n too large");
}

PredictedQuantities predicted_quantities(const ExampleParams& p) {
  validate(p);
  const std::int64_t n = std::int64_t(p.n), k = std::int64_t(p.k), z = std::int64_t(p.z());
  const std::int64_t two_k = std::int64_t{1} << k;
  PredictedQuantities q;
  q.group_order = p.group_order();
  q.a_size = std::size_t(k * z + 1);
  q.h_size = std::size_t(two_k * z);
  q.a0_size = std::size_t((k + 1) * z);
  q.class_size = p.n;
  q.pr_a_g = (Rational(k * z, n) + 1) / Rational(k * z + 1);
  q.pr_a_g_upper = Rational(1, n) + Rational(1, k * z);
  q.a_over_h_lower = Rational(k, two_k);
  q.pr_h_g_lower = Rational(1, two_k);
  q.pr_a0_g_lower = Rational(1, k + 1);
  q.ratio_a_h_upper = q.pr_a_g_upper * Rational(two_k);
  q.ratio_a_a0_upper = q.pr_a_g_upper * Rational(k + 1);
  return q;
}

ExampleInstance build_example(const ExampleParams& p, std::size_t order_cap) {
  validate(p);
  if (p.group_order() > order_cap)
    throw Error(ErrorKind::OrderCapExceeded, "example group of order " + std::to_string(p.group_order()));

  // V x| <g>: element v g^i has id i * 2^n + v; g v g^-1 shifts bit j to j+1.
  const std::size_t n = p.n, vsize = std::size_t{1} << n, order = n * vsize;
  const std::uint32_t full_mask = std::uint32_t(vsize - 1);
  auto shift = [&](std::uint32_t v, std::size_t i) -> std::uint32_t {
    i %= n;
    if (i == 0) return v;
    return ((v << i) | (v >> (n - i))) & full_mask;
  };
  std::vector<ElementId> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto va = std::uint32_t(a % vsize), vb = std::uint32_t(b % vsize);
      const std::size_t ia = a / vsize, ib = b / vsize;
      t[a * order + b] = ElementId(((ia + ib) % n) * vsize + (va ^ shift(vb, ia)));
    }
  auto semidirect = Group::from_trusted_table(order, std::move(t));
  auto g = direct_product(semidirect, cyclic_group(p.u_order), order_cap);

  ExampleInstance inst{p, g, {}, 0, Subset(g), Subset(g), Subset(g), Subset(g), predicted_quantities(p)};
  const auto u = p.u_order;
  for (std::size_t i = 0; i < n; ++i) inst.basis.push_back(ElementId((std::size_t{1} << i) * u));
  inst.shift = ElementId(vsize * u);

  SubsetBuilder zb(g);
  for (std::size_t w = 0; w < u; ++w) {
    zb.insert(ElementId(w));
    zb.insert(ElementId(full_mask * u + w));
  }
  inst.z = zb.build();
  if (!(center(g) == inst.z)) throw std::logic_error("example: center differs from <g_1...g_n> x U");

  SubsetBuilder ab(g);
  ab.insert(Group::identity());
  for (std::size_t i = 0; i < p.k; ++i)
    for (auto c : inst.z) ab.insert(g->mul(inst.basis[i], c));
  inst.a = ab.build();
  inst.a0 = inst.a | inst.z;
  inst.h = subgroup_closure(inst.a);
  return inst;
}

}  // namespace approxcommute
