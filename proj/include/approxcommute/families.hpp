#pragma once

#include <cstddef>
#include <vector>

#include "approxcommute/rational.hpp"
#include "approxcommute/subset.hpp"

namespace approxcommute {

// Standard families, all with deterministic element numbering.

/// Z/n, element i is the residue i.
GroupPtr cyclic_group(std::size_t n);
/// Symmetries of the n-gon, order 2n; element r^i s^j has id j*n + i.
GroupPtr dihedral_group(std::size_t n);
/// Generalized quaternion group of the given order (a multiple of 4, >= 8):
/// <x, y | x^(2m) = 1, y^2 = x^m, x^y = x^-1>; element x^i y^j has id j*2m + i.
GroupPtr quaternion_group(std::size_t order);
/// Sym(d), generated by (0 1) and (0 1 ... d-1).
GroupPtr symmetric_group(std::size_t degree, std::size_t order_cap = kDefaultPermutationCap);
/// Alt(d), generated by the 3-cycles (0 1 i).
GroupPtr alternating_group(std::size_t degree, std::size_t order_cap = kDefaultPermutationCap);

/// Parameters of the group (V x| <g>) x U where V = C2^n, g cyclically shifts
/// a basis g_1..g_n of V and U is cyclic of order u_order. The set A is built
/// from the first k basis vectors, so A is a (k+1)-approximate subgroup.
struct ExampleParams {
  std::size_t n = 2;
  std::size_t k = 1;
  std::size_t u_order = 1;

  /// |Z(G)| = 2|U|.
  std::size_t z() const noexcept { return 2 * u_order; }
  std::size_t group_order() const noexcept { return n * (std::size_t{1} << n) * u_order; }
};

/// Throws BadParams unless n >= 2, 1 <= k < n, u_order >= 1.
void validate(const ExampleParams& p);

/// Closed-form values for the shift-group example. `*_lower` / `*_upper`
/// are strict bounds, the rest are equalities.
struct PredictedQuantities {
  std::size_t group_order = 0;
  std::size_t a_size = 0;   // kz + 1
  std::size_t h_size = 0;   // 2^k z
  std::size_t a0_size = 0;  // (k+1) z
  std::size_t class_size = 0;  // |a^G| = n for 1 != a in A
  Rational pr_a_g;             // (kz/n + 1) / (kz + 1)
  Rational pr_a_g_upper;       // 1/n + 1/(kz)
  Rational a_over_h_lower;     // k / 2^k
  Rational pr_h_g_lower;       // 1 / 2^k
  Rational pr_a0_g_lower;      // 1 / (k+1)
  Rational ratio_a_h_upper;    // (1/n + 1/(kz)) 2^k
  Rational ratio_a_a0_upper;   // (1/n + 1/(kz)) (k+1)
};

PredictedQuantities predicted_quantities(const ExampleParams& p);

struct ExampleInstance {
  ExampleParams params;
  GroupPtr group;
  std::vector<ElementId> basis;  // g_1..g_n
  ElementId shift = 0;           // g
  Subset a;                      // {1} u g_1 Z u ... u g_k Z
  Subset a0;                     // Z u A
  Subset h;                      // <A>
  Subset z;                      // Z(G), checked against <g_1...g_n> x U
  PredictedQuantities predicted;
};

/// Throws BadParams or OrderCapExceeded.
ExampleInstance build_example(const ExampleParams& p, std::size_t order_cap = kDefaultPermutationCap);

}  // namespace approxcommute
