#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "approxcommute/rational.hpp"
#include "approxcommute/subset.hpp"

namespace approxcommute {

enum class CoverMode { Exact, Greedy };

std::string_view to_string(CoverMode mode) noexcept;

/// Witness that A is a k-approximate subgroup: A symmetric, 1 in A, A^2 in E A
/// with |E| = k.
struct ApproxCertificate {
  Subset base;
  Subset cover;
  std::size_t k = 0;
  Rational doubling;
  Rational tripling;
  CoverMode mode = CoverMode::Greedy;
};

inline constexpr std::size_t kExactCoverCap = 4096;

/// Finds E with A^2 in E A. Candidates are the products x a^-1 (x in A^2,
/// a in A); each covers eA n A^2. Greedy takes the candidate covering most
/// uncovered points (ties to the least id) and then drops redundant picks.
/// Exact runs branch-and-bound seeded with the greedy cover.
/// Throws NotSymmetric, NoIdentity, ExactCapExceeded (|A^2| > exact_cap).
ApproxCertificate certify(const Subset& a, CoverMode mode, std::size_t exact_cap = kExactCoverCap);

/// Exact certificate when the search finishes within `node_budget` nodes,
/// greedy otherwise.
ApproxCertificate best_certificate(const Subset& a, std::uint64_t node_budget = 20000);

/// Re-checks A^2 in E A by direct product computation.
bool verify_certificate(const ApproxCertificate& cert);

/// Throws NotSymmetric / NoIdentity unless A is symmetric and contains 1.
void require_symmetric_with_identity(const Subset& a);

/// |A^j| / |A| for j = 2..max_power.
std::vector<Rational> growth_constants(const Subset& a, unsigned max_power);

/// Maximal family F of elements of A (scanned in id order) whose translates
/// aY are pairwise disjoint. Then A is inside F Y Y^-1 and |F| <= |AY|/|Y|.
Subset ruzsa_cover(const Subset& a, const Subset& y);

/// A subset of F Y Y^-1.
bool covered_by_translates(const Subset& a, const Subset& f, const Subset& y);

/// |g^(A^n)| <= k^(n-1) |g^A| with k the certificate constant.
bool conjugate_growth_check(const Subset& a, const ApproxCertificate& cert, ElementId g, unsigned n);

}  // namespace approxcommute
