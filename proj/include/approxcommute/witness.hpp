#pragma once

#include <optional>
#include <string>
#include <vector>

#include "approxcommute/approx.hpp"
#include "approxcommute/rational.hpp"
#include "approxcommute/subset.hpp"

namespace approxcommute {

/// One exact inequality lhs <= rhs checked while building a witness.
struct BoundCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

BoundCheck bound_check(std::string name, Rational lhs, Rational rhs);

/// Large set of elements of H with few U-conjugates, and its square.
struct CoreExtraction {
  Subset h;
  Subset u;
  Rational epsilon;
  std::size_t k_u = 1;
  Rational pr_h_u;
  Subset x;            // {x in H : |x^U| <= 2 k_U / epsilon}
  Subset b;            // X^2
  Subset b_generated;  // <B>
  ApproxCertificate b_cert;
  std::size_t class_bound_m = 0;  // max |y^U| over y in <B>

  // Measured against the a priori bounds with alpha = epsilon / 2.
  std::size_t max_class_on_b = 0;      // <= (k_U / alpha)^2
  std::size_t max_class_on_cover = 0;  // <= (k_U / alpha)^6
  Rational chain_bound_b;
  Rational chain_bound_cover;

  std::vector<BoundCheck> checks;
};

/// X = {x in H : |x^U| <= 2 k_U / epsilon}, B = X^2 with a certificate, and
/// m = max |y^U| over <B>. H and U must be symmetric and contain 1, and
/// pr(H,U) >= epsilon. Throws ProbabilityBelowEpsilon, NotSymmetric, NoIdentity.
CoreExtraction extract_core(const Subset& h, const Subset& u, const Rational& epsilon, std::size_t k_u);

struct WitnessReport {
  std::string theorem;  // "1.1" or "1.2"
  Subset a;
  ApproxCertificate a_cert;
  Rational epsilon;
  Rational pr_value;  // pr(A,G) for 1.1, pr(A,A) for 1.2
  std::vector<CoreExtraction> extractions;
  Rational gamma;

  // normal-core witness
  std::optional<Subset> t;
  std::size_t index_g_t = 0;
  std::size_t commutator_size = 0;

  // almost-abelian cover witness
  std::optional<Subset> y;
  std::optional<Subset> c;
  std::size_t c_prime_size = 0;
  Rational k_tilde;
  Rational eta;
  Rational gamma_bound;  // epsilon * eta / 4
  std::size_t coset_count = 0;
  std::optional<Subset> cover_f;

  std::vector<BoundCheck> checks;

  /// Every check of the report and its extractions holds.
  bool all_hold() const;
};

/// Large commuting core of A relative to the whole group: B = X^2 close to A
/// and a normal subgroup T minimising [G:T] * |[T,<B>]| (ties: smaller index,
/// then enumeration order). Epsilon defaults to pr(A,G).
WitnessReport witness_normal_core(const Subset& a, std::optional<Rational> epsilon = std::nullopt,
                                  std::optional<ApproxCertificate> cert = std::nullopt);

/// Subgroup C = <Y> with small derived subgroup meeting A^2 in a large set,
/// and a covering of A by left cosets of C. Epsilon defaults to pr(A,A).
WitnessReport witness_almost_abelian_cover(const Subset& a, std::optional<Rational> epsilon = std::nullopt,
                                           std::optional<ApproxCertificate> cert = std::nullopt);

/// Common centralizer D = C_{A^(2^s)}(g_1..g_s) and translates d_i with
/// A inside the union of D d_i, built one generator at a time.
struct ConjugateCover {
  Subset center_set;
  std::vector<ElementId> translates;
  /// prod_j k^(2^(j-1) - 1) |g_j^A|, the a priori bound on the translate count.
  BigInt translate_bound;
  bool verified = false;
};

inline constexpr std::size_t kMaxConjugateCoverElements = 5;

/// Throws PowerCapExceeded for more than 5 elements.
ConjugateCover bounded_conjugate_cover(const Subset& a, const ApproxCertificate& cert,
                                       const std::vector<ElementId>& gs);

/// Number of left cosets xC meeting A.
std::size_t left_coset_count(const Subset& a, const Subset& c);

}  // namespace approxcommute
