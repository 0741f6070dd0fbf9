#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace approxcommute {

/// Index of an element inside one particular Group; 0 is always the identity.
using ElementId = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

inline constexpr std::size_t kDefaultPermutationCap = 20000;
inline constexpr std::size_t kDefaultAssociativityCap = 512;

/// Finite group given by its multiplication table. Immutable once built;
/// conjugacy classes are computed at construction.
class Group {
 public:
  std::size_t order() const noexcept { return n_; }
  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const noexcept { return table_[std::size_t(a) * n_ + b]; }
  ElementId inv(ElementId a) const noexcept { return inv_[a]; }
  /// g^x = x^-1 g x
  ElementId conj(ElementId g, ElementId x) const noexcept { return mul(mul(inv_[x], g), x); }
  /// [x,y] = x^-1 y^-1 x y
  ElementId commutator(ElementId x, ElementId y) const noexcept {
    return mul(mul(inv_[x], inv_[y]), mul(x, y));
  }
  bool commute(ElementId a, ElementId b) const noexcept { return mul(a, b) == mul(b, a); }

  /// Row a of the table: b -> ab.
  std::span<const ElementId> row(ElementId a) const noexcept {
    return {table_.data() + std::size_t(a) * n_, n_};
  }

  std::size_t class_count() const noexcept { return class_start_.size() - 1; }
  std::size_t class_of(ElementId x) const noexcept { return class_of_[x]; }
  std::span<const ElementId> class_members(std::size_t c) const noexcept {
    return {class_elems_.data() + class_start_[c], class_start_[c + 1] - class_start_[c]};
  }
  std::size_t class_size_of(ElementId x) const noexcept {
    const auto c = class_of_[x];
    return class_start_[c + 1] - class_start_[c];
  }
  /// |C_G(x)| by orbit-stabilizer.
  std::size_t centralizer_order(ElementId x) const noexcept { return n_ / class_size_of(x); }
  bool is_abelian() const noexcept { return class_count() == n_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(ElementId x) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Builds from a table that is already known to be a group with identity 0.
  /// Only for internal constructions (quotients, products, families).
  static GroupPtr from_trusted_table(std::size_t n, std::vector<ElementId> table,
                                     std::vector<std::string> labels = {});

 private:
  Group() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inv_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ElementId> class_elems_;
  std::vector<std::size_t> class_start_;
};

/// Validates a Cayley table and relabels so the identity is element 0.
/// Associativity is checked exhaustively up to `assoc_cap` elements and on
/// 10 n^2 seeded random triples above it.
GroupPtr build_from_table(const std::vector<std::vector<std::int64_t>>& table,
                          std::vector<std::string> labels = {},
                          std::size_t assoc_cap = kDefaultAssociativityCap);

/// A permutation of {0..d-1} as an image array: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// Closure of the generators under composition, breadth-first from the
/// identity with generators in the given order. Elements are labelled in
/// cycle notation. Products act left to right: (pq)(i) = q(p(i)).
GroupPtr build_from_permutations(const std::vector<Permutation>& generators, std::size_t degree,
                                 std::size_t order_cap = kDefaultPermutationCap);

/// Componentwise product; element (g,h) has id g*|H| + h.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        std::size_t order_cap = kDefaultPermutationCap);

std::string cycle_notation(const Permutation& p);

}  // namespace approxcommute
