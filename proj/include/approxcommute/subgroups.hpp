#pragma once

#include <span>
#include <vector>

#include "approxcommute/subset.hpp"

namespace approxcommute {

inline constexpr std::size_t kDefaultClassCap = 512;

/// <S>: the smallest subgroup containing S (contains the identity even for S empty).
Subset subgroup_closure(const Subset& s);
bool is_subgroup(const Subset& s);
/// Subgroup that is a union of conjugacy classes of its group.
bool is_normal_subgroup(const Subset& s);

/// C_X(g) = {x in X : xg = gx}.
Subset centralizer_in(const Subset& x, ElementId g);
/// C_X(g_1, ..., g_s): elements of X commuting with every g_i.
Subset centralizer_in(const Subset& x, std::span<const ElementId> gs);
/// g^X = {x^-1 g x : x in X}.
Subset conjugacy_class_under(ElementId g, const Subset& x);
/// |g^X| without materializing the class when X is the whole group.
std::size_t class_size_under(ElementId g, const Subset& x);
/// Z(G).
Subset center(const GroupPtr& g);

/// {[x,y] : x in X, y in Y} as a set (not closed).
Subset commutator_set(const Subset& x, const Subset& y);
/// [X,Y] = <[x,y] : x in X, y in Y>.
Subset commutator_subgroup(const Subset& x, const Subset& y);

/// All normal subgroups, sorted by order and then by member ids. Each one is
/// reached from a smaller normal subgroup by adjoining one conjugacy class and
/// closing, so only unions of classes are ever formed.
/// Throws ClassCountCapExceeded when the group has more than `class_cap` classes.
std::vector<Subset> normal_subgroups(const GroupPtr& g, std::size_t class_cap = kDefaultClassCap);

/// Natural map G -> G/N. Cosets are represented by their least element id and
/// numbered in increasing order of representative, so the identity coset is 0.
struct QuotientMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<ElementId> projection;
  std::vector<ElementId> representatives;

  ElementId project(ElementId x) const noexcept { return projection[x]; }
  /// XN/N as a subset of the target.
  Subset image(const Subset& x) const;
};

/// Throws NotSubgroup or NotNormal.
QuotientMap quotient(const Subset& normal);

}  // namespace approxcommute
