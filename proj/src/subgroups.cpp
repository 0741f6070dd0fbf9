#include "approxcommute/subgroups.hpp"

#include <algorithm>
#include <set>

#include "approxcommute/error.hpp"

namespace approxcommute {

Subset subgroup_closure(const Subset& s) {
  const auto& g = s.group();
  SubsetBuilder h(s.group_ptr());
  h.insert(Group::identity());
  std::vector<ElementId> elems{Group::identity()};
  std::vector<ElementId> gens;
  for (auto x : s) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    // Re-close under right multiplication by all generators so far. Elements
    // reached earlier only need the new generator; fresh ones need all.
    const std::size_t old = elems.size();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto from = i < old ? gens.size() - 1 : 0;
      for (std::size_t k = from; k < gens.size(); ++k) {
        const auto y = g.mul(elems[i], gens[k]);
        if (h.insert(y)) elems.push_back(y);
      }
    }
  }
  return h.build();
}

bool is_subgroup(const Subset& s) {
  return s.contains_identity() && subgroup_closure(s).size() == s.size();
}

bool is_normal_subgroup(const Subset& s) {
  if (!is_subgroup(s)) return false;
  const auto& g = s.group();
  for (auto x : s)
    for (auto y : g.class_members(g.class_of(x)))
      if (!s.contains(y)) return false;
  return true;
}

Subset centralizer_in(const Subset& x, ElementId g) {
  const auto& grp = x.group();
  SubsetBuilder out(x.group_ptr());
  for (auto a : x)
    if (grp.commute(a, g)) out.insert(a);
  return out.build();
}

Subset centralizer_in(const Subset& x, std::span<const ElementId> gs) {
  const auto& grp = x.group();
  SubsetBuilder out(x.group_ptr());
  for (auto a : x)
    if (std::all_of(gs.begin(), gs.end(), [&](ElementId g) { return grp.commute(a, g); })) out.insert(a);
  return out.build();
}

Subset conjugacy_class_under(ElementId g, const Subset& x) {
  const auto& grp = x.group();
  SubsetBuilder out(x.group_ptr());
  if (x.is_full()) {
    for (auto y : grp.class_members(grp.class_of(g))) out.insert(y);
  } else {
    for (auto a : x) out.insert(grp.conj(g, a));
  }
  return out.build();
}

std::size_t class_size_under(ElementId g, const Subset& x) {
  if (x.is_full()) return x.group().class_size_of(g);
  return conjugacy_class_under(g, x).size();
}

Subset center(const GroupPtr& g) {
  SubsetBuilder out(g);
  for (ElementId x = 0; x < g->order(); ++x)
    if (g->class_size_of(x) == 1) out.insert(x);
  return out.build();
}

Subset commutator_set(const Subset& x, const Subset& y) {
  require_same_group(x, y);
  const auto& g = x.group();
  SubsetBuilder out(x.group_ptr());
  const auto ys = y.elements();
  for (auto a : x)
    for (auto b : ys) out.insert(g.commutator(a, b));
  return out.build();
}

Subset commutator_subgroup(const Subset& x, const Subset& y) {
  return subgroup_closure(commutator_set(x, y));
}

std::vector<Subset> normal_subgroups(const GroupPtr& g, std::size_t class_cap) {
  const auto k = g->class_count();
  if (k > class_cap)
    throw Error(ErrorKind::ClassCountCapExceeded,
                std::to_string(k) + " classes exceed cap " + std::to_string(class_cap));

  std::vector<Subset> found{Subset::identity_only(g)};
  std::set<std::vector<std::uint64_t>> seen;
  seen.emplace(found[0].words().begin(), found[0].words().end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      const auto members = g->class_members(c);
      if (found[i].contains(members.front())) continue;
      SubsetBuilder gens(found[i]);
      for (auto y : members) gens.insert(y);
      auto joined = subgroup_closure(gens.build());
      if (seen.emplace(joined.words().begin(), joined.words().end()).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return found;
}

Subset QuotientMap::image(const Subset& x) const {
  if (x.group_ptr() != source) throw Error(ErrorKind::GroupMismatch, "subset is not in the quotient's source");
  SubsetBuilder out(target);
  for (auto a : x) out.insert(projection[a]);
  return out.build();
}

QuotientMap quotient(const Subset& normal) {
  if (!is_subgroup(normal)) throw Error(ErrorKind::NotSubgroup, "kernel is not a subgroup");
  if (!is_normal_subgroup(normal)) throw Error(ErrorKind::NotNormal, "kernel is not normal");
  const auto& g = normal.group();
  const auto n = g.order();
  constexpr ElementId kUnset = UINT32_MAX;

  QuotientMap q;
  q.source = normal.group_ptr();
  q.projection.assign(n, kUnset);
  const auto kernel = normal.elements();
  for (ElementId x = 0; x < n; ++x) {
    if (q.projection[x] != kUnset) continue;
    const auto c = ElementId(q.representatives.size());
    q.representatives.push_back(x);
    for (auto k : kernel) q.projection[g.mul(x, k)] = c;
  }

  const auto m = q.representatives.size();
  std::vector<ElementId> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = q.projection[g.mul(q.representatives[i], q.representatives[j])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (auto r : q.representatives) labels.push_back(g.label(r) + "N");
  }
  q.target = Group::from_trusted_table(m, std::move(table), std::move(labels));
  return q;
}

}  // namespace approxcommute
