#include "approxcommute/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "approxcommute/error.hpp"
#include "approxcommute/rng.hpp"

namespace approxcommute {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto v : p) h = mix64(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

void check_associativity(const Group& g, std::size_t assoc_cap) {
  const auto n = g.order();
  auto fail = [](ElementId a, ElementId b, ElementId c) {
    throw Error(ErrorKind::NotAssociative, "(ab)c != a(bc) for a=" + std::to_string(a) +
                                               " b=" + std::to_string(b) + " c=" + std::to_string(c));
  };
  if (n <= assoc_cap) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        const auto ab = g.mul(a, b);
        for (ElementId c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) fail(a, b, c);
      }
    return;
  }
  SplitMix64 rng(0x5eed'a550c1a7ULL ^ n);
  const std::uint64_t samples = 10ULL * n * n;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = ElementId(rng.uniform(n));
    const auto b = ElementId(rng.uniform(n));
    const auto c = ElementId(rng.uniform(n));
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) fail(a, b, c);
  }
}

}  // namespace

std::string Group::label(ElementId x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

GroupPtr Group::from_trusted_table(std::size_t n, std::vector<ElementId> table,
                                   std::vector<std::string> labels) {
  std::shared_ptr<Group> g(new Group());
  g->n_ = n;
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  g->finish();
  return g;
}

void Group::finish() {
  inv_.assign(n_, 0);
  for (ElementId a = 0; a < n_; ++a) {
    const auto r = row(a);
    const auto it = std::find(r.begin(), r.end(), identity());
    inv_[a] = ElementId(it - r.begin());
  }

  constexpr std::uint32_t kUnset = UINT32_MAX;
  class_of_.assign(n_, kUnset);
  class_elems_.clear();
  class_elems_.reserve(n_);
  class_start_.assign(1, 0);
  for (ElementId x = 0; x < n_; ++x) {
    if (class_of_[x] != kUnset) continue;
    const auto c = std::uint32_t(class_start_.size() - 1);
    const auto begin = class_elems_.size();
    for (ElementId y = 0; y < n_; ++y) {
      const auto conjugate = conj(x, y);
      if (class_of_[conjugate] == kUnset) {
        class_of_[conjugate] = c;
        class_elems_.push_back(conjugate);
      }
    }
    std::sort(class_elems_.begin() + std::ptrdiff_t(begin), class_elems_.end());
    class_start_.push_back(class_elems_.size());
  }
}

GroupPtr build_from_table(const std::vector<std::vector<std::int64_t>>& table,
                          std::vector<std::string> labels, std::size_t assoc_cap) {
  const auto n = table.size();
  if (n == 0) throw Error(ErrorKind::BadTable, "empty table");
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::BadTable, "label count does not match table order");
  for (const auto& r : table) {
    if (r.size() != n) throw Error(ErrorKind::BadTable, "table is not square");
    for (auto v : r)
      if (v < 0 || std::uint64_t(v) >= n)
        throw Error(ErrorKind::BadTable, "entry " + std::to_string(v) + " out of range");
  }

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[std::size_t(table[i][j])]++) throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i));
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[std::size_t(table[j][i])]++) throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(i));
    }
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = std::size_t(table[c][x]) == x && std::size_t(table[x][c]) == x;
    if (ok) e = c;
  }
  if (e == n) throw Error(ErrorKind::NoIdentity, "no two-sided identity");

  // swap e <-> 0
  std::vector<ElementId> relabel(n);
  std::iota(relabel.begin(), relabel.end(), ElementId{0});
  std::swap(relabel[0], relabel[e]);

  std::vector<ElementId> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[std::size_t(relabel[a]) * n + relabel[b]] = relabel[std::size_t(table[a][b])];
  if (!labels.empty()) std::swap(labels[0], labels[e]);

  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (b < n && flat[a * n + b] != 0) ++b;
    if (b == n || flat[b * n + a] != 0)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  auto g = Group::from_trusted_table(n, std::move(flat), std::move(labels));
  check_associativity(*g, assoc_cap);
  return g;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupPtr build_from_permutations(const std::vector<Permutation>& generators, std::size_t degree,
                                 std::size_t order_cap) {
  for (const auto& s : generators) {
    if (s.size() != degree) throw Error(ErrorKind::BadPermutation, "generator has wrong degree");
    std::vector<char> hit(degree);
    for (auto v : s) {
      if (v >= degree || hit[v]) throw Error(ErrorKind::BadPermutation, "generator is not a bijection");
      hit[v] = 1;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::uint32_t{0});
  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, ElementId, PermutationHash> index{{id, 0}};
  // parent[b], gen_of[b]: b = parent * generators[gen_of]
  std::vector<ElementId> parent{0};
  std::vector<std::size_t> gen_of{0};
  const auto k = generators.size();
  std::vector<ElementId> right;  // right[a*k + s] = a * generators[s]

  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation prod(degree);
      for (std::size_t i = 0; i < degree; ++i) prod[i] = generators[s][elems[head][i]];
      auto [it, fresh] = index.try_emplace(prod, ElementId(elems.size()));
      if (fresh) {
        if (elems.size() >= order_cap)
          throw Error(ErrorKind::OrderCapExceeded, "closure exceeds " + std::to_string(order_cap) + " elements");
        elems.push_back(std::move(prod));
        parent.push_back(ElementId(head));
        gen_of.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const auto n = elems.size();
  std::vector<ElementId> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = ElementId(a);
    for (std::size_t b = 1; b < n; ++b) flat[a * n + b] = right[flat[a * n + parent[b]] * k + gen_of[b]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return Group::from_trusted_table(n, std::move(flat), std::move(labels));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t order_cap) {
  const auto gn = g->order(), hn = h->order();
  const auto n = gn * hn;
  if (n > order_cap)
    throw Error(ErrorKind::OrderCapExceeded, "direct product of order " + std::to_string(n));
  std::vector<ElementId> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ga = ElementId(a / hn), ha = ElementId(a % hn);
      const auto gb = ElementId(b / hn), hb = ElementId(b % hn);
      flat[a * n + b] = ElementId(g->mul(ga, gb) * hn + h->mul(ha, hb));
    }
  std::vector<std::string> labels;
  if (g->has_labels() || h->has_labels()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
      labels.push_back("(" + g->label(ElementId(a / hn)) + ", " + h->label(ElementId(a % hn)) + ")");
  }
  return Group::from_trusted_table(n, std::move(flat), std::move(labels));
}

}  // namespace approxcommute
