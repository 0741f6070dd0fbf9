#include "approxcommute/approx.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "approxcommute/error.hpp"
#include "approxcommute/subgroups.hpp"

namespace approxcommute {

std::string_view to_string(CoverMode mode) noexcept { return mode == CoverMode::Exact ? "exact" : "greedy"; }

void require_symmetric_with_identity(const Subset& a) {
  if (!a.contains_identity()) throw Error(ErrorKind::NoIdentity, "set does not contain the identity");
  if (!is_symmetric(a)) throw Error(ErrorKind::NotSymmetric, "set is not closed under inverses");
}

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += std::size_t(std::popcount(x));
  return c;
}

std::size_t popcount_and(const Words& a, const Words& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::size_t(std::popcount(a[i] & b[i]));
  return c;
}

/// Set cover instance: points are A^2, candidates e in A^3 cover eA n A^2.
class CoverProblem {
 public:
  explicit CoverProblem(const Subset& a) : a_(a), a2_(product(a, a)) {
    const auto& g = a.group();
    points_ = a2_.elements();
    std::vector<std::uint32_t> index(g.order(), UINT32_MAX);
    for (std::uint32_t i = 0; i < points_.size(); ++i) index[points_[i]] = i;
    words_ = (points_.size() + 63) / 64;

    const auto as = a.elements();
    for (auto e : product(a2_, a)) {
      Words cov(words_, 0);
      for (auto x : as) {
        const auto p = index[g.mul(e, x)];
        if (p != UINT32_MAX) cov[p >> 6] |= std::uint64_t{1} << (p & 63);
      }
      if (popcount(cov) == 0) continue;
      candidates_.push_back(e);
      coverage_.push_back(std::move(cov));
    }
  }

  const Subset& square() const { return a2_; }
  std::size_t point_count() const { return points_.size(); }

  /// Indices into candidates_.
  std::vector<std::size_t> greedy() const {
    Words uncovered = full();
    std::vector<std::size_t> picked;
    while (popcount(uncovered) > 0) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const auto gain = popcount_and(coverage_[c], uncovered);
        if (gain > best_gain) best = c, best_gain = gain;
      }
      picked.push_back(best);
      for (std::size_t i = 0; i < words_; ++i) uncovered[i] &= ~coverage_[best][i];
    }
    // Drop picks that the remaining ones already make redundant, latest first.
    for (std::size_t i = picked.size(); i-- > 0;) {
      Words rest(words_, 0);
      for (std::size_t j = 0; j < picked.size(); ++j)
        if (j != i)
          for (std::size_t w = 0; w < words_; ++w) rest[w] |= coverage_[picked[j]][w];
      if (popcount(rest) == points_.size()) picked.erase(picked.begin() + std::ptrdiff_t(i));
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  /// Minimum cover; nullopt when the node budget runs out.
  std::optional<std::vector<std::size_t>> exact(std::uint64_t node_budget) {
    best_ = greedy();
    budget_ = node_budget;
    nodes_ = 0;
    prepare_search();
    std::vector<std::size_t> chosen;
    if (!search(full(), chosen)) return std::nullopt;
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  Subset cover_set(const std::vector<std::size_t>& picked) const {
    SubsetBuilder b(a_.group_ptr());
    for (auto c : picked) b.insert(candidates_[c]);
    return b.build();
  }

 private:
  Words full() const {
    Words w(words_, ~std::uint64_t{0});
    if (points_.size() % 64) w.back() = (std::uint64_t{1} << (points_.size() % 64)) - 1;
    if (points_.empty()) w.clear();
    return w;
  }

  // Drops dominated candidates (coverage contained in another's; ties keep the
  // lower id) and builds point -> candidate lists.
  void prepare_search() {
    const auto n = candidates_.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return popcount(coverage_[x]) > popcount(coverage_[y]);
    });
    live_.clear();
    for (auto c : order) {
      bool dominated = false;
      for (auto d : live_) {
        bool inside = true;
        for (std::size_t w = 0; w < words_ && inside; ++w) inside = (coverage_[c][w] & ~coverage_[d][w]) == 0;
        if (inside) {
          dominated = true;
          break;
        }
      }
      if (!dominated) live_.push_back(c);
    }
    by_point_.assign(points_.size(), {});
    for (auto c : live_)
      for (std::size_t p = 0; p < points_.size(); ++p)
        if ((coverage_[c][p >> 6] >> (p & 63)) & 1U) by_point_[p].push_back(c);
  }

  // Returns false when the node budget is exhausted.
  bool search(const Words& uncovered, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_) return false;
    const auto remaining = popcount(uncovered);
    if (remaining == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return true;
    }
    std::size_t max_gain = 0;
    for (auto c : live_) max_gain = std::max(max_gain, popcount_and(coverage_[c], uncovered));
    const auto lower = (remaining + max_gain - 1) / max_gain;
    if (chosen.size() + lower >= best_.size()) return true;

    // Branch on the uncovered point with the fewest covering candidates.
    std::size_t pivot = SIZE_MAX;
    for (std::size_t p = 0; p < points_.size(); ++p) {
      if (!((uncovered[p >> 6] >> (p & 63)) & 1U)) continue;
      if (pivot == SIZE_MAX || by_point_[p].size() < by_point_[pivot].size()) pivot = p;
    }
    auto options = by_point_[pivot];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t x, std::size_t y) {
      return popcount_and(coverage_[x], uncovered) > popcount_and(coverage_[y], uncovered);
    });
    for (auto c : options) {
      Words next = uncovered;
      for (std::size_t w = 0; w < words_; ++w) next[w] &= ~coverage_[c][w];
      chosen.push_back(c);
      const bool ok = search(next, chosen);
      chosen.pop_back();
      if (!ok) return false;
      if (chosen.size() + 1 >= best_.size()) break;
    }
    return true;
  }

  Subset a_;
  Subset a2_;
  std::vector<ElementId> points_;
  std::size_t words_ = 0;
  std::vector<ElementId> candidates_;
  std::vector<Words> coverage_;

  std::vector<std::size_t> live_;
  std::vector<std::vector<std::size_t>> by_point_;
  std::vector<std::size_t> best_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
};

ApproxCertificate make_certificate(const Subset& a, const CoverProblem& problem,
                                   const std::vector<std::size_t>& picked, CoverMode mode) {
  auto cover = problem.cover_set(picked);
  const auto k = cover.size();
  const auto cube = product(problem.square(), a);
  return ApproxCertificate{a,
                           std::move(cover),
                           k,
                           ratio(problem.square().size(), a.size()),
                           ratio(cube.size(), a.size()),
                           mode};
}

}  // namespace

ApproxCertificate certify(const Subset& a, CoverMode mode, std::size_t exact_cap) {
  require_symmetric_with_identity(a);
  CoverProblem problem(a);
  if (mode == CoverMode::Greedy) return make_certificate(a, problem, problem.greedy(), mode);
  if (problem.point_count() > exact_cap)
    throw Error(ErrorKind::ExactCapExceeded, std::to_string(problem.point_count()) + " cover points exceed cap " +
                                                 std::to_string(exact_cap));
  auto picked = problem.exact(UINT64_MAX);
  return make_certificate(a, problem, *picked, mode);
}

ApproxCertificate best_certificate(const Subset& a, std::uint64_t node_budget) {
  require_symmetric_with_identity(a);
  CoverProblem problem(a);
  if (problem.point_count() <= kExactCoverCap) {
    if (auto picked = problem.exact(node_budget)) return make_certificate(a, problem, *picked, CoverMode::Exact);
  }
  return make_certificate(a, problem, problem.greedy(), CoverMode::Greedy);
}

bool verify_certificate(const ApproxCertificate& cert) {
  if (cert.cover.size() != cert.k) return false;
  if (!cert.base.contains_identity() || !is_symmetric(cert.base)) return false;
  return product(cert.base, cert.base).is_subset_of(product(cert.cover, cert.base));
}

std::vector<Rational> growth_constants(const Subset& a, unsigned max_power) {
  require_symmetric_with_identity(a);
  std::vector<Rational> out;
  Subset acc = a;
  for (unsigned j = 2; j <= max_power; ++j) {
    acc = acc.is_full() ? acc : product(acc, a);
    out.push_back(ratio(acc.size(), a.size()));
  }
  return out;
}

Subset ruzsa_cover(const Subset& a, const Subset& y) {
  require_same_group(a, y);
  if (y.empty()) throw Error(ErrorKind::EmptySet, "covering set is empty");
  SubsetBuilder f(a.group_ptr());
  SubsetBuilder used(a.group_ptr());
  const auto& g = a.group();
  const auto ys = y.elements();
  for (auto x : a) {
    const auto r = g.row(x);
    if (std::any_of(ys.begin(), ys.end(), [&](ElementId b) { return used.contains(r[b]); })) continue;
    f.insert(x);
    for (auto b : ys) used.insert(r[b]);
  }
  return f.build();
}

bool covered_by_translates(const Subset& a, const Subset& f, const Subset& y) {
  return a.is_subset_of(product(product(f, y), inverse(y)));
}

bool conjugate_growth_check(const Subset& a, const ApproxCertificate& cert, ElementId g, unsigned n) {
  const auto lhs = BigInt(class_size_under(g, power(a, n)));
  BigInt bound = class_size_under(g, a);
  for (unsigned i = 1; i < n; ++i) bound *= cert.k;
  return lhs <= bound;
}

}  // namespace approxcommute
