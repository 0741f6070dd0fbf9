#include "approxcommute/probability.hpp"

#include "approxcommute/error.hpp"

namespace approxcommute {

namespace {

void require_nonempty(const Subset& x, const Subset& y) {
  require_same_group(x, y);
  if (x.empty() || y.empty()) throw Error(ErrorKind::EmptySet, "commuting probability of an empty set");
}

std::size_t centralizer_count(const Subset& x, ElementId y) {
  const auto& g = x.group();
  if (x.is_full()) return g.centralizer_order(y);
  std::size_t c = 0;
  for (auto a : x) c += g.commute(a, y);
  return c;
}

}  // namespace

std::uint64_t commuting_pairs(const Subset& x, const Subset& y) {
  require_same_group(x, y);
  // Sum over the smaller side; the count is symmetric.
  const Subset& outer = y.size() <= x.size() ? y : x;
  const Subset& inner = y.size() <= x.size() ? x : y;
  std::uint64_t pairs = 0;
  for (auto b : outer) pairs += centralizer_count(inner, b);
  return pairs;
}

Rational commuting_probability(const Subset& x, const Subset& y) {
  require_nonempty(x, y);
  const auto pairs = commuting_pairs(x, y);
  return Rational(BigInt(pairs), BigInt(x.size()) * BigInt(y.size()));
}

std::vector<std::pair<ElementId, Rational>> centralizer_profile(const Subset& x, const Subset& y) {
  require_nonempty(x, y);
  std::vector<std::pair<ElementId, Rational>> out;
  out.reserve(y.size());
  for (auto b : y) out.emplace_back(b, ratio(centralizer_count(x, b), x.size()));
  return out;
}

}  // namespace approxcommute
