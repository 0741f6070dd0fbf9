#pragma once

#include <utility>
#include <vector>

#include "approxcommute/rational.hpp"
#include "approxcommute/subset.hpp"

namespace approxcommute {

/// pr(X,Y): the fraction of pairs (x,y) in X x Y with xy = yx, computed as
/// (1/|Y|) sum_{y in Y} |C_X(y)| / |X|. Throws EmptySet or GroupMismatch.
Rational commuting_probability(const Subset& x, const Subset& y);

/// Number of commuting pairs in X x Y.
std::uint64_t commuting_pairs(const Subset& x, const Subset& y);

/// For each y in Y (increasing id) the ratio |C_X(y)| / |X|.
std::vector<std::pair<ElementId, Rational>> centralizer_profile(const Subset& x, const Subset& y);

}  // namespace approxcommute
