#pragma once

#include <doctest.h>

#include <vector>

#include "approxcommute/error.hpp"
#include "approxcommute/families.hpp"
#include "approxcommute/group.hpp"
#include "approxcommute/rng.hpp"
#include "approxcommute/subset.hpp"

namespace ac = approxcommute;

#define CHECK_ERROR_KIND(expr, k)                 \
  do {                                            \
    bool thrown_ = false;                         \
    try {                                         \
      (void)(expr);                               \
    } catch (const ac::Error& e_) {               \
      thrown_ = true;                             \
      CHECK(e_.kind() == ac::ErrorKind::k);       \
    }                                             \
    CHECK_MESSAGE(thrown_, "expected " #k);       \
  } while (0)

namespace support {

inline ac::GroupPtr s3() { return ac::symmetric_group(3); }

inline ac::GroupPtr s3_c2() { return ac::direct_product(s3(), ac::cyclic_group(2)); }

/// Small groups of several shapes, all of order <= 64.
inline std::vector<ac::GroupPtr> small_groups() {
  return {ac::cyclic_group(1),      ac::cyclic_group(6),     ac::cyclic_group(12),
          ac::dihedral_group(3),    ac::dihedral_group(4),   ac::dihedral_group(6),
          ac::quaternion_group(8),  ac::quaternion_group(16), ac::symmetric_group(4),
          ac::alternating_group(4), s3_c2(),                  ac::build_example({3, 1, 1}).group,
          ac::direct_product(ac::cyclic_group(2), ac::cyclic_group(4))};
}

/// Random subset (not necessarily symmetric), nonempty.
inline ac::Subset random_subset(const ac::GroupPtr& g, ac::SplitMix64& rng, std::uint64_t num = 1,
                                std::uint64_t den = 3) {
  ac::SubsetBuilder b(g);
  for (ac::ElementId x = 0; x < g->order(); ++x)
    if (rng.bernoulli(num, den)) b.insert(x);
  if (b.size() == 0) b.insert(ac::ElementId(rng.uniform(g->order())));
  return b.build();
}

inline ac::Subset random_symmetric(const ac::GroupPtr& g, ac::SplitMix64& rng, std::uint64_t num = 1,
                                   std::uint64_t den = 3) {
  return ac::with_identity(ac::symmetrize(random_subset(g, rng, num, den)));
}

}  // namespace support
