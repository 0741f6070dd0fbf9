#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "approxcommute/rng.hpp"
#include "approxcommute/spec_io.hpp"
#include "approxcommute/statements.hpp"

namespace approxcommute {

struct SuiteConfig {
  std::vector<json> corpus;
  std::vector<std::string> statements;  // empty: every registered statement
  std::size_t random_instances_per_statement = 500;
  std::uint64_t seed = 1;
  std::size_t order_cap = kDefaultOrderCap;
  std::string output_path;
  bool witnesses = true;
  std::string source_path;  // config file, quoted in reproduction commands
};

/// Cyclic, dihedral, symmetric and alternating groups up to order 200, Q8,
/// Q16, and the shift-group examples (3,1,1), (4,2,1), (5,2,2).
std::vector<json> default_corpus();

/// Missing fields take their defaults (including the default corpus).
/// Throws SpecParseError.
SuiteConfig parse_suite_config(const json& j, std::string source_path = {});

/// Symmetric subset containing 1: each pair {x, x^-1} is kept independently
/// with probability `density` (scanned in id order). Throws BadParams unless
/// 0 < density <= 1.
Subset random_symmetric_subset(const GroupPtr& g, const Rational& density, SplitMix64& rng);

struct Report {
  json payload;  // everything except timing
  json timing;
  std::size_t failures = 0;

  json to_json(bool include_timing = true) const;
};

/// Runs every selected statement over corpus.size() structured instances plus
/// random_instances_per_statement random ones, and the witness pipelines on
/// every corpus group. Output is independent of `threads`.
Report run_suite(const SuiteConfig& config, unsigned threads = 1);

/// Re-runs a single (statement, instance) pair of the suite.
CheckResult run_single(const SuiteConfig& config, const std::string& statement_id, std::size_t instance_index);

}  // namespace approxcommute
