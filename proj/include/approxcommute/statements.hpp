#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "approxcommute/rational.hpp"
#include "approxcommute/subset.hpp"

namespace approxcommute {

/// Named inputs for one statement check. Which names are read depends on the
/// statement; missing or invalid inputs raise HypothesisViolated.
struct Instance {
  GroupPtr group;
  std::map<std::string, Subset> sets;
  std::optional<ElementId> element;
  unsigned exponent = 1;
  std::string description;

  const Subset& set(const std::string& name) const;
};

/// lhs <= rhs is the registered inequality; slack = rhs - lhs.
struct CheckResult {
  std::string statement_id;
  std::string instance;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational slack;
};

struct StatementInfo {
  std::string id;
  std::string inequality;
  std::vector<std::string> inputs;
};

/// Registry in canonical order.
const std::vector<StatementInfo>& statements();
const StatementInfo& statement(std::string_view id);

/// Evaluates both sides exactly. K-dependent statements use the best
/// certificate constant available (exact cover when the search finishes).
/// Throws UnknownStatement or HypothesisViolated.
CheckResult check(std::string_view statement_id, const Instance& instance);

}  // namespace approxcommute
