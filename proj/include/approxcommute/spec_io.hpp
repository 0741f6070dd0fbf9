#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "approxcommute/approx.hpp"
#include "approxcommute/families.hpp"
#include "approxcommute/statements.hpp"
#include "approxcommute/witness.hpp"

namespace approxcommute {

using json = nlohmann::json;

inline constexpr std::size_t kDefaultOrderCap = 2000;

/// 2000 unless APPROXCOMMUTE_ORDER_CAP holds a positive integer.
std::size_t default_order_cap();

/// A group built from a spec, with any named subsets the spec provides.
struct LoadedGroup {
  GroupPtr group;
  std::string name;
  json spec;
  std::map<std::string, Subset> roles;  // always has "G"; families add more
  std::optional<ExampleInstance> example;
};

/// Accepts {"kind":"table",...}, {"kind":"perm",...} or {"kind":"family",...}.
/// Families: example1 (n,k,u), cyclic (n), dihedral (n, order 2n),
/// quaternion (order), symmetric (degree), alternating (degree).
/// Throws SpecParseError or OrderCapExceeded.
LoadedGroup load_group(const json& spec, std::size_t order_cap = default_order_cap());

/// Inline JSON, a path to a JSON file, or a shorthand: C<n>, D<n> (order 2n),
/// Q<order>, S<d>, A<d>, example:n,k,u.
LoadedGroup load_group_argument(const std::string& arg, std::size_t order_cap = default_order_cap());

/// {"elements":[...]}, {"all":true}, {"subgroup_generated_by":[...]} or {"role":"A"}.
Subset load_subset(const json& spec, const LoadedGroup& g);

/// Inline JSON, "all", a role name, or comma-separated ids.
Subset load_subset_argument(const std::string& arg, const LoadedGroup& g);

json to_json(const Rational& r);
json to_json(const Subset& s);
json to_json(const ApproxCertificate& c);
json to_json(const BoundCheck& c);
json to_json(const CoreExtraction& c);
json to_json(const WitnessReport& r);
json to_json(const CheckResult& r);
json to_json(const PredictedQuantities& q);
json to_json(const ConjugateCover& c);

/// {"kind":"table","table":[[...]]} (plus labels when present).
json group_to_json(const Group& g);

/// Reads a whole file; throws SpecParseError when it cannot be opened or parsed.
json read_json_file(const std::string& path);

}  // namespace approxcommute
