#include "approxcommute/spec_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "approxcommute/error.hpp"
#include "approxcommute/subgroups.hpp"

namespace approxcommute {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("APPROXCOMMUTE_ORDER_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return std::size_t(v);
  }
  return kDefaultOrderCap;
}

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::SpecParseError, why); }

std::size_t get_size(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number_integer() || spec[key].get<std::int64_t>() < 0)
    bad(std::string("missing or invalid integer field '") + key + "'");
  return spec[key].get<std::size_t>();
}

std::vector<ElementId> get_ids(const json& arr, const Group& g) {
  if (!arr.is_array()) bad("expected an array of element ids");
  std::vector<ElementId> ids;
  for (const auto& v : arr) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::uint64_t>() >= g.order())
      bad("element id out of range: " + v.dump());
    ids.push_back(v.get<ElementId>());
  }
  return ids;
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw Error(ErrorKind::OrderCapExceeded, "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

LoadedGroup finish(GroupPtr g, std::string name, const json& spec) {
  LoadedGroup out{g, spec.contains("name") && spec["name"].is_string() ? spec["name"].get<std::string>() : std::move(name),
                  spec, {}, std::nullopt};
  out.roles.emplace("G", Subset::all(g));
  // emitted tables carry their named subsets along
  if (spec.contains("roles")) {
    if (!spec["roles"].is_object()) bad("'roles' must be an object");
    for (const auto& [role, ids] : spec["roles"].items())
      out.roles.insert_or_assign(role, Subset::of(g, get_ids(ids, *g)));
  }
  return out;
}

}  // namespace

LoadedGroup load_group(const json& spec, std::size_t order_cap) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) bad("group spec needs a 'kind'");
  const auto kind = spec["kind"].get<std::string>();
  try {
    if (kind == "table") {
      if (!spec.contains("table") || !spec["table"].is_array()) bad("table spec needs 'table'");
      const auto table = spec["table"].get<std::vector<std::vector<std::int64_t>>>();
      check_cap(table.size(), order_cap);
      std::vector<std::string> labels;
      if (spec.contains("labels")) labels = spec["labels"].get<std::vector<std::string>>();
      return finish(build_from_table(table, std::move(labels)), "table" + std::to_string(table.size()), spec);
    }
    if (kind == "perm") {
      const auto degree = get_size(spec, "degree");
      std::vector<Permutation> gens;
      if (spec.contains("generators")) gens = spec["generators"].get<std::vector<Permutation>>();
      return finish(build_from_permutations(gens, degree, order_cap), "perm" + std::to_string(degree), spec);
    }
    if (kind == "family") {
      if (!spec.contains("name") || !spec["name"].is_string()) bad("family spec needs 'name'");
      const auto family = spec["name"].get<std::string>();
      if (family == "example1") {
        const ExampleParams p{get_size(spec, "n"), get_size(spec, "k"), get_size(spec, "u")};
        auto inst = build_example(p, order_cap);
        LoadedGroup out{inst.group,
                        "example(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.u_order) + ")",
                        spec, {}, std::nullopt};
        out.roles.emplace("G", Subset::all(inst.group));
        out.roles.emplace("A", inst.a);
        out.roles.emplace("A0", inst.a0);
        out.roles.emplace("H", inst.h);
        out.roles.emplace("Z", inst.z);
        out.example = std::move(inst);
        return out;
      }
      // Standard families keep the family name field for the label.
      auto named = [&](GroupPtr g, std::string label) {
        LoadedGroup out{std::move(g), std::move(label), spec, {}, std::nullopt};
        out.roles.emplace("G", Subset::all(out.group));
        return out;
      };
      if (family == "cyclic") {
        const auto n = get_size(spec, "n");
        check_cap(n, order_cap);
        return named(cyclic_group(n), "C" + std::to_string(n));
      }
      if (family == "dihedral") {
        const auto n = get_size(spec, "n");
        check_cap(2 * n, order_cap);
        return named(dihedral_group(n), "D" + std::to_string(n));
      }
      if (family == "quaternion") {
        const auto order = get_size(spec, "order");
        check_cap(order, order_cap);
        return named(quaternion_group(order), "Q" + std::to_string(order));
      }
      if (family == "symmetric") {
        const auto d = get_size(spec, "degree");
        return named(symmetric_group(d, order_cap), "S" + std::to_string(d));
      }
      if (family == "alternating") {
        const auto d = get_size(spec, "degree");
        return named(alternating_group(d, order_cap), "A" + std::to_string(d));
      }
      bad("unknown family '" + family + "'");
    }
  } catch (const json::exception& e) {
    bad(std::string("malformed group spec: ") + e.what());
  }
  bad("unknown group kind '" + kind + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

LoadedGroup load_group_argument(const std::string& arg, std::size_t order_cap) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return load_group(json::parse(arg), order_cap);
    } catch (const json::exception& e) {
      bad(std::string("bad group JSON: ") + e.what());
    }
  }
  if (std::filesystem::exists(arg)) return load_group(read_json_file(arg), order_cap);

  auto number = [&](std::string_view digits) -> std::size_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      bad("unrecognised group '" + arg + "'");
    return std::stoul(std::string(digits));
  };
  if (arg.rfind("example:", 0) == 0) {
    std::stringstream ss(arg.substr(8));
    std::string part;
    std::vector<std::size_t> v;
    while (std::getline(ss, part, ',')) v.push_back(number(part));
    if (v.size() != 3) bad("example shorthand is example:n,k,u");
    return load_group({{"kind", "family"}, {"name", "example1"}, {"n", v[0]}, {"k", v[1]}, {"u", v[2]}}, order_cap);
  }
  if (arg.size() >= 2) {
    const auto n = number(std::string_view(arg).substr(1));
    switch (arg.front()) {
      case 'C': return load_group({{"kind", "family"}, {"name", "cyclic"}, {"n", n}}, order_cap);
      case 'D': return load_group({{"kind", "family"}, {"name", "dihedral"}, {"n", n}}, order_cap);
      case 'Q': return load_group({{"kind", "family"}, {"name", "quaternion"}, {"order", n}}, order_cap);
      case 'S': return load_group({{"kind", "family"}, {"name", "symmetric"}, {"degree", n}}, order_cap);
      case 'A': return load_group({{"kind", "family"}, {"name", "alternating"}, {"degree", n}}, order_cap);
      default: break;
    }
  }
  bad("unrecognised group '" + arg + "'");
}

Subset load_subset(const json& spec, const LoadedGroup& g) {
  if (!spec.is_object()) bad("subset spec must be an object");
  if (spec.contains("all")) {
    if (spec["all"] != true) bad("'all' must be true");
    return Subset::all(g.group);
  }
  if (spec.contains("elements")) {
    const auto ids = get_ids(spec["elements"], *g.group);
    return Subset::of(g.group, ids);
  }
  if (spec.contains("subgroup_generated_by")) {
    const auto ids = get_ids(spec["subgroup_generated_by"], *g.group);
    return subgroup_closure(Subset::of(g.group, ids));
  }
  if (spec.contains("role")) {
    const auto role = spec["role"].get<std::string>();
    const auto it = g.roles.find(role);
    if (it == g.roles.end()) bad("group " + g.name + " has no subset named " + role);
    return it->second;
  }
  bad("unrecognised subset spec " + spec.dump());
}

Subset load_subset_argument(const std::string& arg, const LoadedGroup& g) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return load_subset(json::parse(arg), g);
    } catch (const json::exception& e) {
      bad(std::string("bad subset JSON: ") + e.what());
    }
  }
  if (arg == "all") return Subset::all(g.group);
  if (g.roles.count(arg)) return g.roles.at(arg);
  std::vector<ElementId> ids;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      bad("unrecognised subset '" + arg + "'");
    const auto v = std::stoull(part);
    if (v >= g.group->order()) bad("element id out of range: " + part);
    ids.push_back(ElementId(v));
  }
  if (ids.empty()) bad("empty subset argument");
  return Subset::of(g.group, ids);
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Subset& s) { return s.elements(); }

json to_json(const ApproxCertificate& c) {
  return {{"k", c.k},
          {"cover", to_json(c.cover)},
          {"mode", std::string(to_string(c.mode))},
          {"doubling", c.doubling.str()},
          {"tripling", c.tripling.str()}};
}

json to_json(const BoundCheck& c) {
  return {{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"holds", c.holds}};
}

namespace {

json checks_json(const std::vector<BoundCheck>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

}  // namespace

json to_json(const CoreExtraction& c) {
  return {{"H", to_json(c.h)},
          {"U", to_json(c.u)},
          {"epsilon", c.epsilon.str()},
          {"k_U", c.k_u},
          {"pr_H_U", c.pr_h_u.str()},
          {"X", to_json(c.x)},
          {"B", to_json(c.b)},
          {"B_generated_order", c.b_generated.size()},
          {"b_cert", to_json(c.b_cert)},
          {"class_bound_m", c.class_bound_m},
          {"chain",
           {{"max_class_on_B", c.max_class_on_b},
            {"bound_on_B", c.chain_bound_b.str()},
            {"max_class_on_cover", c.max_class_on_cover},
            {"bound_on_cover", c.chain_bound_cover.str()}}},
          {"checks", checks_json(c.checks)}};
}

json to_json(const WitnessReport& r) {
  json out{{"schema", "1"},
           {"theorem", r.theorem},
           {"group_order", r.a.group().order()},
           {"inputs", {{"A", to_json(r.a)}, {"k_cert", r.a_cert.k}, {"epsilon", r.epsilon.str()}}},
           {"certificate", to_json(r.a_cert)},
           {"pr", r.pr_value.str()},
           {"gamma", r.gamma.str()}};
  json ex = json::array();
  for (const auto& e : r.extractions) ex.push_back(to_json(e));
  out["extractions"] = ex;
  if (r.theorem == "1.1") {
    out["T"] = to_json(*r.t);
    out["index_G_T"] = r.index_g_t;
    out["commutator_size"] = r.commutator_size;
  } else {
    out["Y"] = to_json(*r.y);
    out["C"] = to_json(*r.c);
    out["c_prime_size"] = r.c_prime_size;
    out["k_tilde"] = r.k_tilde.str();
    out["eta"] = r.eta.str();
    out["gamma_bound"] = r.gamma_bound.str();
    out["coset_count"] = r.coset_count;
    out["cover_F"] = to_json(*r.cover_f);
  }
  out["checks"] = checks_json(r.checks);
  out["all_hold"] = r.all_hold();
  return out;
}

json to_json(const CheckResult& r) {
  return {{"statement_id", r.statement_id}, {"instance", r.instance}, {"lhs", r.lhs.str()},
          {"rhs", r.rhs.str()},             {"holds", r.holds},       {"slack", r.slack.str()}};
}

json to_json(const PredictedQuantities& q) {
  return {{"group_order", q.group_order},
          {"A_size", q.a_size},
          {"H_size", q.h_size},
          {"A0_size", q.a0_size},
          {"class_size", q.class_size},
          {"pr_A_G", q.pr_a_g.str()},
          {"pr_A_G_upper", q.pr_a_g_upper.str()},
          {"A_over_H_lower", q.a_over_h_lower.str()},
          {"pr_H_G_lower", q.pr_h_g_lower.str()},
          {"pr_A0_G_lower", q.pr_a0_g_lower.str()},
          {"ratio_A_H_upper", q.ratio_a_h_upper.str()},
          {"ratio_A_A0_upper", q.ratio_a_a0_upper.str()}};
}

json to_json(const ConjugateCover& c) {
  return {{"center_set", to_json(c.center_set)},
          {"translates", c.translates},
          {"translate_bound", c.translate_bound.str()},
          {"verified", c.verified}};
}

json group_to_json(const Group& g) {
  json table = json::array();
  for (ElementId a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    table.push_back(std::vector<ElementId>(r.begin(), r.end()));
  }
  json out{{"kind", "table"}, {"table", std::move(table)}};
  if (g.has_labels()) out["labels"] = g.labels();
  return out;
}

}  // namespace approxcommute
