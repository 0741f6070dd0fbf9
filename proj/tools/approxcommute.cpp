#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "approxcommute/error.hpp"
#include "approxcommute/probability.hpp"
#include "approxcommute/spec_io.hpp"
#include "approxcommute/suite.hpp"
#include "approxcommute/witness.hpp"

using namespace approxcommute;

namespace {

bool g_json_errors = false;

int report_error(const std::string& kind, const std::string& message, int code) {
  if (g_json_errors)
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return code;
}

std::vector<ElementId> parse_ids(const std::string& text) {
  std::vector<ElementId> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const auto token = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const auto v = std::stoul(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(ElementId(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::SpecParseError, "bad element id '" + token + "'");
    }
    pos = comma + 1;
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_pr(const std::string& group, const std::string& xs, const std::string& ys, bool as_json) {
  const auto g = load_group_argument(group);
  const auto x = load_subset_argument(xs, g);
  const auto y = load_subset_argument(ys, g);
  const auto p = commuting_probability(x, y);
  if (as_json)
    print({{"pr", p.str()}, {"X_size", x.size()}, {"Y_size", y.size()}});
  else
    std::cout << p.str() << "\n";
  return 0;
}

int cmd_certify(const std::string& group, const std::string& as, bool exact, bool as_json) {
  const auto g = load_group_argument(group);
  const auto a = load_subset_argument(as, g);
  const auto cert = certify(a, exact ? CoverMode::Exact : CoverMode::Greedy);
  const bool ok = verify_certificate(cert);
  if (as_json) {
    auto j = to_json(cert);
    j["verified"] = ok;
    print(j);
  } else {
    std::cout << "k=" << cert.k << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_witness(const std::string& which, const std::string& group, const std::string& as,
                const std::string& epsilon) {
  const auto g = load_group_argument(group);
  const auto a = load_subset_argument(as, g);
  std::optional<Rational> eps;
  if (!epsilon.empty()) eps = Rational::parse(epsilon);
  const auto r = which == "thm1" ? witness_normal_core(a, eps) : witness_almost_abelian_cover(a, eps);
  print(to_json(r));
  return r.all_hold() ? 0 : 1;
}

int cmd_verify(const std::string& config_path, unsigned threads, const std::string& stmt,
               std::optional<std::size_t> instance, const std::string& output, bool no_timing) {
  auto config = parse_suite_config(read_json_file(config_path), config_path);
  if (!stmt.empty() || instance) {
    if (stmt.empty() || !instance) throw CLI::ValidationError("--statement and --instance go together");
    const auto r = run_single(config, stmt, *instance);
    print(to_json(r));
    return r.holds ? 0 : 1;
  }
  const auto report = run_suite(config, threads);
  const auto text = report.to_json(!no_timing).dump(2) + "\n";
  const auto path = output.empty() ? config.output_path : output;
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::SpecParseError, "cannot write " + path);
    out << text;
    std::cout << "failures=" << report.failures << "\n";
  }
  return report.failures == 0 ? 0 : 1;
}

int cmd_example(const ExampleParams& p, const std::string& emit) {
  validate(p);
  const auto inst = build_example(p, default_order_cap());
  if (emit == "group") {
    auto j = group_to_json(*inst.group);
    j["roles"] = {{"A", to_json(inst.a)}, {"A0", to_json(inst.a0)}, {"H", to_json(inst.h)}, {"Z", to_json(inst.z)}};
    print(j);
    return 0;
  }
  const auto& q = inst.predicted;
  const auto& g = inst.group;
  const auto pr_a = commuting_probability(inst.a, Subset::all(g));
  const auto pr_a0 = commuting_probability(inst.a0, Subset::all(g));
  bool classes_ok = true;
  for (auto a : inst.a)
    if (a != Group::identity() && g->class_size_of(a) != q.class_size) classes_ok = false;
  const auto pr_h = commuting_probability(inst.h, Subset::all(g));
  const auto ratio_a_h = pr_a / pr_h;
  const auto ratio_a_a0 = pr_a / pr_a0;
  std::vector<BoundCheck> checks{
      bound_check("pr(A,G) = predicted", pr_a, q.pr_a_g),
      bound_check("predicted <= pr(A,G)", q.pr_a_g, pr_a),
      bound_check("|A| = kz+1", Rational(std::int64_t(inst.a.size())), Rational(std::int64_t(q.a_size))),
      bound_check("|H| = 2^k z", Rational(std::int64_t(inst.h.size())), Rational(std::int64_t(q.h_size))),
      bound_check("pr(A,G) <= 1/n + 1/(kz)", pr_a, q.pr_a_g_upper),
      bound_check("pr(A,G)/pr(H,G) <= (1/n + 1/(kz)) 2^k", ratio_a_h, q.ratio_a_h_upper),
      bound_check("1/2^k <= pr(H,G)", q.pr_h_g_lower, pr_h),
      bound_check("1/(k+1) < pr(A0,G)", q.pr_a0_g_lower, pr_a0),
      bound_check("pr(A,G)/pr(A0,G) <= (1/n + 1/(kz))(k+1)", ratio_a_a0, q.ratio_a_a0_upper),
  };
  checks[7].holds = q.pr_a0_g_lower < pr_a0;
  bool ok = classes_ok;
  for (const auto& c : checks) ok = ok && c.holds;
  json j{{"params", {{"n", p.n}, {"k", p.k}, {"u", p.u_order}}},
         {"group_order", g->order()},
         {"A_size", inst.a.size()},
         {"A0_size", inst.a0.size()},
         {"H_size", inst.h.size()},
         {"Z_size", inst.z.size()},
         {"pr_A_G", pr_a.str()},
         {"pr_A0_G", pr_a0.str()},
         {"pr_H_G", pr_h.str()},
         {"ratio_A_H", ratio_a_h.str()},
         {"ratio_A_A0", ratio_a_a0.str()},
         {"class_sizes_equal_n", classes_ok},
         {"predicted", to_json(q)},
         {"checks", json::array()},
         {"all_hold", ok}};
  for (const auto& c : checks) j["checks"].push_back(to_json(c));
  print(j);
  return ok ? 0 : 1;
}

int cmd_cover_ruzsa(const std::string& group, const std::string& as, const std::string& ys) {
  const auto g = load_group_argument(group);
  const auto a = load_subset_argument(as, g);
  const auto y = load_subset_argument(ys, g);
  const auto f = ruzsa_cover(a, y);
  const bool ok = covered_by_translates(a, f, y);
  print({{"F", to_json(f)}, {"F_size", f.size()}, {"covered", ok}});
  return ok ? 0 : 1;
}

int cmd_cover_conjugate(const std::string& group, const std::string& as, const std::string& ids, bool exact) {
  const auto g = load_group_argument(group);
  const auto a = load_subset_argument(as, g);
  const auto cert = exact ? certify(a, CoverMode::Exact) : best_certificate(a);
  const auto c = bounded_conjugate_cover(a, cert, parse_ids(ids));
  auto j = to_json(c);
  j["k"] = cert.k;
  print(j);
  return c.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting probability and approximate subgroup checks on finite groups"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json_errors, "Machine-readable errors on stderr");

  std::string group, xs, ys, as, which, epsilon, config, stmt, output, emit = "report", ids;
  bool exact = false, as_json = false, no_timing = false;
  unsigned threads = 1;
  std::optional<std::size_t> instance;
  ExampleParams params;

  auto* pr = app.add_subcommand("pr", "Exact commuting probability pr(X,Y)");
  pr->add_option("group", group, "Group: spec file, inline JSON or shorthand (C6, D4, Q8, S4, A5, example:n,k,u)")
      ->required();
  pr->add_option("X", xs, "Subset: JSON, 'all', role name or ids")->required();
  pr->add_option("Y", ys)->required();

  auto* cert = app.add_subcommand("certify", "Cover certificate for A^2 in EA");
  cert->add_option("group", group)->required();
  cert->add_option("A", as)->required();
  cert->add_flag("--exact", exact, "Minimum cover (branch and bound)");

  auto* wit = app.add_subcommand("witness", "Structural witness pipeline");
  wit->add_option("theorem", which)->required()->check(CLI::IsMember({"thm1", "thm2"}));
  wit->add_option("group", group)->required();
  wit->add_option("A", as)->required();
  wit->add_option("--epsilon", epsilon, "Threshold p/q (default: the exact pr)");

  auto* ver = app.add_subcommand("verify", "Run the statement suite");
  ver->add_option("--config", config)->required();
  ver->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
  ver->add_option("--statement", stmt);
  ver->add_option("--instance", instance);
  ver->add_option("--output", output, "Report path (default: config output_path, else stdout)");
  ver->add_flag("--no-timing", no_timing);

  auto* ex = app.add_subcommand("example", "Shift-group example family");
  ex->add_option("--n", params.n)->required();
  ex->add_option("--k", params.k)->required();
  ex->add_option("--u", params.u_order)->required();
  ex->add_option("--emit", emit)->check(CLI::IsMember({"group", "report"}));

  auto* cov = app.add_subcommand("cover", "Covering constructions");
  cov->require_subcommand(1);
  auto* ruz = cov->add_subcommand("ruzsa", "Maximal disjoint translates aY");
  ruz->add_option("group", group)->required();
  ruz->add_option("A", as)->required();
  ruz->add_option("Y", ys)->required();
  auto* conj = cov->add_subcommand("conjugate", "Common centralizer cover for g_1..g_s");
  conj->add_option("group", group)->required();
  conj->add_option("A", as)->required();
  conj->add_option("elements", ids, "Comma-separated element ids")->required();
  conj->add_flag("--exact", exact);

  for (auto* sub : {pr, cert}) sub->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what(), 2);
  }
  g_json_errors = g_json_errors || as_json;

  try {
    if (*pr) return cmd_pr(group, xs, ys, as_json);
    if (*cert) return cmd_certify(group, as, exact, as_json);
    if (*wit) return cmd_witness(which, group, as, epsilon);
    if (*ver) return cmd_verify(config, threads, stmt, instance, output, no_timing);
    if (*ex) return cmd_example(params, emit);
    if (*ruz) return cmd_cover_ruzsa(group, as, ys);
    if (*conj) return cmd_cover_conjugate(group, as, ids, exact);
  } catch (const CLI::ValidationError& e) {
    return report_error("UsageError", e.what(), 2);
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::SpecParseError || e.kind() == ErrorKind::BadParams ||
                       e.kind() == ErrorKind::UnknownStatement;
    return report_error(std::string(to_string(e.kind())), e.what(), usage ? 2 : 1);
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what(), 1);
  }
  return 2;
}
