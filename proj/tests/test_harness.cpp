#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "approxcommute/probability.hpp"
#include "approxcommute/spec_io.hpp"
#include "approxcommute/suite.hpp"

using namespace approxcommute;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(AC_CLI_PATH) + " " + args;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("approxcommute_test_" + name)).string();
}

json small_corpus() {
  return json::array({{{"kind", "family"}, {"name", "symmetric"}, {"degree", 3}},
                      {{"kind", "family"}, {"name", "dihedral"}, {"n", 4}},
                      {{"kind", "family"}, {"name", "quaternion"}, {"order", 8}},
                      {{"kind", "family"}, {"name", "alternating"}, {"degree", 4}},
                      {{"kind", "family"}, {"name", "example1"}, {"n", 3}, {"k", 1}, {"u", 1}}});
}

}  // namespace

TEST_CASE("splitmix stream") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  // reference value of the published generator for seed 0
  SplitMix64 z(0);
  CHECK(z.next() == 0xe220a8397b1dcdafULL);
  SplitMix64 r(1);
  std::array<int, 7> hits{};
  for (int i = 0; i < 7000; ++i) {
    const auto v = r.uniform(7);
    REQUIRE(v < 7);
    ++hits[v];
  }
  for (int h : hits) CHECK(h > 800);
  int ones = 0;
  for (int i = 0; i < 3000; ++i) ones += r.bernoulli(1, 3);
  CHECK(ones > 850);
  CHECK(ones < 1150);
  SplitMix64 always(3);
  for (int i = 0; i < 50; ++i) {
    CHECK(always.bernoulli(5, 5));
    CHECK_FALSE(always.bernoulli(0, 5));
  }
  CHECK(stream(1, {2, 3}).state() == stream(1, {2, 3}).state());
  CHECK(stream(1, {2, 3}).state() != stream(1, {3, 2}).state());
  CHECK(stream(1, {2}).state() != stream(2, {2}).state());
}

TEST_CASE("random symmetric subsets") {
  auto s3 = support::s3();
  SplitMix64 r1(8);
  CHECK(random_symmetric_subset(s3, Rational(1), r1).is_full());
  auto a = stream(5, {1});
  auto b = stream(5, {1});
  CHECK(random_symmetric_subset(s3, Rational(1, 2), a) == random_symmetric_subset(s3, Rational(1, 2), b));
  SplitMix64 r2(9);
  for (const auto& g : support::small_groups())
    for (auto d : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
      const auto s = random_symmetric_subset(g, d, r2);
      CHECK(is_symmetric(s));
      CHECK(s.contains_identity());
    }
  CHECK_ERROR_KIND(random_symmetric_subset(s3, Rational(0), r2), BadParams);
  CHECK_ERROR_KIND(random_symmetric_subset(s3, Rational(3, 2), r2), BadParams);
}

TEST_CASE("group and subset specs") {
  auto t = load_group(json::parse(R"({"kind":"table","table":[[0,1],[1,0]],"labels":["e","t"],"name":"two"})"));
  CHECK(t.group->order() == 2);
  CHECK(t.name == "two");
  auto p = load_group(json::parse(R"({"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]})"));
  CHECK(p.group->order() == 6);
  auto ex = load_group(json::parse(R"({"kind":"family","name":"example1","n":3,"k":1,"u":1})"));
  CHECK(ex.roles.count("A"));
  CHECK(ex.roles.count("A0"));
  CHECK(ex.roles.count("H"));
  CHECK(ex.roles.count("Z"));
  CHECK(ex.roles.at("A").size() == 3);
  for (const char* s : {"C7", "D5", "Q16", "S4", "A5", "example:4,2,1"}) CHECK(load_group_argument(s).group->order() > 1);
  CHECK(load_group_argument("example:4,2,1").group->order() == 64);

  CHECK_ERROR_KIND(load_group(json::parse(R"({"kind":"blob"})")), SpecParseError);
  CHECK_ERROR_KIND(load_group(json::parse(R"({"kind":"family","name":"cyclic"})")), SpecParseError);
  CHECK_ERROR_KIND(load_group(json::parse(R"({"kind":"table","table":"x"})")), SpecParseError);
  CHECK_ERROR_KIND(load_group(json::parse(R"({"kind":"family","name":"cyclic","n":50})"), 10), OrderCapExceeded);
  CHECK_ERROR_KIND(load_group_argument("Z9"), SpecParseError);
  CHECK_ERROR_KIND(load_group_argument("{oops"), SpecParseError);

  auto g = load_group_argument("S3");
  CHECK(load_subset_argument("all", g).is_full());
  CHECK(load_subset_argument("G", g).is_full());
  CHECK(load_subset_argument("0,1", g).size() == 2);
  CHECK(load_subset_argument(R"({"subgroup_generated_by":[1]})", g).size() == 2);
  CHECK(load_subset(json::parse(R"({"elements":[0,2,2]})"), g).size() == 2);
  CHECK_ERROR_KIND(load_subset_argument("0,99", g), SpecParseError);
  CHECK_ERROR_KIND(load_subset_argument("A", g), SpecParseError);
  CHECK_ERROR_KIND(load_subset(json::parse(R"({"what":1})"), g), SpecParseError);
}

TEST_CASE("order cap from the environment") {
  setenv("APPROXCOMMUTE_ORDER_CAP", "30", 1);
  CHECK(default_order_cap() == 30);
  CHECK_ERROR_KIND(load_group_argument("S5"), OrderCapExceeded);
  setenv("APPROXCOMMUTE_ORDER_CAP", "junk", 1);
  CHECK(default_order_cap() == kDefaultOrderCap);
  unsetenv("APPROXCOMMUTE_ORDER_CAP");
}

TEST_CASE("serialization") {
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  auto g = load_group_argument("C5");
  CHECK(to_json(Subset::of(g.group, {4, 1})) == json::array({1, 4}));
  auto cert = certify(Subset::all(g.group), CoverMode::Exact);
  auto j = to_json(cert);
  CHECK(j["k"] == 1);
  CHECK(j["mode"] == "exact");
  CHECK(j["doubling"] == "1/1");
  CHECK(j["cover"] == json::array({0}));
}

TEST_CASE("suite config parsing") {
  auto c = parse_suite_config(json::object());
  CHECK(c.corpus.size() == default_corpus().size());
  CHECK(c.random_instances_per_statement == 500);
  CHECK(c.statements.empty());
  CHECK_ERROR_KIND(parse_suite_config(json::array()), SpecParseError);
  CHECK_ERROR_KIND(parse_suite_config(json::parse(R"({"corpus":[]})")), SpecParseError);
  CHECK_ERROR_KIND(parse_suite_config(json::parse(R"({"seed":"x"})")), SpecParseError);
  CHECK_ERROR_KIND(parse_suite_config(json::parse(R"({"statements":["Q"]})")), UnknownStatement);
}

TEST_CASE("default corpus stays within order 200 apart from the examples") {
  for (const auto& spec : default_corpus()) {
    const auto g = load_group(spec);
    if (!g.example) CHECK(g.group->order() <= 200);
  }
}

TEST_CASE("suite on the trivial group") {
  SuiteConfig c;
  c.corpus = {{{"kind", "family"}, {"name", "cyclic"}, {"n", 1}}};
  c.random_instances_per_statement = 5;
  const auto r = run_suite(c);
  CHECK(r.failures == 0);
  CHECK(r.payload["statements"].size() == 12);
  CHECK(r.payload["schema"] == "1");
}

TEST_CASE("suite on a small mixed corpus, and determinism") {
  SuiteConfig c;
  c.corpus = small_corpus().get<std::vector<json>>();
  c.random_instances_per_statement = 40;
  c.seed = 99;
  c.source_path = "cfg.json";
  const auto one = run_suite(c, 1);
  const auto four = run_suite(c, 4);
  CHECK(one.failures == 0);
  CHECK(one.payload.dump() == four.payload.dump());
  CHECK_FALSE(one.to_json(false).contains("timing"));
  CHECK(one.to_json(true).contains("timing"));
  for (const auto& s : one.payload["statements"]) {
    CHECK(s["instances"] == 45);
    CHECK(s["failures"] == 0);
    CHECK(s.contains("min_slack"));
  }
  CHECK(one.payload["witnesses"].size() == 2 * 5 + 2);

  // a different seed changes the random instances
  c.seed = 100;
  CHECK(run_suite(c).payload.dump() != one.payload.dump());

  // single re-run matches the tightest instance's description
  c.seed = 99;
  const auto& first = one.payload["statements"][0];
  const auto single = run_single(c, first["id"], first["tightest_index"]);
  CHECK(single.instance == first["tightest_instance"]);
  CHECK(single.slack.str() == first["min_slack"]);
}

TEST_CASE("cli: pr, certify, witness, example, cover") {
  auto r = run_cli("pr C6 all all");
  CHECK(r.code == 0);
  CHECK(r.out == "1/1\n");
  CHECK(run_cli("pr D4 all all").out == "5/8\n");
  CHECK(run_cli("pr S3 0,1 all").out == "2/3\n");

  r = run_cli("certify S4 '{\"subgroup_generated_by\":[1,2]}'");
  CHECK(r.code == 0);
  CHECK(r.out == "k=1\n");
  r = run_cli("certify example:4,2,1 A --exact --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["k"].get<int>() <= 3);

  r = run_cli("witness thm2 D4 all");
  CHECK(r.code == 0);
  auto w = json::parse(r.out);
  CHECK(w["schema"] == "1");
  CHECK(w["theorem"] == "1.2");
  for (const char* key : {"inputs", "certificate", "extractions", "Y", "C", "c_prime_size", "gamma", "eta",
                          "coset_count", "cover_F", "checks", "all_hold"})
    CHECK_MESSAGE(w.contains(key), key);
  CHECK(w["inputs"]["epsilon"] == "5/8");
  CHECK(w["all_hold"] == true);

  r = run_cli("witness thm1 S4 all --epsilon 1/10");
  CHECK(r.code == 0);
  auto w1 = json::parse(r.out);
  CHECK(w1["theorem"] == "1.1");
  CHECK(w1.contains("T"));
  CHECK(w1["inputs"]["epsilon"] == "1/10");

  r = run_cli("example --n 5 --k 2 --u 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["pr_A_G"] == "13/45");
  r = run_cli("example --n 2 --k 1 --u 1 --emit group");
  CHECK(r.code == 0);
  auto eg = json::parse(r.out);
  CHECK(eg["table"].size() == 8);
  const auto back = load_group(eg);
  CHECK(back.group->order() == 8);
  REQUIRE(back.roles.count("A") == 1);
  CHECK(back.roles.at("A").size() == eg["roles"]["A"].size());
  CHECK_ERROR_KIND(load_group(json::parse(R"({"kind":"table","table":[[0]],"roles":{"A":[3]}})")), SpecParseError);

  r = run_cli("cover ruzsa S4 all 0,1");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["F_size"] == 12);
  r = run_cli("cover conjugate S3 all 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verified"] == true);
}

TEST_CASE("cli: exit codes and errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("pr C6 all").code == 2);
  CHECK(run_cli("pr Z6 all all 2>/dev/null").code == 2);
  CHECK(run_cli("witness thm3 S3 all 2>/dev/null").code == 2);
  CHECK(run_cli("witness thm1 S3 all --epsilon 1/x 2>/dev/null").code == 2);
  // epsilon above pr(A,G): hypothesis fails
  CHECK(run_cli("witness thm1 S3 all --epsilon 9/10 2>/dev/null").code == 1);
  CHECK(run_cli("certify C5 0,1 2>/dev/null").code == 1);
  auto r = run_cli("--json pr Z6 all all 2>&1 >/dev/null");
  auto e = json::parse(r.out);
  CHECK(e["error"] == "SpecParseError");
  CHECK(e.contains("message"));
}

TEST_CASE("cli: verify writes a report and reproduces single instances") {
  const auto cfg = temp_path("cfg.json");
  const auto out = temp_path("report.json");
  {
    std::ofstream f(cfg);
    f << json{{"corpus", small_corpus()}, {"random_instances_per_statement", 10}, {"seed", 3}}.dump();
  }
  auto r = run_cli("verify --config " + cfg + " --output " + out);
  CHECK(r.code == 0);
  CHECK(r.out == "failures=0\n");
  auto report = read_json_file(out);
  CHECK(report["failures"] == 0);
  CHECK(report.contains("timing"));
  r = run_cli("verify --config " + cfg + " --statement L2.6 --instance 7");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["statement_id"] == "L2.6");
  CHECK(run_cli("verify --config " + cfg + " --statement L2.6 2>/dev/null").code == 2);
  CHECK(run_cli("verify --config /nonexistent.json 2>/dev/null").code == 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
