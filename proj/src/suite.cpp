#include "approxcommute/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "approxcommute/error.hpp"
#include "approxcommute/probability.hpp"
#include "approxcommute/subgroups.hpp"
#include "approxcommute/witness.hpp"

namespace approxcommute {

std::vector<json> default_corpus() {
  std::vector<json> out;
  for (std::size_t n : {1, 2, 3, 4, 6, 8, 12, 30, 200}) out.push_back({{"kind", "family"}, {"name", "cyclic"}, {"n", n}});
  for (std::size_t n : {3, 4, 5, 6, 8, 10, 12, 50, 100})
    out.push_back({{"kind", "family"}, {"name", "dihedral"}, {"n", n}});
  for (std::size_t d : {3, 4, 5}) out.push_back({{"kind", "family"}, {"name", "symmetric"}, {"degree", d}});
  for (std::size_t d : {4, 5}) out.push_back({{"kind", "family"}, {"name", "alternating"}, {"degree", d}});
  for (std::size_t q : {8, 16}) out.push_back({{"kind", "family"}, {"name", "quaternion"}, {"order", q}});
  for (auto [n, k, u] : {std::array<std::size_t, 3>{3, 1, 1}, {4, 2, 1}, {5, 2, 2}})
    out.push_back({{"kind", "family"}, {"name", "example1"}, {"n", n}, {"k", k}, {"u", u}});
  return out;
}

SuiteConfig parse_suite_config(const json& j, std::string source_path) {
  if (!j.is_object()) throw Error(ErrorKind::SpecParseError, "config must be a JSON object");
  SuiteConfig c;
  c.source_path = std::move(source_path);
  try {
    c.corpus = j.contains("corpus") ? j["corpus"].get<std::vector<json>>() : default_corpus();
    if (j.contains("statements")) c.statements = j["statements"].get<std::vector<std::string>>();
    c.random_instances_per_statement = j.value("random_instances_per_statement", c.random_instances_per_statement);
    c.seed = j.value("seed", c.seed);
    c.order_cap = j.value("order_cap", default_order_cap());
    c.output_path = j.value("output_path", std::string{});
    c.witnesses = j.value("witnesses", true);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SpecParseError, std::string("bad config: ") + e.what());
  }
  if (c.corpus.empty()) throw Error(ErrorKind::SpecParseError, "corpus must not be empty");
  for (const auto& id : c.statements) statement(id);
  return c;
}

Subset random_symmetric_subset(const GroupPtr& g, const Rational& density, SplitMix64& rng) {
  if (density <= Rational(0) || density > Rational(1))
    throw Error(ErrorKind::BadParams, "density must lie in (0, 1]");
  const auto num = density.numerator().convert_to<std::uint64_t>();
  const auto den = density.denominator().convert_to<std::uint64_t>();
  SubsetBuilder b(g);
  b.insert(Group::identity());
  for (ElementId x = 1; x < g->order(); ++x) {
    const auto xi = g->inv(x);
    if (xi < x) continue;
    if (rng.bernoulli(num, den)) {
      b.insert(x);
      b.insert(xi);
    }
  }
  return b.build();
}

json Report::to_json(bool include_timing) const {
  json out = payload;
  if (include_timing) out["timing"] = timing;
  return out;
}

namespace {

struct CorpusEntry {
  LoadedGroup loaded;
  std::vector<Subset> normals;
};

std::vector<CorpusEntry> load_corpus(const SuiteConfig& config) {
  std::vector<CorpusEntry> out;
  for (const auto& spec : config.corpus) {
    auto loaded = load_group(spec, config.order_cap);
    auto normals = normal_subgroups(loaded.group);
    out.push_back({std::move(loaded), std::move(normals)});
  }
  return out;
}

std::vector<std::string> selected_statements(const SuiteConfig& config) {
  std::vector<std::string> ids;
  for (const auto& s : statements())
    if (config.statements.empty() ||
        std::find(config.statements.begin(), config.statements.end(), s.id) != config.statements.end())
      ids.push_back(s.id);
  return ids;
}

std::size_t statement_index(const std::string& id) {
  const auto& all = statements();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].id == id) return i;
  throw Error(ErrorKind::UnknownStatement, id);
}

/// Random inputs for one instance; every draw comes from one stream.
class InstanceSampler {
 public:
  InstanceSampler(const CorpusEntry& entry, SplitMix64 rng) : entry_(entry), g_(entry.loaded.group), rng_(rng) {}

  ElementId element() { return ElementId(rng_.uniform(g_->order())); }

  /// Symmetric set with 1: dense random, sparse random, or a subgroup plus a few elements.
  Subset symmetric_set() {
    switch (rng_.uniform(3)) {
      case 0: {
        static const Rational densities[] = {Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                             Rational(2, 3), Rational(1)};
        return random_symmetric_subset(g_, densities[rng_.uniform(6)], rng_);
      }
      case 1: {
        SubsetBuilder b(g_);
        b.insert(Group::identity());
        const auto count = 1 + rng_.uniform(6);
        for (std::uint64_t i = 0; i < count; ++i) {
          const auto x = element();
          b.insert(x);
          b.insert(g_->inv(x));
        }
        return b.build();
      }
      default: {
        SubsetBuilder b(subgroup());
        const auto count = rng_.uniform(4);
        for (std::uint64_t i = 0; i < count; ++i) {
          const auto x = element();
          b.insert(x);
          b.insert(g_->inv(x));
        }
        return b.build();
      }
    }
  }

  Subset subgroup() {
    if (rng_.uniform(4) == 0) return normal();
    SubsetBuilder gens(g_);
    const auto count = 1 + rng_.uniform(2);
    for (std::uint64_t i = 0; i < count; ++i) gens.insert(element());
    return subgroup_closure(gens.build());
  }

  Subset normal() { return entry_.normals[rng_.uniform(entry_.normals.size())]; }

  /// Symmetric subset of `outer`, nonempty.
  Subset symmetric_part(const Subset& outer) {
    SubsetBuilder b(g_);
    for (auto x : outer) {
      const auto xi = g_->inv(x);
      if (xi < x) continue;
      if (rng_.bernoulli(1, 2)) b.insert(x), b.insert(xi);
    }
    if (b.size() == 0) {
      const auto x = *outer.begin();
      b.insert(x);
      b.insert(g_->inv(x));
    }
    return b.build();
  }

  /// Any nonempty partner set for pr(., B).
  Subset partner() {
    switch (rng_.uniform(3)) {
      case 0: return Subset::all(g_);
      case 1: return subgroup();
      default: return symmetric_set();
    }
  }

  SplitMix64& rng() { return rng_; }

 private:
  const CorpusEntry& entry_;
  GroupPtr g_;
  SplitMix64 rng_;
};

Instance make_instance(const std::string& id, const CorpusEntry& entry, SplitMix64 rng, bool structured) {
  const auto& g = entry.loaded.group;
  InstanceSampler s(entry, rng);
  Instance in;
  in.group = g;
  auto primary = [&]() -> Subset {
    if (structured) {
      const auto it = entry.loaded.roles.find("A");
      return it != entry.loaded.roles.end() ? it->second : Subset::all(g);
    }
    return s.symmetric_set();
  };

  if (id == "P2.1" || id == "P2.2" || id == "C2.3a" || id == "C2.3b") {
    in.sets.emplace("A", primary());
    in.sets.emplace("N", s.normal());
  } else if (id == "Sub-mono") {
    auto h1 = structured ? Subset::identity_only(g) : s.subgroup();
    SubsetBuilder more(h1);
    more.insert(s.element());
    auto h2 = structured ? Subset::all(g) : subgroup_closure(more.build());
    in.sets.emplace("H1", std::move(h1));
    in.sets.emplace("H2", std::move(h2));
  } else if (id == "L2.5a" || id == "L2.5b") {
    auto a = primary();
    if (!structured && a.size() > 1 && s.rng().bernoulli(1, 3)) a = a - Subset::identity_only(g);
    in.sets.emplace("A", std::move(a));
    in.element = s.element();
  } else if (id == "L2.6") {
    in.sets.emplace("A", primary());
    in.element = s.element();
    in.exponent = unsigned(1 + s.rng().uniform(4));
  } else if (id == "P2.7") {
    auto a2 = primary();
    auto a1 = s.symmetric_part(a2);
    in.sets.emplace("A1", std::move(a1));
    in.sets.emplace("A2", std::move(a2));
    in.sets.emplace("B", s.partner());
  } else if (id == "C2.8") {
    auto h = s.subgroup();
    auto a = h | (structured ? primary() : s.symmetric_set());
    in.sets.emplace("A", std::move(a));
    in.sets.emplace("H", std::move(h));
    in.sets.emplace("B", s.partner());
  } else if (id == "P1.3") {
    in.sets.emplace("A", primary());
    in.sets.emplace("B", s.partner());
    in.sets.emplace("T", s.rng().bernoulli(1, 2) ? s.normal() : s.subgroup());
  } else if (id == "P1.4") {
    auto a = primary();
    const auto a2 = product(a, a).elements();
    SubsetBuilder gens(g);
    const auto count = 1 + s.rng().uniform(2);
    for (std::uint64_t i = 0; i < count; ++i) gens.insert(a2[s.rng().uniform(a2.size())]);
    in.sets.emplace("A", std::move(a));
    in.sets.emplace("C", subgroup_closure(gens.build()));
  } else {
    throw Error(ErrorKind::UnknownStatement, id);
  }

  std::ostringstream d;
  d << entry.loaded.name;
  for (const auto& [name, set] : in.sets) d << " |" << name << "|=" << set.size();
  if (in.element) d << " g=" << *in.element;
  if (id == "L2.6") d << " n=" << in.exponent;
  in.description = d.str();
  return in;
}

struct Job {
  std::size_t statement = 0;  // position in the selected list
  std::size_t instance = 0;
};

struct JobResult {
  std::optional<CheckResult> result;
  std::string error;
  double seconds = 0;
};

Instance instance_for(const SuiteConfig& config, const std::vector<CorpusEntry>& corpus, const std::string& id,
                      std::size_t index) {
  const auto size = corpus.size();
  const bool structured = index < size;
  const auto& entry = corpus[structured ? index : (index - size) % size];
  return make_instance(id, entry, stream(config.seed, {statement_index(id), index}), structured);
}

std::string repro_command(const SuiteConfig& config, const std::string& id, std::size_t index) {
  return "approxcommute verify --config " + (config.source_path.empty() ? std::string("<config>") : config.source_path) +
         " --statement " + id + " --instance " + std::to_string(index);
}

json witness_summary(const WitnessReport& r, const std::string& group, const std::string& role) {
  json s{{"group", group},
         {"A", role},
         {"theorem", r.theorem},
         {"epsilon", r.epsilon.str()},
         {"k_cert", r.a_cert.k},
         {"gamma", r.gamma.str()},
         {"all_hold", r.all_hold()}};
  if (r.theorem == "1.1") {
    s["index_G_T"] = r.index_g_t;
    s["commutator_size"] = r.commutator_size;
    s["B_size"] = r.extractions.front().b.size();
    s["k_tilde"] = r.extractions.front().b_cert.k;
    s["class_bound_m"] = r.extractions.front().class_bound_m;
  } else {
    s["eta"] = r.eta.str();
    s["gamma_bound"] = r.gamma_bound.str();
    s["C_order"] = r.c->size();
    s["c_prime_size"] = r.c_prime_size;
    s["coset_count"] = r.coset_count;
    s["F_size"] = r.cover_f->size();
  }
  json failed = json::array();
  for (const auto& c : r.checks)
    if (!c.holds) failed.push_back(c.name);
  for (const auto& e : r.extractions)
    for (const auto& c : e.checks)
      if (!c.holds) failed.push_back(c.name);
  s["failed_checks"] = failed;
  return s;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

CheckResult run_single(const SuiteConfig& config, const std::string& statement_id, std::size_t instance_index) {
  const auto corpus = load_corpus(config);
  return check(statement_id, instance_for(config, corpus, statement_id, instance_index));
}

Report run_suite(const SuiteConfig& config, unsigned threads) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto corpus = load_corpus(config);
  const auto ids = selected_statements(config);
  const auto per_statement = corpus.size() + config.random_instances_per_statement;

  std::vector<Job> jobs;
  for (std::size_t s = 0; s < ids.size(); ++s)
    for (std::size_t i = 0; i < per_statement; ++i) jobs.push_back({s, i});
  std::vector<JobResult> results(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    const auto t0 = Clock::now();
    auto& out = results[j];
    try {
      out.result = check(ids[jobs[j].statement], instance_for(config, corpus, ids[jobs[j].statement], jobs[j].instance));
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  });

  // Witness pipelines: A = G on every group, plus the family set A when present.
  struct WitnessJob {
    std::size_t entry;
    std::string role;
    bool normal_core;
  };
  std::vector<WitnessJob> wjobs;
  if (config.witnesses)
    for (std::size_t e = 0; e < corpus.size(); ++e)
      for (const std::string role : {"G", "A"})
        if (corpus[e].loaded.roles.count(role))
          for (bool nc : {true, false}) wjobs.push_back({e, role, nc});
  std::vector<json> wresults(wjobs.size());
  std::vector<char> wfailed(wjobs.size(), 0);
  const auto wstart = Clock::now();
  parallel_for(wjobs.size(), threads, [&](std::size_t j) {
    const auto& wj = wjobs[j];
    const auto& entry = corpus[wj.entry];
    const auto& a = entry.loaded.roles.at(wj.role);
    try {
      const auto r = wj.normal_core ? witness_normal_core(a) : witness_almost_abelian_cover(a);
      wresults[j] = witness_summary(r, entry.loaded.name, wj.role);
      wfailed[j] = !r.all_hold();
    } catch (const std::exception& e) {
      wresults[j] = {{"group", entry.loaded.name}, {"A", wj.role}, {"theorem", wj.normal_core ? "1.1" : "1.2"},
                     {"error", e.what()}};
      wfailed[j] = 1;
    }
  });
  const double witness_seconds = std::chrono::duration<double>(Clock::now() - wstart).count();

  Report report;
  json corpus_json = json::array();
  for (const auto& e : corpus)
    corpus_json.push_back({{"name", e.loaded.name},
                           {"order", e.loaded.group->order()},
                           {"classes", e.loaded.group->class_count()},
                           {"normal_subgroups", e.normals.size()}});

  json stmts = json::array();
  json per_statement_seconds = json::object();
  for (std::size_t s = 0; s < ids.size(); ++s) {
    std::size_t failures = 0;
    double seconds = 0;
    std::optional<Rational> min_slack;
    std::size_t tightest = 0;
    std::string tightest_desc;
    json records = json::array();
    for (std::size_t i = 0; i < per_statement; ++i) {
      const auto& r = results[s * per_statement + i];
      seconds += r.seconds;
      if (!r.result) {
        ++failures;
        records.push_back({{"instance_index", i}, {"error", r.error}, {"repro", repro_command(config, ids[s], i)}});
        continue;
      }
      if (!r.result->holds) {
        ++failures;
        records.push_back({{"instance_index", i},
                           {"instance", r.result->instance},
                           {"lhs", r.result->lhs.str()},
                           {"rhs", r.result->rhs.str()},
                           {"repro", repro_command(config, ids[s], i)}});
      }
      if (!min_slack || r.result->slack < *min_slack) {
        min_slack = r.result->slack;
        tightest = i;
        tightest_desc = r.result->instance;
      }
    }
    report.failures += failures;
    per_statement_seconds[ids[s]] = seconds;
    const auto& info = statement(ids[s]);
    json entry{{"id", ids[s]},
               {"inequality", info.inequality},
               {"instances", per_statement},
               {"failures", failures},
               {"failure_records", records}};
    if (min_slack) {
      entry["min_slack"] = min_slack->str();
      entry["tightest_instance"] = tightest_desc;
      entry["tightest_index"] = tightest;
    }
    stmts.push_back(entry);
  }
  for (auto f : wfailed) report.failures += std::size_t(f);

  json cfg{{"seed", config.seed},
           {"random_instances_per_statement", config.random_instances_per_statement},
           {"order_cap", config.order_cap},
           {"statements", ids},
           {"witnesses", config.witnesses}};
  report.payload = {{"schema", "1"},
                    {"config", cfg},
                    {"corpus", corpus_json},
                    {"statements", stmts},
                    {"witnesses", wresults},
                    {"failures", report.failures}};
  report.timing = {{"total_seconds", std::chrono::duration<double>(Clock::now() - start).count()},
                   {"witness_seconds", witness_seconds},
                   {"per_statement_seconds", per_statement_seconds}};
  return report;
}

}  // namespace approxcommute
