#include "approxcommute/statements.hpp"

#include <algorithm>
#include <functional>

#include "approxcommute/approx.hpp"
#include "approxcommute/error.hpp"
#include "approxcommute/probability.hpp"
#include "approxcommute/subgroups.hpp"

namespace approxcommute {

const Subset& Instance::set(const std::string& name) const {
  const auto it = sets.find(name);
  if (it == sets.end()) throw Error(ErrorKind::HypothesisViolated, "missing input set " + name);
  if (it->second.group_ptr() != group) throw Error(ErrorKind::HypothesisViolated, name + " lives in another group");
  return it->second;
}

const std::vector<StatementInfo>& statements() {
  static const std::vector<StatementInfo> registry{
      {"P2.1", "pr(A,G) <= (|A^5|/|A|) pr(AN/N,G/N) pr(A^4 n N,N)", {"A", "N"}},
      {"P2.2", "pr(A,A) <= (|A^3||A^5|/|A|^2) pr(AN/N,AN/N) pr(A^4 n N,A^2 n N)", {"A", "N"}},
      {"C2.3a", "pr(A,G) <= K^4 pr(AN/N,G/N) pr(A^4 n N,N)", {"A", "N"}},
      {"C2.3b", "pr(A,A) <= K^6 pr(AN/N,AN/N) pr(A^4 n N,A^2 n N)", {"A", "N"}},
      {"Sub-mono", "pr(H2,G) <= pr(H1,G) for subgroups H1 <= H2", {"H1", "H2"}},
      {"L2.5a", "|C_A(g)| |g^A| <= |A^2|", {"A", "g"}},
      {"L2.5b", "|A| <= |C_{A^2}(g)| |g^A|", {"A", "g"}},
      {"L2.6", "|g^(A^n)| <= K^(n-1) |g^A|", {"A", "g", "n"}},
      {"P2.7", "pr(A2,B)/(K K') <= pr(A1^2,B), K = |A1^2|/|A1|, K' = |A2^2|/|A2|", {"A1", "A2", "B"}},
      {"C2.8", "pr(A,B)/K <= pr(H,B) for a subgroup H inside A", {"A", "H", "B"}},
      {"P1.3", "gamma/(nm) <= pr(A,G), gamma = |A n B|/|A|, n = [G:T], m = |[T,<B>]|", {"A", "B", "T"}},
      {"P1.4", "gamma^2/(K^4 s) <= pr(A^2,A^2), gamma = |C n A^2|/|A|, s = |C'|", {"A", "C"}},
  };
  return registry;
}

const StatementInfo& statement(std::string_view id) {
  for (const auto& s : statements())
    if (s.id == id) return s;
  throw Error(ErrorKind::UnknownStatement, "no statement '" + std::string(id) + "'");
}

namespace {

[[noreturn]] void violated(std::string_view id, const std::string& why) {
  throw Error(ErrorKind::HypothesisViolated, std::string(id) + ": " + why);
}

Rational count(std::size_t n) { return Rational(std::int64_t(n)); }

void need_symmetric(std::string_view id, const Subset& a, const char* name, bool with_identity) {
  if (a.empty()) violated(id, std::string(name) + " is empty");
  if (!is_symmetric(a)) violated(id, std::string(name) + " is not symmetric");
  if (with_identity && !a.contains_identity()) violated(id, std::string(name) + " does not contain 1");
}

void need_subgroup(std::string_view id, const Subset& h, const char* name) {
  if (!is_subgroup(h)) violated(id, std::string(name) + " is not a subgroup");
}

ElementId need_element(std::string_view id, const Instance& in) {
  if (!in.element || *in.element >= in.group->order()) violated(id, "missing or invalid element g");
  return *in.element;
}

std::size_t certificate_constant(const Subset& a) { return best_certificate(a).k; }

struct QuotientTerms {
  Rational pr_bar_g;      // pr(AN/N, G/N)
  Rational pr_bar_bar;    // pr(AN/N, AN/N)
  Rational pr_a4n_n;      // pr(A^4 n N, N)
  Rational pr_a4n_a2n;    // pr(A^4 n N, A^2 n N)
  std::size_t a3 = 0, a5 = 0;
};

QuotientTerms quotient_terms(std::string_view id, const Subset& a, const Subset& n, bool self) {
  if (!is_normal_subgroup(n)) violated(id, "N is not a normal subgroup");
  const auto q = quotient(n);
  const auto bar = q.image(a);
  const auto a2 = product(a, a);
  const auto a3 = product(a2, a);
  const auto a4 = product(a2, a2);
  const auto a5 = product(a4, a);
  QuotientTerms t;
  t.a3 = a3.size();
  t.a5 = a5.size();
  if (self) {
    t.pr_bar_bar = commuting_probability(bar, bar);
    t.pr_a4n_a2n = commuting_probability(a4 & n, a2 & n);
  } else {
    t.pr_bar_g = commuting_probability(bar, Subset::all(q.target));
    t.pr_a4n_n = commuting_probability(a4 & n, n);
  }
  return t;
}

using Evaluator = std::function<std::pair<Rational, Rational>(std::string_view, const Instance&)>;

std::pair<Rational, Rational> eval_p21(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", false);
  const auto t = quotient_terms(id, a, in.set("N"), false);
  const auto all = Subset::all(in.group);
  return {commuting_probability(a, all), ratio(t.a5, a.size()) * t.pr_bar_g * t.pr_a4n_n};
}

std::pair<Rational, Rational> eval_p22(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", false);
  const auto t = quotient_terms(id, a, in.set("N"), true);
  const Rational growth = count(t.a3) * count(t.a5) / (count(a.size()) * count(a.size()));
  return {commuting_probability(a, a), growth * t.pr_bar_bar * t.pr_a4n_a2n};
}

std::pair<Rational, Rational> eval_c23a(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", true);
  const auto t = quotient_terms(id, a, in.set("N"), false);
  const auto k = count(certificate_constant(a));
  return {commuting_probability(a, Subset::all(in.group)), pow(k, 4) * t.pr_bar_g * t.pr_a4n_n};
}

std::pair<Rational, Rational> eval_c23b(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", true);
  const auto t = quotient_terms(id, a, in.set("N"), true);
  const auto k = count(certificate_constant(a));
  return {commuting_probability(a, a), pow(k, 6) * t.pr_bar_bar * t.pr_a4n_a2n};
}

std::pair<Rational, Rational> eval_sub_mono(std::string_view id, const Instance& in) {
  const auto& h1 = in.set("H1");
  const auto& h2 = in.set("H2");
  need_subgroup(id, h1, "H1");
  need_subgroup(id, h2, "H2");
  if (!h1.is_subset_of(h2)) violated(id, "H1 is not contained in H2");
  const auto all = Subset::all(in.group);
  return {commuting_probability(h2, all), commuting_probability(h1, all)};
}

std::pair<Rational, Rational> eval_l25a(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", false);
  const auto g = need_element(id, in);
  return {count(centralizer_in(a, g).size() * class_size_under(g, a)), count(product(a, a).size())};
}

std::pair<Rational, Rational> eval_l25b(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", false);
  const auto g = need_element(id, in);
  return {count(a.size()), count(centralizer_in(product(a, a), g).size() * class_size_under(g, a))};
}

std::pair<Rational, Rational> eval_l26(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  need_symmetric(id, a, "A", true);
  const auto g = need_element(id, in);
  if (in.exponent < 1) violated(id, "n must be positive");
  const auto k = count(certificate_constant(a));
  return {count(class_size_under(g, power(a, in.exponent))), pow(k, in.exponent - 1) * count(class_size_under(g, a))};
}

std::pair<Rational, Rational> eval_p27(std::string_view id, const Instance& in) {
  const auto& a1 = in.set("A1");
  const auto& a2 = in.set("A2");
  const auto& b = in.set("B");
  need_symmetric(id, a1, "A1", false);
  need_symmetric(id, a2, "A2", false);
  if (!a1.is_subset_of(a2)) violated(id, "A1 is not contained in A2");
  if (b.empty()) violated(id, "B is empty");
  const auto a1sq = product(a1, a1);
  const Rational k1 = ratio(a1sq.size(), a1.size());
  const Rational k2 = ratio(product(a2, a2).size(), a2.size());
  return {commuting_probability(a2, b) / (k1 * k2), commuting_probability(a1sq, b)};
}

std::pair<Rational, Rational> eval_c28(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  const auto& h = in.set("H");
  const auto& b = in.set("B");
  need_symmetric(id, a, "A", true);
  need_subgroup(id, h, "H");
  if (!h.is_subset_of(a)) violated(id, "H is not contained in A");
  if (b.empty()) violated(id, "B is empty");
  const auto k = count(certificate_constant(a));
  return {commuting_probability(a, b) / k, commuting_probability(h, b)};
}

std::pair<Rational, Rational> eval_p13(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  const auto& b = in.set("B");
  const auto& t = in.set("T");
  if (a.empty()) violated(id, "A is empty");
  need_subgroup(id, t, "T");
  const Rational gamma = ratio((a & b).size(), a.size());
  const auto n = in.group->order() / t.size();
  const auto m = commutator_subgroup(t, subgroup_closure(b)).size();
  return {gamma / count(n * m), commuting_probability(a, Subset::all(in.group))};
}

std::pair<Rational, Rational> eval_p14(std::string_view id, const Instance& in) {
  const auto& a = in.set("A");
  const auto& c = in.set("C");
  need_symmetric(id, a, "A", true);
  need_subgroup(id, c, "C");
  const auto a2 = product(a, a);
  const Rational gamma = ratio((c & a2).size(), a.size());
  const auto s = commutator_subgroup(c, c).size();
  const auto k = count(certificate_constant(a));
  return {gamma * gamma / (pow(k, 4) * count(s)), commuting_probability(a2, a2)};
}

const std::map<std::string, Evaluator, std::less<>>& evaluators() {
  static const std::map<std::string, Evaluator, std::less<>> table{
      {"P2.1", eval_p21},   {"P2.2", eval_p22}, {"C2.3a", eval_c23a}, {"C2.3b", eval_c23b},
      {"Sub-mono", eval_sub_mono}, {"L2.5a", eval_l25a}, {"L2.5b", eval_l25b}, {"L2.6", eval_l26},
      {"P2.7", eval_p27},   {"C2.8", eval_c28}, {"P1.3", eval_p13},   {"P1.4", eval_p14},
  };
  return table;
}

}  // namespace

CheckResult check(std::string_view statement_id, const Instance& instance) {
  const auto& info = statement(statement_id);
  const auto it = evaluators().find(statement_id);
  if (!instance.group) violated(statement_id, "instance has no group");
  auto [lhs, rhs] = it->second(statement_id, instance);
  const bool holds = lhs <= rhs;
  auto slack = rhs - lhs;
  return CheckResult{info.id, instance.description, std::move(lhs), std::move(rhs), holds, std::move(slack)};
}

}  // namespace approxcommute
