#include "approxcommute/witness.hpp"

#include <algorithm>

#include "approxcommute/error.hpp"
#include "approxcommute/probability.hpp"
#include "approxcommute/subgroups.hpp"

namespace approxcommute {

BoundCheck bound_check(std::string name, Rational lhs, Rational rhs) {
  const bool holds = lhs <= rhs;
  return BoundCheck{std::move(name), std::move(lhs), std::move(rhs), holds};
}

bool WitnessReport::all_hold() const {
  auto ok = [](const std::vector<BoundCheck>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const BoundCheck& c) { return c.holds; });
  };
  return ok(checks) && std::all_of(extractions.begin(), extractions.end(),
                                   [&](const CoreExtraction& e) { return ok(e.checks); });
}

namespace {

std::size_t max_class_size(const Subset& s, const Subset& u) {
  std::size_t m = 0;
  for (auto y : s) m = std::max(m, class_size_under(y, u));
  return m;
}

Rational count(std::size_t n) { return Rational(std::int64_t(n)); }

}  // namespace

CoreExtraction extract_core(const Subset& h, const Subset& u, const Rational& epsilon, std::size_t k_u) {
  require_same_group(h, u);
  require_symmetric_with_identity(h);
  require_symmetric_with_identity(u);
  if (epsilon <= Rational(0)) throw Error(ErrorKind::BadParams, "epsilon must be positive");
  if (k_u == 0) throw Error(ErrorKind::BadParams, "certificate constant must be positive");

  CoreExtraction core{h, u, epsilon, k_u, commuting_probability(h, u), Subset(h.group_ptr()),
                      Subset(h.group_ptr()), Subset(h.group_ptr()),
                      ApproxCertificate{Subset(h.group_ptr()), Subset(h.group_ptr())}};
  if (core.pr_h_u < epsilon)
    throw Error(ErrorKind::ProbabilityBelowEpsilon,
                "pr = " + core.pr_h_u.str() + " is below epsilon = " + epsilon.str());

  const Rational threshold = Rational(2 * std::int64_t(k_u)) / epsilon;
  SubsetBuilder xb(h.group_ptr());
  for (auto x : h)
    if (count(class_size_under(x, u)) <= threshold) xb.insert(x);
  core.x = xb.build();
  core.b = product(core.x, core.x);
  core.b_generated = subgroup_closure(core.b);
  core.b_cert = best_certificate(core.b);
  core.class_bound_m = max_class_size(core.b_generated, u);

  const Rational alpha = epsilon / Rational(2);
  const Rational base = Rational(std::int64_t(k_u)) / alpha;
  core.max_class_on_b = max_class_size(core.b, u);
  core.max_class_on_cover = max_class_size(core.b_cert.cover, u);
  core.chain_bound_b = pow(base, 2);
  core.chain_bound_cover = pow(base, 6);

  const auto x2 = core.b;
  const auto x3 = product(x2, core.x);
  const auto h2 = product(h, h);
  const auto h3 = product(h2, h);
  const Rational h_doubling = ratio(h2.size(), h.size());
  const Rational h_tripling = ratio(h3.size(), h.size());
  const auto b_cubed = product(product(core.b, core.b), core.b);

  auto& cs = core.checks;
  cs.push_back(bound_check("|X| >= (eps/2)|H|", alpha * count(h.size()), count(core.x.size())));
  cs.push_back(bound_check("|X^2| <= (|H^2|/|H|)/alpha |X|", count(x2.size()), h_doubling / alpha * count(core.x.size())));
  cs.push_back(bound_check("|X^3| <= (|H^3|/|H|)/alpha |X|", count(x3.size()), h_tripling / alpha * count(core.x.size())));
  cs.push_back(bound_check("X symmetric with 1", Rational(is_symmetric(core.x) && core.x.contains_identity() ? 0 : 1), 0));
  cs.push_back(bound_check("B^2 in E B", Rational(verify_certificate(core.b_cert) ? 0 : 1), 0));
  cs.push_back(bound_check("E in B^3", Rational(core.b_cert.cover.is_subset_of(b_cubed) ? 0 : 1), 0));
  cs.push_back(bound_check("max |y^U| on B <= (k_U/alpha)^2", count(core.max_class_on_b), core.chain_bound_b));
  cs.push_back(bound_check("max |e^U| on E <= (k_U/alpha)^6", count(core.max_class_on_cover), core.chain_bound_cover));
  return core;
}

namespace {

struct Prepared {
  ApproxCertificate cert;
  Rational pr;
  Rational epsilon;
};

Prepared prepare(const Subset& a, const Subset& partner, std::optional<Rational> epsilon,
                 std::optional<ApproxCertificate> cert) {
  require_symmetric_with_identity(a);
  Prepared p{cert ? *cert : best_certificate(a), commuting_probability(a, partner), {}};
  if (!(p.cert.base == a)) throw Error(ErrorKind::BadParams, "certificate is for a different set");
  p.epsilon = epsilon ? *epsilon : p.pr;
  if (p.epsilon <= Rational(0)) throw Error(ErrorKind::BadParams, "epsilon must be positive");
  if (p.pr < p.epsilon)
    throw Error(ErrorKind::ProbabilityBelowEpsilon, "pr = " + p.pr.str() + " is below epsilon = " + p.epsilon.str());
  return p;
}

}  // namespace

WitnessReport witness_normal_core(const Subset& a, std::optional<Rational> epsilon,
                                  std::optional<ApproxCertificate> cert) {
  const auto& gp = a.group_ptr();
  const auto whole = Subset::all(gp);
  auto prep = prepare(a, whole, epsilon, std::move(cert));
  const auto k = std::int64_t(prep.cert.k);

  WitnessReport r{.theorem = "1.1", .a = a, .a_cert = prep.cert};
  r.epsilon = prep.epsilon;
  r.pr_value = prep.pr;
  r.extractions.push_back(extract_core(a, whole, prep.epsilon, 1));
  const auto& core = r.extractions.back();
  const auto& b = core.b;

  std::vector<Subset> normals;
  try {
    normals = normal_subgroups(gp);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClassCountCapExceeded) throw;
    throw Error(ErrorKind::NormalEnumerationCapExceeded, e.what());
  }
  std::optional<Subset> best;
  std::size_t best_index = 0, best_comm = 0;
  for (const auto& t : normals) {
    const auto index = gp->order() / t.size();
    const auto comm = commutator_subgroup(t, core.b_generated).size();
    const bool better = !best || index * comm < best_index * best_comm ||
                        (index * comm == best_index * best_comm && index < best_index);
    if (better) best = t, best_index = index, best_comm = comm;
  }
  r.t = *best;
  r.index_g_t = best_index;
  r.commutator_size = best_comm;

  const auto a_and_b = (a & b).size();
  r.gamma = ratio(a_and_b, std::max(a.size(), b.size()));

  auto& cs = r.checks;
  cs.push_back(bound_check("A^2 in E A", Rational(verify_certificate(r.a_cert) ? 0 : 1), 0));
  cs.push_back(bound_check("gamma >= eps/(2K)", r.epsilon / Rational(2 * k), r.gamma));
  cs.push_back(bound_check("|A n B| >= (eps/2)|A|", r.epsilon / Rational(2) * count(a.size()), count(a_and_b)));
  cs.push_back(bound_check("T normal", Rational(is_normal_subgroup(*r.t) ? 0 : 1), 0));
  const auto recomputed = commutator_subgroup(*r.t, subgroup_closure(b)).size();
  cs.push_back(bound_check("|[T,<B>]| recomputed", count(recomputed), count(r.commutator_size)));
  cs.push_back(bound_check("|[T,<B>]| recomputed (reverse)", count(r.commutator_size), count(recomputed)));
  // Converse direction: pr(A,G) >= (|A n B|/|A|) / ([G:T] |[T,<B>]|).
  cs.push_back(bound_check("pr(A,G) >= gamma'/(nm)",
                           ratio(a_and_b, a.size()) / Rational(std::int64_t(r.index_g_t * r.commutator_size)),
                           r.pr_value));
  return r;
}

std::size_t left_coset_count(const Subset& a, const Subset& c) {
  require_same_group(a, c);
  const auto& g = a.group();
  SubsetBuilder seen(a.group_ptr());
  const auto cs = c.elements();
  std::size_t count = 0;
  for (auto x : a) {
    if (seen.contains(x)) continue;
    ++count;
    for (auto y : cs) seen.insert(g.mul(x, y));
  }
  return count;
}

WitnessReport witness_almost_abelian_cover(const Subset& a, std::optional<Rational> epsilon,
                                           std::optional<ApproxCertificate> cert) {
  const auto& gp = a.group_ptr();
  auto prep = prepare(a, a, epsilon, std::move(cert));
  const auto k = std::int64_t(prep.cert.k);

  WitnessReport r{.theorem = "1.2", .a = a, .a_cert = prep.cert};
  r.epsilon = prep.epsilon;
  r.pr_value = prep.pr;

  r.extractions.push_back(extract_core(a, a, prep.epsilon, prep.cert.k));
  const auto first = r.extractions.back();
  // B must satisfy |B^2| <= K~|B| and |X^2| <= K~|X|.
  r.k_tilde = std::max(Rational(std::int64_t(first.b_cert.k)), ratio(first.b.size(), first.x.size()));
  r.eta = Rational(1) / (r.k_tilde * count(first.class_bound_m));
  const auto pr_b = commuting_probability(first.b, first.b_generated);

  r.extractions.push_back(extract_core(first.b, first.b_generated, r.eta, 1));
  const auto& second = r.extractions.back();
  r.y = second.x;
  r.c = subgroup_closure(*r.y);
  r.c_prime_size = commutator_subgroup(*r.c, *r.c).size();

  const auto a2 = product(a, a);
  const auto c_and_a2 = (*r.c & a2).size();
  r.gamma = ratio(c_and_a2, a.size());
  r.gamma_bound = r.epsilon * r.eta / Rational(4);

  r.cover_f = ruzsa_cover(a, *r.y);
  r.coset_count = left_coset_count(a, *r.c);
  const auto ay = product(a, *r.y);
  const auto k2 = Rational(k * k);

  auto& cs = r.checks;
  cs.push_back(bound_check("A^2 in E A", Rational(verify_certificate(r.a_cert) ? 0 : 1), 0));
  cs.push_back(bound_check("pr(B,<B>) >= eta", r.eta, pr_b));
  cs.push_back(bound_check("|Y| >= (eps eta/4)|A|", r.gamma_bound * count(a.size()), count(r.y->size())));
  cs.push_back(bound_check("|C n A^2| >= (eps eta/4)|A|", r.gamma_bound * count(a.size()), count(c_and_a2)));
  cs.push_back(bound_check("A in F Y Y^-1", Rational(covered_by_translates(a, *r.cover_f, *r.y) ? 0 : 1), 0));
  cs.push_back(bound_check("|F| <= |AY|/|Y|", count(r.cover_f->size()), ratio(ay.size(), r.y->size())));
  cs.push_back(bound_check("|F| <= 4K^2/(eps eta)", count(r.cover_f->size()), Rational(4) * k2 / (r.epsilon * r.eta)));
  cs.push_back(bound_check("cosets <= |F|", count(r.coset_count), count(r.cover_f->size())));
  cs.push_back(bound_check("cosets <= K^2/gamma", count(r.coset_count), k2 / r.gamma));
  cs.push_back(bound_check("cosets |C| >= |A|", count(a.size()), count(r.coset_count * r.c->size())));
  const auto c_prime = commutator_subgroup(*r.c, *r.c).size();
  cs.push_back(bound_check("|C'| recomputed", count(c_prime), count(r.c_prime_size)));
  // Converse direction: pr(A^2,A^2) >= gamma^2 / (K^4 |C'|).
  cs.push_back(bound_check("pr(A^2,A^2) >= gamma^2/(K^4 s)",
                           r.gamma * r.gamma / (k2 * k2 * count(r.c_prime_size)), commuting_probability(a2, a2)));
  (void)gp;
  return r;
}

ConjugateCover bounded_conjugate_cover(const Subset& a, const ApproxCertificate& cert,
                                       const std::vector<ElementId>& gs) {
  if (gs.size() > kMaxConjugateCoverElements)
    throw Error(ErrorKind::PowerCapExceeded, "at most " + std::to_string(kMaxConjugateCoverElements) + " elements");
  if (gs.empty()) throw Error(ErrorKind::BadParams, "need at least one element");
  require_symmetric_with_identity(a);
  const auto& g = a.group();
  for (auto x : gs)
    if (x >= g.order()) throw Error(ErrorKind::BadParams, "element outside the group");

  // Invariant: A is inside the union of D t for t in translates, with
  // D = C_{A^(2^j)}(g_1..g_j).
  Subset d = a;
  Subset ambient = a;  // A^(2^j)
  std::vector<ElementId> translates{Group::identity()};
  ConjugateCover out{a, {}, 1, false};
  for (std::size_t j = 0; j < gs.size(); ++j) {
    const auto gj = gs[j];
    // Representatives b with distinct g_j^b, least id first.
    std::vector<ElementId> reps;
    SubsetBuilder seen(a.group_ptr());
    for (auto b : d)
      if (seen.insert(g.conj(gj, b))) reps.push_back(b);
    ambient = product(ambient, ambient);
    const std::span<const ElementId> fixed(gs.data(), j + 1);
    d = centralizer_in(ambient, fixed);

    std::vector<ElementId> next;
    SubsetBuilder dedup(a.group_ptr());
    for (auto b : reps)
      for (auto t : translates)
        if (dedup.insert(g.mul(b, t))) next.push_back(g.mul(b, t));
    translates = std::move(next);

    BigInt factor = class_size_under(gj, a);
    for (std::size_t e = 1; e < (std::size_t{1} << j); ++e) factor *= cert.k;
    out.translate_bound *= factor;
  }
  std::sort(translates.begin(), translates.end());
  out.center_set = d;
  out.translates = translates;

  SubsetBuilder covered(a.group_ptr());
  for (auto t : out.translates) covered.merge(translate(t, d, Side::Right));
  out.verified = a.is_subset_of(covered.build()) && BigInt(out.translates.size()) <= out.translate_bound;
  return out;
}

}  // namespace approxcommute
