// Copyright 2026 The capax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One checker per inequality. Each checker evaluates the hypotheses it
// depends on, computes both sides with the exact evaluators, and returns an
// InequalityReport. Hypothesis failures are recorded, never thrown: the
// falsifier needs both sides of scenarios that violate a hypothesis.
//
// Orientation: every report reads lhs <= rhs. Inequalities naturally stated
// as lhs >= rhs are stored with their sides swapped and `flipped` set.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/dependence.hpp"
#include "capax/integrals.hpp"
#include "capax/operators.hpp"

namespace capax {

// Relative tolerance of every inequality verdict.
inline constexpr double kInequalityTol = 1e-9;

struct HypothesisCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct InequalityReport {
  std::string theorem;
  std::vector<HypothesisCheck> hypotheses;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
  double slack = 0.0;  // rhs - lhs
  bool flipped = false;
  std::optional<std::string> degenerate;
  // Named intermediate values (integrals, constants K, d, C, ...).
  std::vector<std::pair<std::string, double>> quantities;
  // Informational checks that do not gate the verdict (e.g. equality conditions).
  std::vector<HypothesisCheck> notes;
  std::vector<InequalityReport> sub_reports;

  bool hypotheses_hold() const {
    if (degenerate) return false;
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.holds; });
  }

  const HypothesisCheck* hypothesis(std::string_view name) const {
    for (const auto& h : hypotheses)
      if (h.name == name) return &h;
    return nullptr;
  }

  std::optional<double> quantity(std::string_view name) const {
    for (const auto& [k, v] : quantities)
      if (k == name) return v;
    return std::nullopt;
  }

  // Relative violation: slack / max(1, |rhs|); negative means violated.
  double relative_slack() const {
    const double scale = std::isinf(rhs) ? 1.0 : std::max(1.0, std::abs(rhs));
    return slack / scale;
  }
};

namespace theorem {
inline constexpr std::string_view kJensenSugeno = "jensen-sugeno";
inline constexpr std::string_view kChebyshevSugeno = "chebyshev-sugeno";
inline constexpr std::string_view kCarlsonSugeno = "carlson-sugeno";
inline constexpr std::string_view kXuOuyang = "xu-ouyang";
inline constexpr std::string_view kWang = "wang";
inline constexpr std::string_view kShilkretExample = "shilkret-example";
inline constexpr std::string_view kLukasiewiczExample = "lukasiewicz-example";
inline constexpr std::string_view kJensenChoquet = "jensen-choquet";
inline constexpr std::string_view kChebyshevChoquet = "chebyshev-choquet";
inline constexpr std::string_view kCarlsonChoquetComonotone = "carlson-choquet-comonotone";
inline constexpr std::string_view kOuyangChoquet = "ouyang-choquet";
inline constexpr std::string_view kSharpness = "sharpness";
inline constexpr std::string_view kHolderChoquet = "holder-choquet";
inline constexpr std::string_view kCarlsonChoquetSubmodular = "carlson-choquet-submodular";
inline constexpr std::string_view kCarlsonChoquetSubadditive = "carlson-choquet-subadditive";
inline constexpr std::string_view kShiHolder = "shi-holder";
inline constexpr std::string_view kShiSum = "shi-sum";
}  // namespace theorem

namespace detail {

inline void finalize(InequalityReport& r) {
  r.slack = margin(r.rhs, r.lhs);
  const double scale = std::isinf(r.rhs) ? 1.0 : std::max(1.0, std::abs(r.rhs));
  r.holds = !std::isnan(r.slack) && r.slack >= -kInequalityTol * scale;
}

inline InequalityReport make_report(std::string_view id) {
  InequalityReport r;
  r.theorem = std::string(id);
  return r;
}

inline std::string describe(const ConditionReport& c) {
  std::string s = std::string(to_string(c.condition)) + " sampler on " + std::string(to_string(c.domain)) +
                  " grid " + std::to_string(c.grid_resolution) + " + " + std::to_string(c.random_points) +
                  " random (seed " + std::to_string(c.seed) + "): " + std::to_string(c.violation_count) +
                  " violations";
  if (c.trivially_satisfied) s += " (s = 1, trivially satisfied)";
  return s;
}

inline HypothesisCheck from_condition(std::string name, const ConditionReport& c) {
  return {std::move(name), c.holds, describe(c)};
}

inline HypothesisCheck from_dependence(std::string name, const DependenceReport& d) {
  std::string detail;
  if (d.kind == DependenceReport::Kind::Comonotone) {
    detail = d.holds ? "comonotone"
                     : "discordant points (" + std::to_string(d.witness_points->first) + ", " +
                           std::to_string(d.witness_points->second) + ")";
  } else {
    detail = d.holds ? "positively dependent w.r.t. " + d.op
                     : "violated at levels (" + std::to_string(d.witness_levels->first) + ", " +
                           std::to_string(d.witness_levels->second) + ") w.r.t. " + d.op;
  }
  return {std::move(name), d.holds, std::move(detail)};
}

inline HypothesisCheck from_property(const PropertyReport& p) {
  return {std::string(to_string(p.property)), p.holds,
          std::string(to_string(p.mode)) + " check over " + std::to_string(p.pairs_checked) +
              " pairs, worst slack " + std::to_string(p.slack)};
}

// Power condition for ∘ at every exponent > 1 in `exps`.
inline HypothesisCheck power_hypothesis(const AggOperator& op, std::initializer_list<double> exps,
                                        ConditionCache* cache) {
  HypothesisCheck h{"power_condition", true, ""};
  std::vector<double> seen;
  for (double s : exps) {
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
    seen.push_back(s);
    const auto rep = cache ? cache->power(op, s) : check_power_condition(op, {s});
    h.holds = h.holds && rep.holds;
    if (!h.detail.empty()) h.detail += "; ";
    h.detail += op.name() + " at s = " + std::to_string(s) + ": " + describe(rep);
  }
  return h;
}

inline HypothesisCheck chebyshev_hypothesis(const OperatorSystem& sys, ConditionCache* cache) {
  return from_condition("chebyshev_condition", cache ? cache->chebyshev(sys) : check_chebyshev_condition(sys));
}

inline Subset all_points(const Capacity& c) { return Subset::full(c.size()); }

inline HypothesisCheck measure_hypothesis(double mu_a) {
  const bool ok = mu_a > 0.0 && !std::isinf(mu_a);
  return {"measure_finite_positive", ok, "mu(A) = " + std::to_string(mu_a)};
}

inline SampleFunction coordinate_function(const Capacity& c) {
  if (!c.space().has_coords()) throw DomainError("checker requires a coordinate-bearing ground space");
  return SampleFunction(c.space().coords());
}

inline double conjugate(double p) { return p / (p - 1.0); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Generalized Sugeno integral

/// ∫_A f^s ∘ μ ≥ (∫_A f ∘ μ)^s, assuming a^s ∘ b ≥ (a ∘ b)^s. For ∘ = min the
/// bound ∫_A f dμ ≤ 1 is an alternative sufficient hypothesis.
inline InequalityReport jensen_sugeno(const SampleFunction& f, const Capacity& c, const Subset& a,
                                      const AggOperator& op, double s, ConditionCache* cache = nullptr) {
  if (!(s >= 1.0) || std::isinf(s)) throw DomainError("jensen_sugeno: need finite s >= 1");
  auto r = detail::make_report(theorem::kJensenSugeno);
  const double base = generalized_sugeno(f, c, a, op).value;
  const double powered = generalized_sugeno(f.pow(s), c, a, op).value;
  auto hyp = detail::power_hypothesis(op, {s}, cache);
  if (op.kind() == OpKind::Min) {
    const bool bound = base <= 1.0;
    hyp.detail += "; Sugeno integral bound " + std::to_string(base) + (bound ? " <= 1" : " > 1");
    hyp.holds = hyp.holds || bound;
  }
  r.hypotheses.push_back(std::move(hyp));
  r.flipped = true;
  r.lhs = ext_pow(base, s);
  r.rhs = powered;
  r.quantities = {{"integral_f", base}, {"integral_f_pow_s", powered}};
  detail::finalize(r);
  return r;
}

/// ∫_{A∩B} (f1 □ f2) ∘ μ ≥ (∫_A f1 ∘ μ) ⊲ (∫_B f2 ∘ μ) for f1|_A, f2|_B
/// positively dependent w.r.t. ▵, assuming (a□b)∘(c▵d) ≥ (a∘c)⊲(b∘d).
inline InequalityReport chebyshev_sugeno(const OperatorSystem& sys, const SampleFunction& f1,
                                         const SampleFunction& f2, const Subset& a, const Subset& b,
                                         const Capacity& c, ConditionCache* cache = nullptr) {
  sys.validate();
  auto r = detail::make_report(theorem::kChebyshevSugeno);
  r.hypotheses.push_back(detail::chebyshev_hypothesis(sys, cache));
  r.hypotheses.push_back(
      detail::from_dependence("positive_dependence", check_positive_dependence(f1, a, f2, b, c, sys.tri)));
  const double i1 = generalized_sugeno(f1, c, a, sys.circ).value;
  const double i2 = generalized_sugeno(f2, c, b, sys.circ).value;
  const double joint = generalized_sugeno(f1.combine(f2, sys.box), c, a & b, sys.circ).value;
  r.flipped = true;
  r.lhs = sys.lhd(i1, i2);
  r.rhs = joint;
  r.quantities = {{"integral_f1", i1}, {"integral_f2", i2}, {"integral_joint", joint}};
  detail::finalize(r);
  return r;
}

/// [(∫_A f∘μ) ⊲ (∫_B g∘μ)]^r ⋆ [(∫_A f∘μ) ⊲ (∫_B h∘μ)]^s
///   ≤ (∫_{A∩B} (f□g)^p ∘ μ)^{r/p} ⋆ (∫_{A∩B} (f□h)^q ∘ μ)^{s/q}
inline InequalityReport carlson_sugeno(const OperatorSystem& sys, const SampleFunction& f, const SampleFunction& g,
                                       const SampleFunction& h, const Subset& a, const Subset& b,
                                       const Capacity& c, ConditionCache* cache = nullptr) {
  sys.validate();
  auto r = detail::make_report(theorem::kCarlsonSugeno);
  r.hypotheses.push_back(detail::power_hypothesis(sys.circ, {sys.p, sys.q}, cache));
  r.hypotheses.push_back(detail::chebyshev_hypothesis(sys, cache));
  r.hypotheses.push_back(
      detail::from_dependence("positive_dependence_g", check_positive_dependence(f, a, g, b, c, sys.tri)));
  r.hypotheses.push_back(
      detail::from_dependence("positive_dependence_h", check_positive_dependence(f, a, h, b, c, sys.tri)));
  r.hypotheses.push_back({"left_continuous_lhd", sys.lhd.left_continuous(), "declared flag of " + sys.lhd.name()});

  const double F = generalized_sugeno(f, c, a, sys.circ).value;
  const double G = generalized_sugeno(g, c, b, sys.circ).value;
  const double H = generalized_sugeno(h, c, b, sys.circ).value;
  const Subset ab = a & b;
  const double P = generalized_sugeno(f.combine(g, sys.box).pow(sys.p), c, ab, sys.circ).value;
  const double Q = generalized_sugeno(f.combine(h, sys.box).pow(sys.q), c, ab, sys.circ).value;
  r.lhs = sys.star(ext_pow(sys.lhd(F, G), sys.r), ext_pow(sys.lhd(F, H), sys.s));
  r.rhs = sys.star(ext_pow(P, sys.r / sys.p), ext_pow(Q, sys.s / sys.q));
  r.quantities = {{"F", F}, {"G", G}, {"H", H}, {"P", P}, {"Q", Q}};
  detail::finalize(r);
  return r;
}

namespace detail {

struct SugenoTriple {
  double F, G, H, P, Q;
};

// Sugeno integrals over A of f, g, h, (fg)^p and (fh)^q, with the
// positive-dependence (w.r.t. min) and power hypotheses they rely on.
inline SugenoTriple sugeno_triple(InequalityReport& r, const SampleFunction& f, const SampleFunction& g,
                                  const SampleFunction& h, const Subset& a, const Capacity& c, double p, double q,
                                  ConditionCache* cache) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("Sugeno Carlson checker: need p, q >= 1");
  const Range y = join(join(f.range(), g.range()), join(h.range(), c.range()));
  const auto mn = AggOperator::min(y);
  r.hypotheses.push_back(power_hypothesis(mn, {p, q}, cache));
  r.hypotheses.push_back(from_dependence("positive_dependence_g", check_positive_dependence(f, a, g, a, c, mn)));
  r.hypotheses.push_back(from_dependence("positive_dependence_h", check_positive_dependence(f, a, h, a, c, mn)));
  SugenoTriple t{};
  t.F = sugeno(f, c, a).value;
  t.G = sugeno(g, c, a).value;
  t.H = sugeno(h, c, a).value;
  t.P = sugeno((f * g).pow(p), c, a).value;
  t.Q = sugeno((f * h).pow(q), c, a).value;
  r.quantities = {{"F", t.F}, {"G", t.G}, {"H", t.H}, {"P", t.P}, {"Q", t.Q}};
  return t;
}

}  // namespace detail

/// ∫_A f dμ ≤ C^{-1/2} (∫_A f^p g^p dμ)^{1/(2p)} (∫_A f^q h^q dμ)^{1/(2q)},
/// C = (∫_A g dμ)(∫_A h dμ), for Sugeno integrals.
inline InequalityReport carlson_sugeno_xu(const SampleFunction& f, const SampleFunction& g, const SampleFunction& h,
                                          const Subset& a, const Capacity& c, double p, double q,
                                          ConditionCache* cache = nullptr) {
  auto r = detail::make_report(theorem::kXuOuyang);
  const auto t = detail::sugeno_triple(r, f, g, h, a, c, p, q, cache);
  const double C = t.G * t.H;
  r.quantities.emplace_back("C", C);
  r.lhs = t.F;
  if (!(C > 0.0)) {
    r.degenerate = "C = 0: a normalizing Sugeno integral vanishes";
    r.rhs = kInf;
  } else {
    r.rhs = ext_pow(t.P, 1.0 / (2.0 * p)) * ext_pow(t.Q, 1.0 / (2.0 * q)) / std::sqrt(C);
  }
  detail::finalize(r);
  return r;
}

/// ∫_A f dμ ≤ K^{-1} (∫_A f^p g^p dμ)^{1/(p+q)} (∫_A f^q h^q dμ)^{1/(p+q)},
/// K = (∫_A g dμ)^{p/(p+q)} (∫_A h dμ)^{q/(p+q)}, for Sugeno integrals.
inline InequalityReport carlson_sugeno_wang(const SampleFunction& f, const SampleFunction& g,
                                            const SampleFunction& h, const Subset& a, const Capacity& c, double p,
                                            double q, ConditionCache* cache = nullptr) {
  auto r = detail::make_report(theorem::kWang);
  const auto t = detail::sugeno_triple(r, f, g, h, a, c, p, q, cache);
  const double K = ext_pow(t.G, p / (p + q)) * ext_pow(t.H, q / (p + q));
  r.quantities.emplace_back("K", K);
  r.lhs = t.F;
  if (!(K > 0.0)) {
    r.degenerate = "K = 0: a normalizing Sugeno integral vanishes";
    r.rhs = kInf;
  } else {
    r.rhs = ext_pow(t.P, 1.0 / (p + q)) * ext_pow(t.Q, 1.0 / (p + q)) / K;
  }
  detail::finalize(r);
  return r;
}

/// Shilkret integrals N of a nondecreasing f on a coordinate space:
/// N(f) ≤ K^{-1/2} N(f^2)^{1/4} N(x^2 f^2)^{1/4}, K = μ(A) N(x).
inline InequalityReport shilkret_carlson_example(const SampleFunction& f, const Subset& a, const Capacity& c,
                                                 ConditionCache* cache = nullptr) {
  const auto x = detail::coordinate_function(c);
  const auto& coords = c.space().coords();
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] > f[i + 1] && coords[i] < coords[i + 1])
      throw DomainError("shilkret_carlson_example: f must be nondecreasing along the coordinates");
  auto r = detail::make_report(theorem::kShilkretExample);
  const Range y = join(join(f.range(), x.range()), c.range());
  const auto pr = AggOperator::product(y), mn = AggOperator::min(y);
  const OperatorSystem sys{"shilkret", pr, pr, pr, pr, mn};
  r.hypotheses.push_back(detail::power_hypothesis(pr, {2.0}, cache));
  r.hypotheses.push_back(detail::chebyshev_hypothesis(sys, cache));
  r.hypotheses.push_back(detail::from_dependence(
      "positive_dependence_g", check_positive_dependence(f, a, SampleFunction::constant(f.size(), 1.0), a, c, mn)));
  r.hypotheses.push_back(
      detail::from_dependence("positive_dependence_h", check_positive_dependence(f, a, x, a, c, mn)));
  const double N = shilkret(f, c, a).value;
  const double Nx = shilkret(x, c, a).value;
  const double N2 = shilkret(f.pow(2.0), c, a).value;
  const double Nx2 = shilkret((x * f).pow(2.0), c, a).value;
  const double K = c(a) * Nx;
  r.quantities = {{"N_f", N}, {"N_x", Nx}, {"N_f2", N2}, {"N_x2f2", Nx2}, {"K", K}};
  r.lhs = N;
  if (!(K > 0.0)) {
    r.degenerate = "K = mu(A) N(x) = 0";
    r.rhs = kInf;
  } else {
    r.rhs = ext_pow(N2, 0.25) * ext_pow(Nx2, 0.25) / std::sqrt(K);
  }
  detail::finalize(r);
  return r;
}

/// (N(f) Ł 1)(N(f) Ł N(h)) ≤ N(f^p)^{1/p} N((f Ł h)^q)^{1/q} with N the
/// Shilkret integral w.r.t. a probability P on [0,1]-valued f, h.
inline InequalityReport lukasiewicz_carlson_example(const SampleFunction& f, const SampleFunction& h,
                                                    const Capacity& P, double p, double q,
                                                    ConditionCache* cache = nullptr) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("lukasiewicz_carlson_example: need p, q >= 1");
  auto r = detail::make_report(theorem::kLukasiewiczExample);
  const auto sys = lukasiewicz_product_system();
  const auto X = detail::all_points(P);
  const auto one = SampleFunction::constant(f.size(), 1.0);
  r.hypotheses.push_back(detail::power_hypothesis(sys.circ, {p, q}, cache));
  r.hypotheses.push_back(detail::chebyshev_hypothesis(sys, cache));
  r.hypotheses.push_back(
      detail::from_dependence("positive_dependence_g", check_positive_dependence(f, X, one, X, P, sys.tri)));
  r.hypotheses.push_back(
      detail::from_dependence("positive_dependence_h", check_positive_dependence(f, X, h, X, P, sys.tri)));
  const double total = P.total();
  r.hypotheses.push_back({"probability", std::abs(total - 1.0) <= 1e-12, "P(X) = " + std::to_string(total)});
  const double Nf = shilkret(f, P, X).value;
  const double Nh = shilkret(h, P, X).value;
  const double Nfp = shilkret(f.pow(p), P, X).value;
  const double Nfhq = shilkret(f.combine(h, sys.box).pow(q), P, X).value;
  const auto& lk = sys.lhd;
  r.lhs = lk(Nf, 1.0) * lk(Nf, Nh);
  r.rhs = ext_pow(Nfp, 1.0 / p) * ext_pow(Nfhq, 1.0 / q);
  r.quantities = {{"N_f", Nf}, {"N_h", Nh}, {"N_fp", Nfp}, {"N_fLh_q", Nfhq}};
  detail::finalize(r);
  return r;
}

inline InequalityReport lukasiewicz_carlson_example(UnitMap phi, UnitMap psi, std::size_t n, double p, double q,
                                                    ConditionCache* cache = nullptr) {
  const auto ex = make_uniform_example(phi, psi, n);
  return lukasiewicz_carlson_example(ex.f, ex.h, ex.P, p, q, cache);
}

// ---------------------------------------------------------------------------
// Choquet integral

/// (∫ f dm)^e ≤ ∫ f^e dm for m(B) = μ(A∩B)/μ(A), e ≥ 1.
inline InequalityReport jensen_choquet(const SampleFunction& f, const Capacity& c, const Subset& a,
                                       double exponent) {
  if (!(exponent >= 1.0) || std::isinf(exponent)) throw DomainError("jensen_choquet: need finite exponent >= 1");
  auto r = detail::make_report(theorem::kJensenChoquet);
  const double mu_a = c(a);
  r.hypotheses.push_back(detail::measure_hypothesis(mu_a));
  if (!r.hypotheses.back().holds) {
    r.degenerate = "mu(A) must lie in (0, inf)";
    detail::finalize(r);
    return r;
  }
  const auto m = normalize(c, a);
  const auto X = detail::all_points(c);
  const double I = choquet(f, m, X).value;
  r.lhs = ext_pow(I, exponent);
  r.rhs = choquet(f.pow(exponent), m, X).value;
  r.quantities = {{"integral_f_dm", I}};
  detail::finalize(r);
  return r;
}

/// ∫ fg dm ≥ ∫ f dm ∫ g dm for comonotone f, g and m(B) = μ(A∩B)/μ(A).
inline InequalityReport chebyshev_choquet(const SampleFunction& f, const SampleFunction& g, const Capacity& c,
                                          const Subset& a) {
  auto r = detail::make_report(theorem::kChebyshevChoquet);
  r.hypotheses.push_back(detail::from_dependence("comonotone", is_comonotone(f, g, a)));
  const double mu_a = c(a);
  r.hypotheses.push_back(detail::measure_hypothesis(mu_a));
  r.flipped = true;
  if (!r.hypotheses.back().holds) {
    r.degenerate = "mu(A) must lie in (0, inf)";
    detail::finalize(r);
    return r;
  }
  const auto m = normalize(c, a);
  const auto X = detail::all_points(c);
  const double If = choquet(f, m, X).value, Ig = choquet(g, m, X).value;
  r.lhs = ext_mul(If, Ig);
  r.rhs = choquet(f * g, m, X).value;
  r.quantities = {{"integral_f_dm", If}, {"integral_g_dm", Ig}};
  detail::finalize(r);
  return r;
}

/// (∫_A f dμ)^2 ≤ μ(A)^{3-(1/p+1/q)} / ∫_A h dμ (∫_A f^p dμ)^{1/p} (∫_A f^q h^q dμ)^{1/q}
/// for comonotone f, h.
inline InequalityReport ouyang_choquet(const SampleFunction& f, const SampleFunction& h, const Subset& a,
                                       const Capacity& c, double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("ouyang_choquet: need p, q >= 1");
  auto r = detail::make_report(theorem::kOuyangChoquet);
  r.hypotheses.push_back(detail::from_dependence("comonotone_h", is_comonotone(f, h, a)));
  const double mu_a = c(a);
  r.hypotheses.push_back(detail::measure_hypothesis(mu_a));
  const double F = choquet(f, c, a).value, H = choquet(h, c, a).value;
  const double P = choquet(f.pow(p), c, a).value, Q = choquet((f * h).pow(q), c, a).value;
  r.quantities = {{"F", F}, {"H", H}, {"P", P}, {"Q", Q}};
  r.lhs = ext_mul(F, F);
  if (!r.hypotheses.back().holds || !(H > 0.0)) {
    r.degenerate = !(H > 0.0) ? "integral of h vanishes" : "mu(A) must lie in (0, inf)";
    r.rhs = kInf;
  } else {
    r.rhs = ext_pow(mu_a, 3.0 - (1.0 / p + 1.0 / q)) / H * ext_pow(P, 1.0 / p) * ext_pow(Q, 1.0 / q);
  }
  detail::finalize(r);
  return r;
}

/// ∫_A f dμ ≤ K μ(A)^d (∫_A f^p g^p dμ)^{r/(p(r+s))} (∫_A f^q h^q dμ)^{s/(q(r+s))}
/// for comonotone pairs (f, g), (f, h), with
/// K = (∫_A g dμ)^{-r/(r+s)} (∫_A h dμ)^{-s/(r+s)} and d = 2 - (r/p + s/q)/(r+s).
inline InequalityReport carlson_choquet_comonotone(const SampleFunction& f, const SampleFunction& g,
                                                   const SampleFunction& h, const Subset& a, const Capacity& c,
                                                   double p, double q, double r_exp, double s_exp) {
  if (!(p >= 1.0) || !(q >= 1.0) || !(r_exp > 0.0) || !(s_exp > 0.0))
    throw DomainError("carlson_choquet_comonotone: need p, q >= 1 and r, s > 0");
  auto r = detail::make_report(theorem::kCarlsonChoquetComonotone);
  r.hypotheses.push_back(detail::from_dependence("comonotone_g", is_comonotone(f, g, a)));
  r.hypotheses.push_back(detail::from_dependence("comonotone_h", is_comonotone(f, h, a)));
  const double mu_a = c(a);
  r.hypotheses.push_back(detail::measure_hypothesis(mu_a));
  const double F = choquet(f, c, a).value;
  r.hypotheses.push_back({"integrable", !std::isinf(F), "integral of f on A = " + std::to_string(F)});
  const double G = choquet(g, c, a).value, H = choquet(h, c, a).value;
  const double P = choquet((f * g).pow(p), c, a).value;
  const double Q = choquet((f * h).pow(q), c, a).value;
  const double rs = r_exp + s_exp;
  const double d = 2.0 - (r_exp / p + s_exp / q) / rs;
  r.lhs = F;
  r.quantities = {{"F", F}, {"G", G}, {"H", H}, {"P", P}, {"Q", Q}, {"d", d}};
  if (!r.hypotheses[2].holds) {
    r.degenerate = "mu(A) must lie in (0, inf)";
    r.rhs = kInf;
  } else if (!(G > 0.0) || !(H > 0.0)) {
    r.degenerate = "integral of g or h vanishes; K undefined";
    r.rhs = kInf;
  } else {
    const double K = ext_pow(G, -r_exp / rs) * ext_pow(H, -s_exp / rs);
    r.quantities.emplace_back("K", K);
    r.rhs = K * ext_pow(mu_a, d) * ext_mul(ext_pow(P, r_exp / (p * rs)), ext_pow(Q, s_exp / (q * rs)));
  }
  detail::finalize(r);
  const bool g_is_one = std::all_of(g.values().begin(), g.values().end(), [](double v) { return v == 1.0; });
  if (g_is_one && r_exp == s_exp) r.sub_reports.push_back(ouyang_choquet(f, h, a, c, p, q));
  return r;
}

/// Under μ(B) = 1 for B ≠ ∅ every Choquet integral is a supremum s(·) on A and
/// the comonotone Carlson bound reads
///   s(f) ≤ s(g)^{-r/(r+s)} s(h)^{-s/(r+s)} s(fg)^{r/(r+s)} s(fh)^{s/(r+s)},
/// with equality for comonotone pairs since s(φψ) = s(φ)s(ψ).
inline InequalityReport sharpness_demo(const SampleFunction& f, const SampleFunction& g, const SampleFunction& h,
                                       const Subset& a, double r_exp, double s_exp) {
  if (!(r_exp > 0.0) || !(s_exp > 0.0)) throw DomainError("sharpness_demo: need r, s > 0");
  auto r = detail::make_report(theorem::kSharpness);
  const auto sup = make_sup_capacity(f.size());
  r.hypotheses.push_back(detail::from_dependence("comonotone_g", is_comonotone(f, g, a)));
  r.hypotheses.push_back(detail::from_dependence("comonotone_h", is_comonotone(f, h, a)));
  const double sf = choquet(f, sup, a).value, sg = choquet(g, sup, a).value, sh = choquet(h, sup, a).value;
  const double sfg = choquet(f * g, sup, a).value, sfh = choquet(f * h, sup, a).value;
  const double rs = r_exp + s_exp;
  r.quantities = {{"s_f", sf}, {"s_g", sg}, {"s_h", sh}, {"s_fg", sfg}, {"s_fh", sfh}};
  r.lhs = sf;
  if (!(sg > 0.0) || !(sh > 0.0)) {
    r.degenerate = "s(g) or s(h) vanishes";
    r.rhs = kInf;
  } else {
    r.rhs = ext_pow(sg, -r_exp / rs) * ext_pow(sh, -s_exp / rs) * ext_pow(sfg, r_exp / rs) * ext_pow(sfh, s_exp / rs);
  }
  detail::finalize(r);
  return r;
}

/// ∫_A φψ dμ ≤ (∫_A φ^p dμ)^{1/p} (∫_A ψ^q dμ)^{1/q}, 1/p + 1/q = 1, for
/// submodular μ.
inline InequalityReport holder_choquet(const SampleFunction& phi, const SampleFunction& psi, const Capacity& c,
                                       const Subset& a, double p, const CheckOptions& opt = {}) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("holder_choquet: need finite p > 1");
  const double q = detail::conjugate(p);
  auto r = detail::make_report(theorem::kHolderChoquet);
  r.hypotheses.push_back(detail::from_property(check_submodular(c, opt)));
  const double lhs = choquet(phi * psi, c, a).value;
  const double P = choquet(phi.pow(p), c, a).value, Q = choquet(psi.pow(q), c, a).value;
  r.lhs = lhs;
  r.rhs = ext_mul(ext_pow(P, 1.0 / p), ext_pow(Q, 1.0 / q));
  r.quantities = {{"P", P}, {"Q", Q}, {"q", q}};
  detail::finalize(r);
  return r;
}

/// ∫_A φψ dμ ≤ (1/√p + 1/√q)^2 (∫_A φ^p dμ)^{1/p} (∫_A ψ^q dμ)^{1/q} for
/// subadditive μ.
inline InequalityReport shi_holder(const SampleFunction& phi, const SampleFunction& psi, const Capacity& c,
                                   const Subset& a, double p, const CheckOptions& opt = {}) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("shi_holder: need finite p > 1");
  const double q = detail::conjugate(p);
  const double k = std::pow(1.0 / std::sqrt(p) + 1.0 / std::sqrt(q), 2.0);
  auto r = detail::make_report(theorem::kShiHolder);
  r.hypotheses.push_back(detail::from_property(check_subadditive(c, opt)));
  const double P = choquet(phi.pow(p), c, a).value, Q = choquet(psi.pow(q), c, a).value;
  r.lhs = choquet(phi * psi, c, a).value;
  r.rhs = k * ext_mul(ext_pow(P, 1.0 / p), ext_pow(Q, 1.0 / q));
  r.quantities = {{"constant", k}, {"P", P}, {"Q", Q}};
  detail::finalize(r);
  return r;
}

/// ∫_A (u + v) dμ ≤ 2 (∫_A u dμ + ∫_A v dμ) for subadditive μ.
inline InequalityReport shi_sum(const SampleFunction& u, const SampleFunction& v, const Capacity& c,
                                const Subset& a, const CheckOptions& opt = {}) {
  auto r = detail::make_report(theorem::kShiSum);
  r.hypotheses.push_back(detail::from_property(check_subadditive(c, opt)));
  r.lhs = choquet(u + v, c, a).value;
  r.rhs = 2.0 * (choquet(u, c, a).value + choquet(v, c, a).value);
  detail::finalize(r);
  return r;
}

struct HpqResult {
  double value = 0.0;
  double inner = 0.0;  // ∫_A (bg + ah)^{1-q} dμ
  std::optional<std::string> degenerate;
};

/// H_pq(a, b) = (ab)^{1/p} (∫_A (bg + ah)^{1-q} dμ)^{1/q}, 1/p + 1/q = 1.
/// ab = 0 is reported as a flagged 0.
inline HpqResult h_pq(double a_val, double b_val, const SampleFunction& g, const SampleFunction& h,
                      const Subset& a, const Capacity& c, double p) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("h_pq: need finite p > 1");
  if (!(a_val >= 0.0) || !(b_val >= 0.0)) throw DomainError("h_pq: need a, b >= 0");
  const double q = detail::conjugate(p);
  HpqResult out;
  if (a_val == 0.0 || b_val == 0.0) {
    out.degenerate = a_val == 0.0 && b_val == 0.0 ? "a = b = 0" : "ab = 0 (0 * inf form)";
    return out;
  }
  const auto w = g.scaled(b_val) + h.scaled(a_val);
  out.inner = choquet(w.pow(1.0 - q), c, a).value;
  out.value = ext_mul(ext_pow(a_val * b_val, 1.0 / p), ext_pow(out.inner, 1.0 / q));
  return out;
}

namespace detail {

inline void hpq_bound(InequalityReport& r, const SampleFunction& f, const SampleFunction& g,
                      const SampleFunction& h, const Subset& a, const Capacity& c, double p, double multiplier) {
  const auto fp = f.pow(p);
  const double av = choquet(g * fp, c, a).value;
  const double bv = choquet(h * fp, c, a).value;
  const auto H = h_pq(av, bv, g, h, a, c, p);
  r.lhs = choquet(f, c, a).value;
  r.quantities = {{"a", av}, {"b", bv}, {"H", H.value}, {"inner", H.inner}, {"multiplier", multiplier}};
  if (H.degenerate) {
    r.degenerate = "H_pq degenerate: " + *H.degenerate;
    r.rhs = (av == 0.0 && bv == 0.0 && r.lhs == 0.0) ? 0.0 : kInf;
  } else {
    r.rhs = multiplier * H.value;
  }
  finalize(r);
}

}  // namespace detail

/// ∫_A f dμ ≤ 2^{1/p} H_pq(∫_A g f^p dμ, ∫_A h f^p dμ) for submodular μ.
///
/// The equality condition (g b + h a)^q f^p = γ on {f > 0} (with a, b the two
/// inner integrals) is reported as a note, together with whether μ is modular
/// or g f^p, h f^p are comonotone.
inline InequalityReport carlson_choquet_submodular(const SampleFunction& f, const SampleFunction& g,
                                                   const SampleFunction& h, const Subset& a, const Capacity& c,
                                                   double p, const CheckOptions& opt = {}) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("carlson_choquet_submodular: need finite p > 1");
  auto r = detail::make_report(theorem::kCarlsonChoquetSubmodular);
  r.hypotheses.push_back(detail::from_property(check_submodular(c, opt)));
  detail::hpq_bound(r, f, g, h, a, c, p, std::pow(2.0, 1.0 / p));

  const double q = detail::conjugate(p);
  const double av = *r.quantity("a"), bv = *r.quantity("b");
  double lo = kInf, hi = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!a.contains(i) || !(f[i] > 0.0)) continue;
    const double e = ext_pow(g[i] * bv + h[i] * av, q) * ext_pow(f[i], p);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  const double spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  const bool constant = spread <= 1e-9;
  const auto fp = f.pow(p);
  const bool modular = check_modular(c, opt).holds;
  const bool comon = is_comonotone(g * fp, h * fp, a).holds;
  r.quantities.emplace_back("equality_spread", spread);
  r.notes.push_back({"equality_condition", constant && (modular || comon),
                     "relative spread " + std::to_string(spread) + (modular ? ", modular" : "") +
                         (comon ? ", g f^p and h f^p comonotone" : "")});
  return r;
}

/// ∫_A f dμ ≤ 4^{1/p} (1/√p + 1/√q)^2 H_pq(∫_A g f^p dμ, ∫_A h f^p dμ) for
/// subadditive μ on a coordinate space. The auxiliary Hölder and sum estimates
/// for subadditive μ are evaluated on the same inputs and attached as sub-reports.
inline InequalityReport carlson_choquet_subadditive(const SampleFunction& f, const SampleFunction& g,
                                                    const SampleFunction& h, const Subset& a, const Capacity& c,
                                                    double p, const CheckOptions& opt = {}) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("carlson_choquet_subadditive: need finite p > 1");
  const double q = detail::conjugate(p);
  auto r = detail::make_report(theorem::kCarlsonChoquetSubadditive);
  r.hypotheses.push_back(detail::from_property(check_subadditive(c, opt)));
  r.hypotheses.push_back({"coordinates", c.space().has_coords(),
                          c.space().has_coords() ? "points carry coordinates in [0, inf)"
                                                 : "ground space has no coordinates"});
  const double k = std::pow(1.0 / std::sqrt(p) + 1.0 / std::sqrt(q), 2.0);
  detail::hpq_bound(r, f, g, h, a, c, p, std::pow(4.0, 1.0 / p) * k);

  const double av = *r.quantity("a"), bv = *r.quantity("b");
  const auto w = g.scaled(bv) + h.scaled(av);
  const auto phi = w.pow(1.0 / p) * f;
  const auto psi = w.pow(-1.0 / p);
  r.sub_reports.push_back(shi_holder(phi, psi, c, a, p, opt));
  const auto fp = f.pow(p);
  r.sub_reports.push_back(shi_sum((g * fp).scaled(bv), (h * fp).scaled(av), c, a, opt));
  return r;
}

// ---------------------------------------------------------------------------
// No universal constant

struct ImpossibilityRow {
  std::size_t point = 0;
  double coord = 0.0;
  double lhs = 0.0;       // ∫ f dμ for f the indicator of the point
  double gh = 0.0;        // g(t) h(t), recovered from the two Choquet integrals
  double required_c = 0;  // (g(t) h(t))^{-1/4}
  std::vector<std::pair<double, bool>> candidates;  // (c, bound satisfied)
};

/// Under the sup-capacity, f = 1_{t} turns ∫f ≤ c (∫ g f^2)^{1/4} (∫ h f^2)^{1/4}
/// into 1 ≤ c (g(t) h(t))^{1/4}; the required c grows without bound as
/// g(t) h(t) → 0.
inline std::vector<ImpossibilityRow> impossibility_demo(std::shared_ptr<const GroundSpace> space,
                                                        std::span<const std::size_t> t_indices,
                                                        const SampleFunction& g, const SampleFunction& h,
                                                        std::span<const double> c_candidates) {
  const auto n = space->size();
  if (g.size() != n || h.size() != n) throw DomainError("impossibility_demo: function length mismatch");
  const auto sup = make_sup_capacity(space);
  const auto X = Subset::full(n);
  std::vector<ImpossibilityRow> rows;
  for (auto t : t_indices) {
    if (t >= n) throw DomainError("impossibility_demo: point index out of range");
    std::vector<double> ind(n, 0.0);
    ind[t] = 1.0;
    const SampleFunction f(std::move(ind));
    const auto f2 = f.pow(2.0);
    ImpossibilityRow row;
    row.point = t;
    row.coord = space->has_coords() ? space->coords()[t] : static_cast<double>(t);
    row.lhs = choquet(f, sup, X).value;
    const double ig = choquet(g * f2, sup, X).value, ih = choquet(h * f2, sup, X).value;
    row.gh = ext_mul(ig, ih);
    const double factor = ext_pow(ig, 0.25) * ext_pow(ih, 0.25);
    row.required_c = factor > 0.0 ? row.lhs / factor : kInf;
    for (double cand : c_candidates) row.candidates.emplace_back(cand, row.lhs <= cand * factor);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace capax
