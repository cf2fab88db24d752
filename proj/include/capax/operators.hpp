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

// Binary aggregation operators on the range Y, the operator systems that
// parameterize the Sugeno-type inequalities, and samplers for the operator
// conditions those inequalities assume.

#pragma once

#include <array>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "capax/core.hpp"
#include "capax/random.hpp"

namespace capax {

enum class OpKind { Min, Product, Lukasiewicz, Dombi, ProjectFirst, Table };

/// A nondecreasing binary operator on Y = [0,1] or Y = [0,inf].
///
/// `Table` operators are step functions read at the lower grid point of a
/// uniform k x k grid on [0,1]; they exist to build counterexamples and
/// degenerate operators (e.g. the constant-zero operator).
class AggOperator {
 public:
  static AggOperator min(Range d = Range::Unit) { return {OpKind::Min, d, true, true}; }
  static AggOperator product(Range d = Range::Unit) { return {OpKind::Product, d, true, true}; }
  static AggOperator lukasiewicz() { return {OpKind::Lukasiewicz, Range::Unit, true, true}; }
  static AggOperator dombi() { return {OpKind::Dombi, Range::Unit, true, true}; }
  static AggOperator project_first(Range d = Range::Unit) {
    return {OpKind::ProjectFirst, d, false, true};
  }

  /// Row-major table over the grid {0, 1/(k-1), ..., 1}^2; eval(a, b) reads
  /// the entry at (floor(a (k-1)), floor(b (k-1))).
  static AggOperator table(std::vector<double> values, std::size_t k, std::string name = "table",
                           bool left_continuous = false) {
    if (k < 2 || values.size() != k * k) throw DomainError("AggOperator::table: need k*k values, k >= 2");
    for (double v : values)
      if (!in_range(v, Range::Unit)) throw DomainError("AggOperator::table: values must lie in [0,1]");
    AggOperator op{OpKind::Table, Range::Unit, true, left_continuous};
    for (std::size_t i = 0; i < k; ++i) op.zero_absorbing_right_ &= values[i * k] == 0.0;
    op.table_ = std::move(values);
    op.k_ = k;
    op.name_ = std::move(name);
    return op;
  }

  static AggOperator constant_zero() { return table({0.0, 0.0, 0.0, 0.0}, 2, "zero", true); }

  /// Lookup by CLI / scenario-file name: min, prod, lukasiewicz, dombi, project_first.
  static std::optional<AggOperator> by_name(std::string_view name, Range d) {
    if (name == "min") return min(d);
    if (name == "prod" || name == "product") return product(d);
    if (name == "project_first") return project_first(d);
    if (d != Range::Unit) {
      if (name == "lukasiewicz" || name == "dombi")
        throw DomainError(std::string(name) + " requires the unit domain");
      return std::nullopt;
    }
    if (name == "lukasiewicz") return lukasiewicz();
    if (name == "dombi") return dombi();
    if (name == "zero") return constant_zero();
    return std::nullopt;
  }

  OpKind kind() const { return kind_; }
  Range domain() const { return domain_; }
  // a ∘ 0 = 0 for every a.
  bool zero_absorbing_right() const { return zero_absorbing_right_; }
  // Declared, not verified: pointwise limits are not decidable on a grid.
  bool left_continuous() const { return left_continuous_; }

  std::string name() const {
    switch (kind_) {
      case OpKind::Min: return "min";
      case OpKind::Product: return "prod";
      case OpKind::Lukasiewicz: return "lukasiewicz";
      case OpKind::Dombi: return "dombi";
      case OpKind::ProjectFirst: return "project_first";
      case OpKind::Table: return name_;
    }
    return "?";
  }

  double operator()(double a, double b) const {
    if (!in_range(a, domain_) || !in_range(b, domain_))
      throw DomainError(name() + ": argument outside " + std::string(to_string(domain_)) + " domain");
    return eval_unchecked(a, b);
  }

  double eval_unchecked(double a, double b) const {
    switch (kind_) {
      case OpKind::Min: return a < b ? a : b;
      case OpKind::Product: return ext_mul(a, b);
      case OpKind::Lukasiewicz: return std::max(a + b - 1.0, 0.0);
      case OpKind::Dombi: return (a == 0.0 || b == 0.0) ? 0.0 : (a * b) / (a + b - a * b);
      case OpKind::ProjectFirst: return a;
      case OpKind::Table: {
        const auto last = static_cast<double>(k_ - 1);
        const auto i = std::min(k_ - 1, static_cast<std::size_t>(a * last));
        const auto j = std::min(k_ - 1, static_cast<std::size_t>(b * last));
        return table_[i * k_ + j];
      }
    }
    return 0.0;
  }

  // Builtin t-norms are commutative; ProjectFirst and tables are not assumed to be.
  bool is_tnorm() const {
    return kind_ == OpKind::Min || kind_ == OpKind::Product || kind_ == OpKind::Lukasiewicz ||
           kind_ == OpKind::Dombi;
  }

  friend bool operator==(const AggOperator& a, const AggOperator& b) {
    return a.kind_ == b.kind_ && a.domain_ == b.domain_ && a.table_ == b.table_ && a.k_ == b.k_;
  }

 private:
  AggOperator(OpKind k, Range d, bool zero_abs, bool left_cont)
      : kind_(k), domain_(d), zero_absorbing_right_(zero_abs), left_continuous_(left_cont) {}

  OpKind kind_;
  Range domain_;
  bool zero_absorbing_right_;
  bool left_continuous_;
  std::vector<double> table_;
  std::size_t k_ = 0;
  std::string name_;
};

/// The operator tuple (∘, □, ⋆, ⊲, ▵) and exponents (p, q, r, s) of the
/// Carlson-type inequality for the generalized Sugeno integral:
///
///   [(∫_A f∘μ) ⊲ (∫_B g∘μ)]^r ⋆ [(∫_A f∘μ) ⊲ (∫_B h∘μ)]^s
///     ≤ (∫_{A∩B} (f□g)^p ∘ μ)^{r/p} ⋆ (∫_{A∩B} (f□h)^q ∘ μ)^{s/q}
struct OperatorSystem {
  std::string name;
  AggOperator circ;  // the integral's operator
  AggOperator box;   // pointwise combination of integrands
  AggOperator star;  // outer combination of the two factors
  AggOperator lhd;   // combination of integrals (assumed left-continuous)
  AggOperator tri;   // positive-dependence operator
  double p = 2.0, q = 2.0, r = 1.0, s = 1.0;

  Range domain() const { return circ.domain(); }

  void validate() const {
    for (const auto* op : {&box, &star, &lhd, &tri})
      if (op->domain() != circ.domain())
        throw DomainError("OperatorSystem " + name + ": operators must share one domain");
    if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("OperatorSystem: need p, q >= 1");
    if (!(r > 0.0) || !(s > 0.0)) throw DomainError("OperatorSystem: need r, s > 0");
    if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r) || !std::isfinite(s))
      throw DomainError("OperatorSystem: exponents must be finite");
  }

  OperatorSystem with_exponents(double p_, double q_, double r_, double s_) const {
    OperatorSystem out = *this;
    out.p = p_;
    out.q = q_;
    out.r = r_;
    out.s = s_;
    out.validate();
    return out;
  }
};

/// The six operator systems listed as satisfying both operator conditions,
/// instantiated on Y = [0,1] with p = q = 2, r = s = 1 and ⋆ = product.
///
///   1. ▵ = min, □ = ⊲ = ∘ = min (a t-norm with the power property)
///   2. all operators = product
///   3. ▵ = □ = ⊲ = product, ∘ = min
///   4. ▵ = □ = ⊲ = Łukasiewicz, ∘ = min
///   5. ▵ = □ = ⊲ = ∘ = Dombi, a∘b = ab/(a+b-ab)
///   6. □ = ⊲ = product, ▵ = min, ∘ = project-first (a∘b = a)
inline std::vector<OperatorSystem> builtin_systems() {
  const auto mn = AggOperator::min(), pr = AggOperator::product();
  const auto lk = AggOperator::lukasiewicz(), db = AggOperator::dombi();
  const auto pf = AggOperator::project_first();
  return {
      {"tnorm-min", mn, mn, pr, mn, mn},
      {"product", pr, pr, pr, pr, pr},
      {"min-product", mn, pr, pr, pr, pr},
      {"min-lukasiewicz", mn, lk, pr, lk, lk},
      {"dombi", db, db, pr, db, db},
      {"project-first", pf, pr, pr, pr, mn},
  };
}

/// Sugeno integral (∘ = ▵ = min) with □ = ⋆ = ⊲ = product; the system behind
/// the Caballero, Xu-Ouyang and Wang inequalities.
inline OperatorSystem sugeno_product_system() {
  const auto mn = AggOperator::min(), pr = AggOperator::product();
  return {"sugeno-product", mn, pr, pr, pr, mn};
}

/// ▵ = □ = ⊲ = Łukasiewicz, ⋆ = ∘ = product on [0,1].
inline OperatorSystem lukasiewicz_product_system() {
  const auto lk = AggOperator::lukasiewicz(), pr = AggOperator::product();
  return {"lukasiewicz-product", pr, lk, pr, lk, lk};
}

// ---------------------------------------------------------------------------
// Condition samplers

enum class Condition { Nondecreasing, Power, Chebyshev };

inline std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Nondecreasing: return "nondecreasing";
    case Condition::Power: return "power";
    case Condition::Chebyshev: return "chebyshev";
  }
  return "?";
}

struct ConditionViolation {
  std::vector<double> inputs;
  double lhs;
  double rhs;
};

/// Outcome of sampling a universally quantified operator condition.
/// `holds` means no violation on the stated grid and random points; it is
/// not a proof.
struct ConditionReport {
  Condition condition;
  Range domain = Range::Unit;
  std::vector<double> exponents;  // power condition only
  std::size_t grid_resolution = 0;
  std::size_t random_points = 0;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
  std::size_t violation_count = 0;
  std::vector<ConditionViolation> violations;  // first few, for display
  double worst_slack = kInf;
  bool trivially_satisfied = false;  // power condition with s = 1 only
  bool holds = true;
};

inline constexpr std::size_t kDefaultRandomPoints = 10'000;
inline constexpr std::size_t kMaxStoredViolations = 16;

namespace detail {

// Unit: uniform grid; extended: {0, 2^-6, ..., 2^6, inf}.
inline std::vector<double> axis_grid(Range d, std::size_t resolution) {
  std::vector<double> g;
  if (d == Range::Unit) {
    const std::size_t k = std::max<std::size_t>(resolution, 2);
    for (std::size_t i = 0; i < k; ++i) g.push_back(static_cast<double>(i) / static_cast<double>(k - 1));
  } else {
    g.push_back(0.0);
    for (int e = -6; e <= 6; ++e) g.push_back(std::ldexp(1.0, e));
    g.push_back(kInf);
  }
  return g;
}

inline double random_point(Range d, Rng& rng) {
  if (d == Range::Unit) return rng.uniform();
  const double u = rng.uniform();
  if (u < 0.05) return 0.0;
  if (u < 0.08) return kInf;
  return std::exp2(rng.uniform(-6.0, 6.0));
}

// Records lhs >= rhs at `inputs`.
inline void record_ge(ConditionReport& r, std::initializer_list<double> inputs, double lhs, double rhs) {
  ++r.evaluations;
  const double slack = margin(lhs, rhs);
  if (slack < r.worst_slack) r.worst_slack = slack;
  const double tol = kStructuralTol * std::max(1.0, std::isinf(rhs) ? 1.0 : std::abs(rhs));
  if (std::isnan(slack) || slack < -tol) {
    r.holds = false;
    ++r.violation_count;
    if (r.violations.size() < kMaxStoredViolations) r.violations.push_back({inputs, lhs, rhs});
  }
}

}  // namespace detail

/// a ≥ b and c ≥ d imply a∘c ≥ b∘d. On the grid, adjacent comparisons in
/// each argument suffice by transitivity; random pairs probe off-grid points.
inline ConditionReport check_nondecreasing(const AggOperator& op, std::size_t grid_resolution = 101,
                                           std::uint64_t seed = 1,
                                           std::size_t random_points = kDefaultRandomPoints) {
  ConditionReport r;
  r.condition = Condition::Nondecreasing;
  r.domain = op.domain();
  r.grid_resolution = grid_resolution;
  r.random_points = random_points;
  r.seed = seed;
  const auto g = detail::axis_grid(op.domain(), grid_resolution);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double here = op(g[i], g[j]);
      if (i + 1 < g.size()) detail::record_ge(r, {g[i + 1], g[j], g[i], g[j]}, op(g[i + 1], g[j]), here);
      if (j + 1 < g.size()) detail::record_ge(r, {g[i], g[j + 1], g[i], g[j]}, op(g[i], g[j + 1]), here);
    }
  Rng rng(seed);
  for (std::size_t k = 0; k < random_points; ++k) {
    double a = detail::random_point(op.domain(), rng), b = detail::random_point(op.domain(), rng);
    double c = detail::random_point(op.domain(), rng), d = detail::random_point(op.domain(), rng);
    if (a < b) std::swap(a, b);
    if (c < d) std::swap(c, d);
    detail::record_ge(r, {a, c, b, d}, op(a, c), op(b, d));
  }
  return r;
}

/// a^s ∘ b ≥ (a ∘ b)^s for every sampled (a, b) and each s in `s_values`.
/// s = 1 is an identity and is labelled trivially satisfied.
inline ConditionReport check_power_condition(const AggOperator& op, std::span<const double> s_values,
                                             std::size_t grid_resolution = 101, std::uint64_t seed = 2,
                                             std::size_t random_points = kDefaultRandomPoints) {
  ConditionReport r;
  r.condition = Condition::Power;
  r.domain = op.domain();
  r.exponents.assign(s_values.begin(), s_values.end());
  r.grid_resolution = grid_resolution;
  r.random_points = random_points;
  r.seed = seed;
  for (double s : s_values)
    if (!(s >= 1.0)) throw DomainError("check_power_condition: exponents must be >= 1");
  r.trivially_satisfied =
      std::all_of(s_values.begin(), s_values.end(), [](double s) { return s == 1.0; });
  const auto g = detail::axis_grid(op.domain(), grid_resolution);
  for (double s : s_values) {
    if (s == 1.0) continue;
    auto probe = [&](double a, double b) {
      detail::record_ge(r, {a, b, s}, op(ext_pow(a, s), b), ext_pow(op(a, b), s));
    };
    for (double a : g)
      for (double b : g) probe(a, b);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s * 1e6)));
    for (std::size_t k = 0; k < random_points; ++k)
      probe(detail::random_point(op.domain(), rng), detail::random_point(op.domain(), rng));
  }
  return r;
}

inline ConditionReport check_power_condition(const AggOperator& op, std::initializer_list<double> s_values,
                                             std::size_t grid_resolution = 101, std::uint64_t seed = 2,
                                             std::size_t random_points = kDefaultRandomPoints) {
  return check_power_condition(op, std::span<const double>(s_values.begin(), s_values.size()),
                               grid_resolution, seed, random_points);
}

/// (a □ b) ∘ (c ▵ d) ≥ (a ∘ c) ⊲ (b ∘ d) on a 4-dimensional grid plus random points.
inline ConditionReport check_chebyshev_condition(const OperatorSystem& sys, std::size_t grid_resolution = 17,
                                                 std::uint64_t seed = 3,
                                                 std::size_t random_points = kDefaultRandomPoints) {
  sys.validate();
  ConditionReport r;
  r.condition = Condition::Chebyshev;
  r.domain = sys.domain();
  r.grid_resolution = grid_resolution;
  r.random_points = random_points;
  r.seed = seed;
  auto probe = [&](double a, double b, double c, double d) {
    detail::record_ge(r, {a, b, c, d}, sys.circ(sys.box(a, b), sys.tri(c, d)),
                      sys.lhd(sys.circ(a, c), sys.circ(b, d)));
  };
  const auto g = detail::axis_grid(sys.domain(), grid_resolution);
  for (double a : g)
    for (double b : g)
      for (double c : g)
        for (double d : g) probe(a, b, c, d);
  Rng rng(seed);
  for (std::size_t k = 0; k < random_points; ++k) {
    const double a = detail::random_point(sys.domain(), rng), b = detail::random_point(sys.domain(), rng);
    const double c = detail::random_point(sys.domain(), rng), d = detail::random_point(sys.domain(), rng);
    probe(a, b, c, d);
  }
  return r;
}

/// Memoizes condition reports across many checker calls on the same
/// operators (the reports depend only on operators, exponents and defaults).
/// Keys use operator names, so distinct table operators need distinct names.
class ConditionCache {
 public:
  ConditionReport power(const AggOperator& op, double s) {
    return get("pow|" + op.name() + "|" + std::string(to_string(op.domain())) + "|" + fmt(s),
               [&] { return check_power_condition(op, {s}); });
  }
  ConditionReport chebyshev(const OperatorSystem& sys) {
    return get("cheb|" + sys.circ.name() + "|" + sys.box.name() + "|" + sys.lhd.name() + "|" +
                   sys.tri.name() + "|" + std::string(to_string(sys.domain())),
               [&] { return check_chebyshev_condition(sys); });
  }
  ConditionReport nondecreasing(const AggOperator& op) {
    return get("nd|" + op.name() + "|" + std::string(to_string(op.domain())),
               [&] { return check_nondecreasing(op); });
  }

 private:
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  template <class F>
  ConditionReport get(const std::string& key, F&& make) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto rep = make();
    std::lock_guard lock(mu_);
    return cache_.emplace(key, std::move(rep)).first->second;
  }

  std::mutex mu_;
  std::map<std::string, ConditionReport> cache_;
};

}  // namespace capax
