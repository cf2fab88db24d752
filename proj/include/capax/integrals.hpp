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

// Non-additive integrals over finite capacities: the generalized Sugeno
// integral sup_α α∘μ(A∩{f≥α}) with its Sugeno (∘ = min) and Shilkret
// (∘ = product) specializations, the Choquet integral, and a brute-force
// α-grid oracle for the generalized Sugeno evaluator.

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/operators.hpp"

namespace capax {

/// Nonnegative (possibly infinite) value per point of a ground space.
class SampleFunction {
 public:
  SampleFunction() = default;

  explicit SampleFunction(std::vector<double> values, std::optional<Range> range = std::nullopt)
      : values_(std::move(values)) {
    bool unit = true;
    for (double v : values_) {
      if (std::isnan(v) || v < 0.0) throw DomainError("SampleFunction: values must be nonnegative");
      unit = unit && v <= 1.0;
    }
    range_ = range.value_or(unit ? Range::Unit : Range::ExtendedNonneg);
    if (range_ == Range::Unit && !unit) throw DomainError("SampleFunction: values exceed 1 on unit range");
  }

  static SampleFunction constant(std::size_t n, double k) { return SampleFunction(std::vector<double>(n, k)); }

  std::size_t size() const { return values_.size(); }
  Range range() const { return range_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  double max_on(const Subset& a) const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
      if (a.contains(i)) m = std::max(m, values_[i]);
    return m;
  }

  template <class F>
  SampleFunction map(F&& fn) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(values_[i]);
    return SampleFunction(std::move(out));
  }

  template <class F>
  SampleFunction zip(const SampleFunction& other, F&& fn) const {
    if (other.size() != size()) throw DomainError("SampleFunction: length mismatch");
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(values_[i], other.values_[i]);
    return SampleFunction(std::move(out));
  }

  SampleFunction pow(double s) const {
    return map([s](double v) { return ext_pow(v, s); });
  }
  SampleFunction operator*(const SampleFunction& o) const { return zip(o, ext_mul); }
  SampleFunction operator+(const SampleFunction& o) const {
    return zip(o, [](double a, double b) { return a + b; });
  }
  SampleFunction scaled(double k) const {
    return map([k](double v) { return ext_mul(k, v); });
  }
  // Pointwise a □ b.
  SampleFunction combine(const SampleFunction& o, const AggOperator& box) const {
    return zip(o, [&](double a, double b) { return box(a, b); });
  }

 private:
  std::vector<double> values_;
  Range range_ = Range::Unit;
};

enum class Exactness { Exact, GridApprox };

inline std::string_view to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "grid-approx"; }

struct IntegralResult {
  double value = 0.0;
  // Level α at which the supremum is attained (Sugeno-type integrals), or
  // the top of the level partition (Choquet).
  double level = 0.0;
  Exactness exactness = Exactness::Exact;
  // Upper bound on (true value - value) when exactness == GridApprox.
  double bound = 0.0;
  // The ExtendedNonneg cap was used in place of sup Y.
  bool cap_touched = false;
};

inline constexpr double kDefaultExtendedCap = 1048576.0;  // 2^20

namespace detail {

inline void check_shapes(const SampleFunction& f, const Capacity& c, const Subset& a) {
  if (f.size() != c.size() || a.universe() != c.size())
    throw DomainError("integral: function, capacity and subset must share one ground space");
}

inline void check_domain(const SampleFunction& f, const Capacity& c, const AggOperator& op) {
  if (op.domain() == Range::Unit && (f.range() != Range::Unit || c.range() != Range::Unit))
    throw DomainError("integral: operator " + op.name() + " is defined on [0,1] but the " +
                      (f.range() != Range::Unit ? "function" : "capacity") + " is not unit-valued");
}

/// Points of `a`, sorted by decreasing f (ties by index), and for each
/// distinct value the position of its last occurrence.
struct LevelChain {
  std::vector<std::size_t> order;
  std::vector<double> values;      // distinct, decreasing
  std::vector<std::size_t> ends;   // order[0..ends[k]] = A ∩ {f >= values[k]}
  std::vector<double> measures;    // μ(A ∩ {f >= values[k]})
};

inline LevelChain level_chain(const SampleFunction& f, const Capacity& c, const Subset& a) {
  LevelChain lc;
  lc.order = a.indices();
  std::stable_sort(lc.order.begin(), lc.order.end(),
                   [&](std::size_t i, std::size_t j) { return f[i] > f[j]; });
  const auto chain = c.chain(lc.order);
  for (std::size_t k = 0; k < lc.order.size(); ++k) {
    const double v = f[lc.order[k]];
    if (k + 1 == lc.order.size() || f[lc.order[k + 1]] != v) {
      lc.values.push_back(v);
      lc.ends.push_back(k);
      lc.measures.push_back(chain[k]);
    }
  }
  return lc;
}

}  // namespace detail

/// sup over α in Y of α ∘ μ(A ∩ {f ≥ α}).
///
/// On (v_{k+1}, v_k] the level set is constant and α∘m is nondecreasing in α,
/// so the supremum is taken over α ∈ {0} ∪ {values of f on A} plus the tail
/// α > max f, where the level set is empty. The tail vanishes for operators
/// with a∘0 = 0; otherwise it is evaluated at sup Y (the cap on [0,inf]).
inline IntegralResult generalized_sugeno(const SampleFunction& f, const Capacity& c, const Subset& a,
                                         const AggOperator& op, double extended_cap = kDefaultExtendedCap) {
  detail::check_shapes(f, c, a);
  detail::check_domain(f, c, op);
  const auto lc = detail::level_chain(f, c, a);
  IntegralResult r;
  r.exactness = (op.zero_absorbing_right() && op.left_continuous()) ? Exactness::Exact : Exactness::GridApprox;

  // Ascending α so that ties resolve to the smallest maximizing level.
  const double mu_a = lc.measures.empty() ? 0.0 : lc.measures.back();
  r.value = op(0.0, mu_a);
  r.level = 0.0;
  for (std::size_t k = lc.values.size(); k-- > 0;) {
    const double v = op(lc.values[k], lc.measures[k]);
    if (v > r.value) {
      r.value = v;
      r.level = lc.values[k];
    }
  }

  const double top = lc.values.empty() ? 0.0 : lc.values.front();
  const double sup_y = op.domain() == Range::Unit ? 1.0 : kInf;
  if (!op.zero_absorbing_right() && top < sup_y) {
    const double alpha = op.domain() == Range::Unit ? 1.0 : extended_cap;
    const double empty_measure = c.measure(Subset::empty(c.size()));
    const double tail = op(alpha, empty_measure);
    if (op.domain() == Range::ExtendedNonneg) {
      r.cap_touched = true;
      r.bound = kInf;
    }
    if (tail > r.value) {
      r.value = tail;
      r.level = alpha;
    }
  }
  return r;
}

inline IntegralResult sugeno(const SampleFunction& f, const Capacity& c, const Subset& a) {
  return generalized_sugeno(f, c, a, AggOperator::min(join(f.range(), c.range())));
}

inline IntegralResult shilkret(const SampleFunction& f, const Capacity& c, const Subset& a) {
  return generalized_sugeno(f, c, a, AggOperator::product(join(f.range(), c.range())));
}

/// ∫_0^∞ μ(A ∩ {f ≥ t}) dt, evaluated by telescoping over the distinct values
/// of f on A. A level set {f = inf} of positive measure makes the integral
/// infinite; one of measure zero contributes nothing.
inline IntegralResult choquet(const SampleFunction& f, const Capacity& c, const Subset& a) {
  detail::check_shapes(f, c, a);
  const auto lc = detail::level_chain(f, c, a);
  IntegralResult r;
  r.level = lc.values.empty() ? 0.0 : lc.values.front();
  double acc = 0.0;
  for (std::size_t k = lc.values.size(); k-- > 0;) {
    const double v = lc.values[k];
    const double below = k + 1 < lc.values.size() ? lc.values[k + 1] : 0.0;
    if (std::isinf(v)) {
      if (lc.measures[k] > 0.0) {
        r.value = kInf;
        return r;
      }
      continue;
    }
    acc += ext_mul(v - below, lc.measures[k]);
  }
  r.value = acc;
  return r;
}

/// Grid oracle for generalized_sugeno: max of α∘μ(A∩{f≥α}) over a uniform α
/// grid on Y (on [0,inf] the grid ends at `extended_cap`), optionally joined
/// with the candidate levels {0} ∪ f(A). Level sets are rebuilt point by
/// point and measured directly, independently of the chain evaluator.
///
/// `bound` = max over grid cells [α_k, α_{k+1}] of α_{k+1}∘m_k − α_k∘m_k,
/// where m_k = μ(A∩{f≥α_k}); the grid max plus `bound` dominates the true
/// supremum over [0, top of grid].
inline IntegralResult brute_force_generalized_sugeno(const SampleFunction& f, const Capacity& c,
                                                     const Subset& a, const AggOperator& op,
                                                     std::size_t alpha_grid_size, bool with_candidates = true,
                                                     double extended_cap = kDefaultExtendedCap) {
  detail::check_shapes(f, c, a);
  detail::check_domain(f, c, op);
  if (alpha_grid_size < 2) throw DomainError("brute_force_generalized_sugeno: grid size must be >= 2");
  const auto n = c.size();
  auto level_measure = [&](double alpha) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (a.contains(i) && f[i] >= alpha) s.insert(i);
    return c.measure(s);
  };

  IntegralResult r;
  r.exactness = Exactness::GridApprox;
  r.value = -1.0;
  auto consider = [&](double alpha, double m) {
    const double v = op(alpha, m);
    if (v > r.value) {
      r.value = v;
      r.level = alpha;
    }
  };

  const double top = op.domain() == Range::Unit ? 1.0 : extended_cap;
  r.cap_touched = op.domain() == Range::ExtendedNonneg;
  const double last = static_cast<double>(alpha_grid_size - 1);
  double prev_alpha = 0.0, prev_m = 0.0;
  for (std::size_t k = 0; k < alpha_grid_size; ++k) {
    const double alpha = top * static_cast<double>(k) / last;
    const double m = level_measure(alpha);
    consider(alpha, m);
    if (k > 0) r.bound = std::max(r.bound, detail::margin(op(alpha, prev_m), op(prev_alpha, prev_m)));
    prev_alpha = alpha;
    prev_m = m;
  }
  if (with_candidates) {
    consider(0.0, level_measure(0.0));
    for (std::size_t i = 0; i < n; ++i)
      if (a.contains(i)) consider(f[i], level_measure(f[i]));
  }
  return r;
}

}  // namespace capax
