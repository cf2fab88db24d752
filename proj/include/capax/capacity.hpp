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

// Finite ground spaces, capacities (monotone measures) and structural
// property checkers.
//
// A capacity assigns a value to every subset of a finite ground space. Small
// spaces may carry an explicit table indexed by bitmask; larger spaces use one
// of the structured representations (additive, power-distorted additive,
// sup-capacity, grid Lebesgue), which evaluate a subset in O(n) and a nested
// chain of subsets in O(n) total.

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "capax/core.hpp"
#include "capax/random.hpp"

namespace capax {

// Largest space that may carry an explicit 2^n table.
inline constexpr std::size_t kMaxTableSize = 20;
// Above this many pairs the checkers switch from exhaustive to sampled.
inline constexpr std::size_t kExhaustivePairs = 1'000'000;
inline constexpr std::size_t kDefaultSampledPairs = 100'000;

class GroundSpace {
 public:
  explicit GroundSpace(std::size_t n) : n_(n) {
    if (n == 0) throw DomainError("GroundSpace: n must be positive");
  }

  GroundSpace(std::vector<double> coords, std::vector<double> widths)
      : n_(coords.size()), coords_(std::move(coords)), widths_(std::move(widths)) {
    if (n_ == 0) throw DomainError("GroundSpace: n must be positive");
    if (widths_.size() != n_) throw DomainError("GroundSpace: widths/coords length mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
      if (!std::isfinite(coords_[i]) || coords_[i] < 0.0)
        throw DomainError("GroundSpace: coordinates must be finite and nonnegative");
      if (i > 0 && !(coords_[i] > coords_[i - 1]))
        throw DomainError("GroundSpace: coordinates must be strictly increasing");
      if (!std::isfinite(widths_[i]) || !(widths_[i] > 0.0))
        throw DomainError("GroundSpace: widths must be positive");
    }
  }

  std::size_t size() const { return n_; }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<double>& widths() const { return widths_; }

 private:
  std::size_t n_;
  std::vector<double> coords_;
  std::vector<double> widths_;
};

enum class CapacityKind { Explicit, Additive, Distorted, Sup, GridLebesgue, Normalized };

inline std::string_view to_string(CapacityKind k) {
  switch (k) {
    case CapacityKind::Explicit: return "explicit";
    case CapacityKind::Additive: return "additive";
    case CapacityKind::Distorted: return "distorted";
    case CapacityKind::Sup: return "sup";
    case CapacityKind::GridLebesgue: return "grid";
    case CapacityKind::Normalized: return "normalized";
  }
  return "?";
}

class Capacity;

namespace repr {
struct Table {
  std::vector<double> values;  // indexed by subset mask
};
struct Additive {
  std::vector<double> weights;
};
// mu(S) = (sum of weights over S)^gamma
struct Distorted {
  std::vector<double> weights;
  double gamma;
};
struct Sup {};
struct Grid {};  // additive over the space's cell widths
// m(B) = mu(A & B) / mu(A)
struct Normalized {
  std::shared_ptr<const Capacity> base;
  Subset restrict_to;
  double denominator;
};
}  // namespace repr

/// A monotone set function on a finite ground space.
///
/// Structured representations are monotone by construction. Explicit tables
/// are stored as given so that check_monotone can diagnose a defective table;
/// builders that promise monotonicity (random_monotone_capacity) enforce it.
class Capacity {
 public:
  using Repr = std::variant<repr::Table, repr::Additive, repr::Distorted, repr::Sup, repr::Grid,
                            repr::Normalized>;

  Capacity(std::shared_ptr<const GroundSpace> space, Range range, Repr r)
      : space_(std::move(space)), range_(range), repr_(std::move(r)) {}

  const GroundSpace& space() const { return *space_; }
  std::shared_ptr<const GroundSpace> space_ptr() const { return space_; }
  std::size_t size() const { return space_->size(); }
  Range range() const { return range_; }
  const Repr& representation() const { return repr_; }

  CapacityKind kind() const {
    return std::visit(
        [](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, repr::Table>) return CapacityKind::Explicit;
          else if constexpr (std::is_same_v<T, repr::Additive>) return CapacityKind::Additive;
          else if constexpr (std::is_same_v<T, repr::Distorted>) return CapacityKind::Distorted;
          else if constexpr (std::is_same_v<T, repr::Sup>) return CapacityKind::Sup;
          else if constexpr (std::is_same_v<T, repr::Grid>) return CapacityKind::GridLebesgue;
          else return CapacityKind::Normalized;
        },
        repr_);
  }

  double operator()(const Subset& s) const { return measure(s); }

  double measure(const Subset& s) const {
    if (s.universe() != size()) throw DomainError("Capacity: subset universe mismatch");
    return clip(std::visit(
        [&](const auto& r) -> double {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, repr::Table>) {
            return r.values[s.mask()];
          } else if constexpr (std::is_same_v<T, repr::Additive>) {
            return weight_sum(r.weights, s);
          } else if constexpr (std::is_same_v<T, repr::Distorted>) {
            return ext_pow(weight_sum(r.weights, s), r.gamma);
          } else if constexpr (std::is_same_v<T, repr::Sup>) {
            return s.none() ? 0.0 : 1.0;
          } else if constexpr (std::is_same_v<T, repr::Grid>) {
            return weight_sum(space_->widths(), s);
          } else {
            return r.base->measure(s & r.restrict_to) / r.denominator;
          }
        },
        repr_));
  }

  /// Values of the nested chain {order[0]}, {order[0], order[1]}, ...
  ///
  /// `order` must list distinct points. The result has order.size() entries.
  std::vector<double> chain(std::span<const std::size_t> order) const {
    std::vector<double> out;
    out.reserve(order.size());
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, repr::Table>) {
            std::uint64_t m = 0;
            for (auto i : order) {
              m |= std::uint64_t{1} << i;
              out.push_back(r.values[m]);
            }
          } else if constexpr (std::is_same_v<T, repr::Additive>) {
            prefix_sums(r.weights, order, out);
          } else if constexpr (std::is_same_v<T, repr::Distorted>) {
            prefix_sums(r.weights, order, out);
            for (auto& v : out) v = ext_pow(v, r.gamma);
          } else if constexpr (std::is_same_v<T, repr::Sup>) {
            out.assign(order.size(), 1.0);
          } else if constexpr (std::is_same_v<T, repr::Grid>) {
            prefix_sums(space_->widths(), order, out);
          } else {
            std::vector<std::size_t> inside;
            for (auto i : order)
              if (r.restrict_to.contains(i)) inside.push_back(i);
            const auto base_chain = r.base->chain(inside);
            std::size_t k = 0;
            for (auto i : order) {
              if (r.restrict_to.contains(i)) ++k;
              out.push_back(k == 0 ? 0.0 : base_chain[k - 1] / r.denominator);
            }
          }
        },
        repr_);
    for (auto& v : out) v = clip(v);
    return out;
  }

  double total() const { return measure(Subset::full(size())); }

  /// All 2^n values indexed by mask (n <= kMaxTableSize).
  std::vector<double> tabulate() const {
    const auto n = size();
    if (n > kMaxTableSize) throw DomainError("Capacity::tabulate: space too large");
    if (auto* t = std::get_if<repr::Table>(&repr_)) return t->values;
    std::vector<double> out(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = measure(Subset::from_mask(n, m));
    return out;
  }

 private:
  // Summed weights can overshoot 1 by rounding on unit-range capacities.
  double clip(double v) const { return range_ == Range::Unit ? std::min(v, 1.0) : v; }

  static double weight_sum(const std::vector<double>& w, const Subset& s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (s.contains(i)) acc += w[i];
    return acc;
  }
  static void prefix_sums(const std::vector<double>& w, std::span<const std::size_t> order,
                          std::vector<double>& out) {
    double acc = 0.0;
    for (auto i : order) {
      acc += w[i];
      out.push_back(acc);
    }
  }

  std::shared_ptr<const GroundSpace> space_;
  Range range_;
  Repr repr_;
};

namespace detail {
inline Range infer_range(double top) { return top <= 1.0 + kStructuralTol ? Range::Unit : Range::ExtendedNonneg; }

inline void validate_weights(const std::vector<double>& w, const char* who) {
  if (w.empty()) throw InvalidCapacity(std::string(who) + ": no points");
  bool positive = false;
  for (double x : w) {
    if (!std::isfinite(x) || x < 0.0)
      throw InvalidCapacity(std::string(who) + ": weights must be finite and nonnegative");
    positive = positive || x > 0.0;
  }
  if (!positive) throw InvalidCapacity(std::string(who) + ": mu(X) must be positive");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Builders

inline Capacity make_additive(std::shared_ptr<const GroundSpace> space, std::vector<double> weights) {
  detail::validate_weights(weights, "make_additive");
  if (weights.size() != space->size()) throw InvalidCapacity("make_additive: one weight per point required");
  double total = 0.0;
  for (double w : weights) total += w;
  return Capacity(std::move(space), detail::infer_range(total), repr::Additive{std::move(weights)});
}
inline Capacity make_additive(std::vector<double> weights) {
  auto space = std::make_shared<const GroundSpace>(std::max<std::size_t>(weights.size(), 1));
  return make_additive(std::move(space), std::move(weights));
}

inline Capacity make_sup_capacity(std::shared_ptr<const GroundSpace> space) {
  return Capacity(std::move(space), Range::Unit, repr::Sup{});
}
inline Capacity make_sup_capacity(std::size_t n) {
  return make_sup_capacity(std::make_shared<const GroundSpace>(n));
}

/// Power-distorted additive measure mu(S) = (sum_{i in S} w_i)^gamma.
/// gamma <= 1 gives a submodular capacity, gamma > 1 a supermodular one.
inline Capacity make_distorted(std::shared_ptr<const GroundSpace> space, std::vector<double> weights,
                               double gamma) {
  detail::validate_weights(weights, "make_distorted");
  if (weights.size() != space->size()) throw InvalidCapacity("make_distorted: one weight per point required");
  if (!std::isfinite(gamma) || !(gamma > 0.0))
    throw InvalidCapacity("make_distorted: gamma must be positive and finite");
  double total = 0.0;
  for (double w : weights) total += w;
  return Capacity(std::move(space), detail::infer_range(std::pow(total, gamma)),
                  repr::Distorted{std::move(weights), gamma});
}
inline Capacity make_distorted(std::vector<double> weights, double gamma) {
  auto space = std::make_shared<const GroundSpace>(std::max<std::size_t>(weights.size(), 1));
  return make_distorted(std::move(space), std::move(weights), gamma);
}

/// Lebesgue measure on [a, b] discretized into `steps` equal cells, one point
/// at each cell midpoint.
inline Capacity make_grid_lebesgue(double a, double b, std::size_t steps) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw DomainError("make_grid_lebesgue: need finite a < b");
  if (a < 0.0) throw DomainError("make_grid_lebesgue: coordinates must be nonnegative");
  if (steps == 0) throw DomainError("make_grid_lebesgue: steps must be positive");
  const double h = (b - a) / static_cast<double>(steps);
  std::vector<double> coords(steps), widths(steps, h);
  for (std::size_t i = 0; i < steps; ++i) coords[i] = a + (static_cast<double>(i) + 0.5) * h;
  auto space = std::make_shared<const GroundSpace>(std::move(coords), std::move(widths));
  return Capacity(space, detail::infer_range(b - a), repr::Grid{});
}

/// Additive measure over a coordinate-bearing space whose weights are the
/// given cell widths.
inline Capacity make_grid_lebesgue(std::shared_ptr<const GroundSpace> space) {
  if (!space->has_coords()) throw DomainError("make_grid_lebesgue: space has no coordinates");
  double total = 0.0;
  for (double w : space->widths()) total += w;
  return Capacity(std::move(space), detail::infer_range(total), repr::Grid{});
}

/// Explicit table of 2^n values indexed by subset mask.
///
/// Enforces mu(empty) = 0, mu(X) > 0, nonnegativity and the range bound.
/// Monotonicity is not enforced here; run check_monotone.
inline Capacity make_explicit(std::shared_ptr<const GroundSpace> space, std::vector<double> table,
                              std::optional<Range> range = std::nullopt) {
  const auto n = space->size();
  if (n > kMaxTableSize) throw InvalidCapacity("make_explicit: n exceeds table limit of 20");
  if (table.size() != (std::size_t{1} << n))
    throw InvalidCapacity("make_explicit: table must have 2^n entries");
  double top = 0.0;
  for (double v : table) {
    if (std::isnan(v) || v < 0.0) throw InvalidCapacity("make_explicit: negative or NaN value");
    top = std::max(top, v);
  }
  if (table.front() != 0.0) throw InvalidCapacity("make_explicit: mu(empty) must be 0");
  if (!(table.back() > 0.0)) throw InvalidCapacity("make_explicit: mu(X) must be positive");
  const Range r = range.value_or(detail::infer_range(top));
  if (r == Range::Unit && top > 1.0 + kStructuralTol) throw InvalidCapacity("make_explicit: values exceed 1");
  return Capacity(std::move(space), r, repr::Table{std::move(table)});
}
inline Capacity make_explicit(std::size_t n, std::vector<double> table,
                              std::optional<Range> range = std::nullopt) {
  return make_explicit(std::make_shared<const GroundSpace>(n), std::move(table), range);
}

/// Random capacity with mu(X) = 1: i.i.d. uniform values per subset, made
/// monotone by one upward max pass over immediate subsets, then rescaled.
inline Capacity random_monotone_capacity(std::shared_ptr<const GroundSpace> space, Rng& rng) {
  const auto n = space->size();
  if (n > kMaxTableSize) throw DomainError("random_monotone_capacity: n too large");
  std::vector<double> t(std::size_t{1} << n);
  for (std::size_t m = 1; m < t.size(); ++m) {
    double v = rng.uniform();
    for (std::size_t i = 0; i < n; ++i)
      if (m & (std::size_t{1} << i)) v = std::max(v, t[m ^ (std::size_t{1} << i)]);
    t[m] = v;
  }
  const double top = t.back();
  for (std::size_t m = 1; m < t.size(); ++m) t[m] = top > 0.0 ? t[m] / top : 1.0;
  t.back() = 1.0;
  return make_explicit(std::move(space), std::move(t), Range::Unit);
}
inline Capacity random_monotone_capacity(std::size_t n, Rng& rng) {
  return random_monotone_capacity(std::make_shared<const GroundSpace>(n), rng);
}

/// m(B) = mu(A & B) / mu(A).
inline Capacity normalize(const Capacity& c, const Subset& a) {
  const double denom = c.measure(a);
  if (!(denom > 0.0) || std::isinf(denom))
    throw DegenerateInput("normalize: mu(A) must lie in (0, inf), got " + std::to_string(denom));
  if (auto* add = std::get_if<repr::Additive>(&c.representation())) {
    std::vector<double> w(add->weights.size(), 0.0);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (a.contains(i)) w[i] = add->weights[i] / denom;
    return Capacity(c.space_ptr(), Range::Unit, repr::Additive{std::move(w)});
  }
  return Capacity(c.space_ptr(), Range::Unit,
                  repr::Normalized{std::make_shared<const Capacity>(c), a, denom});
}

// ---------------------------------------------------------------------------
// Structural property checkers

enum class Property { Monotone, Submodular, Subadditive, Modular };

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::Monotone: return "monotone";
    case Property::Submodular: return "submodular";
    case Property::Subadditive: return "subadditive";
    case Property::Modular: return "modular";
  }
  return "?";
}

enum class CheckMode {
  Auto,        // exhaustive when feasible, else structural verdict, else sampled
  Exhaustive,  // every pair; throws if the pair count exceeds kExhaustivePairs
  Sampled,     // `trials` seeded random pairs
};

struct CheckOptions {
  CheckMode mode = CheckMode::Auto;
  std::size_t trials = kDefaultSampledPairs;
  std::uint64_t seed = 0x5eedULL;
};

struct PropertyReport {
  enum class Mode { Exhaustive, Sampled, Structural };

  Property property;
  bool holds = true;
  Mode mode = Mode::Exhaustive;
  std::size_t pairs_checked = 0;
  std::uint64_t seed = 0;  // meaningful for Sampled only
  std::optional<std::pair<Subset, Subset>> witness;
  // Worst margin rhs - lhs found (for Modular: minus the largest deviation).
  double slack = kInf;
};

inline std::string_view to_string(PropertyReport::Mode m) {
  switch (m) {
    case PropertyReport::Mode::Exhaustive: return "exhaustive";
    case PropertyReport::Mode::Sampled: return "sampled";
    case PropertyReport::Mode::Structural: return "structural";
  }
  return "?";
}

namespace detail {

// Margin of `p` on the pair (A, B); for Monotone the pair is (S, T), S ⊆ T.
inline double pair_margin(Property p, double ma, double mb, double mcap, double mcup) {
  switch (p) {
    case Property::Monotone: return margin(mb, ma);
    case Property::Submodular: return margin(ma + mb, mcap + mcup);
    case Property::Subadditive: return margin(ma + mb, mcup);
    case Property::Modular: return -std::abs(margin(ma + mb, mcap + mcup));
  }
  return 0.0;
}

inline double property_tol(double scale) { return kStructuralTol * std::max(1.0, scale); }

class Recorder {
 public:
  explicit Recorder(PropertyReport& r) : r_(r) {}
  void record(double m, double scale, const Subset& a, const Subset& b) {
    ++r_.pairs_checked;
    if (m < r_.slack) r_.slack = m;
    if (m < -property_tol(scale) && !r_.witness) {
      r_.holds = false;
      r_.witness.emplace(a, b);
    }
  }

 private:
  PropertyReport& r_;
};

inline std::size_t pair_count(Property p, std::size_t n) {
  if (n >= 31) return std::numeric_limits<std::size_t>::max();
  const std::size_t subsets = std::size_t{1} << n;
  if (p == Property::Monotone) return n * (subsets / 2);
  if (n > 15) return std::numeric_limits<std::size_t>::max();
  return subsets * subsets;
}

// Verdict known from the representation, with a re-checkable witness when
// the property fails.
inline std::optional<PropertyReport> structural_verdict(const Capacity& c, Property p) {
  PropertyReport r;
  r.property = p;
  r.mode = PropertyReport::Mode::Structural;
  r.slack = 0.0;
  const auto n = c.size();
  auto singletons = [&](std::size_t i, std::size_t j) {
    return std::pair{Subset::from_indices(n, std::array{i}), Subset::from_indices(n, std::array{j})};
  };
  auto fail_with = [&](std::size_t i, std::size_t j) {
    auto [a, b] = singletons(i, j);
    r.holds = false;
    r.slack = pair_margin(p, c(a), c(b), c(a & b), c(a | b));
    r.witness.emplace(std::move(a), std::move(b));
    return r;
  };
  if (p == Property::Monotone && c.kind() != CapacityKind::Explicit &&
      c.kind() != CapacityKind::Normalized)
    return r;
  switch (c.kind()) {
    case CapacityKind::Additive:
    case CapacityKind::GridLebesgue:
      return r;
    case CapacityKind::Sup:
      if (p == Property::Modular && n >= 2) return fail_with(0, 1);
      return r;
    case CapacityKind::Distorted: {
      const auto& d = std::get<repr::Distorted>(c.representation());
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < n; ++i)
        if (d.weights[i] > 0.0) pos.push_back(i);
      if (pos.size() < 2 || d.gamma == 1.0) return r;
      if (d.gamma < 1.0) {
        if (p == Property::Modular) return fail_with(pos[0], pos[1]);
        return r;
      }
      return fail_with(pos[0], pos[1]);
    }
    case CapacityKind::Normalized: {
      const auto& nr = std::get<repr::Normalized>(c.representation());
      auto base = structural_verdict(*nr.base, p);
      if (base && base->holds) return r;
      return std::nullopt;
    }
    case CapacityKind::Explicit:
      return std::nullopt;
  }
  return std::nullopt;
}

inline PropertyReport check_exhaustive(const Capacity& c, Property p) {
  const auto n = c.size();
  const auto t = c.tabulate();
  PropertyReport r;
  r.property = p;
  r.mode = PropertyReport::Mode::Exhaustive;
  Recorder rec(r);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (p == Property::Monotone) {
    for (std::uint64_t s = 0; s < subsets; ++s)
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (s & bit) continue;
        const double m = margin(t[s | bit], t[s]);
        if (m < r.slack || (m < -property_tol(t[s]) && !r.witness))
          rec.record(m, t[s], Subset::from_mask(n, s), Subset::from_mask(n, s | bit));
        else
          ++r.pairs_checked;
      }
    return r;
  }
  for (std::uint64_t a = 0; a < subsets; ++a)
    for (std::uint64_t b = 0; b < subsets; ++b) {
      const double m = pair_margin(p, t[a], t[b], t[a & b], t[a | b]);
      const double scale = t[a] + t[b];
      if (m < r.slack || (m < -property_tol(scale) && !r.witness))
        rec.record(m, scale, Subset::from_mask(n, a), Subset::from_mask(n, b));
      else
        ++r.pairs_checked;
    }
  return r;
}

inline PropertyReport check_sampled(const Capacity& c, Property p, std::size_t trials,
                                    std::uint64_t seed) {
  const auto n = c.size();
  PropertyReport r;
  r.property = p;
  r.mode = PropertyReport::Mode::Sampled;
  r.seed = seed;
  Recorder rec(r);
  Rng rng(seed);
  auto random_subset = [&] {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.coin()) s.insert(i);
    return s;
  };
  for (std::size_t k = 0; k < trials; ++k) {
    if (p == Property::Monotone) {
      Subset big = random_subset();
      Subset small = big;
      for (std::size_t i = 0; i < n; ++i)
        if (small.contains(i) && rng.coin()) small.erase(i);
      const double ms = c(small);
      rec.record(margin(c(big), ms), ms, small, big);
    } else {
      Subset a = random_subset(), b = random_subset();
      const double ma = c(a), mb = c(b);
      rec.record(pair_margin(p, ma, mb, c(a & b), c(a | b)), ma + mb, a, b);
    }
  }
  return r;
}

}  // namespace detail

inline PropertyReport check_property(const Capacity& c, Property p, const CheckOptions& opt = {}) {
  const auto n = c.size();
  const bool feasible = n <= kMaxTableSize && detail::pair_count(p, n) <= kExhaustivePairs;
  switch (opt.mode) {
    case CheckMode::Exhaustive:
      if (!feasible)
        throw DomainError("check_" + std::string(to_string(p)) +
                          ": exhaustive mode infeasible for n = " + std::to_string(n));
      return detail::check_exhaustive(c, p);
    case CheckMode::Sampled:
      return detail::check_sampled(c, p, opt.trials, opt.seed);
    case CheckMode::Auto:
      break;
  }
  if (feasible) return detail::check_exhaustive(c, p);
  if (auto s = detail::structural_verdict(c, p)) return *s;
  return detail::check_sampled(c, p, opt.trials, opt.seed);
}

inline PropertyReport check_monotone(const Capacity& c, const CheckOptions& opt = {}) {
  return check_property(c, Property::Monotone, opt);
}
inline PropertyReport check_submodular(const Capacity& c, const CheckOptions& opt = {}) {
  return check_property(c, Property::Submodular, opt);
}
inline PropertyReport check_subadditive(const Capacity& c, const CheckOptions& opt = {}) {
  return check_property(c, Property::Subadditive, opt);
}
inline PropertyReport check_modular(const Capacity& c, const CheckOptions& opt = {}) {
  return check_property(c, Property::Modular, opt);
}

/// Re-evaluates a report's witness against `c`; true iff it still violates.
inline bool witness_violates(const Capacity& c, const PropertyReport& r) {
  if (!r.witness) return false;
  const auto& [a, b] = *r.witness;
  const double ma = c(a), mb = c(b);
  double m = 0.0, scale = ma + mb;
  if (r.property == Property::Monotone) {
    if (!a.subset_of(b)) return false;
    m = detail::margin(mb, ma);
    scale = ma;
  } else {
    m = detail::pair_margin(r.property, ma, mb, c(a & b), c(a | b));
  }
  return m < -detail::property_tol(scale);
}

}  // namespace capax
