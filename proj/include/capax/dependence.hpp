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

// Comonotonicity and positive dependence of function pairs, plus the
// uniform-distribution scenario in which f = φ(U) and h = 1 - ψ(U) are
// positively dependent with respect to the Łukasiewicz t-norm without being
// comonotone.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/integrals.hpp"
#include "capax/operators.hpp"

namespace capax {

struct DependenceReport {
  enum class Kind { Comonotone, PositivelyDependent };
  Kind kind = Kind::Comonotone;
  std::string op;  // ▵ for PositivelyDependent
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness_points;  // Comonotone
  std::optional<std::pair<double, double>> witness_levels;            // PositivelyDependent
  double worst_slack = kInf;                                          // PositivelyDependent
};

enum class ComonotoneMethod { Auto, Pairwise, Sorted };

inline constexpr std::size_t kPairwiseComonotoneLimit = 10'000;

namespace detail {
inline bool discordant(double fx, double fy, double gx, double gy) {
  return (fx < fy && gx > gy) || (fx > fy && gx < gy);
}
}  // namespace detail

/// (f(x) - f(y)) (g(x) - g(y)) ≥ 0 for all x, y in `on` (all points by default).
///
/// The sorted path orders points by (f, g); f and g are comonotone iff g is
/// then nondecreasing, and the first descent is a discordant pair.
inline DependenceReport is_comonotone(const SampleFunction& f, const SampleFunction& g,
                                      std::optional<Subset> on = std::nullopt,
                                      ComonotoneMethod method = ComonotoneMethod::Auto) {
  if (f.size() != g.size()) throw DomainError("is_comonotone: functions live on different spaces");
  if (on && on->universe() != f.size()) throw DomainError("is_comonotone: subset universe mismatch");
  std::vector<std::size_t> pts = on ? on->indices() : [&] {
    std::vector<std::size_t> all(f.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return all;
  }();
  DependenceReport r;
  if (method == ComonotoneMethod::Auto)
    method = pts.size() > kPairwiseComonotoneLimit ? ComonotoneMethod::Sorted : ComonotoneMethod::Pairwise;
  if (method == ComonotoneMethod::Pairwise) {
    for (std::size_t x = 0; x < pts.size(); ++x)
      for (std::size_t y = x + 1; y < pts.size(); ++y) {
        const auto i = pts[x], j = pts[y];
        if (detail::discordant(f[i], f[j], g[i], g[j])) {
          r.holds = false;
          r.witness_points.emplace(i, j);
          return r;
        }
      }
    return r;
  }
  std::sort(pts.begin(), pts.end(), [&](std::size_t i, std::size_t j) {
    if (f[i] != f[j]) return f[i] < f[j];
    if (g[i] != g[j]) return g[i] < g[j];
    return i < j;
  });
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    if (g[pts[k]] > g[pts[k + 1]]) {
      r.holds = false;
      r.witness_points.emplace(std::min(pts[k], pts[k + 1]), std::max(pts[k], pts[k + 1]));
      return r;
    }
  return r;
}

namespace detail {

// Levels at which the upper level set of f on A changes: 0, each distinct
// value, and (when sup Y is not attained) a level above the maximum, whose
// level set is empty.
inline std::vector<double> dependence_levels(const SampleFunction& f, const Subset& a, Range y) {
  std::vector<double> lv{0.0};
  for (std::size_t i = 0; i < f.size(); ++i)
    if (a.contains(i)) lv.push_back(f[i]);
  std::sort(lv.begin(), lv.end());
  lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
  const double top = lv.back();
  if (y == Range::Unit && top < 1.0) lv.push_back((top + 1.0) / 2.0);
  if (y == Range::ExtendedNonneg && !std::isinf(top)) lv.push_back(2.0 * top + 1.0);
  return lv;
}

inline Subset upper_level_set(const SampleFunction& f, const Subset& a, double level) {
  Subset s(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (a.contains(i) && f[i] >= level) s.insert(i);
  return s;
}

}  // namespace detail

/// μ({f|_A ≥ a} ∩ {g|_B ≥ b}) ≥ μ({f|_A ≥ a}) ▵ μ({g|_B ≥ b}) for all a, b in Y,
/// with Y the domain of ▵.
///
/// Both sides depend on (a, b) only through the two level sets, so checking
/// the levels where those sets change makes the test exact.
inline DependenceReport check_positive_dependence(const SampleFunction& f, const Subset& a,
                                                  const SampleFunction& g, const Subset& b,
                                                  const Capacity& c, const AggOperator& tri) {
  detail::check_shapes(f, c, a);
  detail::check_shapes(g, c, b);
  if (tri.domain() == Range::Unit && c.range() != Range::Unit)
    throw DomainError("check_positive_dependence: " + tri.name() + " needs a unit-valued capacity");
  DependenceReport r;
  r.kind = DependenceReport::Kind::PositivelyDependent;
  r.op = tri.name();
  const auto lf = detail::dependence_levels(f, a, tri.domain());
  const auto lg = detail::dependence_levels(g, b, tri.domain());
  std::vector<double> gmeasures;
  for (double lb : lg) gmeasures.push_back(c(detail::upper_level_set(g, b, lb)));

  // For fixed a the sets {f >= a} ∩ {g >= b} are prefixes of the points of
  // {f >= a} ∩ B ordered by decreasing g, so one chain yields all of them.
  std::vector<std::size_t> by_g = b.indices();
  std::stable_sort(by_g.begin(), by_g.end(), [&](std::size_t i, std::size_t j) { return g[i] > g[j]; });
  const double empty = c(Subset::empty(c.size()));
  std::vector<std::size_t> order;
  for (double la : lf) {
    const Subset fs = detail::upper_level_set(f, a, la);
    const double mf = c(fs);
    order.clear();
    for (auto i : by_g)
      if (fs.contains(i)) order.push_back(i);
    const auto chain = c.chain(order);
    std::size_t taken = order.size();
    for (std::size_t k = 0; k < lg.size(); ++k) {
      while (taken > 0 && g[order[taken - 1]] < lg[k]) --taken;
      const double lhs = taken == 0 ? empty : chain[taken - 1];
      const double rhs = tri(mf, gmeasures[k]);
      const double slack = detail::margin(lhs, rhs);
      r.worst_slack = std::min(r.worst_slack, slack);
      if (slack < -kStructuralTol * std::max(1.0, rhs) && r.holds) {
        r.holds = false;
        r.witness_levels.emplace(la, lg[k]);
      }
    }
  }
  return r;
}

/// Named increasing bijections of [0,1].
enum class UnitMap { Identity, Square, Sqrt };

inline std::optional<UnitMap> unit_map_by_name(std::string_view s) {
  if (s == "identity" || s == "x" || s == "t") return UnitMap::Identity;
  if (s == "square" || s == "x^2" || s == "t^2") return UnitMap::Square;
  if (s == "sqrt") return UnitMap::Sqrt;
  return std::nullopt;
}

inline std::string_view to_string(UnitMap m) {
  switch (m) {
    case UnitMap::Identity: return "identity";
    case UnitMap::Square: return "square";
    case UnitMap::Sqrt: return "sqrt";
  }
  return "?";
}

inline double apply(UnitMap m, double t) {
  switch (m) {
    case UnitMap::Identity: return t;
    case UnitMap::Square: return t * t;
    case UnitMap::Sqrt: return std::sqrt(t);
  }
  return t;
}

struct UniformExample {
  SampleFunction f;  // φ(U)
  SampleFunction h;  // 1 - ψ(U)
  Capacity P;        // uniform probability on the grid
};

/// U uniform on n midpoints of [0,1]; f = φ(U), h = 1 - ψ(U).
inline UniformExample make_uniform_example(UnitMap phi, UnitMap psi, std::size_t n) {
  const auto grid = make_grid_lebesgue(0.0, 1.0, n);
  auto P = normalize(grid, Subset::full(n));
  const auto& u = grid.space().coords();
  std::vector<double> f(n), h(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = apply(phi, u[i]);
    h[i] = std::clamp(1.0 - apply(psi, u[i]), 0.0, 1.0);
  }
  return {SampleFunction(std::move(f), Range::Unit), SampleFunction(std::move(h), Range::Unit), std::move(P)};
}

inline UniformExample make_uniform_example(std::string_view phi_id, std::string_view psi_id, std::size_t n) {
  auto phi = unit_map_by_name(phi_id), psi = unit_map_by_name(psi_id);
  if (!phi || !psi) throw DomainError("make_uniform_example: unknown function id");
  return make_uniform_example(*phi, *psi, n);
}

}  // namespace capax
