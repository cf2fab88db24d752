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

// Reference computations used only by the tests. Each one is written from the
// textbook definition and shares no code with the library's evaluators.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// Set function on n points given as a callable over bitmasks.
using SetFn = std::function<double(std::uint64_t)>;

inline std::uint64_t level_mask(const std::vector<double>& f, std::uint64_t a, double alpha) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if ((a >> i & 1U) && f[i] >= alpha) m |= std::uint64_t{1} << i;
  return m;
}

// sup over alpha in {0} and the values of f on A of op(alpha, mu(A & {f >= alpha})).
inline double sup_aggregation(const std::vector<double>& f, const SetFn& mu, std::uint64_t a,
                              const std::function<double(double, double)>& op) {
  double best = op(0.0, mu(level_mask(f, a, 0.0)));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (a >> i & 1U) best = std::max(best, op(f[i], mu(level_mask(f, a, f[i]))));
  return best;
}

inline double sugeno(const std::vector<double>& f, const SetFn& mu, std::uint64_t a) {
  return sup_aggregation(f, mu, a, [](double x, double y) { return std::min(x, y); });
}

inline double shilkret(const std::vector<double>& f, const SetFn& mu, std::uint64_t a) {
  return sup_aggregation(f, mu, a, [](double x, double y) { return x * y; });
}

// Choquet integral through the permutation formula: order the points of A by
// increasing value, f_(1) <= ... <= f_(k), then
//   sum_i (f_(i) - f_(i-1)) mu({(i), ..., (k)}).
inline double choquet(const std::vector<double>& f, const SetFn& mu, std::uint64_t a) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (a >> i & 1U) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return f[x] < f[y]; });
  double prev = 0.0, acc = 0.0;
  std::uint64_t rest = 0;
  for (auto i : idx) rest |= std::uint64_t{1} << i;
  for (auto i : idx) {
    acc += (f[i] - prev) * mu(rest);
    prev = f[i];
    rest &= ~(std::uint64_t{1} << i);
  }
  return acc;
}

// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& fn, double a, double b, std::size_t panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double acc = fn(a) + fn(b);
  for (std::size_t i = 1; i < panels; ++i) acc += fn(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Closed forms for f(x) = 1/(1+x^2) on [0, T].
inline double int_f(double T) { return std::atan(T); }
inline double int_f2(double T) { return 0.5 * (std::atan(T) + T / (1.0 + T * T)); }
inline double int_x2f2(double T) { return 0.5 * (std::atan(T) - T / (1.0 + T * T)); }

// integral over [0, inf) of dx / (b + a x^2).
inline double int_inverse_quadratic(double a, double b) { return std::acos(-1.0) / (2.0 * std::sqrt(a * b)); }

}  // namespace oracle
