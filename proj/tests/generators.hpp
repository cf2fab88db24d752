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

// Hand-rolled generators for the property suites. Every generator takes an
// explicit Rng so failures can be replayed from the reported seed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/integrals.hpp"
#include "capax/random.hpp"

namespace gen {

using capax::Capacity;
using capax::Rng;
using capax::SampleFunction;
using capax::Subset;

inline std::vector<double> values(Rng& rng, std::size_t n, double hi = 1.0, double zero_prob = 0.15) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.coin(zero_prob) ? 0.0 : rng.uniform(0.0, hi);
  return v;
}

inline SampleFunction function(Rng& rng, std::size_t n, double hi = 1.0) {
  return SampleFunction(values(rng, n, hi));
}

// Values drawn from a small lattice so that ties are frequent.
inline SampleFunction lattice_function(Rng& rng, std::size_t n, int steps = 4, double hi = 1.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = hi * static_cast<double>(rng.between(0, static_cast<std::size_t>(steps))) / steps;
  return SampleFunction(v);
}

// Nondecreasing image of `driver`, so the result is comonotone with it.
inline SampleFunction increasing_image(Rng& rng, const SampleFunction& driver, double hi = 1.0) {
  std::vector<double> levels(driver.values());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<double> img(levels.size());
  double acc = rng.uniform(0.0, 0.3);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k > 0 && rng.coin(0.8)) acc += rng.uniform();
    img[k] = acc;
  }
  const double scale = hi / std::max(img.back(), 1.0);
  std::vector<double> out(driver.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto k = std::lower_bound(levels.begin(), levels.end(), driver[i]) - levels.begin();
    out[i] = img[static_cast<std::size_t>(k)] * scale;
  }
  return SampleFunction(out);
}

inline Subset subset(Rng& rng, std::size_t n, bool nonempty = true) {
  Subset s(n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      if (rng.coin()) s.insert(i);
  } while (nonempty && s.none());
  return s;
}

inline std::vector<double> weights(Rng& rng, std::size_t n, double total = 1.0) {
  auto w = values(rng, n, 1.0, 0.1);
  w[rng.below(n)] += 0.1;
  double sum = 0.0;
  for (double x : w) sum += x;
  for (auto& x : w) x *= total / sum;
  return w;
}

// One capacity from a rotating set of builders.
inline Capacity capacity(Rng& rng, std::size_t n, bool unit = true) {
  const double total = unit ? 1.0 : rng.uniform(0.5, 3.0);
  switch (rng.below(5)) {
    case 0: return capax::make_additive(weights(rng, n, total));
    case 1: return capax::make_distorted(weights(rng, n, unit ? 1.0 : total), rng.uniform(0.2, 1.0));
    case 2: return capax::make_distorted(weights(rng, n, 1.0), rng.uniform(1.0, 3.0));
    case 3: return capax::make_sup_capacity(n);
    default: return capax::random_monotone_capacity(n, rng);
  }
}

inline std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace gen
