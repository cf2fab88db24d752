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

// Randomized audits of the inequality checkers.
//
// A Scenario is plain data (no shared pointers, no closures) so that it can be
// written to a file and replayed. evaluate() rebuilds every object from it and
// dispatches to the checker named by `theorem`.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/dependence.hpp"
#include "capax/inequalities.hpp"
#include "capax/integrals.hpp"
#include "capax/operators.hpp"
#include "capax/random.hpp"

namespace capax {

struct CapacitySpec {
  enum class Type { Additive, Distorted, Sup, Explicit, Grid };
  Type type = Type::Additive;
  std::vector<double> weights;  // Additive, Distorted
  double gamma = 1.0;           // Distorted
  std::vector<double> table;    // Explicit, indexed by subset mask
  // Grid: Lebesgue cell weights are the scenario's widths.

  bool operator==(const CapacitySpec&) const = default;
};

inline std::string_view to_string(CapacitySpec::Type t) {
  switch (t) {
    case CapacitySpec::Type::Additive: return "additive";
    case CapacitySpec::Type::Distorted: return "distorted";
    case CapacitySpec::Type::Sup: return "sup";
    case CapacitySpec::Type::Explicit: return "explicit";
    case CapacitySpec::Type::Grid: return "grid";
  }
  return "?";
}

struct Scenario {
  std::string theorem;
  std::size_t n = 1;
  std::vector<double> coords, widths;  // both empty unless the space has coordinates
  CapacitySpec capacity;
  std::vector<std::size_t> a, b;       // point indices of A and B
  std::vector<double> f, g, h;
  std::string system;                  // operator system (Sugeno-type theorems)
  std::string op;                      // single operator (jensen-sugeno)
  Range domain = Range::Unit;          // domain of `op`
  double p = 2.0, q = 2.0, r = 1.0, s = 1.0;

  bool operator==(const Scenario&) const = default;
};

// ---------------------------------------------------------------------------
// Theorem registry

struct TheoremInfo {
  std::string_view id;
  std::vector<std::string_view> hypotheses;
};

inline const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> reg = {
      {theorem::kJensenSugeno, {"power_condition"}},
      {theorem::kChebyshevSugeno, {"chebyshev_condition", "positive_dependence"}},
      {theorem::kCarlsonSugeno,
       {"power_condition", "chebyshev_condition", "positive_dependence_g", "positive_dependence_h",
        "left_continuous_lhd"}},
      {theorem::kXuOuyang, {"power_condition", "positive_dependence_g", "positive_dependence_h"}},
      {theorem::kWang, {"power_condition", "positive_dependence_g", "positive_dependence_h"}},
      {theorem::kShilkretExample,
       {"power_condition", "chebyshev_condition", "positive_dependence_g", "positive_dependence_h"}},
      {theorem::kLukasiewiczExample,
       {"power_condition", "chebyshev_condition", "positive_dependence_g", "positive_dependence_h", "probability"}},
      {theorem::kJensenChoquet, {"measure_finite_positive"}},
      {theorem::kChebyshevChoquet, {"comonotone", "measure_finite_positive"}},
      {theorem::kCarlsonChoquetComonotone, {"comonotone_g", "comonotone_h", "measure_finite_positive", "integrable"}},
      {theorem::kOuyangChoquet, {"comonotone_h", "measure_finite_positive"}},
      {theorem::kSharpness, {"comonotone_g", "comonotone_h"}},
      {theorem::kHolderChoquet, {"submodular"}},
      {theorem::kCarlsonChoquetSubmodular, {"submodular"}},
      {theorem::kCarlsonChoquetSubadditive, {"subadditive", "coordinates"}},
  };
  return reg;
}

inline const TheoremInfo* find_theorem(std::string_view id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return &t;
  return nullptr;
}

inline const TheoremInfo& require_theorem(std::string_view id) {
  if (const auto* t = find_theorem(id)) return *t;
  throw DomainError("unknown theorem id '" + std::string(id) + "'");
}

inline std::vector<std::string_view> theorem_ids() {
  std::vector<std::string_view> out;
  for (const auto& t : theorem_registry()) out.push_back(t.id);
  return out;
}

// Theorems whose checker takes an operator system.
inline bool uses_system(std::string_view id) {
  return id == theorem::kChebyshevSugeno || id == theorem::kCarlsonSugeno;
}

inline OperatorSystem system_by_name(std::string_view name) {
  for (auto& s : builtin_systems())
    if (s.name == name) return s;
  if (name == "sugeno-product") return sugeno_product_system();
  if (name == "lukasiewicz-product") return lukasiewicz_product_system();
  throw DomainError("unknown operator system '" + std::string(name) + "'");
}

inline std::vector<std::string> system_names() {
  std::vector<std::string> out;
  for (const auto& s : builtin_systems()) out.push_back(s.name);
  out.push_back("sugeno-product");
  out.push_back("lukasiewicz-product");
  return out;
}

inline AggOperator operator_by_name(std::string_view name, Range domain) {
  if (auto op = AggOperator::by_name(name, domain)) return *op;
  throw DomainError("unknown operator '" + std::string(name) + "' on " + std::string(to_string(domain)));
}

// ---------------------------------------------------------------------------
// Replay

inline std::shared_ptr<const GroundSpace> build_space(const Scenario& sc) {
  if (sc.coords.empty()) {
    if (!sc.widths.empty()) throw DomainError("scenario: widths given without coordinates");
    return std::make_shared<const GroundSpace>(sc.n);
  }
  if (sc.coords.size() != sc.n) throw DomainError("scenario: one coordinate per point required");
  return std::make_shared<const GroundSpace>(sc.coords, sc.widths);
}

inline Capacity build_capacity(const Scenario& sc, std::shared_ptr<const GroundSpace> space) {
  const auto& spec = sc.capacity;
  switch (spec.type) {
    case CapacitySpec::Type::Additive: return make_additive(std::move(space), spec.weights);
    case CapacitySpec::Type::Distorted: return make_distorted(std::move(space), spec.weights, spec.gamma);
    case CapacitySpec::Type::Sup: return make_sup_capacity(std::move(space));
    case CapacitySpec::Type::Explicit: return make_explicit(std::move(space), spec.table);
    case CapacitySpec::Type::Grid: return make_grid_lebesgue(std::move(space));
  }
  throw DomainError("scenario: unknown capacity type");
}

inline Capacity build_capacity(const Scenario& sc) { return build_capacity(sc, build_space(sc)); }

inline Subset build_subset(const Scenario& sc, const std::vector<std::size_t>& idx) {
  for (auto i : idx)
    if (i >= sc.n) throw DomainError("scenario: subset index " + std::to_string(i) + " out of range");
  return Subset::from_indices(sc.n, idx);
}

inline SampleFunction build_function(const Scenario& sc, const std::vector<double>& v, const char* name) {
  if (v.size() != sc.n) throw DomainError(std::string("scenario: function ") + name + " needs one value per point");
  return SampleFunction(v);
}

/// Runs the checker named by sc.theorem on the scenario's data.
inline InequalityReport evaluate(const Scenario& sc, ConditionCache* cache = nullptr) {
  namespace th = theorem;
  require_theorem(sc.theorem);
  const auto space = build_space(sc);
  const auto c = build_capacity(sc, space);
  const auto A = build_subset(sc, sc.a);
  const std::string_view id = sc.theorem;
  auto fn = [&](const std::vector<double>& v, const char* name) { return build_function(sc, v, name); };

  if (id == th::kJensenSugeno)
    return jensen_sugeno(fn(sc.f, "f"), c, A, operator_by_name(sc.op, sc.domain), sc.s, cache);
  if (id == th::kChebyshevSugeno)
    return chebyshev_sugeno(system_by_name(sc.system), fn(sc.f, "f"), fn(sc.g, "g"), A, build_subset(sc, sc.b),
                            c, cache);
  if (id == th::kCarlsonSugeno)
    return carlson_sugeno(system_by_name(sc.system).with_exponents(sc.p, sc.q, sc.r, sc.s), fn(sc.f, "f"),
                          fn(sc.g, "g"), fn(sc.h, "h"), A, build_subset(sc, sc.b), c, cache);
  if (id == th::kXuOuyang)
    return carlson_sugeno_xu(fn(sc.f, "f"), fn(sc.g, "g"), fn(sc.h, "h"), A, c, sc.p, sc.q, cache);
  if (id == th::kWang)
    return carlson_sugeno_wang(fn(sc.f, "f"), fn(sc.g, "g"), fn(sc.h, "h"), A, c, sc.p, sc.q, cache);
  if (id == th::kShilkretExample) return shilkret_carlson_example(fn(sc.f, "f"), A, c, cache);
  if (id == th::kLukasiewiczExample)
    return lukasiewicz_carlson_example(fn(sc.f, "f"), fn(sc.h, "h"), c, sc.p, sc.q, cache);
  if (id == th::kJensenChoquet) return jensen_choquet(fn(sc.f, "f"), c, A, sc.s);
  if (id == th::kChebyshevChoquet) return chebyshev_choquet(fn(sc.f, "f"), fn(sc.g, "g"), c, A);
  if (id == th::kCarlsonChoquetComonotone)
    return carlson_choquet_comonotone(fn(sc.f, "f"), fn(sc.g, "g"), fn(sc.h, "h"), A, c, sc.p, sc.q, sc.r, sc.s);
  if (id == th::kOuyangChoquet) return ouyang_choquet(fn(sc.f, "f"), fn(sc.h, "h"), A, c, sc.p, sc.q);
  if (id == th::kSharpness) return sharpness_demo(fn(sc.f, "f"), fn(sc.g, "g"), fn(sc.h, "h"), A, sc.r, sc.s);
  if (id == th::kHolderChoquet) return holder_choquet(fn(sc.f, "f"), fn(sc.g, "g"), c, A, sc.p);
  if (id == th::kCarlsonChoquetSubmodular)
    return carlson_choquet_submodular(fn(sc.f, "f"), fn(sc.g, "g"), fn(sc.h, "h"), A, c, sc.p);
  return carlson_choquet_subadditive(fn(sc.f, "f"), fn(sc.g, "g"), fn(sc.h, "h"), A, c, sc.p);
}

// ---------------------------------------------------------------------------
// Generation

enum class Strategy {
  Default,        // the theorem's usual family: comonotone where the theorem asks for it
  Comonotone,     // every function is a nondecreasing transform of one driver
  Independent,    // independent random functions, capacities from the theorem's family
  Unconstrained,  // independent functions and capacities from every family
};

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Default: return "default";
    case Strategy::Comonotone: return "comonotone";
    case Strategy::Independent: return "independent";
    case Strategy::Unconstrained: return "unconstrained";
  }
  return "?";
}

inline std::optional<Strategy> strategy_by_name(std::string_view s) {
  if (s == "default") return Strategy::Default;
  if (s == "comonotone" || s == "positively-dependent") return Strategy::Comonotone;
  if (s == "independent") return Strategy::Independent;
  if (s == "unconstrained") return Strategy::Unconstrained;
  return std::nullopt;
}

struct ScenarioConfig {
  std::string theorem;
  Strategy strategy = Strategy::Default;
  std::size_t max_points = 8;
  std::string system;  // empty: drawn per scenario from the builtin systems
  std::string op;      // empty: drawn per scenario (jensen-sugeno)
};

namespace gen {

inline constexpr double kExponents[] = {1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0};

inline double exponent(Rng& rng, bool strictly_above_one) {
  const std::size_t lo = strictly_above_one ? 1 : 0;
  return kExponents[rng.between(lo, std::size(kExponents) - 1)];
}

inline double positive_exponent(Rng& rng) { return std::round(rng.uniform(0.25, 3.0) * 64.0) / 64.0; }

inline double value(Rng& rng, double hi, double zero_prob) {
  if (rng.coin(zero_prob)) return 0.0;
  return rng.uniform(0.0, hi);
}

inline std::vector<double> values(Rng& rng, std::size_t n, double hi, double zero_prob = 0.15) {
  std::vector<double> v(n);
  for (auto& x : v) x = value(rng, hi, zero_prob);
  return v;
}

// Nondecreasing image of `driver`: equal driver values map to equal outputs.
inline std::vector<double> transform(Rng& rng, const std::vector<double>& driver, double hi) {
  std::vector<double> levels(driver);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<double> out_levels(levels.size());
  double acc = rng.coin(0.3) ? 0.0 : rng.uniform();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k > 0 && !rng.coin(0.2)) acc += rng.uniform();
    out_levels[k] = acc;
  }
  const double top = out_levels.back();
  const double scale = top > 0.0 ? rng.uniform(0.3, 1.0) * hi / top : 0.0;
  std::vector<double> out(driver.size());
  for (std::size_t i = 0; i < driver.size(); ++i) {
    const auto k = static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), driver[i]) -
                                            levels.begin());
    out[i] = std::min(hi, out_levels[k] * scale);
  }
  return out;
}

inline std::vector<std::size_t> subset(Rng& rng, std::size_t n, double full_prob = 0.5) {
  std::vector<std::size_t> out;
  if (rng.coin(full_prob)) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
    return out;
  }
  while (out.empty())
    for (std::size_t i = 0; i < n; ++i)
      if (rng.coin()) out.push_back(i);
  return out;
}

inline void coordinates(Scenario& sc, Rng& rng, double hi) {
  std::vector<double> gaps(sc.n);
  double total = 0.0;
  for (auto& g : gaps) total += (g = rng.uniform(0.2, 1.0));
  sc.coords.assign(sc.n, 0.0);
  sc.widths.assign(sc.n, 0.0);
  double x = rng.coin(0.3) ? 0.0 : 0.5 * gaps[0] * hi / total;
  for (std::size_t i = 0; i < sc.n; ++i) {
    sc.coords[i] = x;
    sc.widths[i] = gaps[i] * hi / total;
    if (i + 1 < sc.n) x += gaps[i + 1] * hi / total;
  }
}

enum class Family {
  Explicit,   // random monotone table
  Additive,
  Concave,    // power distortion with gamma <= 1
  Convex,     // power distortion with gamma > 1
  Sup,
  Maxitive,   // mu(S) = max weight in S
  Cardinal,   // mu(S) = ceil(|S|/2) / ceil(n/2): subadditive, not submodular
  Grid,       // Lebesgue weights on the coordinates
};

inline CapacitySpec capacity(Rng& rng, const Scenario& sc, Family fam, bool unit) {
  CapacitySpec spec;
  const auto n = sc.n;
  const double total = unit ? rng.uniform(0.3, 1.0) : rng.uniform(0.3, 3.0);
  auto weights = [&] {
    auto w = values(rng, n, 1.0, 0.1);
    if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) w[rng.below(n)] = 1.0;
    double sum = 0.0;
    for (double x : w) sum += x;
    for (auto& x : w) x *= total / sum;
    return w;
  };
  auto tabulate = [&](auto&& mu) {
    spec.type = CapacitySpec::Type::Explicit;
    spec.table.assign(std::size_t{1} << n, 0.0);
    for (std::uint64_t m = 1; m < spec.table.size(); ++m) spec.table[m] = mu(m);
  };
  switch (fam) {
    case Family::Explicit: {
      Rng local(rng.next());
      const auto c = random_monotone_capacity(n, local);
      spec.type = CapacitySpec::Type::Explicit;
      spec.table = c.tabulate();
      const double k = unit ? 1.0 : total;
      for (auto& v : spec.table) v *= k;
      break;
    }
    case Family::Additive:
      spec.type = CapacitySpec::Type::Additive;
      spec.weights = weights();
      break;
    case Family::Concave:
    case Family::Convex:
      spec.type = CapacitySpec::Type::Distorted;
      spec.weights = weights();
      spec.gamma = fam == Family::Concave ? rng.uniform(0.2, 1.0) : rng.uniform(1.2, 3.0);
      break;
    case Family::Sup:
      spec.type = CapacitySpec::Type::Sup;
      break;
    case Family::Maxitive: {
      const auto w = weights();
      double top = *std::max_element(w.begin(), w.end());
      const double k = (unit ? 1.0 : total) / top;
      tabulate([&](std::uint64_t m) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1U) v = std::max(v, w[i]);
        return v * k;
      });
      break;
    }
    case Family::Cardinal: {
      const double k = (unit ? 1.0 : total) / std::ceil(static_cast<double>(n) / 2.0);
      tabulate([&](std::uint64_t m) { return std::ceil(static_cast<double>(std::popcount(m)) / 2.0) * k; });
      break;
    }
    case Family::Grid:
      spec.type = CapacitySpec::Type::Grid;
      break;
  }
  return spec;
}

template <std::size_t N>
Family pick(Rng& rng, const Family (&fams)[N]) {
  return fams[rng.below(N)];
}

}  // namespace gen

/// Deterministic per (config, seed). Under Strategy::Default the emitted
/// scenario targets the theorem's hypotheses; they are not guaranteed, and
/// audit() resamples until the checker confirms them.
inline Scenario random_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  namespace th = theorem;
  using gen::Family;
  const auto& info = require_theorem(cfg.theorem);
  if (cfg.max_points < 1 || cfg.max_points > 12) throw DomainError("random_scenario: max_points must be in [1, 12]");
  Rng rng(seed);
  const std::string_view id = info.id;
  const bool unconstrained = cfg.strategy == Strategy::Unconstrained;

  Strategy fs = cfg.strategy;
  if (fs == Strategy::Default) {
    const bool independent = id == th::kLukasiewiczExample || id == th::kHolderChoquet ||
                             id == th::kCarlsonChoquetSubmodular || id == th::kCarlsonChoquetSubadditive ||
                             id == th::kJensenSugeno || id == th::kJensenChoquet;
    fs = independent ? Strategy::Independent : Strategy::Comonotone;
  }

  Scenario sc;
  sc.theorem = std::string(id);
  sc.n = rng.between(id == th::kChebyshevChoquet || unconstrained ? 2 : 1, cfg.max_points);
  if (sc.n > cfg.max_points) sc.n = cfg.max_points;

  // Sugeno-type theorems whose operators live on [0,1].
  bool unit = id == th::kChebyshevSugeno || id == th::kCarlsonSugeno || id == th::kXuOuyang || id == th::kWang ||
              id == th::kShilkretExample || id == th::kLukasiewiczExample;

  if (id == th::kJensenSugeno) {
    static const std::pair<const char*, Range> ops[] = {
        {"min", Range::Unit},  {"prod", Range::Unit},           {"dombi", Range::Unit},
        {"min", Range::ExtendedNonneg}, {"prod", Range::ExtendedNonneg}, {"lukasiewicz", Range::Unit}};
    const std::size_t count = unconstrained ? std::size(ops) : std::size(ops) - 1;
    const auto& [name, dom] = ops[rng.below(count)];
    sc.op = cfg.op.empty() ? name : cfg.op;
    sc.domain = cfg.op.empty() ? dom : (rng.coin() ? Range::Unit : Range::ExtendedNonneg);
    if (sc.op == "lukasiewicz" || sc.op == "dombi") sc.domain = Range::Unit;
    unit = sc.domain == Range::Unit;
    sc.s = gen::exponent(rng, false);
  }
  if (uses_system(id)) {
    sc.system = cfg.system.empty() ? builtin_systems()[rng.below(6)].name : cfg.system;
    system_by_name(sc.system);
  }

  const double hi = unit ? 1.0 : 4.0;
  if (id == th::kShilkretExample || id == th::kCarlsonChoquetSubadditive || rng.coin(0.2))
    gen::coordinates(sc, rng, id == th::kShilkretExample ? 1.0 : rng.uniform(0.5, 3.0));

  // Capacity family.
  Family fam;
  if (id == th::kLukasiewiczExample) {
    fam = Family::Additive;
  } else if (unconstrained) {
    static const Family all[] = {Family::Explicit, Family::Additive, Family::Concave, Family::Convex,
                                 Family::Sup,      Family::Maxitive, Family::Cardinal};
    fam = gen::pick(rng, all);
  } else if (id == th::kHolderChoquet || id == th::kCarlsonChoquetSubmodular) {
    static const Family sub[] = {Family::Additive, Family::Concave, Family::Sup, Family::Maxitive};
    fam = gen::pick(rng, sub);
  } else if (id == th::kCarlsonChoquetSubadditive) {
    static const Family sub[] = {Family::Additive, Family::Concave, Family::Sup, Family::Maxitive,
                                 Family::Cardinal, Family::Grid};
    fam = gen::pick(rng, sub);
  } else {
    static const Family any[] = {Family::Explicit, Family::Additive, Family::Concave, Family::Convex,
                                 Family::Sup,      Family::Maxitive, Family::Cardinal};
    fam = gen::pick(rng, any);
  }
  if (fam == Family::Grid && sc.coords.empty()) fam = Family::Additive;
  sc.capacity = gen::capacity(rng, sc, fam, unit);
  if (id == th::kLukasiewiczExample) {
    double sum = 0.0;
    for (double w : sc.capacity.weights) sum += w;
    for (auto& w : sc.capacity.weights) w /= sum;
  }

  // Subsets.
  const bool two_sets = uses_system(id);
  sc.a = gen::subset(rng, sc.n, unconstrained ? 0.3 : 0.6);
  sc.b = two_sets ? (rng.coin(unconstrained ? 0.3 : 0.7) ? sc.a : gen::subset(rng, sc.n)) : sc.a;
  if (id == th::kLukasiewiczExample) sc.a = sc.b = gen::subset(rng, sc.n, 1.0);

  // Functions.
  const std::size_t n = sc.n;
  if (id == th::kShilkretExample) {
    auto d = sc.coords;
    sc.f = gen::transform(rng, d, hi);
  } else if (fs == Strategy::Comonotone) {
    const auto driver = gen::values(rng, n, 1.0, 0.1);
    sc.f = gen::transform(rng, driver, hi);
    sc.g = gen::transform(rng, driver, hi);
    sc.h = gen::transform(rng, driver, hi);
  } else {
    sc.f = gen::values(rng, n, hi);
    sc.g = gen::values(rng, n, hi);
    sc.h = gen::values(rng, n, hi);
  }
  if (id == th::kOuyangChoquet) sc.g.assign(n, 1.0);
  if (sc.g.empty()) sc.g.assign(n, 1.0);
  if (sc.h.empty()) sc.h.assign(n, 1.0);

  // Exponents.
  const bool conjugate = id == th::kHolderChoquet || id == th::kCarlsonChoquetSubmodular ||
                         id == th::kCarlsonChoquetSubadditive;
  sc.p = gen::exponent(rng, conjugate);
  sc.q = gen::exponent(rng, false);
  if (id != th::kJensenSugeno) {
    sc.r = gen::positive_exponent(rng);
    sc.s = gen::positive_exponent(rng);
  }
  if (id == th::kJensenChoquet) sc.s = gen::exponent(rng, false);
  if (id == th::kXuOuyang || id == th::kCarlsonSugeno) {
    if (id == th::kXuOuyang || rng.coin(0.3)) sc.r = sc.s = 1.0;
  }
  return sc;
}

// ---------------------------------------------------------------------------
// Audits and counterexample search

inline constexpr std::size_t kMaxGenerationAttempts = 64;
inline constexpr std::size_t kMaxShrinkSteps = 200;

/// CAPAX_THREADS if set to a positive integer, else the hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("CAPAX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t remap_index(std::size_t i, std::size_t dropped) { return i > dropped ? i - 1 : i; }

}  // namespace detail

/// The scenario with point `i` removed. Explicit tables are restricted to
/// subsets avoiding i, which keeps them monotone.
inline Scenario drop_point(const Scenario& sc, std::size_t i) {
  Scenario out = sc;
  out.n = sc.n - 1;
  auto erase = [i](std::vector<double>& v) {
    if (i < v.size()) v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  };
  erase(out.coords);
  erase(out.widths);
  erase(out.f);
  erase(out.g);
  erase(out.h);
  erase(out.capacity.weights);
  if (out.capacity.type == CapacitySpec::Type::Explicit) {
    std::vector<double> t(std::size_t{1} << out.n);
    const std::uint64_t low = (std::uint64_t{1} << i) - 1;
    for (std::uint64_t m = 0; m < t.size(); ++m) t[m] = sc.capacity.table[(m & low) | ((m & ~low) << 1)];
    out.capacity.table = std::move(t);
  }
  for (auto* set : {&out.a, &out.b}) {
    std::vector<std::size_t> kept;
    for (auto j : *set)
      if (j != i) kept.push_back(detail::remap_index(j, i));
    *set = std::move(kept);
  }
  return out;
}

using ScenarioPredicate = std::function<bool(const Scenario&)>;

/// Greedy shrink: drop points, then snap function values and weights to
/// multiples of 1/8, keeping each change only if `still_bad` holds. At most
/// `max_steps` candidate evaluations.
inline Scenario shrink(Scenario sc, const ScenarioPredicate& still_bad, std::size_t max_steps = kMaxShrinkSteps,
                       std::size_t* steps_used = nullptr) {
  std::size_t steps = 0;
  auto attempt = [&](const Scenario& cand) {
    ++steps;
    if (cand == sc || !still_bad(cand)) return false;
    sc = cand;
    return true;
  };
  bool progress = true;
  while (progress && steps < max_steps) {
    progress = false;
    for (std::size_t i = 0; sc.n > 1 && i < sc.n && steps < max_steps; ++i) {
      if (attempt(drop_point(sc, i))) {
        progress = true;
        --i;
      }
    }
    auto snap_all = [&](auto member) {
      for (std::size_t i = 0; i < (sc.*member).size() && steps < max_steps; ++i) {
        const double v = (sc.*member)[i];
        const double snapped = std::round(v * 8.0) / 8.0;
        if (snapped == v || std::isinf(v)) continue;
        Scenario cand = sc;
        (cand.*member)[i] = snapped;
        progress = attempt(cand) || progress;
      }
    };
    snap_all(&Scenario::f);
    snap_all(&Scenario::g);
    snap_all(&Scenario::h);
    for (std::size_t i = 0; i < sc.capacity.weights.size() && steps < max_steps; ++i) {
      const double v = sc.capacity.weights[i];
      const double snapped = std::round(v * 8.0) / 8.0;
      if (snapped == v) continue;
      Scenario cand = sc;
      cand.capacity.weights[i] = snapped;
      progress = attempt(cand) || progress;
    }
  }
  if (steps_used) *steps_used = steps;
  return sc;
}

struct Violation {
  std::size_t trial = 0;
  Scenario scenario;  // minimized
  InequalityReport report;
};

struct AuditConfig {
  ScenarioConfig scenario;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: worker_count()
  std::size_t max_recorded = 8;
};

struct AuditSummary {
  std::string theorem;
  std::string system;
  std::size_t trials = 0;
  std::size_t hypothesis_pass = 0;
  std::size_t generation_attempts = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  double min_slack = kInf;  // smallest relative slack over hypothesis-satisfying trials
  std::uint64_t seed = 0;

  bool operator==(const AuditSummary& o) const {
    if (theorem != o.theorem || system != o.system || trials != o.trials || hypothesis_pass != o.hypothesis_pass ||
        generation_attempts != o.generation_attempts || violation_count != o.violation_count ||
        violations.size() != o.violations.size() || seed != o.seed)
      return false;
    if (!(min_slack == o.min_slack || (std::isnan(min_slack) && std::isnan(o.min_slack)))) return false;
    for (std::size_t i = 0; i < violations.size(); ++i)
      if (violations[i].trial != o.violations[i].trial || !(violations[i].scenario == o.violations[i].scenario))
        return false;
    return true;
  }
};

/// A scenario counts as a violation when its hypotheses hold and the report
/// fails at relative tolerance kInequalityTol.
inline bool is_violation(const InequalityReport& r) { return r.hypotheses_hold() && !r.holds; }

/// Trial i draws scenarios from seeds derived from (seed, i) until the
/// checker confirms every hypothesis (at most kMaxGenerationAttempts draws),
/// so outcomes do not depend on the number of workers.
inline AuditSummary audit(const AuditConfig& cfg) {
  require_theorem(cfg.scenario.theorem);
  struct Outcome {
    std::size_t attempts = 0;
    bool satisfied = false;
    double slack = kInf;
    std::optional<Violation> violation;
  };
  std::vector<Outcome> out(cfg.trials);
  ConditionCache cache;

  detail::parallel_for(cfg.trials, cfg.threads ? cfg.threads : worker_count(), [&](std::size_t i) {
    const auto trial_seed = derive_seed(cfg.seed, i);
    auto& o = out[i];
    for (std::size_t k = 0; k < kMaxGenerationAttempts && !o.satisfied; ++k) {
      ++o.attempts;
      const auto sc = random_scenario(cfg.scenario, derive_seed(trial_seed, k));
      const auto rep = evaluate(sc, &cache);
      if (!rep.hypotheses_hold()) continue;
      o.satisfied = true;
      o.slack = rep.relative_slack();
      if (!rep.holds) {
        auto bad = [&](const Scenario& s) {
          try {
            return is_violation(evaluate(s, &cache));
          } catch (const Error&) {
            return false;
          }
        };
        auto small = shrink(sc, bad);
        o.violation = Violation{i, small, evaluate(small, &cache)};
      }
    }
  });

  AuditSummary s;
  s.theorem = cfg.scenario.theorem;
  s.system = cfg.scenario.system;
  s.trials = cfg.trials;
  s.seed = cfg.seed;
  for (auto& o : out) {
    s.generation_attempts += o.attempts;
    if (!o.satisfied) continue;
    ++s.hypothesis_pass;
    s.min_slack = std::min(s.min_slack, o.slack);
    if (o.violation) {
      ++s.violation_count;
      if (s.violations.size() < cfg.max_recorded) s.violations.push_back(std::move(*o.violation));
    }
  }
  return s;
}

struct HuntResult {
  std::size_t trial = 0;
  Scenario original;
  Scenario scenario;  // minimized
  InequalityReport report;
  std::size_t shrink_steps = 0;
};

/// Searches for a scenario where every hypothesis except those whose names
/// start with `dropped` holds and the inequality fails. An empty `dropped`
/// keeps every hypothesis, as in audit(). Scenarios come from
/// Strategy::Unconstrained unless `cfg` says otherwise. Trials run in index
/// order; the first violation found is shrunk and returned.
inline std::optional<HuntResult> hunt_counterexample(std::string_view theorem_id, std::string_view dropped,
                                                     std::size_t trials, std::uint64_t seed,
                                                     std::optional<ScenarioConfig> cfg = std::nullopt) {
  const auto& info = require_theorem(theorem_id);
  bool known = dropped.empty();
  for (auto h : info.hypotheses) known = known || h.starts_with(dropped);
  if (!known)
    throw DomainError("unknown hypothesis '" + std::string(dropped) + "' for theorem " + std::string(theorem_id));

  ScenarioConfig sc_cfg = cfg.value_or(ScenarioConfig{std::string(theorem_id), Strategy::Unconstrained, 8, "", ""});
  sc_cfg.theorem = std::string(theorem_id);
  ConditionCache cache;

  auto kept_hold = [&](const InequalityReport& r) {
    if (r.degenerate) return false;
    for (const auto& h : r.hypotheses)
      if (!h.holds && (dropped.empty() || !std::string_view(h.name).starts_with(dropped))) return false;
    return true;
  };
  auto bad = [&](const Scenario& s) {
    try {
      const auto r = evaluate(s, &cache);
      return kept_hold(r) && !r.holds;
    } catch (const Error&) {
      return false;
    }
  };

  for (std::size_t i = 0; i < trials; ++i) {
    const auto sc = random_scenario(sc_cfg, derive_seed(seed, i));
    if (!bad(sc)) continue;
    HuntResult res;
    res.trial = i;
    res.original = sc;
    res.scenario = shrink(sc, bad, kMaxShrinkSteps, &res.shrink_steps);
    res.report = evaluate(res.scenario, &cache);
    return res;
  }
  return std::nullopt;
}

}  // namespace capax
