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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "capax/inequalities.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace capax;

namespace {

const SampleFunction kF({0.2, 0.6, 0.9});
const auto kUniform3 = make_additive({1.0 / 3, 1.0 / 3, 1.0 / 3});
const auto kAll3 = Subset::full(3);

SampleFunction coords_of(const Capacity& c) { return SampleFunction(c.space().coords()); }

SampleFunction unit(std::vector<double> v) { return SampleFunction(std::move(v), Range::Unit); }

}  // namespace

TEST(JensenSugeno, CandidateExample) {
  const auto r = jensen_sugeno(kF, kUniform3, kAll3, AggOperator::min(), 2.0);
  EXPECT_TRUE(r.flipped);
  EXPECT_DOUBLE_EQ(r.lhs, 0.36);  // (∫f)^2 with ∫f = 0.6
  EXPECT_DOUBLE_EQ(r.rhs, 0.36);  // ∫f^2 = max(0.04∧1, 0.36∧2/3, 0.81∧1/3)
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.hypotheses_hold());
}

TEST(JensenSugeno, ExponentOneIsEquality) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = rng.between(1, 6);
    const auto r = jensen_sugeno(gen::function(rng, n), gen::capacity(rng, n), Subset::full(n),
                                 AggOperator::lukasiewicz(), 1.0);
    EXPECT_EQ(r.slack, 0.0);
    EXPECT_TRUE(r.hypotheses_hold());
  }
}

TEST(JensenSugeno, ConstantFunction) {
  const auto r = jensen_sugeno(SampleFunction::constant(2, 0.5), make_additive({0.5, 0.5}), Subset::full(2),
                               AggOperator::min(), 2.0);
  EXPECT_DOUBLE_EQ(r.lhs, 0.25);
  EXPECT_DOUBLE_EQ(r.rhs, 0.25);
  EXPECT_TRUE(r.holds);
}

TEST(JensenSugeno, LukasiewiczPowerConditionFails) {
  const auto r = jensen_sugeno(kF, kUniform3, kAll3, AggOperator::lukasiewicz(), 2.0);
  EXPECT_FALSE(r.hypotheses_hold());
  EXPECT_THROW(jensen_sugeno(kF, kUniform3, kAll3, AggOperator::min(), 0.5), DomainError);
}

TEST(ChebyshevSugeno, ComonotoneUnderMin) {
  const auto sys = builtin_systems()[0];
  Rng rng(2);
  ConditionCache cache;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.between(1, 8);
    const auto f1 = gen::function(rng, n);
    const auto f2 = gen::increasing_image(rng, f1);
    const auto c = gen::capacity(rng, n);
    const auto X = Subset::full(n);
    const auto r = chebyshev_sugeno(sys, f1, f2, X, X, c, &cache);
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_TRUE(r.holds) << "trial " << i;
  }
}

TEST(ChebyshevSugeno, SecondFactorOne) {
  const auto sys = builtin_systems()[1];
  const auto r = chebyshev_sugeno(sys, kF, SampleFunction::constant(3, 1.0), kAll3, kAll3, kUniform3);
  const double i1 = *r.quantity("integral_f1");
  EXPECT_DOUBLE_EQ(r.rhs, i1);
  EXPECT_LE(r.lhs, r.rhs);
  EXPECT_TRUE(r.holds);
}

TEST(ChebyshevSugeno, DisjointDomainsProbe) {
  const auto sys = builtin_systems()[0];
  const auto A = Subset::from_mask(3, 0b001), B = Subset::from_mask(3, 0b110);
  const auto r = chebyshev_sugeno(sys, kF, kF, A, B, kUniform3);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_GT(r.lhs, 0.0);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.hypothesis("positive_dependence")->holds);
}

TEST(CarlsonSugeno, CaballeroForm) {
  const std::size_t n = 1000;
  const auto c = make_grid_lebesgue(0.0, 1.0, n);
  const auto X = Subset::full(n);
  const auto x = coords_of(c);
  const auto sys = sugeno_product_system().with_exponents(2, 2, 1, 1);
  for (auto fn : {+[](double t) { return t; }, +[](double t) { return t * t; }, +[](double t) { return std::sqrt(t); }}) {
    const auto f = x.map(fn);
    const auto r = carlson_sugeno(sys, f, SampleFunction::constant(n, 1.0), x, X, X, c);
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(*r.quantity("G"), 1.0, 1e-12);
    EXPECT_NEAR(*r.quantity("H"), 0.5, 1e-3);
    const double F = *r.quantity("F"), P = *r.quantity("P"), Q = *r.quantity("Q");
    EXPECT_LE(F, std::sqrt(2.0) * std::pow(P, 0.25) * std::pow(Q, 0.25) + 1e-3);
  }
}

TEST(CarlsonSugeno, ConstantsOne) {
  const auto sys = builtin_systems()[1];
  const auto one = SampleFunction::constant(4, 1.0);
  const auto r = carlson_sugeno(sys, one, one, one, Subset::full(4), Subset::full(4), make_additive({0.25, 0.25, 0.25, 0.25}));
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_DOUBLE_EQ(r.rhs, 1.0);
  EXPECT_TRUE(r.holds);
}

TEST(CarlsonSugeno, ComonotoneTripleUnderMinProduct) {
  const auto sys = builtin_systems()[2];
  Rng rng(3);
  ConditionCache cache;
  for (int i = 0; i < 100; ++i) {
    const auto f = gen::function(rng, 6);
    const auto g = gen::increasing_image(rng, f), h = gen::increasing_image(rng, f);
    const auto r = carlson_sugeno(sys, f, g, h, Subset::full(6), Subset::full(6), gen::capacity(rng, 6), &cache);
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_TRUE(r.holds) << "trial " << i;
  }
}

TEST(CarlsonSugeno, HypothesisFailureStillReportsBothSides) {
  const auto sys = builtin_systems()[0];
  const auto f = unit({0.9, 0.1}), g = unit({0.1, 0.9});
  const auto r = carlson_sugeno(sys, f, g, g, Subset::full(2), Subset::full(2), make_additive({0.5, 0.5}));
  EXPECT_FALSE(r.hypothesis("positive_dependence_g")->holds);
  EXPECT_GT(r.lhs, 0.0);
  EXPECT_GT(r.rhs, 0.0);
}

TEST(XuOuyang, DegenerateWhenGVanishes) {
  const auto r = carlson_sugeno_xu(kF, SampleFunction::constant(3, 0.0), kF, kAll3, kUniform3, 2, 2);
  ASSERT_TRUE(r.degenerate);
  EXPECT_FALSE(r.hypotheses_hold());
  EXPECT_EQ(*r.quantity("C"), 0.0);
}

TEST(XuOuyang, ConstantWeights) {
  const auto one = SampleFunction::constant(3, 1.0);
  const auto r = carlson_sugeno_xu(kF, one, one, kAll3, kUniform3, 2, 2);
  EXPECT_DOUBLE_EQ(*r.quantity("C"), 1.0);
  EXPECT_TRUE(r.holds);
}

TEST(XuOuyang, IdentityOnGrid) {
  const auto c = make_grid_lebesgue(0.0, 1.0, 500);
  const auto x = coords_of(c);
  const auto r = carlson_sugeno_xu(x, SampleFunction::constant(500, 1.0), x, Subset::full(500), c, 2, 2);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.slack, 0.0);
}

TEST(Wang, DegenerateWhenGVanishes) {
  const auto r = carlson_sugeno_wang(kF, SampleFunction::constant(3, 0.0), kF, kAll3, kUniform3, 2, 3);
  ASSERT_TRUE(r.degenerate);
  EXPECT_EQ(*r.quantity("K"), 0.0);
}

// The two specializations agree with the general checker after clearing the
// normalizing constants: lhs_general = F^2 C (resp. F K).
TEST(SpecializationProperties, AgreeWithGeneralChecker) {
  Rng rng(4);
  ConditionCache cache;
  const auto base = sugeno_product_system();
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.between(1, 8);
    const auto f = gen::function(rng, n);
    const auto g = gen::increasing_image(rng, f), h = gen::increasing_image(rng, f);
    const auto c = gen::capacity(rng, n);
    const auto X = Subset::full(n);
    const double p = rng.uniform(1.0, 4.0), q = rng.uniform(1.0, 4.0);

    const auto xu = carlson_sugeno_xu(f, g, h, X, c, p, q, &cache);
    const auto gen1 = carlson_sugeno(base.with_exponents(p, q, 1, 1), f, g, h, X, X, c, &cache);
    const double C = *xu.quantity("C");
    EXPECT_NEAR(gen1.lhs, xu.lhs * xu.lhs * C, 1e-12);
    if (C > 0.0) {
      EXPECT_NEAR(gen1.rhs, xu.rhs * xu.rhs * C, 1e-12);
    }

    const auto wang = carlson_sugeno_wang(f, g, h, X, c, p, q, &cache);
    const auto gen2 = carlson_sugeno(base.with_exponents(p, q, p / (p + q), q / (p + q)), f, g, h, X, X, c, &cache);
    const double K = *wang.quantity("K");
    EXPECT_NEAR(gen2.lhs, wang.lhs * K, 1e-12);
    if (K > 0.0) {
      EXPECT_NEAR(gen2.rhs, wang.rhs * K, 1e-12);
    }
    if (!xu.degenerate) {
      EXPECT_EQ(xu.holds, gen1.holds);
    }
  }
}

TEST(ShilkretExample, IdentityOnFineGrid) {
  const std::size_t n = 2000;
  const auto c = make_grid_lebesgue(0.0, 1.0, n);
  const auto r = shilkret_carlson_example(coords_of(c), Subset::full(n), c);
  EXPECT_NEAR(*r.quantity("K"), 0.25, 1.0 / n);
  EXPECT_NEAR(*r.quantity("N_x"), 0.25, 1.0 / n);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.holds);
}

TEST(ShilkretExample, ConstantAndNonmonotone) {
  const auto c = make_grid_lebesgue(0.0, 1.0, 100);
  EXPECT_TRUE(shilkret_carlson_example(SampleFunction::constant(100, 0.7), Subset::full(100), c).holds);
  auto v = c.space().coords();
  std::swap(v[3], v[4]);
  EXPECT_THROW(shilkret_carlson_example(SampleFunction(v), Subset::full(100), c), DomainError);
  EXPECT_THROW(shilkret_carlson_example(kF, kAll3, kUniform3), DomainError);
}

TEST(LukasiewiczExample, IdentityPair) {
  const auto r = lukasiewicz_carlson_example(UnitMap::Identity, UnitMap::Identity, 200, 2, 2);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(*r.quantity("N_f"), 0.25, 1.0 / 200);
  EXPECT_EQ(r.rhs, 0.0);  // f Ł h = (u - u)_+ vanishes
  EXPECT_EQ(r.lhs, 0.0);
}

TEST(LukasiewiczExample, SquareAndRoot) {
  const auto r = lukasiewicz_carlson_example(UnitMap::Square, UnitMap::Sqrt, 200, 2, 2);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.holds);
  const auto s = lukasiewicz_carlson_example(UnitMap::Sqrt, UnitMap::Square, 200, 2, 3);
  EXPECT_TRUE(s.hypotheses_hold());
  EXPECT_TRUE(s.holds);
  EXPECT_GT(s.rhs, 0.0);
}

TEST(LukasiewiczExample, ZeroFunction) {
  const auto ex = make_uniform_example(UnitMap::Identity, UnitMap::Identity, 50);
  const auto r = lukasiewicz_carlson_example(SampleFunction::constant(50, 0.0), ex.h, ex.P, 2, 2);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(JensenChoquet, HandValues) {
  const auto r = jensen_choquet(kF, kUniform3, kAll3, 2.0);
  EXPECT_NEAR(r.lhs, (17.0 / 30.0) * (17.0 / 30.0), 1e-15);
  EXPECT_NEAR(r.rhs, (0.04 + 0.36 + 0.81) / 3.0, 1e-15);
  EXPECT_NEAR(r.lhs, 0.3211, 1e-4);
  EXPECT_NEAR(r.rhs, 0.4033, 1e-4);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(jensen_choquet(kF, kUniform3, kAll3, 1.0).slack, 0.0, 1e-15);
}

TEST(JensenChoquet, SupCapacityEquality) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng.between(1, 10);
    const auto r = jensen_choquet(gen::function(rng, n, 3.0), make_sup_capacity(n), gen::subset(rng, n),
                                  rng.uniform(1.0, 4.0));
    EXPECT_NEAR(r.slack, 0.0, 1e-12 * std::max(1.0, r.rhs));
  }
}

TEST(JensenChoquet, DegenerateMeasure) {
  const auto r = jensen_choquet(kF, make_additive({0.0, 0.0, 1.0}), Subset::from_mask(3, 0b011), 2.0);
  EXPECT_TRUE(r.degenerate);
  EXPECT_FALSE(r.hypotheses_hold());
}

TEST(ChebyshevChoquet, HandValues) {
  const SampleFunction f({0.0, 1.0});
  const auto r = chebyshev_choquet(f, f, make_additive({0.5, 0.5}), Subset::full(2));
  EXPECT_DOUBLE_EQ(r.rhs, 0.5);
  EXPECT_DOUBLE_EQ(r.lhs, 0.25);
  EXPECT_TRUE(r.holds);
  const auto k = chebyshev_choquet(kF, SampleFunction::constant(3, 0.4), kUniform3, kAll3);
  EXPECT_NEAR(k.slack, 0.0, 1e-15);
}

TEST(ChebyshevChoquet, AntimonotoneFlagged) {
  const auto r = chebyshev_choquet(SampleFunction({0.0, 1.0}), SampleFunction({1.0, 0.0}),
                                   make_additive({0.5, 0.5}), Subset::full(2));
  EXPECT_FALSE(r.hypothesis("comonotone")->holds);
  EXPECT_FALSE(r.holds);
  EXPECT_DOUBLE_EQ(r.lhs, 0.25);
  EXPECT_DOUBLE_EQ(r.rhs, 0.0);
}

TEST(CarlsonChoquetComonotone, SupCapacityIdentity) {
  const auto c = make_grid_lebesgue(0.0, 1.0, 64);
  const auto x = coords_of(c);
  const auto r = carlson_choquet_comonotone(x, x, x, Subset::full(64), make_sup_capacity(64), 2, 3, 1, 2);
  EXPECT_NEAR(r.lhs, x[63], 1e-15);
  EXPECT_NEAR(r.slack, 0.0, 1e-12);
  EXPECT_TRUE(r.hypotheses_hold());
}

TEST(CarlsonChoquetComonotone, OuyangSpecialization) {
  Rng rng(6);
  const auto c = make_additive({0.25, 0.25, 0.25, 0.25});
  for (int i = 0; i < 100; ++i) {
    const auto f = gen::function(rng, 4);
    const auto h = gen::increasing_image(rng, f);
    const auto r = carlson_choquet_comonotone(f, SampleFunction::constant(4, 1.0), h, Subset::full(4), c, 2, 2, 1, 1);
    ASSERT_EQ(r.sub_reports.size(), 1u);
    const auto& o = r.sub_reports.front();
    EXPECT_EQ(o.theorem, theorem::kOuyangChoquet);
    if (r.degenerate) continue;
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(o.holds);
  }
}

TEST(CarlsonChoquetComonotone, DegenerateH) {
  const auto r = carlson_choquet_comonotone(kF, kF, SampleFunction::constant(3, 0.0), kAll3, kUniform3, 2, 2, 1, 1);
  ASSERT_TRUE(r.degenerate);
  EXPECT_FALSE(r.hypotheses_hold());
}

TEST(Sharpness, Examples) {
  const auto c = make_grid_lebesgue(0.0, 1.0, 100);
  const auto x = coords_of(c);
  const auto X = Subset::full(100);
  EXPECT_NEAR(sharpness_demo(x, x, x, X, 1, 1).slack, 0.0, 1e-12);
  const auto r = sharpness_demo(x, x.pow(2.0), x.map([](double t) { return std::exp(t); }), X, 0.5, 2.0);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_NEAR(r.slack, 0.0, 1e-12);
  const auto bad = sharpness_demo(x, x.map([](double t) { return 1.0 - t; }), x, X, 1, 1);
  EXPECT_FALSE(bad.hypothesis("comonotone_g")->holds);
}

TEST(SharpnessProperties, RandomComonotoneTriples) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.between(1, 12);
    const auto f = gen::function(rng, n, 5.0);
    const auto g = gen::increasing_image(rng, f, 3.0), h = gen::increasing_image(rng, f, 3.0);
    const auto r = sharpness_demo(f, g, h, Subset::full(n), rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
    if (r.degenerate) continue;
    EXPECT_LE(std::abs(r.slack), 1e-12) << "trial " << i;
  }
}

TEST(HolderChoquet, EqualityWhenPowersProportional) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.between(1, 8);
    const double p = rng.uniform(1.2, 4.0), q = p / (p - 1.0);
    const auto phi = gen::function(rng, n, 2.0);
    const auto psi = phi.pow(p / q).scaled(rng.uniform(0.5, 2.0));  // α φ^p = β ψ^q
    const auto c = make_distorted(gen::weights(rng, n), 0.5);
    const auto r = holder_choquet(phi, psi, c, Subset::full(n), p);
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_NEAR(r.slack, 0.0, 1e-12 * std::max(1.0, r.rhs)) << "trial " << i;
  }
}

TEST(HolderChoquet, ConstantSecondFactor) {
  const auto c = make_distorted({0.3, 0.3, 0.4}, 0.5);
  const auto r = holder_choquet(kF, SampleFunction::constant(3, 1.0), c, kAll3, 2.0);
  EXPECT_TRUE(r.holds);
  EXPECT_DOUBLE_EQ(*r.quantity("Q"), 1.0);
}

TEST(HolderChoquet, SupermodularFlagged) {
  const auto c = make_distorted({0.5, 0.5}, 2.0);
  const auto r = holder_choquet(SampleFunction({1.0, 0.0}), SampleFunction({0.0, 1.0}), c, Subset::full(2), 2.0);
  EXPECT_FALSE(r.hypothesis("submodular")->holds);
  EXPECT_GE(r.rhs, 0.0);
  EXPECT_THROW(holder_choquet(kF, kF, c.space().size() == 2 ? kUniform3 : c, kAll3, 1.0), DomainError);
}

TEST(Hpq, UnitCases) {
  const auto c = make_additive({0.5, 0.5});
  const auto X = Subset::full(2);
  const auto one = SampleFunction::constant(2, 1.0), half = SampleFunction::constant(2, 0.5);
  EXPECT_NEAR(h_pq(1, 1, half, half, X, c, 2).value, 1.0, 1e-15);
  EXPECT_NEAR(h_pq(1, 1, one, one, X, c, 2).value, 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Hpq, ClassicalInstanceMatchesQuadrature) {
  const std::size_t n = 100000;
  const double T = 100.0;
  const auto c = make_grid_lebesgue(0.0, T, n);
  const auto x = coords_of(c);
  const double a = std::numbers::pi / 4, b = a;
  const auto H = h_pq(a, b, SampleFunction::constant(n, 1.0), x.pow(2.0), Subset::full(n), c, 2);
  ASSERT_FALSE(H.degenerate);
  // ∫_0^T dx / (b + a x^2), truncated, against its closed form and a Simpson oracle.
  const double closed = std::atan(T * std::sqrt(a / b)) / std::sqrt(a * b);
  const double simpson = oracle::simpson([&](double t) { return 1.0 / (b + a * t * t); }, 0.0, T, 200000);
  EXPECT_NEAR(H.inner, closed, 1e-6);
  EXPECT_NEAR(closed, simpson, 1e-9);
  EXPECT_NEAR(std::sqrt(2.0) * H.value, std::sqrt(std::numbers::pi) * std::pow(a * b, 0.25),
              0.01 * std::numbers::pi / 2);
  EXPECT_NEAR(oracle::int_inverse_quadratic(a, b), 2.0, 1e-15);
}

TEST(Hpq, Degenerate) {
  const auto one = SampleFunction::constant(2, 1.0);
  const auto c = make_additive({0.5, 0.5});
  EXPECT_TRUE(h_pq(0, 1, one, one, Subset::full(2), c, 2).degenerate);
  EXPECT_EQ(*h_pq(0, 0, one, one, Subset::full(2), c, 2).degenerate, "a = b = 0");
  EXPECT_THROW(h_pq(1, 1, one, one, Subset::full(2), c, 1.0), DomainError);
}

TEST(CarlsonChoquetSubmodular, ClassicalCarlson) {
  const std::size_t n = 100000;
  const auto c = make_grid_lebesgue(0.0, 100.0, n);
  const auto x = coords_of(c);
  const auto f = x.map([](double t) { return 1.0 / (1.0 + t * t); });
  const auto r = carlson_choquet_submodular(f, SampleFunction::constant(n, 1.0), x.pow(2.0), Subset::full(n), c, 2);
  const double half_pi = std::numbers::pi / 2;
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_NEAR(r.lhs, half_pi, 0.01 * half_pi);
  EXPECT_NEAR(r.rhs, half_pi, 0.01 * half_pi);
  EXPECT_GE(r.rhs / r.lhs, 1.0);
  EXPECT_LE(r.rhs / r.lhs, 1.02);
  // lhs against the truncated closed form, a, b against ∫f^2 and ∫x^2 f^2
  EXPECT_NEAR(r.lhs, oracle::int_f(100.0), 1e-6);
  EXPECT_NEAR(*r.quantity("a"), oracle::int_f2(100.0), 1e-6);
  EXPECT_NEAR(*r.quantity("b"), oracle::int_x2f2(100.0), 1e-6);
}

TEST(CarlsonChoquetSubmodular, ZeroFunction) {
  const auto z = SampleFunction::constant(3, 0.0);
  const auto r = carlson_choquet_submodular(z, kF, kF, kAll3, kUniform3, 2);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(CarlsonChoquetSubmodular, ModularEqualityCase) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.between(1, 8);
    const double p = rng.uniform(1.5, 4.0), q = p / (p - 1.0);
    const auto g = gen::function(rng, n).map([](double v) { return v + 0.1; });
    const auto f = g.pow(-q / p);  // (g b + g a)^q f^p is constant when h = g
    const auto c = make_additive(gen::weights(rng, n, rng.uniform(0.5, 2.0)));
    const auto r = carlson_choquet_submodular(f, g, g, Subset::full(n), c, p);
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_TRUE(r.notes.front().holds);
    EXPECT_LE(std::abs(r.slack), 1e-9 * r.rhs) << "trial " << i;
  }
}

TEST(CarlsonChoquetSubmodular, RandomSubmodular) {
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const auto c = make_distorted(gen::weights(rng, 8), rng.uniform(0.2, 1.0));
    const auto g = gen::function(rng, 8, 2.0), h = gen::function(rng, 8, 2.0);
    const auto r = carlson_choquet_submodular(gen::function(rng, 8, 2.0), g, h, Subset::full(8), c, rng.uniform(1.1, 4.0));
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_TRUE(r.holds) << "trial " << i;
  }
}

TEST(CarlsonChoquetSubadditive, MultiplierAndDualRun) {
  const auto r2 = carlson_choquet_subadditive(kF, kF, kF, kAll3, kUniform3, 2);
  EXPECT_NEAR(*r2.quantity("multiplier"), 4.0, 1e-12);
  const auto s2 = carlson_choquet_submodular(kF, kF, kF, kAll3, kUniform3, 2);
  EXPECT_NEAR(*s2.quantity("multiplier"), std::sqrt(2.0), 1e-12);
  EXPECT_GE(r2.rhs, s2.rhs);
  EXPECT_TRUE(r2.holds);
  EXPECT_TRUE(s2.holds);
  EXPECT_FALSE(r2.hypotheses_hold());  // no coordinates on this space
  ASSERT_EQ(r2.sub_reports.size(), 2u);
  EXPECT_EQ(r2.sub_reports[0].theorem, theorem::kShiHolder);
  EXPECT_EQ(r2.sub_reports[1].theorem, theorem::kShiSum);
  EXPECT_TRUE(r2.sub_reports[0].holds);
  EXPECT_TRUE(r2.sub_reports[1].holds);
}

TEST(CarlsonChoquetSubadditive, HolderConstant) {
  const auto c = make_grid_lebesgue(0.0, 1.0, 4);
  const auto x = coords_of(c);
  const auto X = Subset::full(4);
  EXPECT_NEAR(*shi_holder(x, x, c, X, 2.0).quantity("constant"), 2.0, 1e-12);
  EXPECT_NEAR(*shi_holder(x, x, c, X, 4.0).quantity("constant"), std::pow(0.5 + std::sqrt(0.75), 2.0), 1e-12);
  EXPECT_NEAR(*shi_holder(x, x, c, X, 4.0).quantity("constant"), 1.866, 1e-3);
  for (double p : {1.01, 1.5, 2.0, 3.0, 10.0, 100.0})
    EXPECT_LE(*shi_holder(x, x, c, X, p).quantity("constant"), 2.0 + 1e-12);
  const auto z = SampleFunction::constant(4, 0.0);
  const auto r = carlson_choquet_subadditive(z, x, x, X, c, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.degenerate);
}

TEST(ImpossibilityDemo, RequiredConstant) {
  auto space = std::make_shared<const GroundSpace>(std::vector<double>{1e-7, 1e-6, 1e-4, 1.0},
                                                   std::vector<double>{1, 1, 1, 1});
  const SampleFunction x(space->coords());
  const std::vector<std::size_t> t{3, 2, 1, 0};
  const std::vector<double> cands{10.0, 1000.0};
  const auto rows = impossibility_demo(space, t, SampleFunction::constant(4, 1.0), x.pow(2.0), cands);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(rows[0].required_c, 1.0, 1e-12);
  EXPECT_NEAR(rows[1].required_c, 100.0, 1e-9);
  EXPECT_NEAR(rows[2].required_c, 1000.0, 1e-6);
  EXPECT_NEAR(rows[3].required_c, std::pow(10.0, 3.5), 1e-6);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_GT(rows[k].required_c, rows[k - 1].required_c);
  EXPECT_TRUE(rows[1].candidates[1].second);
  EXPECT_FALSE(rows[1].candidates[0].second);
  EXPECT_FALSE(rows[3].candidates[1].second);
  EXPECT_DOUBLE_EQ(rows[1].coord, 1e-4);
}
