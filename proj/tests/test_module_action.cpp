/* Copyright 2026 The qorder Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qorder/errors.hpp"
#include "qorder/module_action.hpp"

namespace qorder {
namespace {

struct Params {
  std::uint32_t p;
  unsigned s;
  unsigned n;
};

const std::vector<Params> kTowers = {
    {2, 1, 1}, {2, 1, 3}, {2, 1, 4}, {2, 1, 6}, {2, 1, 7}, {3, 1, 3}, {3, 1, 4},
    {2, 2, 2}, {2, 2, 3}, {5, 1, 2}, {5, 1, 3}, {7, 1, 2}, {2, 3, 2}, {3, 2, 2},
};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no qorder::Error thrown";
  return ErrorKind::InvalidArgument;
}

FqPoly random_poly(const BaseField& F, unsigned max_deg, std::mt19937_64& rng) {
  std::vector<Coeff> c(1 + rng() % (max_deg + 1));
  for (auto& v : c) v = static_cast<Coeff>(rng() % F.order());
  return FqPoly(std::move(c));
}

TEST(Action, F4Examples) {
  const auto t = build_tower(2, 1, 2);
  const auto fp = t->base_ring().factor_xn_minus_1(2);
  const FFElement w = t->element({0, 1});
  EXPECT_EQ(apply_action(FqPoly{1, 1}, w, *t), t->one());
  EXPECT_EQ(fq_order(t->zero(), *t, fp), FqPoly{1});
  EXPECT_EQ(fq_order(t->one(), *t, fp), (FqPoly{1, 1}));
  EXPECT_EQ(fq_order(w, *t, fp), (FqPoly{1, 0, 1}));
  EXPECT_TRUE(is_normal(w, *t, fp));
  EXPECT_FALSE(is_normal(t->one(), *t, fp));
  const auto rec = order_record(w, *t, fp);
  EXPECT_EQ(rec.element, w);
  EXPECT_TRUE(rec.is_normal);
}

TEST(Action, MatchesNaiveAndConjugateForm) {
  std::mt19937_64 rng(17);
  for (const auto& [p, s, n] : kTowers) {
    const auto t = build_tower(p, s, n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = oracle::random_element(*t, rng);
      const auto g = random_poly(t->base_field(), 2 * n + 1, rng);
      const auto expect = oracle::naive_action(g, x, *t);
      ASSERT_EQ(apply_action(g, x, *t), expect);
      const auto conj = t->conjugates(x);
      ASSERT_EQ(apply_action(g, conj, *t), expect);
      if (g.is_monic()) EXPECT_EQ(linearized_eval(g, x, *t), expect);
    }
  }
}

TEST(Action, ModuleAxioms) {
  std::mt19937_64 rng(23);
  for (const auto& [p, s, n] : kTowers) {
    const auto t = build_tower(p, s, n);
    const PolyRing& R = t->base_ring();
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = oracle::random_element(*t, rng);
      const auto b = oracle::random_element(*t, rng);
      const auto f = random_poly(t->base_field(), n + 2, rng);
      const auto g = random_poly(t->base_field(), n + 2, rng);
      const Coeff c = static_cast<Coeff>(rng() % t->q());
      EXPECT_EQ(apply_action(R.add(f, g), a, *t), t->add(apply_action(f, a, *t), apply_action(g, a, *t)));
      EXPECT_EQ(apply_action(R.mul(f, g), a, *t), apply_action(f, apply_action(g, a, *t), *t));
      EXPECT_EQ(apply_action(f, t->add(a, b), *t), t->add(apply_action(f, a, *t), apply_action(f, b, *t)));
      EXPECT_EQ(apply_action(f, t->scale(c, a), *t), t->scale(c, apply_action(f, a, *t)));
      EXPECT_EQ(apply_action(R.constant(c), a, *t), t->scale(c, a));
      EXPECT_TRUE(apply_action(R.xn_minus_one(n), a, *t).is_zero());
    }
  }
}

TEST(Order, MatchesDivisorScanExhaustive) {
  for (const auto& [p, s, n] : kTowers) {
    const auto t = build_tower(p, s, n);
    const PolyRing& R = t->base_ring();
    const auto fp = R.factor_xn_minus_1(n);
    const auto divs = R.divisors(fp);
    for (const auto& x : t->elements()) {
      const FqPoly m = fq_order(x, *t, fp);
      ASSERT_EQ(m, oracle::order_by_divisor_scan(x, *t, divs));
      EXPECT_TRUE(R.divides(m, R.xn_minus_one(n)));
      EXPECT_EQ(is_normal(x, *t, fp), oracle::conjugate_rank(x, *t) == n);
      EXPECT_EQ(static_cast<unsigned>(m.degree()), oracle::conjugate_rank(x, *t));
    }
  }
}

TEST(Order, AnnihilatorIdealIsPrincipal) {
  std::mt19937_64 rng(29);
  for (const auto& [p, s, n] : kTowers) {
    const auto t = build_tower(p, s, n);
    const PolyRing& R = t->base_ring();
    const auto fp = R.factor_xn_minus_1(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_element(*t, rng);
      const auto m = fq_order(x, *t, fp);
      const auto g = random_poly(t->base_field(), 2 * n, rng);
      EXPECT_EQ(apply_action(g, x, *t).is_zero(), R.divides(m, g));
    }
  }
}

TEST(C0, IdentityOnRandomPairs) {
  std::mt19937_64 rng(31);
  for (const auto& [p, s, n] : kTowers) {
    if (n < 2) continue;
    const auto t = build_tower(p, s, n);
    const PolyRing& R = t->base_ring();
    for (int trial = 0; trial < 300; ++trial) {
      const unsigned d = static_cast<unsigned>(rng() % n);
      const auto g = oracle::random_monic_unit_const(t->base_field(), d, rng);
      const auto x = oracle::random_element(*t, rng);
      const auto c0 = c0_coefficient(g, x, *t);
      const auto lhs = t->pow(c0, pow_or_throw(t->q(), d));
      const auto rhs = t->scale(g.constant_term(), oracle::naive_action(R.monic_reciprocal(g), x, *t));
      ASSERT_EQ(lhs, rhs) << to_pretty(g);
    }
  }
}

TEST(C0, Errors) {
  const auto t = build_tower(3, 1, 3);
  const auto x = t->element({1, 2, 0});
  EXPECT_EQ(kind_of([&] { c0_coefficient(FqPoly{1, 2}, x, *t); }), ErrorKind::NotMonic);
  EXPECT_EQ(kind_of([&] { c0_coefficient(FqPoly{1, 0, 0, 1}, x, *t); }), ErrorKind::DegreeTooLarge);
  EXPECT_EQ(kind_of([&] { c0_coefficient(FqPoly{0, 1}, x, *t); }), ErrorKind::ZeroConstantTerm);
  EXPECT_EQ(kind_of([&] { linearized_eval(FqPoly{1, 2}, x, *t); }), ErrorKind::NotMonic);
}

}  // namespace
}  // namespace qorder
