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

#include "qorder/classify.hpp"

#include <string>

#include "qorder/errors.hpp"
#include "qorder/module_action.hpp"

namespace qorder {

FieldSetup prepare_field(std::uint32_t p, unsigned s, unsigned n, const Limits& limits,
                         std::uint64_t seed) {
  FieldSetup setup;
  setup.tower = build_tower(p, s, n, limits);
  const PolyRing& ring = setup.tower->base_ring();
  setup.xn_factors = ring.factor_xn_minus_1(n, seed);
  setup.divisors = ring.divisors(setup.xn_factors, limits);
  return setup;
}

ElementPartition elements_by_order(const FieldSetup& setup) {
  const FieldTower& tower = *setup.tower;
  ElementPartition out;
  for (const auto& f : setup.divisors) out[f];
  for (const FFElement& a : tower.elements()) {
    out[fq_order(a, tower, setup.xn_factors)].push_back(a);
  }
  return out;
}

CharacterPartition characters_by_order(const FieldSetup& setup, OrderRoute route,
                                       CheckMode check) {
  const FieldTower& tower = *setup.tower;
  const PolyRing& ring = tower.base_ring();
  CharacterPartition out;
  for (const auto& f : setup.divisors) out[f];
  if (route == OrderRoute::Fast) {
    for (auto& [m, elems] : elements_by_order(setup)) {
      auto& bucket = out[ring.monic_reciprocal(m)];
      for (auto& a : elems) bucket.emplace_back(setup.tower, std::move(a));
    }
    return out;
  }
  for (const FFElement& a : tower.elements()) {
    AdditiveCharacter chi(setup.tower, a);
    out[char_order_bruteforce(chi, setup.divisors, check)].push_back(std::move(chi));
  }
  return out;
}

ClassificationReport classify_field(const FieldSetup& setup, OrderRoute route, CheckMode check) {
  const FieldTower& tower = *setup.tower;
  const PolyRing& ring = tower.base_ring();
  const auto elements = elements_by_order(setup);
  const auto characters = characters_by_order(setup, route, check);
  ClassificationReport rep{tower.p(), tower.s(), tower.n(), {}};
  for (const auto& f : setup.divisors) {
    ClassificationRow row;
    row.f = f;
    row.element_count = elements.at(f).size();
    row.phi_q = ring.phi_q(f, setup.xn_factors);
    row.char_set_size = characters.at(f).size();
    row.f_star = ring.monic_reciprocal(f);
    row.self_reciprocal = row.f_star == f;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Corollary1Result orders_coincide_iff_self_reciprocal(const FieldSetup& setup, OrderRoute route,
                                                     CheckMode check) {
  const FieldTower& tower = *setup.tower;
  const PolyRing& ring = tower.base_ring();
  Corollary1Result res;
  for (const FFElement& a : tower.elements()) {
    const FqPoly m = fq_order(a, tower, setup.xn_factors);
    const AdditiveCharacter chi(setup.tower, a);
    const FqPoly ord = route == OrderRoute::Fast ? ring.monic_reciprocal(m)
                                                 : char_order_bruteforce(chi, setup.divisors, check);
    const bool coincide = ord == m;
    const bool self_rec = ring.is_self_reciprocal(m);
    ++res.checked;
    res.coinciding += coincide;
    res.self_reciprocal += self_rec;
    if (coincide != self_rec && res.holds) {
      res.holds = false;
      res.first_counterexample = Corollary1Counterexample{a, m, ord};
    }
  }
  return res;
}

MeynVerdict meyn_criterion(const PolyRing& ring, std::uint64_t n, const Limits& limits,
                           std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const BaseField& F = ring.field();
  MeynVerdict verdict;
  verdict.q = F.order();
  verdict.n = n;
  std::tie(verdict.u, verdict.v) = split_prime_power(n, F.characteristic());

  const std::uint64_t v = verdict.v;
  const std::uint64_t minus_one = (v - 1) % v;
  for (std::uint64_t j = 1; j <= v; ++j) {
    if (pow_mod(verdict.q, j, v) == minus_one) {
      verdict.witness_j = j;
      break;
    }
  }
  verdict.criterion_holds = verdict.witness_j.has_value();

  const auto divisors = ring.divisors(ring.factor_xn_minus_1(n, seed), limits);
  verdict.divisor_count = divisors.size();
  verdict.all_divisors_self_reciprocal = true;
  for (const auto& f : divisors) {
    if (!ring.is_self_reciprocal(f)) {
      verdict.all_divisors_self_reciprocal = false;
      break;
    }
  }
  return verdict;
}

MeynVerdict meyn_criterion(std::uint64_t q, std::uint64_t n, const Limits& limits,
                           std::uint64_t seed) {
  auto pp = as_prime_power(q);
  if (!pp || pp->first > UINT32_MAX) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  }
  const PolyRing ring(build_base_field(static_cast<std::uint32_t>(pp->first), pp->second));
  return meyn_criterion(ring, n, limits, seed);
}

std::uint64_t multiplicative_order(const FFElement& x, const FieldTower& tower) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
  const FFElement one = tower.one();
  std::uint64_t order = tower.size() - 1;
  for (auto [r, e] : factor_integer(order)) {
    for (unsigned k = 0; k < e; ++k) {
      if (tower.pow(x, order / r) != one) break;
      order /= r;
    }
  }
  return order;
}

FFElement find_primitive_normal(const FieldTower& tower, const FactoredPoly& xn_factors) {
  const std::uint64_t group_order = tower.size() - 1;
  for (const FFElement& a : tower.elements()) {
    if (a.is_zero() || !is_normal(a, tower, xn_factors)) continue;
    if (multiplicative_order(a, tower) == group_order) return a;
  }
  throw Error(ErrorKind::NotFound, "no primitive normal element in F_" +
                                       std::to_string(tower.q()) + "^" + std::to_string(tower.n()));
}

}  // namespace qorder
