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

#include "qorder/module_action.hpp"

#include <string>

#include "qorder/errors.hpp"

namespace qorder {

FFElement apply_action(const FqPoly& g, std::span<const FFElement> conjugates,
                       const FieldTower& tower) {
  FFElement acc = tower.zero();
  const auto& c = g.coeffs();
  const std::size_t n = conjugates.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    acc = tower.add(acc, tower.scale(c[i], conjugates[i % n]));
  }
  return acc;
}

FFElement apply_action(const FqPoly& g, const FFElement& x, const FieldTower& tower) {
  const auto conj = tower.conjugates(x);
  return apply_action(g, conj, tower);
}

FFElement linearized_eval(const FqPoly& g, const FFElement& x, const FieldTower& tower) {
  if (!g.is_monic()) throw Error(ErrorKind::NotMonic, to_pretty(g) + " is not monic");
  const std::uint64_t q = tower.q();
  const std::size_t n = tower.n();
  // x^(q^i) with i reduced mod n, so the exponent stays below q^n.
  auto power = [&](std::size_t i) { return tower.pow(x, pow_or_throw(q, i % n)); };
  const auto m = static_cast<std::size_t>(g.degree());
  FFElement acc = power(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (g.coeff(i) != 0) acc = tower.add(acc, tower.scale(g.coeff(i), power(i)));
  }
  return acc;
}

FqPoly fq_order(const FFElement& x, const FieldTower& tower, const FactoredPoly& xn_factors) {
  const PolyRing& ring = tower.base_ring();
  const auto conj = tower.conjugates(x);
  FqPoly order = ring.expand(xn_factors);
  for (const auto& [P, e] : xn_factors.factors) {
    for (unsigned k = 0; k < e; ++k) {
      FqPoly candidate = ring.div(order, P);
      if (!apply_action(candidate, conj, tower).is_zero()) break;
      order = std::move(candidate);
    }
  }
  return order;
}

bool is_normal(const FFElement& x, const FieldTower& tower, const FactoredPoly& xn_factors) {
  return fq_order(x, tower, xn_factors).degree() == static_cast<int>(tower.n());
}

OrderRecord order_record(const FFElement& x, const FieldTower& tower,
                         const FactoredPoly& xn_factors) {
  OrderRecord rec{x, fq_order(x, tower, xn_factors), false};
  rec.is_normal = rec.order.degree() == static_cast<int>(tower.n());
  return rec;
}

FFElement c0_coefficient(const FqPoly& g, const FFElement& x, const FieldTower& tower) {
  if (!g.is_monic()) throw Error(ErrorKind::NotMonic, to_pretty(g) + " is not monic");
  const auto m = static_cast<std::size_t>(g.degree());
  const std::size_t n = tower.n();
  if (m >= n) {
    throw Error(ErrorKind::DegreeTooLarge, "deg g = " + std::to_string(m) + " must be below n = " +
                                               std::to_string(n));
  }
  if (g.constant_term() == 0) throw Error(ErrorKind::ZeroConstantTerm, "c0 needs g(0) != 0");
  FFElement acc = tower.zero();
  for (std::size_t t = 0; t <= m; ++t) {
    if (g.coeff(t) == 0) continue;
    acc = tower.add(acc, tower.scale(g.coeff(t), tower.frobenius(x, (n - t) % n)));
  }
  return acc;
}

}  // namespace qorder
