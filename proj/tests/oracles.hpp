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

#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// built from raw exponentiation and ring arithmetic so that it stays
// independent of the code paths it checks (Frobenius matrices, trace tables,
// factor stripping, Cantor-Zassenhaus).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qorder/field_tower.hpp"
#include "qorder/fq_poly.hpp"

namespace qorder::oracle {

/// Sum of x^(p^k) for k < ns, by repeated exponentiation.
inline std::uint32_t naive_trace(const FFElement& x, const FieldTower& tower) {
  FFElement acc = tower.zero();
  FFElement y = x;
  for (unsigned k = 0; k < tower.n() * tower.s(); ++k) {
    acc = tower.add(acc, y);
    y = tower.pow(y, tower.p());
  }
  return acc[0];
}

/// g ∘ x with every conjugate computed as x^(q^(i mod n)) by exponentiation.
inline FFElement naive_action(const FqPoly& g, const FFElement& x, const FieldTower& tower) {
  FFElement acc = tower.zero();
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    if (g.coeff(i) == 0) continue;
    std::uint64_t e = 1;
    for (std::size_t k = 0; k < i % tower.n(); ++k) e *= tower.q();
    acc = tower.add(acc, tower.scale(g.coeff(i), tower.pow(x, e)));
  }
  return acc;
}

/// First divisor (in the given canonical order) annihilating x.
inline FqPoly order_by_divisor_scan(const FFElement& x, const FieldTower& tower,
                                    const std::vector<FqPoly>& divisors) {
  for (const auto& g : divisors) {
    if (naive_action(g, x, tower).is_zero()) return g;
  }
  return {};
}

/// Whether Tr(a * (g ∘ beta)) = 0 for every beta, using only naive routines.
inline bool naive_char_annihilated(const FqPoly& g, const FFElement& a, const FieldTower& tower) {
  for (std::uint64_t i = 0; i < tower.size(); ++i) {
    const FFElement beta = tower.element_at(i);
    if (naive_trace(tower.mul(a, naive_action(g, beta, tower)), tower) != 0) return false;
  }
  return true;
}

/// Calls fn on every monic polynomial of exactly degree d.
inline void for_each_monic(const BaseField& F, unsigned d, const std::function<void(const FqPoly&)>& fn) {
  const std::uint64_t q = F.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= q;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Coeff> c(d + 1, 0);
    std::uint64_t rest = k;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<Coeff>(rest % q);
      rest /= q;
    }
    c[d] = 1;
    fn(FqPoly(std::move(c)));
  }
}

/// Monic f is irreducible iff no monic polynomial of degree 1..deg/2 divides it.
inline bool trial_irreducible(const FqPoly& f, const PolyRing& ring) {
  bool found = false;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()) && !found; ++d) {
    for_each_monic(ring.field(), d, [&](const FqPoly& g) {
      if (!found && ring.divides(g, f)) found = true;
    });
  }
  return !found;
}

/// Factorization by trial division with monic polynomials in (degree, lex)
/// order; any divisor found this way is irreducible.
inline FactoredPoly trial_factor(FqPoly f, const PolyRing& ring) {
  FactoredPoly out;
  for (unsigned d = 1; f.degree() >= 1; ++d) {
    std::vector<FqPoly> cands;
    for_each_monic(ring.field(), d, [&](const FqPoly& g) { cands.push_back(g); });
    std::sort(cands.begin(), cands.end());
    for (const auto& g : cands) {
      unsigned e = 0;
      while (f.degree() >= 1 && ring.divides(g, f)) {
        f = ring.div(f, g);
        ++e;
      }
      if (e > 0) out.factors.emplace_back(g, e);
    }
  }
  return out;
}

/// |(F_q[x]/f)^x| by searching an inverse for every residue.
inline std::uint64_t brute_unit_count(const FqPoly& f, const PolyRing& ring) {
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<FqPoly> residues;
  const std::uint64_t q = ring.field().order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= q;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Coeff> c(d, 0);
    std::uint64_t rest = k;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<Coeff>(rest % q);
      rest /= q;
    }
    residues.emplace_back(std::move(c));
  }
  std::uint64_t units = 0;
  for (const auto& a : residues) {
    for (const auto& b : residues) {
      if (ring.mod(ring.mul(a, b), f) == ring.one()) {
        ++units;
        break;
      }
    }
  }
  return units;
}

/// Least k >= 1 with x^k = 1 by stepping through the powers.
inline std::uint64_t brute_mult_order(const FFElement& x, const FieldTower& tower) {
  FFElement y = x;
  std::uint64_t k = 1;
  while (y != tower.one()) {
    y = tower.mul(y, x);
    ++k;
  }
  return k;
}

/// Rank over F_q of the matrix whose rows are x^(q^i), i < n, each conjugate
/// obtained by exponentiation.
inline unsigned conjugate_rank(const FFElement& x, const FieldTower& tower) {
  const auto& F = tower.base_field();
  const unsigned n = tower.n();
  std::vector<std::vector<Coeff>> rows;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < n; ++i) {
    rows.push_back(tower.pow(x, e).coords());
    e *= tower.q();
  }
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < n; ++col) {
    unsigned pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    const Coeff inv = F.inv(rows[rank][col]);
    for (unsigned r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Coeff factor = F.mul(rows[r][col], inv);
      for (unsigned c = 0; c < n; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

/// A random element of the tower.
inline FFElement random_element(const FieldTower& tower, std::mt19937_64& rng) {
  return tower.element_at(rng() % tower.size());
}

/// A random monic polynomial of degree d with nonzero constant term.
inline FqPoly random_monic_unit_const(const BaseField& F, unsigned d, std::mt19937_64& rng) {
  std::vector<Coeff> c(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) c[i] = static_cast<Coeff>(rng() % F.order());
  c[d] = 1;
  if (d > 0) c[0] = static_cast<Coeff>(1 + rng() % (F.order() - 1));
  return FqPoly(std::move(c));
}

}  // namespace qorder::oracle
