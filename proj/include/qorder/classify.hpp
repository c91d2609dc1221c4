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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qorder/characters.hpp"
#include "qorder/field_tower.hpp"
#include "qorder/fq_poly.hpp"
#include "qorder/integer.hpp"

namespace qorder {

/// Which computation supplies Ord(chi).
enum class OrderRoute {
  Oracle,  // divisor scan with annihilation tests
  Fast,    // monic reciprocal of the element order
};

/// A tower together with the factorization and divisor list of x^n - 1.
struct FieldSetup {
  TowerPtr tower;
  FactoredPoly xn_factors;
  std::vector<FqPoly> divisors;  // canonical order
};

FieldSetup prepare_field(std::uint32_t p, unsigned s, unsigned n, const Limits& limits = {},
                         std::uint64_t seed = 0);

using ElementPartition = std::map<FqPoly, std::vector<FFElement>>;
using CharacterPartition = std::map<FqPoly, std::vector<AdditiveCharacter>>;

/// Partition of F_{q^n} by F_q-order; every divisor of x^n - 1 is a key.
ElementPartition elements_by_order(const FieldSetup& setup);

/// Partition of the characters by order. The fast route computes
/// C_{f,q} = {chi_a : m_{a,q} = f*}.
CharacterPartition characters_by_order(const FieldSetup& setup, OrderRoute route,
                                       CheckMode check = CheckMode::Basis);

struct ClassificationRow {
  FqPoly f;
  std::uint64_t element_count = 0;
  std::uint64_t phi_q = 0;
  std::uint64_t char_set_size = 0;
  FqPoly f_star;
  bool self_reciprocal = false;
};

struct ClassificationReport {
  std::uint32_t p = 0;
  unsigned s = 0;
  unsigned n = 0;
  std::vector<ClassificationRow> rows;
};

ClassificationReport classify_field(const FieldSetup& setup, OrderRoute route,
                                    CheckMode check = CheckMode::Basis);

struct Corollary1Counterexample {
  FFElement alpha;
  FqPoly element_order;
  FqPoly character_order;
};

struct Corollary1Result {
  bool holds = true;
  std::uint64_t checked = 0;
  std::uint64_t coinciding = 0;     // elements with Ord(chi_a) = m_{a,q}
  std::uint64_t self_reciprocal = 0;  // elements whose order is self-reciprocal
  std::optional<Corollary1Counterexample> first_counterexample;
};

/// Checks, for every a, (Ord(chi_a) = m_{a,q}) <=> m_{a,q} is self-reciprocal.
Corollary1Result orders_coincide_iff_self_reciprocal(const FieldSetup& setup, OrderRoute route,
                                                     CheckMode check = CheckMode::Basis);

struct MeynVerdict {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  unsigned u = 0;
  std::uint64_t v = 1;  // n = p^u v, gcd(v, p) = 1
  bool criterion_holds = false;
  std::optional<std::uint64_t> witness_j;  // least j in [1, v] with q^j = -1 mod v
  bool all_divisors_self_reciprocal = false;
  std::uint64_t divisor_count = 0;

  bool consistent() const noexcept {
    return criterion_holds == witness_j.has_value() &&
           criterion_holds == all_divisors_self_reciprocal;
  }
};

/// Modular search for q^j = -1 (mod v), cross-checked by testing every monic
/// divisor of x^n - 1 for self-reciprocity.
MeynVerdict meyn_criterion(const PolyRing& ring, std::uint64_t n, const Limits& limits = {},
                           std::uint64_t seed = 0);
/// q must be a prime power; throws InvalidArgument otherwise.
MeynVerdict meyn_criterion(std::uint64_t q, std::uint64_t n, const Limits& limits = {},
                           std::uint64_t seed = 0);

/// Least k >= 1 with x^k = 1. Throws ZeroElement for x = 0.
std::uint64_t multiplicative_order(const FFElement& x, const FieldTower& tower);

/// First element in lexicographic order that is both normal and primitive.
/// Throws NotFound, which would contradict the primitive normal basis theorem.
FFElement find_primitive_normal(const FieldTower& tower, const FactoredPoly& xn_factors);

}  // namespace qorder
