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

#include <span>

#include "qorder/field_tower.hpp"
#include "qorder/fq_poly.hpp"

namespace qorder {

/// F_q-order of an element together with its normality flag.
struct OrderRecord {
  FFElement element;
  FqPoly order;  // monic divisor of x^n - 1
  bool is_normal = false;
};

/// g ∘ x = sum a_i x^(q^i). Exponents wrap modulo n since x^(q^n) = x.
FFElement apply_action(const FqPoly& g, const FFElement& x, const FieldTower& tower);

/// Same action given the precomputed conjugates x, x^q, ..., x^(q^(n-1)).
FFElement apply_action(const FqPoly& g, std::span<const FFElement> conjugates,
                       const FieldTower& tower);

/// L_g(x) = x^(q^m) + sum_{i<m} a_i x^(q^i) for monic g of degree m, each
/// power taken by direct exponentiation. Throws NotMonic.
FFElement linearized_eval(const FqPoly& g, const FFElement& x, const FieldTower& tower);

/// The F_q-order m_{x,q}: the monic divisor m of x^n - 1 with m ∘ x = 0 and
/// (m / P) ∘ x != 0 for every irreducible P | m. `xn_factors` must be the
/// factorization of x^n - 1.
FqPoly fq_order(const FFElement& x, const FieldTower& tower, const FactoredPoly& xn_factors);

bool is_normal(const FFElement& x, const FieldTower& tower, const FactoredPoly& xn_factors);

OrderRecord order_record(const FFElement& x, const FieldTower& tower,
                         const FactoredPoly& xn_factors);

/// c0 = a_0 x + a_1 x^(q^(n-1)) + ... + a_m x^(q^(n-m)) for monic g of degree
/// m < n with g(0) != 0. Throws NotMonic, DegreeTooLarge or ZeroConstantTerm.
FFElement c0_coefficient(const FqPoly& g, const FFElement& x, const FieldTower& tower);

}  // namespace qorder
