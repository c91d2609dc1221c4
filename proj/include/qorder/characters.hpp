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
#include <span>

#include "qorder/field_tower.hpp"
#include "qorder/fq_poly.hpp"

namespace qorder {

/// How annihilation of a character is decided.
enum class CheckMode {
  Basis,       // test an F_p-basis only (the map is F_p-linear)
  Exhaustive,  // test every element of F_{q^n}
};

/**
 * The additive character chi_a(x) = zeta_p^Tr(a x), identified by its label a.
 * Values are handled as exponents in Z/p, never as complex numbers.
 */
class AdditiveCharacter {
 public:
  /// Throws InvalidArgument if the label does not belong to the tower.
  AdditiveCharacter(TowerPtr tower, FFElement label);

  static AdditiveCharacter trivial(TowerPtr tower);

  const FFElement& label() const noexcept { return label_; }
  const FieldTower& tower() const noexcept { return *tower_; }
  const TowerPtr& tower_ptr() const noexcept { return tower_; }
  bool is_trivial() const noexcept { return label_.is_zero(); }

  friend bool operator==(const AdditiveCharacter& a, const AdditiveCharacter& b) noexcept {
    return a.label_ == b.label_ && (a.tower_ == b.tower_ || *a.tower_ == *b.tower_);
  }

 private:
  TowerPtr tower_;
  FFElement label_;
};

/// Pair of character orders as computed by the oracle and by the reciprocal rule.
struct CharOrderReport {
  AdditiveCharacter character;
  FqPoly order_bruteforce;
  FqPoly order_fast;
  bool agree = false;
};

/// Exponent e with chi(x) = zeta_p^e, i.e. Tr_{q^n/p}(label * x).
std::uint32_t char_eval_exponent(const AdditiveCharacter& chi, const FFElement& x);

/// chi_a * chi_b = chi_{a+b}. Throws TowerMismatch.
AdditiveCharacter char_mul(const AdditiveCharacter& a, const AdditiveCharacter& b);

/// Exponent of (g ∘ chi)(x) = chi(g ∘ x).
std::uint32_t char_action_exponent(const FqPoly& g, const AdditiveCharacter& chi,
                                   const FFElement& x);

/// True iff g ∘ chi is the trivial character.
bool char_annihilated_by(const FqPoly& g, const AdditiveCharacter& chi,
                         CheckMode mode = CheckMode::Basis);

/// Oracle: the first divisor of x^n - 1, in canonical (degree, lex) order,
/// that annihilates chi.
FqPoly char_order_bruteforce(const AdditiveCharacter& chi, const FactoredPoly& xn_factors,
                             CheckMode mode = CheckMode::Basis);
/// Same, scanning a precomputed canonical divisor list.
FqPoly char_order_bruteforce(const AdditiveCharacter& chi, std::span<const FqPoly> divisors,
                             CheckMode mode = CheckMode::Basis);

/// Ord(chi_a) as the monic reciprocal of the F_q-order of a.
FqPoly char_order_fast(const AdditiveCharacter& chi, const FactoredPoly& xn_factors);

CharOrderReport char_order_report(const AdditiveCharacter& chi, const FactoredPoly& xn_factors,
                                  std::span<const FqPoly> divisors,
                                  CheckMode mode = CheckMode::Basis);

}  // namespace qorder
