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

#include "qorder/characters.hpp"

#include "qorder/errors.hpp"
#include "qorder/module_action.hpp"

namespace qorder {

AdditiveCharacter::AdditiveCharacter(TowerPtr tower, FFElement label)
    : tower_(std::move(tower)), label_(std::move(label)) {
  if (!tower_) throw Error(ErrorKind::InvalidArgument, "character needs a tower");
  label_ = tower_->element(label_.coords());
}

AdditiveCharacter AdditiveCharacter::trivial(TowerPtr tower) {
  auto zero = tower->zero();
  return AdditiveCharacter(std::move(tower), std::move(zero));
}

std::uint32_t char_eval_exponent(const AdditiveCharacter& chi, const FFElement& x) {
  const auto& tower = chi.tower();
  return tower.trace_to_prime(tower.mul(chi.label(), x));
}

AdditiveCharacter char_mul(const AdditiveCharacter& a, const AdditiveCharacter& b) {
  if (a.tower_ptr() != b.tower_ptr() && !(a.tower() == b.tower())) {
    throw Error(ErrorKind::TowerMismatch, "characters belong to different towers");
  }
  return AdditiveCharacter(a.tower_ptr(), a.tower().add(a.label(), b.label()));
}

std::uint32_t char_action_exponent(const FqPoly& g, const AdditiveCharacter& chi,
                                   const FFElement& x) {
  return char_eval_exponent(chi, apply_action(g, x, chi.tower()));
}

bool char_annihilated_by(const FqPoly& g, const AdditiveCharacter& chi, CheckMode mode) {
  const auto& tower = chi.tower();
  if (mode == CheckMode::Basis) {
    const auto& basis = tower.prime_basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const FFElement image = apply_action(g, tower.prime_basis_conjugates(k), tower);
      if (char_eval_exponent(chi, image) != 0) return false;
    }
    return true;
  }
  for (const FFElement& beta : tower.elements()) {
    if (char_action_exponent(g, chi, beta) != 0) return false;
  }
  return true;
}

FqPoly char_order_bruteforce(const AdditiveCharacter& chi, std::span<const FqPoly> divisors,
                             CheckMode mode) {
  for (const FqPoly& g : divisors) {
    if (char_annihilated_by(g, chi, mode)) return g;
  }
  throw Error(ErrorKind::NotFound, "no divisor of x^n - 1 annihilates the character");
}

FqPoly char_order_bruteforce(const AdditiveCharacter& chi, const FactoredPoly& xn_factors,
                             CheckMode mode) {
  const auto& tower = chi.tower();
  const auto divisors = tower.base_ring().divisors(xn_factors, tower.limits());
  return char_order_bruteforce(chi, divisors, mode);
}

FqPoly char_order_fast(const AdditiveCharacter& chi, const FactoredPoly& xn_factors) {
  const auto& tower = chi.tower();
  return tower.base_ring().monic_reciprocal(fq_order(chi.label(), tower, xn_factors));
}

CharOrderReport char_order_report(const AdditiveCharacter& chi, const FactoredPoly& xn_factors,
                                  std::span<const FqPoly> divisors, CheckMode mode) {
  CharOrderReport rep{chi, char_order_bruteforce(chi, divisors, mode),
                      char_order_fast(chi, xn_factors), false};
  rep.agree = rep.order_bruteforce == rep.order_fast;
  return rep;
}

}  // namespace qorder
