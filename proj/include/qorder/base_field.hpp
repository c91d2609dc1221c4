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
#include <vector>

namespace qorder {

/// An element of F_q encoded as an integer in [0, q): its base-p digits are the
/// coordinates in the t-power basis, constant digit least significant.
using Coeff = std::uint32_t;

/**
 * The field F_q = F_p[t]/(g0) with g0 monic irreducible of degree s.
 *
 * For s = 1 the modulus is t itself and arithmetic is plain residue arithmetic.
 * Small fields (q <= 256) use precomputed addition and multiplication tables;
 * larger ones operate on the digit vectors directly.
 */
class BaseField {
 public:
  /// `modulus` holds the s + 1 residues of g0, constant first, leading 1.
  /// Irreducibility is the caller's responsibility (see build_base_field).
  BaseField(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus);

  /// F_p with the degree-one modulus t.
  static BaseField prime(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return s_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  bool contains(Coeff a) const noexcept { return a < q_; }

  Coeff add(Coeff a, Coeff b) const noexcept;
  Coeff sub(Coeff a, Coeff b) const noexcept;
  Coeff neg(Coeff a) const noexcept;
  Coeff mul(Coeff a, Coeff b) const noexcept;
  /// Throws ZeroElement for a == 0.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> digits(Coeff a) const;
  Coeff from_digits(std::span<const std::uint32_t> digits) const noexcept;

  /// The embedded residue r of F_p, i.e. r * 1.
  Coeff from_residue(std::uint32_t r) const noexcept { return r % p_; }

  friend bool operator==(const BaseField& a, const BaseField& b) noexcept {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
  }

 private:
  Coeff add_digits(Coeff a, Coeff b) const noexcept;
  Coeff neg_digits(Coeff a) const noexcept;
  Coeff mul_digits(Coeff a, Coeff b) const noexcept;

  std::uint32_t p_;
  unsigned s_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;

  bool tabulated_ = false;
  std::vector<Coeff> add_table_;
  std::vector<Coeff> mul_table_;
  std::vector<Coeff> neg_table_;
  std::vector<Coeff> inv_table_;
};

}  // namespace qorder
