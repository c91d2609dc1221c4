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

#include "qorder/base_field.hpp"

#include <string>

#include "qorder/errors.hpp"
#include "qorder/integer.hpp"

namespace qorder {

namespace {
constexpr std::uint32_t kTableLimit = 256;
}

BaseField::BaseField(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "base degree s must be >= 1");
  if (modulus_.size() != s + 1 || modulus_.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "base modulus must be monic of degree s");
  }
  auto q = checked_pow(p, s);
  if (!q || *q > UINT32_MAX) throw Error(ErrorKind::SizeExceeded, "q = p^s exceeds 32 bits");
  q_ = static_cast<std::uint32_t>(*q);

  if (q_ <= kTableLimit) {
    add_table_.resize(std::size_t{q_} * q_);
    mul_table_.resize(std::size_t{q_} * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (Coeff a = 0; a < q_; ++a) {
      neg_table_[a] = neg_digits(a);
      for (Coeff b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
        mul_table_[std::size_t{a} * q_ + b] = mul_digits(a, b);
        if (mul_table_[std::size_t{a} * q_ + b] == 1) inv_table_[a] = b;
      }
    }
    tabulated_ = true;
  }
}

BaseField BaseField::prime(std::uint32_t p) { return BaseField(p, 1, {0, 1}); }

std::vector<std::uint32_t> BaseField::digits(Coeff a) const {
  std::vector<std::uint32_t> d(s_);
  for (unsigned i = 0; i < s_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Coeff BaseField::from_digits(std::span<const std::uint32_t> digits) const noexcept {
  Coeff a = 0;
  for (std::size_t i = digits.size(); i-- > 0;) a = a * p_ + digits[i] % p_;
  return a;
}

Coeff BaseField::add_digits(Coeff a, Coeff b) const noexcept {
  if (s_ == 1) return (a + b) % p_;
  Coeff out = 0;
  Coeff scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Coeff BaseField::neg_digits(Coeff a) const noexcept {
  Coeff out = 0;
  Coeff scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Coeff BaseField::mul_digits(Coeff a, Coeff b) const noexcept {
  if (s_ == 1) return static_cast<Coeff>(std::uint64_t{a} * b % p_);
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
  for (unsigned i = 0; i < s_; ++i) {
    for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  // Reduce modulo the monic g0: t^s = -(g0_0 + ... + g0_{s-1} t^{s-1}).
  for (std::size_t k = prod.size(); k-- > s_;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < s_; ++i) {
      prod[k - s_ + i] = (prod[k - s_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
  }
  Coeff out = 0;
  for (unsigned i = s_; i-- > 0;) out = out * p_ + static_cast<Coeff>(prod[i]);
  return out;
}

Coeff BaseField::add(Coeff a, Coeff b) const noexcept {
  return tabulated_ ? add_table_[std::size_t{a} * q_ + b] : add_digits(a, b);
}

Coeff BaseField::neg(Coeff a) const noexcept { return tabulated_ ? neg_table_[a] : neg_digits(a); }

Coeff BaseField::sub(Coeff a, Coeff b) const noexcept { return add(a, neg(b)); }

Coeff BaseField::mul(Coeff a, Coeff b) const noexcept {
  return tabulated_ ? mul_table_[std::size_t{a} * q_ + b] : mul_digits(a, b);
}

Coeff BaseField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Coeff BaseField::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero in F_q");
  if (tabulated_) return inv_table_[a];
  return pow(a, q_ - 2);
}

}  // namespace qorder
