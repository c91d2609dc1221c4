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

#include "qorder/integer.hpp"

#include <string>

#include "qorder/errors.hpp"

namespace qorder {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotFound: return "NotFound";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp) {
  auto r = checked_pow(base, exp);
  if (!r) {
    throw Error(ErrorKind::SizeExceeded,
                std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
  }
  return *r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(u128{result} * base % m);
    base = static_cast<std::uint64_t>(u128{base} * base % m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::pair<unsigned, std::uint64_t> split_prime_power(std::uint64_t n, std::uint64_t p) noexcept {
  unsigned u = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++u;
  }
  return {u, n};
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = factor_integer(q);
  if (factors.size() != 1) return std::nullopt;
  return factors.front();
}

}  // namespace qorder
