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
#include <optional>
#include <utility>
#include <vector>

namespace qorder {

/// Limits applied by every exhaustive operation.
struct Limits {
  std::uint64_t size_bound = std::uint64_t{1} << 24;     // max field cardinality
  std::uint64_t divisor_bound = std::uint64_t{1} << 20;  // max divisor count of x^n - 1
};

bool is_prime(std::uint64_t n) noexcept;

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) noexcept;

/// base^exp; throws SizeExceeded on overflow.
std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp);

/// (base^exp) mod m for m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Distinct prime factors with multiplicity, by trial division, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

/// Splits n = p^u * v with gcd(v, p) = 1. Returns {u, v}.
std::pair<unsigned, std::uint64_t> split_prime_power(std::uint64_t n, std::uint64_t p) noexcept;

/// If q = p^s for a prime p, returns {p, s}.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q);

}  // namespace qorder
