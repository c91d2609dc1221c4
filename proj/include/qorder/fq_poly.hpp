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
#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qorder/base_field.hpp"
#include "qorder/integer.hpp"

namespace qorder {

/// Dense polynomial over F_q, constant term first, no trailing zeros.
class FqPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  FqPoly() = default;
  explicit FqPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  FqPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Coeff coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Coeff constant_term() const noexcept { return coeff(0); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;

  /// Canonical total order: by degree, then lexicographically on the
  /// coefficient tuple from the constant term upward.
  friend bool operator<(const FqPoly& a, const FqPoly& b) noexcept {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return a.coeffs_ < b.coeffs_;
  }

 private:
  void trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Factorization into monic irreducibles with multiplicities, sorted by the
/// canonical order of the factors.
struct FactoredPoly {
  std::vector<std::pair<FqPoly, unsigned>> factors;

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
};

/// Polynomial arithmetic over a fixed F_q.
class PolyRing {
 public:
  explicit PolyRing(std::shared_ptr<const BaseField> field);
  explicit PolyRing(BaseField field);

  const BaseField& field() const noexcept { return *field_; }
  std::shared_ptr<const BaseField> field_ptr() const noexcept { return field_; }

  FqPoly zero() const { return {}; }
  FqPoly one() const { return FqPoly{1}; }
  FqPoly x() const { return FqPoly{0, 1}; }
  FqPoly constant(Coeff c) const { return FqPoly{c}; }
  FqPoly monomial(Coeff c, std::size_t k) const;
  /// x^n - 1.
  FqPoly xn_minus_one(std::size_t n) const;

  FqPoly add(const FqPoly& a, const FqPoly& b) const;
  FqPoly sub(const FqPoly& a, const FqPoly& b) const;
  FqPoly neg(const FqPoly& a) const;
  FqPoly mul(const FqPoly& a, const FqPoly& b) const;
  FqPoly scale(Coeff c, const FqPoly& a) const;
  /// Quotient and remainder; throws DivisionByZeroPoly for b == 0.
  std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) const;
  FqPoly div(const FqPoly& a, const FqPoly& b) const { return divrem(a, b).first; }
  FqPoly mod(const FqPoly& a, const FqPoly& b) const { return divrem(a, b).second; }
  bool divides(const FqPoly& d, const FqPoly& a) const { return mod(a, d).is_zero(); }
  /// Monic gcd; gcd(0, 0) = 0.
  FqPoly gcd(const FqPoly& a, const FqPoly& b) const;
  FqPoly make_monic(const FqPoly& a) const;
  FqPoly pow(const FqPoly& a, std::uint64_t e) const;
  FqPoly pow_mod(const FqPoly& a, std::uint64_t e, const FqPoly& m) const;
  Coeff eval(const FqPoly& a, Coeff x) const;

  /// a0^{-1} x^{deg f} f(1/x). Accepts any f with f(0) != 0; the result is
  /// always monic of the same degree. Throws ZeroConstantTerm otherwise.
  FqPoly monic_reciprocal(const FqPoly& f) const;
  /// Requires f monic; throws NotMonic or ZeroConstantTerm.
  bool is_self_reciprocal(const FqPoly& f) const;

  /// Rabin's test. Requires deg f >= 1.
  bool is_irreducible(const FqPoly& f) const;

  /// Complete factorization of x^n - 1 (n >= 1): the squarefree part x^v - 1
  /// is split with distinct- then equal-degree factorization, and every
  /// multiplicity is p^u where n = p^u v.
  FactoredPoly factor_xn_minus_1(std::uint64_t n, std::uint64_t seed = 0) const;

  /// Squarefree factorization of a monic squarefree polynomial.
  std::vector<FqPoly> factor_squarefree(const FqPoly& f, std::uint64_t seed = 0) const;

  /// Product of P^e over the factorization.
  FqPoly expand(const FactoredPoly& fp) const;

  /// Every monic divisor of the factored polynomial, in canonical order.
  /// Throws SizeExceeded if the count exceeds limits.divisor_bound.
  std::vector<FqPoly> divisors(const FactoredPoly& fp, const Limits& limits = {}) const;
  /// Same divisors, each as its own factorization, in the same order.
  std::vector<FactoredPoly> divisor_factorizations(const FactoredPoly& fp,
                                                   const Limits& limits = {}) const;
  static std::uint64_t divisor_count(const FactoredPoly& fp) noexcept;

  /// Phi_q(f) = |(F_q[x]/f)^x| by the multiplicative formula.
  std::uint64_t phi_q(const FactoredPoly& f) const;
  /// Phi_q(f) for a monic divisor f of the polynomial factored by `whole`.
  std::uint64_t phi_q(const FqPoly& f, const FactoredPoly& whole) const;
  /// Factorization of a monic divisor f of `whole`, by stripping its factors.
  /// Throws InvalidArgument if f is not a monic divisor.
  FactoredPoly factor_divisor(const FqPoly& f, const FactoredPoly& whole) const;

 private:
  void equal_degree_split(const FqPoly& f, std::size_t d, std::mt19937_64& rng,
                          std::vector<FqPoly>& out) const;

  std::shared_ptr<const BaseField> field_;
};

/// Parses the comma-separated coefficient format, constant term first; each
/// token is an integer in [0, q). Throws ParseError.
std::vector<Coeff> parse_coeff_list(std::string_view text, const BaseField& field);
FqPoly parse_poly(std::string_view text, const BaseField& field);

/// Comma-separated coefficients, constant first ("0" for the zero polynomial).
std::string to_coeff_list(const FqPoly& f);
/// Human form such as "x^3 + 2x + 1".
std::string to_pretty(const FqPoly& f);
/// e.g. "(x + 1)^4 (x^2 + x + 1)".
std::string to_pretty(const FactoredPoly& fp);

}  // namespace qorder
