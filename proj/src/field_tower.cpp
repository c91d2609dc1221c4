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

#include "qorder/field_tower.hpp"

#include <stdexcept>
#include <string>

#include "qorder/errors.hpp"

namespace qorder {

bool FFElement::is_zero() const noexcept {
  for (Coeff c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> FFElement::residues(const BaseField& field) const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(coords_.size());
  for (Coeff c : coords_) out.push_back(field.digits(c));
  return out;
}

FqPoly smallest_monic_irreducible(const PolyRing& ring, unsigned degree) {
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "irreducible degree must be >= 1");
  const std::uint64_t q = ring.field().order();
  const std::uint64_t count = pow_or_throw(q, degree);
  // Candidate k has c_0 as its most significant base-q digit, so increasing k
  // walks the tuples (c_0, ..., c_{d-1}) in lexicographic order. For d >= 2
  // every candidate with c_0 = 0 is divisible by x and is skipped.
  const std::uint64_t start = degree >= 2 ? count / q : 0;
  for (std::uint64_t k = start; k < count; ++k) {
    std::vector<Coeff> c(degree + 1, 0);
    std::uint64_t rest = k;
    for (unsigned i = degree; i-- > 0;) {
      c[i] = static_cast<Coeff>(rest % q);
      rest /= q;
    }
    c[degree] = 1;
    FqPoly f(std::move(c));
    if (ring.is_irreducible(f)) return f;
  }
  throw std::logic_error("no monic irreducible polynomial of degree " + std::to_string(degree));
}

BaseField build_base_field(std::uint32_t p, unsigned s) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "s must be >= 1");
  const PolyRing prime_ring(BaseField::prime(p));
  const FqPoly g0 = smallest_monic_irreducible(prime_ring, s);
  return BaseField(p, s, g0.coeffs());
}

TowerPtr build_tower(std::uint32_t p, unsigned s, unsigned n, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (s == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "s and n must be >= 1");
  auto size = checked_pow(p, std::uint64_t{s} * n);
  if (!size || *size > limits.size_bound) {
    throw Error(ErrorKind::SizeExceeded, "field of size " + std::to_string(p) + "^" +
                                             std::to_string(std::uint64_t{s} * n) +
                                             " exceeds the bound " + std::to_string(limits.size_bound));
  }
  auto base = std::make_shared<const BaseField>(build_base_field(p, s));
  const PolyRing ring(base);
  FqPoly h0 = smallest_monic_irreducible(ring, n);
  return std::make_shared<const FieldTower>(std::move(base), std::move(h0), limits);
}

FieldTower::FieldTower(std::shared_ptr<const BaseField> base, FqPoly top_modulus,
                       const Limits& limits)
    : base_(std::move(base)), ring_(base_), top_modulus_(std::move(top_modulus)), limits_(limits) {
  if (top_modulus_.degree() < 1 || !top_modulus_.is_monic()) {
    throw Error(ErrorKind::InvalidArgument, "top modulus must be monic of degree >= 1");
  }
  if (!ring_.is_irreducible(top_modulus_)) {
    throw Error(ErrorKind::InvalidArgument, to_pretty(top_modulus_) + " is reducible");
  }
  n_ = static_cast<unsigned>(top_modulus_.degree());
  auto size = checked_pow(q(), n_);
  if (!size || *size > limits_.size_bound) {
    throw Error(ErrorKind::SizeExceeded, "field size exceeds the bound " +
                                             std::to_string(limits_.size_bound));
  }
  size_ = *size;

  frobenius_images_.reserve(n_);
  for (unsigned j = 0; j < n_; ++j) {
    std::vector<Coeff> c(n_, 0);
    c[j] = 1;
    frobenius_images_.push_back(pow(FFElement(std::move(c)), q()));
  }

  const std::uint64_t ns = std::uint64_t{n_} * s();
  for (unsigned j = 0; j < n_; ++j) {
    for (unsigned i = 0; i < s(); ++i) {
      std::vector<Coeff> c(n_, 0);
      c[j] = static_cast<Coeff>(pow_or_throw(p(), i));
      FFElement beta(std::move(c));
      basis_conjugates_.push_back(conjugates(beta));
      // Tr_{q^n/p}(beta) = sum of beta^(p^k), k < ns.
      FFElement acc = zero();
      FFElement y = beta;
      for (std::uint64_t k = 0; k < ns; ++k) {
        acc = add(acc, y);
        y = pow(y, p());
      }
      if (!in_base(acc) || acc[0] >= p()) {
        throw std::logic_error("absolute trace left the prime field");
      }
      basis_traces_.push_back(acc[0]);
      prime_basis_.push_back(std::move(beta));
    }
  }
}

FFElement FieldTower::element(std::vector<Coeff> coords) const {
  if (coords.size() > n_) {
    throw Error(ErrorKind::InvalidArgument, "element has more than n = " + std::to_string(n_) +
                                                " coordinates");
  }
  for (Coeff c : coords) {
    if (!base_->contains(c)) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  }
  coords.resize(n_, 0);
  return FFElement(std::move(coords));
}

FFElement FieldTower::embed_base(Coeff c) const {
  std::vector<Coeff> v(n_, 0);
  v[0] = c;
  return FFElement(std::move(v));
}

bool FieldTower::in_base(const FFElement& x) const noexcept {
  for (unsigned i = 1; i < n_; ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

FFElement FieldTower::add(const FFElement& a, const FFElement& b) const {
  std::vector<Coeff> v(n_);
  for (unsigned i = 0; i < n_; ++i) v[i] = base_->add(a[i], b[i]);
  return FFElement(std::move(v));
}

FFElement FieldTower::sub(const FFElement& a, const FFElement& b) const {
  std::vector<Coeff> v(n_);
  for (unsigned i = 0; i < n_; ++i) v[i] = base_->sub(a[i], b[i]);
  return FFElement(std::move(v));
}

FFElement FieldTower::neg(const FFElement& a) const {
  std::vector<Coeff> v(n_);
  for (unsigned i = 0; i < n_; ++i) v[i] = base_->neg(a[i]);
  return FFElement(std::move(v));
}

FFElement FieldTower::scale(Coeff c, const FFElement& a) const {
  std::vector<Coeff> v(n_);
  for (unsigned i = 0; i < n_; ++i) v[i] = base_->mul(c, a[i]);
  return FFElement(std::move(v));
}

FFElement FieldTower::mul(const FFElement& a, const FFElement& b) const {
  const auto& F = *base_;
  std::vector<Coeff> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  // u^n = -(h_0 + h_1 u + ... + h_{n-1} u^{n-1})
  const auto& h = top_modulus_.coeffs();
  for (std::size_t k = prod.size(); k-- > n_;) {
    const Coeff c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < n_; ++i) prod[k - n_ + i] = F.sub(prod[k - n_ + i], F.mul(c, h[i]));
  }
  prod.resize(n_);
  return FFElement(std::move(prod));
}

FFElement FieldTower::pow(const FFElement& a, std::uint64_t e) const {
  FFElement result = one();
  FFElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FFElement FieldTower::frobenius(const FFElement& x, std::uint64_t k) const {
  const auto& F = *base_;
  FFElement cur = x;
  for (std::uint64_t step = 0; step < k % n_; ++step) {
    std::vector<Coeff> v(n_, 0);
    for (unsigned j = 0; j < n_; ++j) {
      const Coeff c = cur[j];
      if (c == 0) continue;
      const auto& img = frobenius_images_[j];
      for (unsigned i = 0; i < n_; ++i) v[i] = F.add(v[i], F.mul(c, img[i]));
    }
    cur = FFElement(std::move(v));
  }
  return cur;
}

std::vector<FFElement> FieldTower::conjugates(const FFElement& x) const {
  std::vector<FFElement> out;
  out.reserve(n_);
  out.push_back(x);
  for (unsigned i = 1; i < n_; ++i) out.push_back(frobenius(out.back(), 1));
  return out;
}

std::uint32_t FieldTower::trace_to_prime(const FFElement& x) const noexcept {
  const std::uint32_t prime = p();
  const unsigned deg = s();
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < n_; ++j) {
    Coeff c = x[j];
    for (unsigned i = 0; i < deg && c != 0; ++i) {
      acc += std::uint64_t{c % prime} * basis_traces_[j * deg + i];
      c /= prime;
    }
    acc %= prime;
  }
  return static_cast<std::uint32_t>(acc);
}

FFElement FieldTower::element_at(std::uint64_t index) const {
  std::vector<Coeff> v(n_, 0);
  for (unsigned i = n_; i-- > 0;) {
    v[i] = static_cast<Coeff>(index % q());
    index /= q();
  }
  return FFElement(std::move(v));
}

std::uint64_t FieldTower::index_of(const FFElement& x) const noexcept {
  std::uint64_t index = 0;
  for (unsigned i = 0; i < n_; ++i) index = index * q() + x[i];
  return index;
}

void FieldTower::require_enumerable() const {
  if (size_ > limits_.size_bound) {
    throw Error(ErrorKind::SizeExceeded, "field of size " + std::to_string(size_) +
                                             " exceeds the bound " + std::to_string(limits_.size_bound));
  }
}

FieldTower::ElementRange FieldTower::elements() const {
  require_enumerable();
  return ElementRange(this);
}

FFElement parse_element(std::string_view text, const FieldTower& tower) {
  auto coords = parse_coeff_list(text, tower.base_field());
  if (coords.size() > tower.n()) {
    throw Error(ErrorKind::ParseError, "element has " + std::to_string(coords.size()) +
                                           " coordinates, field degree is " +
                                           std::to_string(tower.n()));
  }
  return tower.element(std::move(coords));
}

std::string to_coeff_list(const FFElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

}  // namespace qorder
