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

#include <compare>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <vector>

#include "qorder/base_field.hpp"
#include "qorder/fq_poly.hpp"
#include "qorder/integer.hpp"

namespace qorder {

/// Element of F_{q^n} in tower coordinates: n coefficients over F_q in the
/// u-power basis, constant first. Ordering is lexicographic on the tuple.
class FFElement {
 public:
  FFElement() = default;
  explicit FFElement(std::vector<Coeff> coords) : coords_(std::move(coords)) {}

  const std::vector<Coeff>& coords() const noexcept { return coords_; }
  Coeff operator[](std::size_t i) const noexcept { return coords_[i]; }
  bool is_zero() const noexcept;

  /// The coordinates as residues mod p: one length-s digit vector per u-power.
  std::vector<std::vector<std::uint32_t>> residues(const BaseField& field) const;

  friend bool operator==(const FFElement&, const FFElement&) = default;
  friend auto operator<=>(const FFElement&, const FFElement&) = default;

 private:
  std::vector<Coeff> coords_;
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Lexicographically smallest monic irreducible polynomial of the given degree
/// over the ring's field (coefficients compared from the constant term up).
FqPoly smallest_monic_irreducible(const PolyRing& ring, unsigned degree);

/// F_q = F_p[t]/(g0) with the canonical g0 of degree s (g0 = t when s = 1).
BaseField build_base_field(std::uint32_t p, unsigned s);

/// F_p ⊂ F_q = F_p[t]/(g0) ⊂ F_{q^n} = F_q[u]/(h0) with canonical moduli.
/// Throws NonPrime, InvalidArgument (s or n zero) or SizeExceeded when
/// p^(s n) exceeds limits.size_bound.
TowerPtr build_tower(std::uint32_t p, unsigned s, unsigned n, const Limits& limits = {});

/**
 * Immutable description of an extension tower plus exact arithmetic on its
 * top field. Frobenius x -> x^q is applied through a precomputed F_q-linear
 * matrix; the absolute trace through the traces of an F_p-basis.
 */
class FieldTower {
 public:
  class ElementRange;

  FieldTower(std::shared_ptr<const BaseField> base, FqPoly top_modulus, const Limits& limits);

  std::uint32_t p() const noexcept { return base_->characteristic(); }
  unsigned s() const noexcept { return base_->degree(); }
  unsigned n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return base_->order(); }
  /// q^n.
  std::uint64_t size() const noexcept { return size_; }
  const Limits& limits() const noexcept { return limits_; }

  const BaseField& base_field() const noexcept { return *base_; }
  const PolyRing& base_ring() const noexcept { return ring_; }
  const std::vector<std::uint32_t>& base_modulus() const noexcept { return base_->modulus(); }
  const FqPoly& top_modulus() const noexcept { return top_modulus_; }

  /// Validates length and range; shorter inputs are zero-padded.
  FFElement element(std::vector<Coeff> coords) const;
  FFElement zero() const { return FFElement(std::vector<Coeff>(n_, 0)); }
  FFElement one() const { return embed_base(1); }
  FFElement embed_base(Coeff c) const;
  /// True when x lies in the embedded copy of F_q.
  bool in_base(const FFElement& x) const noexcept;

  FFElement add(const FFElement& a, const FFElement& b) const;
  FFElement sub(const FFElement& a, const FFElement& b) const;
  FFElement neg(const FFElement& a) const;
  FFElement mul(const FFElement& a, const FFElement& b) const;
  FFElement scale(Coeff c, const FFElement& a) const;
  FFElement pow(const FFElement& a, std::uint64_t e) const;

  /// x^(q^k).
  FFElement frobenius(const FFElement& x, std::uint64_t k = 1) const;
  /// x, x^q, ..., x^(q^(n-1)).
  std::vector<FFElement> conjugates(const FFElement& x) const;

  /// Tr_{q^n/p}(x) as a residue mod p.
  std::uint32_t trace_to_prime(const FFElement& x) const noexcept;

  /// The F_p-basis u^j t^i, ordered by j then i.
  const std::vector<FFElement>& prime_basis() const noexcept { return prime_basis_; }
  /// Conjugates of prime_basis()[k].
  const std::vector<FFElement>& prime_basis_conjugates(std::size_t k) const noexcept {
    return basis_conjugates_[k];
  }

  /// Element number `index` in lexicographic coordinate order.
  FFElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FFElement& x) const noexcept;
  /// All q^n elements in lexicographic order; throws SizeExceeded.
  ElementRange elements() const;
  /// Throws SizeExceeded when q^n exceeds the configured bound.
  void require_enumerable() const;

  friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
    return *a.base_ == *b.base_ && a.top_modulus_ == b.top_modulus_;
  }

  class ElementRange {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type = FFElement;
      using difference_type = std::ptrdiff_t;
      using reference = FFElement;
      using pointer = void;

      iterator() = default;
      iterator(const FieldTower* tower, std::uint64_t index) : tower_(tower), index_(index) {}
      FFElement operator*() const { return tower_->element_at(index_); }
      iterator& operator++() {
        ++index_;
        return *this;
      }
      iterator operator++(int) {
        auto copy = *this;
        ++index_;
        return copy;
      }
      friend bool operator==(const iterator& a, const iterator& b) noexcept {
        return a.index_ == b.index_;
      }

     private:
      const FieldTower* tower_ = nullptr;
      std::uint64_t index_ = 0;
    };

    explicit ElementRange(const FieldTower* tower) : tower_(tower) {}
    iterator begin() const { return {tower_, 0}; }
    iterator end() const { return {tower_, tower_->size()}; }
    std::uint64_t size() const noexcept { return tower_->size(); }

   private:
    const FieldTower* tower_;
  };

 private:
  std::shared_ptr<const BaseField> base_;
  PolyRing ring_;
  FqPoly top_modulus_;
  unsigned n_;
  std::uint64_t size_;
  Limits limits_;

  std::vector<FFElement> frobenius_images_;  // (u^j)^q
  std::vector<FFElement> prime_basis_;
  std::vector<std::vector<FFElement>> basis_conjugates_;
  std::vector<std::uint32_t> basis_traces_;  // Tr(u^j t^i) at j * s + i
};

/// Free-function spellings of the tower operations.
inline FFElement frobenius(const FFElement& x, const FieldTower& tower, std::uint64_t k) {
  return tower.frobenius(x, k);
}
inline std::uint32_t trace_to_prime(const FFElement& x, const FieldTower& tower) {
  return tower.trace_to_prime(x);
}
inline FFElement embed_base(Coeff c, const FieldTower& tower) { return tower.embed_base(c); }
inline FieldTower::ElementRange enumerate_elements(const FieldTower& tower) {
  return tower.elements();
}

/// Parses an element in the coefficient-list format (constant first, at most n
/// tokens). Throws ParseError.
FFElement parse_element(std::string_view text, const FieldTower& tower);
std::string to_coeff_list(const FFElement& x);

}  // namespace qorder
