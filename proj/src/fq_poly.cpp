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

#include "qorder/fq_poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qorder/errors.hpp"

namespace qorder {

PolyRing::PolyRing(std::shared_ptr<const BaseField> field) : field_(std::move(field)) {}

PolyRing::PolyRing(BaseField field) : field_(std::make_shared<const BaseField>(std::move(field))) {}

FqPoly PolyRing::monomial(Coeff c, std::size_t k) const {
  std::vector<Coeff> v(k + 1, 0);
  v[k] = c;
  return FqPoly(std::move(v));
}

FqPoly PolyRing::xn_minus_one(std::size_t n) const {
  std::vector<Coeff> v(n + 1, 0);
  v[n] = 1;
  v[0] = field_->sub(v[0], 1);
  return FqPoly(std::move(v));
}

FqPoly PolyRing::add(const FqPoly& a, const FqPoly& b) const {
  const auto& F = *field_;
  std::vector<Coeff> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(v));
}

FqPoly PolyRing::sub(const FqPoly& a, const FqPoly& b) const {
  const auto& F = *field_;
  std::vector<Coeff> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(v));
}

FqPoly PolyRing::neg(const FqPoly& a) const { return sub(zero(), a); }

FqPoly PolyRing::scale(Coeff c, const FqPoly& a) const {
  std::vector<Coeff> v(a.coeffs());
  for (auto& x : v) x = field_->mul(c, x);
  return FqPoly(std::move(v));
}

FqPoly PolyRing::mul(const FqPoly& a, const FqPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& F = *field_;
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Coeff> v(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(ac[i], bc[j]));
  }
  return FqPoly(std::move(v));
}

std::pair<FqPoly, FqPoly> PolyRing::divrem(const FqPoly& a, const FqPoly& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {FqPoly{}, a};
  const auto& F = *field_;
  std::vector<Coeff> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Coeff lead_inv = F.inv(bc.back());
  std::vector<Coeff> quot(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    Coeff c = r[k];
    if (c == 0) continue;
    c = F.mul(c, lead_inv);
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
  }
  r.resize(db);
  return {FqPoly(std::move(quot)), FqPoly(std::move(r))};
}

FqPoly PolyRing::make_monic(const FqPoly& a) const {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(field_->inv(a.leading()), a);
}

FqPoly PolyRing::gcd(const FqPoly& a, const FqPoly& b) const {
  FqPoly x = a;
  FqPoly y = b;
  while (!y.is_zero()) {
    FqPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

FqPoly PolyRing::pow(const FqPoly& a, std::uint64_t e) const {
  FqPoly result = one();
  FqPoly base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FqPoly PolyRing::pow_mod(const FqPoly& a, std::uint64_t e, const FqPoly& m) const {
  FqPoly result = mod(one(), m);
  FqPoly base = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base), m);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base), m);
  }
  return result;
}

Coeff PolyRing::eval(const FqPoly& a, Coeff x) const {
  Coeff acc = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c[i]);
  return acc;
}

FqPoly PolyRing::monic_reciprocal(const FqPoly& f) const {
  if (f.is_zero() || f.constant_term() == 0) {
    throw Error(ErrorKind::ZeroConstantTerm, "reciprocal needs f(0) != 0, got " + to_pretty(f));
  }
  std::vector<Coeff> rev(f.coeffs().rbegin(), f.coeffs().rend());
  return scale(field_->inv(f.constant_term()), FqPoly(std::move(rev)));
}

bool PolyRing::is_self_reciprocal(const FqPoly& f) const {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, to_pretty(f) + " is not monic");
  return monic_reciprocal(f) == f;
}

bool PolyRing::is_irreducible(const FqPoly& f) const {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "irreducibility needs deg f >= 1");
  const FqPoly g = make_monic(f);
  const auto d = static_cast<std::size_t>(g.degree());
  if (d == 1) return true;
  if (g.constant_term() == 0) return false;
  const std::uint64_t q = field_->order();
  const FqPoly xm = x();
  // frob[k] = x^(q^k) mod g
  std::vector<FqPoly> frob(d + 1);
  frob[0] = xm;
  for (std::size_t k = 1; k <= d; ++k) frob[k] = pow_mod(frob[k - 1], q, g);
  if (frob[d] != xm) return false;
  for (auto [r, e] : factor_integer(d)) {
    (void)e;
    if (gcd(sub(frob[d / r], xm), g) != one()) return false;
  }
  return true;
}

void PolyRing::equal_degree_split(const FqPoly& f, std::size_t d, std::mt19937_64& rng,
                                  std::vector<FqPoly>& out) const {
  const auto n = static_cast<std::size_t>(f.degree());
  if (n == d) {
    out.push_back(f);
    return;
  }
  const auto& F = *field_;
  const std::uint64_t q = F.order();
  const std::uint32_t p = F.characteristic();
  for (;;) {
    std::vector<Coeff> rc(n);
    for (auto& c : rc) c = static_cast<Coeff>(rng() % q);
    FqPoly a(std::move(rc));
    if (a.degree() < 1) continue;

    FqPoly b;
    if (p == 2) {
      // Absolute trace to F_2: a + a^2 + ... + a^(2^(sd - 1)) mod f.
      const std::size_t sd = F.degree() * d;
      FqPoly t = mod(a, f);
      FqPoly acc = t;
      for (std::size_t i = 1; i < sd; ++i) {
        t = mod(mul(t, t), f);
        acc = add(acc, t);
      }
      b = acc;
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q - 1)/2)
      FqPoly t = mod(a, f);
      FqPoly acc = t;
      for (std::size_t i = 1; i < d; ++i) {
        t = pow_mod(t, q, f);
        acc = mod(mul(acc, t), f);
      }
      b = sub(pow_mod(acc, (q - 1) / 2, f), one());
    }
    FqPoly c = gcd(b, f);
    if (c.degree() > 0 && c.degree() < f.degree()) {
      equal_degree_split(c, d, rng, out);
      equal_degree_split(div(f, c), d, rng, out);
      return;
    }
  }
}

std::vector<FqPoly> PolyRing::factor_squarefree(const FqPoly& f, std::uint64_t seed) const {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, to_pretty(f) + " is not monic");
  std::mt19937_64 rng(seed);
  std::vector<FqPoly> out;
  const std::uint64_t q = field_->order();
  const FqPoly xm = x();
  FqPoly remaining = f;
  FqPoly h = mod(xm, remaining);
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(std::max(remaining.degree(), 0)); ++d) {
    h = pow_mod(h, q, remaining);
    FqPoly g = gcd(sub(h, xm), remaining);
    if (g.degree() >= 1) {
      equal_degree_split(g, d, rng, out);
      remaining = div(remaining, g);
      h = mod(h, remaining);
    }
  }
  if (remaining.degree() >= 1) out.push_back(remaining);
  std::sort(out.begin(), out.end());
  return out;
}

FactoredPoly PolyRing::factor_xn_minus_1(std::uint64_t n, std::uint64_t seed) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "x^n - 1 needs n >= 1");
  const auto [u, v] = split_prime_power(n, field_->characteristic());
  const std::uint64_t mult = pow_or_throw(field_->characteristic(), u);
  FactoredPoly fp;
  for (auto& P : factor_squarefree(xn_minus_one(v), seed)) {
    fp.factors.emplace_back(std::move(P), static_cast<unsigned>(mult));
  }
  return fp;
}

FqPoly PolyRing::expand(const FactoredPoly& fp) const {
  FqPoly acc = one();
  for (const auto& [P, e] : fp.factors) acc = mul(acc, pow(P, e));
  return acc;
}

std::uint64_t PolyRing::divisor_count(const FactoredPoly& fp) noexcept {
  std::uint64_t count = 1;
  for (const auto& f : fp.factors) {
    if (count > UINT64_MAX / (f.second + 1)) return UINT64_MAX;
    count *= f.second + 1;
  }
  return count;
}

std::vector<FactoredPoly> PolyRing::divisor_factorizations(const FactoredPoly& fp,
                                                           const Limits& limits) const {
  const std::uint64_t count = divisor_count(fp);
  if (count > limits.divisor_bound) {
    throw Error(ErrorKind::SizeExceeded, std::to_string(count) + " divisors exceed the bound of " +
                                             std::to_string(limits.divisor_bound));
  }
  std::vector<std::pair<FqPoly, FactoredPoly>> all;
  all.reserve(count);
  std::vector<unsigned> exps(fp.factors.size(), 0);
  for (;;) {
    FactoredPoly d;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) d.factors.emplace_back(fp.factors[i].first, exps[i]);
    }
    FqPoly poly = expand(d);
    all.emplace_back(std::move(poly), std::move(d));

    std::size_t i = 0;
    while (i < exps.size() && exps[i] == fp.factors[i].second) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FactoredPoly> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.second));
  return out;
}

std::vector<FqPoly> PolyRing::divisors(const FactoredPoly& fp, const Limits& limits) const {
  std::vector<FqPoly> out;
  for (const auto& d : divisor_factorizations(fp, limits)) out.push_back(expand(d));
  return out;
}

std::uint64_t PolyRing::phi_q(const FactoredPoly& f) const {
  const std::uint64_t q = field_->order();
  std::uint64_t result = 1;
  for (const auto& [P, e] : f.factors) {
    const auto d = static_cast<std::uint64_t>(P.degree());
    const std::uint64_t qd = pow_or_throw(q, d);
    const std::uint64_t head = pow_or_throw(q, (e - 1) * d);
    if (head > UINT64_MAX / (qd - 1)) throw Error(ErrorKind::SizeExceeded, "Phi_q overflows 64 bits");
    const std::uint64_t term = head * (qd - 1);
    if (result > UINT64_MAX / term) throw Error(ErrorKind::SizeExceeded, "Phi_q overflows 64 bits");
    result *= term;
  }
  return result;
}

FactoredPoly PolyRing::factor_divisor(const FqPoly& f, const FactoredPoly& whole) const {
  if (!f.is_monic()) throw Error(ErrorKind::InvalidArgument, to_pretty(f) + " is not monic");
  FqPoly rest = f;
  FactoredPoly out;
  for (const auto& [P, e] : whole.factors) {
    unsigned k = 0;
    while (k < e) {
      auto [quot, rem] = divrem(rest, P);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++k;
    }
    if (k > 0) out.factors.emplace_back(P, k);
  }
  if (rest != one()) {
    throw Error(ErrorKind::InvalidArgument, to_pretty(f) + " is not a divisor of " + to_pretty(whole));
  }
  return out;
}

std::uint64_t PolyRing::phi_q(const FqPoly& f, const FactoredPoly& whole) const {
  return phi_q(factor_divisor(f, whole));
}

std::vector<Coeff> parse_coeff_list(std::string_view text, const BaseField& field) {
  std::vector<Coeff> out;
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty coefficient list");
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
      throw Error(ErrorKind::ParseError, "bad coefficient token '" + std::string(tok) + "'");
    }
    if (value >= field.order()) {
      throw Error(ErrorKind::ParseError, "coefficient " + std::to_string(value) +
                                             " out of range [0, " + std::to_string(field.order()) + ")");
    }
    out.push_back(static_cast<Coeff>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

FqPoly parse_poly(std::string_view text, const BaseField& field) {
  return FqPoly(parse_coeff_list(text, field));
}

std::string to_coeff_list(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.coeffs()[i]);
  }
  return out;
}

std::string to_pretty(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[k] != 1 || k == 0) out += std::to_string(c[k]);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::string to_pretty(const FactoredPoly& fp) {
  if (fp.factors.empty()) return "1";
  std::string out;
  for (const auto& [P, e] : fp.factors) {
    if (!out.empty()) out += ' ';
    out += '(' + to_pretty(P) + ')';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace qorder
