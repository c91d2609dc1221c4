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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: acceptance <path-to-qorder-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qorder/classify.hpp"
#include "qorder/module_action.hpp"
#include "qorder/report.hpp"

namespace {

using namespace qorder;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string field_name(const cli::TowerParams& f) {
  std::ostringstream os;
  os << "(p=" << f.p << ",s=" << f.s << ",n=" << f.n << ")";
  return os.str();
}

std::vector<FieldSetup> prepare_grid() {
  std::vector<FieldSetup> out;
  for (const auto& f : cli::acceptance_grid()) out.push_back(prepare_field(f.p, f.s, f.n));
  return out;
}

std::string fail_at(const FieldSetup& s, const std::string& what) {
  return field_name({s.tower->p(), s.tower->s(), s.tower->n()}) + ": " + what;
}

Outcome orders_match(const std::vector<FieldSetup>& grid, CheckMode mode, double limit_s) {
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  for (const auto& s : grid) {
    const auto& t = *s.tower;
    if (mode == CheckMode::Exhaustive && t.size() > 1024) continue;
    const PolyRing& R = t.base_ring();
    for (const auto& a : t.elements()) {
      const AdditiveCharacter chi(s.tower, a);
      const FqPoly brute = char_order_bruteforce(chi, s.divisors, mode);
      if (brute != R.monic_reciprocal(fq_order(a, t, s.xn_factors))) {
        return {false, fail_at(s, "alpha=" + to_coeff_list(a) + " Ord(chi)=" + to_pretty(brute))};
      }
      ++checked;
    }
  }
  const double took = seconds_since(start);
  std::ostringstream os;
  os << checked << " characters, " << cli::to_string(mode) << " check, " << took << " s (limit " << limit_s << " s)";
  return {took < limit_s, os.str()};
}

Outcome criterion1(const std::vector<FieldSetup>& grid) {
  const auto basis = orders_match(grid, CheckMode::Basis, 60.0);
  if (!basis.pass) return basis;
  const auto exhaustive = orders_match(grid, CheckMode::Exhaustive, 600.0);
  return {exhaustive.pass, basis.detail + "; " + exhaustive.detail};
}

Outcome criterion2(const std::vector<FieldSetup>& grid) {
  std::uint64_t checked = 0;
  for (const auto& s : grid) {
    const auto& t = *s.tower;
    if (t.size() > 1024) continue;
    const PolyRing& R = t.base_ring();
    for (const auto& g : s.divisors) {
      const FqPoly gs = R.monic_reciprocal(g);
      for (const auto& a : t.elements()) {
        const AdditiveCharacter chi(s.tower, a);
        if (char_annihilated_by(g, chi) != apply_action(gs, a, t).is_zero()) {
          return {false, fail_at(s, "g=" + to_pretty(g) + " alpha=" + to_coeff_list(a))};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " (g, alpha) pairs"};
}

Outcome criterion3(const std::vector<FieldSetup>& grid) {
  std::mt19937_64 rng(20261015);
  std::uint64_t checked = 0;
  for (const auto& s : grid) {
    const auto& t = *s.tower;
    const auto& F = t.base_field();
    const PolyRing& R = t.base_ring();
    for (int trial = 0; trial < 1000; ++trial) {
      const unsigned d = static_cast<unsigned>(rng() % t.n());
      std::vector<Coeff> c(d + 1, 0);
      for (unsigned i = 0; i < d; ++i) c[i] = static_cast<Coeff>(rng() % F.order());
      c[d] = 1;
      if (d > 0) c[0] = static_cast<Coeff>(1 + rng() % (F.order() - 1));
      const FqPoly g(std::move(c));
      const FFElement a = t.element_at(rng() % t.size());
      const FFElement lhs = t.pow(c0_coefficient(g, a, t), pow_or_throw(t.q(), d));
      const FFElement rhs = t.scale(g.constant_term(), apply_action(R.monic_reciprocal(g), a, t));
      if (lhs != rhs) return {false, fail_at(s, "g=" + to_pretty(g) + " alpha=" + to_coeff_list(a))};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " random pairs"};
}

Outcome criterion4(const std::vector<FieldSetup>& grid) {
  for (const auto& s : grid) {
    const PolyRing& R = s.tower->base_ring();
    const auto parts = elements_by_order(s);
    std::uint64_t phi_total = 0;
    for (const auto& f : s.divisors) {
      const auto it = parts.find(f);
      const std::uint64_t count = it == parts.end() ? 0 : it->second.size();
      const std::uint64_t phi = R.phi_q(f, s.xn_factors);
      if (count != phi) return {false, fail_at(s, "f=" + to_pretty(f))};
      phi_total += phi;
    }
    if (phi_total != s.tower->size()) return {false, fail_at(s, "sum of Phi_q != q^n")};
  }
  return {true, std::to_string(grid.size()) + " fields"};
}

Outcome criterion5(const std::vector<FieldSetup>& grid) {
  for (const auto& s : grid) {
    const auto& t = *s.tower;
    const auto chars = characters_by_order(s, OrderRoute::Oracle);
    const auto one = chars.find(FqPoly{1});
    if (one == chars.end() || one->second.size() != 1 || !one->second.front().is_trivial()) {
      return {false, fail_at(s, "C_1 is not {chi_0}")};
    }
    const auto lin = chars.find(FqPoly{t.base_field().neg(1), 1});
    if (lin == chars.end() || lin->second.size() != t.q() - 1) {
      return {false, fail_at(s, "|C_{x-1}| != q-1")};
    }
    for (const auto& chi : lin->second) {
      if (chi.is_trivial() || !t.in_base(chi.label())) return {false, fail_at(s, "C_{x-1} label outside F_q^*")};
    }
  }
  return {true, std::to_string(grid.size()) + " fields"};
}

Outcome criterion6(const std::vector<FieldSetup>& grid) {
  std::uint64_t checked = 0;
  std::uint64_t coinciding = 0;
  for (const auto& s : grid) {
    const auto r = orders_coincide_iff_self_reciprocal(s, OrderRoute::Oracle);
    if (!r.holds) {
      const auto& ce = *r.first_counterexample;
      return {false, fail_at(s, "alpha=" + to_coeff_list(ce.alpha))};
    }
    checked += r.checked;
    coinciding += r.coinciding;
  }
  return {true, std::to_string(checked) + " elements, " + std::to_string(coinciding) + " with coinciding orders"};
}

Outcome criterion7() {
  const auto start = Clock::now();
  std::uint64_t rows = 0;
  for (std::uint64_t q : cli::corollary2_grid_q()) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const auto v = meyn_criterion(q, n);
      if (v.criterion_holds != v.all_divisors_self_reciprocal) {
        return {false, "q=" + std::to_string(q) + " n=" + std::to_string(n)};
      }
      ++rows;
    }
  }
  const auto a = meyn_criterion(2, 3);
  const auto b = meyn_criterion(2, 7);
  const auto c = meyn_criterion(3, 4);
  if (!a.criterion_holds || a.witness_j != std::optional<std::uint64_t>(1)) return {false, "(q=2,n=3) witness"};
  if (b.criterion_holds || b.all_divisors_self_reciprocal) return {false, "(q=2,n=7) should fail"};
  if (!c.criterion_holds || !c.all_divisors_self_reciprocal) return {false, "(q=3,n=4) should hold"};
  const double took = seconds_since(start);
  std::ostringstream os;
  os << rows << " (q, n) rows, " << took << " s (limit 30 s)";
  return {took < 30.0, os.str()};
}

Outcome criterion8() {
  std::uint64_t pairs = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const PolyRing R(BaseField::prime(p));
    std::vector<FqPoly> polys;
    for (unsigned d = 0; d <= 6; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p;
      for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<Coeff> c(d + 1, 1);
        std::uint64_t rest = k;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = static_cast<Coeff>(rest % p);
          rest /= p;
        }
        if (c[0] != 0) polys.emplace_back(std::move(c));
      }
    }
    std::vector<FqPoly> stars;
    for (const auto& f : polys) {
      stars.push_back(R.monic_reciprocal(f));
      if (R.monic_reciprocal(stars.back()) != f) return {false, "(f*)* != f for " + to_pretty(f)};
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (R.divides(polys[i], polys[j]) != R.divides(stars[i], stars[j])) {
          return {false, to_pretty(polys[i]) + " | " + to_pretty(polys[j])};
        }
        ++pairs;
      }
    }
  }
  return {true, std::to_string(pairs) + " divisibility pairs over F_2 and F_3"};
}

Outcome criterion9(const std::vector<FieldSetup>& grid) {
  for (const auto& s : grid) {
    const auto& t = *s.tower;
    std::uint64_t normal = 0;
    for (const auto& a : t.elements()) normal += is_normal(a, t, s.xn_factors);
    const std::uint64_t phi = t.base_ring().phi_q(s.xn_factors);
    if (normal != phi || phi == 0) return {false, fail_at(s, "normal count != Phi_q(x^n - 1)")};
    const FFElement alpha = find_primitive_normal(t, s.xn_factors);
    if (multiplicative_order(alpha, t) != t.size() - 1 || !is_normal(alpha, t, s.xn_factors)) {
      return {false, fail_at(s, "returned element is not primitive normal")};
    }
  }
  return {true, std::to_string(grid.size()) + " fields"};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

Outcome criterion10(const std::string& binary) {
  if (binary.empty()) return {false, "no qorder binary given"};
  const std::string cmd = "'" + binary + "' verify-theorem --grid --format json --seed 7";
  int s1 = 0;
  int s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  if (s1 != 0 || s2 != 0) return {false, "verify-theorem exited with nonzero status"};
  if (a.empty() || a != b) return {false, "outputs differ"};
  return {true, std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  std::vector<FieldSetup> grid;
  try {
    grid = prepare_grid();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] grid setup: " << e.what() << '\n';
    return 1;
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 character order = reciprocal of element order", [&] { return criterion1(grid); }},
      {"2 annihilation reduces to reciprocal action", [&] { return criterion2(grid); }},
      {"3 c0 identity", [&] { return criterion3(grid); }},
      {"4 order counts equal Phi_q", [&] { return criterion4(grid); }},
      {"5 special character sets", [&] { return criterion5(grid); }},
      {"6 coincidence iff self-reciprocal", [&] { return criterion6(grid); }},
      {"7 modular criterion vs factorization", [] { return criterion7(); }},
      {"8 reciprocal algebra", [] { return criterion8(); }},
      {"9 primitive normal elements", [&] { return criterion9(grid); }},
      {"10 deterministic JSON output", [&] { return criterion10(binary); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
