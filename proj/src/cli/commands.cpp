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

#include <string>

#include "qorder/classify.hpp"
#include "qorder/errors.hpp"
#include "qorder/module_action.hpp"
#include "qorder/report.hpp"

namespace qorder::cli {

using nlohmann::ordered_json;

const std::vector<TowerParams>& acceptance_grid() {
  static const std::vector<TowerParams> grid = [] {
    std::vector<TowerParams> g;
    auto family = [&g](std::uint32_t p, unsigned s, unsigned n_max) {
      for (unsigned n = 1; n <= n_max; ++n) g.push_back({p, s, n});
    };
    family(2, 1, 10);
    family(3, 1, 6);
    family(2, 2, 5);
    family(5, 1, 4);
    family(7, 1, 3);
    family(2, 3, 3);
    family(3, 2, 3);
    return g;
  }();
  return grid;
}

const std::vector<std::uint64_t>& corollary2_grid_q() {
  static const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9};
  return qs;
}

namespace {

std::vector<TowerParams> targets(const CommandConfig& config) {
  if (config.grid) return acceptance_grid();
  if (config.p == 0 || config.n == 0) {
    throw Error(ErrorKind::InvalidArgument, "--p and --n are required unless --grid is given");
  }
  return {{config.p, config.s, config.n}};
}

ReportDocument make_document(const CommandConfig& config) {
  ReportDocument doc;
  doc.meta["tool"] = kToolName;
  doc.meta["version"] = kToolVersion;
  doc.meta["command"] = config.command;
  ordered_json cfg;
  cfg["p"] = config.p;
  cfg["s"] = config.s;
  cfg["n"] = config.n;
  cfg["seed"] = config.seed;
  cfg["size_bound"] = config.size_bound;
  cfg["format"] = to_string(config.format);
  cfg["mode"] = to_string(config.mode);
  cfg["check"] = to_string(config.check);
  cfg["grid"] = config.grid;
  if (config.n_max) cfg["n_max"] = *config.n_max;
  if (!config.label.empty()) cfg["label"] = config.label;
  doc.meta["config"] = std::move(cfg);
  return doc;
}

ordered_json field_key(const FieldTower& t) {
  ordered_json j;
  j["p"] = t.p();
  j["s"] = t.s();
  j["n"] = t.n();
  j["q"] = t.q();
  return j;
}

std::string field_name(const FieldTower& t) {
  return "F_" + std::to_string(t.q()) + "^" + std::to_string(t.n()) + " / F_" +
         std::to_string(t.q());
}

FieldSetup setup_for(const TowerParams& tp, const CommandConfig& config) {
  return prepare_field(tp.p, tp.s, tp.n, config.limits(), config.seed);
}

}  // namespace

ReportDocument cmd_factor(const CommandConfig& config) {
  ReportDocument doc = make_document(config);
  for (const auto& tp : targets(config)) {
    const PolyRing ring(build_base_field(tp.p, tp.s));
    const FactoredPoly fp = ring.factor_xn_minus_1(tp.n, config.seed);
    const std::uint64_t count = PolyRing::divisor_count(fp);
    const FqPoly whole = ring.xn_minus_one(tp.n);
    doc.notes.push_back("q=" + std::to_string(ring.field().order()) + " n=" + std::to_string(tp.n) +
                        ": " + to_pretty(whole) + " = " + to_pretty(fp) + "; " +
                        std::to_string(count) + " divisors");
    for (const auto& [P, e] : fp.factors) {
      ordered_json row;
      row["p"] = tp.p;
      row["s"] = tp.s;
      row["n"] = tp.n;
      row["q"] = ring.field().order();
      row["factor"] = to_pretty(P);
      row["coeffs"] = to_coeff_list(P);
      row["degree"] = P.degree();
      row["multiplicity"] = e;
      row["divisor_count"] = count;
      doc.rows.push_back(std::move(row));
    }
    if (ring.expand(fp) != whole) {
      ordered_json ce;
      ce["p"] = tp.p;
      ce["s"] = tp.s;
      ce["n"] = tp.n;
      ce["reason"] = "product of factors differs from x^n - 1";
      doc.counterexamples.push_back(std::move(ce));
    }
  }
  return doc;
}

ReportDocument cmd_orders(const CommandConfig& config) {
  ReportDocument doc = make_document(config);
  for (const auto& tp : targets(config)) {
    const FieldSetup setup = setup_for(tp, config);
    const FieldTower& tower = *setup.tower;
    const PolyRing& ring = tower.base_ring();
    const auto partition = elements_by_order(setup);
    std::uint64_t total = 0;
    std::uint64_t phi_total = 0;
    for (const auto& f : setup.divisors) {
      const std::uint64_t count = partition.at(f).size();
      const std::uint64_t phi = ring.phi_q(f, setup.xn_factors);
      total += count;
      phi_total += phi;
      ordered_json row = field_key(tower);
      row["f"] = to_pretty(f);
      row["coeffs"] = to_coeff_list(f);
      row["degree"] = f.degree();
      row["count"] = count;
      row["phi_q"] = phi;
      row["match"] = count == phi;
      if (count != phi) {
        ordered_json ce = field_key(tower);
        ce["f"] = to_pretty(f);
        ce["count"] = count;
        ce["phi_q"] = phi;
        doc.counterexamples.push_back(std::move(ce));
      }
      doc.rows.push_back(std::move(row));
    }
    doc.notes.push_back(field_name(tower) + ": " + std::to_string(setup.divisors.size()) +
                        " divisors, " + std::to_string(total) + " elements, sum of Phi_q = " +
                        std::to_string(phi_total));
    if (total != tower.size() || phi_total != tower.size()) {
      ordered_json ce = field_key(tower);
      ce["reason"] = "partition sizes do not sum to q^n";
      ce["elements"] = total;
      ce["phi_sum"] = phi_total;
      doc.counterexamples.push_back(std::move(ce));
    }
  }
  return doc;
}

ReportDocument cmd_verify_theorem(const CommandConfig& config) {
  ReportDocument doc = make_document(config);
  for (const auto& tp : targets(config)) {
    const FieldSetup setup = setup_for(tp, config);
    const FieldTower& tower = *setup.tower;
    const PolyRing& ring = tower.base_ring();
    std::uint64_t checked = 0;
    std::uint64_t agree = 0;
    std::uint64_t non_self_reciprocal = 0;
    for (const FFElement& a : tower.elements()) {
      const AdditiveCharacter chi(setup.tower, a);
      const FqPoly m = fq_order(a, tower, setup.xn_factors);
      const FqPoly oracle = char_order_bruteforce(chi, setup.divisors, config.check);
      const FqPoly fast = ring.monic_reciprocal(m);
      ++checked;
      non_self_reciprocal += fast != m;
      if (oracle == fast) {
        ++agree;
        continue;
      }
      ordered_json ce = field_key(tower);
      ce["label"] = to_coeff_list(a);
      ce["element_order"] = to_pretty(m);
      ce["order_bruteforce"] = to_pretty(oracle);
      ce["order_fast"] = to_pretty(fast);
      doc.counterexamples.push_back(std::move(ce));
    }
    ordered_json row = field_key(tower);
    row["characters"] = checked;
    row["agree"] = agree;
    row["disagree"] = checked - agree;
    row["non_self_reciprocal"] = non_self_reciprocal;
    doc.rows.push_back(std::move(row));
    doc.notes.push_back(field_name(tower) + ": " + std::to_string(agree) + "/" +
                        std::to_string(checked) + " agree");
  }
  return doc;
}

ReportDocument cmd_corollary1(const CommandConfig& config) {
  ReportDocument doc = make_document(config);
  std::vector<OrderRoute> routes;
  if (config.mode != OrderMode::Fast) routes.push_back(OrderRoute::Oracle);
  if (config.mode != OrderMode::Oracle) routes.push_back(OrderRoute::Fast);
  for (const auto& tp : targets(config)) {
    const FieldSetup setup = setup_for(tp, config);
    const FieldTower& tower = *setup.tower;
    for (OrderRoute route : routes) {
      const auto res = orders_coincide_iff_self_reciprocal(setup, route, config.check);
      const char* route_name = route == OrderRoute::Oracle ? "oracle" : "fast";
      ordered_json row = field_key(tower);
      row["route"] = route_name;
      row["elements"] = res.checked;
      row["coinciding"] = res.coinciding;
      row["self_reciprocal_orders"] = res.self_reciprocal;
      row["holds"] = res.holds;
      doc.rows.push_back(std::move(row));
      doc.notes.push_back(field_name(tower) + " [" + route_name + "]: " +
                          std::to_string(res.coinciding) + " of " + std::to_string(res.checked) +
                          " orders coincide, " + (res.holds ? "biconditional holds" : "FAILS"));
      if (res.first_counterexample) {
        const auto& cx = *res.first_counterexample;
        ordered_json ce = field_key(tower);
        ce["route"] = route_name;
        ce["alpha"] = to_coeff_list(cx.alpha);
        ce["element_order"] = to_pretty(cx.element_order);
        ce["character_order"] = to_pretty(cx.character_order);
        doc.counterexamples.push_back(std::move(ce));
      }
    }
  }
  return doc;
}

ReportDocument cmd_corollary2(const CommandConfig& config) {
  ReportDocument doc = make_document(config);
  std::vector<std::uint64_t> qs;
  if (config.grid) {
    qs = corollary2_grid_q();
  } else {
    if (config.p == 0) throw Error(ErrorKind::InvalidArgument, "--p is required unless --grid");
    qs.push_back(pow_or_throw(config.p, config.s));
  }
  const std::uint64_t n_max = config.n_max ? *config.n_max : (config.n != 0 ? config.n : 20);
  for (std::uint64_t q : qs) {
    auto pp = as_prime_power(q);
    if (!pp) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
    if (!is_prime(pp->first)) throw Error(ErrorKind::NonPrime, std::to_string(pp->first));
    const PolyRing ring(build_base_field(static_cast<std::uint32_t>(pp->first), pp->second));
    std::string holds;
    std::string fails;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const MeynVerdict v = meyn_criterion(ring, n, config.limits(), config.seed);
      ordered_json row;
      row["q"] = q;
      row["n"] = n;
      row["u"] = v.u;
      row["v"] = v.v;
      row["criterion_holds"] = v.criterion_holds;
      row["witness_j"] = v.witness_j ? ordered_json(*v.witness_j) : ordered_json(nullptr);
      row["all_divisors_self_reciprocal"] = v.all_divisors_self_reciprocal;
      row["divisor_count"] = v.divisor_count;
      row["agree"] = v.consistent();
      if (!v.consistent()) doc.counterexamples.push_back(row);
      doc.rows.push_back(std::move(row));
      std::string& list = v.criterion_holds ? holds : fails;
      if (!list.empty()) list += ',';
      list += std::to_string(n);
    }
    doc.notes.push_back("q=" + std::to_string(q) + ": holds for n in {" + holds +
                        "}, fails for n in {" + fails + "}");
  }
  return doc;
}

ReportDocument cmd_char_order(const CommandConfig& config) {
  if (config.grid) throw Error(ErrorKind::InvalidArgument, "char-order does not take --grid");
  ReportDocument doc = make_document(config);
  const auto tp = targets(config).front();
  const FieldSetup setup = setup_for(tp, config);
  const FieldTower& tower = *setup.tower;
  const PolyRing& ring = tower.base_ring();
  const FFElement a = parse_element(config.label, tower);
  const AdditiveCharacter chi(setup.tower, a);
  const FqPoly m = fq_order(a, tower, setup.xn_factors);

  ordered_json row = field_key(tower);
  row["label"] = to_coeff_list(a);
  row["element_order"] = to_pretty(m);
  row["reciprocal"] = to_pretty(ring.monic_reciprocal(m));
  std::optional<FqPoly> oracle;
  std::optional<FqPoly> fast;
  if (config.mode != OrderMode::Fast) {
    oracle = char_order_bruteforce(chi, setup.divisors, config.check);
    row["order_bruteforce"] = to_pretty(*oracle);
  }
  if (config.mode != OrderMode::Oracle) {
    fast = char_order_fast(chi, setup.xn_factors);
    row["order_fast"] = to_pretty(*fast);
  }
  if (oracle && fast) {
    row["agree"] = *oracle == *fast;
  } else {
    row["agree"] = nullptr;
  }
  row["self_reciprocal"] = ring.is_self_reciprocal(m);
  doc.notes.push_back(field_name(tower) + ": m_(a,q) = " + to_pretty(m) + ", Ord(chi_a) = " +
                      to_pretty(oracle ? *oracle : *fast));
  if (oracle && fast && *oracle != *fast) doc.counterexamples.push_back(row);
  doc.rows.push_back(std::move(row));
  return doc;
}

ReportDocument cmd_pnbt(const CommandConfig& config) {
  ReportDocument doc = make_document(config);
  for (const auto& tp : targets(config)) {
    const FieldSetup setup = setup_for(tp, config);
    const FieldTower& tower = *setup.tower;
    const PolyRing& ring = tower.base_ring();
    std::uint64_t normal_count = 0;
    for (const FFElement& a : tower.elements()) normal_count += is_normal(a, tower, setup.xn_factors);
    const std::uint64_t phi = ring.phi_q(setup.xn_factors);

    ordered_json row = field_key(tower);
    row["normal_count"] = normal_count;
    row["phi_q_xn_minus_1"] = phi;
    try {
      const FFElement beta = find_primitive_normal(tower, setup.xn_factors);
      row["primitive_normal"] = to_coeff_list(beta);
      row["multiplicative_order"] = multiplicative_order(beta, tower);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      row["primitive_normal"] = nullptr;
      row["multiplicative_order"] = nullptr;
      ordered_json ce = field_key(tower);
      ce["reason"] = "no primitive normal element found";
      doc.counterexamples.push_back(std::move(ce));
    }
    if (normal_count != phi || normal_count == 0) {
      ordered_json ce = field_key(tower);
      ce["reason"] = "normal element count differs from Phi_q(x^n - 1)";
      ce["normal_count"] = normal_count;
      ce["phi_q"] = phi;
      doc.counterexamples.push_back(std::move(ce));
    }
    doc.notes.push_back(field_name(tower) + ": " + std::to_string(normal_count) +
                        " normal elements, first primitive normal " +
                        (row["primitive_normal"].is_null()
                             ? std::string("none")
                             : row["primitive_normal"].get<std::string>()));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

ReportDocument run_command(const CommandConfig& config) {
  const std::string& c = config.command;
  if (c == "factor") return cmd_factor(config);
  if (c == "orders") return cmd_orders(config);
  if (c == "verify-theorem") return cmd_verify_theorem(config);
  if (c == "corollary1") return cmd_corollary1(config);
  if (c == "corollary2") return cmd_corollary2(config);
  if (c == "char-order") return cmd_char_order(config);
  if (c == "pnbt") return cmd_pnbt(config);
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + c + "'");
}

}  // namespace qorder::cli
