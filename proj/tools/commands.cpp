#include "commands.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "scg/agreement.hpp"
#include "scg/belief.hpp"
#include "scg/errors.hpp"
#include "scg/kernels.hpp"

namespace scg::cli {

namespace {

constexpr std::uint64_t kDefaultCap = 1u << 20;

std::uint64_t cap_of(const Json& input) {
  return input.contains("cap") ? input["cap"].get<std::uint64_t>() : kDefaultCap;
}

// The brute-force profile oracle is much costlier per outcome than the scans.
std::uint64_t oracle_cap_of(const Json& input) {
  return input.contains("cap") ? input["cap"].get<std::uint64_t>() : 6561;
}

int get_int(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw ValidationError(std::string("input needs integer '") + name + "'");
  return j[name].get<int>();
}

Game game_of(const Json& g) {
  const int n = get_int(g, "n");
  const int m = get_int(g, "m");
  if (n < 1 || m < 1) throw ValidationError("need n >= 1 and m >= 1");
  if (!g.contains("cost")) throw ValidationError("game needs a cost function");
  return Game(n, m, cost_from_json(g["cost"], n));
}

std::vector<int> weights_of(const Json& j) {
  if (!j.contains("weights") || !j["weights"].is_array()) throw ValidationError("input needs a 'weights' array");
  std::vector<int> w;
  for (const auto& x : j["weights"]) {
    if (!x.is_number_integer() || x.get<int>() < 1) throw ValidationError("weights must be positive integers");
    w.push_back(x.get<int>());
  }
  if (w.empty()) throw ValidationError("weights must be non-empty");
  return w;
}

Json support_to_json(const std::vector<SupportPoint>& support, const Game& g) {
  Json out = Json::array();
  for (const auto& sp : support)
    out.push_back(Json{{"loads", loads_to_json(sp.loads)},
                       {"probability", to_string(sp.probability)},
                       {"total_cost", to_string(total_cost(g.cost(), sp.loads))},
                       {"max_cost", to_string(max_cost(g.cost(), sp.loads))},
                       {"even", is_evenly_distributed(sp.loads)}});
  return out;
}

Json no_equilibrium_to_json(const NoEquilibrium& ne) {
  return Json{{"coalition", ne.coalition_index}, {"players", ne.players}, {"message", ne.describe()}};
}

// ---------------------------------------------------------------- analyze

CommandResult analyze(const Json& input) {
  const Game g = game_of(input.at("game"));
  const Partition p = partition_from_json(input.at("partition"), g.players());
  const bool oracle = input.value("oracle", false);
  const int m = g.resources();

  Json r;
  r["partition"] = p.to_string();
  r["sizes"] = p.size_multiset();
  r["balanced"] = is_balanced(p, m);
  const auto best = optimal_costs(g);
  r["optimal_costs"] = Json{{"total", to_string(best.total)}, {"max", to_string(best.max)}};

  const bool all_feasible = std::all_of(p.coalitions().begin(), p.coalitions().end(), [&](const Coalition& c) {
    return classify(static_cast<int>(c.size()), m) != CoalitionClass::infeasible;
  });
  Json coalitions = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int size = static_cast<int>(p[i].size());
    Json c{{"players", p[i]}, {"size", size}, {"class", to_string(classify(size, m))}};
    if (all_feasible) {
      const Subgame sub = subgame(g, p, i);
      c["outsider_pmf"] = rationals_to_json(outside_count_pmf(p, i, g).probabilities());
      c["effective_cost"] = rationals_to_json(sub.g.values());
      const auto q = qualified_canonical_loads(size, m);
      c["qualified_loads"] = q ? loads_to_json(*q) : Json();
    }
    coalitions.push_back(std::move(c));
  }
  r["coalitions"] = std::move(coalitions);

  const InduceResult result = oracle ? brute_force_profile_oracle(g, p, oracle_cap_of(input)) : induce(g, p);
  r["path"] = oracle ? "oracle" : "direct";
  if (const auto* ne = std::get_if<NoEquilibrium>(&result)) {
    r["equilibrium"] = false;
    r["no_equilibrium"] = no_equilibrium_to_json(*ne);
    return {r, kNoEquilibrium};
  }
  const auto& profile = std::get<InducedProfile>(result);
  r["equilibrium"] = true;
  r["bar_c_optimal"] = is_profile_bar_c_optimal(profile, g);
  r["hat_c_optimal"] = is_profile_hat_c_optimal(profile, g);
  r["support"] = support_to_json(profile.support, g);
  return {r, kOk};
}

// ------------------------------------------------------------- agreements

constexpr std::array<const char*, 8> kRegionNames{
    "not covering, not envy-free, not credible", "not covering, not envy-free, credible",
    "not covering, envy-free, not credible",     "not covering, envy-free, credible",
    "covering, not envy-free, not credible",     "covering, not envy-free, credible",
    "covering, envy-free, not credible",         "covering, envy-free, credible"};

// Regions ruled out by credible => covering and covering & envy-free => credible.
bool region_forbidden(std::size_t r) {
  const bool cov = r & 4, ef = r & 2, cr = r & 1;
  return (cr && !cov) || (cov && ef && !cr);
}

Json agreement_json(const Agreement& a, const EffectiveCost& g, bool pareto) {
  return Json{{"actions", a.actions},     {"loads", loads_to_json(a.loads())},
              {"covering", is_covering(a)}, {"envy_free", is_envy_free(a, g)},
              {"credible", is_credible(a, g)}, {"pareto_optimal", pareto}};
}

CommandResult agreements(const Json& input) {
  const std::uint64_t cap = cap_of(input);
  int size = 0, m = 0;
  std::optional<EffectiveCost> g;
  if (input.contains("game")) {
    const Game game = game_of(input["game"]);
    const Partition p = partition_from_json(input.at("partition"), game.players());
    const int idx = get_int(input, "coalition");
    if (idx < 0 || idx >= static_cast<int>(p.size())) throw ValidationError("coalition index out of range");
    Subgame sub = subgame(game, p, static_cast<std::size_t>(idx));
    size = sub.size;
    m = sub.m;
    g = std::move(sub.g);
  } else {
    size = get_int(input, "size");
    m = get_int(input, "m");
    if (size < 1 || m < 1) throw ValidationError("need size >= 1 and m >= 1");
    g = EffectiveCost(cost_from_json(input.at("cost"), size));
  }

  const auto sweep = kernels::sweep_agreements_parallel(size, m, *g, cap);
  Json r{{"size", size}, {"m", m}, {"effective_cost", rationals_to_json(g->values())}};
  Json list = Json::array();
  std::set<LoadVector> qualified;
  for (std::uint64_t idx = 0; idx < sweep.agreements; ++idx) {
    const Agreement a = Agreement::from_index(idx, size, m);
    const bool pareto = is_pareto_optimal(a, *g, ParetoMode::oracle, cap);
    Json row = agreement_json(a, *g, pareto);
    if (row["envy_free"] && row["credible"] && pareto) qualified.insert(a.loads().canonical());
    list.push_back(std::move(row));
  }
  Json q = Json::array();
  for (const auto& lv : qualified) q.push_back(loads_to_json(lv));
  r["qualified_loads"] = std::move(q);
  Json regions = Json::array();
  for (std::size_t k = 0; k < 8; ++k)
    regions.push_back(Json{{"region", kRegionNames[k]}, {"count", sweep.region_counts[k]}});
  r["regions"] = std::move(regions);
  r["covering_pareto_mismatches"] = sweep.covering_pareto_mismatch;
  r["agreements"] = std::move(list);
  return {r, kOk};
}

// ----------------------------------------------------------------- verify

CommandResult verify_prop2(const Json& input) {
  const int max_size = get_int(input, "size");
  const int m = get_int(input, "m");
  if (max_size < 1 || m < 1) throw ValidationError("need size >= 1 and m >= 1");
  const std::uint64_t cap = cap_of(input);

  std::array<std::uint64_t, 8> counts{};
  std::array<Json, 8> witness{};
  std::uint64_t mismatches = 0;
  Json mismatch_witness;
  for (int size = 1; size <= max_size; ++size) {
    const EffectiveCost g(cost_from_json(input.at("cost"), size));
    const auto s = kernels::sweep_agreements_parallel(size, m, g, cap);
    for (std::size_t k = 0; k < 8; ++k) {
      counts[k] += s.region_counts[k];
      if (witness[k].is_null() && s.region_witness[k]) {
        const Agreement a = Agreement::from_index(*s.region_witness[k], size, m);
        witness[k] = Json{{"size", size}, {"actions", a.actions}, {"loads", loads_to_json(a.loads())}};
      }
    }
    mismatches += s.covering_pareto_mismatch;
    if (mismatch_witness.is_null() && s.first_mismatch) {
      const Agreement a = Agreement::from_index(*s.first_mismatch, size, m);
      mismatch_witness = Json{{"size", size}, {"actions", a.actions}};
    }
  }

  bool passed = mismatches == 0;
  Json regions = Json::array();
  Json counterexamples = Json::array();
  for (std::size_t k = 0; k < 8; ++k) {
    const bool forbidden = region_forbidden(k);
    if (forbidden && counts[k] > 0) {
      passed = false;
      counterexamples.push_back(Json{{"region", kRegionNames[k]}, {"witness", witness[k]}});
    }
    regions.push_back(Json{{"region", kRegionNames[k]},
                           {"forbidden", forbidden},
                           {"count", counts[k]},
                           {"witness", witness[k]}});
  }
  if (mismatches > 0) counterexamples.push_back(Json{{"covering_differs_from_pareto", mismatch_witness}});
  Json r{{"passed", passed}, {"regions", regions}, {"covering_pareto_mismatches", mismatches},
         {"counterexamples", counterexamples}};
  return {r, passed ? kOk : kCheckFailed};
}

CommandResult verify_lemma1(const Json& input) {
  const Game g(get_int(input, "n"), get_int(input, "m"), cost_from_json(input.at("cost"), get_int(input, "n")));
  const auto s = kernels::scan_outcomes_parallel(g, cap_of(input));
  const auto best = optimal_costs(g);
  const bool passed = s.min_total == best.total && s.min_max == best.max && s.total_optimal_uneven == 0 &&
                      s.even_not_total_optimal == 0;
  Json r{{"passed", passed},
         {"outcomes", s.outcomes},
         {"optimal_total", to_string(best.total)},
         {"brute_force_min_total", to_string(s.min_total)},
         {"optimal_max", to_string(best.max)},
         {"brute_force_min_max", to_string(s.min_max)},
         {"total_optimal_outcomes", s.total_optimal},
         {"even_outcomes", s.even},
         {"total_optimal_but_uneven", s.total_optimal_uneven},
         {"even_but_not_total_optimal", s.even_not_total_optimal},
         {"max_optimal_outcomes", s.max_optimal},
         {"max_optimal_but_uneven", s.max_optimal_uneven}};
  if (s.max_optimal_uneven_witness) {
    const Outcome o = kernels::decode_outcome(*s.max_optimal_uneven_witness, g.players(), g.resources());
    r["uneven_max_optimal_witness"] = Json{{"actions", o.actions}, {"loads", loads_to_json(loads(o, g.resources()))}};
  }
  return {r, passed ? kOk : kCheckFailed};
}

PartitionScope scope_of(const Json& input) {
  const std::string s = input.value("partitions", std::string("by_sizes"));
  if (s == "by_sizes") return PartitionScope::by_sizes;
  if (s == "all") return PartitionScope::all;
  throw ValidationError("partitions must be 'by_sizes' or 'all'");
}

Json row_to_json(const PartitionRow& row) {
  Json j{{"partition", row.partition.to_string()},
         {"sizes", row.sizes},
         {"balanced", row.balanced},
         {"equilibrium", row.equilibrium_exists},
         {"bar_c_optimal", row.bar_c_optimal},
         {"hat_c_optimal", row.hat_c_optimal},
         {"support_size", row.support_size}};
  j["min_support_total"] = row.min_support_total ? Json(to_string(*row.min_support_total)) : Json();
  j["max_support_total"] = row.max_support_total ? Json(to_string(*row.max_support_total)) : Json();
  if (row.failure) j["no_equilibrium"] = no_equilibrium_to_json(*row.failure);
  return j;
}

std::vector<Partition> partitions_in_scope(int n, PartitionScope scope) {
  return scope == PartitionScope::all ? enumerate_set_partitions(n, 8) : enumerate_partitions_by_sizes(n, 10);
}

CommandResult verify_theorem1(const Json& input) {
  const int n = get_int(input, "n");
  const int m = get_int(input, "m");
  const PartitionScope scope = scope_of(input);
  const auto report = verify_theorem_1(n, m, cost_from_json(input.at("cost"), n), scope,
                                       scope == PartitionScope::all ? 8 : 10);
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row_to_json(row));
  Json r{{"passed", report.passed()}, {"rows", rows}, {"counterexamples", report.violations}};
  return {r, report.passed() ? kOk : kCheckFailed};
}

CommandResult verify_oracle(const Json& input) {
  const Game g = game_of(Json{{"n", input.at("n")}, {"m", input.at("m")}, {"cost", input.at("cost")}});
  const std::uint64_t cap = oracle_cap_of(input);
  Json rows = Json::array();
  Json counterexamples = Json::array();
  for (const auto& p : partitions_in_scope(g.players(), scope_of(input))) {
    const bool same = induce(g, p) == brute_force_profile_oracle(g, p, cap);
    rows.push_back(Json{{"partition", p.to_string()}, {"agree", same}});
    if (!same) counterexamples.push_back(p.to_string());
  }
  const bool passed = counterexamples.empty();
  Json r{{"passed", passed}, {"rows", rows}, {"counterexamples", counterexamples}};
  return {r, passed ? kOk : kCheckFailed};
}

Json structure_to_json(const std::optional<QualifiedStructure>& s, int m, std::span<const int> w) {
  if (!s) return Json();
  Json groups = Json::array();
  for (const auto& grp : s->groups)
    groups.push_back(Json{{"weight", grp.weight}, {"group_size", grp.group_size}, {"groups", grp.groups}});
  return Json{{"all_distinct", s->all_distinct},
              {"single_resource", s->single_resource},
              {"base_weight", s->base_weight},
              {"groups", groups},
              {"loads", loads_to_json(s->loads(m, w))}};
}

Json hat_search_to_json(const HatCSearchResult& h) {
  Json diag = Json::array();
  for (const auto& d : h.grand_coalition)
    diag.push_back(Json{{"actions", d.actions},
                        {"loads", loads_to_json(d.loads)},
                        {"base_weights", d.base_weights},
                        {"covering", d.covering},
                        {"envy_free", d.envy_free},
                        {"credible", d.credible}});
  return Json{{"found", h.partition.has_value()},
              {"partition", h.partition ? Json(h.partition->to_string()) : Json()},
              {"message", h.partition ? "max-cost optimal partition found" : "no ĉ-optimal partition exists"},
              {"minimax_optimum", h.minimax_optimum},
              {"partitions_examined", h.partitions_examined},
              {"partitions_qualifying", h.partitions_qualifying},
              {"grand_coalition_minimax_agreements", diag}};
}

Json argmin_json(const std::vector<LoadVector>& lvs) {
  Json out = Json::array();
  for (const auto& lv : lvs) out.push_back(loads_to_json(lv));
  return out;
}

CommandResult verify_weighted(const Json& input) {
  const std::vector<int> w = weights_of(input);
  const int m = get_int(input, "m");
  const int total = std::accumulate(w.begin(), w.end(), 0);
  const WeightedGame g(w, m, cost_from_json(input.at("cost"), total));
  const std::uint64_t cap = cap_of(input);

  // Grand-coalition structure against enumeration.
  const auto s = weighted_qualified_conditions(w, m);
  std::set<LoadVector> brute;
  for (const auto& a : weighted_qualified_agreements(w, m, EffectiveCost(g.cost()), cap))
    brute.insert(a.loads().canonical());
  const bool structure_ok = s ? brute == std::set<LoadVector>{s->loads(m, w)} : brute.empty();

  const auto eq = weighted_c_bar_equivalence_check(w, m, cap);
  const auto hat = find_hat_c_optimal_partition(g);

  const bool passed = structure_ok && eq.passed();
  Json counterexamples = Json::array();
  if (!structure_ok) counterexamples.push_back("qualified structure differs from enumeration");
  if (!eq.linear_matches_min_var) counterexamples.push_back("linear total-cost argmin differs from min_var argmin");
  if (!eq.exponential_within_minimax) counterexamples.push_back("exponential total-cost argmin not minimax");

  Json r{{"passed", passed},
         {"qualified_structure", structure_to_json(s, m, w)},
         {"structure_matches_enumeration", structure_ok},
         {"linear_argmin", argmin_json(eq.linear_argmin)},
         {"min_var_argmin", argmin_json(eq.min_var_argmin)},
         {"exponential_argmin", argmin_json(eq.exponential_argmin)},
         {"minimax_argmin", argmin_json(eq.minimax_argmin)},
         {"hat_c_search", hat_search_to_json(hat)},
         {"counterexamples", counterexamples}};
  return {r, passed ? kOk : kCheckFailed};
}

CommandResult verify(const Json& input) {
  const std::string scope = input.value("scope", std::string());
  if (scope == "prop2") return verify_prop2(input);
  if (scope == "lemma1") return verify_lemma1(input);
  if (scope == "theorem1") return verify_theorem1(input);
  if (scope == "oracle") return verify_oracle(input);
  if (scope == "weighted") return verify_weighted(input);
  throw ValidationError("unknown verify scope '" + scope + "'");
}

// -------------------------------------------------------------------- mnp

MnpMethod method_of(const Json& input) {
  const std::string s = input.value("method", std::string("auto"));
  if (s == "auto") return MnpMethod::automatic;
  if (s == "exhaustive") return MnpMethod::exhaustive;
  if (s == "bnb") return MnpMethod::branch_and_bound;
  throw ValidationError("method must be auto, exhaustive or bnb");
}

Json mnp_json(const MnpSolution& s, MnpObjective obj, bool all) {
  Json j{{"objective", to_string(obj)},
         {"value", s.value},
         {"assignment", s.assignment},
         {"loads", loads_to_json(s.loads)}};
  if (all) j["optimal_loads"] = argmin_json(s.optimal_loads);
  return j;
}

CommandResult mnp(const Json& input) {
  const std::vector<int> w = weights_of(input);
  const int m = get_int(input, "m");
  if (m < 1) throw ValidationError("need m >= 1");
  const MnpObjective obj = parse_objective(input.value("objective", std::string("minimax")));
  const auto s = mnp_solve(w, m, obj, method_of(input), cap_of(input));
  return {mnp_json(s, obj, input.value("all", false)), kOk};
}

// --------------------------------------------------------------- weighted

CommandResult weighted(const Json& input) {
  const std::vector<int> w = weights_of(input);
  const int m = get_int(input, "m");
  const int total = std::accumulate(w.begin(), w.end(), 0);
  const WeightedGame g(w, m, cost_from_json(input.at("cost"), total));
  const MnpObjective obj = parse_objective(input.value("objective", std::string("minimax")));

  Json r{{"players", g.players()}, {"total_weight", total}};
  r["grand_coalition_structure"] = structure_to_json(weighted_qualified_conditions(w, m), m, w);
  const auto s = mnp_solve(w, m, obj, MnpMethod::automatic, cap_of(input));
  Json sol = mnp_json(s, obj, true);
  sol["total_cost"] = to_string(weighted_total_cost(g, Outcome{s.assignment}));
  sol["max_cost"] = to_string(weighted_max_cost(g, Outcome{s.assignment}));
  r["mnp"] = std::move(sol);
  if (g.players() <= 8) {
    r["hat_c_search"] = hat_search_to_json(find_hat_c_optimal_partition(g));
  } else {
    r["hat_c_search"] = Json();
  }
  return {r, kOk};
}

}  // namespace

CommandResult execute(const std::string& command, const Json& input) {
  if (command == "analyze") return analyze(input);
  if (command == "agreements") return agreements(input);
  if (command == "verify") return verify(input);
  if (command == "mnp") return mnp(input);
  if (command == "weighted") return weighted(input);
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace scg::cli
