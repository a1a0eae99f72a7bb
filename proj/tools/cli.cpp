#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "commands.hpp"
#include "render.hpp"
#include "scg/errors.hpp"

namespace scg::cli {

namespace {

struct Flags {
  std::string format = "json";
  std::string output;
  std::string check;
  std::uint64_t cap = 0;

  std::string game, partition, cost, weights, objective = "minimax", method = "auto", scope;
  int n = 0, m = 0, size = 0, coalition = 0;
  bool oracle = false, all_partitions = false, all_optima = false;
};

std::optional<std::uint64_t> env_cap() {
  const char* v = std::getenv("SCG_CAP");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) throw ValidationError("SCG_CAP must be a positive integer");
  return cap;
}

Json cost_or_default(const Flags& f) { return parse_cost_spec(f.cost.empty() ? "linear" : f.cost); }

// Game JSON from --game, overridden by --n/--m/--cost, normalized through the
// library so stored inputs are canonical.
Json game_input(const Flags& f, const CLI::App& sub) {
  Json g = f.game.empty() ? Json::object() : read_json_argument(f.game);
  if (sub.count("--n")) g["n"] = f.n;
  if (sub.count("--m")) g["m"] = f.m;
  if (sub.count("--cost") || !g.contains("cost")) g["cost"] = cost_or_default(f);
  if (!g.contains("n") || !g.contains("m")) throw ValidationError("a game needs n and m (--game or --n/--m)");
  if (!g["n"].is_number_integer() || !g["m"].is_number_integer() || g["n"].get<int>() < 1 || g["m"].get<int>() < 1)
    throw ValidationError("n and m must be positive integers");
  const int n = g["n"].get<int>();
  const Game game(n, g["m"].get<int>(), cost_from_json(g["cost"], n));
  return Json{{"n", game.players()}, {"m", game.resources()}, {"cost", cost_to_json(game.cost())}};
}

Json weights_json(const std::string& text) {
  const auto w = parse_int_list(text);
  for (int x : w)
    if (x < 1) throw ValidationError("weights must be positive integers");
  return w;
}

// Weighted game from --game or --weights/--m/--cost.
void weighted_input(const Flags& f, const CLI::App& sub, Json& in) {
  Json g = f.game.empty() ? Json::object() : read_json_argument(f.game);
  if (sub.count("--weights")) g["weights"] = weights_json(f.weights);
  if (sub.count("--m")) g["m"] = f.m;
  if (sub.count("--cost") || !g.contains("cost")) g["cost"] = cost_or_default(f);
  if (!g.contains("weights") || !g.contains("m")) throw ValidationError("need weights and m");
  std::vector<int> w;
  for (const auto& x : g["weights"]) {
    if (!x.is_number_integer()) throw ValidationError("weights must be positive integers");
    w.push_back(x.get<int>());
  }
  if (!g["m"].is_number_integer()) throw ValidationError("m must be an integer");
  const int total = std::accumulate(w.begin(), w.end(), 0);
  const WeightedGame game(w, g["m"].get<int>(), cost_from_json(g["cost"], std::max(total, 1)));
  in["weights"] = game.weights();
  in["m"] = game.resources();
  in["cost"] = cost_to_json(game.cost());
}

Json partition_input(const std::string& text, int n) {
  if (text.empty()) throw ValidationError("--partition is required");
  return partition_to_json(partition_from_json(read_json_argument(text), n));
}

int status_for_error(const std::exception& e) {
  if (dynamic_cast<const NoQualifiedAgreement*>(&e)) return kNoEquilibrium;
  if (dynamic_cast<const CapExceeded*>(&e)) return kCapExceeded;
  return kInvalid;
}

Json make_report(const std::string& command, const Json& input) {
  CommandResult r = execute(command, input);
  return Json{{"command", command}, {"input", input}, {"status", r.status}, {"result", std::move(r.result)}};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text;
}

int run_check(const std::string& path, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string stored = ss.str();
  Json report;
  try {
    report = Json::parse(stored);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("--check expects a JSON report: " + std::string(e.what()));
  }
  if (!report.is_object() || !report.contains("command") || !report.contains("input") || !report["command"].is_string())
    throw ValidationError("--check expects a JSON report with 'command' and 'input'");
  const std::string fresh = render(make_report(report["command"].get<std::string>(), report["input"]), Format::json);
  const bool same = fresh == stored;
  out << (same ? "check passed: " : "check FAILED: ") << path
      << (same ? " reproduces byte-for-byte\n" : " differs from a fresh run\n");
  return same ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Communication partitions in singleton congestion games", "scg"};
  app.option_defaults()->always_capture_default();
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output", f.output, "Write the report to this file instead of stdout");
  app.add_option("--cap", f.cap, "Enumeration cap (overrides SCG_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--check", f.check, "Re-run a saved JSON report and compare byte-for-byte");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto* analyze = app.add_subcommand("analyze", "Induced equilibrium of one partition");
  analyze->add_option("--game", f.game, "Game JSON (file or inline)");
  analyze->add_option("--partition", f.partition, "Partition JSON (file or inline)");
  analyze->add_option("--n", f.n, "Players");
  analyze->add_option("--m", f.m, "Resources");
  analyze->add_option("--cost", f.cost, "Cost spec, e.g. linear, quadratic, exp, table:1,2,4");
  analyze->add_flag("--oracle", f.oracle, "Use the brute-force path");

  auto* agreements = app.add_subcommand("agreements", "Classify every agreement of one coalition");
  agreements->add_option("--size", f.size, "Coalition size");
  agreements->add_option("--m", f.m, "Resources");
  agreements->add_option("--cost", f.cost, "Cost spec");
  agreements->add_option("--game", f.game, "Game JSON; with --partition and --coalition uses the subgame cost");
  agreements->add_option("--n", f.n, "Players");
  agreements->add_option("--partition", f.partition, "Partition JSON");
  agreements->add_option("--coalition", f.coalition, "Coalition index within the partition");

  auto* verify = app.add_subcommand("verify", "Exhaustive checks of the structural results");
  verify->add_option("scope", f.scope, "prop2, lemma1, theorem1, oracle or weighted")
      ->required()
      ->check(CLI::IsMember({"prop2", "lemma1", "theorem1", "oracle", "weighted"}));
  verify->add_option("--n", f.n, "Players");
  verify->add_option("--m", f.m, "Resources");
  verify->add_option("--size", f.size, "Largest coalition size (prop2)");
  verify->add_option("--cost", f.cost, "Cost spec");
  verify->add_option("--weights", f.weights, "Comma-separated weights (weighted)");
  verify->add_flag("--all-partitions", f.all_partitions, "Every set partition instead of one per size multiset");

  auto* mnp = app.add_subcommand("mnp", "Exact multiway number partitioning");
  mnp->add_option("--weights", f.weights, "Comma-separated weights")->required();
  mnp->add_option("--m", f.m, "Bins")->required();
  mnp->add_option("--objective", f.objective, "minimax, maximin, min_gap or min_var");
  mnp->add_option("--method", f.method, "auto, exhaustive or bnb")->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
  mnp->add_flag("--all", f.all_optima, "List every optimal load multiset");

  auto* weighted = app.add_subcommand("weighted", "Weighted-player analysis");
  weighted->add_option("--game", f.game, "Weighted game JSON (file or inline)");
  weighted->add_option("--weights", f.weights, "Comma-separated weights");
  weighted->add_option("--m", f.m, "Resources");
  weighted->add_option("--cost", f.cost, "Cost spec");
  weighted->add_option("--objective", f.objective, "minimax, maximin, min_gap or min_var");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (!f.check.empty()) return run_check(f.check, out);
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kInvalid;
    }
    const Format format = parse_format(f.format);
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    Json in = Json::object();
    if (command == "verify") in["scope"] = f.scope;
    if (command == "analyze") {
      in["game"] = game_input(f, *sub);
      in["partition"] = partition_input(f.partition, in["game"]["n"].get<int>());
      in["oracle"] = f.oracle;
    } else if (command == "agreements") {
      if (!f.game.empty() || sub->count("--n")) {
        in["game"] = game_input(f, *sub);
        in["partition"] = partition_input(f.partition, in["game"]["n"].get<int>());
        in["coalition"] = f.coalition;
      } else {
        in["size"] = f.size;
        in["m"] = f.m;
        in["cost"] = cost_or_default(f);
      }
    } else if (command == "verify") {
      if (f.scope == "weighted") {
        weighted_input(f, *sub, in);
      } else {
        if (f.scope == "prop2") {
          in["size"] = f.size;
        } else {
          in["n"] = f.n;
        }
        in["m"] = f.m;
        in["cost"] = cost_or_default(f);
        if (f.scope == "theorem1" || f.scope == "oracle") in["partitions"] = f.all_partitions ? "all" : "by_sizes";
      }
    } else if (command == "mnp") {
      in["weights"] = weights_json(f.weights);
      in["m"] = f.m;
      in["objective"] = to_string(parse_objective(f.objective));
      in["method"] = f.method;
      in["all"] = f.all_optima;
    } else if (command == "weighted") {
      weighted_input(f, *sub, in);
      in["objective"] = to_string(parse_objective(f.objective));
    }
    if (f.cap > 0) {
      in["cap"] = f.cap;
    } else if (const auto cap = env_cap()) {
      in["cap"] = *cap;
    }

    const Json report = make_report(command, in);
    emit(render(report, format), f.output, out);
    const int status = report["status"].get<int>();
    if (status == kNoEquilibrium) err << "no equilibrium: " << report["result"]["no_equilibrium"]["message"].get<std::string>() << '\n';
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return status_for_error(e);
  }
}

}  // namespace scg::cli
