#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdiv/audits.hpp"
#include "fairdiv/exchange.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/presets.hpp"

namespace {

using fairdiv::Allocation;
using fairdiv::Instance;
using nlohmann::json;

struct RunConfig {
  std::string instance_path;
  std::string preset;
  std::string allocation_path;
  std::string mechanism = "pe";
  std::uint64_t seed = 0;
  int trials = 1000;
  int coalition = 3;
  std::uint64_t budget = fairdiv::kDefaultEnumerationBudget;
  bool json_output = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  auto* inst = cmd->add_option("--instance", cfg.instance_path, "Instance JSON file");
  auto* preset = cmd->add_option("--preset", cfg.preset, "Built-in instance name");
  inst->excludes(preset);
  cmd->add_option("--mechanism", cfg.mechanism, "Mechanism name (pe, oracle, empty, dictator:...)");
  cmd->add_option("--seed", cfg.seed, "Random seed");
  cmd->add_option("--trials", cfg.trials, "Trial budget");
  cmd->add_option("--coalition", cfg.coalition, "Maximum coalition size");
  cmd->add_option("--budget", cfg.budget, "Enumeration budget");
  cmd->add_flag("--json", cfg.json_output, "Machine-readable output");
}

Instance load_instance(const RunConfig& cfg) {
  if (!cfg.preset.empty()) return fairdiv::preset_instance(cfg.preset);
  if (!cfg.instance_path.empty()) return fairdiv::load_instance_file(cfg.instance_path);
  throw fairdiv::InputError("provide --instance or --preset");
}

void print_verdict(const fairdiv::FairnessVerdict& v) {
  std::cout << v.property << ": " << (v.holds ? "holds" : "FAILS");
  if (!v.witness.empty()) std::cout << "  " << v.witness;
  std::cout << "\n";
}

json verdict_json(const fairdiv::FairnessVerdict& v) {
  json j{{"property", v.property}, {"holds", v.holds}};
  if (!v.witness.empty()) j["witness"] = json::parse(v.witness);
  return j;
}

int cmd_solve(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  const fairdiv::Mechanism mech = fairdiv::mechanism_by_name(cfg.mechanism);
  const Allocation a = mech.run(inst);
  const fairdiv::ValueVector vals = values(inst, a);
  if (cfg.json_output) {
    std::cout << json{{"mechanism", mech.name},
                      {"allocation", fairdiv::allocation_to_json(a)},
                      {"values", vals},
                      {"nsw", fairdiv::nsw(vals)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "mechanism: " << mech.name << "\n";
  for (int i = 0; i < inst.n(); ++i)
    std::cout << "agent " << i << ": " << fairdiv::goodset_to_json(a.bundles[i]).dump()
              << "  value " << vals[i] << "\n";
  std::cout << "values: " << json(vals).dump() << "\n";
  std::cout << "nsw: " << fairdiv::nsw(vals) << "\n";
  return 0;
}

int cmd_mms(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  const fairdiv::MmsProfile p = fairdiv::mms_profile(inst, cfg.budget);
  if (cfg.json_output) {
    std::cout << json{{"shares", p.shares}}.dump() << "\n";
  } else {
    std::cout << "maximin shares: " << json(p.shares).dump() << "\n";
  }
  return 0;
}

int cmd_audit(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  Allocation a;
  if (!cfg.allocation_path.empty()) {
    a = fairdiv::load_allocation_file(cfg.allocation_path);
    fairdiv::validate_allocation(inst, a);
  } else {
    a = fairdiv::mechanism_by_name(cfg.mechanism).run(inst);
  }
  std::vector<fairdiv::FairnessVerdict> verdicts{
      fairdiv::is_ef1(inst, a), fairdiv::is_mms(inst, a, cfg.budget),
      fairdiv::is_pareto_optimal_oracle(inst, a, cfg.budget),
      fairdiv::is_locally_efficient(inst, a)};
  bool all = true;
  json out{{"allocation", fairdiv::allocation_to_json(a)},
           {"values", values(inst, a)},
           {"verdicts", json::array()}};
  for (const auto& v : verdicts) {
    all = all && v.holds;
    out["verdicts"].push_back(verdict_json(v));
    if (!cfg.json_output) print_verdict(v);
  }
  if (fairdiv::is_non_wasteful(inst, a)) {
    const fairdiv::WelfareClass w = fairdiv::classify_welfare(inst, a, cfg.budget);
    out["welfare"] = json{{"nash_optimal", w.is_nash_optimal},
                          {"leximin", w.is_leximin},
                          {"lorenz_dominating", w.is_lorenz_dominating}};
    if (!cfg.json_output)
      std::cout << "welfare: nash_optimal=" << w.is_nash_optimal
                << " leximin=" << w.is_leximin
                << " lorenz_dominating=" << w.is_lorenz_dominating << "\n";
  }
  if (cfg.json_output) std::cout << out.dump() << "\n";
  return all ? 0 : 1;
}

int cmd_gradual(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  const fairdiv::Mechanism mech = fairdiv::mechanism_by_name(cfg.mechanism);
  const fairdiv::FairnessVerdict v = fairdiv::check_gradual(mech, inst, cfg.budget);
  if (cfg.json_output)
    std::cout << verdict_json(v).dump() << "\n";
  else
    print_verdict(v);
  return v.holds ? 0 : 1;
}

int cmd_fuzz(const RunConfig& cfg) {
  const fairdiv::Mechanism mech = fairdiv::mechanism_by_name(cfg.mechanism);
  fairdiv::GeneratorConfig gen;
  gen.max_goods = 6;
  gen.max_agents = 4;
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const Instance inst = fairdiv::random_instance(rng, gen);
    fairdiv::MisreportSpace space;
    space.seed = cfg.seed + static_cast<std::uint64_t>(t);
    space.trials = 32;
    for (int i = 0; i < inst.n(); ++i) {
      if (auto w = fairdiv::find_profitable_deviation(mech, inst, i, space)) {
        std::cout << "deviation witness (trial " << t << "): " << w->to_json().dump() << "\n";
        return 1;
      }
    }
    if (auto w = fairdiv::find_coalition_deviation(mech, inst,
                                                   std::min(cfg.coalition, inst.n()), space)) {
      std::cout << "coalition witness (trial " << t << "): " << w->to_json().dump() << "\n";
      return 1;
    }
    const fairdiv::FairnessVerdict io =
        fairdiv::check_index_oblivious(mech, inst, 2, cfg.seed + t);
    if (!io.holds) {
      std::cout << "index-obliviousness witness (trial " << t << "): " << io.witness << "\n";
      return 1;
    }
    const fairdiv::FairnessVerdict gr = fairdiv::check_gradual(mech, inst, 256);
    if (!gr.holds) {
      std::cout << "gradualness witness (trial " << t << "): " << gr.witness << "\n";
      return 1;
    }
  }
  std::cout << "no deviation in " << cfg.trials << " trials (seed " << cfg.seed << ")\n";
  return 0;
}

int cmd_repro(const RunConfig& cfg) {
  const fairdiv::Mechanism mech = fairdiv::mechanism_by_name(cfg.mechanism);
  const fairdiv::ExecutorReport report = fairdiv::run_impossibility_executor(mech);
  if (cfg.json_output) {
    std::cout << report.report.dump() << "\n";
  } else {
    for (const auto& step : report.report["steps"]) {
      std::cout << "step " << step["name"].get<std::string>() << ": values "
                << step["values"].dump() << "\n";
      for (const auto& c : step["checks"]) std::cout << "  " << c.get<std::string>() << "\n";
    }
    std::cout << "violated: " << report.violated << "\n";
    std::cout << "witness: " << report.witness.dump() << "\n";
  }
  const bool real_property = report.violated != "precondition-chain-broken";
  return real_property ? 0 : 1;
}

int cmd_graph(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  Allocation a;
  if (!cfg.allocation_path.empty()) {
    a = fairdiv::load_allocation_file(cfg.allocation_path);
    fairdiv::validate_allocation(inst, a);
  } else {
    a = fairdiv::mechanism_by_name(cfg.mechanism).run(inst);
  }
  if (!fairdiv::is_non_wasteful(inst, a)) {
    std::cerr << "allocation is wasteful; the exchange graph is undefined\n";
    return 1;
  }
  std::cout << fairdiv::to_dot(fairdiv::build_exchange_graph(inst, a));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair allocation of indivisible goods under matroid-rank valuations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* solve = app.add_subcommand("solve", "Run a mechanism on an instance");
  add_common(solve, cfg);
  auto* audit = app.add_subcommand("audit", "Audit fairness and efficiency of an allocation");
  add_common(audit, cfg);
  audit->add_option("--allocation", cfg.allocation_path, "Allocation JSON file");
  auto* fuzz = app.add_subcommand("fuzz", "Search for strategic deviations on random instances");
  add_common(fuzz, cfg);
  auto* gradual = app.add_subcommand("gradual", "Check bundle-size stability under restrictions");
  add_common(gradual, cfg);
  auto* repro = app.add_subcommand("repro-impossibility",
                                   "Replay the impossibility argument against a mechanism");
  add_common(repro, cfg);
  auto* mms = app.add_subcommand("mms", "Compute maximin shares");
  add_common(mms, cfg);
  auto* graph = app.add_subcommand("graph", "Export the exchange graph as DOT");
  add_common(graph, cfg);
  graph->add_option("--allocation", cfg.allocation_path, "Allocation JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (audit->parsed()) return cmd_audit(cfg);
    if (fuzz->parsed()) return cmd_fuzz(cfg);
    if (gradual->parsed()) return cmd_gradual(cfg);
    if (repro->parsed()) return cmd_repro(cfg);
    if (mms->parsed()) return cmd_mms(cfg);
    if (graph->parsed()) return cmd_graph(cfg);
  } catch (const fairdiv::CapabilityError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const fairdiv::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
