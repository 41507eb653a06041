#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchkit/branchkit.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SolveFlags {
  std::string model_path;
  std::string mode;
  std::string cost;
  std::string order;
  std::string delta;
  std::string filter;
  std::string select;
  std::string stack;
  double epsilon = -1.0;
  double tolerance = -1.0;
  bool json = false;

  void attach(CLI::App* cmd, bool with_json) {
    cmd->add_option("model", model_path, "model file")->required();
    cmd->add_option("--mode", mode, "classical | min | max (shortcut parameterisations)");
    cmd->add_option("--cost", cost, "cost expression, e.g. 'sum' or 'sum(x,y)' or 'constant 1'");
    cmd->add_option("--order", order, "eq | lt | gt | lex(...) | comp(...)");
    cmd->add_option("--delta", delta, "initial incumbent, e.g. '0' or '(-inf,inf)'");
    cmd->add_option("--epsilon", epsilon, "precision bound (>= 0)");
    cmd->add_option("--filter", filter, "consistency | fixpoint");
    cmd->add_option("--select", select, "naive | ff");
    cmd->add_option("--stack", stack, "full | top");
    cmd->add_option("--tolerance", tolerance, "absolute tolerance for = over reals");
    if (with_json) cmd->add_flag("--json", json, "machine-readable report");
  }
};

branchkit::modeldetail::ModelBuilder builder_for(const branchkit::CSPInstance& inst) {
  branchkit::modeldetail::ModelBuilder b;
  b.variables = inst.variables;
  for (std::size_t i = 0; i < inst.variables.size(); ++i)
    b.index.emplace(inst.variables[i].name, static_cast<int>(i));
  return b;
}

// Flags override the model's solver block; --mode applies first.
void apply_flags(const SolveFlags& flags, branchkit::ParsedModel& model) {
  using namespace branchkit;
  auto b = builder_for(model.instance);
  auto& cfg = model.config;
  bool cost_shape_changed = false;

  auto parse_with = [&](const std::string& text, auto&& fn, const char* what) {
    modeldetail::Cursor c{text, 0, 1};
    auto value = fn(c);
    if (!c.done())
      throw std::runtime_error(std::string("trailing input in --") + what + " '" + text + "'");
    return value;
  };

  if (!flags.mode.empty()) {
    cost_shape_changed = true;
    if (flags.mode == "classical") {
      cfg.cost = CostSpec::classical();
      cfg.use_extended_schema = false;
    } else if (flags.mode == "min" || flags.mode == "max") {
      cfg.use_extended_schema = true;
      cfg.cost.ordering = flags.mode == "min" ? CostOrdering::lt() : CostOrdering::gt();
      if (cfg.cost.components.size() != 1 ||
          cfg.cost.components[0].kind == CostExpr::Kind::Constant) {
        // No usable scalar cost declared: default to the sum of all variables.
        modeldetail::Cursor c{"sum", 0, 1};
        cfg.cost.components = {modeldetail::parse_cost_component(c, b)};
      }
    } else {
      throw std::runtime_error("unknown --mode '" + flags.mode + "'");
    }
  }
  if (!flags.cost.empty()) {
    cost_shape_changed = true;
    cfg.cost.components = parse_with(
        flags.cost, [&](auto& c) { return modeldetail::parse_cost(c, b); }, "cost");
  }
  if (!flags.order.empty()) {
    cost_shape_changed = true;
    cfg.cost.ordering = parse_with(
        flags.order, [&](auto& c) { return modeldetail::parse_ordering(c); }, "order");
  }
  if (!flags.delta.empty()) {
    cfg.cost.initial_delta = parse_with(
        flags.delta, [&](auto& c) { return modeldetail::parse_delta(c); }, "delta");
  } else if (cost_shape_changed) {
    cfg.cost.initial_delta = default_delta(cfg.cost.ordering, cfg.cost.components);
  }
  if (flags.epsilon >= 0.0) cfg.epsilon = flags.epsilon;
  if (!flags.filter.empty()) {
    if (flags.filter == "consistency") cfg.filtering = FilteringKind::consistency();
    else if (flags.filter == "fixpoint") cfg.filtering = FilteringKind::fixpoint();
    else throw std::runtime_error("unknown --filter '" + flags.filter + "'");
  }
  if (!flags.select.empty()) {
    if (flags.select == "naive") cfg.selector = SelectorKind::Naive;
    else if (flags.select == "ff") cfg.selector = SelectorKind::FirstFail;
    else throw std::runtime_error("unknown --select '" + flags.select + "'");
  }
  if (!flags.stack.empty()) {
    if (flags.stack == "full") cfg.keep_full_stack = true;
    else if (flags.stack == "top") cfg.keep_full_stack = false;
    else throw std::runtime_error("unknown --stack '" + flags.stack + "'");
  }
  if (flags.tolerance >= 0.0) cfg.eq_tolerance = flags.tolerance;

  if (const char* env = std::getenv("BRANCHKIT_NODE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw std::runtime_error("BRANCHKIT_NODE_BUDGET must be a positive integer");
    cfg.node_budget = v;
  }
}

int run_solve(const SolveFlags& flags, bool with_trace) {
  using namespace branchkit;
  auto model = parse_model(read_file(flags.model_path));
  ParsedModel run = model;
  apply_flags(flags, run);
  run.config.trace = with_trace;
  auto result = solve(run.instance, run.config);
  if (with_trace) {
    std::cout << trace_text(run.instance, result);
  } else if (flags.json) {
    std::cout << report_json(run.instance, run.config, result).dump(2) << "\n";
  } else {
    std::cout << report_text(run.instance, run.config, result);
  }
  if (result.status == SolveStatus::BudgetExhausted) return kExitBudget;
  return result.stack.empty() ? kExitEmpty : kExitSolved;
}

int run_verify(const SolveFlags& flags) {
  using namespace branchkit;
  auto model = parse_model(read_file(flags.model_path));
  ParsedModel run = model;
  apply_flags(flags, run);
  // The comparison needs the exact solution set: classical mode, eps = 0.
  run.config.cost = CostSpec::classical();
  run.config.use_extended_schema = false;
  run.config.epsilon = 0.0;
  run.config.keep_full_stack = true;

  auto result = solve(run.instance, run.config);
  auto oracle = enumerate_solutions(run.instance, {}, run.config.eq_tolerance);

  auto contains = [](const std::vector<Store>& set, const Store& s) {
    for (const auto& t : set)
      if (t == s) return true;
    return false;
  };
  std::vector<Store> engine_set(result.stack.begin(), result.stack.end());
  bool ok = true;
  for (const auto& s : engine_set)
    if (!contains(oracle.solutions, s)) ok = false;
  for (const auto& s : oracle.solutions)
    if (!contains(engine_set, s)) ok = false;

  std::cout << "oracle: " << oracle.solutions.size() << " solutions, engine: "
            << result.stack.size() << " stores, "
            << (ok ? "match" : "MISMATCH") << "\n";
  return ok ? kExitSolved : kExitEmpty;
}

int run_verify_covering(const std::string& fine_path, const std::string& coarse_path) {
  using namespace branchkit;
  auto fine = nlohmann::json::parse(read_file(fine_path));
  auto coarse = nlohmann::json::parse(read_file(coarse_path));
  Stack p = stack_from_report(fine);
  Stack q = stack_from_report(coarse);
  bool covered = stack_covers(p, q);
  std::cout << "stack of " << fine_path << (covered ? " is covered by " : " is NOT covered by ")
            << coarse_path << "\n";
  return covered ? kExitSolved : kExitEmpty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic branch-and-prune constraint solver"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "solve a model file");
  solve_flags.attach(solve_cmd, true);

  SolveFlags trace_flags;
  auto* trace_cmd = app.add_subcommand("trace", "emit the path-labelled search tree");
  trace_flags.attach(trace_cmd, false);

  SolveFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "compare the engine against brute force");
  verify_flags.attach(verify_cmd, false);

  std::string fine_path, coarse_path;
  auto* cover_cmd =
      app.add_subcommand("verify-covering", "check one report's stack covers another's");
  cover_cmd->add_option("fine", fine_path, "report whose stack should be covered")->required();
  cover_cmd->add_option("coarse", coarse_path, "report whose stack should cover")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitError : kExitSolved;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_flags, false);
    if (trace_cmd->parsed()) return run_solve(trace_flags, true);
    if (verify_cmd->parsed()) return run_verify(verify_flags);
    if (cover_cmd->parsed()) return run_verify_covering(fine_path, coarse_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
