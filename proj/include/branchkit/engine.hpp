#ifndef BRANCHKIT_ENGINE_HPP
#define BRANCHKIT_ENGINE_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "branchkit/constraint.hpp"
#include "branchkit/cost.hpp"
#include "branchkit/filtering.hpp"
#include "branchkit/heuristics.hpp"
#include "branchkit/store.hpp"

namespace branchkit {

struct SolverConfig {
  double epsilon = 0.0;
  FilteringKind filtering = FilteringKind::fixpoint();
  SelectorKind selector = SelectorKind::Naive;
  CostSpec cost = CostSpec::classical();
  /// false pushes every final store unconditionally; true gates pushes on
  /// the incumbent test and updates delta (branch-and-bound behaviour).
  bool use_extended_schema = true;
  /// false keeps only the incumbent on the stack (the memory-saving variant).
  bool keep_full_stack = true;
  bool trace = false;
  double eq_tolerance = 1e-9;
  std::uint64_t node_budget = 10'000'000;
};

enum class NodeOutcome { PrunedInconsistent, Pushed, RejectedCost, Branched };

inline const char* outcome_name(NodeOutcome o) {
  switch (o) {
    case NodeOutcome::PrunedInconsistent: return "pruned-inconsistent";
    case NodeOutcome::Pushed: return "pushed";
    case NodeOutcome::RejectedCost: return "rejected-cost";
    case NodeOutcome::Branched: return "branched";
  }
  return "?";
}

/// One node of the search tree, labelled by its path (root = empty path,
/// children of q are q.1 .. q.k left to right).
struct SearchNode {
  std::vector<int> path;
  Store store_in;
  Store store_filtered;
  PrecisionValue p_at_node;
  NodeOutcome outcome = NodeOutcome::Branched;
  int child_count = 0;
};

enum class SolveStatus { Ok, BudgetExhausted };

struct SolveResult {
  Stack stack;
  CostValue final_delta;
  std::uint64_t node_count = 0;
  std::uint64_t push_count = 0;
  std::size_t max_depth = 0;
  SolveStatus status = SolveStatus::Ok;
  std::optional<std::vector<SearchNode>> trace;
};

inline void validate_config(const CSPInstance& inst, const SolverConfig& cfg) {
  if (!(cfg.epsilon >= 0.0))
    throw std::invalid_argument("epsilon must be a non-negative real");
  if (cfg.filtering.max_rounds < 1)
    throw std::invalid_argument("filtering needs max_rounds >= 1");
  if (cfg.node_budget < 1) throw std::invalid_argument("node budget must be positive");
  const auto& cost = cfg.cost;
  if (cost.components.empty()) throw std::invalid_argument("cost spec has no components");
  if (cost.ordering.arity() != cost.components.size())
    throw std::invalid_argument("cost ordering arity differs from cost arity");
  if (cost.initial_delta.parts.size() != cost.components.size())
    throw std::invalid_argument("initial delta arity differs from cost arity");
  for (const auto& comp : cost.components) {
    if (comp.kind != CostExpr::Kind::VarSum) continue;
    for (int v : comp.vars) {
      if (v < 0 || v >= static_cast<int>(inst.variables.size()))
        throw std::invalid_argument("cost references an unknown variable");
      if (inst.variables[static_cast<std::size_t>(v)].domain.kind == DomainKind::SetInterval)
        throw std::invalid_argument("cost sum over set-valued variable '" +
                                    inst.variables[static_cast<std::size_t>(v)].name + "'");
    }
  }
}

namespace detail {

struct BudgetExhausted {};

class BranchRun {
 public:
  BranchRun(const CSPInstance& inst, const SolverConfig& cfg)
      : inst_(inst), cfg_(cfg), delta_(cfg.cost.initial_delta) {
    if (cfg_.trace) trace_.emplace();
  }

  SolveResult run() {
    SolveResult result;
    std::vector<int> path;
    try {
      branch(inst_.start_store(), PrecisionValue::top(), path);
      result.status = SolveStatus::Ok;
    } catch (const BudgetExhausted&) {
      result.status = SolveStatus::BudgetExhausted;
    }
    result.stack = std::move(stack_);
    result.final_delta = std::move(delta_);
    result.node_count = nodes_;
    result.push_count = pushes_;
    result.max_depth = max_depth_;
    result.trace = std::move(trace_);
    return result;
  }

 private:
  // One node: filter, then either push the store or split a cell and
  // recurse on the parts, depth-first and left to right.
  void branch(const Store& s, PrecisionValue p, std::vector<int>& path) {
    if (++nodes_ > cfg_.node_budget) throw BudgetExhausted{};
    if (path.size() > max_depth_) max_depth_ = path.size();

    Store filtered = apply_filter(cfg_.filtering, inst_.constraints, s, cfg_.eq_tolerance);
    std::size_t node_ix = 0;
    if (trace_) {
      trace_->push_back(SearchNode{path, s, filtered, p, NodeOutcome::Branched, 0});
      node_ix = trace_->size() - 1;
    }

    if (!filtered.consistent()) {
      if (trace_) (*trace_)[node_ix].outcome = NodeOutcome::PrunedInconsistent;
      return;
    }

    // A non-divisible store is final. A divisible one is final only below
    // the root (p carries the parent's precision there, never top) and only
    // once the precision gained since the parent is at most eps.
    bool at_leaf = !filtered.divisible();
    if (!at_leaf && p < PrecisionValue::top()) {
      at_leaf = (p - store_precision(filtered)) <= PrecisionValue{cfg_.epsilon, 0};
    }

    if (at_leaf) {
      NodeOutcome outcome = NodeOutcome::Pushed;
      if (!cfg_.use_extended_schema) {
        push(filtered);
      } else {
        CostValue fc = eval_cost(cfg_.cost, filtered);
        if (cost_improves(cfg_.cost, fc, delta_)) {
          delta_ = std::move(fc);
          push(filtered);
        } else {
          outcome = NodeOutcome::RejectedCost;
        }
      }
      if (trace_) (*trace_)[node_ix].outcome = outcome;
      return;
    }

    std::size_t j = choose(cfg_.selector, filtered);
    std::vector<DomainValue> parts = split_value(filtered.cell(j));
    if (trace_) {
      (*trace_)[node_ix].outcome = NodeOutcome::Branched;
      (*trace_)[node_ix].child_count = static_cast<int>(parts.size());
    }

    PrecisionValue p_next = store_precision(filtered);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Store child = filtered.replaced(j, parts[i]);
      assert(store_lt(child, filtered));
      if (trace_ && !store_lt(child, filtered))
        throw std::logic_error("split produced a non-contracting child store");
      path.push_back(static_cast<int>(i) + 1);
      branch(child, p_next, path);
      path.pop_back();
    }
  }

  void push(Store s) {
    if (!cfg_.keep_full_stack) stack_.clear();
    stack_.push(std::move(s));
    ++pushes_;
  }

  const CSPInstance& inst_;
  const SolverConfig& cfg_;
  Stack stack_;
  CostValue delta_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pushes_ = 0;
  std::size_t max_depth_ = 0;
  std::optional<std::vector<SearchNode>> trace_;
};

}  // namespace detail

/// Run the search from its canonical initial arguments: the instance's start
/// store, p = top of the precision domain, an empty stack and the configured
/// initial incumbent.
inline SolveResult solve(const CSPInstance& inst, const SolverConfig& cfg) {
  validate_instance(inst);
  validate_config(inst, cfg);
  detail::BranchRun run(inst, cfg);
  return run.run();
}

/// Continuous-domain entry point; termination needs eps > 0.
inline SolveResult solve_real(const CSPInstance& inst, const SolverConfig& cfg) {
  if (!(cfg.epsilon > 0.0))
    throw std::invalid_argument("solve_real requires epsilon > 0");
  return solve(inst, cfg);
}

}  // namespace branchkit

#endif  // BRANCHKIT_ENGINE_HPP
