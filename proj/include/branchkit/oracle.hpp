#ifndef BRANCHKIT_ORACLE_HPP
#define BRANCHKIT_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "branchkit/constraint.hpp"
#include "branchkit/cost.hpp"
#include "branchkit/store.hpp"

namespace branchkit {

/// Ground truth by exhaustive enumeration. Deliberately shares no code with
/// the engine's filtering or splitting paths: candidate tuples come from a
/// plain Cartesian-product scan and are checked constraint by constraint.
struct OracleResult {
  std::vector<Store> solutions;
};

struct OracleLimits {
  std::uint64_t candidate_cap = 1'000'000;
};

namespace detail {

inline std::vector<DomainValue> enumerate_cell(const DomainValue& cell) {
  std::vector<DomainValue> out;
  switch (cell.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      for (auto v : cell.as<FiniteSetValue>().values)
        out.push_back(DomainValue::finite({v}, cell.kind()));
      return out;
    }
    case DomainKind::IntInterval: {
      const auto& v = cell.as<IntIntervalValue>();
      if (v.empty) return out;
      for (auto x = v.lo; x <= v.hi; ++x) out.push_back(DomainValue::int_interval(x, x));
      return out;
    }
    case DomainKind::SetInterval: {
      const auto& v = cell.as<SetIntervalValue>();
      if (v.empty) return out;
      auto free = sorted_difference(v.hi, v.lo);
      if (free.size() > 30) throw std::invalid_argument("set interval too wide to enumerate");
      std::uint64_t combos = std::uint64_t{1} << free.size();
      for (std::uint64_t mask = 0; mask < combos; ++mask) {
        auto s = v.lo;
        for (std::size_t b = 0; b < free.size(); ++b)
          if (mask & (std::uint64_t{1} << b)) s.push_back(free[b]);
        s = normalised(std::move(s));
        out.push_back(DomainValue::set_interval(s, s));
      }
      return out;
    }
    default:
      throw std::invalid_argument("domain is not enumerable");
  }
}

}  // namespace detail

/// All solutions of the instance, by Cartesian-product scan over the start
/// store. Throws on non-enumerable cells (reals, lattices) and when the
/// candidate count exceeds the cap.
inline OracleResult enumerate_solutions(const CSPInstance& inst, OracleLimits limits = {},
                                        double eq_tolerance = 1e-9) {
  validate_instance(inst);
  Store start = inst.start_store();
  std::vector<std::vector<DomainValue>> candidates;
  candidates.reserve(start.size());
  std::uint64_t total = 1;
  for (const auto& cell : start.cells()) {
    candidates.push_back(detail::enumerate_cell(cell));
    auto n = static_cast<std::uint64_t>(candidates.back().size());
    if (n == 0) return {};
    if (total > limits.candidate_cap / n)
      throw std::invalid_argument("candidate count exceeds the oracle cap");
    total *= n;
  }

  OracleResult result;
  std::vector<std::size_t> pick(start.size(), 0);
  while (true) {
    std::vector<DomainValue> cells;
    cells.reserve(start.size());
    for (std::size_t i = 0; i < start.size(); ++i) cells.push_back(candidates[i][pick[i]]);
    Store candidate(std::move(cells));
    bool ok = true;
    for (const auto& c : inst.constraints)
      if (!eval_on_singleton(c, candidate, eq_tolerance)) {
        ok = false;
        break;
      }
    if (ok) result.solutions.push_back(std::move(candidate));

    // advance the odometer, rightmost digit fastest
    std::size_t i = start.size();
    while (i > 0) {
      --i;
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return result;
    }
  }
}

/// Is the store an all-singleton tuple satisfying every constraint?
inline bool is_solution(const CSPInstance& inst, const Store& s, double eq_tolerance = 1e-9) {
  for (const auto& cell : s.cells())
    if (cardinality_of(cell) != Cardinality::One) return false;
  for (const auto& c : inst.constraints)
    if (!eval_on_singleton(c, s, eq_tolerance)) return false;
  return true;
}

/// The solutions whose cost no other solution improves upon.
inline std::vector<Store> optimal_by_order(const OracleResult& result, const CostSpec& spec) {
  if (result.solutions.empty())
    throw std::invalid_argument("optimal_by_order over an empty solution set");
  std::vector<CostValue> costs;
  costs.reserve(result.solutions.size());
  for (const auto& s : result.solutions) costs.push_back(eval_cost(spec, s));
  std::vector<Store> best;
  for (std::size_t i = 0; i < result.solutions.size(); ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < result.solutions.size() && !beaten; ++j)
      if (j != i && cost_improves(spec, costs[j], costs[i])) beaten = true;
    if (!beaten) best.push_back(result.solutions[i]);
  }
  return best;
}

}  // namespace branchkit

#endif  // BRANCHKIT_ORACLE_HPP
