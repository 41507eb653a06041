#ifndef BRANCHKIT_FILTERING_HPP
#define BRANCHKIT_FILTERING_HPP

#include <cmath>
#include <cstddef>
#include <deque>
#include <span>
#include <vector>

#include "branchkit/constraint.hpp"
#include "branchkit/store.hpp"

namespace branchkit {

struct FilteringKind {
  enum class Mode { ConsistencyCheck, FixpointPropagation };
  Mode mode = Mode::FixpointPropagation;
  int max_rounds = 10000;  // revision budget for the fixpoint loop

  static FilteringKind consistency() { return {Mode::ConsistencyCheck, 1}; }
  static FilteringKind fixpoint(int rounds = 10000) {
    return {Mode::FixpointPropagation, rounds};
  }
  bool operator==(const FilteringKind&) const = default;
};

/// The all-empty store of the same shape as s.
inline Store all_empty_like(const Store& s) {
  std::vector<DomainValue> cells;
  cells.reserve(s.size());
  for (const auto& c : s.cells()) {
    switch (c.kind()) {
      case DomainKind::Bool: cells.push_back(DomainValue::boolean({})); break;
      case DomainKind::FiniteEnum: cells.push_back(DomainValue::finite({})); break;
      case DomainKind::IntInterval: cells.push_back(DomainValue::empty_int_interval()); break;
      case DomainKind::SetInterval: cells.push_back(DomainValue::empty_set_interval()); break;
      case DomainKind::RealInterval: cells.push_back(DomainValue::empty_real_interval()); break;
      case DomainKind::LatticeInterval:
        cells.push_back(DomainValue::empty_lattice_interval(
            c.as<LatticeIntervalValue>().lattice));
        break;
    }
  }
  return Store(std::move(cells));
}

namespace detail {

/// Sub-threshold real shrinks count as "no change" so the fixpoint loop
/// terminates in floating point.
constexpr double kRealChangeEps = 1e-12;

inline bool cell_changed(const DomainValue& before, const DomainValue& after) {
  if (before.kind() == DomainKind::RealInterval) {
    const auto& a = before.as<RealIntervalValue>();
    const auto& b = after.as<RealIntervalValue>();
    if (a.empty != b.empty) return true;
    if (a.empty) return false;
    return std::fabs(a.lo - b.lo) > kRealChangeEps || std::fabs(a.hi - b.hi) > kRealChangeEps;
  }
  return !(before == after);
}

/// Final correctness step shared by both filters: a consistent, not
/// divisible result must actually be a solution, otherwise it is rejected.
inline Store verify_singleton(std::span<const ConstraintExpr> constraints, Store s,
                              double tol) {
  if (!s.consistent() || s.divisible()) return s;
  for (const auto& c : constraints)
    if (!eval_on_singleton(c, s, tol)) return all_empty_like(s);
  return s;
}

}  // namespace detail

/// The naive filter: rejects inconsistent stores outright and verifies
/// singleton stores against every constraint; anything divisible passes
/// through untouched.
inline Store filter_consistency_check(std::span<const ConstraintExpr> constraints,
                                      const Store& s, double tol = 1e-9) {
  if (!s.consistent()) return all_empty_like(s);
  return detail::verify_singleton(constraints, s, tol);
}

/// AC-3-shaped propagation: apply each constraint's narrowing, re-enqueue
/// constraints sharing a variable whose cell changed, stop at a fixpoint,
/// an empty cell, or the revision budget.
inline Store filter_fixpoint(std::span<const ConstraintExpr> constraints, const Store& s,
                             int max_rounds = 10000, double tol = 1e-9) {
  if (!s.consistent()) return all_empty_like(s);

  std::vector<std::vector<std::size_t>> watchers(s.size());
  for (std::size_t ci = 0; ci < constraints.size(); ++ci)
    for (int v : referenced_vars(constraints[ci]))
      watchers[static_cast<std::size_t>(v)].push_back(ci);

  Store current = s;
  std::deque<std::size_t> queue;
  std::vector<bool> queued(constraints.size(), false);
  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    queue.push_back(ci);
    queued[ci] = true;
  }

  int revisions = 0;
  while (!queue.empty()) {
    if (revisions >= max_rounds) break;  // sound but possibly under-filtered
    ++revisions;
    auto ci = queue.front();
    queue.pop_front();
    queued[ci] = false;

    Store next = narrow(constraints[ci], current, tol);
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (!detail::cell_changed(current.cell(i), next.cell(i))) continue;
      if (is_empty(next.cell(i))) return all_empty_like(s);
      current = current.replaced(i, next.cell(i));
      for (auto w : watchers[i]) {
        if (!queued[w]) {
          queue.push_back(w);
          queued[w] = true;
        }
      }
    }
  }
  return detail::verify_singleton(constraints, current, tol);
}

inline Store apply_filter(const FilteringKind& kind,
                          std::span<const ConstraintExpr> constraints, const Store& s,
                          double tol = 1e-9) {
  if (kind.mode == FilteringKind::Mode::ConsistencyCheck)
    return filter_consistency_check(constraints, s, tol);
  return filter_fixpoint(constraints, s, kind.max_rounds, tol);
}

}  // namespace branchkit

#endif  // BRANCHKIT_FILTERING_HPP
