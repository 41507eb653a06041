#ifndef BRANCHKIT_COST_HPP
#define BRANCHKIT_COST_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "branchkit/store.hpp"

namespace branchkit {

/// A point in the cost range D_<; one component per configured dimension.
struct CostValue {
  std::vector<double> parts;
  bool operator==(const CostValue&) const = default;
};

enum class Direction { Minimise, Maximise };

/// The ordering relation evaluated as "candidate improves on incumbent".
/// Scalars compare with >, < or =; compound ranges compare either
/// componentwise (strict in every component's direction) or
/// lexicographically (strict in the highest-priority differing component).
struct CostOrdering {
  enum class Kind { Eq, Lt, Gt, Lexicographic, Componentwise };
  Kind kind = Kind::Eq;
  std::vector<Direction> directions;  // lex/comp only

  std::size_t arity() const {
    return (kind == Kind::Lexicographic || kind == Kind::Componentwise)
               ? directions.size()
               : 1;
  }
  bool operator==(const CostOrdering&) const = default;

  static CostOrdering eq() { return {Kind::Eq, {}}; }
  static CostOrdering lt() { return {Kind::Lt, {}}; }
  static CostOrdering gt() { return {Kind::Gt, {}}; }
  static CostOrdering lex(std::vector<Direction> dirs) {
    return {Kind::Lexicographic, std::move(dirs)};
  }
  static CostOrdering comp(std::vector<Direction> dirs) {
    return {Kind::Componentwise, std::move(dirs)};
  }
};

/// One cost component: a constant or a sum over variables. Sums over
/// interval cells evaluate to the midpoint of the interval sum.
struct CostExpr {
  enum class Kind { Constant, VarSum };
  Kind kind = Kind::Constant;
  double constant = 0.0;
  std::vector<int> vars;
  bool operator==(const CostExpr&) const = default;

  static CostExpr make_constant(double v) { return {Kind::Constant, v, {}}; }
  static CostExpr make_sum(std::vector<int> vs) { return {Kind::VarSum, 0.0, std::move(vs)}; }
};

struct CostSpec {
  std::vector<CostExpr> components;
  CostOrdering ordering;
  CostValue initial_delta;

  std::size_t arity() const { return components.size(); }
  bool operator==(const CostSpec&) const = default;

  /// Constant cost, "=" ordering and delta equal to the constant: the
  /// incumbent test is always true and every final store is pushed.
  static CostSpec classical(double value = 1.0) {
    return {{CostExpr::make_constant(value)}, CostOrdering::eq(), CostValue{{value}}};
  }

  bool is_classical() const {
    return ordering.kind == CostOrdering::Kind::Eq && components.size() == 1 &&
           components[0].kind == CostExpr::Kind::Constant &&
           initial_delta.parts == std::vector<double>{components[0].constant};
  }
};

namespace detail {

inline double cell_midpoint(const DomainValue& d) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      const auto& vs = d.as<FiniteSetValue>().values;
      if (vs.empty()) throw std::invalid_argument("cost over empty cell");
      return (static_cast<double>(vs.front()) + static_cast<double>(vs.back())) / 2.0;
    }
    case DomainKind::IntInterval: {
      const auto& v = d.as<IntIntervalValue>();
      if (v.empty) throw std::invalid_argument("cost over empty cell");
      return (static_cast<double>(v.lo) + static_cast<double>(v.hi)) / 2.0;
    }
    case DomainKind::RealInterval: {
      const auto& v = d.as<RealIntervalValue>();
      if (v.empty) throw std::invalid_argument("cost over empty cell");
      return (v.lo + v.hi) / 2.0;
    }
    case DomainKind::LatticeInterval: {
      const auto& v = d.as<LatticeIntervalValue>();
      if (v.empty) throw std::invalid_argument("cost over empty cell");
      return (v.lo + v.hi) / 2.0;
    }
    default:
      throw std::invalid_argument("cost over set-valued cell");
  }
}

inline bool strictly_better(double candidate, double incumbent, Direction dir) {
  return dir == Direction::Minimise ? candidate < incumbent : candidate > incumbent;
}

}  // namespace detail

inline CostValue eval_cost(const CostSpec& spec, const Store& s) {
  if (!s.consistent()) throw std::invalid_argument("cost of an inconsistent store");
  CostValue out;
  out.parts.reserve(spec.components.size());
  for (const auto& comp : spec.components) {
    if (comp.kind == CostExpr::Kind::Constant) {
      out.parts.push_back(comp.constant);
    } else {
      double sum = 0.0;
      for (int v : comp.vars)
        sum += detail::cell_midpoint(s.cell(static_cast<std::size_t>(v)));
      out.parts.push_back(sum);
    }
  }
  return out;
}

/// Does the candidate improve on the incumbent under the configured ordering?
inline bool cost_improves(const CostSpec& spec, const CostValue& candidate,
                          const CostValue& delta) {
  if (candidate.parts.size() != delta.parts.size() ||
      candidate.parts.size() != spec.ordering.arity())
    throw std::invalid_argument("cost arity mismatch");
  switch (spec.ordering.kind) {
    case CostOrdering::Kind::Eq: return candidate.parts == delta.parts;
    case CostOrdering::Kind::Lt: return candidate.parts[0] < delta.parts[0];
    case CostOrdering::Kind::Gt: return candidate.parts[0] > delta.parts[0];
    case CostOrdering::Kind::Lexicographic: {
      for (std::size_t i = 0; i < candidate.parts.size(); ++i) {
        if (detail::strictly_better(candidate.parts[i], delta.parts[i],
                                    spec.ordering.directions[i]))
          return true;
        if (candidate.parts[i] != delta.parts[i]) return false;
      }
      return false;
    }
    case CostOrdering::Kind::Componentwise: {
      for (std::size_t i = 0; i < candidate.parts.size(); ++i)
        if (!detail::strictly_better(candidate.parts[i], delta.parts[i],
                                     spec.ordering.directions[i]))
          return false;
      return true;
    }
  }
  return false;
}

/// The natural "nothing found yet" incumbent for an ordering: top of the
/// range for minimisation, bottom for maximisation, per component.
inline CostValue default_delta(const CostOrdering& ordering,
                               std::span<const CostExpr> components) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (ordering.kind) {
    case CostOrdering::Kind::Eq: {
      if (components.size() == 1 && components[0].kind == CostExpr::Kind::Constant)
        return CostValue{{components[0].constant}};
      return CostValue{{0.0}};
    }
    case CostOrdering::Kind::Lt: return CostValue{{inf}};
    case CostOrdering::Kind::Gt: return CostValue{{-inf}};
    case CostOrdering::Kind::Lexicographic:
    case CostOrdering::Kind::Componentwise: {
      CostValue v;
      for (auto d : ordering.directions)
        v.parts.push_back(d == Direction::Minimise ? inf : -inf);
      return v;
    }
  }
  return CostValue{{0.0}};
}

inline std::string format_cost(const CostValue& v) {
  if (v.parts.size() == 1) return format_double(v.parts[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < v.parts.size(); ++i) {
    if (i) out += ",";
    out += format_double(v.parts[i]);
  }
  out += ")";
  return out;
}

}  // namespace branchkit

#endif  // BRANCHKIT_COST_HPP
