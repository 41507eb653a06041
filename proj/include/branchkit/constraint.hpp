#ifndef BRANCHKIT_CONSTRAINT_HPP
#define BRANCHKIT_CONSTRAINT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "branchkit/domain.hpp"
#include "branchkit/store.hpp"

namespace branchkit {

enum class LinRel { Le, Ge, Eq, Ne };

inline const char* rel_symbol(LinRel r) {
  switch (r) {
    case LinRel::Le: return "<=";
    case LinRel::Ge: return ">=";
    case LinRel::Eq: return "=";
    case LinRel::Ne: return "!=";
  }
  return "?";
}

/// sum_i coeff_i * x_i  REL  rhs  over numeric variables.
struct LinearConstraint {
  struct Term {
    double coeff = 0.0;
    int var = 0;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;  // unique vars, nonzero coeffs
  LinRel rel = LinRel::Le;
  double rhs = 0.0;
  bool operator==(const LinearConstraint&) const = default;
};

/// Extensional relation: the listed variable tuple must match a listed row.
struct TableConstraint {
  std::vector<int> vars;
  std::vector<std::vector<std::int64_t>> tuples;
  bool operator==(const TableConstraint&) const = default;
};

struct BoolExpr;
using BoolExprPtr = std::shared_ptr<const BoolExpr>;

struct BoolExpr {
  enum class Op { Var, Not, And, Or };
  Op op = Op::Var;
  int var = 0;  // Op::Var
  BoolExprPtr lhs, rhs;

  static BoolExprPtr make_var(int v) {
    auto e = std::make_shared<BoolExpr>();
    e->op = Op::Var;
    e->var = v;
    return e;
  }
  static BoolExprPtr make_not(BoolExprPtr x) {
    auto e = std::make_shared<BoolExpr>();
    e->op = Op::Not;
    e->lhs = std::move(x);
    return e;
  }
  static BoolExprPtr make_and(BoolExprPtr a, BoolExprPtr b) {
    auto e = std::make_shared<BoolExpr>();
    e->op = Op::And;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }
  static BoolExprPtr make_or(BoolExprPtr a, BoolExprPtr b) {
    auto e = std::make_shared<BoolExpr>();
    e->op = Op::Or;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }
};

inline bool bool_expr_equal(const BoolExprPtr& a, const BoolExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->op != b->op) return false;
  if (a->op == BoolExpr::Op::Var) return a->var == b->var;
  if (a->op == BoolExpr::Op::Not) return bool_expr_equal(a->lhs, b->lhs);
  return bool_expr_equal(a->lhs, b->lhs) && bool_expr_equal(a->rhs, b->rhs);
}

struct BoolConstraint {
  BoolExprPtr expr;
  bool operator==(const BoolConstraint& o) const { return bool_expr_equal(expr, o.expr); }
};

struct SetMember {  // element in var
  std::int64_t element = 0;
  int var = 0;
  bool operator==(const SetMember&) const = default;
};
struct SetSubset {  // sub subseteq super
  int sub = 0;
  int super = 0;
  bool operator==(const SetSubset&) const = default;
};
struct SetCard {  // card(var) REL bound
  int var = 0;
  LinRel rel = LinRel::Le;
  std::int64_t bound = 0;
  bool operator==(const SetCard&) const = default;
};

struct SetRelConstraint {
  std::variant<SetMember, SetSubset, SetCard> rel;
  bool operator==(const SetRelConstraint&) const = default;
};

using ConstraintExpr =
    std::variant<LinearConstraint, TableConstraint, BoolConstraint, SetRelConstraint>;

// ---------------------------------------------------------------------------

struct Variable {
  std::string name;
  DomainDescriptor domain;
  bool operator==(const Variable&) const = default;
};

struct CSPInstance {
  std::vector<Variable> variables;
  std::vector<ConstraintExpr> constraints;
  std::optional<Store> initial_store;  // defaults to the full top store

  Store full_store() const {
    std::vector<DomainValue> cells;
    cells.reserve(variables.size());
    for (const auto& v : variables) cells.push_back(v.domain.full_value());
    return Store(std::move(cells));
  }

  Store start_store() const { return initial_store ? *initial_store : full_store(); }

  bool operator==(const CSPInstance&) const = default;
};

inline std::vector<int> referenced_vars(const ConstraintExpr& c) {
  std::vector<int> out;
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    for (const auto& t : lin->terms) out.push_back(t.var);
  } else if (const auto* tab = std::get_if<TableConstraint>(&c)) {
    out = tab->vars;
  } else if (const auto* bc = std::get_if<BoolConstraint>(&c)) {
    std::vector<BoolExprPtr> work{bc->expr};
    while (!work.empty()) {
      auto e = work.back();
      work.pop_back();
      if (!e) continue;
      if (e->op == BoolExpr::Op::Var)
        out.push_back(e->var);
      else {
        work.push_back(e->lhs);
        work.push_back(e->rhs);
      }
    }
  } else if (const auto* sr = std::get_if<SetRelConstraint>(&c)) {
    if (const auto* m = std::get_if<SetMember>(&sr->rel)) out.push_back(m->var);
    if (const auto* s = std::get_if<SetSubset>(&sr->rel)) {
      out.push_back(s->sub);
      out.push_back(s->super);
    }
    if (const auto* k = std::get_if<SetCard>(&sr->rel)) out.push_back(k->var);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Structural and type checks; throws std::invalid_argument on violation.
inline void validate_instance(const CSPInstance& inst) {
  const auto n = static_cast<int>(inst.variables.size());
  if (n < 1) throw std::invalid_argument("CSP needs at least one variable");
  auto numeric = [](DomainKind k) {
    return k == DomainKind::Bool || k == DomainKind::FiniteEnum ||
           k == DomainKind::IntInterval || k == DomainKind::RealInterval;
  };
  auto check_var = [&](int v, const char* what) {
    if (v < 0 || v >= n)
      throw std::invalid_argument(std::string(what) + ": variable index out of range");
  };
  for (const auto& c : inst.constraints) {
    if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
      std::vector<int> seen;
      for (const auto& t : lin->terms) {
        check_var(t.var, "linear constraint");
        if (t.coeff == 0.0) throw std::invalid_argument("linear constraint: zero coefficient");
        if (!numeric(inst.variables[t.var].domain.kind))
          throw std::invalid_argument("linear constraint over non-numeric variable '" +
                                      inst.variables[t.var].name + "'");
        if (std::find(seen.begin(), seen.end(), t.var) != seen.end())
          throw std::invalid_argument("linear constraint: repeated variable");
        seen.push_back(t.var);
      }
    } else if (const auto* tab = std::get_if<TableConstraint>(&c)) {
      if (tab->vars.empty()) throw std::invalid_argument("table constraint without variables");
      for (int v : tab->vars) {
        check_var(v, "table constraint");
        auto k = inst.variables[v].domain.kind;
        if (k != DomainKind::Bool && k != DomainKind::FiniteEnum && k != DomainKind::IntInterval)
          throw std::invalid_argument("table constraint over non-finite variable '" +
                                      inst.variables[v].name + "'");
      }
      for (const auto& row : tab->tuples) {
        if (row.size() != tab->vars.size())
          throw std::invalid_argument("table row arity mismatch");
        for (std::size_t i = 0; i < row.size(); ++i) {
          const auto& dom = inst.variables[tab->vars[i]].domain;
          DomainValue single = dom.kind == DomainKind::IntInterval
                                   ? DomainValue::int_interval(row[i], row[i])
                                   : DomainValue::finite({row[i]}, dom.kind);
          if (!dom.admits(single))
            throw std::invalid_argument("table row value outside variable domain");
        }
      }
    } else if (const auto* bc = std::get_if<BoolConstraint>(&c)) {
      if (!bc->expr) throw std::invalid_argument("empty boolean constraint");
      for (int v : referenced_vars(c)) {
        check_var(v, "boolean constraint");
        if (inst.variables[v].domain.kind != DomainKind::Bool)
          throw std::invalid_argument("boolean constraint over non-bool variable '" +
                                      inst.variables[v].name + "'");
      }
    } else if (const auto* sr = std::get_if<SetRelConstraint>(&c)) {
      for (int v : referenced_vars(c)) {
        check_var(v, "set constraint");
        if (inst.variables[v].domain.kind != DomainKind::SetInterval)
          throw std::invalid_argument("set constraint over non-set variable '" +
                                      inst.variables[v].name + "'");
      }
      (void)sr;
    }
  }
  if (inst.initial_store) {
    if (inst.initial_store->size() != inst.variables.size())
      throw std::invalid_argument("initial store arity mismatch");
    for (std::size_t i = 0; i < inst.variables.size(); ++i)
      if (!inst.variables[i].domain.admits(inst.initial_store->cell(i)))
        throw std::invalid_argument("initial store cell outside variable domain");
  }
}

// ---------------------------------------------------------------------------
// Evaluation helpers.

namespace detail {

struct NumericHull {
  double lo, hi;
};

inline NumericHull numeric_hull(const DomainValue& d) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      const auto& v = d.as<FiniteSetValue>().values;
      if (v.empty()) throw std::invalid_argument("hull of empty cell");
      return {static_cast<double>(v.front()), static_cast<double>(v.back())};
    }
    case DomainKind::IntInterval: {
      const auto& v = d.as<IntIntervalValue>();
      if (v.empty) throw std::invalid_argument("hull of empty cell");
      return {static_cast<double>(v.lo), static_cast<double>(v.hi)};
    }
    case DomainKind::RealInterval: {
      const auto& v = d.as<RealIntervalValue>();
      if (v.empty) throw std::invalid_argument("hull of empty cell");
      return {v.lo, v.hi};
    }
    default:
      throw std::invalid_argument("numeric hull of non-numeric cell");
  }
}

inline double singleton_numeric(const DomainValue& d) {
  if (cardinality_of(d) != Cardinality::One)
    throw std::invalid_argument("cell is not a singleton");
  auto h = numeric_hull(d);
  return h.lo;
}

inline std::int64_t singleton_int(const DomainValue& d) {
  if (cardinality_of(d) != Cardinality::One)
    throw std::invalid_argument("cell is not a singleton");
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: return d.as<FiniteSetValue>().values.front();
    case DomainKind::IntInterval: return d.as<IntIntervalValue>().lo;
    default: throw std::invalid_argument("cell has no integer value");
  }
}

inline bool cell_contains_int(const DomainValue& d, std::int64_t v) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      const auto& vs = d.as<FiniteSetValue>().values;
      return std::binary_search(vs.begin(), vs.end(), v);
    }
    case DomainKind::IntInterval: {
      const auto& iv = d.as<IntIntervalValue>();
      return !iv.empty && iv.lo <= v && v <= iv.hi;
    }
    default:
      throw std::invalid_argument("integer membership on non-finite cell");
  }
}

inline bool relation_holds(double lhs, LinRel rel, double rhs, double tol) {
  switch (rel) {
    case LinRel::Le: return lhs <= rhs;
    case LinRel::Ge: return lhs >= rhs;
    case LinRel::Eq: return std::fabs(lhs - rhs) <= tol;
    case LinRel::Ne: return std::fabs(lhs - rhs) > tol;
  }
  return false;
}

inline bool relation_holds_int(std::int64_t lhs, LinRel rel, std::int64_t rhs) {
  switch (rel) {
    case LinRel::Le: return lhs <= rhs;
    case LinRel::Ge: return lhs >= rhs;
    case LinRel::Eq: return lhs == rhs;
    case LinRel::Ne: return lhs != rhs;
  }
  return false;
}

/// Three-valued evaluation; nullopt = unknown. `forced` pins one variable.
inline std::optional<bool> eval3(const BoolExprPtr& e, const Store& s,
                                 int forced_var = -1, bool forced_val = false) {
  switch (e->op) {
    case BoolExpr::Op::Var: {
      if (e->var == forced_var) return forced_val;
      const auto& vs = s.cell(static_cast<std::size_t>(e->var)).as<FiniteSetValue>().values;
      if (vs.size() == 1) return vs.front() != 0;
      return std::nullopt;
    }
    case BoolExpr::Op::Not: {
      auto v = eval3(e->lhs, s, forced_var, forced_val);
      if (!v) return std::nullopt;
      return !*v;
    }
    case BoolExpr::Op::And: {
      auto a = eval3(e->lhs, s, forced_var, forced_val);
      auto b = eval3(e->rhs, s, forced_var, forced_val);
      if ((a && !*a) || (b && !*b)) return false;
      if (a && b && *a && *b) return true;
      return std::nullopt;
    }
    case BoolExpr::Op::Or: {
      auto a = eval3(e->lhs, s, forced_var, forced_val);
      auto b = eval3(e->rhs, s, forced_var, forced_val);
      if ((a && *a) || (b && *b)) return true;
      if (a && b && !*a && !*b) return false;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// eval_on_singleton: does the (all-singleton) tuple satisfy the constraint?

inline bool eval_on_singleton(const ConstraintExpr& c, const Store& s,
                              double eq_tolerance = 1e-9) {
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    double lhs = 0.0;
    for (const auto& t : lin->terms)
      lhs += t.coeff * detail::singleton_numeric(s.cell(static_cast<std::size_t>(t.var)));
    return detail::relation_holds(lhs, lin->rel, lin->rhs, eq_tolerance);
  }
  if (const auto* tab = std::get_if<TableConstraint>(&c)) {
    std::vector<std::int64_t> point;
    point.reserve(tab->vars.size());
    for (int v : tab->vars)
      point.push_back(detail::singleton_int(s.cell(static_cast<std::size_t>(v))));
    return std::find(tab->tuples.begin(), tab->tuples.end(), point) != tab->tuples.end();
  }
  if (const auto* bc = std::get_if<BoolConstraint>(&c)) {
    for (int v : referenced_vars(c))
      if (cardinality_of(s.cell(static_cast<std::size_t>(v))) != Cardinality::One)
        throw std::invalid_argument("cell is not a singleton");
    auto r = detail::eval3(bc->expr, s);
    return r.value();
  }
  const auto& sr = std::get<SetRelConstraint>(c);
  auto singleton_set = [&](int v) -> const std::vector<std::int64_t>& {
    const auto& cell = s.cell(static_cast<std::size_t>(v));
    if (cardinality_of(cell) != Cardinality::One)
      throw std::invalid_argument("cell is not a singleton");
    return cell.as<SetIntervalValue>().lo;
  };
  if (const auto* m = std::get_if<SetMember>(&sr.rel)) {
    const auto& set = singleton_set(m->var);
    return std::binary_search(set.begin(), set.end(), m->element);
  }
  if (const auto* sub = std::get_if<SetSubset>(&sr.rel))
    return detail::sorted_subset(singleton_set(sub->sub), singleton_set(sub->super));
  const auto& k = std::get<SetCard>(sr.rel);
  return detail::relation_holds_int(
      static_cast<std::int64_t>(singleton_set(k.var).size()), k.rel, k.bound);
}

// ---------------------------------------------------------------------------
// possibly_satisfiable: sound pruning test — false only when no tuple drawn
// from the store can satisfy the constraint.

inline bool possibly_satisfiable(const ConstraintExpr& c, const Store& s,
                                 double eq_tolerance = 1e-9) {
  for (int v : referenced_vars(c))
    if (is_empty(s.cell(static_cast<std::size_t>(v)))) return false;

  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    double lo = 0.0, hi = 0.0;
    for (const auto& t : lin->terms) {
      auto h = detail::numeric_hull(s.cell(static_cast<std::size_t>(t.var)));
      double a = t.coeff * h.lo, b = t.coeff * h.hi;
      lo += std::min(a, b);
      hi += std::max(a, b);
    }
    switch (lin->rel) {
      case LinRel::Le: return lo <= lin->rhs;
      case LinRel::Ge: return hi >= lin->rhs;
      case LinRel::Eq: return lo - eq_tolerance <= lin->rhs && lin->rhs <= hi + eq_tolerance;
      case LinRel::Ne: return !(lo == hi && std::fabs(lo - lin->rhs) <= eq_tolerance);
    }
    return true;
  }
  if (const auto* tab = std::get_if<TableConstraint>(&c)) {
    for (const auto& row : tab->tuples) {
      bool fits = true;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (!detail::cell_contains_int(s.cell(static_cast<std::size_t>(tab->vars[i])), row[i])) {
          fits = false;
          break;
        }
      }
      if (fits) return true;
    }
    return false;
  }
  if (const auto* bc = std::get_if<BoolConstraint>(&c)) {
    auto r = detail::eval3(bc->expr, s);
    return !r || *r;
  }
  const auto& sr = std::get<SetRelConstraint>(c);
  if (const auto* m = std::get_if<SetMember>(&sr.rel)) {
    const auto& v = s.cell(static_cast<std::size_t>(m->var)).as<SetIntervalValue>();
    return std::binary_search(v.hi.begin(), v.hi.end(), m->element);
  }
  if (const auto* sub = std::get_if<SetSubset>(&sr.rel)) {
    const auto& a = s.cell(static_cast<std::size_t>(sub->sub)).as<SetIntervalValue>();
    const auto& b = s.cell(static_cast<std::size_t>(sub->super)).as<SetIntervalValue>();
    return detail::sorted_subset(a.lo, b.hi);
  }
  const auto& k = std::get<SetCard>(sr.rel);
  const auto& v = s.cell(static_cast<std::size_t>(k.var)).as<SetIntervalValue>();
  auto nlo = static_cast<std::int64_t>(v.lo.size());
  auto nhi = static_cast<std::int64_t>(v.hi.size());
  switch (k.rel) {
    case LinRel::Le: return nlo <= k.bound;
    case LinRel::Ge: return nhi >= k.bound;
    case LinRel::Eq: return nlo <= k.bound && k.bound <= nhi;
    case LinRel::Ne: return !(nlo == nhi && nlo == k.bound);
  }
  return true;
}

// ---------------------------------------------------------------------------
// narrow: one solution-preserving contraction pass for a single constraint.

namespace detail {

/// Round a double bound inward to int64 without overflow.
inline std::int64_t int_floor_clamped(double x) {
  if (x >= 9.2e18) return std::numeric_limits<std::int64_t>::max();
  if (x <= -9.2e18) return std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(std::floor(x));
}

inline std::int64_t int_ceil_clamped(double x) {
  if (x >= 9.2e18) return std::numeric_limits<std::int64_t>::max();
  if (x <= -9.2e18) return std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(std::ceil(x));
}

/// Intersect a numeric cell with [lo, hi]; integral kinds round inward.
inline DomainValue clamp_numeric(const DomainValue& d, double lo, double hi) {
  constexpr double kIntFuzz = 1e-9;
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      std::vector<std::int64_t> kept;
      for (auto v : d.as<FiniteSetValue>().values)
        if (static_cast<double>(v) >= lo - kIntFuzz && static_cast<double>(v) <= hi + kIntFuzz)
          kept.push_back(v);
      return DomainValue::finite(std::move(kept), d.kind());
    }
    case DomainKind::IntInterval: {
      const auto& v = d.as<IntIntervalValue>();
      std::int64_t new_lo = v.lo, new_hi = v.hi;
      if (std::isfinite(lo)) new_lo = std::max(v.lo, int_ceil_clamped(lo - kIntFuzz));
      if (std::isfinite(hi)) new_hi = std::min(v.hi, int_floor_clamped(hi + kIntFuzz));
      return DomainValue::int_interval(new_lo, new_hi);
    }
    case DomainKind::RealInterval: {
      const auto& v = d.as<RealIntervalValue>();
      return DomainValue::real_interval(std::max(v.lo, lo), std::min(v.hi, hi));
    }
    default:
      throw std::invalid_argument("numeric clamp of non-numeric cell");
  }
}

/// Remove one integral value; only representable removals happen.
inline DomainValue remove_int_value(const DomainValue& d, std::int64_t bad) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      std::vector<std::int64_t> kept;
      for (auto v : d.as<FiniteSetValue>().values)
        if (v != bad) kept.push_back(v);
      return DomainValue::finite(std::move(kept), d.kind());
    }
    case DomainKind::IntInterval: {
      const auto& v = d.as<IntIntervalValue>();
      if (v.empty) return d;
      if (v.lo == v.hi) return v.lo == bad ? DomainValue::empty_int_interval() : d;
      if (v.lo == bad) return DomainValue::int_interval(v.lo + 1, v.hi);
      if (v.hi == bad) return DomainValue::int_interval(v.lo, v.hi - 1);
      return d;
    }
    default:
      return d;  // not representable; sound to keep
  }
}

inline Store narrow_linear(const LinearConstraint& lin, const Store& s, double tol) {
  Store out = s;
  // Hull consistency: isolate each term against the bounds of the rest.
  for (std::size_t i = 0; i < lin.terms.size(); ++i) {
    const auto& ti = lin.terms[i];
    auto cell = out.cell(static_cast<std::size_t>(ti.var));
    if (is_empty(cell)) return out;
    double others_lo = 0.0, others_hi = 0.0;
    bool others_ok = true;
    for (std::size_t j = 0; j < lin.terms.size(); ++j) {
      if (j == i) continue;
      const auto& tj = lin.terms[j];
      const auto& cj = out.cell(static_cast<std::size_t>(tj.var));
      if (is_empty(cj)) {
        others_ok = false;
        break;
      }
      auto h = numeric_hull(cj);
      double a = tj.coeff * h.lo, b = tj.coeff * h.hi;
      others_lo += std::min(a, b);
      others_hi += std::max(a, b);
    }
    if (!others_ok) return out;

    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    auto tighten_le = [&](double bound) {  // coeff*x <= bound
      if (ti.coeff > 0)
        ub = std::min(ub, bound / ti.coeff);
      else
        lb = std::max(lb, bound / ti.coeff);
    };
    auto tighten_ge = [&](double bound) {  // coeff*x >= bound
      if (ti.coeff > 0)
        lb = std::max(lb, bound / ti.coeff);
      else
        ub = std::min(ub, bound / ti.coeff);
    };
    switch (lin.rel) {
      case LinRel::Le: tighten_le(lin.rhs - others_lo); break;
      case LinRel::Ge: tighten_ge(lin.rhs - others_hi); break;
      case LinRel::Eq:
        // The tolerance band [rhs-tol, rhs+tol] counts as satisfying.
        tighten_le(lin.rhs + tol - others_lo);
        tighten_ge(lin.rhs - tol - others_hi);
        break;
      case LinRel::Ne: {
        // Weakest sound rule: with every other cell fixed, drop the single
        // forbidden value when it is representable as a removal.
        if (others_lo == others_hi && cell.kind() != DomainKind::RealInterval) {
          double forbidden = (lin.rhs - others_lo) / ti.coeff;
          double rounded = std::nearbyint(forbidden);
          if (std::fabs(forbidden - rounded) <= tol)
            out = out.replaced(static_cast<std::size_t>(ti.var),
                               remove_int_value(cell, static_cast<std::int64_t>(rounded)));
        }
        continue;
      }
    }
    if (ub < std::numeric_limits<double>::infinity() ||
        lb > -std::numeric_limits<double>::infinity())
      out = out.replaced(static_cast<std::size_t>(ti.var), clamp_numeric(cell, lb, ub));
  }
  return out;
}

inline Store narrow_table(const TableConstraint& tab, const Store& s) {
  std::vector<std::vector<std::int64_t>> supported(tab.vars.size());
  for (const auto& row : tab.tuples) {
    bool fits = true;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!cell_contains_int(s.cell(static_cast<std::size_t>(tab.vars[i])), row[i])) {
        fits = false;
        break;
      }
    if (!fits) continue;
    for (std::size_t i = 0; i < row.size(); ++i) supported[i].push_back(row[i]);
  }
  Store out = s;
  for (std::size_t i = 0; i < tab.vars.size(); ++i) {
    auto idx = static_cast<std::size_t>(tab.vars[i]);
    const auto& cell = out.cell(idx);
    auto vals = normalised(std::move(supported[i]));
    if (cell.kind() == DomainKind::IntInterval) {
      // Interval cells keep the hull of the supported values.
      if (vals.empty())
        out = out.replaced(idx, DomainValue::empty_int_interval());
      else
        out = out.replaced(idx, DomainValue::int_interval(vals.front(), vals.back()));
    } else {
      out = out.replaced(idx, DomainValue::finite(std::move(vals), cell.kind()));
    }
  }
  return out;
}

inline Store narrow_bool(const BoolConstraint& bc, const Store& s) {
  Store out = s;
  auto whole = eval3(bc.expr, out);
  if (whole && !*whole) {
    // Definitely violated: empty the first referenced cell to signal failure.
    auto vars = referenced_vars(ConstraintExpr{bc});
    if (!vars.empty())
      out = out.replaced(static_cast<std::size_t>(vars.front()),
                         DomainValue::boolean({}));
    return out;
  }
  for (int v : referenced_vars(ConstraintExpr{bc})) {
    auto idx = static_cast<std::size_t>(v);
    if (cardinality_of(out.cell(idx)) != Cardinality::Many) continue;
    auto if_false = eval3(bc.expr, out, v, false);
    auto if_true = eval3(bc.expr, out, v, true);
    bool false_impossible = if_false && !*if_false;
    bool true_impossible = if_true && !*if_true;
    if (false_impossible && true_impossible)
      out = out.replaced(idx, DomainValue::boolean({}));
    else if (false_impossible)
      out = out.replaced(idx, DomainValue::boolean({1}));
    else if (true_impossible)
      out = out.replaced(idx, DomainValue::boolean({0}));
  }
  return out;
}

inline Store narrow_setrel(const SetRelConstraint& sr, const Store& s) {
  Store out = s;
  if (const auto* m = std::get_if<SetMember>(&sr.rel)) {
    auto idx = static_cast<std::size_t>(m->var);
    const auto& v = out.cell(idx).as<SetIntervalValue>();
    if (v.empty) return out;
    if (!std::binary_search(v.hi.begin(), v.hi.end(), m->element))
      return out.replaced(idx, DomainValue::empty_set_interval());
    return out.replaced(idx, DomainValue::set_interval(sorted_union(v.lo, {m->element}), v.hi));
  }
  if (const auto* sub = std::get_if<SetSubset>(&sr.rel)) {
    auto ia = static_cast<std::size_t>(sub->sub);
    auto ib = static_cast<std::size_t>(sub->super);
    const auto a = out.cell(ia).as<SetIntervalValue>();
    const auto b = out.cell(ib).as<SetIntervalValue>();
    if (a.empty || b.empty) return out;
    out = out.replaced(ia, DomainValue::set_interval(a.lo, sorted_intersection(a.hi, b.hi)));
    out = out.replaced(ib, DomainValue::set_interval(sorted_union(b.lo, a.lo), b.hi));
    return out;
  }
  const auto& k = std::get<SetCard>(sr.rel);
  auto idx = static_cast<std::size_t>(k.var);
  const auto& v = out.cell(idx).as<SetIntervalValue>();
  if (v.empty) return out;
  auto nlo = static_cast<std::int64_t>(v.lo.size());
  auto nhi = static_cast<std::int64_t>(v.hi.size());
  auto fail = [&] { return out.replaced(idx, DomainValue::empty_set_interval()); };
  switch (k.rel) {
    case LinRel::Le:
      if (nlo > k.bound) return fail();
      if (nlo == k.bound) return out.replaced(idx, DomainValue::set_interval(v.lo, v.lo));
      return out;
    case LinRel::Ge:
      if (nhi < k.bound) return fail();
      if (nhi == k.bound) return out.replaced(idx, DomainValue::set_interval(v.hi, v.hi));
      return out;
    case LinRel::Eq:
      if (nlo > k.bound || nhi < k.bound) return fail();
      if (nlo == k.bound) return out.replaced(idx, DomainValue::set_interval(v.lo, v.lo));
      if (nhi == k.bound) return out.replaced(idx, DomainValue::set_interval(v.hi, v.hi));
      return out;
    case LinRel::Ne:
      if (v.lo == v.hi && nlo == k.bound) return fail();
      return out;
  }
  return out;
}

}  // namespace detail

/// One contraction pass. The result is always <=_s the input, keeps every
/// solution of the constraint inside the input, and may come back
/// inconsistent to signal failure. Call repeatedly (see filtering) to
/// propagate to a fixpoint.
inline Store narrow(const ConstraintExpr& c, const Store& s, double eq_tolerance = 1e-9) {
  if (const auto* lin = std::get_if<LinearConstraint>(&c))
    return detail::narrow_linear(*lin, s, eq_tolerance);
  if (const auto* tab = std::get_if<TableConstraint>(&c)) return detail::narrow_table(*tab, s);
  if (const auto* bc = std::get_if<BoolConstraint>(&c)) return detail::narrow_bool(*bc, s);
  return detail::narrow_setrel(std::get<SetRelConstraint>(c), s);
}

}  // namespace branchkit

#endif  // BRANCHKIT_CONSTRAINT_HPP
