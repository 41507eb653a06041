#include <catch_amalgamated.hpp>

#include <random>

#include "support/generators.hpp"

using namespace branchkit;

namespace {

CSPInstance bool_or_and() {
  // x or (y and z) over three booleans
  std::vector<Variable> vars = {{"x", DomainDescriptor::boolean()},
                                {"y", DomainDescriptor::boolean()},
                                {"z", DomainDescriptor::boolean()}};
  auto expr = BoolExpr::make_or(
      BoolExpr::make_var(0), BoolExpr::make_and(BoolExpr::make_var(1), BoolExpr::make_var(2)));
  return CSPInstance{vars, {BoolConstraint{expr}}, {}};
}

Store bools(std::vector<std::vector<std::int64_t>> cells) {
  std::vector<DomainValue> vs;
  for (auto& c : cells) vs.push_back(DomainValue::boolean(std::move(c)));
  return Store(std::move(vs));
}

Store ints(std::vector<std::pair<std::int64_t, std::int64_t>> cells) {
  std::vector<DomainValue> vs;
  for (auto& [lo, hi] : cells) vs.push_back(DomainValue::int_interval(lo, hi));
  return Store(std::move(vs));
}

LinearConstraint sum_leq(std::vector<int> vars, double rhs) {
  LinearConstraint lin;
  for (int v : vars) lin.terms.push_back({1.0, v});
  lin.rel = LinRel::Le;
  lin.rhs = rhs;
  return lin;
}

}  // namespace

TEST_CASE("eval_on_singleton on the worked boolean constraint") {
  auto inst = bool_or_and();
  const auto& c = inst.constraints[0];
  CHECK(eval_on_singleton(c, bools({{1}, {0}, {0}})));
  CHECK(!eval_on_singleton(c, bools({{0}, {0}, {0}})));
  CHECK(eval_on_singleton(c, bools({{0}, {1}, {1}})));
  CHECK_THROWS_AS(eval_on_singleton(c, bools({{0, 1}, {0}, {0}})), std::invalid_argument);
}

TEST_CASE("eval_on_singleton on linear constraints over intervals") {
  ConstraintExpr c = sum_leq({0, 1, 2}, 1.0);
  CHECK(eval_on_singleton(c, ints({{0, 0}, {0, 0}, {1, 1}})));
  CHECK(!eval_on_singleton(c, ints({{1, 1}, {1, 1}, {0, 0}})));
  CHECK_THROWS_AS(eval_on_singleton(c, ints({{0, 1}, {0, 0}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("eval_on_singleton respects the = tolerance on reals") {
  LinearConstraint eq;
  eq.terms = {{1.0, 0}};
  eq.rel = LinRel::Eq;
  eq.rhs = 0.5;
  Store s({DomainValue::real_interval(0.5 + 5e-10, 0.5 + 5e-10)});
  CHECK(eval_on_singleton(eq, s));          // inside the default 1e-9 band
  CHECK(!eval_on_singleton(eq, s, 1e-12));  // outside a tighter band
}

TEST_CASE("possibly_satisfiable is never wrongly false on the at-most-one constraint") {
  ConstraintExpr c = sum_leq({0, 1, 2}, 1.0);
  CHECK(possibly_satisfiable(c, ints({{0, 1}, {0, 1}, {0, 1}})));
  CHECK(!possibly_satisfiable(c, ints({{1, 1}, {1, 1}, {0, 1}})));  // min sum is 2
  auto inconsistent = ints({{0, 1}, {0, 1}, {0, 1}}).replaced(1, DomainValue::empty_int_interval());
  CHECK(!possibly_satisfiable(c, inconsistent));
}

TEST_CASE("narrow tightens linear bounds to the enumeration result") {
  ConstraintExpr c = sum_leq({0, 1}, 0.0);
  auto out = narrow(c, ints({{0, 1}, {0, 1}}));
  CHECK(out == ints({{0, 0}, {0, 0}}));
}

TEST_CASE("narrow drops unsupported extensional values") {
  TableConstraint tab;
  tab.vars = {0, 1};
  tab.tuples = {{0, 1}, {1, 1}};
  auto out = narrow(tab, bools({{0, 1}, {0, 1}}));
  CHECK(out == bools({{0, 1}, {1}}));
}

TEST_CASE("narrow is the identity at its own fixpoint") {
  ConstraintExpr c = sum_leq({0, 1}, 0.0);
  auto fixed = ints({{0, 0}, {0, 0}});
  CHECK(narrow(c, fixed) == fixed);
  TableConstraint tab;
  tab.vars = {0, 1};
  tab.tuples = {{0, 1}, {1, 1}};
  auto bfixed = bools({{0, 1}, {1}});
  CHECK(narrow(tab, bfixed) == bfixed);
}

TEST_CASE("boolean narrowing propagates forced values") {
  auto inst = bool_or_and();
  const auto& c = inst.constraints[0];
  // x=0 forces y and z
  auto out = narrow(c, bools({{0}, {0, 1}, {0, 1}}));
  CHECK(out == bools({{0}, {1}, {1}}));
  // nothing forced while x is open
  CHECK(narrow(c, bools({{0, 1}, {0, 1}, {0, 1}})) == bools({{0, 1}, {0, 1}, {0, 1}}));
  // definite violation empties a cell
  auto violated = narrow(c, bools({{0}, {0}, {0, 1}}));
  CHECK(!violated.consistent());
}

TEST_CASE("inequality narrows only singleton-forced removals") {
  LinearConstraint ne;
  ne.terms = {{1.0, 0}, {1.0, 1}};
  ne.rel = LinRel::Ne;
  ne.rhs = 1.0;
  // other cell fixed at 1: the forbidden value 0 is an endpoint, so it goes
  auto out = narrow(ne, ints({{0, 1}, {1, 1}}));
  CHECK(out == ints({{1, 1}, {1, 1}}));
  // forbidden value interior to an interval: sound to keep
  auto mid = narrow(ne, ints({{-1, 1}, {1, 1}}));
  CHECK(mid == ints({{-1, 1}, {1, 1}}));
  // enum cells can drop interior values
  LinearConstraint ne1;
  ne1.terms = {{1.0, 0}};
  ne1.rel = LinRel::Ne;
  ne1.rhs = 1.0;
  Store en({DomainValue::finite({0, 1, 2})});
  CHECK(narrow(ne1, en) == Store({DomainValue::finite({0, 2})}));
}

TEST_CASE("set relations: satisfaction, satisfiability, narrowing") {
  std::vector<Variable> vars = {{"a", DomainDescriptor::set_interval({1, 2, 3})},
                                {"b", DomainDescriptor::set_interval({1, 2, 3})}};
  auto cell = [](std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) {
    return DomainValue::set_interval(std::move(lo), std::move(hi));
  };

  SECTION("membership") {
    ConstraintExpr c = SetRelConstraint{SetMember{2, 0}};
    Store s({cell({}, {1, 2}), cell({}, {1, 2, 3})});
    CHECK(possibly_satisfiable(c, s));
    auto out = narrow(c, s);
    CHECK(out.cell(0) == cell({2}, {1, 2}));
    Store gone({cell({}, {1, 3}), cell({}, {1, 2, 3})});
    CHECK(!possibly_satisfiable(c, gone));
    CHECK(!narrow(c, gone).consistent());
    CHECK(eval_on_singleton(c, Store({cell({2}, {2}), cell({}, {})})));
    CHECK(!eval_on_singleton(c, Store({cell({1}, {1}), cell({}, {})})));
  }
  SECTION("subset") {
    ConstraintExpr c = SetRelConstraint{SetSubset{0, 1}};
    Store s({cell({1}, {1, 2, 3}), cell({}, {1, 2})});
    auto out = narrow(c, s);
    CHECK(out.cell(0) == cell({1}, {1, 2}));  // 3 cannot appear in a
    CHECK(out.cell(1) == cell({1}, {1, 2}));  // 1 must appear in b
    CHECK(eval_on_singleton(c, Store({cell({1}, {1}), cell({1, 2}, {1, 2})})));
    CHECK(!eval_on_singleton(c, Store({cell({3}, {3}), cell({1}, {1})})));
  }
  SECTION("cardinality") {
    ConstraintExpr le = SetRelConstraint{SetCard{0, LinRel::Le, 1}};
    Store s({cell({1}, {1, 2, 3}), cell({}, {})});
    auto out = narrow(le, s);
    CHECK(out.cell(0) == cell({1}, {1}));  // at the bound: pinned to the lower set
    ConstraintExpr ge = SetRelConstraint{SetCard{0, LinRel::Ge, 3}};
    auto out2 = narrow(ge, s);
    CHECK(out2.cell(0) == cell({1, 2, 3}, {1, 2, 3}));
    ConstraintExpr impossible = SetRelConstraint{SetCard{0, LinRel::Ge, 4}};
    CHECK(!possibly_satisfiable(impossible, s));
    CHECK(!narrow(impossible, s).consistent());
  }
}

TEST_CASE("narrowing properties against the enumeration oracle", "[property]") {
  bktest::Rng rng(1234);
  int checked = 0;
  for (int round = 0; round < 250; ++round) {
    auto inst = bktest::random_finite_csp(rng);
    if (inst.constraints.empty()) continue;
    auto s = bktest::random_substore(rng, inst);
    for (const auto& c : inst.constraints) {
      // tuples inside s satisfying just this constraint
      CSPInstance only_c{inst.variables, {c}, s};
      auto sat = s.consistent() ? enumerate_solutions(only_c).solutions : std::vector<Store>{};
      // soundness of the pruning test
      if (!possibly_satisfiable(c, s)) CHECK(sat.empty());
      if (!s.consistent()) continue;
      auto narrowed = narrow(c, s);
      CHECK(store_leq(narrowed, s));  // contractance
      for (const auto& r : sat) {     // solution preservation
        CHECK(store_leq(r, narrowed));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);  // the suite actually exercised preservation
}
