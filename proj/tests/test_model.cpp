#include <catch_amalgamated.hpp>

#include "branchkit/report.hpp"
#include "support/generators.hpp"

using namespace branchkit;

namespace {

const char* kAtMostOneModel = R"(# the three-variable 0/1 example
var x1 : int 0..1
var x2 : int 0..1
var x3 : int 0..1
constraint x1 + x2 + x3 <= 1
epsilon 0
filter consistency
select naive
)";

ParsedModel parse(const std::string& text) { return parse_model(text); }

}  // namespace

TEST_CASE("the at-most-one model parses and solves classically") {
  auto model = parse(kAtMostOneModel);
  CHECK(model.instance.variables.size() == 3);
  CHECK(model.instance.constraints.size() == 1);
  CHECK(model.config.cost.is_classical());
  CHECK(model.config.epsilon == 0.0);
  auto result = solve(model.instance, model.config);
  CHECK(result.stack.size() == 4);
}

TEST_CASE("every domain spec form parses") {
  auto model = parse(
      "var b : bool\n"
      "var i : int -2..7\n"
      "var e : enum {5,2,9}\n"
      "var s : set of {1,2,3}\n"
      "var r : real [0.25, 1.5]\n");
  const auto& vars = model.instance.variables;
  CHECK(vars[0].domain.kind == DomainKind::Bool);
  CHECK(vars[1].domain == DomainDescriptor::int_interval(-2, 7));
  CHECK(vars[2].domain == DomainDescriptor::finite_enum({2, 5, 9}));
  CHECK(vars[3].domain == DomainDescriptor::set_interval({1, 2, 3}));
  CHECK(vars[4].domain == DomainDescriptor::real_interval(0.25, 1.5));
}

TEST_CASE("every constraint form parses") {
  auto model = parse(
      "var a : bool\n"
      "var b : bool\n"
      "var x : int 0..3\n"
      "var s : set of {1,2}\n"
      "var t : set of {1,2}\n"
      "constraint 2*x - 1 <= 4\n"
      "constraint table (a,b) in {(0,1),(1,1)}\n"
      "constraint a or (not b and a)\n"
      "constraint 1 in s\n"
      "constraint s subseteq t\n"
      "constraint card(s) >= 1\n");
  const auto& cs = model.instance.constraints;
  REQUIRE(cs.size() == 6);
  CHECK(std::holds_alternative<LinearConstraint>(cs[0]));
  const auto& lin = std::get<LinearConstraint>(cs[0]);
  CHECK(lin.terms.size() == 1);
  CHECK(lin.terms[0].coeff == 2.0);
  CHECK(lin.rhs == 5.0);  // the constant moved across
  CHECK(std::holds_alternative<TableConstraint>(cs[1]));
  CHECK(std::holds_alternative<BoolConstraint>(cs[2]));
  CHECK(std::holds_alternative<SetRelConstraint>(cs[3]));
  CHECK(std::holds_alternative<SetRelConstraint>(cs[4]));
  CHECK(std::holds_alternative<SetRelConstraint>(cs[5]));
}

TEST_CASE("cost blocks parse with defaults derived from the ordering") {
  auto model = parse(
      "var x : int 0..1\n"
      "var y : int 0..1\n"
      "cost sum(x,y)\n"
      "order lt\n");
  CHECK(model.config.cost.components[0].vars == std::vector<int>{0, 1});
  CHECK(model.config.cost.initial_delta ==
        CostValue{{std::numeric_limits<double>::infinity()}});

  auto pair = parse(
      "var x : int 0..1\n"
      "var y : int 0..1\n"
      "cost pair(sum(x,y), sum(x))\n"
      "order lex(max,min)\n"
      "delta (-inf, inf)\n");
  CHECK(pair.config.cost.components.size() == 2);
  CHECK(pair.config.cost.initial_delta.parts[0] == -std::numeric_limits<double>::infinity());
  CHECK(pair.config.cost.initial_delta.parts[1] == std::numeric_limits<double>::infinity());

  auto bare = parse(
      "var x : int 0..1\n"
      "var s : set of {1}\n"
      "cost sum\n"
      "order gt\n");
  CHECK(bare.config.cost.components[0].vars == std::vector<int>{0});  // sets excluded
}

TEST_CASE("diagnostics carry line positions and name the offender") {
  auto expect_error = [](const std::string& text, int line, const std::string& needle) {
    try {
      parse_model(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("var x : int 0..1\nconstraint x + y <= 1\n", 2, "unknown variable 'y'");
  expect_error("var x : int 1..0\n", 1, "lo > hi");
  expect_error("var x : int 0..1\nvar x : bool\n", 2, "duplicate variable 'x'");
  expect_error("var x : float 0..1\n", 1, "unknown domain");
  expect_error("var x : int 0..1\nconstraint x <=\n", 2, "expected");
  expect_error("var x : int 0..1\ncost sum(x)\n", 2, "without an order");
  expect_error("var x : int 0..1\norder lt\n", 2, "without a cost");
  expect_error("bogus directive\n", 1, "unknown directive");
  expect_error("var s : set of {1}\nconstraint card(s) <= 1\ncost sum(s)\norder lt\n", 4,
               "set-valued");
}

TEST_CASE("an empty constraint list solves to the whole product") {
  auto model = parse("var a : bool\nvar b : bool\n");
  auto result = solve(model.instance, model.config);
  CHECK(result.stack.size() == 4);
}

TEST_CASE("parse -> print -> parse is the identity", "[property]") {
  std::vector<std::string> models = {
      kAtMostOneModel,
      "var b : bool\nvar c : bool\nconstraint b or (not c and b)\n",
      "var x : int -3..5\nvar y : enum {1,4,9}\nconstraint 2*x - 3*y != 0\n"
      "cost pair(sum(x,y), constant 2.5)\norder comp(min,max)\ndelta (inf,-inf)\n"
      "epsilon 0.5\nfilter fixpoint 500\nselect ff\nstack top\n",
      "var s : set of {1,2,3}\nvar t : set of {1,2,3}\n"
      "constraint 1 in s\nconstraint s subseteq t\nconstraint card(t) <= 2\n",
      "var r : real [0,1]\nvar q : real [-2.5,2.5]\nconstraint r + q = 0.5\n"
      "cost sum(r,q)\norder lt\nepsilon 0.125\ntolerance 1e-06\n",
      "var x : int 0..2\nconstraint table (x) in {(0),(2)}\n",
  };
  for (const auto& text : models) {
    auto first = parse(text);
    auto printed = print_model(first.instance, first.config);
    auto second = parse(printed);
    CHECK(second.instance == first.instance);
    CHECK(print_model(second.instance, second.config) == printed);
    CHECK(second.config.epsilon == first.config.epsilon);
    CHECK(second.config.cost == first.config.cost);
    CHECK(second.config.filtering == first.config.filtering);
    CHECK(second.config.selector == first.config.selector);
    CHECK(second.config.keep_full_stack == first.config.keep_full_stack);
    CHECK(second.config.eq_tolerance == first.config.eq_tolerance);
  }
}

TEST_CASE("reports are deterministic and reconstructible") {
  auto model = parse(kAtMostOneModel);
  auto r1 = solve(model.instance, model.config);
  auto r2 = solve(model.instance, model.config);
  CHECK(report_text(model.instance, model.config, r1) ==
        report_text(model.instance, model.config, r2));
  auto j1 = report_json(model.instance, model.config, r1);
  auto j2 = report_json(model.instance, model.config, r2);
  CHECK(j1.dump(2) == j2.dump(2));

  auto rebuilt = stack_from_report(j1);
  REQUIRE(rebuilt.size() == r1.stack.size());
  for (std::size_t i = 0; i < rebuilt.size(); ++i) CHECK(rebuilt.at(i) == r1.stack.at(i));

  auto text = report_text(model.instance, model.config, r1);
  CHECK(text.find("(x1=0, x2=0, x3=0) cost=1") != std::string::npos);
  CHECK(text.find("top\n") != std::string::npos);
  CHECK(text.find("delta=1") != std::string::npos);
  CHECK(text.find("nodes=") != std::string::npos);
}

TEST_CASE("trace text labels the root and its children") {
  auto model = parse(kAtMostOneModel);
  auto cfg = model.config;
  cfg.trace = true;
  auto result = solve(model.instance, cfg);
  auto text = trace_text(model.instance, result);
  CHECK(text.find("path=eps p=top") != std::string::npos);
  CHECK(text.find("outcome=branched k=2") != std::string::npos);
  CHECK(text.find("path=1.1.1") != std::string::npos);
  CHECK(text.find("outcome=pushed") != std::string::npos);
}
