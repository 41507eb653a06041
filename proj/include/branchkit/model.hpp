#ifndef BRANCHKIT_MODEL_HPP
#define BRANCHKIT_MODEL_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchkit/constraint.hpp"
#include "branchkit/engine.hpp"

namespace branchkit {

/// Line-anchored diagnostic for a model file.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct ParsedModel {
  CSPInstance instance;
  SolverConfig config;
};

namespace modeldetail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_str(std::string_view s) {
    skip_ws();
    if (text.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, static_cast<int>(pos) + 1, msg);
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  std::optional<std::string> try_ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_'))
      return std::nullopt;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  std::string ident(const char* what) {
    auto id = try_ident();
    if (!id) fail(std::string("expected ") + what);
    return *id;
  }

  std::optional<double> try_number() {
    skip_ws();
    std::size_t start = pos;
    std::size_t p = pos;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
    if (text.substr(p, 3) == "inf") {
      pos = p + 3;
      double v = std::numeric_limits<double>::infinity();
      return text[start] == '-' ? -v : v;
    }
    bool digits = false;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      ++p;
      digits = true;
    }
    if (p < text.size() && text[p] == '.' && !(p + 1 < text.size() && text[p + 1] == '.')) {
      ++p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
        ++p;
        digits = true;
      }
    }
    if (!digits) return std::nullopt;
    if (p < text.size() && (text[p] == 'e' || text[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text.size() && (text[q] == '+' || text[q] == '-')) ++q;
      if (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) {
        ++q;
        while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
        p = q;
      }
    }
    double value = 0.0;
    auto res = std::from_chars(text.data() + start, text.data() + p, value);
    if (res.ec != std::errc{}) return std::nullopt;
    pos = p;
    return value;
  }
  double number(const char* what) {
    auto v = try_number();
    if (!v) fail(std::string("expected ") + what);
    return *v;
  }
  std::int64_t integer(const char* what) {
    skip_ws();
    auto save = pos;
    double v = number(what);
    auto iv = static_cast<std::int64_t>(v);
    if (static_cast<double>(iv) != v) {
      pos = save;
      fail(std::string("expected integer ") + what);
    }
    return iv;
  }

  std::vector<std::int64_t> int_set(const char* what) {
    expect('{', what);
    std::vector<std::int64_t> out;
    if (!eat('}')) {
      out.push_back(integer("set element"));
      while (eat(',')) out.push_back(integer("set element"));
      expect('}', "closing the set");
    }
    return out;
  }
};

struct ModelBuilder {
  std::vector<Variable> variables;
  std::map<std::string, int, std::less<>> index;
  std::vector<ConstraintExpr> constraints;
  SolverConfig config;
  bool saw_cost = false, saw_order = false, saw_delta = false;
  int cost_line = 0;

  int var_index(Cursor& c, const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) c.fail("unknown variable '" + name + "'");
    return it->second;
  }
  const DomainDescriptor& domain_of(int v) const {
    return variables[static_cast<std::size_t>(v)].domain;
  }
};

// --- constraint parsing ----------------------------------------------------

inline std::optional<LinRel> try_rel(Cursor& c) {
  if (c.eat_str("<=")) return LinRel::Le;
  if (c.eat_str(">=")) return LinRel::Ge;
  if (c.eat_str("!=")) return LinRel::Ne;
  if (c.eat_str("==")) return LinRel::Eq;
  if (c.eat('=')) return LinRel::Eq;
  return std::nullopt;
}

/// expr := [sign] term ((+|-) term)*;  term := NUMBER [* IDENT] | IDENT
struct LinSide {
  std::vector<std::pair<int, double>> coeffs;  // in first-appearance order
  double constant = 0.0;
};

inline LinSide parse_lin_side(Cursor& c, ModelBuilder& b) {
  LinSide side;
  auto add = [&](int var, double coeff) {
    for (auto& [v, k] : side.coeffs)
      if (v == var) {
        k += coeff;
        return;
      }
    side.coeffs.emplace_back(var, coeff);
  };
  double sign = 1.0;
  if (c.eat('-')) sign = -1.0;
  else c.eat('+');
  while (true) {
    if (auto num = c.try_number()) {
      if (c.eat('*')) {
        auto name = c.ident("variable after '*'");
        add(b.var_index(c, name), sign * *num);
      } else {
        side.constant += sign * *num;
      }
    } else {
      auto name = c.ident("variable or number");
      add(b.var_index(c, name), sign);
    }
    if (c.eat('+')) sign = 1.0;
    else if (c.eat('-')) sign = -1.0;
    else break;
  }
  return side;
}

inline ConstraintExpr parse_linear(Cursor& c, ModelBuilder& b) {
  LinSide lhs = parse_lin_side(c, b);
  auto rel = try_rel(c);
  if (!rel) c.fail("expected a relation (<=, >=, =, !=)");
  LinSide rhs = parse_lin_side(c, b);
  LinearConstraint lin;
  lin.rel = *rel;
  lin.rhs = rhs.constant - lhs.constant;
  std::vector<std::pair<int, double>> merged = lhs.coeffs;
  for (auto& [v, k] : rhs.coeffs) {
    bool found = false;
    for (auto& [mv, mk] : merged)
      if (mv == v) {
        mk -= k;
        found = true;
        break;
      }
    if (!found) merged.emplace_back(v, -k);
  }
  for (auto& [v, k] : merged)
    if (k != 0.0) lin.terms.push_back({k, v});
  if (lin.terms.empty()) c.fail("constraint references no variables");
  if (!c.done()) c.fail("trailing input after constraint");
  return lin;
}

inline ConstraintExpr parse_table(Cursor& c, ModelBuilder& b) {
  TableConstraint tab;
  c.expect('(', "before the variable list");
  tab.vars.push_back(b.var_index(c, c.ident("variable")));
  while (c.eat(',')) tab.vars.push_back(b.var_index(c, c.ident("variable")));
  c.expect(')', "after the variable list");
  if (!c.eat_str("in")) c.fail("expected 'in' after the variable list");
  c.expect('{', "before the tuple list");
  if (!c.eat('}')) {
    do {
      c.expect('(', "before a tuple");
      std::vector<std::int64_t> row;
      row.push_back(c.integer("tuple value"));
      while (c.eat(',')) row.push_back(c.integer("tuple value"));
      c.expect(')', "after a tuple");
      if (row.size() != tab.vars.size()) c.fail("tuple arity mismatch");
      tab.tuples.push_back(std::move(row));
    } while (c.eat(','));
    c.expect('}', "closing the tuple list");
  }
  if (!c.done()) c.fail("trailing input after constraint");
  return tab;
}

inline BoolExprPtr parse_bool_or(Cursor& c, ModelBuilder& b);

inline BoolExprPtr parse_bool_atom(Cursor& c, ModelBuilder& b) {
  if (c.eat('(')) {
    auto e = parse_bool_or(c, b);
    c.expect(')', "closing a boolean group");
    return e;
  }
  auto save_pos = c.pos;
  auto name = c.ident("boolean variable");
  if (name == "not") return BoolExpr::make_not(parse_bool_atom(c, b));
  int v = -1;
  {
    auto it = b.index.find(name);
    if (it == b.index.end()) {
      c.pos = save_pos;
      c.fail("unknown variable '" + name + "'");
    }
    v = it->second;
  }
  if (b.domain_of(v).kind != DomainKind::Bool) {
    c.pos = save_pos;
    c.fail("variable '" + name + "' is not boolean");
  }
  return BoolExpr::make_var(v);
}

inline BoolExprPtr parse_bool_and(Cursor& c, ModelBuilder& b) {
  auto e = parse_bool_atom(c, b);
  while (true) {
    auto save = c.pos;
    auto word = c.try_ident();
    if (word && *word == "and") {
      e = BoolExpr::make_and(e, parse_bool_atom(c, b));
    } else {
      c.pos = save;
      return e;
    }
  }
}

inline BoolExprPtr parse_bool_or(Cursor& c, ModelBuilder& b) {
  auto e = parse_bool_and(c, b);
  while (true) {
    auto save = c.pos;
    auto word = c.try_ident();
    if (word && *word == "or") {
      e = BoolExpr::make_or(e, parse_bool_and(c, b));
    } else {
      c.pos = save;
      return e;
    }
  }
}

inline bool contains_rel_char(std::string_view s) {
  for (char ch : s)
    if (ch == '<' || ch == '>' || ch == '=') return true;
  return false;
}

inline ConstraintExpr parse_constraint(Cursor& c, ModelBuilder& b) {
  auto save = c.pos;
  auto head = c.try_ident();
  if (head && *head == "table") return parse_table(c, b);
  if (head && *head == "card" && c.peek() == '(') {
    c.expect('(', "after card");
    int v = b.var_index(c, c.ident("set variable"));
    c.expect(')', "after the set variable");
    auto rel = try_rel(c);
    if (!rel) c.fail("expected a relation after card(...)");
    auto bound = c.integer("cardinality bound");
    if (!c.done()) c.fail("trailing input after constraint");
    return SetRelConstraint{SetCard{v, *rel, bound}};
  }
  if (head) {
    // IDENT 'subseteq' IDENT is the only keyword-relation form.
    auto word = c.try_ident();
    if (word && *word == "subseteq") {
      auto it = b.index.find(*head);
      if (it == b.index.end()) c.fail("unknown variable '" + *head + "'");
      int sub = it->second;
      int super = b.var_index(c, c.ident("set variable"));
      if (!c.done()) c.fail("trailing input after constraint");
      return SetRelConstraint{SetSubset{sub, super}};
    }
  } else {
    // `K in v` membership.
    c.pos = save;
    if (auto num = c.try_number()) {
      auto word = c.try_ident();
      if (word && *word == "in") {
        auto iv = static_cast<std::int64_t>(*num);
        if (static_cast<double>(iv) != *num) c.fail("set member must be an integer");
        int v = b.var_index(c, c.ident("set variable"));
        if (!c.done()) c.fail("trailing input after constraint");
        return SetRelConstraint{SetMember{iv, v}};
      }
    }
  }
  c.pos = save;
  // Relational lines are linear; everything else is a boolean formula.
  if (contains_rel_char(c.text)) return parse_linear(c, b);
  auto expr = parse_bool_or(c, b);
  if (!c.done()) c.fail("trailing input after constraint");
  return BoolConstraint{expr};
}

// --- cost / ordering / config parsing ---------------------------------------

inline CostExpr parse_cost_component(Cursor& c, ModelBuilder& b) {
  auto word = c.ident("cost expression (constant or sum)");
  if (word == "constant") return CostExpr::make_constant(c.number("constant value"));
  if (word == "sum") {
    std::vector<int> vars;
    if (c.eat('(')) {
      vars.push_back(b.var_index(c, c.ident("variable")));
      while (c.eat(',')) vars.push_back(b.var_index(c, c.ident("variable")));
      c.expect(')', "after the variable list");
    } else {
      // bare `sum`: every numeric variable, in declaration order
      for (std::size_t i = 0; i < b.variables.size(); ++i)
        if (b.variables[i].domain.kind != DomainKind::SetInterval)
          vars.push_back(static_cast<int>(i));
    }
    return CostExpr::make_sum(std::move(vars));
  }
  c.fail("unknown cost expression '" + word + "'");
}

inline std::vector<CostExpr> parse_cost(Cursor& c, ModelBuilder& b) {
  auto save = c.pos;
  auto word = c.try_ident();
  if (word && *word == "pair") {
    c.expect('(', "after pair");
    auto first = parse_cost_component(c, b);
    c.expect(',', "between pair components");
    auto second = parse_cost_component(c, b);
    c.expect(')', "after pair");
    return {first, second};
  }
  c.pos = save;
  return {parse_cost_component(c, b)};
}

inline std::vector<Direction> parse_directions(Cursor& c) {
  std::vector<Direction> dirs;
  c.expect('(', "before the direction list");
  do {
    auto d = c.ident("direction (min or max)");
    if (d == "min") dirs.push_back(Direction::Minimise);
    else if (d == "max") dirs.push_back(Direction::Maximise);
    else c.fail("direction must be min or max");
  } while (c.eat(','));
  c.expect(')', "after the direction list");
  return dirs;
}

inline CostOrdering parse_ordering(Cursor& c) {
  auto word = c.ident("ordering (eq, lt, gt, lex, comp)");
  if (word == "eq") return CostOrdering::eq();
  if (word == "lt") return CostOrdering::lt();
  if (word == "gt") return CostOrdering::gt();
  if (word == "lex") return CostOrdering::lex(parse_directions(c));
  if (word == "comp") return CostOrdering::comp(parse_directions(c));
  c.fail("unknown ordering '" + word + "'");
}

inline CostValue parse_delta(Cursor& c) {
  CostValue v;
  if (c.eat('(')) {
    v.parts.push_back(c.number("delta component"));
    while (c.eat(',')) v.parts.push_back(c.number("delta component"));
    c.expect(')', "after delta");
  } else {
    v.parts.push_back(c.number("delta value"));
  }
  return v;
}

inline void parse_var_decl(Cursor& c, ModelBuilder& b) {
  auto name = c.ident("variable name");
  if (b.index.count(name)) c.fail("duplicate variable '" + name + "'");
  c.expect(':', "after the variable name");
  auto kind = c.ident("domain (bool, int, enum, set, real)");
  DomainDescriptor dom;
  if (kind == "bool") {
    dom = DomainDescriptor::boolean();
  } else if (kind == "int") {
    auto lo = c.integer("lower bound");
    if (!c.eat_str("..")) c.fail("expected '..' in the int range");
    auto hi = c.integer("upper bound");
    if (lo > hi) c.fail("int range with lo > hi");
    dom = DomainDescriptor::int_interval(lo, hi);
  } else if (kind == "enum") {
    auto vals = c.int_set("enum values");
    if (vals.empty()) c.fail("enum domain needs at least one value");
    dom = DomainDescriptor::finite_enum(std::move(vals));
  } else if (kind == "set") {
    if (!c.eat_str("of")) c.fail("expected 'of' after set");
    dom = DomainDescriptor::set_interval(c.int_set("ground set"));
  } else if (kind == "real") {
    c.expect('[', "before the real bounds");
    auto lo = c.number("lower bound");
    c.expect(',', "between the real bounds");
    auto hi = c.number("upper bound");
    c.expect(']', "after the real bounds");
    if (!(lo <= hi)) c.fail("real range with lo > hi");
    dom = DomainDescriptor::real_interval(lo, hi);
  } else {
    c.fail("unknown domain '" + kind + "'");
  }
  if (!c.done()) c.fail("trailing input after variable declaration");
  b.index.emplace(name, static_cast<int>(b.variables.size()));
  b.variables.push_back(Variable{name, std::move(dom)});
}

}  // namespace modeldetail

inline ParsedModel parse_model(std::string_view text) {
  using namespace modeldetail;
  ModelBuilder b;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Cursor c{raw, 0, line_no};
    if (c.done()) continue;
    auto word = c.ident("directive");
    if (word == "var") {
      parse_var_decl(c, b);
    } else if (word == "constraint") {
      b.constraints.push_back(parse_constraint(c, b));
    } else if (word == "cost") {
      if (b.saw_cost) c.fail("duplicate cost directive");
      b.config.cost.components = parse_cost(c, b);
      b.saw_cost = true;
      b.cost_line = line_no;
      if (!c.done()) c.fail("trailing input after cost");
    } else if (word == "order") {
      if (b.saw_order) c.fail("duplicate order directive");
      b.config.cost.ordering = parse_ordering(c);
      b.saw_order = true;
      if (!c.done()) c.fail("trailing input after order");
    } else if (word == "delta") {
      if (b.saw_delta) c.fail("duplicate delta directive");
      b.config.cost.initial_delta = parse_delta(c);
      b.saw_delta = true;
      if (!c.done()) c.fail("trailing input after delta");
    } else if (word == "epsilon") {
      b.config.epsilon = c.number("epsilon value");
      if (b.config.epsilon < 0.0) c.fail("epsilon must be non-negative");
      if (!c.done()) c.fail("trailing input after epsilon");
    } else if (word == "filter") {
      auto f = c.ident("filter kind (consistency or fixpoint)");
      if (f == "consistency") {
        b.config.filtering = FilteringKind::consistency();
      } else if (f == "fixpoint") {
        int rounds = 10000;
        if (auto n = c.try_number()) rounds = static_cast<int>(*n);
        if (rounds < 1) c.fail("fixpoint rounds must be positive");
        b.config.filtering = FilteringKind::fixpoint(rounds);
      } else {
        c.fail("unknown filter '" + f + "'");
      }
      if (!c.done()) c.fail("trailing input after filter");
    } else if (word == "select") {
      auto s = c.ident("selector (naive or ff)");
      if (s == "naive") b.config.selector = SelectorKind::Naive;
      else if (s == "ff") b.config.selector = SelectorKind::FirstFail;
      else c.fail("unknown selector '" + s + "'");
      if (!c.done()) c.fail("trailing input after select");
    } else if (word == "stack") {
      auto s = c.ident("stack policy (full or top)");
      if (s == "full") b.config.keep_full_stack = true;
      else if (s == "top") b.config.keep_full_stack = false;
      else c.fail("unknown stack policy '" + s + "'");
      if (!c.done()) c.fail("trailing input after stack");
    } else if (word == "tolerance") {
      b.config.eq_tolerance = c.number("tolerance value");
      if (!(b.config.eq_tolerance >= 0.0)) c.fail("tolerance must be non-negative");
      if (!c.done()) c.fail("trailing input after tolerance");
    } else {
      c.fail("unknown directive '" + word + "'");
    }
  }

  if (b.saw_order && !b.saw_cost)
    throw ParseError(line_no, 1, "order directive without a cost directive");
  if (b.saw_cost && !b.saw_order)
    throw ParseError(b.cost_line, 1, "cost directive without an order directive");
  if (!b.saw_cost) {
    b.config.cost = CostSpec::classical();
  } else if (!b.saw_delta) {
    b.config.cost.initial_delta =
        default_delta(b.config.cost.ordering, b.config.cost.components);
  }

  ParsedModel out{CSPInstance{std::move(b.variables), std::move(b.constraints), {}},
                  std::move(b.config)};
  try {
    validate_instance(out.instance);
    validate_config(out.instance, out.config);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, 1, e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing: the canonical text form; parse(print_model(...)) reproduces the
// instance and configuration exactly.

namespace modeldetail {

inline std::string print_domain(const DomainDescriptor& d) {
  switch (d.kind) {
    case DomainKind::Bool: return "bool";
    case DomainKind::FiniteEnum: {
      std::string out = "enum {";
      for (std::size_t i = 0; i < d.universe.size(); ++i) {
        if (i) out += ",";
        out += format_int(d.universe[i]);
      }
      return out + "}";
    }
    case DomainKind::IntInterval:
      return "int " + format_int(d.int_lo) + ".." + format_int(d.int_hi);
    case DomainKind::SetInterval: {
      std::string out = "set of {";
      for (std::size_t i = 0; i < d.universe.size(); ++i) {
        if (i) out += ",";
        out += format_int(d.universe[i]);
      }
      return out + "}";
    }
    case DomainKind::RealInterval:
      return "real [" + format_double(d.real_lo) + "," + format_double(d.real_hi) + "]";
    case DomainKind::LatticeInterval:
      throw std::invalid_argument("lattice domains have no textual form");
  }
  return "?";
}

inline std::string print_bool_expr(const BoolExprPtr& e, const CSPInstance& inst) {
  switch (e->op) {
    case BoolExpr::Op::Var: return inst.variables[static_cast<std::size_t>(e->var)].name;
    case BoolExpr::Op::Not: return "not " + print_bool_expr(e->lhs, inst);
    case BoolExpr::Op::And:
      return "(" + print_bool_expr(e->lhs, inst) + " and " + print_bool_expr(e->rhs, inst) + ")";
    case BoolExpr::Op::Or:
      return "(" + print_bool_expr(e->lhs, inst) + " or " + print_bool_expr(e->rhs, inst) + ")";
  }
  return "?";
}

inline std::string print_constraint(const ConstraintExpr& c, const CSPInstance& inst) {
  auto name = [&](int v) { return inst.variables[static_cast<std::size_t>(v)].name; };
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    std::string out;
    for (std::size_t i = 0; i < lin->terms.size(); ++i) {
      const auto& t = lin->terms[i];
      double k = t.coeff;
      if (i == 0) {
        if (k < 0) out += "-";
      } else {
        out += k < 0 ? " - " : " + ";
      }
      double mag = k < 0 ? -k : k;
      if (mag != 1.0) out += format_double(mag) + "*";
      out += name(t.var);
    }
    out += std::string(" ") + rel_symbol(lin->rel) + " " + format_double(lin->rhs);
    return out;
  }
  if (const auto* tab = std::get_if<TableConstraint>(&c)) {
    std::string out = "table (";
    for (std::size_t i = 0; i < tab->vars.size(); ++i) {
      if (i) out += ",";
      out += name(tab->vars[i]);
    }
    out += ") in {";
    for (std::size_t r = 0; r < tab->tuples.size(); ++r) {
      if (r) out += ",";
      out += "(";
      for (std::size_t i = 0; i < tab->tuples[r].size(); ++i) {
        if (i) out += ",";
        out += format_int(tab->tuples[r][i]);
      }
      out += ")";
    }
    return out + "}";
  }
  if (const auto* bc = std::get_if<BoolConstraint>(&c)) return print_bool_expr(bc->expr, inst);
  const auto& sr = std::get<SetRelConstraint>(c);
  if (const auto* m = std::get_if<SetMember>(&sr.rel))
    return format_int(m->element) + " in " + name(m->var);
  if (const auto* sub = std::get_if<SetSubset>(&sr.rel))
    return name(sub->sub) + " subseteq " + name(sub->super);
  const auto& k = std::get<SetCard>(sr.rel);
  return "card(" + name(k.var) + ") " + rel_symbol(k.rel) + " " + format_int(k.bound);
}

inline std::string print_cost_expr(const CostExpr& e, const CSPInstance& inst) {
  if (e.kind == CostExpr::Kind::Constant) return "constant " + format_double(e.constant);
  std::string out = "sum(";
  for (std::size_t i = 0; i < e.vars.size(); ++i) {
    if (i) out += ",";
    out += inst.variables[static_cast<std::size_t>(e.vars[i])].name;
  }
  return out + ")";
}

inline std::string print_ordering(const CostOrdering& o) {
  switch (o.kind) {
    case CostOrdering::Kind::Eq: return "eq";
    case CostOrdering::Kind::Lt: return "lt";
    case CostOrdering::Kind::Gt: return "gt";
    case CostOrdering::Kind::Lexicographic:
    case CostOrdering::Kind::Componentwise: {
      std::string out = o.kind == CostOrdering::Kind::Lexicographic ? "lex(" : "comp(";
      for (std::size_t i = 0; i < o.directions.size(); ++i) {
        if (i) out += ",";
        out += o.directions[i] == Direction::Minimise ? "min" : "max";
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace modeldetail

inline std::string print_model(const CSPInstance& inst, const SolverConfig& cfg) {
  using namespace modeldetail;
  std::string out;
  for (const auto& v : inst.variables)
    out += "var " + v.name + " : " + print_domain(v.domain) + "\n";
  for (const auto& c : inst.constraints)
    out += "constraint " + print_constraint(c, inst) + "\n";
  const auto& cost = cfg.cost;
  if (cost.components.size() == 2) {
    out += "cost pair(" + print_cost_expr(cost.components[0], inst) + ", " +
           print_cost_expr(cost.components[1], inst) + ")\n";
  } else {
    out += "cost " + print_cost_expr(cost.components[0], inst) + "\n";
  }
  out += "order " + print_ordering(cost.ordering) + "\n";
  if (cost.initial_delta.parts.size() == 1) {
    out += "delta " + format_double(cost.initial_delta.parts[0]) + "\n";
  } else {
    out += "delta (";
    for (std::size_t i = 0; i < cost.initial_delta.parts.size(); ++i) {
      if (i) out += ",";
      out += format_double(cost.initial_delta.parts[i]);
    }
    out += ")\n";
  }
  out += "epsilon " + format_double(cfg.epsilon) + "\n";
  out += cfg.filtering.mode == FilteringKind::Mode::ConsistencyCheck
             ? "filter consistency\n"
             : "filter fixpoint " + std::to_string(cfg.filtering.max_rounds) + "\n";
  out += cfg.selector == SelectorKind::Naive ? "select naive\n" : "select ff\n";
  out += cfg.keep_full_stack ? "stack full\n" : "stack top\n";
  out += "tolerance " + format_double(cfg.eq_tolerance) + "\n";
  return out;
}

}  // namespace branchkit

#endif  // BRANCHKIT_MODEL_HPP
