#ifndef BRANCHKIT_REPORT_HPP
#define BRANCHKIT_REPORT_HPP

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "branchkit/engine.hpp"
#include "branchkit/model.hpp"

namespace branchkit {

namespace reportdetail {

/// JSON has no infinities; they travel as strings.
inline nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

inline double number_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("bad number in report: " + s);
  }
  return j.get<double>();
}

inline nlohmann::json cost_to_json(const CostValue& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (double p : v.parts) arr.push_back(json_number(p));
  return arr;
}

inline nlohmann::json domain_to_json(const DomainDescriptor& d) {
  nlohmann::json j;
  j["kind"] = kind_name(d.kind);
  switch (d.kind) {
    case DomainKind::Bool: break;
    case DomainKind::FiniteEnum:
    case DomainKind::SetInterval: j["universe"] = d.universe; break;
    case DomainKind::IntInterval:
      j["lo"] = d.int_lo;
      j["hi"] = d.int_hi;
      break;
    case DomainKind::RealInterval:
      j["lo"] = d.real_lo;
      j["hi"] = d.real_hi;
      break;
    case DomainKind::LatticeInterval: break;
  }
  return j;
}

inline nlohmann::json cell_to_json(const DomainValue& v) {
  nlohmann::json j;
  j["kind"] = kind_name(v.kind());
  switch (v.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: j["values"] = v.as<FiniteSetValue>().values; break;
    case DomainKind::IntInterval: {
      const auto& iv = v.as<IntIntervalValue>();
      if (iv.empty)
        j["empty"] = true;
      else {
        j["lo"] = iv.lo;
        j["hi"] = iv.hi;
      }
      break;
    }
    case DomainKind::SetInterval: {
      const auto& sv = v.as<SetIntervalValue>();
      if (sv.empty)
        j["empty"] = true;
      else {
        j["lo"] = sv.lo;
        j["hi"] = sv.hi;
      }
      break;
    }
    case DomainKind::RealInterval: {
      const auto& rv = v.as<RealIntervalValue>();
      if (rv.empty)
        j["empty"] = true;
      else {
        j["lo"] = rv.lo;
        j["hi"] = rv.hi;
      }
      break;
    }
    case DomainKind::LatticeInterval: {
      const auto& lv = v.as<LatticeIntervalValue>();
      j["text"] = format_value(v);
      j["lo_closed"] = lv.lo_closed;
      j["hi_closed"] = lv.hi_closed;
      break;
    }
  }
  return j;
}

inline DomainValue cell_from_json(const nlohmann::json& j) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "bool")
    return DomainValue::boolean(j.at("values").get<std::vector<std::int64_t>>());
  if (kind == "enum")
    return DomainValue::finite(j.at("values").get<std::vector<std::int64_t>>());
  if (kind == "int") {
    if (j.value("empty", false)) return DomainValue::empty_int_interval();
    return DomainValue::int_interval(j.at("lo").get<std::int64_t>(),
                                     j.at("hi").get<std::int64_t>());
  }
  if (kind == "set") {
    if (j.value("empty", false)) return DomainValue::empty_set_interval();
    return DomainValue::set_interval(j.at("lo").get<std::vector<std::int64_t>>(),
                                     j.at("hi").get<std::vector<std::int64_t>>());
  }
  if (kind == "real") {
    if (j.value("empty", false)) return DomainValue::empty_real_interval();
    return DomainValue::real_interval(j.at("lo").get<double>(), j.at("hi").get<double>());
  }
  throw std::invalid_argument("cannot reconstruct a '" + kind + "' cell from a report");
}

inline nlohmann::json config_to_json(const CSPInstance& inst, const SolverConfig& cfg) {
  nlohmann::json j;
  j["epsilon"] = cfg.epsilon;
  j["filter"] = cfg.filtering.mode == FilteringKind::Mode::ConsistencyCheck
                    ? "consistency"
                    : "fixpoint";
  if (cfg.filtering.mode == FilteringKind::Mode::FixpointPropagation)
    j["max_rounds"] = cfg.filtering.max_rounds;
  j["select"] = cfg.selector == SelectorKind::Naive ? "naive" : "ff";
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& e : cfg.cost.components)
    comps.push_back(modeldetail::print_cost_expr(e, inst));
  j["cost"] = comps;
  j["order"] = modeldetail::print_ordering(cfg.cost.ordering);
  j["delta0"] = cost_to_json(cfg.cost.initial_delta);
  j["stack_policy"] = cfg.keep_full_stack ? "full" : "top";
  j["tolerance"] = cfg.eq_tolerance;
  return j;
}

inline std::string format_precision(const PrecisionValue& p) {
  if (p.is_top()) return "top";
  return "(" + format_double(p.real_part) + "," + format_int(p.int_part) + ")";
}

}  // namespace reportdetail

inline nlohmann::json report_json(const CSPInstance& inst, const SolverConfig& cfg,
                                  const SolveResult& result) {
  using namespace reportdetail;
  nlohmann::json j;
  j["config"] = config_to_json(inst, cfg);
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : inst.variables) {
    nlohmann::json jv;
    jv["name"] = v.name;
    jv["domain"] = domain_to_json(v.domain);
    vars.push_back(jv);
  }
  j["variables"] = vars;
  nlohmann::json stack = nlohmann::json::array();
  for (const auto& s : result.stack) {
    nlohmann::json js;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : s.cells()) cells.push_back(cell_to_json(c));
    js["cells"] = cells;
    js["cost"] = cost_to_json(eval_cost(cfg.cost, s));
    stack.push_back(js);
  }
  j["stack"] = stack;
  j["delta"] = cost_to_json(result.final_delta);
  j["counters"] = {{"nodes", result.node_count},
                   {"pushes", result.push_count},
                   {"max_depth", result.max_depth}};
  j["status"] = result.status == SolveStatus::Ok ? "ok" : "budget-exhausted";
  return j;
}

/// One store per line, bottom of the stack first, then the `top` marker, the
/// final incumbent and the counters. Byte-stable for fixed inputs.
inline std::string report_text(const CSPInstance& inst, const SolverConfig& cfg,
                               const SolveResult& result) {
  using namespace reportdetail;
  std::string out;
  out += "config: epsilon=" + format_double(cfg.epsilon);
  out += cfg.filtering.mode == FilteringKind::Mode::ConsistencyCheck
             ? " filter=consistency"
             : " filter=fixpoint(" + std::to_string(cfg.filtering.max_rounds) + ")";
  out += cfg.selector == SelectorKind::Naive ? " select=naive" : " select=ff";
  out += " order=" + modeldetail::print_ordering(cfg.cost.ordering);
  out += " delta0=" + format_cost(cfg.cost.initial_delta);
  out += cfg.keep_full_stack ? " stack=full" : " stack=top";
  out += " tolerance=" + format_double(cfg.eq_tolerance);
  out += "\n";
  for (const auto& s : result.stack) {
    out += "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ", ";
      out += inst.variables[i].name + "=" + format_value(s.cell(i));
    }
    out += ") cost=" + format_cost(eval_cost(cfg.cost, s)) + "\n";
  }
  out += "top\n";
  out += "delta=" + format_cost(result.final_delta) + "\n";
  out += "nodes=" + std::to_string(result.node_count) +
         " pushes=" + std::to_string(result.push_count) +
         " depth=" + std::to_string(result.max_depth) +
         " status=" + (result.status == SolveStatus::Ok ? "ok" : "budget-exhausted") + "\n";
  return out;
}

/// Path-labelled search tree, one node per line in visit order.
inline std::string trace_text(const CSPInstance& inst, const SolveResult& result) {
  using namespace reportdetail;
  (void)inst;
  std::string out;
  if (!result.trace) return out;
  for (const auto& node : *result.trace) {
    std::string path;
    if (node.path.empty()) {
      path = "eps";
    } else {
      for (std::size_t i = 0; i < node.path.size(); ++i) {
        if (i) path += ".";
        path += std::to_string(node.path[i]);
      }
    }
    out += "path=" + path;
    out += " p=" + format_precision(node.p_at_node);
    out += " in=" + format_store(node.store_in);
    out += " filtered=" + format_store(node.store_filtered);
    out += std::string(" outcome=") + outcome_name(node.outcome);
    if (node.outcome == NodeOutcome::Branched)
      out += " k=" + std::to_string(node.child_count);
    out += "\n";
  }
  return out;
}

/// Rebuild the pushed stack from a JSON report (for covering checks).
inline Stack stack_from_report(const nlohmann::json& j) {
  Stack stack;
  for (const auto& js : j.at("stack")) {
    std::vector<DomainValue> cells;
    for (const auto& jc : js.at("cells")) cells.push_back(reportdetail::cell_from_json(jc));
    stack.push(Store(std::move(cells)));
  }
  return stack;
}

}  // namespace branchkit

#endif  // BRANCHKIT_REPORT_HPP
