// Copyright 2026 The capax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scenario and result files. One JSON document format serves as input and
// output: a result file is the input document plus a "result" member, and
// re-reading it ignores that member.

#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "capax/falsifier.hpp"
#include "json.hpp"

namespace capax::io {

using json = nlohmann::ordered_json;

// Malformed or schema-violating input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double a = 0.0, b = 1.0;
  std::size_t steps = 1;
};

struct AuditSection {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  Strategy strategy = Strategy::Default;
  std::size_t max_points = 8;
};

struct ScenarioFile {
  Scenario scenario;
  std::optional<Range> domain;  // operator domain if the file states one
  bool has_capacity = false;
  std::optional<AuditSection> audit;
  json source;  // document as read, without "result"
};

// ---------------------------------------------------------------------------
// Numbers

inline json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

namespace detail {

inline void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw InputError(std::string(where) + ": expected an object");
  for (const auto& [k, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw InputError(std::string(where) + ": unknown key '" + k + "'");
}

inline double nonneg(const json& v, std::string_view where, bool allow_inf = false) {
  if (v.is_string() && allow_inf && v.get<std::string>() == "inf") return kInf;
  if (!v.is_number()) throw InputError(std::string(where) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x) || x < 0.0) throw InputError(std::string(where) + ": numbers must be finite and >= 0");
  return x;
}

inline std::size_t count(const json& v, std::string_view where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string(where) + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

inline std::vector<double> numbers(const json& v, std::string_view where, bool allow_inf = false) {
  if (!v.is_array()) throw InputError(std::string(where) + ": expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(nonneg(x, where, allow_inf));
  return out;
}

inline std::string text(const json& v, std::string_view where) {
  if (!v.is_string()) throw InputError(std::string(where) + ": expected a string");
  return v.get<std::string>();
}

inline Range range_by_name(const std::string& s) {
  if (s == "unit") return Range::Unit;
  if (s == "extended") return Range::ExtendedNonneg;
  throw InputError("operator.domain: expected \"unit\" or \"extended\"");
}

inline std::vector<double> formula(const std::string& id, const Scenario& sc) {
  if (id.starts_with("const:")) {
    double k = 0.0;
    const auto tail = id.substr(6);
    if (tail == "inf") {
      k = kInf;
    } else {
      std::size_t used = 0;
      try {
        k = std::stod(tail, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tail.size() || !std::isfinite(k) || k < 0.0)
        throw InputError("functions: bad constant in '" + id + "'");
    }
    return std::vector<double>(sc.n, k);
  }
  if (id != "x" && id != "x^2" && id != "1/(1+x^2)")
    throw InputError("functions: unknown formula '" + id + "' (known: x, x^2, 1/(1+x^2), const:k)");
  if (sc.coords.empty()) throw InputError("functions: formula '" + id + "' needs a space with coordinates");
  std::vector<double> out(sc.n);
  for (std::size_t i = 0; i < sc.n; ++i) {
    const double x = sc.coords[i];
    out[i] = id == "x" ? x : id == "x^2" ? x * x : 1.0 / (1.0 + x * x);
  }
  return out;
}

inline std::vector<std::size_t> subset(const json& v, std::size_t n, std::string_view where) {
  std::vector<std::size_t> out;
  if (v.is_string()) {
    if (v.get<std::string>() != "all") throw InputError(std::string(where) + ": expected \"all\" or an index list");
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
    return out;
  }
  if (!v.is_array()) throw InputError(std::string(where) + ": expected \"all\" or an index list");
  for (const auto& x : v) {
    const auto i = count(x, where);
    if (i >= n) throw InputError(std::string(where) + ": index " + std::to_string(i) + " out of range");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

inline ScenarioFile parse_scenario(const json& doc) {
  using namespace detail;
  check_keys(doc,
             {"space", "capacity", "functions", "subsets", "operator", "system", "exponents", "theorem", "audit",
              "result"},
             "scenario");
  ScenarioFile out;
  out.source = doc;
  out.source.erase("result");
  Scenario& sc = out.scenario;

  if (!doc.contains("space")) throw InputError("scenario: missing 'space'");
  const auto& sp = doc["space"];
  check_keys(sp, {"n", "grid", "coords", "widths"}, "space");
  std::optional<GridSpec> grid;
  if (sp.contains("grid")) {
    if (sp.contains("coords") || sp.contains("widths")) throw InputError("space: 'grid' excludes coords/widths");
    const auto& g = sp["grid"];
    check_keys(g, {"a", "b", "steps"}, "space.grid");
    if (!g.contains("a") || !g.contains("b") || !g.contains("steps"))
      throw InputError("space.grid: needs a, b and steps");
    grid = GridSpec{nonneg(g["a"], "space.grid.a"), nonneg(g["b"], "space.grid.b"), count(g["steps"], "space.grid.steps")};
    if (!(grid->a < grid->b) || grid->steps == 0) throw InputError("space.grid: need a < b and steps >= 1");
    // Reuse the library's midpoint layout so file and API grids coincide.
    const auto c = make_grid_lebesgue(grid->a, grid->b, grid->steps);
    sc.coords = c.space().coords();
    sc.widths = c.space().widths();
    sc.n = grid->steps;
  } else if (sp.contains("coords")) {
    sc.coords = numbers(sp["coords"], "space.coords");
    sc.widths = sp.contains("widths") ? numbers(sp["widths"], "space.widths") : std::vector<double>(sc.coords.size(), 1.0);
    sc.n = sc.coords.size();
    try {
      GroundSpace(sc.coords, sc.widths);
    } catch (const Error& e) {
      throw InputError(std::string("space: ") + e.what());
    }
  } else if (sp.contains("widths")) {
    throw InputError("space: widths require coords");
  } else if (!sp.contains("n")) {
    throw InputError("space: needs n, grid or coords");
  }
  if (sp.contains("n")) {
    const auto n = count(sp["n"], "space.n");
    if (sc.coords.empty()) sc.n = n;
    else if (n != sc.n) throw InputError("space.n disagrees with the coordinates");
  }
  if (sc.n == 0) throw InputError("space: n must be >= 1");

  if (doc.contains("capacity")) {
    const auto& c = doc["capacity"];
    check_keys(c, {"type", "weights", "gamma", "table"}, "capacity");
    const auto type = text(c.value("type", json()), "capacity.type");
    auto& spec = sc.capacity;
    auto need = [&](const char* key) -> const json& {
      if (!c.contains(key)) throw InputError("capacity: type " + type + " needs '" + key + "'");
      return c[key];
    };
    if (type == "additive" || type == "distorted") {
      spec.type = type == "additive" ? CapacitySpec::Type::Additive : CapacitySpec::Type::Distorted;
      spec.weights = numbers(need("weights"), "capacity.weights");
      if (spec.weights.size() != sc.n) throw InputError("capacity.weights: one weight per point required");
      if (type == "distorted") spec.gamma = nonneg(need("gamma"), "capacity.gamma");
    } else if (type == "sup") {
      spec.type = CapacitySpec::Type::Sup;
    } else if (type == "explicit") {
      spec.type = CapacitySpec::Type::Explicit;
      spec.table = numbers(need("table"), "capacity.table", true);
    } else if (type == "grid") {
      if (sc.coords.empty()) throw InputError("capacity: type grid needs a space with coordinates");
      spec.type = CapacitySpec::Type::Grid;
    } else {
      throw InputError("capacity.type: unknown type '" + type + "'");
    }
    out.has_capacity = true;
  } else if (grid) {
    sc.capacity.type = CapacitySpec::Type::Grid;
    out.has_capacity = true;
  }

  if (doc.contains("functions")) {
    const auto& fs = doc["functions"];
    check_keys(fs, {"f", "g", "h"}, "functions");
    for (auto [key, member] : {std::pair{"f", &Scenario::f}, {"g", &Scenario::g}, {"h", &Scenario::h}}) {
      if (!fs.contains(key)) continue;
      const auto& v = fs[key];
      const std::string where = std::string("functions.") + key;
      sc.*member = v.is_string() ? formula(v.get<std::string>(), sc) : numbers(v, where, true);
      if ((sc.*member).size() != sc.n) throw InputError(where + ": one value per point required");
    }
  }

  sc.a = sc.b = subset("all", sc.n, "subsets");
  if (doc.contains("subsets")) {
    const auto& ss = doc["subsets"];
    check_keys(ss, {"A", "B"}, "subsets");
    if (ss.contains("A")) sc.a = subset(ss["A"], sc.n, "subsets.A");
    sc.b = ss.contains("B") ? subset(ss["B"], sc.n, "subsets.B") : sc.a;
  }

  if (doc.contains("operator")) {
    const auto& op = doc["operator"];
    if (op.is_string()) {
      sc.op = op.get<std::string>();
    } else {
      check_keys(op, {"name", "domain"}, "operator");
      sc.op = text(op.value("name", json()), "operator.name");
      if (op.contains("domain")) out.domain = range_by_name(text(op["domain"], "operator.domain"));
    }
    if (!AggOperator::by_name(sc.op, Range::Unit)) throw InputError("operator: unknown operator '" + sc.op + "'");
  }

  if (doc.contains("system")) {
    sc.system = text(doc["system"], "system");
    const auto names = system_names();
    if (std::find(names.begin(), names.end(), sc.system) == names.end())
      throw InputError("system: unknown operator system '" + sc.system + "'");
  }

  if (doc.contains("exponents")) {
    const auto& e = doc["exponents"];
    check_keys(e, {"p", "q", "r", "s"}, "exponents");
    if (e.contains("p")) sc.p = nonneg(e["p"], "exponents.p");
    if (e.contains("q")) sc.q = nonneg(e["q"], "exponents.q");
    if (e.contains("r")) sc.r = nonneg(e["r"], "exponents.r");
    if (e.contains("s")) sc.s = nonneg(e["s"], "exponents.s");
  }

  if (doc.contains("theorem")) {
    sc.theorem = text(doc["theorem"], "theorem");
    if (!find_theorem(sc.theorem)) throw InputError("theorem: unknown theorem id '" + sc.theorem + "'");
  }

  if (doc.contains("audit")) {
    const auto& a = doc["audit"];
    check_keys(a, {"trials", "seed", "strategy", "max_points"}, "audit");
    AuditSection s;
    if (a.contains("trials")) s.trials = count(a["trials"], "audit.trials");
    if (a.contains("seed")) s.seed = count(a["seed"], "audit.seed");
    if (a.contains("max_points")) s.max_points = count(a["max_points"], "audit.max_points");
    if (a.contains("strategy")) {
      const auto st = strategy_by_name(text(a["strategy"], "audit.strategy"));
      if (!st) throw InputError("audit.strategy: unknown strategy");
      s.strategy = *st;
    }
    out.audit = s;
  }
  return out;
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline ScenarioFile read_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(parse_text(ss.str()));
}

// ---------------------------------------------------------------------------
// Serialization

inline json scenario_to_json(const Scenario& sc) {
  json doc;
  json space;
  space["n"] = sc.n;
  if (!sc.coords.empty()) {
    space["coords"] = sc.coords;
    space["widths"] = sc.widths;
  }
  doc["space"] = space;
  json cap;
  cap["type"] = std::string(to_string(sc.capacity.type));
  switch (sc.capacity.type) {
    case CapacitySpec::Type::Distorted: cap["gamma"] = sc.capacity.gamma; [[fallthrough]];
    case CapacitySpec::Type::Additive: cap["weights"] = sc.capacity.weights; break;
    case CapacitySpec::Type::Explicit: {
      json t = json::array();
      for (double v : sc.capacity.table) t.push_back(number(v));
      cap["table"] = t;
      break;
    }
    default: break;
  }
  doc["capacity"] = cap;
  json fs;
  for (auto [key, member] : {std::pair{"f", &Scenario::f}, {"g", &Scenario::g}, {"h", &Scenario::h}}) {
    if ((sc.*member).empty()) continue;
    json v = json::array();
    for (double x : sc.*member) v.push_back(number(x));
    fs[key] = v;
  }
  doc["functions"] = fs;
  doc["subsets"] = {{"A", sc.a}, {"B", sc.b}};
  if (!sc.op.empty()) doc["operator"] = {{"name", sc.op}, {"domain", sc.domain == Range::Unit ? "unit" : "extended"}};
  if (!sc.system.empty()) doc["system"] = sc.system;
  doc["exponents"] = {{"p", sc.p}, {"q", sc.q}, {"r", sc.r}, {"s", sc.s}};
  if (!sc.theorem.empty()) doc["theorem"] = sc.theorem;
  return doc;
}

inline json checks_to_json(const std::vector<HypothesisCheck>& hs) {
  json out = json::array();
  for (const auto& h : hs) out.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  return out;
}

inline json report_to_json(const InequalityReport& r) {
  json out;
  out["theorem"] = r.theorem;
  out["holds"] = r.holds;
  out["lhs"] = number(r.lhs);
  out["rhs"] = number(r.rhs);
  out["slack"] = number(r.slack);
  out["flipped"] = r.flipped;
  out["degenerate"] = r.degenerate ? json(*r.degenerate) : json();
  out["hypotheses_hold"] = r.hypotheses_hold();
  out["hypotheses"] = checks_to_json(r.hypotheses);
  json q = json::object();
  for (const auto& [k, v] : r.quantities) q[k] = number(v);
  out["quantities"] = q;
  if (!r.notes.empty()) out["notes"] = checks_to_json(r.notes);
  if (!r.sub_reports.empty()) {
    json subs = json::array();
    for (const auto& s : r.sub_reports) subs.push_back(report_to_json(s));
    out["sub_reports"] = subs;
  }
  return out;
}

inline json integral_to_json(std::string_view kind, const IntegralResult& r) {
  json out;
  out["integral"] = std::string(kind);
  out["value"] = number(r.value);
  out["level"] = number(r.level);
  out["exactness"] = std::string(to_string(r.exactness));
  out["bound"] = number(r.bound);
  out["cap_touched"] = r.cap_touched;
  return out;
}

inline json subset_to_json(const Subset& s) { return s.indices(); }

inline json property_to_json(const PropertyReport& r) {
  json out;
  out["property"] = std::string(to_string(r.property));
  out["holds"] = r.holds;
  out["mode"] = std::string(to_string(r.mode));
  out["pairs_checked"] = r.pairs_checked;
  if (r.mode == PropertyReport::Mode::Sampled) out["seed"] = r.seed;
  out["slack"] = number(r.slack);
  if (r.witness) out["witness"] = {subset_to_json(r.witness->first), subset_to_json(r.witness->second)};
  return out;
}

inline json dependence_to_json(const DependenceReport& r) {
  json out;
  out["kind"] = r.kind == DependenceReport::Kind::Comonotone ? "comonotone" : "positive-dependence";
  out["holds"] = r.holds;
  if (!r.op.empty()) out["operator"] = r.op;
  if (r.witness_points) out["witness_points"] = {r.witness_points->first, r.witness_points->second};
  if (r.witness_levels)
    out["witness_levels"] = {number(r.witness_levels->first), number(r.witness_levels->second)};
  if (r.kind != DependenceReport::Kind::Comonotone) out["worst_slack"] = number(r.worst_slack);
  return out;
}

inline json summary_to_json(const AuditSummary& s) {
  json out;
  out["theorem"] = s.theorem;
  if (!s.system.empty()) out["system"] = s.system;
  out["trials"] = s.trials;
  out["seed"] = s.seed;
  out["hypothesis_pass"] = s.hypothesis_pass;
  out["generation_attempts"] = s.generation_attempts;
  out["violation_count"] = s.violation_count;
  out["min_relative_slack"] = number(s.min_slack);
  json vs = json::array();
  for (const auto& v : s.violations)
    vs.push_back({{"trial", v.trial}, {"scenario", scenario_to_json(v.scenario)}, {"report", report_to_json(v.report)}});
  out["violations"] = vs;
  return out;
}

inline json hunt_to_json(const std::optional<HuntResult>& h, std::string_view dropped, std::size_t trials,
                         std::uint64_t seed) {
  json out;
  out["dropped"] = std::string(dropped);
  out["trials"] = trials;
  out["seed"] = seed;
  out["found"] = h.has_value();
  if (h) {
    out["trial"] = h->trial;
    out["shrink_steps"] = h->shrink_steps;
    out["original_points"] = h->original.n;
    out["scenario"] = scenario_to_json(h->scenario);
    out["report"] = report_to_json(h->report);
  }
  return out;
}

inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

inline void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump(doc);
}

}  // namespace capax::io
