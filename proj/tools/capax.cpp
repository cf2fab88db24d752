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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "capax/falsifier.hpp"
#include "scenario_io.hpp"

namespace {

using namespace capax;
using io::json;

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kDomain = 3 };

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void print_report(const InequalityReport& r, int indent = 0) {
  const std::string pad(indent, ' ');
  std::cout << pad << "theorem: " << r.theorem << (r.flipped ? "  (sides swapped to read lhs <= rhs)" : "") << "\n"
            << pad << "  lhs   = " << fmt(r.lhs) << "\n"
            << pad << "  rhs   = " << fmt(r.rhs) << "\n"
            << pad << "  slack = " << fmt(r.slack) << "\n";
  if (r.degenerate) std::cout << pad << "  degenerate: " << *r.degenerate << "\n";
  std::cout << pad << "  verdict: " << (r.holds ? "holds" : "VIOLATED")
            << (r.hypotheses_hold() ? "" : "  (hypotheses not all satisfied)") << "\n";
  if (!r.hypotheses.empty()) std::cout << pad << "  hypotheses:\n";
  for (const auto& h : r.hypotheses)
    std::cout << pad << "    [" << (h.holds ? "ok  " : "FAIL") << "] " << h.name << ": " << h.detail << "\n";
  for (const auto& h : r.notes)
    std::cout << pad << "    [" << (h.holds ? "yes " : "no  ") << "] note " << h.name << ": " << h.detail << "\n";
  if (!r.quantities.empty()) {
    std::cout << pad << "  quantities:";
    for (const auto& [k, v] : r.quantities) std::cout << " " << k << "=" << fmt(v);
    std::cout << "\n";
  }
  for (const auto& s : r.sub_reports) {
    std::cout << pad << "  sub-report:\n";
    print_report(s, indent + 4);
  }
}

int report_exit(const InequalityReport& r) {
  if (r.degenerate) return kDomain;
  return r.holds ? kOk : kFailed;
}

void emit(const std::string& out, json doc, json result) {
  if (out.empty()) return;
  doc["result"] = std::move(result);
  io::write_file(out, doc);
}

Range resolve_domain(const io::ScenarioFile& file, const SampleFunction& f, const Capacity& c) {
  return file.domain.value_or(join(f.range(), c.range()));
}

Scenario resolved(const io::ScenarioFile& file) {
  Scenario sc = file.scenario;
  if (!file.has_capacity) throw io::InputError("scenario: missing 'capacity'");
  if (!sc.op.empty()) {
    if (file.domain) {
      sc.domain = *file.domain;
    } else {
      const auto c = build_capacity(sc);
      Range r = c.range();
      if (!sc.f.empty()) r = join(r, SampleFunction(sc.f).range());
      sc.domain = r;
    }
  }
  return sc;
}

SampleFunction required_function(const std::vector<double>& v, const char* name) {
  if (v.empty()) throw io::InputError(std::string("functions: '") + name + "' is required");
  return SampleFunction(v);
}

// ---------------------------------------------------------------------------

int cmd_integrate(const std::string& path, const std::string& kind, const std::string& op_flag,
                  const std::string& out) {
  const auto file = io::read_scenario_file(path);
  if (kind != "sugeno" && kind != "shilkret" && kind != "choquet" && kind != "generalized")
    throw io::InputError("--integral: expected sugeno, shilkret, choquet or generalized");
  const Scenario sc = resolved(file);
  const auto c = build_capacity(sc);
  const auto f = required_function(sc.f, "f");
  const auto A = Subset::from_indices(sc.n, sc.a);
  IntegralResult r;
  if (kind == "sugeno") {
    r = sugeno(f, c, A);
  } else if (kind == "shilkret") {
    r = shilkret(f, c, A);
  } else if (kind == "choquet") {
    r = choquet(f, c, A);
  } else {
    const std::string name = op_flag.empty() ? sc.op : op_flag;
    if (name.empty()) throw io::InputError("--op is required for the generalized integral");
    if (!AggOperator::by_name(name, Range::Unit)) throw io::InputError("--op: unknown operator '" + name + "'");
    r = generalized_sugeno(f, c, A, operator_by_name(name, resolve_domain(file, f, c)));
  }
  std::cout << kind << " integral = " << fmt(r.value) << "\n"
            << "  level     = " << fmt(r.level) << "\n"
            << "  exactness = " << to_string(r.exactness) << "\n";
  if (r.exactness == Exactness::GridApprox) std::cout << "  bound     = " << fmt(r.bound) << "\n";
  if (r.cap_touched) std::cout << "  (tail evaluated at the extended-range cap)\n";
  emit(out, file.source, io::integral_to_json(kind, r));
  return kOk;
}

int cmd_check(const std::string& path, const std::string& what, std::uint64_t seed, const std::string& out) {
  const auto file = io::read_scenario_file(path);
  const Scenario sc = resolved(file);
  const auto c = build_capacity(sc);
  const auto A = Subset::from_indices(sc.n, sc.a);
  json result;
  bool holds = false;
  if (what.starts_with("capacity:")) {
    const auto prop = what.substr(9);
    std::optional<Property> p;
    for (auto cand : {Property::Monotone, Property::Submodular, Property::Subadditive, Property::Modular})
      if (prop == to_string(cand)) p = cand;
    if (!p) throw io::InputError("--what: unknown capacity property '" + prop + "'");
    CheckOptions opt;
    opt.seed = seed;
    const auto r = check_property(c, *p, opt);
    holds = r.holds;
    result = io::property_to_json(r);
    std::cout << prop << ": " << (r.holds ? "holds" : "fails") << " (" << to_string(r.mode) << ", "
              << r.pairs_checked << " pairs, worst slack " << fmt(r.slack) << ")\n";
    if (r.witness)
      std::cout << "  witness: A = " << result["witness"][0].dump() << ", B = " << result["witness"][1].dump()
                << "\n";
  } else if (what == "comonotone" || what == "posdep") {
    const auto f = required_function(sc.f, "f");
    const auto g = required_function(sc.g, "g");
    DependenceReport r;
    if (what == "comonotone") {
      r = is_comonotone(f, g, A);
    } else {
      if (sc.op.empty()) throw io::InputError("posdep needs an 'operator' section naming the dependence operator");
      r = check_positive_dependence(f, A, g, Subset::from_indices(sc.n, sc.b), c, operator_by_name(sc.op, sc.domain));
    }
    holds = r.holds;
    result = io::dependence_to_json(r);
    std::cout << what << ": " << (r.holds ? "holds" : "fails") << "\n";
    if (r.witness_points)
      std::cout << "  discordant points: " << r.witness_points->first << ", " << r.witness_points->second << "\n";
    if (r.witness_levels)
      std::cout << "  violating levels: " << fmt(r.witness_levels->first) << ", " << fmt(r.witness_levels->second)
                << " (slack " << fmt(r.worst_slack) << ")\n";
  } else {
    throw io::InputError("--what: expected capacity:PROPERTY, comonotone or posdep");
  }
  emit(out, file.source, result);
  return holds ? kOk : kFailed;
}

int run_scenario_doc(const json& doc, const std::string& out) {
  const auto file = io::parse_scenario(doc);
  if (file.scenario.theorem.empty()) throw io::InputError("scenario: missing 'theorem'");
  const Scenario sc = resolved(file);
  const auto r = evaluate(sc);
  print_report(r);
  emit(out, file.source, io::report_to_json(r));
  return report_exit(r);
}

int cmd_evaluate(const std::string& path, const std::string& out) {
  const auto file = io::read_scenario_file(path);
  return run_scenario_doc(file.source, out);
}

AuditConfig audit_config(const std::string& target, std::optional<std::size_t> trials, std::optional<std::uint64_t> seed,
                         const std::string& system, json& source) {
  AuditConfig cfg;
  if (find_theorem(target)) {
    cfg.scenario.theorem = target;
    source = {{"theorem", target}};
  } else {
    const auto file = io::read_scenario_file(target);
    if (file.scenario.theorem.empty()) throw io::InputError("audit: scenario file has no 'theorem'");
    source = file.source;
    cfg.scenario.theorem = file.scenario.theorem;
    cfg.scenario.system = file.scenario.system;
    cfg.scenario.op = file.scenario.op;
    if (file.audit) {
      cfg.trials = file.audit->trials;
      cfg.seed = file.audit->seed;
      cfg.scenario.strategy = file.audit->strategy;
      cfg.scenario.max_points = file.audit->max_points;
    }
  }
  if (trials) cfg.trials = *trials;
  if (seed) cfg.seed = *seed;
  if (!system.empty()) {
    const auto names = system_names();
    if (std::find(names.begin(), names.end(), system) == names.end())
      throw io::InputError("--system: unknown operator system '" + system + "'");
    cfg.scenario.system = system;
  }
  return cfg;
}

int cmd_audit(const std::string& target, std::optional<std::size_t> trials, std::optional<std::uint64_t> seed,
              const std::string& system, const std::string& out) {
  json source;
  const auto cfg = audit_config(target, trials, seed, system, source);
  const auto s = audit(cfg);
  std::cout << "audit " << s.theorem << (s.system.empty() ? "" : " [" + s.system + "]") << ": " << s.trials
            << " trials, seed " << s.seed << "\n"
            << "  hypothesis-satisfying scenarios: " << s.hypothesis_pass << " (" << s.generation_attempts
            << " drawn)\n"
            << "  violations: " << s.violation_count << "\n"
            << "  min relative slack: " << fmt(s.min_slack) << "\n";
  for (const auto& v : s.violations) {
    std::cout << "  violation at trial " << v.trial << " (" << v.scenario.n << " points):\n";
    print_report(v.report, 4);
  }
  emit(out, source, io::summary_to_json(s));
  return s.violation_count == 0 ? kOk : kFailed;
}

int cmd_falsify(const std::string& target, const std::string& drop, std::size_t trials,
                std::optional<std::uint64_t> seed, const std::string& out) {
  json source;
  std::string theorem_id = target;
  std::uint64_t s = seed.value_or(1);
  std::optional<ScenarioConfig> cfg;
  if (!find_theorem(target)) {
    const auto file = io::read_scenario_file(target);
    if (file.scenario.theorem.empty()) throw io::InputError("falsify: scenario file has no 'theorem'");
    source = file.source;
    theorem_id = file.scenario.theorem;
    ScenarioConfig c{theorem_id, Strategy::Unconstrained, 8, file.scenario.system, file.scenario.op};
    if (file.audit) {
      if (!seed) s = file.audit->seed;
      c.max_points = file.audit->max_points;
      if (file.audit->strategy != Strategy::Default) c.strategy = file.audit->strategy;
    }
    cfg = c;
  } else {
    source = {{"theorem", target}};
  }
  std::optional<HuntResult> h;
  try {
    h = hunt_counterexample(theorem_id, drop, trials, s, cfg);
  } catch (const DomainError& e) {
    throw io::InputError(e.what());
  }
  std::cout << "falsify " << theorem_id << " dropping '" << drop << "': ";
  if (!h) {
    std::cout << "no violation in " << trials << " trials (seed " << s << ")\n";
  } else {
    std::cout << "violation at trial " << h->trial << ", shrunk from " << h->original.n << " to " << h->scenario.n
              << " points in " << h->shrink_steps << " steps\n";
    std::cout << "  scenario: " << io::scenario_to_json(h->scenario).dump() << "\n";
    print_report(h->report, 2);
  }
  emit(out, source, io::hunt_to_json(h, drop, trials, s));
  return h ? kFailed : kOk;
}

// ---------------------------------------------------------------------------
// Demos

json grid_doc(double a, double b, std::size_t steps) { return {{"space", {{"grid", {{"a", a}, {"b", b}, {"steps", steps}}}}}}; }

int demo_impossibility(const std::string& out) {
  std::vector<double> coords;
  for (int k = 8; k >= 0; --k) coords.push_back(std::pow(10.0, -k));
  auto space = std::make_shared<const GroundSpace>(coords, std::vector<double>(coords.size(), 1.0));
  std::vector<double> h(coords.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = coords[i] * coords[i];
  const SampleFunction g = SampleFunction::constant(coords.size(), 1.0), hf(h);
  std::vector<std::size_t> idx(coords.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = idx.size() - 1 - i;
  const std::vector<double> cands = {1.0, 10.0, 100.0, 1000.0};
  const auto rows = impossibility_demo(space, idx, g, hf, cands);

  std::cout << "sup-capacity, f = indicator of t, g = 1, h = x^2\n"
            << "bound: 1 <= c * (g(t) h(t))^(1/4)\n\n"
            << "        t    g(t)h(t)    required c";
  for (double c : cands) std::cout << "   c=" << fmt(c);
  std::cout << "\n";
  json table = json::array();
  for (const auto& r : rows) {
    std::printf("%9.0e  %10.3e  %12.6g", r.coord, r.gh, r.required_c);
    json verdicts = json::object();
    for (const auto& [c, ok] : r.candidates) {
      std::printf("  %6s", ok ? "ok" : "fails");
      verdicts[fmt(c)] = ok;
    }
    std::printf("\n");
    table.push_back({{"coord", io::number(r.coord)},
                     {"gh", io::number(r.gh)},
                     {"lhs", io::number(r.lhs)},
                     {"required_c", io::number(r.required_c)},
                     {"candidates", verdicts}});
  }
  std::cout << std::flush;
  emit(out, {{"demo", "impossibility"}}, {{"rows", table}});
  return kOk;
}

int cmd_demo(const std::string& name, const std::string& phi, const std::string& psi, std::size_t points,
             const std::string& out) {
  json doc;
  if (name == "carlson-classical") {
    doc = grid_doc(0.0, 100.0, 100000);
    doc["functions"] = {{"f", "1/(1+x^2)"}, {"g", "const:1"}, {"h", "x^2"}};
    doc["exponents"] = {{"p", 2.0}};
    doc["theorem"] = "carlson-choquet-submodular";
    const int code = run_scenario_doc(doc, out);
    const double pi = std::acos(-1.0);
    std::cout << "  closed forms on [0, inf): int f = pi/2 = " << fmt(pi / 2) << ", int f^2 = int x^2 f^2 = pi/4 = "
              << fmt(pi / 4) << "\n";
    return code;
  }
  if (name == "caballero" || name == "xu-ouyang" || name == "wang") {
    doc = grid_doc(0.0, 1.0, 1000);
    doc["functions"] = {{"f", "x"}, {"g", "const:1"}, {"h", "x"}};
    if (name == "caballero") {
      doc["system"] = "sugeno-product";
      doc["exponents"] = {{"p", 2.0}, {"q", 2.0}, {"r", 1.0}, {"s", 1.0}};
      doc["theorem"] = "carlson-sugeno";
    } else {
      doc["exponents"] = {{"p", 2.0}, {"q", name == "wang" ? 3.0 : 2.0}};
      doc["theorem"] = name;
    }
    const int code = run_scenario_doc(doc, out);
    if (name == "caballero") {
      const auto sc = resolved(io::parse_scenario(doc));
      const auto c = build_capacity(sc);
      const auto X = Subset::full(sc.n);
      const SampleFunction f(sc.f), x(sc.coords);
      const double F = sugeno(f, c, X).value;
      const double bound = std::sqrt(2.0) * std::pow(sugeno(f.pow(2), c, X).value, 0.25) *
                           std::pow(sugeno((x * f).pow(2), c, X).value, 0.25);
      std::cout << "  with int x = " << fmt(sugeno(x, c, X).value) << ": int f = " << fmt(F)
                << " <= sqrt(2) (int f^2)^(1/4) (int x^2 f^2)^(1/4) = " << fmt(bound) << "\n";
    }
    return code;
  }
  if (name == "shilkret-example") {
    doc = grid_doc(0.0, 1.0, 1000);
    doc["functions"] = {{"f", "x"}};
    doc["theorem"] = "shilkret-example";
    return run_scenario_doc(doc, out);
  }
  if (name == "lukasiewicz-example") {
    const auto ex = make_uniform_example(phi, psi, points);
    std::cout << "U uniform on [0,1] (" << points << " cells), f = " << phi << "(U), h = 1 - " << psi << "(U)\n";
    doc = grid_doc(0.0, 1.0, points);
    doc["functions"] = {{"f", ex.f.values()}, {"h", ex.h.values()}};
    doc["exponents"] = {{"p", 2.0}, {"q", 2.0}};
    doc["theorem"] = "lukasiewicz-example";
    return run_scenario_doc(doc, out);
  }
  if (name == "ouyang-choquet") {
    doc = grid_doc(0.0, 1.0, 1000);
    doc["functions"] = {{"f", "x"}, {"g", "const:1"}, {"h", "x"}};
    doc["exponents"] = {{"p", 2.0}, {"q", 2.0}};
    doc["theorem"] = "ouyang-choquet";
    return run_scenario_doc(doc, out);
  }
  if (name == "sharpness") {
    doc = grid_doc(0.0, 1.0, 1000);
    doc["capacity"] = {{"type", "sup"}};
    doc["functions"] = {{"f", "x"}, {"g", "x^2"}, {"h", "x"}};
    doc["exponents"] = {{"r", 1.0}, {"s", 2.0}};
    doc["theorem"] = "sharpness";
    return run_scenario_doc(doc, out);
  }
  if (name == "impossibility") return demo_impossibility(out);
  throw io::InputError("unknown demo '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capax: non-additive integrals and inequality audits"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  std::optional<std::uint64_t> seed;
  app.add_option("--out", out, "Write a machine-readable result file");
  app.add_option("--seed", seed, "Override the file's seed");

  std::string file, integral = "sugeno", op, what, drop, target, system, demo_name, phi = "identity",
                    psi = "identity";
  std::optional<std::size_t> trials;
  std::size_t hunt_trials = 10000, points = 200;

  auto* integ = app.add_subcommand("integrate", "Evaluate an integral of f over A");
  integ->add_option("file", file, "Scenario file")->required();
  integ->add_option("--integral", integral, "sugeno | shilkret | choquet | generalized");
  integ->add_option("--op", op, "Operator for the generalized integral");

  auto* check = app.add_subcommand("check", "Structural or dependence check");
  check->add_option("file", file, "Scenario file")->required();
  check->add_option("--what", what, "capacity:PROPERTY | comonotone | posdep")->required();

  auto* eval = app.add_subcommand("evaluate", "Run the theorem checker named in the file");
  eval->add_option("file", file, "Scenario file")->required();

  auto* aud = app.add_subcommand("audit", "Randomized audit of a theorem checker");
  aud->add_option("target", target, "Theorem id or scenario file")->required();
  aud->add_option("--trials", trials, "Number of trials");
  aud->add_option("--system", system, "Operator system for Sugeno-type theorems");

  auto* fal = app.add_subcommand("falsify", "Search for a counterexample with a hypothesis dropped");
  fal->add_option("target", target, "Theorem id or scenario file")->required();
  fal->add_option("--drop", drop, "Hypothesis name (prefix) to ignore")->required();
  fal->add_option("--trials", hunt_trials, "Number of trials");

  auto* dem = app.add_subcommand("demo", "Built-in demonstrations");
  dem->add_option("name", demo_name,
                  "carlson-classical | caballero | xu-ouyang | wang | shilkret-example | lukasiewicz-example | "
                  "ouyang-choquet | sharpness | impossibility")
      ->required();
  dem->add_option("--phi", phi, "lukasiewicz-example: identity | square | sqrt");
  dem->add_option("--psi", psi, "lukasiewicz-example: identity | square | sqrt");
  dem->add_option("--points", points, "lukasiewicz-example: grid cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*integ) return cmd_integrate(file, integral, op, out);
    if (*check) return cmd_check(file, what, seed.value_or(CheckOptions{}.seed), out);
    if (*eval) return cmd_evaluate(file, out);
    if (*aud) return cmd_audit(target, trials, seed, system, out);
    if (*fal) return cmd_falsify(target, drop, hunt_trials, seed, out);
    if (*dem) return cmd_demo(demo_name, phi, psi, points, out);
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const InvalidCapacity& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
