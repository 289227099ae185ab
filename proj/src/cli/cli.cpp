// Copyright 2026 The qspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qspace/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qspace/basis.hpp"
#include "qspace/checks.hpp"
#include "qspace/cli/expr.hpp"
#include "qspace/qset.hpp"
#include "qspace/text.hpp"

namespace qspace::cli {
namespace {

using nlohmann::json;

constexpr double kAmplitudeTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-12;

std::uint32_t parse_uint(std::string_view text, const std::string& what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::parse_error, "invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

/// A JSON file, or one of identity:M, fourier:M, random:M:SEED.
BasisChange load_basis(const std::string& source) {
  const auto parts = split(source, ':');
  if (parts.size() == 2 && parts[0] == "identity") return BasisChange::identity(parse_uint(parts[1], "cutoff"));
  if (parts.size() == 2 && parts[0] == "fourier") return BasisChange::fourier(parse_uint(parts[1], "cutoff"));
  if (parts.size() == 3 && parts[0] == "random") {
    return BasisChange::random(parse_uint(parts[1], "cutoff"), parse_uint(parts[2], "seed"));
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::io_error, "cannot open basis file '" + source + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_basis, "basis file '" + source + "': " + e.what());
  }
  return basis_from_json(j);
}

std::vector<std::uint32_t> parse_points(const std::string& text) {
  std::vector<std::uint32_t> points;
  for (auto part : split(text, ',')) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    points.push_back(parse_uint(part, "point"));
  }
  return points;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Options {
  bool json = false;
  // eval
  std::vector<std::string> expressions;
  std::string basis;
  double prune = 0.0;
  // suites
  std::uint32_t modes = 0;
  std::uint32_t max_total = 0;
  double tolerance = 1e-12;
  // amplitude
  std::string state;
  std::string points;
  // qset-demo
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
};

// Each command writes to `out` only after it has fully succeeded.
using Command = std::function<int(const Options&, std::ostream&)>;

json result_json(const Value& v, double prune) {
  if (const auto* z = std::get_if<Complex>(&v)) {
    return json{{"result", "scalar"}, {"re", z->real()}, {"im", z->imag()}};
  }
  return json{{"result", "state"}, {"state", state_to_json(std::get<StateVector>(v).pruned(prune))}};
}

std::string result_text(const Value& v, double prune) {
  if (const auto* z = std::get_if<Complex>(&v)) return format_complex(*z, kTextDigits);
  return state_text(std::get<StateVector>(v).pruned(prune));
}

int cmd_eval(const Options& o, std::ostream& out) {
  std::optional<BasisChange> basis;
  if (!o.basis.empty()) basis.emplace(load_basis(o.basis));
  std::vector<Value> values;
  for (const auto& text : o.expressions) {
    const Expr e = parse(text);
    Value v = eval(e, basis ? &*basis : nullptr);
    if (std::holds_alternative<OpSum>(v)) {
      throw Error(ErrorKind::type_error, "'" + text + "' is an operator; apply it to a ket");
    }
    values.push_back(std::move(v));
  }
  if (o.json) {
    if (values.size() == 1) {
      out << dump_json(result_json(values.front(), o.prune)) << '\n';
    } else {
      json results = json::array();
      for (const auto& v : values) results.push_back(result_json(v, o.prune));
      out << dump_json(json{{"results", results}}) << '\n';
    }
  } else {
    for (const auto& v : values) out << result_text(v, o.prune) << '\n';
  }
  return kExitOk;
}

int print_suite(const std::string& command, const checks::SuiteReport& report, const Options& o,
                double tolerance, std::ostream& out) {
  const bool ok = report.passed(tolerance);
  if (o.json) {
    json relations = json::array();
    for (const auto& r : report.relations) {
      relations.push_back({{"name", r.name}, {"max_residual", r.max_residual}, {"evaluations", r.evaluations}});
    }
    json j{{"command", command},       {"modes", o.modes},
           {"states", report.states},  {"tolerance", tolerance},
           {"relations", relations},   {"max_residual", report.max_residual()},
           {"passed", ok}};
    if (command == "check-ccr") j["max_total"] = o.max_total;
    out << dump_json(j) << '\n';
  } else {
    for (const auto& r : report.relations) {
      out << r.name << " max_residual=" << format_real(r.max_residual, kTextDigits)
          << " evaluations=" << r.evaluations << '\n';
    }
    out << "states=" << report.states << " tolerance=" << format_real(tolerance, kTextDigits) << ' '
        << verdict(ok) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_ccr(const Options& o, std::ostream& out) {
  return print_suite("check-ccr", checks::check_ccr(o.modes, o.max_total), o, o.tolerance, out);
}

int cmd_check_car(const Options& o, std::ostream& out) {
  // integer coefficients: exact comparison
  return print_suite("check-car", checks::check_car(o.modes), o, 0.0, out);
}

int cmd_amplitude(const Options& o, std::ostream& out) {
  const Ket ket = parse_ket(o.state);
  const auto points = parse_points(o.points);
  const BasisChange basis = load_basis(o.basis);
  const Complex direct = amplitude(ket.state, points, basis, ket.sector);
  const Complex closed = closed_form_amplitude(ket.state, points, basis, ket.sector);
  const double residual = std::abs(direct - closed);
  const bool ok = residual <= kAmplitudeTolerance;
  const char* method = ket.sector == Sector::bose ? "permanent" : "determinant";
  if (o.json) {
    out << dump_json(json{{"amplitude", complex_json(direct)},
                          {"closed_form", complex_json(closed)},
                          {"method", method},
                          {"residual", residual},
                          {"passed", ok}})
        << '\n';
  } else {
    out << "amplitude " << format_complex(direct, kTextDigits) << '\n'
        << method << ' ' << format_complex(closed, kTextDigits) << '\n'
        << "residual " << format_real(residual, kTextDigits) << ' ' << verdict(ok) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_oracle_compare(const Options& o, std::ostream& out) {
  const auto report = checks::compare_with_oracle(o.modes, o.max_total);
  const bool ok = report.passed(kOracleTolerance);
  if (o.json) {
    json entries = json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"sector", to_string(e.sector)},
                         {"n", e.particles},
                         {"expected_constant", e.expected_constant},
                         {"ratio_min", e.ratio_min},
                         {"ratio_max", e.ratio_max},
                         {"max_residual", e.max_residual},
                         {"pairs", e.pairs},
                         {"nonzero_pairs", e.nonzero_pairs}});
    }
    out << dump_json(json{{"modes", o.modes}, {"max_total", o.max_total}, {"entries", entries}, {"passed", ok}})
        << '\n';
  } else {
    for (const auto& e : report.entries) {
      out << to_string(e.sector) << " n=" << e.particles
          << " constant=" << format_real(e.ratio_min, kTextDigits);
      if (e.ratio_max != e.ratio_min) out << ".." << format_real(e.ratio_max, kTextDigits);
      out << " expected=" << format_real(e.expected_constant, kTextDigits) << " pairs=" << e.pairs
          << " nonzero=" << e.nonzero_pairs << " max_residual=" << format_real(e.max_residual, kTextDigits)
          << '\n';
    }
    out << verdict(ok) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_qset_demo(const Options& o, std::ostream& out) {
  const auto r = qset::random_properties(o.seed, o.cases);
  if (o.json) {
    out << dump_json(json{{"seed", o.seed},
                          {"cases", r.cases},
                          {"reflexive", r.reflexive},
                          {"symmetric", r.symmetric},
                          {"transitive", r.transitive},
                          {"permutation_invariant", r.permutation_invariant},
                          {"cross_kind_distinct", r.cross_kind_distinct},
                          {"qcard_preserved", r.qcard_preserved},
                          {"failures", r.failures},
                          {"fingerprint", r.fingerprint},
                          {"passed", r.passed()}})
        << '\n';
  } else {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.fingerprint));
    out << "seed=" << o.seed << " cases=" << r.cases << '\n'
        << "reflexive " << r.reflexive << '\n'
        << "symmetric " << r.symmetric << '\n'
        << "transitive " << r.transitive << '\n'
        << "replace(x,z,z)=x " << r.permutation_invariant << '\n'
        << "replace(x,z,w)!=x " << r.cross_kind_distinct << '\n'
        << "qcard preserved " << r.qcard_preserved << '\n'
        << "fingerprint " << hex << '\n'
        << "failures=" << r.failures << ' ' << verdict(r.passed()) << '\n';
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int report_error(const Error& e, int code, const Options& o, std::ostream& out, std::ostream& err) {
  err << "qspace: " << to_string(e.kind()) << ": " << e.what() << '\n';
  if (o.json) {
    json j{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["error"]["position"] = pe->position();
    out << dump_json(j) << '\n';
  }
  return code;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::parse_error || kind == ErrorKind::sector_mixing ? kExitUsage : kExitEvaluation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Occupation-number Fock space calculator"};
  app.name("qspace");
  app.require_subcommand(1);
  Options o;
  Command command;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Single JSON object on stdout"); };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate operator expressions applied to kets");
  eval_cmd->add_option("expr", o.expressions, "Expressions, e.g. \"a+(1) a+(1) |;B>\"")->required();
  eval_cmd->add_option("--basis", o.basis, "Basis: JSON file, identity:M, fourier:M or random:M:SEED");
  eval_cmd->add_option("--prune", o.prune, "Drop amplitudes with modulus <= EPS")->check(CLI::NonNegativeNumber);
  add_json(eval_cmd);
  eval_cmd->callback([&] { command = cmd_eval; });

  auto* ccr = app.add_subcommand("check-ccr", "Exhaustive boson commutation relations");
  ccr->add_option("--modes", o.modes, "Modes 1..M")->required();
  ccr->add_option("--max-total", o.max_total, "Largest total occupation")->required();
  ccr->add_option("--tol", o.tolerance, "Per-coefficient tolerance")->capture_default_str();
  add_json(ccr);
  ccr->callback([&] { command = cmd_check_ccr; });

  auto* car = app.add_subcommand("check-car", "Exhaustive fermion anticommutation relations");
  car->add_option("--modes", o.modes, "Modes 1..M")->required();
  add_json(car);
  car->callback([&] { command = cmd_check_car; });

  auto* amp = app.add_subcommand("amplitude", "Position amplitude with permanent/determinant cross-check");
  amp->add_option("--state", o.state, "Ket, e.g. \"|1@1,1@2;F>\"")->required();
  amp->add_option("--points", o.points, "Comma-separated points x1,x2,...")->required();
  amp->add_option("--basis", o.basis, "Basis: JSON file, identity:M, fourier:M or random:M:SEED")->required();
  add_json(amp);
  amp->callback([&] { command = cmd_amplitude; });

  auto* oracle = app.add_subcommand("oracle-compare", "Compare inner products with the labeled tensor oracle");
  oracle->add_option("--modes", o.modes, "Modes 1..M")->required();
  oracle->add_option("--max-total", o.max_total, "Largest particle number")->required();
  add_json(oracle);
  oracle->callback([&] { command = cmd_oracle_compare; });

  auto* demo = app.add_subcommand("qset-demo", "Seeded quasi-set property run");
  demo->add_option("--seed", o.seed, "Generator seed")->required();
  demo->add_option("--cases", o.cases, "Number of random cases")->required();
  add_json(demo);
  demo->callback([&] { command = cmd_qset_demo; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  try {
    const int code = command(o, buffer);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    return report_error(e, exit_code_for(e.kind()), o, out, err);
  } catch (const std::exception& e) {
    return report_error(Error(ErrorKind::type_error, e.what()), kExitEvaluation, o, out, err);
  }
}

}  // namespace qspace::cli
