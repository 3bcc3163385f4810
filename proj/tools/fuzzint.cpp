/*
 *   Copyright 2026 The fuzzint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// fuzzint command-line driver: eval, axioms, check, search, repro.
// Exit codes: 0 = holds/pass, 2 = violation found (witness emitted), 1 = usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzint/fuzzint.hpp"

namespace {

using namespace fuzzint;
using io::json;

constexpr int exit_pass = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2;

struct RunConfig {
  std::string realization = "exact";
  double tolerance = 1e-9;
  std::string format = "json";

  Realization mode() const { return realization == "float" ? Realization::floating : Realization::exact; }
  io::Format output() const { return format == "text" ? io::Format::text : io::Format::json; }
  Tolerance tol() const { return Tolerance{tolerance}; }
};

struct EvalArgs {
  std::string semicopula;
  std::string capacity;
  std::string function;
  std::string restrict_to;
  std::string grid_step;
};

struct AxiomsArgs {
  std::string op = "prod";
  std::string grid_step = "1/100";
};

struct CheckArgs {
  std::string law_id;
  std::vector<std::string> semicopulas;
  std::string op;
  std::string grid_step = "1/100";
  std::uint64_t cases = 1000;
  std::uint64_t seed = 0;
  std::string capacity;
  std::string function;
  std::string shift;
  std::string restrict_to;
  std::string instance;
};

struct SearchArgs {
  std::string law_id;
  std::vector<std::string> semicopulas;
  std::string op;
  std::size_t n = 2;
  std::uint32_t denominator = 10;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
};

struct ReproArgs {
  std::string beta = "3/10";
};

int print_report(const CheckReport& report, const RunConfig& cfg)
{
  std::cout << io::emit_report(report, cfg.output());
  return report.holds() ? exit_pass : exit_violation;
}

std::vector<Semicopula> semicopulas_from(const std::vector<std::string>& names)
{
  std::vector<Semicopula> out;
  for (const auto& n : names) {
    out.push_back(builtin_semicopula(n));
  }
  if (out.empty()) {
    out.push_back(Semicopula::min());
  }
  return out;
}

std::optional<BinaryOp> op_from(const std::string& name)
{
  if (name.empty()) {
    return std::nullopt;
  }
  return parse_operator(name);
}

int run_eval(const EvalArgs& a, const RunConfig& cfg)
{
  const Semicopula s = builtin_semicopula(a.semicopula);
  auto inputs = io::parse_inputs(a.capacity, a.function, cfg.mode());
  SimpleFunction f = inputs.f;
  if (!a.restrict_to.empty()) {
    f = restricted(f, f.space().parse_subset_key(a.restrict_to));
  }
  const IntegralResult r = a.grid_step.empty()
                               ? eval_integral(s, inputs.capacity, f)
                               : eval_integral_grid(s, inputs.capacity, f, parse_value(a.grid_step, cfg.mode()));
  if (cfg.output() == io::Format::text) {
    std::cout << "value = " << render(r.value) << " (argmax t = " << render(r.argmax_threshold) << ", "
              << to_string(r.method) << ")\n";
  } else {
    std::cout << io::to_json(r).dump(2) << "\n";
  }
  return exit_pass;
}

int run_axioms(const AxiomsArgs& a, const RunConfig& cfg)
{
  return print_report(audit_axioms(parse_operator(a.op), parse_value(a.grid_step, cfg.mode()), cfg.tol()), cfg);
}

Instance instance_from_files(const CheckArgs& a, const RunConfig& cfg)
{
  if (!a.instance.empty()) {
    json j = io::read_json_file(a.instance);
    return io::with_path(a.instance, [&] {
      // Accept a bare instance, a witness, or a whole report.
      const json* node = &j;
      if (node->contains("witness")) {
        node = &node->at("witness");
      }
      if (node->contains("instance")) {
        node = &node->at("instance");
      }
      return io::instance_from_json(*node, cfg.mode());
    });
  }
  auto inputs = io::parse_inputs(a.capacity, a.function, cfg.mode());
  Instance inst;
  inst.capacity = inputs.capacity;
  inst.f = inputs.f;
  inst.g = inputs.g;
  inst.shift = parse_value(a.shift.empty() ? "0" : a.shift, cfg.mode());
  if (!a.restrict_to.empty()) {
    inst.subset = inputs.f.space().parse_subset_key(a.restrict_to);
  }
  return inst;
}

int run_check(const CheckArgs& a, const RunConfig& cfg)
{
  const auto semicopulas = semicopulas_from(a.semicopulas);
  const auto op = op_from(a.op);
  const Semicopula& s = semicopulas.front();
  const std::string& id = a.law_id;

  if (is_pointwise_law(id)) {
    const Value step = parse_value(a.grid_step, cfg.mode());
    if (id == law::shift) {
      return print_report(check_condition_shift(s, step, cfg.tol()), cfg);
    }
    if (id == law::three) {
      if (semicopulas.size() != 1 && semicopulas.size() != 3) {
        throw domain_error("law 'three' takes one or three --semicopula options");
      }
      const auto& s2 = semicopulas.size() == 3 ? semicopulas[1] : s;
      const auto& s3 = semicopulas.size() == 3 ? semicopulas[2] : s;
      return print_report(check_condition_three(s, s2, s3, step, cfg.tol()), cfg);
    }
    if (id == law::luka_dom) {
      return print_report(check_lukasiewicz_dominated(s, step, cfg.tol()), cfg);
    }
    if (!op) {
      throw domain_error("law 'idempotency' needs --op");
    }
    return print_report(check_idempotency(*op, s, step, cfg.tol()), cfg);
  }
  if (!is_integral_law(id)) {
    throw domain_error("unknown law '" + id + "'");
  }
  if (!a.instance.empty() || !a.capacity.empty() || !a.function.empty()) {
    if (a.instance.empty() && (a.capacity.empty() || a.function.empty())) {
      throw domain_error("instance mode needs both --capacity and --function (or --instance)");
    }
    return print_report(check_instance(id, semicopulas, op, instance_from_files(a, cfg), cfg.tol()), cfg);
  }
  if (cfg.mode() != Realization::exact) {
    throw domain_error("random suites run in exact realization only");
  }
  return print_report(check_random_cases(id, semicopulas, op, a.cases, a.seed, cfg.tol()), cfg);
}

int run_search(const SearchArgs& a, const RunConfig& cfg)
{
  SearchSpec spec;
  spec.law_id = a.law_id;
  spec.semicopulas = semicopulas_from(a.semicopulas);
  spec.op = op_from(a.op);
  spec.n = a.n;
  spec.denominator = a.denominator;
  spec.budget = a.budget;
  spec.seed = a.seed;
  spec.tolerance = cfg.tol();
  return print_report(search(spec), cfg);
}

int run_repro_command(const ReproArgs& a, const RunConfig& cfg)
{
  const ReproReport r = run_repro(parse_value(a.beta, Realization::exact), cfg.mode(), cfg.tol());
  if (cfg.output() == io::Format::text) {
    for (const auto& l : r.lines) {
      std::cout << (l.ok ? "ok    " : "DIFF  ") << l.name << " = " << render(l.actual) << " (expected "
                << render(l.expected) << ")\n";
    }
    std::cout << (r.strict_failure ? "ok    " : "DIFF  ")
              << "I_prod(mu, f meet g) < I_prod(mu, f) meet I_prod(mu, g)\n";
  } else {
    json lines = json::array();
    for (const auto& l : r.lines) {
      lines.push_back({{"name", l.name},
                       {"expected", render(l.expected)},
                       {"actual", render(l.actual)},
                       {"match", l.ok}});
    }
    json out{{"integrals", lines}, {"strict_failure_of_meet", r.strict_failure}, {"ok", r.ok}, {"beta", a.beta}};
    std::cout << out.dump(2) << "\n";
  }
  return r.ok ? exit_pass : exit_violation;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"fuzzint: seminormed fuzzy integrals on finite spaces and law checking"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--realization", cfg.realization, "exact (default) or float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", cfg.tolerance, "absolute tolerance for float comparisons")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate I_S(mu, f)");
  eval->add_option("--semicopula", eval_args.semicopula, "min, prod, lukasiewicz or drastic")->required();
  eval->add_option("--capacity", eval_args.capacity, "capacity JSON file")->required();
  eval->add_option("--function", eval_args.function, "function JSON file")->required();
  eval->add_option("--restrict", eval_args.restrict_to, "integrate f·1_A for A given as comma-joined labels");
  eval->add_option("--grid-step", eval_args.grid_step, "use the grid oracle with this step");

  AxiomsArgs axioms_args;
  auto* axioms = app.add_subcommand("axioms", "audit semicopula axioms of an operator on a grid");
  axioms->add_option("--op,--semicopula", axioms_args.op, "operator name (builtin, meet, join, co:<name>)");
  axioms->add_option("--grid-step", axioms_args.grid_step, "grid step in (0, 1/2]");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "check one law");
  check->add_option("law-id", check_args.law_id, "law identifier")->required()->check(CLI::IsMember(law::all()));
  check->add_option("--semicopula", check_args.semicopulas, "semicopula (repeat three times for S1 S2 S3)");
  check->add_option("--op", check_args.op, "binary operator for commuting/idempotency");
  check->add_option("--grid-step", check_args.grid_step, "grid step for pointwise laws");
  check->add_option("--cases", check_args.cases, "random cases for integral laws");
  check->add_option("--seed", check_args.seed, "seed for random cases");
  check->add_option("--capacity", check_args.capacity, "capacity JSON for a single instance");
  check->add_option("--function", check_args.function, "function JSON ({\"f\": ..., \"g\": ...})");
  check->add_option("--shift", check_args.shift, "shift a for subadditivity laws");
  check->add_option("--restrict", check_args.restrict_to, "subset A for restricted laws");
  check->add_option("--instance", check_args.instance, "instance, witness or report JSON to re-check");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "hunt for counterexamples");
  search_cmd->add_option("--law", search_args.law_id, "law identifier")->required()->check(CLI::IsMember(law::all()));
  search_cmd->add_option("--semicopula", search_args.semicopulas, "semicopula (repeat three times for S1 S2 S3)");
  search_cmd->add_option("--op", search_args.op, "binary operator");
  search_cmd->add_option("--n", search_args.n, "space size (1-6)");
  search_cmd->add_option("--denominator", search_args.denominator, "value grid denominator (1-64)");
  search_cmd->add_option("--budget", search_args.budget, "maximum number of cases");
  search_cmd->add_option("--seed", search_args.seed, "seed for sampled mode");

  ReproArgs repro_args;
  auto* repro = app.add_subcommand("repro", "reproduce the Shilkret counterexample to commuting with meet");
  repro->add_option("--beta", repro_args.beta, "mu({b}), any value in [0,1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*eval) {
      return run_eval(eval_args, cfg);
    }
    if (*axioms) {
      return run_axioms(axioms_args, cfg);
    }
    if (*check) {
      return run_check(check_args, cfg);
    }
    if (*search_cmd) {
      return run_search(search_args, cfg);
    }
    return run_repro_command(repro_args, cfg);
  } catch (const fuzzint::error& e) {
    std::cerr << "fuzzint: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "fuzzint: " << e.what() << "\n";
    return exit_input;
  }
}
