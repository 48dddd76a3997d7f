#include "jetbrackets/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "jetbrackets/config.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/parse.hpp"
#include "jetbrackets/poisson.hpp"
#include "jetbrackets/presets.hpp"
#include "jetbrackets/render.hpp"
#include "jetbrackets/suites.hpp"

namespace jetbrackets {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOrderOverflow = 3;

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw ConfigError("cannot open output file '" + out_path + "'");
  file << text << "\n";
  if (!file) throw ConfigError("failed to write output file '" + out_path + "'");
}

int run_derive(const std::string& config_path, const std::string& format_override,
               const std::string& out_path, std::ostream& out) {
  ProblemConfig cfg = load_config(config_path);
  RenderFormat fmt =
      render_format_from_string(format_override.empty() ? cfg.format : format_override);
  HamiltonianProblem prob = build_problem(cfg);
  PDESystem sys = derive_field_equations(prob);
  write_output(render(sys, fmt), out_path, out);
  return kExitSuccess;
}

int run_bracket(const std::string& lhs, const std::string& rhs, const std::string& config_path,
                const std::string& format_override, std::ostream& out) {
  ProblemConfig cfg = load_config(config_path);
  RenderFormat fmt =
      render_format_from_string(format_override.empty() ? cfg.format : format_override);
  HamiltonianProblem prob = build_problem(cfg);
  Form a = parse_form(lhs, prob.ctx());
  Form b = parse_form(rhs, prob.ctx());
  Form bracket = poisson_leibniz(a, b, prob.poisson(), prob.metric());
  out << render(bracket, fmt) << "\n";
  return kExitSuccess;
}

int run_check(const std::string& suite, std::uint64_t seed, int cases, std::ostream& out) {
  using SuiteFn = SuiteReport (*)(std::uint64_t, int);
  const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"differentials", run_differentials_suite}, {"brackets", run_brackets_suite},
      {"schouten", run_schouten_suite},           {"poisson", run_poisson_suite},
      {"closure", run_closure_suite},
  };
  bool all_passed = true;
  bool first = true;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    if (!first) out << "\n";
    first = false;
    SuiteReport rep = fn(seed, cases);
    out << rep.text;
    if (!rep.passed()) all_passed = false;
  }
  return all_passed ? kExitSuccess : kExitSuiteFailure;
}

int run_preset(const std::string& name, bool emit_config, const std::string& format_override,
               std::ostream& out) {
  const bool maxwell = name == "maxwell";
  if (emit_config) {
    ProblemConfig cfg = maxwell ? maxwell_config() : oscillator_config();
    out << config_to_json(cfg).dump(2) << "\n";
    return kExitSuccess;
  }
  RenderFormat fmt =
      render_format_from_string(format_override.empty() ? "text" : format_override);
  HamiltonianProblem prob = maxwell ? maxwell_problem() : oscillator_problem();
  PDESystem sys = derive_field_equations(prob);
  out << render(sys, fmt) << "\n";
  return kExitSuccess;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graded calculus on jet coordinates: differentials, brackets, field equations",
               "jetbrackets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "jetbrackets 1.0.0");

  std::string derive_config, derive_format, derive_out;
  CLI::App* derive = app.add_subcommand("derive", "derive field equations from a config file");
  derive->add_option("--config", derive_config, "problem configuration (JSON file)")->required();
  derive->add_option("--format", derive_format, "output format: text, latex, or json");
  derive->add_option("--out", derive_out, "write the rendered system to this file");

  std::string bracket_lhs, bracket_rhs, bracket_config, bracket_format;
  CLI::App* bracket =
      app.add_subcommand("bracket", "Poisson bracket of two parsed form expressions");
  bracket->add_option("--lhs", bracket_lhs, "left operand (form source text)")->required();
  bracket->add_option("--rhs", bracket_rhs, "right operand (form source text)")->required();
  bracket->add_option("--config", bracket_config, "problem configuration (JSON file)")->required();
  bracket->add_option("--format", bracket_format, "output format: text, latex, or json");

  std::string check_suite;
  std::uint64_t check_seed = 0;
  int check_cases = 50;
  CLI::App* check = app.add_subcommand("check", "run seeded identity suites");
  check
      ->add_option("--suite", check_suite,
                   "differentials, brackets, schouten, poisson, closure, or all")
      ->required()
      ->check(CLI::IsMember({"differentials", "brackets", "schouten", "poisson", "closure",
                             "all"}));
  check->add_option("--seed", check_seed, "random seed (default 0)");
  check->add_option("--cases", check_cases, "cases per suite (default 50)")
      ->check(CLI::PositiveNumber);

  std::string preset_name, preset_format;
  bool preset_emit_config = false;
  CLI::App* preset = app.add_subcommand("preset", "run a built-in example problem");
  preset->add_option("name", preset_name, "oscillator or maxwell")
      ->required()
      ->check(CLI::IsMember({"oscillator", "maxwell"}));
  preset->add_flag("--emit-config", preset_emit_config,
                   "print the equivalent derive configuration instead of running");
  preset->add_option("--format", preset_format, "output format: text, latex, or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (derive->parsed()) return run_derive(derive_config, derive_format, derive_out, out);
    if (bracket->parsed())
      return run_bracket(bracket_lhs, bracket_rhs, bracket_config, bracket_format, out);
    if (check->parsed()) return run_check(check_suite, check_seed, check_cases, out);
    if (preset->parsed()) return run_preset(preset_name, preset_emit_config, preset_format, out);
    err << "error: no subcommand selected\n";
    return kExitInputError;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const OrderOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kExitOrderOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

} // namespace jetbrackets
