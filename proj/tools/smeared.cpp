// smeared: batch front end for the smeared-ring engine.
//
//   smeared run <problem.json> [--out <path>] [--strict]
//   smeared verify <result.json> <problem.json>
//
// Exit codes: 0 success, 1 query error or malformed input, 2 invalid configuration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "smeared/document.hpp"

namespace cli = smeared::cli;

namespace {

int do_run(const std::string& problem_path, const std::string& out_path, bool strict) {
  const cli::Problem problem = cli::load_problem(problem_path);
  const cli::RunOutcome outcome = cli::run_problem(problem, {.strict = strict});
  const std::string text = cli::dump(outcome.document);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return cli::kExitQueryError;
    }
    out << text;
  }
  if (outcome.exit_code == cli::kExitInvalid) {
    for (const auto& v : outcome.document["validation"]["violations"])
      std::cerr << "violation: " << v["message"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}

int do_verify(const std::string& result_path, const std::string& problem_path) {
  const cli::Problem problem = cli::load_problem(problem_path);
  const cli::json result = cli::load_json(result_path);
  const cli::VerifyOutcome v = cli::verify_document(result, problem);
  for (const auto& f : v.failures) std::cerr << "FAIL " << f << "\n";
  std::cout << (v.ok() ? "verified" : "rejected") << ": " << v.checks << " checks, " << v.failures.size()
            << " failures\n";
  return v.ok() ? cli::kExitOk : cli::kExitQueryError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smeared-point subrings R = ∩ (Q + I_i) of polynomial rings"};
  app.require_subcommand(1);

  std::string problem_path, out_path, result_path;
  bool strict = false;

  auto* run = app.add_subcommand("run", "Validate a problem file and answer its queries");
  run->add_option("problem", problem_path, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Write the result document here instead of stdout");
  run->add_flag("--strict", strict, "Stop at the first query error");

  auto* verify = app.add_subcommand("verify", "Re-check every certificate in a result document");
  verify->add_option("result", result_path, "Result document (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("problem", problem_path, "Problem file the result was produced from")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return do_run(problem_path, out_path, strict);
    return do_verify(result_path, problem_path);
  } catch (const smeared::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitQueryError;
  }
}
