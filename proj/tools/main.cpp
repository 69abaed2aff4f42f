#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cvw/cli.hpp"

namespace {

int exit_code(cvw::cli::FailureKind kind) {
  switch (kind) {
    case cvw::cli::FailureKind::ParseError:
    case cvw::cli::FailureKind::SchemaError: return 2;
    case cvw::cli::FailureKind::IoError: return 3;
    case cvw::cli::FailureKind::ComputeError: return 4;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement verdicts and witness optimization for continuous-variable states"};
  std::string command, schedule;
  cvw::cli::JobSpec job;
  std::uint64_t seed = 0;

  app.add_option("command", command,
                 "check-gaussian | check-nongaussian | witness-optimize | kernel-spectrum | fock-iterate | "
                 "sweep-fig1 | sweep-fig2")
      ->required();
  app.add_option("--input,-i", job.input, "JSON input document");
  app.add_option("--output,-o", job.output, "report (.json) or table (.csv) path");
  auto* seed_opt = app.add_option("--seed", seed, "master seed for stochastic commands");
  app.add_option("--cutoff", job.cutoff, "Fock truncation per mode")->check(CLI::Range(1, 64));
  app.add_option("--samples", job.samples, "number of random detect operators")->check(CLI::PositiveNumber);
  app.add_option("--schedule", schedule, "comma-separated detect scales, e.g. 1e2,1e3,1e4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const auto cmd = cvw::cli::parse_command(command);
    if (!cmd) throw cvw::cli::CliError(cvw::cli::FailureKind::ParseError, "unknown command '" + command + "'");
    job.command = *cmd;
    if (*seed_opt) job.seed = seed;
    if (!schedule.empty()) job.schedule = cvw::cli::parse_schedule(schedule);
    return cvw::cli::run(job, std::cout);
  } catch (const cvw::cli::CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}
