#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cvw/criteria.hpp"
#include "cvw/fock.hpp"
#include "cvw/nongaussian.hpp"
#include "cvw/witness.hpp"

namespace cvw::cli {

enum class Command {
  CheckGaussian,
  CheckNongaussian,
  WitnessOptimize,
  KernelSpectrum,
  FockIterate,
  SweepFig1,
  SweepFig2,
};

std::optional<Command> parse_command(const std::string& name);
const char* to_string(Command c);

struct JobSpec {
  Command command = Command::CheckGaussian;
  std::string input;   // JSON document; empty when the command needs none
  std::string output;  // report (.json) or table (.csv) path; empty = stdout only
  std::optional<std::uint64_t> seed;
  int cutoff = kDefaultCutoff;
  int samples = 200;
  std::vector<double> schedule = kDefaultLSchedule;
};

enum class FailureKind { ParseError, SchemaError, IoError, ComputeError };

class CliError : public std::runtime_error {
 public:
  CliError(FailureKind kind, const std::string& message, std::string pointer = {});
  FailureKind kind() const { return kind_; }
  const std::string& pointer() const { return pointer_; }

 private:
  FailureKind kind_;
  std::string pointer_;
};

// Tagged state descriptions accepted in input documents.
struct RawCM { Matrix cm; };
struct SymmetricTwoModeState { double a, c1, c2; };
struct SqueezedThermalState { double a, b, c; };
struct GhzState { double a, c; int n; };

using StateDescription = std::variant<RawCM, StandardForm, SymmetricTwoModeState, SqueezedThermalState,
                                      WernerWolf2x2Params, SymmetricMultimodeParams, GhzState, NgpasgSpec>;

// Throws CliError(SchemaError) with the JSON pointer of the offending value.
StateDescription parse_state(const nlohmann::json& doc, const std::string& pointer = "");
StateDescription parse_state_file(const std::string& path);

// Covariance matrix described by a Gaussian state (not defined for ngpasg).
Matrix state_matrix(const StateDescription& s);

std::vector<double> parse_schedule(const std::string& text);

// Runs one job: human-readable lines go to `log`, artifacts to job.output.
// Returns 0 on success; verdicts never change the exit status.
int run(const JobSpec& job, std::ostream& log);

// JSON helpers shared by reports.
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json verdict_to_json(const Verdict& v);
std::string verdict_line(const Verdict& v);

}  // namespace cvw::cli
