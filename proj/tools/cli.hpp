// Copyright 2026 The edur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDUR_TOOLS_CLI_HPP_
#define EDUR_TOOLS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edur/ineq.hpp"
#include "edur/measmodel.hpp"
#include "edur/spinlab.hpp"

namespace edur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // bad flags or invalid input files
inline constexpr int kExitFailure = 2;    // numeric failure or I/O error
inline constexpr int kExitViolation = 3;  // `check` found a violated inequality

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by parse_args for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

enum class Subcommand { kSweep, kCheck, kLattice, kMinimize, kModelEval };
enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  Subcommand subcommand = Subcommand::kSweep;
  double theta_min = 0.0;
  double theta_max = 0.0;  // set to pi/2 by parse_args
  int theta_steps = 181;
  std::optional<double> theta;  // check
  SweepMode mode = SweepMode::kBoth;
  std::optional<std::filesystem::path> model_file;
  std::optional<std::filesystem::path> output;
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::vector<InequalityKind> inequalities{InequalityKind::kRobertson, InequalityKind::kOzawa};
  double phi = 0.0;  // lattice; set to pi/2 by parse_args
  int random_pairs = 0;
  BoundConstraint constraint = BoundConstraint::kOzawa;
  double commutator = 1.0;
  double resolution = 1e-3;
};

/// argv[0] is the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Executes a parsed configuration; returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Column order of the sweep table.
const std::vector<std::string>& sweep_columns();

std::string emit_csv(const std::vector<SweepRecord>& records);
nlohmann::json emit_json(const std::vector<SweepRecord>& records);

/// Formats a real with 12 significant digits.
std::string format_real(double v);

/// Writes through a temporary file in the target directory and renames it
/// into place. Throws std::runtime_error on failure.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Loads a measurement model description. Complex numbers are [re, im]
/// pairs (plain numbers are read as reals). Keys: system_dim, probe_dim,
/// probe_state (vector, or matrix for a density operator), interaction,
/// meter, measured, disturbed (row-major, flat or nested), optional noise,
/// optional system_state (default |0>).
struct LoadedModel {
  MeasurementModel model;
  QuantumState system_state;
};
LoadedModel load_model(const nlohmann::json& doc);
LoadedModel load_model_file(const std::filesystem::path& path);

}  // namespace edur::cli

#endif  // EDUR_TOOLS_CLI_HPP_
