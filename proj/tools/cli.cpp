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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <system_error>
#include <variant>

#include "edur/errors.hpp"
#include "edur/qlogic.hpp"

namespace edur::cli {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

bool theta_in_range(double t) { return t >= 0.0 && t <= kHalfPi + 1e-12; }

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw UsageError("--format must be csv or json, got '" + s + "'");
}

std::vector<InequalityKind> parse_inequality_list(const std::string& s) {
  std::vector<InequalityKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      out.assign(kAllInequalities.begin(), kAllInequalities.end());
      continue;
    }
    try {
      out.push_back(parse_inequality(item));
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("--inequalities needs at least one name");
  return out;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (key != "satisfaction") throw UsageError("unknown tolerance '" + key + "' (known: satisfaction)");
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("malformed tolerance value in '" + item + "'");
    }
    if (!(v >= 0.0) || !std::isfinite(v)) throw UsageError("tolerance must be finite and >= 0");
    out[key] = v;
  }
  return out;
}

double satisfaction_tol(const RunConfig& c) {
  const auto it = c.tolerances.find("satisfaction");
  return it == c.tolerances.end() ? kSatisfactionTol : it->second;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

nlohmann::json number(double v) { return v; }

std::string csv_cell(const nlohmann::json& v) { return v.is_number_float() ? format_real(v.get<double>()) : v.dump(); }

nlohmann::json report_json(const InequalityReport& r) {
  return {{"name", std::string(to_string(r.kind))},
          {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"slack", number(r.slack)},
          {"satisfied", r.satisfied}};
}

nlohmann::json summary_json(const ErrorDisturbanceSummary& s) {
  return {{"epsilon", number(s.epsilon)},
          {"eta", number(s.eta)},
          {"sigma_a", number(s.sigma_a)},
          {"sigma_b", number(s.sigma_b)},
          {"product_raw", number(s.product_raw)},
          {"product_factored", number(s.product_factored)},
          {"assumption_residual_noise", number(s.assumption_residuals.first)},
          {"assumption_residual_disturbance", number(s.assumption_residuals.second)},
          {"commutator_abs", number(s.commutator_abs)}};
}

std::string render(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void deliver(const RunConfig& c, const std::string& content, std::ostream& out) {
  if (c.output) {
    write_atomic(*c.output, content);
  } else {
    out << content;
  }
}

// ---- sweep ------------------------------------------------------------------

int run_sweep(const RunConfig& c, std::ostream& out) {
  const SweepResult result = sweep(theta_grid(c.theta_min, c.theta_max, c.theta_steps), c.mode);
  const std::string content =
      c.format == OutputFormat::kCsv ? emit_csv(result.records) : render(emit_json(result.records));
  write_atomic(*c.output, content);

  auto opt = [](const std::optional<bool>& b) { return b ? bool_text(*b) : std::string("NA"); };
  std::size_t failures = 0;
  for (const SweepRecord& r : result.records) failures += r.note.empty() ? 0 : 1;
  out << "records=" << result.records.size() << " mode=" << to_string(c.mode)
      << " ratio_at_most_one_somewhere=" << opt(result.ratio_at_most_one_somewhere)
      << " ratio_above_bound_everywhere=" << opt(result.ratio_above_bound_everywhere)
      << " numeric_failures=" << failures << "\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

// ---- check ------------------------------------------------------------------

int run_check(const RunConfig& c, std::ostream& out) {
  struct Block {
    std::string label;
    ErrorDisturbanceSummary q;
  };
  std::vector<Block> blocks;
  if (c.model_file) {
    const LoadedModel m = load_model_file(*c.model_file);
    blocks.push_back({"model-file", summarize(m.model, m.system_state)});
  } else {
    const double theta = *c.theta;
    if (c.mode != SweepMode::kModel) blocks.push_back({"paper", paper_summary(theta)});
    if (c.mode != SweepMode::kPaper) {
      const SpinSetting s = make_spin_setting(theta);
      blocks.push_back({"model", summarize(make_projective_model(s.a, 2, s.b), s.psi)});
    }
  }

  const double tol = satisfaction_tol(c);
  bool violated = false;
  nlohmann::json doc = nlohmann::json::array();
  std::ostringstream csv;
  csv << "mode,inequality,lhs,rhs,slack,satisfied,gating\n";
  out << std::left << std::setw(12) << "mode" << std::setw(20) << "inequality" << std::setw(20) << "lhs"
      << std::setw(20) << "rhs" << std::setw(12) << "satisfied" << "gating\n";
  for (const Block& b : blocks) {
    for (InequalityKind k : kAllInequalities) {
      const InequalityReport r = evaluate(k, b.q, b.q.commutator_abs, tol);
      const bool gating = std::find(c.inequalities.begin(), c.inequalities.end(), k) != c.inequalities.end();
      if (gating && !r.satisfied) violated = true;
      out << std::left << std::setw(12) << b.label << std::setw(20) << to_string(k) << std::setw(20)
          << format_real(r.lhs) << std::setw(20) << format_real(r.rhs) << std::setw(12) << bool_text(r.satisfied)
          << bool_text(gating) << "\n";
      nlohmann::json row = report_json(r);
      row["mode"] = b.label;
      row["gating"] = gating;
      doc.push_back(row);
      csv << b.label << ',' << to_string(k) << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
          << format_real(r.slack) << ',' << bool_text(r.satisfied) << ',' << bool_text(gating) << "\n";
    }
  }
  if (c.output) write_atomic(*c.output, c.format == OutputFormat::kCsv ? csv.str() : render(doc));
  out << (violated ? "VIOLATED" : "OK") << "\n";
  return violated ? kExitViolation : kExitOk;
}

// ---- lattice ----------------------------------------------------------------

ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

// Diagonal 0/1 pattern conjugated by `u`; random nonempty pattern.
ProjectionOperator pattern_projector(const ComplexMatrix& u, std::uint32_t mask) {
  const Eigen::Index n = u.rows();
  ComplexMatrix d = zeros(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k, k) = (mask >> k) & 1U ? 1.0 : 0.0;
  return ProjectionOperator(ComplexMatrix(u * d * u.adjoint()));
}

struct PairTally {
  int pairs = 0;
  int commuting = 0;
  int disagreements = 0;
};

PairTally random_pair_tally(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(2, 4);
  PairTally t;
  for (int i = 0; i < count; ++i) {
    const Eigen::Index n = dim_dist(rng);
    std::uniform_int_distribution<std::uint32_t> mask_dist(1, (1U << n) - 1);
    const ComplexMatrix u = random_unitary(rng, n);
    const ProjectionOperator p = pattern_projector(u, mask_dist(rng));
    // Even draws share p's eigenbasis, odd draws use an unrelated basis.
    const ComplexMatrix basis = (i % 2 == 0) ? u : random_unitary(rng, n);
    const ProjectionOperator q = pattern_projector(basis, mask_dist(rng));
    const LatticeCheckReport r = distributivity_holds(p, q);
    ++t.pairs;
    t.commuting += r.commutes ? 1 : 0;
    t.disagreements += (r.commutes != r.distributive) ? 1 : 0;
  }
  return t;
}

int run_lattice(const RunConfig& c, std::ostream& out) {
  const ComplexMatrix id = identity(2);
  const ProjectionOperator px(ComplexMatrix(0.5 * (id + pauli::x())));
  const ProjectionOperator pphi(ComplexMatrix(0.5 * (id + pauli::in_plane(c.phi))));
  const LatticeCheckReport pair = distributivity_holds(px, pphi);
  const ProjectionOperator m = meet(px, pphi);
  const SpectralObservableMap sx = spectral_map(Observable("sigma_x", pauli::x()));
  const TheoremReport th = theorem_brute_force(sx.projectors, pphi);

  nlohmann::json doc = {{"phi", number(c.phi)},
                        {"meet_rank", m.rank()},
                        {"distributive", pair.distributive},
                        {"commutes", pair.commutes},
                        {"distributivity_residual", number(pair.max_residual)},
                        {"theorem_pass", th.pass},
                        {"completeness", th.completeness},
                        {"additivity", th.additivity},
                        {"complement", th.complement},
                        {"join_of_meets_rank", th.join_of_meets.rank()}};
  if (c.random_pairs > 0) {
    const PairTally t = random_pair_tally(c.random_pairs, c.seed);
    doc["random_pairs"] = {{"seed", c.seed}, {"pairs", t.pairs}, {"commuting", t.commuting},
                           {"disagreements", t.disagreements}};
  }
  if (c.format == OutputFormat::kJson) {
    deliver(c, render(doc), out);
  } else {
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [k, v] : doc.items()) {
      if (v.is_object()) {
        for (const auto& [k2, v2] : v.items()) csv << k << '.' << k2 << ',' << csv_cell(v2) << "\n";
      } else {
        csv << k << ',' << csv_cell(v) << "\n";
      }
    }
    deliver(c, csv.str(), out);
  }
  return kExitOk;
}

// ---- minimize ---------------------------------------------------------------

int run_minimize(const RunConfig& c, std::ostream& out) {
  const BoundConstantResult r = verify_bound_constant(c.constraint, c.commutator, c.resolution);
  nlohmann::json doc = {{"constraint", std::string(to_string(r.constraint))},
                        {"commutator_abs", number(c.commutator)},
                        {"grid_resolution", number(r.grid_resolution)},
                        {"grid_minimum_ratio", number(r.grid_minimum_ratio)},
                        {"minimum_ratio", number(r.minimum_ratio)},
                        {"argmin",
                         {{"epsilon", number(r.argmin.epsilon)},
                          {"eta", number(r.argmin.eta)},
                          {"sigma_a", number(r.argmin.sigma_a)},
                          {"sigma_b", number(r.argmin.sigma_b)}}}};
  if (c.format == OutputFormat::kJson) {
    deliver(c, render(doc), out);
  } else {
    std::ostringstream csv;
    csv << "constraint,commutator_abs,grid_resolution,grid_minimum_ratio,minimum_ratio,epsilon,eta,sigma_a,sigma_b\n"
        << to_string(r.constraint) << ',' << format_real(c.commutator) << ',' << format_real(r.grid_resolution)
        << ',' << format_real(r.grid_minimum_ratio) << ',' << format_real(r.minimum_ratio) << ','
        << format_real(r.argmin.epsilon) << ',' << format_real(r.argmin.eta) << ','
        << format_real(r.argmin.sigma_a) << ',' << format_real(r.argmin.sigma_b) << "\n";
    deliver(c, csv.str(), out);
  }
  return kExitOk;
}

// ---- model-eval -------------------------------------------------------------

int run_model_eval(const RunConfig& c, std::ostream& out) {
  const LoadedModel m = load_model_file(*c.model_file);
  const ErrorDisturbanceSummary s = summarize(m.model, m.system_state);
  nlohmann::json reports = nlohmann::json::array();
  for (InequalityKind k : kAllInequalities) {
    reports.push_back(report_json(evaluate(k, s, s.commutator_abs, satisfaction_tol(c))));
  }
  nlohmann::json doc = {{"summary", summary_json(s)},
                        {"noise_correlation_residual", number(noise_correlation_residual(m.model, m.system_state))},
                        {"inequalities", reports}};
  if (c.format == OutputFormat::kJson) {
    deliver(c, render(doc), out);
  } else {
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [k, v] : doc["summary"].items()) csv << k << ',' << format_real(v.get<double>()) << "\n";
    csv << "noise_correlation_residual," << format_real(doc["noise_correlation_residual"].get<double>()) << "\n";
    for (const auto& r : reports) {
      csv << r["name"].get<std::string>() << "_satisfied," << bool_text(r["satisfied"].get<bool>()) << "\n";
    }
    deliver(c, csv.str(), out);
  }
  return kExitOk;
}

// ---- model file parsing -----------------------------------------------------

Complex read_complex(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw InvalidInput("model file: complex numbers are [re, im] pairs, got " + v.dump());
}

bool is_complex(const nlohmann::json& v) {
  return v.is_number() || (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number());
}

bool all_complex(const nlohmann::json& v) {
  return std::all_of(v.begin(), v.end(), [](const nlohmann::json& e) { return is_complex(e); });
}

// n*n scalars read row-major; otherwise n rows of n scalars.
ComplexMatrix read_matrix_value(const nlohmann::json& v, const std::string& key, Eigen::Index n) {
  const auto count = static_cast<std::size_t>(n);
  ComplexMatrix m(n, n);
  if (v.is_array() && v.size() == count * count && all_complex(v)) {
    for (Eigen::Index i = 0; i < n * n; ++i) m(i / n, i % n) = read_complex(v[static_cast<std::size_t>(i)]);
    return m;
  }
  if (v.is_array() && v.size() == count &&
      std::all_of(v.begin(), v.end(),
                  [&](const nlohmann::json& row) { return row.is_array() && row.size() == count && all_complex(row); })) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = read_complex(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
    return m;
  }
  throw InvalidInput("model file: '" + key + "' must be " + std::to_string(n) + "x" + std::to_string(n) +
                     " (flat row-major or nested rows)");
}

ComplexMatrix read_matrix(const nlohmann::json& doc, const char* key, Eigen::Index n) {
  if (!doc.contains(key)) throw InvalidInput(std::string("model file: missing '") + key + "'");
  return read_matrix_value(doc.at(key), key, n);
}

// A list of n scalars is a state vector; anything else must be a density matrix.
QuantumState read_state(const nlohmann::json& v, Eigen::Index n, const char* key) {
  if (v.is_array() && v.size() == static_cast<std::size_t>(n) && all_complex(v)) {
    ComplexVector vec(n);
    for (Eigen::Index i = 0; i < n; ++i) vec(i) = read_complex(v[static_cast<std::size_t>(i)]);
    return QuantumState::pure(vec);
  }
  return QuantumState::mixed(HermitianMatrix(read_matrix_value(v, key, n)));
}

Eigen::Index read_dim(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer() || doc.at(key).get<long long>() < 1) {
    throw InvalidInput(std::string("model file: '") + key + "' must be a positive integer");
  }
  return static_cast<Eigen::Index>(doc.at(key).get<long long>());
}

}  // namespace

// ---- public -----------------------------------------------------------------

RunConfig parse_args(const std::vector<std::string>& argv) {
  RunConfig cfg;
  cfg.theta_max = kHalfPi;
  cfg.phi = kHalfPi;

  CLI::App app{"edur: error-disturbance uncertainty relation toolkit", argv.empty() ? "edur" : argv[0]};
  app.require_subcommand(1, 1);

  std::string mode = "both";
  std::string format = "csv";
  std::string output;
  std::string model_file;
  std::string inequalities;
  std::string constraint;
  std::vector<std::string> tolerances;
  double theta = 0.0;

  auto common = [&](CLI::App* sub, bool output_required) {
    auto* o = sub->add_option("-o,--output", output, "Output file (written atomically)");
    if (output_required) o->required();
    sub->add_option("--format", format, "csv or json");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    sub->add_option("--tol", tolerances, "Tolerance override key=value (satisfaction)");
  };

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Theta sweep of the spin-1/2 example");
  sweep_cmd->add_option("--theta-min", cfg.theta_min, "Smallest angle (rad)");
  sweep_cmd->add_option("--theta-max", cfg.theta_max, "Largest angle (rad)");
  sweep_cmd->add_option("--theta-steps", cfg.theta_steps, "Number of grid points");
  sweep_cmd->add_option("--mode", mode, "paper, model or both");
  common(sweep_cmd, true);

  CLI::App* check_cmd = app.add_subcommand("check", "Evaluate the inequalities at one angle");
  auto* theta_opt = check_cmd->add_option("--theta", theta, "Angle (rad)");
  check_cmd->add_option("--mode", mode, "paper, model or both");
  auto* check_model = check_cmd->add_option("--model-file", model_file, "Evaluate a model file instead");
  check_cmd->add_option("--inequalities", inequalities,
                        "Comma list deciding the exit code (default robertson,ozawa; 'all' for every one)");
  common(check_cmd, false);

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "Projection-lattice measurability test");
  lattice_cmd->add_option("--phi", cfg.phi, "Angle of sigma_phi (rad)");
  lattice_cmd->add_option("--random-pairs", cfg.random_pairs, "Also tally random projector pairs");
  common(lattice_cmd, false);

  CLI::App* minimize_cmd = app.add_subcommand("minimize", "Numerically recover a bound constant");
  minimize_cmd->add_option("--constraint", constraint, "ozawa or heisenberg_product")->required();
  minimize_cmd->add_option("--commutator", cfg.commutator, "|<[A,B]>| (> 0)");
  minimize_cmd->add_option("--resolution", cfg.resolution, "Finest grid spacing");
  common(minimize_cmd, false);

  CLI::App* eval_cmd = app.add_subcommand("model-eval", "Evaluate a measurement model file");
  eval_cmd->add_option("--model-file", model_file, "Model description (JSON)")->required();
  common(eval_cmd, false);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();  // program name
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) throw HelpRequested(sub->help());
  }

  if (sweep_cmd->parsed()) cfg.subcommand = Subcommand::kSweep;
  if (check_cmd->parsed()) cfg.subcommand = Subcommand::kCheck;
  if (lattice_cmd->parsed()) cfg.subcommand = Subcommand::kLattice;
  if (minimize_cmd->parsed()) cfg.subcommand = Subcommand::kMinimize;
  if (eval_cmd->parsed()) cfg.subcommand = Subcommand::kModelEval;

  try {
    cfg.mode = parse_sweep_mode(mode);
    if (check_cmd->parsed() || minimize_cmd->parsed()) {
      if (!constraint.empty()) cfg.constraint = parse_bound_constraint(constraint);
    }
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  cfg.format = parse_format(format);
  cfg.tolerances = parse_tolerances(tolerances);
  if (!output.empty()) cfg.output = output;
  if (!model_file.empty()) cfg.model_file = model_file;
  if (!inequalities.empty()) cfg.inequalities = parse_inequality_list(inequalities);

  if (cfg.subcommand == Subcommand::kSweep) {
    if (!theta_in_range(cfg.theta_min) || !theta_in_range(cfg.theta_max)) {
      throw UsageError("--theta-min/--theta-max must lie in [0, pi/2]");
    }
    if (cfg.theta_min > cfg.theta_max) throw UsageError("--theta-min exceeds --theta-max");
    if (cfg.theta_steps < 1) throw UsageError("--theta-steps must be >= 1");
  }
  if (cfg.subcommand == Subcommand::kCheck) {
    if (theta_opt->count() > 0) {
      if (!theta_in_range(theta)) throw UsageError("--theta must lie in [0, pi/2]");
      cfg.theta = theta;
    } else if (check_model->count() == 0) {
      throw UsageError("check needs --theta or --model-file");
    }
  }
  if (cfg.subcommand == Subcommand::kLattice) {
    if (!std::isfinite(cfg.phi)) throw UsageError("--phi must be finite");
    if (cfg.random_pairs < 0) throw UsageError("--random-pairs must be >= 0");
  }
  if (cfg.subcommand == Subcommand::kMinimize) {
    if (!(cfg.commutator > 0.0) || !std::isfinite(cfg.commutator)) throw UsageError("--commutator must be > 0");
    if (!(cfg.resolution > 0.0)) throw UsageError("--resolution must be > 0");
  }
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kSweep:
        return run_sweep(config, out);
      case Subcommand::kCheck:
        return run_check(config, out);
      case Subcommand::kLattice:
        return run_lattice(config, out);
      case Subcommand::kMinimize:
        return run_minimize(config, out);
      case Subcommand::kModelEval:
        return run_model_eval(config, out);
    }
  } catch (const UsageError& e) {
    err << "edur: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "edur: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericFailure& e) {
    err << "edur: numeric failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "edur: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "theta",          "sigma_a",         "sigma_b",        "epsilon_paper",        "eta_paper",
      "epsilon_model",  "eta_model",       "commutator_abs", "ozawa_lhs_paper",      "ozawa_rhs",
      "ozawa_ok_paper", "ozawa_ok_model",  "eps_bound_heis", "eps_bound_ozawa",      "coeff_mochi21",
      "coeff_mochi11",  "product_factored_model",            "ratio_model",          "mochi_ok_model"};
  return cols;
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

// One cell per column, in sweep_columns() order; nullopt is NA.
using Cell = std::variant<std::optional<double>, std::optional<bool>>;

std::vector<Cell> cells(const SweepRecord& r) {
  auto num = [](double v) { return Cell{std::optional<double>(v)}; };
  return {num(r.theta),           num(r.sigma_a),          num(r.sigma_b),
          Cell{r.epsilon_paper},  Cell{r.eta_paper},       Cell{r.epsilon_model},
          Cell{r.eta_model},      num(r.commutator_abs),   Cell{r.ozawa_lhs_paper},
          num(r.ozawa_rhs),       Cell{r.ozawa_ok_paper},  Cell{r.ozawa_ok_model},
          Cell{r.eps_bound_heis}, Cell{r.eps_bound_ozawa}, Cell{r.coeff_mochi21},
          Cell{r.coeff_mochi11},  Cell{r.product_factored_model},
          Cell{r.ratio_model},    Cell{r.mochi_ok_model}};
}

}  // namespace

std::string emit_csv(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw InvalidInput("emit: no records");
  std::ostringstream os;
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const SweepRecord& r : records) {
    const std::vector<Cell> row = cells(r);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const auto* d = std::get_if<std::optional<double>>(&row[i])) {
        os << (*d ? format_real(**d) : "NA");
      } else {
        const auto& b = std::get<std::optional<bool>>(row[i]);
        os << (b ? bool_text(*b) : "NA");
      }
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json emit_json(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw InvalidInput("emit: no records");
  nlohmann::json arr = nlohmann::json::array();
  const auto& cols = sweep_columns();
  for (const SweepRecord& r : records) {
    const std::vector<Cell> row = cells(r);
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* d = std::get_if<std::optional<double>>(&row[i])) {
        obj[cols[i]] = *d ? number(**d) : nlohmann::json(nullptr);
      } else {
        const auto& b = std::get<std::optional<bool>>(row[i]);
        obj[cols[i]] = b ? nlohmann::json(*b) : nlohmann::json(nullptr);
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::path tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

LoadedModel load_model(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("model file: top level must be an object");
  const Eigen::Index ns = read_dim(doc, "system_dim");
  const Eigen::Index np = read_dim(doc, "probe_dim");
  if (!doc.contains("probe_state")) throw InvalidInput("model file: missing 'probe_state'");
  QuantumState xi = read_state(doc.at("probe_state"), np, "probe_state");
  std::optional<Observable> noise;
  if (doc.contains("noise") && !doc.at("noise").is_null()) noise = Observable("dM", read_matrix(doc, "noise", np));
  QuantumState psi = doc.contains("system_state") ? read_state(doc.at("system_state"), ns, "system_state")
                                                  : QuantumState::basis(ns, 0);
  MeasurementModel model(std::move(xi), read_matrix(doc, "interaction", ns * np),
                         Observable("M", read_matrix(doc, "meter", np)),
                         Observable("A", read_matrix(doc, "measured", ns)),
                         Observable("B", read_matrix(doc, "disturbed", ns)), std::move(noise));
  return LoadedModel{std::move(model), std::move(psi)};
}

LoadedModel load_model_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open model file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("model file is not valid JSON: ") + e.what());
  }
  return load_model(doc);
}

}  // namespace edur::cli
