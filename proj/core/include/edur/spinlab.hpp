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

#ifndef EDUR_SPINLAB_HPP_
#define EDUR_SPINLAB_HPP_

// Spin-1/2 testbed: A = sin(theta) x + cos(theta) z, B = (y + z)/sqrt 2 on
// psi = |+z>, theta in [0, pi/2]. "Paper" columns are the reference closed
// forms; "model" columns come from the controlled-shift apparatus measuring A.
// The two are reported side by side and never reconciled.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edur/ineq.hpp"
#include "edur/measmodel.hpp"
#include "edur/qstate.hpp"

namespace edur {

struct SpinSetting {
  double theta;
  Observable a;
  Observable b;
  QuantumState psi;
};

/// Rejects theta outside [0, pi/2] (1e-12 slack, then clamped).
SpinSetting make_spin_setting(double theta);

using Assumption = BoundConstraint;

enum class SweepMode { kPaper, kModel, kBoth };

std::string_view to_string(SweepMode m);
SweepMode parse_sweep_mode(std::string_view name);

/// One grid point. Optional fields are "not applicable" (NA): columns of the
/// mode that was not run, and every ratio at the commuting point theta = 0.
struct SweepRecord {
  double theta = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  std::optional<double> epsilon_paper;
  std::optional<double> eta_paper;
  std::optional<double> epsilon_model;
  std::optional<double> eta_model;
  double commutator_abs = 0.0;
  std::optional<double> ozawa_lhs_paper;
  double ozawa_rhs = 0.0;
  std::optional<bool> ozawa_ok_paper;
  std::optional<bool> ozawa_ok_model;
  std::optional<double> eps_bound_heis;
  std::optional<double> eps_bound_ozawa;
  std::optional<double> coeff_mochi21;
  std::optional<double> coeff_mochi11;
  std::optional<double> product_factored_model;
  std::optional<double> ratio_model;
  std::optional<bool> mochi_ok_model;

  // Not part of the tabular output.
  std::optional<double> product_raw_model;
  std::optional<std::pair<double, double>> residuals_model;
  std::string note;
};

/// Closed forms: sigma_a = sin, sigma_b = 1/sqrt 2, eps = 0, eta = sin,
/// Ozawa lhs = sin^2, |<[A, B]>| = sqrt 2 sin.
SweepRecord paper_mode(double theta);

/// The reference closed forms as a summary, with product_factored set to
/// (eps^2 + sigma_a^2)^{1/2} (eta^2 + sigma_b^2)^{1/2}. No raw product exists in
/// this mode; product_raw mirrors the factored value.
ErrorDisturbanceSummary paper_summary(double theta);

/// Apparatus columns for the same theta, via make_projective_model(A).
SweepRecord model_mode(double theta);

/// Lower bound on eps(A) implied by the assumed relation with the reference
/// eta = sin(theta): heisenberg_product gives 1/sqrt 2; ozawa gives
/// sin(1 - sqrt2 sin)/(1 + sqrt2 sin) below sin = 1/sqrt 2 and 0 above.
double epsilon_lower_bound(double theta, Assumption assumption);

/// Coefficient c(theta) in <N^2 D^2>^{1/2} >= c(theta) |<[A, B]>|.
/// The heisenberg_product branch is singular at theta = 0 (InvalidInput).
double bound_coefficient(double theta, Assumption assumption);

struct CoefficientMinimum {
  double theta_star = 0.0;
  double value = 0.0;
};

/// Golden-section search of bound_coefficient over theta.
CoefficientMinimum coefficient_minimum(Assumption assumption);

struct SweepResult {
  std::vector<SweepRecord> records;
  /// ratio_model <= 1 at some grid angle (NA if no applicable ratio)
  std::optional<bool> ratio_at_most_one_somewhere;
  /// ratio_model >= 2 - sqrt 2 at every applicable grid angle
  std::optional<bool> ratio_above_bound_everywhere;
};

/// Records come back in grid order. A NumericFailure at one point leaves that
/// record's model columns NA with a note instead of aborting.
SweepResult sweep(const std::vector<double>& theta_grid, SweepMode mode);

/// `steps` evenly spaced angles from lo to hi inclusive (steps == 1 gives lo).
std::vector<double> theta_grid(double lo, double hi, int steps);

}  // namespace edur

#endif  // EDUR_SPINLAB_HPP_
