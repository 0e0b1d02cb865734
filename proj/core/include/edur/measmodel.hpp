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

#ifndef EDUR_MEASMODEL_HPP_
#define EDUR_MEASMODEL_HPP_

// Indirect measurement models (system + probe, interaction U, probe state xi,
// meter M) and the Heisenberg-picture noise and disturbance quantities they
// induce on a system state psi. All expectations are taken on psi (x) xi.

#include <optional>
#include <utility>

#include "edur/matcore.hpp"
#include "edur/qstate.hpp"

namespace edur {

class MeasurementModel {
 public:
  /// Rejects inconsistent dimensions and an interaction with
  /// max |U^dag U - I| > 1e-10. `meter` and `noise` live on the probe,
  /// `measured` and `disturbed` on the system.
  MeasurementModel(QuantumState probe_state, ComplexMatrix interaction, Observable meter,
                   Observable measured, Observable disturbed, std::optional<Observable> noise = std::nullopt);

  Eigen::Index system_dim() const { return measured_.dim(); }
  Eigen::Index probe_dim() const { return meter_.dim(); }
  const QuantumState& probe_state() const { return probe_state_; }
  const ComplexMatrix& interaction() const { return interaction_; }
  const Observable& meter() const { return meter_; }
  const Observable& measured() const { return measured_; }
  const Observable& disturbed() const { return disturbed_; }
  const std::optional<Observable>& noise() const { return noise_; }

  MeasurementModel with_disturbed(Observable b) const;

 private:
  QuantumState probe_state_;
  ComplexMatrix interaction_;
  Observable meter_;
  Observable measured_;
  Observable disturbed_;
  std::optional<Observable> noise_;
};

/// Composite-space operators for one (model, psi) pair.
///   a_in = A (x) I, b_in = B (x) I
///   m_out = U^dag (I (x) (M + dM)) U, b_out = U^dag (B (x) I) U
///   n_a = m_out - a_in, d_b = b_out - b_in
///   script_n = m_out - <a_in>, script_d = b_out - <b_in>
struct HeisenbergQuantities {
  QuantumState state;  // psi (x) xi
  HermitianMatrix a_in, b_in, m_out, b_out;
  HermitianMatrix n_a, d_b, script_n, script_d;
};

/// Throws NumericFailure if [m_out, b_out] exceeds 1e-10.
HeisenbergQuantities heisenberg_picture(const MeasurementModel& model, const QuantumState& psi);

/// <N(A)^2>^{1/2}
double epsilon(const MeasurementModel& model, const QuantumState& psi);
/// <D(B)^2>^{1/2}
double eta(const MeasurementModel& model, const QuantumState& psi);

struct ProductQuantity {
  double raw = 0.0;       // <(N^2 D^2 + D^2 N^2) / 2>^{1/2} with the script operators
  double factored = 0.0;  // <script_n^2>^{1/2} <script_d^2>^{1/2}
};

ProductQuantity product_quantity(const MeasurementModel& model, const QuantumState& psi);

/// (Re <{N(A), dA}>/2, Re <{D(B), dB}>/2) with dX = X_in - <X_in>.
std::pair<double, double> assumption_residuals(const MeasurementModel& model, const QuantumState& psi);

/// Re <{dM_out, dA}>/2 for the attached noise term; 0 without one.
double noise_correlation_residual(const MeasurementModel& model, const QuantumState& psi);

struct ErrorDisturbanceSummary {
  double epsilon = 0.0;
  double eta = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  double product_raw = 0.0;
  double product_factored = 0.0;
  std::pair<double, double> assumption_residuals{0.0, 0.0};
  /// |<[A, B]>| on psi
  double commutator_abs = 0.0;
};

ErrorDisturbanceSummary summarize(const MeasurementModel& model, const QuantumState& psi);

/// Controlled-shift (von Neumann) model: U = sum_k P_k (x) S^k with S the
/// cyclic shift on the probe, xi = |0>, M = sum_k lambda_k |k><k|. Measures
/// `target` with zero noise on every system state. `disturbed` defaults to
/// `target`. Rejects probe_dim smaller than the number of distinct eigenvalues.
MeasurementModel make_projective_model(const Observable& target, Eigen::Index probe_dim,
                                       std::optional<Observable> disturbed = std::nullopt);

/// Copy of `model` with the probe-local noise operator `delta` added to the
/// meter. Rejects `delta` whose dimension is not the probe dimension.
MeasurementModel attach_noise(const MeasurementModel& model, const Observable& delta);

}  // namespace edur

#endif  // EDUR_MEASMODEL_HPP_
