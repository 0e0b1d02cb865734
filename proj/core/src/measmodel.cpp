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

#include "edur/measmodel.hpp"

#include <string>

#include "edur/errors.hpp"

namespace edur {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kOutCommuteTol = 1e-10;

double second_moment(const HermitianMatrix& x, const QuantumState& s) {
  return expectation(HermitianMatrix(x.matrix() * x.matrix()), s);
}

double sym_product_expectation(const ComplexMatrix& a, const ComplexMatrix& b, const QuantumState& s) {
  return 0.5 * expectation_value(anticommutator(a, b), s).real();
}

}  // namespace

MeasurementModel::MeasurementModel(QuantumState probe_state, ComplexMatrix interaction, Observable meter,
                                   Observable measured, Observable disturbed, std::optional<Observable> noise)
    : probe_state_(std::move(probe_state)),
      interaction_(std::move(interaction)),
      meter_(std::move(meter)),
      measured_(std::move(measured)),
      disturbed_(std::move(disturbed)),
      noise_(std::move(noise)) {
  if (measured_.dim() != disturbed_.dim()) {
    throw InvalidInput("MeasurementModel: measured and disturbed observables must share the system space");
  }
  if (probe_state_.dim() != meter_.dim()) {
    throw InvalidInput("MeasurementModel: probe state and meter dimensions differ");
  }
  if (noise_ && noise_->dim() != meter_.dim()) {
    throw InvalidInput("MeasurementModel: noise operator must act on the probe");
  }
  const Eigen::Index n = system_dim() * probe_dim();
  if (interaction_.rows() != n || interaction_.cols() != n) {
    throw InvalidInput("MeasurementModel: interaction must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!interaction_.allFinite() || !is_unitary(interaction_, kUnitaryTol)) {
    throw InvalidInput("MeasurementModel: interaction is not unitary");
  }
}

MeasurementModel MeasurementModel::with_disturbed(Observable b) const {
  return MeasurementModel(probe_state_, interaction_, meter_, measured_, std::move(b), noise_);
}

HeisenbergQuantities heisenberg_picture(const MeasurementModel& model, const QuantumState& psi) {
  if (psi.dim() != model.system_dim()) {
    throw InvalidInput("heisenberg_picture: system state dimension does not match the model");
  }
  const ComplexMatrix& u = model.interaction();
  const ComplexMatrix id_s = identity(model.system_dim());
  const ComplexMatrix id_p = identity(model.probe_dim());
  const Eigen::Index n = model.system_dim() * model.probe_dim();

  ComplexMatrix meter = model.meter().op.matrix();
  if (model.noise()) meter += model.noise()->op.matrix();

  QuantumState state = product_state(psi, model.probe_state());
  HermitianMatrix a_in(tensor(model.measured().op.matrix(), id_p));
  HermitianMatrix b_in(tensor(model.disturbed().op.matrix(), id_p));
  HermitianMatrix m_out(ComplexMatrix(u.adjoint() * tensor(id_s, meter) * u));
  HermitianMatrix b_out(ComplexMatrix(u.adjoint() * b_in.matrix() * u));

  if (max_abs(commutator(m_out, b_out)) > kOutCommuteTol) {
    throw NumericFailure("heisenberg_picture: meter and disturbed observable fail to commute after interaction");
  }

  const double mean_a = expectation(a_in, state);
  const double mean_b = expectation(b_in, state);
  const ComplexMatrix id = identity(n);
  HermitianMatrix n_a = m_out - a_in;
  HermitianMatrix d_b = b_out - b_in;
  HermitianMatrix script_n(ComplexMatrix(m_out.matrix() - mean_a * id));
  HermitianMatrix script_d(ComplexMatrix(b_out.matrix() - mean_b * id));
  return HeisenbergQuantities{std::move(state), std::move(a_in),     std::move(b_in),
                              std::move(m_out), std::move(b_out),    std::move(n_a),
                              std::move(d_b),   std::move(script_n), std::move(script_d)};
}

double epsilon(const MeasurementModel& model, const QuantumState& psi) {
  const HeisenbergQuantities q = heisenberg_picture(model, psi);
  return checked_sqrt(second_moment(q.n_a, q.state), "epsilon");
}

double eta(const MeasurementModel& model, const QuantumState& psi) {
  const HeisenbergQuantities q = heisenberg_picture(model, psi);
  return checked_sqrt(second_moment(q.d_b, q.state), "eta");
}

namespace {

ProductQuantity product_from(const HeisenbergQuantities& q) {
  const ComplexMatrix n2 = q.script_n.matrix() * q.script_n.matrix();
  const ComplexMatrix d2 = q.script_d.matrix() * q.script_d.matrix();
  ProductQuantity out;
  out.raw = checked_sqrt(sym_product_expectation(n2, d2, q.state), "product_quantity");
  out.factored = checked_sqrt(second_moment(q.script_n, q.state), "product_quantity") *
                 checked_sqrt(second_moment(q.script_d, q.state), "product_quantity");
  return out;
}

std::pair<double, double> residuals_from(const HeisenbergQuantities& q) {
  const Eigen::Index n = q.a_in.dim();
  const ComplexMatrix da = q.a_in.matrix() - expectation(q.a_in, q.state) * identity(n);
  const ComplexMatrix db = q.b_in.matrix() - expectation(q.b_in, q.state) * identity(n);
  return {sym_product_expectation(q.n_a.matrix(), da, q.state),
          sym_product_expectation(q.d_b.matrix(), db, q.state)};
}

}  // namespace

ProductQuantity product_quantity(const MeasurementModel& model, const QuantumState& psi) {
  return product_from(heisenberg_picture(model, psi));
}

std::pair<double, double> assumption_residuals(const MeasurementModel& model, const QuantumState& psi) {
  return residuals_from(heisenberg_picture(model, psi));
}

double noise_correlation_residual(const MeasurementModel& model, const QuantumState& psi) {
  if (!model.noise()) return 0.0;
  if (psi.dim() != model.system_dim()) {
    throw InvalidInput("noise_correlation_residual: system state dimension does not match the model");
  }
  const ComplexMatrix& u = model.interaction();
  const QuantumState state = product_state(psi, model.probe_state());
  const ComplexMatrix noise_out =
      u.adjoint() * tensor(identity(model.system_dim()), model.noise()->op.matrix()) * u;
  const HermitianMatrix a_in(tensor(model.measured().op.matrix(), identity(model.probe_dim())));
  const ComplexMatrix da = a_in.matrix() - expectation(a_in, state) * identity(a_in.dim());
  return sym_product_expectation(noise_out, da, state);
}

ErrorDisturbanceSummary summarize(const MeasurementModel& model, const QuantumState& psi) {
  const HeisenbergQuantities q = heisenberg_picture(model, psi);
  ErrorDisturbanceSummary s;
  s.epsilon = checked_sqrt(second_moment(q.n_a, q.state), "epsilon");
  s.eta = checked_sqrt(second_moment(q.d_b, q.state), "eta");
  s.sigma_a = sigma(model.measured(), psi);
  s.sigma_b = sigma(model.disturbed(), psi);
  const ProductQuantity pq = product_from(q);
  s.product_raw = pq.raw;
  s.product_factored = pq.factored;
  s.assumption_residuals = residuals_from(q);
  s.commutator_abs = commutator_expectation_abs(model.measured(), model.disturbed(), psi);
  return s;
}

MeasurementModel make_projective_model(const Observable& target, Eigen::Index probe_dim,
                                       std::optional<Observable> disturbed) {
  const SpectralObservableMap spectrum = spectral_map(target);
  const auto outcomes = static_cast<Eigen::Index>(spectrum.eigenvalues.size());
  if (probe_dim < outcomes) {
    throw InvalidInput("make_projective_model: probe dimension " + std::to_string(probe_dim) +
                       " cannot hold " + std::to_string(outcomes) + " outcomes");
  }
  ComplexMatrix shift = zeros(probe_dim);
  for (Eigen::Index j = 0; j < probe_dim; ++j) shift((j + 1) % probe_dim, j) = 1.0;

  const Eigen::Index n = target.dim() * probe_dim;
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  ComplexMatrix shift_k = identity(probe_dim);
  ComplexMatrix meter = zeros(probe_dim);
  for (Eigen::Index k = 0; k < outcomes; ++k) {
    u += tensor(spectrum.projectors[static_cast<std::size_t>(k)].matrix(), shift_k);
    meter(k, k) = spectrum.eigenvalues[static_cast<std::size_t>(k)];
    shift_k = shift * shift_k;
  }
  Observable b = disturbed ? std::move(*disturbed) : target;
  return MeasurementModel(QuantumState::basis(probe_dim, 0), std::move(u), Observable("M", meter), target,
                          std::move(b));
}

MeasurementModel attach_noise(const MeasurementModel& model, const Observable& delta) {
  if (delta.dim() != model.probe_dim()) {
    throw InvalidInput("attach_noise: noise operator must act on the probe factor");
  }
  return MeasurementModel(model.probe_state(), model.interaction(), model.meter(), model.measured(),
                          model.disturbed(), delta);
}

}  // namespace edur
