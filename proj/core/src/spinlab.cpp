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

#include "edur/spinlab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "edur/errors.hpp"
#include "edur/parallel.hpp"

namespace edur {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kDegenerateCommutator = 1e-12;

double checked_theta(double theta) {
  if (!(theta >= -1e-12 && theta <= kHalfPi + 1e-12)) {
    throw InvalidInput("theta " + std::to_string(theta) + " outside [0, pi/2]");
  }
  return std::clamp(theta, 0.0, kHalfPi);
}

}  // namespace

ErrorDisturbanceSummary paper_summary(double theta) {
  theta = checked_theta(theta);
  const double s = std::sin(theta);
  ErrorDisturbanceSummary q;
  q.sigma_a = s;
  q.sigma_b = kInvSqrt2;
  q.epsilon = 0.0;
  q.eta = s;
  q.commutator_abs = std::numbers::sqrt2 * s;
  q.product_factored = std::sqrt(q.epsilon * q.epsilon + q.sigma_a * q.sigma_a) *
                       std::sqrt(q.eta * q.eta + q.sigma_b * q.sigma_b);
  q.product_raw = q.product_factored;
  return q;
}

SpinSetting make_spin_setting(double theta) {
  theta = checked_theta(theta);
  ComplexVector up(2);
  up << 1.0, 0.0;
  return SpinSetting{
      theta,
      Observable("A", ComplexMatrix(std::sin(theta) * pauli::x() + std::cos(theta) * pauli::z())),
      Observable("B", ComplexMatrix((pauli::y() + pauli::z()) * kInvSqrt2)),
      QuantumState::pure(up),
  };
}

std::string_view to_string(SweepMode m) {
  switch (m) {
    case SweepMode::kPaper:
      return "paper";
    case SweepMode::kModel:
      return "model";
    case SweepMode::kBoth:
      return "both";
  }
  return "unknown";
}

SweepMode parse_sweep_mode(std::string_view name) {
  if (name == "paper") return SweepMode::kPaper;
  if (name == "model") return SweepMode::kModel;
  if (name == "both") return SweepMode::kBoth;
  throw InvalidInput("unknown mode '" + std::string(name) + "'");
}

SweepRecord paper_mode(double theta) {
  theta = checked_theta(theta);
  const ErrorDisturbanceSummary q = paper_summary(theta);
  SweepRecord r;
  r.theta = theta;
  r.sigma_a = q.sigma_a;
  r.sigma_b = q.sigma_b;
  r.epsilon_paper = q.epsilon;
  r.eta_paper = q.eta;
  r.commutator_abs = q.commutator_abs;
  const InequalityReport oz = evaluate(InequalityKind::kOzawa, q, q.commutator_abs);
  r.ozawa_lhs_paper = oz.lhs;
  r.ozawa_rhs = oz.rhs;
  r.ozawa_ok_paper = oz.satisfied;
  r.eps_bound_heis = epsilon_lower_bound(theta, Assumption::kHeisenbergProduct);
  r.eps_bound_ozawa = epsilon_lower_bound(theta, Assumption::kOzawa);
  if (q.commutator_abs > kDegenerateCommutator) {
    r.coeff_mochi21 = bound_coefficient(theta, Assumption::kHeisenbergProduct);
    r.coeff_mochi11 = bound_coefficient(theta, Assumption::kOzawa);
  }
  return r;
}

SweepRecord model_mode(double theta) {
  const SpinSetting setting = make_spin_setting(theta);
  const MeasurementModel model = make_projective_model(setting.a, 2, setting.b);
  const ErrorDisturbanceSummary q = summarize(model, setting.psi);
  SweepRecord r;
  r.theta = setting.theta;
  r.sigma_a = q.sigma_a;
  r.sigma_b = q.sigma_b;
  r.commutator_abs = q.commutator_abs;
  r.ozawa_rhs = 0.5 * q.commutator_abs;
  r.epsilon_model = q.epsilon;
  r.eta_model = q.eta;
  r.ozawa_ok_model = evaluate(InequalityKind::kOzawa, q, q.commutator_abs).satisfied;
  r.product_factored_model = q.product_factored;
  r.product_raw_model = q.product_raw;
  r.residuals_model = q.assumption_residuals;
  if (q.commutator_abs > kDegenerateCommutator) {
    r.ratio_model = q.product_factored / q.commutator_abs;
    r.mochi_ok_model = evaluate(InequalityKind::kMochi, q, q.commutator_abs).satisfied;
  }
  return r;
}

double epsilon_lower_bound(double theta, Assumption assumption) {
  theta = checked_theta(theta);
  if (assumption == Assumption::kHeisenbergProduct) return kInvSqrt2;
  const double s = std::sin(theta);
  if (s >= kInvSqrt2) return 0.0;
  return s * (1.0 - std::numbers::sqrt2 * s) / (1.0 + std::numbers::sqrt2 * s);
}

double bound_coefficient(double theta, Assumption assumption) {
  theta = checked_theta(theta);
  const double s = std::sin(theta);
  if (assumption == Assumption::kHeisenbergProduct) {
    if (!(s > 0.0)) throw InvalidInput("bound_coefficient: heisenberg_product branch is singular at theta = 0");
    return 1.0 / (2.0 * std::numbers::sqrt2 * s) + s / std::numbers::sqrt2;
  }
  if (s >= kInvSqrt2) return kInvSqrt2 * std::sqrt(s * s + 0.5);
  return (1.0 + 2.0 * s * s) / (std::numbers::sqrt2 + 2.0 * s);
}

CoefficientMinimum coefficient_minimum(Assumption assumption) {
  // Both coefficient curves are unimodal in theta on (0, pi/2].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1e-9;
  double hi = kHalfPi;
  auto f = [assumption](double t) { return bound_coefficient(t, assumption); };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double t = 0.5 * (lo + hi);
  return {t, f(t)};
}

SweepResult sweep(const std::vector<double>& grid, SweepMode mode) {
  if (grid.empty()) throw InvalidInput("sweep: empty theta grid");
  for (double t : grid) checked_theta(t);

  SweepResult out;
  out.records.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    SweepRecord r;
    if (mode == SweepMode::kModel) {
      r.theta = checked_theta(grid[i]);
    } else {
      r = paper_mode(grid[i]);
    }
    if (mode != SweepMode::kPaper) {
      try {
        const SweepRecord m = model_mode(grid[i]);
        r.sigma_a = m.sigma_a;
        r.sigma_b = m.sigma_b;
        r.commutator_abs = m.commutator_abs;
        r.ozawa_rhs = m.ozawa_rhs;
        r.epsilon_model = m.epsilon_model;
        r.eta_model = m.eta_model;
        r.ozawa_ok_model = m.ozawa_ok_model;
        r.product_factored_model = m.product_factored_model;
        r.product_raw_model = m.product_raw_model;
        r.residuals_model = m.residuals_model;
        r.ratio_model = m.ratio_model;
        r.mochi_ok_model = m.mochi_ok_model;
      } catch (const NumericFailure& e) {
        r.note = e.what();
      }
    }
    out.records[i] = std::move(r);
  });

  const double bound = 2.0 - std::numbers::sqrt2;
  for (const SweepRecord& r : out.records) {
    if (!r.ratio_model) continue;
    const bool below_one = *r.ratio_model <= 1.0 + kSatisfactionTol;
    const bool above = *r.ratio_model >= bound - kSatisfactionTol;
    out.ratio_at_most_one_somewhere = out.ratio_at_most_one_somewhere.value_or(false) || below_one;
    out.ratio_above_bound_everywhere = out.ratio_above_bound_everywhere.value_or(true) && above;
  }
  return out;
}

std::vector<double> theta_grid(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidInput("theta_grid: steps must be >= 1");
  lo = checked_theta(lo);
  hi = checked_theta(hi);
  if (lo > hi) throw InvalidInput("theta_grid: theta_min exceeds theta_max");
  std::vector<double> g(static_cast<std::size_t>(steps));
  if (steps == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  g.back() = hi;
  return g;
}

}  // namespace edur
