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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "edur/errors.hpp"
#include "edur/measmodel.hpp"
#include "support/random_ops.hpp"

namespace edur {
namespace {

using testing::Mat;
using testing::max_entry;
using testing::naive_kron;
using testing::naive_multiply;
using testing::Rng;
using testing::Vec;

constexpr double kPi = std::numbers::pi;

Mat a_theta(double t) { return std::sin(t) * testing::sx() + std::cos(t) * testing::sz(); }
Mat b_fixed() { return (testing::sy() + testing::sz()) / std::sqrt(2.0); }

// Schroedinger-picture oracle: apply each operator to the composite vector
// with naive products and take norms, never forming the Heisenberg operators
// through the library.
struct VectorOracle {
  Vec phi;
  Mat u;
  Mat m_full;  // I (x) M
  Mat a_full;  // A (x) I
  Mat b_full;  // B (x) I

  VectorOracle(const Vec& psi, const Vec& xi, const Mat& u_in, const Mat& meter, const Mat& a, const Mat& b)
      : phi(naive_kron(psi, xi)),
        u(u_in),
        m_full(naive_kron(testing::id(psi.size()), meter)),
        a_full(naive_kron(a, testing::id(xi.size()))),
        b_full(naive_kron(b, testing::id(xi.size()))) {}

  // M_out phi = U^dag (I (x) M) U phi
  Vec m_out_phi() const { return naive_multiply(u.adjoint(), naive_multiply(m_full, naive_multiply(u, phi))); }
  Vec b_out_phi() const { return naive_multiply(u.adjoint(), naive_multiply(b_full, naive_multiply(u, phi))); }

  double epsilon() const { return (m_out_phi() - naive_multiply(a_full, phi)).norm(); }
  double eta() const { return (b_out_phi() - naive_multiply(b_full, phi)).norm(); }
};

Mat probe_matrix(const MeasurementModel& m) { return m.meter().op.matrix(); }

TEST(HeisenbergPicture, TrivialInteraction) {
  Mat meter = testing::sx();
  const MeasurementModel model(QuantumState::basis(2, 0), identity(4), Observable("M", meter),
                               Observable("A", testing::sz()), Observable("B", testing::sx()));
  const HeisenbergQuantities h = heisenberg_picture(model, QuantumState::pure(testing::up()));
  EXPECT_LE(max_entry(h.n_a.matrix() - (naive_kron(testing::id(2), meter) - naive_kron(testing::sz(), testing::id(2)))),
            1e-15);
  EXPECT_LE(max_entry(h.d_b.matrix()), 1e-15);
}

TEST(HeisenbergPicture, CnotLeavesSigmaZUndisturbed) {
  const MeasurementModel model = make_projective_model(Observable("z", pauli::z()), 2);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const QuantumState psi = QuantumState::pure(rng.unit_vector(2));
    const HeisenbergQuantities h = heisenberg_picture(model, psi);
    EXPECT_LE(max_entry(h.d_b.matrix()), 1e-14);
    EXPECT_NEAR(eta(model, psi), 0.0, 1e-12);
    EXPECT_NEAR(epsilon(model, psi), 0.0, 1e-10);
  }
}

TEST(HeisenbergPicture, CommutationInvariantForSpinModel) {
  for (double t : {0.0, 0.3, 1.0, kPi / 2}) {
    const MeasurementModel model =
        make_projective_model(Observable("A", a_theta(t)), 2, Observable("B", b_fixed()));
    const HeisenbergQuantities h = heisenberg_picture(model, QuantumState::pure(testing::up()));
    EXPECT_LE(max_entry(commutator(h.m_out, h.b_out)), 1e-12);
  }
}

TEST(HeisenbergPicture, RejectsNonUnitaryAndBadDimensions) {
  Mat u = identity(4);
  u(0, 0) = 1.1;
  EXPECT_THROW(MeasurementModel(QuantumState::basis(2, 0), u, Observable("M", testing::sz()),
                                Observable("A", testing::sz()), Observable("B", testing::sz())),
               InvalidInput);
  EXPECT_THROW(MeasurementModel(QuantumState::basis(2, 0), identity(6), Observable("M", testing::sz()),
                                Observable("A", testing::sz()), Observable("B", testing::sz())),
               InvalidInput);
  EXPECT_THROW(MeasurementModel(QuantumState::basis(3, 0), identity(4), Observable("M", testing::sz()),
                                Observable("A", testing::sz()), Observable("B", testing::sz())),
               InvalidInput);
  const MeasurementModel ok = make_projective_model(Observable("z", pauli::z()), 2);
  EXPECT_THROW(epsilon(ok, QuantumState::basis(3, 0)), InvalidInput);
}

TEST(Epsilon, DetunedModel) {
  // Projective measurement of sigma_phi read out as a measurement of sigma_x.
  for (double phi : {0.0, 0.2, 0.9, kPi / 2, 2.0, kPi}) {
    const MeasurementModel base = make_projective_model(Observable("phi", pauli::in_plane(phi)), 2);
    const MeasurementModel model(base.probe_state(), base.interaction(), base.meter(), Observable("x", pauli::x()),
                                 Observable("x", pauli::x()));
    const QuantumState psi = QuantumState::pure(testing::up());
    EXPECT_NEAR(epsilon(model, psi), 2.0 * std::sin(phi / 2.0), 1e-10) << phi;
  }
}

TEST(Eta, SigmaXMeasuredDisturbsSigmaY) {
  const MeasurementModel model =
      make_projective_model(Observable("x", pauli::x()), 2, Observable("y", pauli::y()));
  EXPECT_NEAR(eta(model, QuantumState::pure(testing::up())), std::sqrt(2.0), 1e-10);
}

TEST(Eta, SpinSettingAcrossTheta) {
  for (int k = 0; k <= 90; ++k) {
    const double t = (kPi / 2) * k / 90.0;
    const MeasurementModel model =
        make_projective_model(Observable("A", a_theta(t)), 2, Observable("B", b_fixed()));
    const QuantumState psi = QuantumState::pure(testing::up());
    EXPECT_NEAR(epsilon(model, psi), 0.0, 1e-10);
    EXPECT_NEAR(eta(model, psi), std::sqrt(1.0 + std::sin(t) * std::sin(t)), 1e-10) << t;
  }
}

TEST(AssumptionResiduals, SpinSettingValues) {
  // The first residual vanishes because the measurement is sharp; the second
  // is pinned at -1/2 for this apparatus.
  for (double t : {0.0, 0.4, 1.1, kPi / 2}) {
    const MeasurementModel model =
        make_projective_model(Observable("A", a_theta(t)), 2, Observable("B", b_fixed()));
    const auto [r1, r2] = assumption_residuals(model, QuantumState::pure(testing::up()));
    EXPECT_NEAR(r1, 0.0, 1e-12) << t;
    EXPECT_NEAR(r2, -0.5, 1e-12) << t;
  }
}

TEST(AssumptionResiduals, ZeroNoiseModelHasZeroFirstResidual) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = rng.integer(2, 3);
    const MeasurementModel model = make_projective_model(Observable("A", rng.hermitian(n)), n);
    EXPECT_NEAR(assumption_residuals(model, QuantumState::pure(rng.unit_vector(n))).first, 0.0, 1e-10);
  }
}

TEST(AssumptionResiduals, ConstantMeterCounterexample) {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const Mat a = rng.hermitian(2);
    const Vec psi = rng.unit_vector(2);
    const double mean = psi.dot(a * psi).real();
    const MeasurementModel model(QuantumState::basis(2, 0), identity(4), Observable("M", Mat(mean * testing::id(2))),
                                 Observable("A", a), Observable("B", testing::sz()));
    const QuantumState s = QuantumState::pure(psi);
    const double var = ((a - mean * testing::id(2)) * psi).squaredNorm();
    EXPECT_NEAR(assumption_residuals(model, s).first, -var, 1e-10);
  }
}

TEST(ProductQuantity, TrivialInteractionFactorizes) {
  Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    const Mat meter = rng.hermitian(2);
    const Mat a = rng.hermitian(2);
    const Mat b = rng.hermitian(2);
    const MeasurementModel model(QuantumState::pure(rng.unit_vector(2)), identity(4), Observable("M", meter),
                                 Observable("A", a), Observable("B", b));
    const QuantumState psi = QuantumState::pure(rng.unit_vector(2));
    const ProductQuantity p = product_quantity(model, psi);
    EXPECT_NEAR(p.raw, p.factored, 1e-10);
    const double sigma_b = sigma(Observable("B", b), psi);
    const HeisenbergQuantities h = heisenberg_picture(model, psi);
    EXPECT_NEAR(p.factored, std::sqrt(expectation_value(h.script_n.matrix() * h.script_n.matrix(), h.state).real()) * sigma_b,
                1e-10);
  }
}

TEST(ProductQuantity, ZeroNoiseZeroDisturbanceFactoredIsSigmaProduct) {
  const MeasurementModel model = make_projective_model(Observable("z", pauli::z()), 2);
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const QuantumState psi = QuantumState::pure(rng.unit_vector(2));
    const double s = sigma(Observable("z", pauli::z()), psi);
    EXPECT_NEAR(product_quantity(model, psi).factored, s * s, 1e-10);
  }
}

TEST(ProductQuantity, SpinSettingAtRightAngle) {
  const MeasurementModel model =
      make_projective_model(Observable("A", a_theta(kPi / 2)), 2, Observable("B", b_fixed()));
  const QuantumState psi = QuantumState::pure(testing::up());
  const ProductQuantity p = product_quantity(model, psi);
  // <N^2> = 1 and <D^2> = eta^2 + sigma_b^2 + 2 r2 = 2 + 1/2 - 1 = 3/2.
  EXPECT_NEAR(p.factored, std::sqrt(1.5), 1e-12);
  EXPECT_TRUE(std::isfinite(p.raw));
  EXPECT_GE(p.raw, 0.0);
}

// ---- properties over random models -------------------------------------------

struct RandomModel {
  MeasurementModel model;
  Mat u, meter, a, b;
  Vec xi;
};

RandomModel random_model(Rng& rng) {
  const Eigen::Index ns = rng.integer(2, 3);
  const Eigen::Index np = rng.integer(2, 3);
  const Mat u = rng.unitary(ns * np);
  const Vec xi = rng.unit_vector(np);
  const Mat meter = rng.hermitian(np);
  const Mat a = rng.hermitian(ns);
  const Mat b = rng.hermitian(ns);
  return {MeasurementModel(QuantumState::pure(xi), u, Observable("M", meter), Observable("A", a), Observable("B", b)),
          u, meter, a, b, xi};
}

TEST(MeasModelProperties, MatchesVectorOracle) {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const RandomModel r = random_model(rng);
    const Vec psi = rng.unit_vector(r.a.rows());
    const VectorOracle oracle(psi, r.xi, r.u, r.meter, r.a, r.b);
    const QuantumState s = QuantumState::pure(psi);
    EXPECT_NEAR(epsilon(r.model, s), oracle.epsilon(), 1e-10);
    EXPECT_NEAR(eta(r.model, s), oracle.eta(), 1e-10);
  }
}

TEST(MeasModelProperties, CommutationAndDecomposition) {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const RandomModel r = random_model(rng);
    const QuantumState psi = QuantumState::pure(rng.unit_vector(r.a.rows()));
    const HeisenbergQuantities h = heisenberg_picture(r.model, psi);
    EXPECT_LE(max_entry(commutator(h.m_out, h.b_out)), 1e-10);

    const ErrorDisturbanceSummary s = summarize(r.model, psi);
    const double nn = expectation_value(h.script_n.matrix() * h.script_n.matrix(), h.state).real();
    const double dd = expectation_value(h.script_d.matrix() * h.script_d.matrix(), h.state).real();
    EXPECT_NEAR(nn, s.epsilon * s.epsilon + s.sigma_a * s.sigma_a + 2.0 * s.assumption_residuals.first, 1e-10);
    EXPECT_NEAR(dd, s.eta * s.eta + s.sigma_b * s.sigma_b + 2.0 * s.assumption_residuals.second, 1e-10);
    EXPECT_NEAR(s.product_factored, std::sqrt(nn) * std::sqrt(dd), 1e-10);
    EXPECT_GE(s.epsilon, 0.0);
    EXPECT_GE(s.eta, 0.0);
  }
}

TEST(MeasModelProperties, GaugeInvariance) {
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    const RandomModel r = random_model(rng);
    const double c = rng.uniform(-3.0, 3.0);
    const Eigen::Index ns = r.a.rows();
    const Eigen::Index np = r.meter.rows();
    const MeasurementModel shifted(QuantumState::pure(r.xi), r.u, Observable("M", Mat(r.meter + c * testing::id(np))),
                                   Observable("A", Mat(r.a + c * testing::id(ns))),
                                   Observable("B", Mat(r.b + c * testing::id(ns))));
    const QuantumState psi = QuantumState::pure(rng.unit_vector(ns));
    EXPECT_NEAR(epsilon(shifted, psi), epsilon(r.model, psi), 1e-10);
    EXPECT_NEAR(eta(shifted, psi), eta(r.model, psi), 1e-10);
  }
}

TEST(MeasModelProperties, MixedProbeStates) {
  Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    const RandomModel r = random_model(rng);
    const Vec psi = rng.unit_vector(r.a.rows());
    const QuantumState mixed_probe = QuantumState::mixed(HermitianMatrix(Mat(r.xi * r.xi.adjoint())));
    const MeasurementModel m2(mixed_probe, r.u, r.model.meter(), r.model.measured(), r.model.disturbed());
    EXPECT_NEAR(epsilon(m2, QuantumState::pure(psi)), epsilon(r.model, QuantumState::pure(psi)), 1e-10);
  }
}

TEST(MakeProjectiveModel, ThreeLevelTarget) {
  Rng rng(59);
  const Mat u = rng.unitary(3);
  Mat d = Mat::Zero(3, 3);
  d(0, 0) = -1.0;
  d(1, 1) = 0.5;
  d(2, 2) = 2.0;
  const Observable target("T", Mat(u * d * u.adjoint()));
  const MeasurementModel model = make_projective_model(target, 3);
  for (int t = 0; t < 50; ++t) {
    EXPECT_NEAR(epsilon(model, QuantumState::pure(rng.unit_vector(3))), 0.0, 1e-10);
  }
  EXPECT_THROW(make_projective_model(target, 2), InvalidInput);
  // A degenerate target needs only as many pointer states as distinct values.
  EXPECT_NO_THROW(make_projective_model(Observable("I3", identity(3)), 1));
}

TEST(AttachNoise, Cases) {
  Rng rng(61);
  const MeasurementModel base = make_projective_model(Observable("A", a_theta(0.7)), 2, Observable("B", b_fixed()));
  const QuantumState psi = QuantumState::pure(rng.unit_vector(2));

  const MeasurementModel zero = attach_noise(base, Observable("0", zeros(2)));
  EXPECT_NEAR(epsilon(zero, psi), epsilon(base, psi), 1e-12);

  for (double c : {-1.5, 0.3, 2.0}) {
    const MeasurementModel shifted = attach_noise(base, Observable("c", Mat(c * testing::id(2))));
    const double e0 = epsilon(base, psi);
    EXPECT_NEAR(epsilon(shifted, psi) * epsilon(shifted, psi), e0 * e0 + c * c, 1e-10);
  }

  EXPECT_THROW(attach_noise(base, Observable("big", identity(3))), InvalidInput);
  EXPECT_DOUBLE_EQ(noise_correlation_residual(base, psi), 0.0);
}

TEST(AttachNoise, ProbeLocalNoiseDecouplesWithoutInteraction) {
  Rng rng(67);
  for (int t = 0; t < 50; ++t) {
    const Vec xi = rng.unit_vector(2);
    Mat delta = rng.hermitian(2);
    delta -= xi.dot(delta * xi).real() * testing::id(2);  // <delta>_xi = 0
    const MeasurementModel model(QuantumState::pure(xi), identity(4), Observable("M", testing::sz()),
                                 Observable("A", rng.hermitian(2)), Observable("B", testing::sx()),
                                 Observable("d", delta));
    EXPECT_NEAR(noise_correlation_residual(model, QuantumState::pure(rng.unit_vector(2))), 0.0, 1e-12);
  }
}

TEST(AttachNoise, CommutationSurvivesNoise) {
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    const RandomModel r = random_model(rng);
    const MeasurementModel noisy = attach_noise(r.model, Observable("d", rng.hermitian(r.meter.rows())));
    const HeisenbergQuantities h = heisenberg_picture(noisy, QuantumState::pure(rng.unit_vector(r.a.rows())));
    EXPECT_LE(max_entry(commutator(h.m_out, h.b_out)), 1e-10);
  }
}

}  // namespace
}  // namespace edur
