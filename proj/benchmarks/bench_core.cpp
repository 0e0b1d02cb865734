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

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "edur/ineq.hpp"
#include "edur/matcore.hpp"
#include "edur/measmodel.hpp"
#include "edur/qlogic.hpp"
#include "edur/spinlab.hpp"

namespace {

using edur::ComplexMatrix;

ComplexMatrix random_hermitian(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d;
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = {d(gen), d(gen)};
  }
  return 0.5 * (g + g.adjoint());
}

edur::ProjectionOperator random_projector(Eigen::Index n, Eigen::Index rank, std::uint64_t seed) {
  const edur::EigenSystem es = edur::hermitian_eigensystem(edur::HermitianMatrix(random_hermitian(n, seed)));
  const ComplexMatrix v = es.eigenvectors.leftCols(rank);
  return edur::ProjectionOperator(ComplexMatrix(v * v.adjoint()));
}

void BM_HermitianEigensystem(benchmark::State& state) {
  const edur::HermitianMatrix h(random_hermitian(state.range(0), 1));
  for (auto _ : state) benchmark::DoNotOptimize(edur::hermitian_eigensystem(h));
}
BENCHMARK(BM_HermitianEigensystem)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Meet(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const auto p = random_projector(n, n / 2 + 1, 2);
  const auto q = random_projector(n, n / 2 + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(edur::meet(p, q));
}
BENCHMARK(BM_Meet)->Arg(2)->Arg(4)->Arg(8);

void BM_SummarizeSpinModel(benchmark::State& state) {
  const edur::SpinSetting s = edur::make_spin_setting(0.7);
  const edur::MeasurementModel model = edur::make_projective_model(s.a, 2, s.b);
  for (auto _ : state) benchmark::DoNotOptimize(edur::summarize(model, s.psi));
}
BENCHMARK(BM_SummarizeSpinModel);

void BM_Sweep(benchmark::State& state) {
  const std::vector<double> grid = edur::theta_grid(0.0, std::numbers::pi / 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edur::sweep(grid, edur::SweepMode::kBoth));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(181)->Unit(benchmark::kMillisecond);

void BM_VerifyBoundConstant(benchmark::State& state) {
  const auto k = state.range(0) == 0 ? edur::BoundConstraint::kOzawa : edur::BoundConstraint::kHeisenbergProduct;
  for (auto _ : state) benchmark::DoNotOptimize(edur::verify_bound_constant(k, 1.0));
}
BENCHMARK(BM_VerifyBoundConstant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
