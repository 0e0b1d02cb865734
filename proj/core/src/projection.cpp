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

#include "edur/projection.hpp"

#include <cmath>

#include "edur/errors.hpp"

namespace edur {

ProjectionOperator::ProjectionOperator(const ComplexMatrix& m) : ProjectionOperator(HermitianMatrix(m)) {}

ProjectionOperator::ProjectionOperator(const HermitianMatrix& m) : m_(m) {
  const ComplexMatrix& p = m_.matrix();
  if (max_abs(p * p - p) > kIdempotentTol) {
    throw InvalidInput("ProjectionOperator: matrix is not idempotent");
  }
}

ProjectionOperator ProjectionOperator::zero(Eigen::Index dim) { return ProjectionOperator(zeros(dim)); }

ProjectionOperator ProjectionOperator::identity(Eigen::Index dim) {
  return ProjectionOperator(edur::identity(dim));
}

ProjectionOperator ProjectionOperator::onto(const ComplexVector& v) {
  const double n2 = v.squaredNorm();
  if (!(n2 > 0.0)) throw InvalidInput("ProjectionOperator::onto: zero vector");
  return ProjectionOperator(ComplexMatrix(v * v.adjoint() / n2));
}

Eigen::Index ProjectionOperator::rank() const {
  return static_cast<Eigen::Index>(std::lround(matrix().trace().real()));
}

}  // namespace edur
