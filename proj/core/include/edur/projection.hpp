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

#ifndef EDUR_PROJECTION_HPP_
#define EDUR_PROJECTION_HPP_

#include "edur/matcore.hpp"

namespace edur {

inline constexpr double kIdempotentTol = 1e-10;

/// Orthogonal projector: self-adjoint and idempotent to kIdempotentTol.
class ProjectionOperator {
 public:
  explicit ProjectionOperator(const ComplexMatrix& m);
  explicit ProjectionOperator(const HermitianMatrix& m);

  static ProjectionOperator zero(Eigen::Index dim);
  static ProjectionOperator identity(Eigen::Index dim);
  /// |v><v| / <v|v>
  static ProjectionOperator onto(const ComplexVector& v);

  const ComplexMatrix& matrix() const { return m_.matrix(); }
  const HermitianMatrix& hermitian() const { return m_; }
  Eigen::Index dim() const { return m_.dim(); }
  /// Trace, rounded; exact for valid projectors.
  Eigen::Index rank() const;

 private:
  HermitianMatrix m_;
};

}  // namespace edur

#endif  // EDUR_PROJECTION_HPP_
