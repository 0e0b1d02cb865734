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

#ifndef EDUR_TESTS_SUPPORT_PROJECTOR_PAIRS_HPP_
#define EDUR_TESTS_SUPPORT_PROJECTOR_PAIRS_HPP_

#include <utility>

#include "edur/projection.hpp"
#include "edur/qlogic.hpp"
#include "support/random_ops.hpp"

namespace edur::testing {

// Projector pairs in dims 2-4, cycling through families so that commuting,
// non-commuting and partially overlapping cases all show up.
class ProjectorPairs {
 public:
  explicit ProjectorPairs(std::uint64_t seed) : rng_(seed) {}

  std::pair<ProjectionOperator, ProjectionOperator> next() {
    const Eigen::Index n = rng_.integer(2, 4);
    const Mat u = rng_.unitary(n);
    switch (kind_++ % 4) {
      case 0:  // shared eigenbasis
        return {ProjectionOperator(rng_.projector_in_basis(u)), ProjectionOperator(rng_.projector_in_basis(u))};
      case 1:  // unrelated bases
        return {ProjectionOperator(rng_.projector_in_basis(u)),
                ProjectionOperator(rng_.projector_in_basis(rng_.unitary(n)))};
      case 2: {  // common line plus unrelated remainder
        const Vec common = u.col(0);
        const Mat rest = u.rightCols(n - 1);
        auto pick = [&] {
          const Vec w = rest * rng_.unit_vector(n - 1);
          return ProjectionOperator(Mat(common * common.adjoint() + w * w.adjoint()));
        };
        auto p = pick();
        return {p, pick()};
      }
      default: {  // equal, complementary, or nested
        const ProjectionOperator p(rng_.projector_in_basis(u));
        const int which = rng_.integer(0, 2);
        if (which == 0) return {p, p};
        if (which == 1) return {p, orthocomplement(p)};
        return {p, ProjectionOperator(Mat(u.col(0) * u.col(0).adjoint()))};
      }
    }
  }

 private:
  Rng rng_;
  int kind_ = 0;
};

}  // namespace edur::testing

#endif  // EDUR_TESTS_SUPPORT_PROJECTOR_PAIRS_HPP_
