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

#ifndef EDUR_QLOGIC_HPP_
#define EDUR_QLOGIC_HPP_

// Projection-lattice operations: meet, join, orthocomplement, the
// distributivity test for a pair of propositions, and the simultaneous
// measurability criterion built on it.

#include <span>
#include <vector>

#include "edur/projection.hpp"
#include "edur/qstate.hpp"

namespace edur {

inline constexpr double kLatticeEqualTol = 1e-9;
inline constexpr double kCommuteTol = 1e-10;

struct LatticeCheckReport {
  bool commutes = false;
  bool distributive = false;
  /// rank of meet(u, v)
  Eigen::Index meet_rank = 0;
  /// max-entry norm of v - ((v ^ u) v (v ^ u')); the distributivity residual
  double max_residual = 0.0;
  /// max-entry norm of [u, v]
  double commutator_norm = 0.0;
};

ProjectionOperator orthocomplement(const ProjectionOperator& p);

/// Projector onto range(p) intersected with range(q), taken as the kernel of
/// (I - p) + (I - q).
ProjectionOperator meet(const ProjectionOperator& p, const ProjectionOperator& q);

/// Projector onto span(range(p), range(q)); the De Morgan dual of meet.
ProjectionOperator join(const ProjectionOperator& p, const ProjectionOperator& q);

/// Join over a family; empty family gives the zero projector of `dim`.
ProjectionOperator join_all(std::span<const ProjectionOperator> ps, Eigen::Index dim);

/// Lattice equality on the max-entry norm.
bool lattice_equal(const ProjectionOperator& p, const ProjectionOperator& q,
                   double tol = kLatticeEqualTol);

/// Checks v = (v ^ u) v (v ^ u') and [u, v] = 0 for one pair of propositions.
LatticeCheckReport distributivity_holds(const ProjectionOperator& u, const ProjectionOperator& v);

struct MeasurabilityResult {
  /// every spectral pair is distributive
  bool measurable = false;
  /// [A, B] = 0 within kCommuteTol, evaluated independently
  bool commutes = false;
  /// row-major over (projector of a, projector of b)
  std::vector<LatticeCheckReport> pairs;
};

MeasurabilityResult simultaneously_measurable(const Observable& a, const Observable& b);

/// Result of testing whether w_n = u_n ^ v is itself an observable on the
/// sublattice below v.
struct TheoremReport {
  /// join of all w_n equals v
  bool completeness = false;
  /// join of w_n over every subset S equals v ^ u(S)
  bool additivity = false;
  /// relative complement v ^ w(S)' equals w(complement of S)
  bool complement = false;
  /// every (u_n, v) pair is distributive
  bool distributive = false;
  /// overall verdict; equals `distributive`
  bool pass = false;
  double max_residual = 0.0;
  std::vector<LatticeCheckReport> pairs;
  ProjectionOperator join_of_meets;
};

/// `u_list` must be mutually orthogonal projectors summing to the identity.
/// Subsets are enumerated exhaustively up to 12 members; larger families are
/// checked on singletons and their complements only.
TheoremReport theorem_brute_force(std::span<const ProjectionOperator> u_list, const ProjectionOperator& v);

}  // namespace edur

#endif  // EDUR_QLOGIC_HPP_
