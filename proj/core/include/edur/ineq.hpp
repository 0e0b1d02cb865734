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

#ifndef EDUR_INEQ_HPP_
#define EDUR_INEQ_HPP_

#include <array>
#include <string>
#include <string_view>

#include "edur/measmodel.hpp"

namespace edur {

inline constexpr double kSatisfactionTol = 1e-9;

/// Uncertainty relations, all with C = |<[A, B]>|:
///   robertson           sigma_a sigma_b                                   >= C / 2
///   ozawa               eps eta + eps sigma_b + sigma_a eta               >= C / 2
///   heisenberg_product  eps eta                                           >= C / 2
///   mochi               <N^2>^{1/2} <D^2>^{1/2} (factored product)        >= (2 - sqrt 2) C
///   mochi2              same lhs                                          >= C
enum class InequalityKind { kRobertson, kOzawa, kHeisenbergProduct, kMochi, kMochi2 };

inline constexpr std::array<InequalityKind, 5> kAllInequalities = {
    InequalityKind::kRobertson, InequalityKind::kOzawa, InequalityKind::kHeisenbergProduct,
    InequalityKind::kMochi, InequalityKind::kMochi2};

std::string_view to_string(InequalityKind kind);
/// Throws InvalidInput for unknown names.
InequalityKind parse_inequality(std::string_view name);

struct InequalityReport {
  InequalityKind kind;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool satisfied = false;
};

/// Negative inputs are rejected. `tol` is the admissible negative slack.
InequalityReport evaluate(InequalityKind kind, const ErrorDisturbanceSummary& quantities, double commutator_abs,
                          double tol = kSatisfactionTol);

enum class BoundConstraint { kOzawa, kHeisenbergProduct };

std::string_view to_string(BoundConstraint c);
BoundConstraint parse_bound_constraint(std::string_view name);

struct BoundArgmin {
  double epsilon = 0.0;
  double eta = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
};

struct BoundConstantResult {
  BoundConstraint constraint;
  /// best f / C found on the finest grid level (spacing <= grid_resolution)
  double grid_minimum_ratio = 0.0;
  /// after local refinement
  double minimum_ratio = 0.0;
  BoundArgmin argmin;
  double grid_resolution = 0.0;
};

/// Minimizes (eps^2 + sigma_a^2)^{1/2} (eta^2 + sigma_b^2)^{1/2} / C over the box
/// [0, 4 sqrt C]^4 subject to sigma_a sigma_b >= C/2 and the selected
/// constraint at >= C/2. Multi-level grid down to `grid_resolution`, then a
/// pattern-search refinement. Deterministic for fixed inputs and independent
/// of the worker count.
BoundConstantResult verify_bound_constant(BoundConstraint constraint, double commutator_abs,
                                          double grid_resolution = 1e-3);

}  // namespace edur

#endif  // EDUR_INEQ_HPP_
