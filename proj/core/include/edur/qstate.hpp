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

#ifndef EDUR_QSTATE_HPP_
#define EDUR_QSTATE_HPP_

#include <string>
#include <vector>

#include "edur/matcore.hpp"
#include "edur/projection.hpp"

namespace edur {

struct Observable {
  std::string label;
  HermitianMatrix op;

  Observable(std::string l, const ComplexMatrix& m) : label(std::move(l)), op(m) {}
  Observable(std::string l, HermitianMatrix m) : label(std::move(l)), op(std::move(m)) {}

  Eigen::Index dim() const { return op.dim(); }
};

/// Pure state (unit vector) or density operator.
class QuantumState {
 public:
  enum class Kind { kPure, kMixed };

  /// Rejects vectors whose norm differs from 1 by more than 1e-12.
  static QuantumState pure(const ComplexVector& v);
  /// Normalizes first; rejects the zero vector.
  static QuantumState pure_normalized(const ComplexVector& v);
  /// Rejects |tr - 1| > 1e-12 or an eigenvalue below -1e-12.
  static QuantumState mixed(const HermitianMatrix& rho);
  static QuantumState basis(Eigen::Index dim, Eigen::Index k);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::kPure; }
  Eigen::Index dim() const { return dim_; }
  /// Only meaningful for pure states.
  const ComplexVector& vector() const { return vector_; }
  ComplexMatrix density() const;

 private:
  QuantumState() = default;

  Kind kind_ = Kind::kPure;
  Eigen::Index dim_ = 0;
  ComplexVector vector_;
  ComplexMatrix density_;
};

/// a (x) b, pure when both factors are pure.
QuantumState product_state(const QuantumState& a, const QuantumState& b);

/// <op> for an arbitrary square operator (tr(rho op) or <psi|op|psi>).
Complex expectation_value(const ComplexMatrix& op, const QuantumState& s);

/// Real <X>; an imaginary residue above 1e-10 raises NumericFailure.
double expectation(const Observable& x, const QuantumState& s);
double expectation(const HermitianMatrix& x, const QuantumState& s);

/// X - <X> I
Observable deviation(const Observable& x, const QuantumState& s);

/// <(X - <X>)^2>^{1/2}. Variances in [-1e-12, 0) clamp to 0.
double sigma(const Observable& x, const QuantumState& s);
double sigma(const HermitianMatrix& x, const QuantumState& s);

/// Square root of a second moment that must be nonnegative up to -1e-12.
double checked_sqrt(double second_moment, const char* what);

/// |<[A, B]>|
double commutator_expectation_abs(const Observable& a, const Observable& b, const QuantumState& s);

/// Half-open interval [lo, hi); lo may be -inf and hi may be +inf.
struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return lo <= x && x < hi; }
};

/// Finite union of pairwise disjoint half-open intervals, kept sorted.
class BorelSet {
 public:
  /// Rejects empty/inverted intervals and overlaps.
  explicit BorelSet(std::vector<Interval> intervals = {});

  static BorelSet real_line();
  static BorelSet empty() { return BorelSet(); }
  static BorelSet interval(double lo, double hi) { return BorelSet({{lo, hi}}); }

  bool contains(double x) const;
  bool is_empty() const { return intervals_.empty(); }
  BorelSet complement() const;
  /// Disjoint union; overlapping operands are rejected.
  BorelSet disjoint_union(const BorelSet& other) const;
  bool disjoint_from(const BorelSet& other) const;
  const std::vector<Interval>& intervals() const { return intervals_; }

 private:
  std::vector<Interval> intervals_;
};

inline constexpr double kEigenvalueMergeTol = 1e-9;

/// Finite-spectrum observable as a map from Borel sets to projections:
/// one projector per distinct eigenvalue, ascending.
struct SpectralObservableMap {
  std::vector<double> eigenvalues;
  std::vector<ProjectionOperator> projectors;

  Eigen::Index dim() const { return projectors.empty() ? 0 : projectors.front().dim(); }
};

SpectralObservableMap spectral_map(const Observable& x);
SpectralObservableMap spectral_map(const HermitianMatrix& x);

/// Sum of the projectors whose eigenvalue lies in `set`.
ProjectionOperator borel_evaluate(const SpectralObservableMap& map, const BorelSet& set);

}  // namespace edur

#endif  // EDUR_QSTATE_HPP_
