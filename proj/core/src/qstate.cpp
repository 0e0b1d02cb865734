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

#include "edur/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edur/errors.hpp"

namespace edur {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kImagResidueTol = 1e-10;
constexpr double kNegativeVarianceTol = 1e-12;

void require_dim(Eigen::Index op_dim, const QuantumState& s, const char* where) {
  if (op_dim != s.dim()) {
    throw InvalidInput(std::string(where) + ": operator dimension " + std::to_string(op_dim) +
                       " does not match state dimension " + std::to_string(s.dim()));
  }
}

}  // namespace

QuantumState QuantumState::pure(const ComplexVector& v) {
  if (v.size() == 0 || !v.allFinite()) throw InvalidInput("QuantumState::pure: empty or non-finite vector");
  if (std::abs(v.norm() - 1.0) > kNormTol) throw InvalidInput("QuantumState::pure: vector is not normalized");
  QuantumState s;
  s.kind_ = Kind::kPure;
  s.dim_ = v.size();
  s.vector_ = v;
  return s;
}

QuantumState QuantumState::pure_normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("QuantumState::pure_normalized: zero vector");
  return pure(v / n);
}

QuantumState QuantumState::mixed(const HermitianMatrix& rho) {
  if (std::abs(rho.matrix().trace().real() - 1.0) > kNormTol) {
    throw InvalidInput("QuantumState::mixed: density operator must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kNormTol) {
    throw InvalidInput("QuantumState::mixed: density operator is not positive semidefinite");
  }
  QuantumState s;
  s.kind_ = Kind::kMixed;
  s.dim_ = rho.dim();
  s.density_ = rho.matrix();
  return s;
}

QuantumState QuantumState::basis(Eigen::Index dim, Eigen::Index k) {
  if (k < 0 || k >= dim) throw InvalidInput("QuantumState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return pure(v);
}

ComplexMatrix QuantumState::density() const {
  return is_pure() ? ComplexMatrix(vector_ * vector_.adjoint()) : density_;
}

QuantumState product_state(const QuantumState& a, const QuantumState& b) {
  if (a.is_pure() && b.is_pure()) return QuantumState::pure_normalized(tensor(a.vector(), b.vector()));
  return QuantumState::mixed(HermitianMatrix(tensor(a.density(), b.density())));
}

Complex expectation_value(const ComplexMatrix& op, const QuantumState& s) {
  if (op.rows() != op.cols()) throw InvalidInput("expectation_value: operator must be square");
  require_dim(op.rows(), s, "expectation_value");
  if (s.is_pure()) return s.vector().dot(op * s.vector());
  return (s.density() * op).trace();
}

double expectation(const HermitianMatrix& x, const QuantumState& s) {
  const Complex e = expectation_value(x.matrix(), s);
  if (std::abs(e.imag()) > kImagResidueTol) {
    throw NumericFailure("expectation: imaginary residue " + std::to_string(e.imag()));
  }
  return e.real();
}

double expectation(const Observable& x, const QuantumState& s) { return expectation(x.op, s); }

Observable deviation(const Observable& x, const QuantumState& s) {
  const double mean = expectation(x, s);
  return Observable("d(" + x.label + ")", ComplexMatrix(x.op.matrix() - mean * identity(x.dim())));
}

double checked_sqrt(double second_moment, const char* what) {
  if (second_moment < -kNegativeVarianceTol || !std::isfinite(second_moment)) {
    throw NumericFailure(std::string(what) + ": negative second moment " + std::to_string(second_moment));
  }
  return std::sqrt(std::max(0.0, second_moment));
}

double sigma(const HermitianMatrix& x, const QuantumState& s) {
  const double mean = expectation(x, s);
  const ComplexMatrix d = x.matrix() - mean * identity(x.dim());
  double var = 0.0;
  if (s.is_pure()) {
    var = (d * s.vector()).squaredNorm();
  } else {
    var = (s.density() * d * d).trace().real();
  }
  return checked_sqrt(var, "sigma");
}

double sigma(const Observable& x, const QuantumState& s) { return sigma(x.op, s); }

double commutator_expectation_abs(const Observable& a, const Observable& b, const QuantumState& s) {
  return std::abs(expectation_value(commutator(a.op, b.op), s));
}

BorelSet::BorelSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const Interval& iv : intervals_) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || !(iv.lo < iv.hi)) {
      throw InvalidInput("BorelSet: interval [lo, hi) requires lo < hi");
    }
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].lo < intervals_[i - 1].hi) throw InvalidInput("BorelSet: overlapping intervals");
  }
}

BorelSet BorelSet::real_line() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return BorelSet({{-inf, inf}});
}

bool BorelSet::contains(double x) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [x](const Interval& iv) { return iv.contains(x); });
}

BorelSet BorelSet::complement() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Interval> out;
  double cursor = -inf;
  for (const Interval& iv : intervals_) {
    if (cursor < iv.lo) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < inf) out.push_back({cursor, inf});
  return BorelSet(std::move(out));
}

bool BorelSet::disjoint_from(const BorelSet& other) const {
  for (const Interval& a : intervals_) {
    for (const Interval& b : other.intervals_) {
      if (a.lo < b.hi && b.lo < a.hi) return false;
    }
  }
  return true;
}

BorelSet BorelSet::disjoint_union(const BorelSet& other) const {
  if (!disjoint_from(other)) throw InvalidInput("BorelSet::disjoint_union: operands overlap");
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return BorelSet(std::move(all));
}

SpectralObservableMap spectral_map(const HermitianMatrix& x) {
  const EigenSystem es = hermitian_eigensystem(x);
  const Eigen::Index n = x.dim();
  SpectralObservableMap out;
  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index end = k + 1;
    while (end < n && es.eigenvalues(end) - es.eigenvalues(k) <= kEigenvalueMergeTol) ++end;
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    double sum = 0.0;
    for (Eigen::Index j = k; j < end; ++j) {
      p += es.eigenvectors.col(j) * es.eigenvectors.col(j).adjoint();
      sum += es.eigenvalues(j);
    }
    out.eigenvalues.push_back(sum / static_cast<double>(end - k));
    out.projectors.emplace_back(p);
    k = end;
  }
  return out;
}

SpectralObservableMap spectral_map(const Observable& x) { return spectral_map(x.op); }

ProjectionOperator borel_evaluate(const SpectralObservableMap& map, const BorelSet& set) {
  const Eigen::Index n = map.dim();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < map.eigenvalues.size(); ++k) {
    if (set.contains(map.eigenvalues[k])) p += map.projectors[k].matrix();
  }
  return ProjectionOperator(p);
}

}  // namespace edur
