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

#include "edur/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "edur/errors.hpp"

namespace edur {

namespace {

std::string shape(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

// Relative to the largest singular value, but never below tol itself, so
// roundoff-sized residue of an exactly zero matrix does not count as rank.
double rank_cutoff(const RealVector& singular_values, double tol) {
  const double top = singular_values.size() > 0 ? singular_values(0) : 0.0;
  return tol * std::max(top, 1.0);
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidInput("HermitianMatrix: expected a non-empty square matrix, got " + shape(m));
  }
  if (!is_finite(m)) throw InvalidInput("HermitianMatrix: non-finite entry");
  if (!is_hermitian(m)) throw InvalidInput("HermitianMatrix: matrix is not self-adjoint");
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (dim() != o.dim()) throw InvalidInput("HermitianMatrix: dimension mismatch in +");
  return HermitianMatrix(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (dim() != o.dim()) throw InvalidInput("HermitianMatrix: dimension mismatch in -");
  return HermitianMatrix(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::scaled(double s) const { return HermitianMatrix(s * m_); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_finite(const ComplexMatrix& m) { return m.allFinite(); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }
ComplexMatrix zeros(Eigen::Index n) { return ComplexMatrix::Zero(n, n); }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("multiply: cannot multiply " + shape(a) + " by " + shape(b));
  }
  return a * b;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols()) {
    throw InvalidInput("commutator: incompatible shapes " + shape(a) + " and " + shape(b));
  }
  return a * b - b * a;
}

ComplexMatrix commutator(const HermitianMatrix& a, const HermitianMatrix& b) {
  return commutator(a.matrix(), b.matrix());
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols()) {
    throw InvalidInput("anticommutator: incompatible shapes " + shape(a) + " and " + shape(b));
  }
  return a * b + b * a;
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericFailure("hermitian_eigensystem: eigensolver did not converge");
  }
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < es.eigenvectors.cols(); ++k) {
    auto v = es.eigenvectors.col(k);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-9) {
        v *= std::conj(v(i)) / std::abs(v(i));
        v(i) = std::abs(v(i));
        break;
      }
    }
  }
  return es;
}

ComplexMatrix null_space_projector(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw InvalidInput("null_space_projector: square matrix required");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const double cutoff = rank_cutoff(s, tol);
  const ComplexMatrix& v = svd.matrixV();
  ComplexMatrix p = ComplexMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (s(k) <= cutoff) p += v.col(k) * v.col(k).adjoint();
  }
  return 0.5 * (p + p.adjoint());
}

Eigen::Index numerical_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const RealVector& s = svd.singularValues();
  const double cutoff = rank_cutoff(s, tol);
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff) ++r;
  }
  return r;
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix y() {
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix in_plane(double phi) { return std::cos(phi) * x() + std::sin(phi) * y(); }

}  // namespace pauli

}  // namespace edur
