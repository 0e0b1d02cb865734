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

#ifndef EDUR_MATCORE_HPP_
#define EDUR_MATCORE_HPP_

// Dense complex matrix kernel. Everything else in edur is expressed in terms of
// these types; the heavy lifting (products, SVD, Hermitian eigensolver) is
// delegated to Eigen.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace edur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kRankTol = 1e-9;

/// Self-adjoint square matrix. Construction validates
/// max |M_ij - conj(M_ji)| <= kHermitianTol and stores the symmetrized part.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix scaled(double s) const;

 private:
  ComplexMatrix m_;
};

/// Spectrum in ascending order with orthonormal eigenvectors as columns.
/// The first component of magnitude > 1e-9 of each eigenvector is real positive.
struct EigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

double max_abs(const ComplexMatrix& m);
bool is_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix zeros(Eigen::Index n);

/// Rejects a.cols() != b.rows() with InvalidInput.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, block (i, j) of the result is a(i, j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// ab - ba; anti-Hermitian for Hermitian inputs.
ComplexMatrix commutator(const HermitianMatrix& a, const HermitianMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

EigenSystem hermitian_eigensystem(const HermitianMatrix& m);

/// Orthogonal projector onto ker(m). Singular values at or below
/// tol * max(sigma_max, 1) count as zero; a zero matrix yields the identity.
ComplexMatrix null_space_projector(const ComplexMatrix& m, double tol = kRankTol);

/// Numerical rank with the same relative threshold as null_space_projector.
Eigen::Index numerical_rank(const ComplexMatrix& m, double tol = kRankTol);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// cos(phi) x + sin(phi) y
ComplexMatrix in_plane(double phi);
}  // namespace pauli

}  // namespace edur

#endif  // EDUR_MATCORE_HPP_
