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

#ifndef EDUR_TESTS_SUPPORT_RANDOM_OPS_HPP_
#define EDUR_TESTS_SUPPORT_RANDOM_OPS_HPP_

// Seeded generators and deliberately naive reference implementations used as
// oracles. Nothing here calls into the edur code paths it is used to check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace edur::testing {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Cx complex_normal() { return {normal(), normal()}; }

  Mat ginibre(Eigen::Index rows, Eigen::Index cols) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_normal();
    }
    return m;
  }

  Mat hermitian(Eigen::Index n) {
    const Mat g = ginibre(n, n);
    return 0.5 * (g + g.adjoint());
  }

  // Haar-distributed via QR with the phase correction.
  Mat unitary(Eigen::Index n) {
    Eigen::HouseholderQR<Mat> qr(ginibre(n, n));
    Mat q = qr.householderQ();
    for (Eigen::Index k = 0; k < n; ++k) {
      const Cx d = qr.matrixQR()(k, k);
      if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
    }
    return q;
  }

  Vec unit_vector(Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_normal();
    return v / v.norm();
  }

  // Projector onto columns of `basis` selected by a nonempty, non-full mask
  // when `proper` is set, any nonempty mask otherwise.
  Mat projector_in_basis(const Mat& basis, bool proper = false) {
    const Eigen::Index n = basis.rows();
    const int full = (1 << n) - 1;
    int mask = 0;
    do {
      mask = integer(1, full);
    } while (proper && mask == full);
    Mat p = Mat::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      if ((mask >> k) & 1) p += basis.col(k) * basis.col(k).adjoint();
    }
    return p;
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline Mat naive_multiply(const Mat& a, const Mat& b) {
  Mat c = Mat::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Cx acc = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

inline Mat naive_kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      c(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return c;
}

inline Vec naive_kron(const Vec& a, const Vec& b) {
  Vec c(a.size() * b.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = a(i / b.size()) * b(i % b.size());
  return c;
}

inline double max_entry(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline Mat sx() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat sy() {
  Mat m(2, 2);
  m << 0, Cx(0, -1), Cx(0, 1), 0;
  return m;
}
inline Mat sz() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline Mat id(Eigen::Index n) { return Mat::Identity(n, n); }
inline Vec up() {
  Vec v(2);
  v << 1, 0;
  return v;
}

// Rank by Gram-Schmidt with an absolute threshold; independent of SVD.
inline Eigen::Index gram_schmidt_rank(const Mat& cols, double tol = 1e-8) {
  std::vector<Vec> basis;
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    Vec v = cols.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& b : basis) v -= b * b.dot(v);
    }
    if (v.norm() > tol) basis.push_back(v / v.norm());
  }
  return static_cast<Eigen::Index>(basis.size());
}

}  // namespace edur::testing

#endif  // EDUR_TESTS_SUPPORT_RANDOM_OPS_HPP_
