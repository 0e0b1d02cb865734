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

#include "edur/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "edur/errors.hpp"
#include "edur/parallel.hpp"

namespace edur {

std::string_view to_string(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::kRobertson:
      return "robertson";
    case InequalityKind::kOzawa:
      return "ozawa";
    case InequalityKind::kHeisenbergProduct:
      return "heisenberg_product";
    case InequalityKind::kMochi:
      return "mochi";
    case InequalityKind::kMochi2:
      return "mochi2";
  }
  return "unknown";
}

InequalityKind parse_inequality(std::string_view name) {
  for (InequalityKind k : kAllInequalities) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput("unknown inequality '" + std::string(name) + "'");
}

InequalityReport evaluate(InequalityKind kind, const ErrorDisturbanceSummary& q, double commutator_abs, double tol) {
  for (double v : {q.epsilon, q.eta, q.sigma_a, q.sigma_b, q.product_factored, commutator_abs}) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidInput("evaluate: inputs must be finite and nonnegative");
  }
  const double half = 0.5 * commutator_abs;
  InequalityReport r{.kind = kind};
  switch (kind) {
    case InequalityKind::kRobertson:
      r.lhs = q.sigma_a * q.sigma_b;
      r.rhs = half;
      break;
    case InequalityKind::kOzawa:
      r.lhs = q.epsilon * q.eta + q.epsilon * q.sigma_b + q.sigma_a * q.eta;
      r.rhs = half;
      break;
    case InequalityKind::kHeisenbergProduct:
      r.lhs = q.epsilon * q.eta;
      r.rhs = half;
      break;
    case InequalityKind::kMochi:
      r.lhs = q.product_factored;
      r.rhs = (2.0 - std::numbers::sqrt2) * commutator_abs;
      break;
    case InequalityKind::kMochi2:
      r.lhs = q.product_factored;
      r.rhs = commutator_abs;
      break;
  }
  r.slack = r.lhs - r.rhs;
  r.satisfied = r.slack >= -tol;
  return r;
}

std::string_view to_string(BoundConstraint c) {
  return c == BoundConstraint::kOzawa ? "ozawa" : "heisenberg_product";
}

BoundConstraint parse_bound_constraint(std::string_view name) {
  if (name == "ozawa") return BoundConstraint::kOzawa;
  if (name == "heisenberg_product") return BoundConstraint::kHeisenbergProduct;
  throw InvalidInput("unknown bound constraint '" + std::string(name) + "'");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The objective is increasing in eta and every constraint is nondecreasing in
// eta, so eta can be pinned at its smallest feasible value. sigma_b is
// parameterized as the Robertson minimum plus a slack t >= 0, leaving an
// unconstrained search over (eps, sigma_a, t) on a box.
class ReducedProblem {
 public:
  ReducedProblem(BoundConstraint c, double commutator_abs)
      : constraint_(c), half_(0.5 * commutator_abs), box_(4.0 * std::sqrt(commutator_abs)) {}

  double box() const { return box_; }

  BoundArgmin expand(double eps, double sigma_a, double t) const {
    BoundArgmin p{.epsilon = eps, .sigma_a = sigma_a};
    p.sigma_b = half_ / sigma_a + t;
    if (constraint_ == BoundConstraint::kHeisenbergProduct) {
      p.eta = eps > 0.0 ? half_ / eps : kInf;
    } else {
      p.eta = std::max(0.0, (half_ - eps * p.sigma_b) / (eps + sigma_a));
    }
    return p;
  }

  double value(double eps, double sigma_a, double t) const {
    if (eps < 0.0 || t < 0.0 || !(sigma_a > 0.0) || eps > box_ || sigma_a > box_) return kInf;
    const BoundArgmin p = expand(eps, sigma_a, t);
    if (p.eta > box_ || p.sigma_b > box_) return kInf;
    return std::sqrt(eps * eps + sigma_a * sigma_a) * std::sqrt(p.eta * p.eta + p.sigma_b * p.sigma_b);
  }

 private:
  BoundConstraint constraint_;
  double half_;
  double box_;
};

struct GridBest {
  double value = kInf;
  std::array<double, 3> x{0.0, 0.0, 0.0};
};

// Scans lo[k] + i * step for i in [0, count] on each axis. Ties resolve to
// the lexicographically smallest index, so the result is partition independent.
GridBest scan(const ReducedProblem& prob, const std::array<double, 3>& lo, double step, int count) {
  std::vector<GridBest> slices(static_cast<std::size_t>(count) + 1);
  parallel_for(slices.size(), [&](std::size_t i) {
    GridBest best;
    const double eps = lo[0] + static_cast<double>(i) * step;
    for (int j = 0; j <= count; ++j) {
      const double sa = lo[1] + j * step;
      for (int k = 0; k <= count; ++k) {
        const double t = lo[2] + k * step;
        const double v = prob.value(eps, sa, t);
        if (v < best.value) best = {v, {eps, sa, t}};
      }
    }
    slices[i] = best;
  });
  GridBest best;
  for (const GridBest& s : slices) {
    if (s.value < best.value) best = s;
  }
  return best;
}

}  // namespace

BoundConstantResult verify_bound_constant(BoundConstraint constraint, double commutator_abs, double grid_resolution) {
  if (!(commutator_abs > 0.0) || !std::isfinite(commutator_abs)) {
    throw InvalidInput("verify_bound_constant: commutator magnitude must be positive");
  }
  const ReducedProblem prob(constraint, commutator_abs);
  constexpr int kCoarseCells = 64;
  if (!(grid_resolution > 0.0) || grid_resolution > prob.box() / 8.0) {
    throw InvalidInput("verify_bound_constant: grid resolution " + std::to_string(grid_resolution) +
                       " must lie in (0, " + std::to_string(prob.box() / 8.0) +
                       "]; a coarser grid cannot resolve the feasible region");
  }

  double step = prob.box() / kCoarseCells;
  GridBest best = scan(prob, {0.0, step, 0.0}, step, kCoarseCells);
  if (!std::isfinite(best.value)) {
    throw NumericFailure("verify_bound_constant: no feasible grid point");
  }
  // Zoom: each level shrinks the spacing by 4 and scans +-2 old steps around
  // the incumbent.
  constexpr int kZoomHalf = 8;
  while (step > grid_resolution) {
    const double next = step / 4.0;
    std::array<double, 3> lo{};
    for (int a = 0; a < 3; ++a) lo[a] = best.x[a] - kZoomHalf * next;
    const GridBest cand = scan(prob, lo, next, 2 * kZoomHalf);
    if (cand.value < best.value) best = cand;
    step = next;
  }

  BoundConstantResult out{.constraint = constraint, .argmin = {}, .grid_resolution = grid_resolution};
  out.grid_minimum_ratio = best.value / commutator_abs;

  std::array<double, 3> x = best.x;
  double fx = best.value;
  double s = grid_resolution;
  for (int iter = 0; iter < 200000 && s > 1e-12; ++iter) {
    bool moved = false;
    for (int a = 0; a < 3; ++a) {
      for (double dir : {1.0, -1.0}) {
        std::array<double, 3> y = x;
        y[a] += dir * s;
        const double fy = prob.value(y[0], y[1], y[2]);
        if (fy < fx) {
          x = y;
          fx = fy;
          moved = true;
        }
      }
    }
    if (!moved) s *= 0.5;
  }
  out.minimum_ratio = fx / commutator_abs;
  out.argmin = prob.expand(x[0], x[1], x[2]);
  return out;
}

}  // namespace edur
