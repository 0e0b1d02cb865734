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

#include "edur/qlogic.hpp"

#include <algorithm>
#include <cstdint>

#include "edur/errors.hpp"

namespace edur {

namespace {

void require_same_dim(const ProjectionOperator& p, const ProjectionOperator& q, const char* where) {
  if (p.dim() != q.dim()) throw InvalidInput(std::string(where) + ": projector dimensions differ");
}

ProjectionOperator sum_subset(std::span<const ProjectionOperator> ps, std::uint64_t mask, Eigen::Index dim) {
  ComplexMatrix acc = zeros(dim);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) acc += ps[i].matrix();
  }
  return ProjectionOperator(acc);
}

ProjectionOperator join_subset(std::span<const ProjectionOperator> ps, std::uint64_t mask, Eigen::Index dim) {
  ProjectionOperator acc = ProjectionOperator::zero(dim);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) acc = join(acc, ps[i]);
  }
  return acc;
}

}  // namespace

ProjectionOperator orthocomplement(const ProjectionOperator& p) {
  return ProjectionOperator(ComplexMatrix(identity(p.dim()) - p.matrix()));
}

ProjectionOperator meet(const ProjectionOperator& p, const ProjectionOperator& q) {
  require_same_dim(p, q, "meet");
  const ComplexMatrix id = identity(p.dim());
  return ProjectionOperator(null_space_projector((id - p.matrix()) + (id - q.matrix())));
}

ProjectionOperator join(const ProjectionOperator& p, const ProjectionOperator& q) {
  require_same_dim(p, q, "join");
  return orthocomplement(meet(orthocomplement(p), orthocomplement(q)));
}

ProjectionOperator join_all(std::span<const ProjectionOperator> ps, Eigen::Index dim) {
  ProjectionOperator acc = ProjectionOperator::zero(dim);
  for (const ProjectionOperator& p : ps) acc = join(acc, p);
  return acc;
}

bool lattice_equal(const ProjectionOperator& p, const ProjectionOperator& q, double tol) {
  return p.dim() == q.dim() && max_abs(p.matrix() - q.matrix()) <= tol;
}

LatticeCheckReport distributivity_holds(const ProjectionOperator& u, const ProjectionOperator& v) {
  require_same_dim(u, v, "distributivity_holds");
  LatticeCheckReport r;
  const ProjectionOperator v_and_u = meet(v, u);
  const ProjectionOperator v_and_not_u = meet(v, orthocomplement(u));
  const ProjectionOperator rebuilt = join(v_and_u, v_and_not_u);
  r.meet_rank = v_and_u.rank();
  r.max_residual = max_abs(v.matrix() - rebuilt.matrix());
  r.distributive = r.max_residual <= kLatticeEqualTol;
  r.commutator_norm = max_abs(commutator(u.matrix(), v.matrix()));
  r.commutes = r.commutator_norm <= kCommuteTol;
  return r;
}

MeasurabilityResult simultaneously_measurable(const Observable& a, const Observable& b) {
  if (a.dim() != b.dim()) throw InvalidInput("simultaneously_measurable: observable dimensions differ");
  MeasurabilityResult out;
  const SpectralObservableMap sa = spectral_map(a);
  const SpectralObservableMap sb = spectral_map(b);
  out.measurable = true;
  for (const ProjectionOperator& u : sa.projectors) {
    for (const ProjectionOperator& v : sb.projectors) {
      out.pairs.push_back(distributivity_holds(u, v));
      out.measurable = out.measurable && out.pairs.back().distributive;
    }
  }
  out.commutes = max_abs(commutator(a.op, b.op)) <= kCommuteTol;
  return out;
}

TheoremReport theorem_brute_force(std::span<const ProjectionOperator> u_list, const ProjectionOperator& v) {
  if (u_list.empty()) throw InvalidInput("theorem_brute_force: empty resolution");
  const Eigen::Index dim = v.dim();
  ComplexMatrix total = zeros(dim);
  for (std::size_t i = 0; i < u_list.size(); ++i) {
    require_same_dim(u_list[i], v, "theorem_brute_force");
    total += u_list[i].matrix();
    for (std::size_t j = i + 1; j < u_list.size(); ++j) {
      if (max_abs(u_list[i].matrix() * u_list[j].matrix()) > kIdempotentTol) {
        throw InvalidInput("theorem_brute_force: projectors are not mutually orthogonal");
      }
    }
  }
  if (max_abs(total - identity(dim)) > kIdempotentTol) {
    throw InvalidInput("theorem_brute_force: projectors do not sum to the identity");
  }

  std::vector<ProjectionOperator> w;
  w.reserve(u_list.size());
  for (const ProjectionOperator& u : u_list) w.push_back(meet(u, v));

  TheoremReport r{.pairs = {}, .join_of_meets = join_all(w, dim)};
  double worst = max_abs(r.join_of_meets.matrix() - v.matrix());
  r.completeness = worst <= kLatticeEqualTol;

  const std::size_t n = u_list.size();
  const std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> masks;
  if (n <= 12) {
    for (std::uint64_t m = 1; m < full; ++m) masks.push_back(m);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      masks.push_back(std::uint64_t{1} << i);
      masks.push_back(full & ~(std::uint64_t{1} << i));
    }
  }
  r.additivity = true;
  r.complement = true;
  for (std::uint64_t m : masks) {
    // w(S) defined through the parent observable, and its relative complement.
    const ProjectionOperator w_s = meet(v, sum_subset(u_list, m, dim));
    const ProjectionOperator w_not_s = meet(v, sum_subset(u_list, full & ~m, dim));
    const double add_res = max_abs(join_subset(w, m, dim).matrix() - w_s.matrix());
    const double cmp_res = max_abs(meet(v, orthocomplement(w_s)).matrix() - w_not_s.matrix());
    r.additivity = r.additivity && add_res <= kLatticeEqualTol;
    r.complement = r.complement && cmp_res <= kLatticeEqualTol;
    worst = std::max({worst, add_res, cmp_res});
  }

  r.distributive = true;
  for (const ProjectionOperator& u : u_list) {
    r.pairs.push_back(distributivity_holds(u, v));
    r.distributive = r.distributive && r.pairs.back().distributive;
    worst = std::max(worst, r.pairs.back().max_residual);
  }
  r.max_residual = worst;
  r.pass = r.distributive;
  return r;
}

}  // namespace edur
