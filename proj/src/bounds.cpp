// Copyright 2026 The wstar Authors
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

#include "wstar/bounds.hpp"

#include <algorithm>

#include "wstar/enumerators.hpp"
#include "wstar/matcore.hpp"

namespace wstar {

void LpInstance::add_row(const Eigen::VectorXd& coeffs, Sense sn, double value) {
  if (rows.rows() == 0 && rows.cols() == 0) rows.resize(0, coeffs.size());
  if (coeffs.size() != rows.cols()) throw ShapeError("add_row: wrong row length");
  rows.conservativeResize(rows.rows() + 1, Eigen::NoChange);
  rows.row(rows.rows() - 1) = coeffs.transpose();
  rhs.conservativeResize(rhs.size() + 1);
  rhs(rhs.size() - 1) = value;
  sense.push_back(sn);
}

LpInstance build_lp(int two_j, int s, int k) {
  if (two_j < 0) throw DomainError("build_lp: two_j must be >= 0");
  if (k < 1) throw DomainError("build_lp: k must be >= 1");
  if (s < 0 || s > two_j) throw DomainError("build_lp: detection grade out of range");
  LpInstance lp;
  lp.two_j = two_j;
  lp.s = s;
  lp.k = k;
  const int n = two_j + 1;
  const Eigen::MatrixXd c = macwilliams_matrix(two_j);
  lp.rows.resize(0, n);
  for (int d = 0; d < n; ++d) {
    Eigen::VectorXd row = -c.row(d).transpose();
    row(d) += k;
    lp.add_row(row, d <= s ? Sense::eq : Sense::ge, 0.0);
  }
  Eigen::VectorXd norm = Eigen::VectorXd::Zero(n);
  norm(0) = 1.0;
  lp.add_row(norm, Sense::eq, static_cast<double>(k) / n);
  return lp;
}

LpResult solve_feasibility(const LpInstance& lp, double tol) {
  const Eigen::Index m = lp.num_rows();
  const Eigen::Index nv = lp.num_vars();
  Eigen::Index nslack = 0;
  for (Sense sn : lp.sense) nslack += sn != Sense::eq;
  const Eigen::Index nart = m;
  const Eigen::Index ncol = nv + nslack + nart;
  constexpr double kPivotEps = 1e-12;

  // Tableau [A | b] with b >= 0 and an artificial basis.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, ncol + 1);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  Eigen::Index slack = nv;
  for (Eigen::Index i = 0; i < m; ++i) {
    t.block(i, 0, 1, nv) = lp.rows.row(i);
    if (lp.sense[i] == Sense::ge) t(i, slack++) = -1.0;
    if (lp.sense[i] == Sense::le) t(i, slack++) = 1.0;
    t(i, ncol) = lp.rhs(i);
    if (t(i, ncol) < 0) t.row(i) *= -1.0;
    t(i, nv + nslack + i) = 1.0;
    basis[i] = nv + nslack + i;
  }
  // Reduced costs of the artificial objective.
  Eigen::RowVectorXd cost = Eigen::RowVectorXd::Zero(ncol + 1);
  cost.segment(nv + nslack, nart).setOnes();
  for (Eigen::Index i = 0; i < m; ++i) cost -= t.row(i);

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < ncol; ++j) {
      if (cost(j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= kPivotEps) continue;
      const double ratio = t(i, ncol) / t(i, enter);
      if (leave < 0 || ratio < best - kPivotEps ||
          (ratio <= best + kPivotEps && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded below cannot happen for Phase I
    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i != leave && t(i, enter) != 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    }
    cost -= cost(enter) * t.row(leave);
    basis[leave] = enter;
  }

  LpResult r;
  r.infeasibility = std::max(0.0, -cost(ncol));
  r.feasible = r.infeasibility < tol;
  r.point = Eigen::VectorXd::Zero(nv);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < nv) r.point(basis[i]) = t(i, ncol);
  }
  return r;
}

MaxKResult max_k(int two_j, int s, double tol) {
  MaxKResult out;
  out.two_j = two_j;
  out.s = s;
  const int top = std::max(1, two_j);
  for (int k = 1; k <= top; ++k) {
    const LpResult r = solve_feasibility(build_lp(two_j, s, k), tol);
    out.per_k.push_back({k, r.feasible});
    if (r.feasible) {
      out.k_max = k;
      out.feasible_point = r.point;
    }
  }
  out.next_infeasible = !feasible(build_lp(two_j, s, out.k_max + 1), tol);
  return out;
}

}  // namespace wstar
