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

#ifndef WSTAR_BOUNDS_HPP
#define WSTAR_BOUNDS_HPP

#include <vector>

#include <Eigen/Dense>

namespace wstar {

enum class Sense { eq, ge, le };

/// Feasibility system rows[i] . x (sense[i]) rhs[i] with x >= 0.
struct LpInstance {
  int two_j = 0;
  int s = 0;
  int k = 1;
  Eigen::MatrixXd rows;
  Eigen::VectorXd rhs;
  std::vector<Sense> sense;

  Eigen::Index num_vars() const { return rows.cols(); }
  Eigen::Index num_rows() const { return rows.rows(); }
  void add_row(const Eigen::VectorXd& coeffs, Sense sn, double value);
};

/// Variables B_0..B_{2j}. Row d is k B_d - sum_e coeff(d, e) B_e, equal to
/// zero for d <= s and >= 0 above; a final row fixes B_0 = k/(2j+1).
LpInstance build_lp(int two_j, int s, int k);

inline constexpr double kLpTol = 1e-7;

struct LpResult {
  bool feasible = false;
  /// Phase-I optimum: total artificial mass left in the basis.
  double infeasibility = 0.0;
  Eigen::VectorXd point;
};

/// Dense Phase-I simplex with Bland's rule.
LpResult solve_feasibility(const LpInstance& lp, double tol = kLpTol);
inline bool feasible(const LpInstance& lp, double tol = kLpTol) {
  return solve_feasibility(lp, tol).feasible;
}

struct KScan {
  int k = 0;
  bool feasible = false;
};

struct MaxKResult {
  int two_j = 0;
  int s = 0;
  /// 0 when no k in range is feasible.
  int k_max = 0;
  std::vector<KScan> per_k;
  Eigen::VectorXd feasible_point;
  bool next_infeasible = false;
};

/// Scans every k = 1..max(1, 2j) (no monotonicity assumed).
MaxKResult max_k(int two_j, int s, double tol = kLpTol);

}  // namespace wstar

#endif  // WSTAR_BOUNDS_HPP
