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

#ifndef WSTAR_ENUMERATORS_HPP
#define WSTAR_ENUMERATORS_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wstar/filtration.hpp"
#include "wstar/matcore.hpp"
#include "wstar/tverberg.hpp"

namespace wstar {

/// Clebsch-Gordan coefficients <a k; b m-k | (ab) j m> for one coupled spin
/// j, Condon-Shortley phases (the k = a coefficient of the m = j state is
/// positive). All spins and projections are doubled.
struct CGTable {
  int two_a = 0;
  int two_b = 0;
  int two_j = 0;
  /// (two_m, two_k) -> coefficient; missing keys are zero.
  std::map<std::pair<int, int>, double> entries;

  bool empty() const { return entries.empty(); }
  double at(int two_m, int two_k) const;
};

/// True when (a, b, c) satisfy the triangle inequalities and a + b + c is an
/// integer.
bool triangle(int two_a, int two_b, int two_c);

/// Empty table when (a, b, j) violates the triangle condition.
CGTable cg_coefficients(int two_a, int two_b, int two_j);

/// Wigner 6j symbol {a b c; d e f}.
struct SixJ {
  int two[6] = {0, 0, 0, 0, 0, 0};
  double value = 0.0;
  /// value^2, exactly.
  Rational exact_square = 0;
  /// -1, 0 or +1.
  int sign = 0;
};

/// Racah single-sum formula in exact integer arithmetic; memoized.
SixJ sixj(int two_a, int two_b, int two_c, int two_d, int two_e, int two_f);
inline double sixj_value(int two_a, int two_b, int two_c, int two_d, int two_e,
                         int two_f) {
  return sixj(two_a, two_b, two_c, two_d, two_e, two_f).value;
}

/// Per-grade enumerators of a pair of operators on V_j.
struct WeightTable {
  int two_j = 0;
  std::vector<Complex> A;
  std::vector<Complex> B;
  std::string operands;
};

/// A_d = (2d+1)^{-1/2} sum_i Tr(M_i* X) Tr(M_i Y), d = 0..2j.
std::vector<Complex> weight_A(int two_j, const ComplexMatrix& x,
                              const ComplexMatrix& y);
/// B_d = (2d+1)^{-1/2} sum_i Tr(M_i* X M_i Y), d = 0..2j.
std::vector<Complex> weight_B(int two_j, const ComplexMatrix& x,
                              const ComplexMatrix& y);
WeightTable weight_table(int two_j, const ComplexMatrix& x, const ComplexMatrix& y,
                         std::string operands = "");

/// Coefficient of B_e in A_d:
/// (-1)^{2j+d+e} sqrt((2e+1)(2d+1)) {j j d; j j e}.
double macwilliams_coefficient(int two_j, int d, int e);

/// (2j+1) x (2j+1) matrix of macwilliams_coefficient; an involution.
Eigen::MatrixXd macwilliams_matrix(int two_j);

/// max_d |A_d - sum_e coeff(d, e) B_e|.
double macwilliams_check(int two_j, const ComplexMatrix& x, const ComplexMatrix& y);
double macwilliams_deviation(const WeightTable& t);

struct RainsReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// lhs = K Tr(M* P M P), rhs = |Tr(MP)|^2 with K = round(Tr P). Throws
/// DomainError unless P is a Hermitian idempotent within 1e-10.
RainsReport rains_check(const ComplexMatrix& p, const ComplexMatrix& m);

/// Ordered pairs (x, y) of the subset counted by d(x, y).
std::map<double, long> classical_distribution(const FiniteMetric& m,
                                              std::span<const int> subset);

/// Unnormalized sum_M Tr(M* X M Y) over each pure term of the filtration,
/// keyed by grade label.
std::map<double, Complex> pure_term_distribution(const Filtration& f,
                                                 const ComplexMatrix& x,
                                                 const ComplexMatrix& y);

}  // namespace wstar

#endif  // WSTAR_ENUMERATORS_HPP
