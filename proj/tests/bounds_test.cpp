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

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wstar/codes.hpp"
#include "wstar/enumerators.hpp"

using namespace wstar;

TEST(bounds, row_structure) {
  const LpInstance lp = build_lp(1, 0, 1);
  EXPECT_EQ(lp.num_vars(), 2);
  ASSERT_EQ(lp.num_rows(), 3);
  EXPECT_EQ(lp.sense[0], Sense::eq);
  EXPECT_EQ(lp.sense[1], Sense::ge);
  EXPECT_EQ(lp.sense[2], Sense::eq);
  EXPECT_DOUBLE_EQ(lp.rhs(2), 0.5);

  const LpInstance five = build_lp(5, 2, 3);
  EXPECT_EQ(five.num_vars(), 6);
  ASSERT_EQ(five.num_rows(), 7);
  for (int d = 0; d <= 5; ++d) {
    EXPECT_EQ(five.sense[d], d <= 2 ? Sense::eq : Sense::ge);
    EXPECT_EQ(five.rhs(d), 0.0);
  }
  EXPECT_DOUBLE_EQ(five.rhs(6), 3.0 / 6.0);
}

TEST(bounds, coefficients_match_sixj) {
  for (int k = 1; k <= 5; ++k) {
    const LpInstance lp = build_lp(5, 2, k);
    for (int d = 0; d <= 5; ++d) {
      for (int e = 0; e <= 5; ++e) {
        const double sign = ((5 + d + e) % 2 == 0) ? 1.0 : -1.0;
        const double coeff = sign * std::sqrt((2.0 * e + 1.0) * (2.0 * d + 1.0)) *
                             oracle::sixj_from_three_j(5, 5, 2 * d, 5, 5, 2 * e);
        const double expected = (d == e ? k : 0.0) - coeff;
        EXPECT_NEAR(lp.rows(d, e), expected, 1e-12) << d << " " << e;
      }
    }
  }
}

TEST(bounds, rejects_bad_parameters) {
  EXPECT_THROW(build_lp(3, 4, 1), DomainError);
  EXPECT_THROW(build_lp(3, -1, 1), DomainError);
  EXPECT_THROW(build_lp(3, 1, 0), DomainError);
  EXPECT_THROW(build_lp(-1, 0, 1), DomainError);
}

TEST(bounds, contradictory_rows) {
  LpInstance lp;
  Eigen::VectorXd row(1);
  row << 1.0;
  lp.add_row(row, Sense::eq, 1.0);
  lp.add_row(row, Sense::eq, 2.0);
  EXPECT_FALSE(feasible(lp));
  EXPECT_THROW(lp.add_row(Eigen::VectorXd::Ones(2), Sense::eq, 0.0), ShapeError);
}

TEST(bounds, small_generic_systems) {
  LpInstance lp;
  Eigen::VectorXd r(2);
  r << 1.0, 1.0;
  lp.add_row(r, Sense::le, 1.0);
  r << 1.0, -1.0;
  lp.add_row(r, Sense::ge, 0.5);
  const LpResult res = solve_feasibility(lp);
  ASSERT_TRUE(res.feasible);
  EXPECT_LE(res.point.sum(), 1.0 + 1e-12);
  EXPECT_GE(res.point(0) - res.point(1), 0.5 - 1e-12);
  r << -1.0, 0.0;
  lp.add_row(r, Sense::ge, 0.1);  // x0 <= -0.1 with x >= 0
  EXPECT_FALSE(feasible(lp));
}

TEST(bounds, feasible_points_satisfy_the_rows) {
  for (int two_j = 1; two_j <= 6; ++two_j) {
    for (int s = 0; s <= two_j; ++s) {
      const LpInstance lp = build_lp(two_j, s, 1);
      const LpResult r = solve_feasibility(lp);
      ASSERT_TRUE(r.feasible) << two_j << " " << s;
      EXPECT_TRUE((r.point.array() >= -1e-9).all());
      const Eigen::VectorXd lhs = lp.rows * r.point;
      for (Eigen::Index i = 0; i < lp.num_rows(); ++i) {
        if (lp.sense[i] == Sense::eq) EXPECT_NEAR(lhs(i), lp.rhs(i), 1e-7);
        if (lp.sense[i] == Sense::ge) EXPECT_GE(lhs(i), lp.rhs(i) - 1e-7);
      }
    }
  }
}

TEST(bounds, weights_of_a_real_code_are_feasible) {
  const Code c = build_code(9, 2, 2);
  const auto b = weight_B(9, c.projection, c.projection);
  const LpInstance lp = build_lp(9, 2, 2);
  Eigen::VectorXd x(10);
  for (int d = 0; d <= 9; ++d) x(d) = b[d].real();
  const Eigen::VectorXd lhs = lp.rows * x;
  for (Eigen::Index i = 0; i < lp.num_rows(); ++i) {
    if (lp.sense[i] == Sense::eq) EXPECT_NEAR(lhs(i), lp.rhs(i), 1e-10) << i;
    if (lp.sense[i] == Sense::ge) EXPECT_GE(lhs(i), lp.rhs(i) - 1e-10) << i;
  }
}

TEST(bounds, max_k_values) {
  const MaxKResult r41 = max_k(4, 1);
  EXPECT_GE(r41.k_max, 2);
  EXPECT_EQ(r41.per_k.size(), 4u);
  EXPECT_GE(max_k(9, 2).k_max, 2);
  for (int two_j = 1; two_j <= 6; ++two_j) {
    const MaxKResult r = max_k(two_j, two_j);
    EXPECT_GE(r.k_max, 1);
  }
  const MaxKResult r52 = max_k(5, 2);
  EXPECT_GE(r52.k_max, 1);
  EXPECT_EQ(r52.feasible_point.size(), 6);
  EXPECT_EQ(max_k(0, 0).per_k.size(), 1u);
}

// Simplex against exhaustive vertex enumeration on every instance with at
// most four variables.
TEST(bounds, simplex_agrees_with_vertex_enumeration) {
  int checked = 0;
  for (int two_j = 0; two_j <= 3; ++two_j) {
    for (int s = 0; s <= two_j; ++s) {
      for (int k = 1; k <= two_j + 1; ++k) {
        const LpInstance lp = build_lp(two_j, s, k);
        EXPECT_EQ(feasible(lp), oracle::vertex_feasible(lp)) << two_j << " " << s << " " << k;
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 30);
}

TEST(bounds, consistent_with_constructed_codes) {
  for (int s = 0; s <= 2; ++s) {
    for (int k = 1; k <= 3; ++k) {
      const int two_j = std::max(1, (s + 1) * (s + 1) * (k - 1));
      if (s > two_j) continue;
      EXPECT_GE(max_k(two_j, s).k_max, std::min(k, std::max(1, two_j))) << s << " " << k;
    }
  }
}
