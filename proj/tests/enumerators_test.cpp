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

#include "wstar/enumerators.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wstar/codes.hpp"
#include "wstar/su2rep.hpp"

using namespace wstar;

TEST(enumerators, triangle) {
  EXPECT_TRUE(triangle(1, 1, 2));
  EXPECT_TRUE(triangle(1, 1, 0));
  EXPECT_FALSE(triangle(1, 1, 1));  // half-integer sum
  EXPECT_FALSE(triangle(2, 2, 6));
  EXPECT_FALSE(triangle(-1, 1, 0));
}

TEST(enumerators, cg_spin_half_pair) {
  const CGTable t = cg_coefficients(1, 1, 2);
  EXPECT_DOUBLE_EQ(t.at(2, 1), 1.0);
  EXPECT_NEAR(t.at(0, 1), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.at(0, -1), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(t.at(0, 3), 0.0);
  EXPECT_TRUE(cg_coefficients(1, 1, 4).empty());
  EXPECT_TRUE(cg_coefficients(2, 2, 1).empty());
}

TEST(enumerators, cg_coupling_to_zero) {
  for (int d = 0; d <= 8; ++d) {
    const CGTable t = cg_coefficients(d, d, 0);
    for (int k = -d; k <= d; k += 2) {
      const double sign = ((d - k) / 2) % 2 == 0 ? 1.0 : -1.0;
      EXPECT_NEAR(t.at(0, k), sign / std::sqrt(d + 1.0), 1e-14) << d << " " << k;
    }
  }
}

TEST(enumerators, cg_highest_weight_phase) {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int j = std::abs(a - b); j <= a + b; j += 2) {
        EXPECT_GT(cg_coefficients(a, b, j).at(j, a), 0.0) << a << b << j;
      }
    }
  }
}

TEST(enumerators, cg_unitarity) {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      std::vector<CGTable> tables;
      for (int j = std::abs(a - b); j <= a + b; j += 2) tables.push_back(cg_coefficients(a, b, j));
      for (int m = -(a + b); m <= a + b; m += 2) {
        // Rows (j) and columns (k) of the change of basis at fixed m.
        std::vector<int> ks;
        for (int k = -a; k <= a; k += 2) {
          if (std::abs(m - k) <= b) ks.push_back(k);
        }
        std::vector<const CGTable*> js;
        for (const auto& t : tables) {
          if (std::abs(m) <= t.two_j) js.push_back(&t);
        }
        ASSERT_EQ(js.size(), ks.size());
        for (std::size_t p = 0; p < js.size(); ++p) {
          for (std::size_t r = 0; r < js.size(); ++r) {
            double row = 0.0;
            for (int k : ks) row += js[p]->at(m, k) * js[r]->at(m, k);
            EXPECT_NEAR(row, p == r ? 1.0 : 0.0, 1e-12);
          }
        }
        for (int k1 : ks) {
          for (int k2 : ks) {
            double col = 0.0;
            for (const auto* t : js) col += t->at(m, k1) * t->at(m, k2);
            EXPECT_NEAR(col, k1 == k2 ? 1.0 : 0.0, 1e-12);
          }
        }
      }
    }
  }
}

TEST(enumerators, sixj_examples) {
  const SixJ a = sixj(1, 1, 2, 1, 1, 2);
  EXPECT_EQ(a.exact_square, Rational(1, 36));
  EXPECT_EQ(a.sign, 1);
  EXPECT_NEAR(a.value, 1.0 / 6.0, 1e-15);
  const SixJ b = sixj(2, 2, 2, 0, 2, 2);
  EXPECT_EQ(b.exact_square, Rational(1, 9));
  EXPECT_EQ(b.sign, -1);
  EXPECT_NEAR(b.value, -1.0 / 3.0, 1e-15);
  const SixJ z = sixj(1, 1, 4, 1, 1, 2);
  EXPECT_EQ(z.value, 0.0);
  EXPECT_EQ(z.sign, 0);
}

TEST(enumerators, sixj_zero_entry_closed_form) {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      for (int c = std::abs(a - b); c <= a + b; c += 2) {
        const int ph = (a + b + c) / 2;
        const double expected = (ph % 2 == 0 ? 1.0 : -1.0) / std::sqrt((b + 1.0) * (c + 1.0));
        EXPECT_NEAR(sixj_value(a, b, c, 0, c, b), expected, 1e-14);
      }
    }
  }
}

TEST(enumerators, sixj_square_consistency) {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) {
        for (int e = 0; e <= 6; ++e) {
          const SixJ s = sixj(a, b, c, a, e, b);
          if (s.sign == 0) continue;
          const double sq = s.exact_square.get_d();
          EXPECT_NEAR(s.value * s.value, sq, 1e-14 * sq);
        }
      }
    }
  }
}

// Independent oracle: contraction of four 3j symbols.
TEST(enumerators, sixj_matches_three_j_contraction) {
  int checked = 0;
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int j3 = 0; j3 <= 4; ++j3) {
        if (!triangle(j1, j2, j3)) continue;
        for (int j4 = 0; j4 <= 4; ++j4)
          for (int j5 = 0; j5 <= 4; ++j5)
            for (int j6 = 0; j6 <= 4; ++j6) {
              const double mine = sixj_value(j1, j2, j3, j4, j5, j6);
              const double oracle = oracle::sixj_from_three_j(j1, j2, j3, j4, j5, j6);
              EXPECT_NEAR(mine, oracle, 1e-12) << j1 << j2 << j3 << j4 << j5 << j6;
              ++checked;
            }
      }
  EXPECT_GT(checked, 1000);
}

TEST(enumerators, sixj_orthogonality) {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c)
        for (int d = 0; d <= 8; ++d) {
          if ((a + b + c + d) % 2 != 0) continue;
          for (int p = 0; p <= 8; ++p) {
            if (!triangle(a, d, p) || !triangle(c, b, p)) continue;
            for (int q = 0; q <= 8; ++q) {
              if (!triangle(a, d, q) || !triangle(c, b, q)) continue;
              double sum = 0.0;
              for (int x = 0; x <= 16; ++x) {
                sum += (x + 1.0) * sixj_value(a, b, x, c, d, p) * sixj_value(a, b, x, c, d, q);
              }
              EXPECT_NEAR(sum, p == q ? 1.0 / (p + 1.0) : 0.0, 1e-12);
            }
          }
        }
}

TEST(enumerators, weights_of_identity) {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const ComplexMatrix id = ComplexMatrix::Identity(two_j + 1, two_j + 1);
    const auto b = weight_B(two_j, id, id);
    const auto a = weight_A(two_j, id, id);
    for (int d = 0; d <= two_j; ++d) {
      EXPECT_NEAR(std::abs(b[d] - std::sqrt(2.0 * d + 1.0)), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(a[d]), d == 0 ? two_j + 1.0 : 0.0, 1e-12);
    }
    EXPECT_LT(macwilliams_check(two_j, id, id), 1e-10);
  }
}

TEST(enumerators, weights_of_projection) {
  const Code c = build_code(9, 2, 2);
  const auto a = weight_A(9, c.projection, c.projection);
  const auto b = weight_B(9, c.projection, c.projection);
  EXPECT_NEAR(b[0].real(), 2.0 / 10.0, 1e-14);
  EXPECT_NEAR(a[0].real(), 4.0 / 10.0, 1e-14);
  for (int d = 0; d <= 2; ++d) EXPECT_NEAR(std::abs(2.0 * b[d] - a[d]), 0.0, 1e-12);
  EXPECT_GT(std::abs(2.0 * b[3] - a[3]), 1e-3);
}

TEST(enumerators, traceless_operand_has_no_grade_zero_weight) {
  const ComplexMatrix x = build_irrep(4).h;
  EXPECT_NEAR(std::abs(weight_A(4, x, x)[0]), 0.0, 1e-15);
}

TEST(enumerators, weights_reject_shape_mismatch) {
  const ComplexMatrix x = ComplexMatrix::Identity(3, 3);
  EXPECT_THROW(weight_A(3, x, x), ShapeError);
  EXPECT_THROW(weight_B(2, x, ComplexMatrix::Identity(2, 2)), ShapeError);
}

TEST(enumerators, identity_spin_half_rank_one) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  const WeightTable t = weight_table(1, p, p);
  // By hand: B = (1/2, 1/(2 sqrt 3)), A = (1/2, 1/(2 sqrt 3)).
  EXPECT_NEAR(t.B[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(t.B[1].real(), 0.5 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(t.A[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(t.A[1].real(), 0.5 / std::sqrt(3.0), 1e-15);
  EXPECT_LT(macwilliams_deviation(t), 1e-12);
}

TEST(enumerators, identity_random_hermitian_pairs) {
  for (int two_j = 0; two_j <= 8; ++two_j) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const ComplexMatrix x = random_hermitian(5, 2 * i, two_j + 1);
      const ComplexMatrix y = random_hermitian(5, 2 * i + 1, two_j + 1);
      worst = std::max(worst, macwilliams_check(two_j, x, y));
    }
    EXPECT_LT(worst, 1e-8) << two_j;
  }
}

TEST(enumerators, identity_matrix_is_symmetric_involution) {
  for (int two_j = 0; two_j <= 9; ++two_j) {
    const Eigen::MatrixXd c = macwilliams_matrix(two_j);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(two_j + 1, two_j + 1);
    EXPECT_LT((c * c - id).norm(), 1e-10);
    EXPECT_LT((c - c.transpose()).norm(), 1e-12);
  }
}

// The phase (-1)^{2j-e} differs from (-1)^{2j+d+e} by (-1)^d and breaks the
// identity on every odd grade.
TEST(enumerators, phase_without_grade_sign_fails) {
  const int two_j = 3;
  const ComplexMatrix x = random_hermitian(17, 0, 4);
  const ComplexMatrix y = random_hermitian(17, 1, 4);
  const WeightTable t = weight_table(two_j, x, y);
  double worst = 0.0;
  for (int d = 0; d <= two_j; ++d) {
    Complex rhs = 0.0;
    for (int e = 0; e <= two_j; ++e) {
      const double sign = ((two_j - e) % 2 == 0) ? 1.0 : -1.0;
      rhs += sign * std::sqrt((2.0 * e + 1.0) * (2.0 * d + 1.0)) *
             sixj_value(two_j, two_j, 2 * d, two_j, two_j, 2 * e) * t.B[e];
    }
    worst = std::max(worst, std::abs(t.A[d] - rhs));
  }
  EXPECT_GT(worst, 1e-2);
  EXPECT_LT(macwilliams_deviation(t), 1e-10);
}

TEST(enumerators, rains_inequality) {
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 10;
    const ComplexMatrix g = random_complex(23, 2 * i, n, n);
    const int k = 1 + i % n;
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, k);
    const ComplexMatrix p = q * q.adjoint();
    const ComplexMatrix m = random_complex(23, 2 * i + 1, n, n);
    const RainsReport r = rains_check(p, m);
    EXPECT_GE(r.gap, -1e-10);
    if (k == 1) EXPECT_NEAR(r.gap, 0.0, 1e-9);
    EXPECT_NEAR(rains_check(p, ComplexMatrix::Identity(n, n)).gap, 0.0, 1e-9);
  }
}

TEST(enumerators, rains_rejects_non_projection) {
  ComplexMatrix p = ComplexMatrix::Identity(2, 2) * 0.5;
  EXPECT_THROW(rains_check(p, p), DomainError);
  EXPECT_THROW(rains_check(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)),
               ShapeError);
}

TEST(enumerators, classical_distribution_examples) {
  const FiniteMetric m = path_metric(3);
  const std::vector<int> one{1};
  EXPECT_EQ(classical_distribution(m, one), (std::map<double, long>{{0.0, 1}}));
  const std::vector<int> ends{0, 2};
  EXPECT_EQ(classical_distribution(m, ends), (std::map<double, long>{{0.0, 2}, {2.0, 2}}));
  EXPECT_THROW(classical_distribution(m, std::vector<int>{}), DomainError);
  EXPECT_THROW(classical_distribution(m, std::vector<int>{0, 0}), DomainError);
  EXPECT_THROW(classical_distribution(m, std::vector<int>{3}), DomainError);
}

TEST(enumerators, classical_distribution_equals_pure_term_weights) {
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 9;
    const FiniteMetric m = oracle::random_metric(31, i, n);
    CounterStream rng(32, i);
    std::vector<int> subset;
    for (int p = 0; p < n; ++p) {
      if (rng.next_u64() % 2 == 0) subset.push_back(p);
    }
    if (subset.empty()) subset.push_back(0);
    ComplexMatrix ps = ComplexMatrix::Zero(n, n);
    for (int p : subset) ps(p, p) = 1.0;
    const auto counts = classical_distribution(m, subset);
    const auto weights = pure_term_distribution(classical_filtration(m), ps, ps);
    for (const auto& [label, w] : weights) {
      const auto it = counts.find(label);
      const double expected = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      EXPECT_EQ(w, Complex(expected)) << i << " " << label;
    }
  }
}
