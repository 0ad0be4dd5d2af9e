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

#include "wstar/codes.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wstar/su2rep.hpp"

using namespace wstar;

TEST(codes, select_weights_spacing) {
  EXPECT_EQ(select_weights(4, 1, 2), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(select_weights(9, 2, 2), (std::vector<int>{0, 3, 6, 9}));
  EXPECT_EQ(select_weights(3, 0, 4), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(select_weights(0, 5, 1), (std::vector<int>{0}));
}

TEST(codes, capacity_error_reports_minimal_dimension) {
  try {
    select_weights(2, 1, 2);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.minimal_dim(), 5);
  }
  EXPECT_THROW(build_code(8, 2, 2), CapacityError);
  EXPECT_NO_THROW(build_code(9, 2, 2));
  EXPECT_THROW(select_weights(4, -1, 2), DomainError);
  EXPECT_THROW(select_weights(4, 1, 0), DomainError);
}

TEST(codes, capacity_threshold_sweep) {
  for (int s = 0; s <= 3; ++s) {
    for (int k = 1; k <= 3; ++k) {
      for (int two_j = 0; two_j <= 40; ++two_j) {
        const bool over = two_j + 1 <= (s + 1) * (s + 1) * (k - 1);
        if (over) {
          EXPECT_THROW(select_weights(two_j, s, k), CapacityError);
        } else {
          EXPECT_NO_THROW(select_weights(two_j, s, k));
        }
      }
    }
  }
}

TEST(codes, spin_two_code_vectors) {
  const Code c = build_code(4, 1, 2);
  ASSERT_EQ(c.vectors.rows(), 5);
  ASSERT_EQ(c.vectors.cols(), 2);
  ComplexMatrix expected = ComplexMatrix::Zero(5, 2);
  expected(0, 0) = expected(4, 0) = 1.0 / std::sqrt(2.0);
  expected(2, 1) = 1.0;
  EXPECT_LT((c.vectors - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((c.vectors.adjoint() * c.vectors - ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(codes, detection_and_tightness) {
  const Filtration f4 = su2_filtration(build_irrep(4));
  const Code c4 = build_code(4, 1, 2);
  const DetectionReport r4 = verify_detection(c4, f4, 1);
  EXPECT_TRUE(r4.pass);
  EXPECT_LT(r4.max_residual, 1e-12);
  EXPECT_EQ(r4.checked, 4);
  EXPECT_FALSE(verify_detection(c4, f4, 2).pass);

  const Filtration f9 = su2_filtration(build_irrep(9));
  const Code c9 = build_code(9, 2, 2);
  EXPECT_LT(verify_detection(c9, f9, 2).max_residual, 1e-9);
  EXPECT_FALSE(verify_detection(c9, f9, 3).pass);
}

TEST(codes, minimal_admissible_sweep) {
  for (int s = 0; s <= 3; ++s) {
    for (int k = 1; k <= 3; ++k) {
      const int two_j = (s + 1) * (s + 1) * (k - 1);
      const Code c = build_code(two_j, s, k);
      const Filtration f = su2_filtration(build_irrep(two_j), s);
      EXPECT_TRUE(verify_detection(c, f, s).pass) << s << " " << k;
      EXPECT_NEAR(c.projection.trace().real(), static_cast<double>(k), 1e-14);
    }
  }
}

TEST(codes, detection_dimension_mismatch) {
  const Code c = build_code(4, 1, 2);
  EXPECT_THROW(verify_detection(c, su2_filtration(build_irrep(3)), 1), ShapeError);
}

TEST(codes, classical_detection_uses_zero_term) {
  const FiniteMetric m = path_metric(5);
  const Filtration f = classical_filtration(m);
  ComplexMatrix p = ComplexMatrix::Zero(5, 5);
  p(0, 0) = p(4, 4) = 1.0;
  EXPECT_TRUE(verify_detection(p, 2, f, 3).pass);
  EXPECT_FALSE(verify_detection(p, 2, f, 4).pass);
}

TEST(codes, recovery_for_spin_nine_half) {
  const Code c = build_code(9, 2, 2);
  const Filtration f = su2_filtration(build_irrep(9));
  const RecoveryChannel ch = build_recovery(c, f.at(1));
  const RecoveryReport r = verify_recovery(ch, f.at(1), 100, 42);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_residual, 1e-8);
  EXPECT_LT(r.completeness_residual, 1e-10);

  // Kraus form of the same channel.
  const auto ops = ch.kraus_operators();
  ComplexMatrix sum = ComplexMatrix::Zero(10, 10);
  for (const auto& k : ops) sum += k.adjoint() * k;
  EXPECT_LT((sum - ComplexMatrix::Identity(10, 10)).norm(), 1e-10);
  const ComplexMatrix rho = random_positive(3, 0, 10);
  ComplexMatrix out = ComplexMatrix::Zero(10, 10);
  for (const auto& k : ops) out += k * rho * k.adjoint();
  EXPECT_LT((out - ch.apply(rho)).norm(), 1e-10);
}

TEST(codes, recovery_is_trace_preserving) {
  const Code c = build_code(4, 1, 2);
  const Filtration f = su2_filtration(build_irrep(4));
  const RecoveryChannel ch = build_recovery(c, f.at(0));
  for (int i = 0; i < 5; ++i) {
    const ComplexMatrix rho = random_positive(9, i, 5);
    EXPECT_NEAR(std::abs(ch.apply(rho).trace() - rho.trace()), 0.0, 1e-10);
  }
}

TEST(codes, uncorrectable_errors_are_refused) {
  const Code c = build_code(9, 2, 2);
  const Filtration f = su2_filtration(build_irrep(9));
  try {
    build_recovery(c, f.at(2));
    FAIL() << "expected NotCorrectableError";
  } catch (const NotCorrectableError& e) {
    EXPECT_GT(e.residual(), 1e-3);
  }
  // Built anyway, the channel cannot undo grade-2 errors.
  const RecoveryChannel ch = synthesize_recovery(c, f.at(2));
  EXPECT_FALSE(verify_recovery(ch, f.at(2), 20, 1).pass);
}

TEST(codes, decode_matches_ball_decoding_on_paths) {
  for (int n = 1; n <= 12; ++n) {
    const FiniteMetric m = path_metric(n);
    // Every codeword set given by a bitmask, for small n; strided sets above.
    const int masks = n <= 8 ? (1 << n) : 64;
    for (int mask = 1; mask < masks; ++mask) {
      std::vector<int> words;
      for (int p = 0; p < n; ++p) {
        if (n <= 8 ? (mask >> p) & 1 : (p * 7 + mask) % 5 == 0) words.push_back(p);
      }
      if (words.empty()) continue;
      double t = 1e300;
      for (int a : words) {
        for (int b : words) {
          if (a != b) t = std::min(t, m.dist(a, b));
        }
      }
      for (int x = 0; x < n; ++x) {
        const int got = decode(m, words, x);
        int nearest = words.front();
        for (int w : words) {
          if (m.dist(x, w) < m.dist(x, nearest)) nearest = w;
        }
        EXPECT_EQ(m.dist(x, got), m.dist(x, nearest));
        for (int w : words) {
          if (m.dist(x, w) < t / 2) EXPECT_EQ(got, w);
        }
        if (m.dist(x, got) == m.dist(x, nearest)) {
          for (int w : words) {
            if (m.dist(x, w) == m.dist(x, got)) EXPECT_LE(got, w);
          }
        }
      }
    }
  }
}

TEST(codes, decode_errors) {
  const FiniteMetric m = path_metric(4);
  EXPECT_THROW(decode(m, std::vector<int>{}, 0), DomainError);
  EXPECT_THROW(decode(m, std::vector<int>{0}, 4), DomainError);
  EXPECT_THROW(decode(m, std::vector<int>{9}, 0), DomainError);
  EXPECT_EQ(decode(m, std::vector<int>{0, 2}, 1), 0);
}
