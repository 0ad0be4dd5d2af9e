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

#ifndef WSTAR_CODES_HPP
#define WSTAR_CODES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wstar/filtration.hpp"
#include "wstar/matcore.hpp"
#include "wstar/tverberg.hpp"

namespace wstar {

/// The requested code does not fit in the representation.
class CapacityError : public DomainError {
 public:
  CapacityError(const std::string& what, int minimal_dim)
      : DomainError(what), minimal_dim_(minimal_dim) {}
  /// Smallest 2j+1 that would admit the code.
  int minimal_dim() const { return minimal_dim_; }

 private:
  int minimal_dim_;
};

/// The code does not satisfy the correction condition for an error set.
class NotCorrectableError : public std::runtime_error {
 public:
  NotCorrectableError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Code in V_j detecting every operator of E_s. Column c of `vectors` is the
/// code vector |c_c>, supported on weight-basis indices disjoint from the
/// other columns.
struct Code {
  int two_j = 0;
  int detect_grade = 0;
  int k = 1;
  ComplexMatrix vectors;
  ComplexMatrix projection;
  std::vector<int> weight_support;
  TverbergPartition partition;
};

/// (s+1)(k-1)+1 indices 0, s+1, 2(s+1), ... Throws CapacityError when
/// 2j+1 <= (s+1)^2 (k-1).
std::vector<int> select_weights(int two_j, int s, int k);

Code build_code(int two_j, int s, int k);

struct DetectionReport {
  double grade = 0.0;
  double max_residual = 0.0;
  Index checked = 0;
  bool pass = false;
};

/// Detection of E_grade by the projection P of rank k. For a scalar zero
/// term the residual of X is ||PXP - Tr(PX)/k P|| / max(1, ||X||); for a
/// classical filtration it is the distance of PXP from span(E_0 P).
DetectionReport verify_detection(const ComplexMatrix& projection, Index k,
                                 const Filtration& filt, double grade,
                                 double tol = kDefaultTol);
DetectionReport verify_detection(const Code& code, const Filtration& filt,
                                 double grade, double tol = kDefaultTol);

/// Recovery R(rho) = sum_a K_a rho K_a* + Tr(Q' rho) |c_0><c_0| where
/// K_a = V V* E_a* and Q' projects onto the complement of the sum of the
/// E_a(C).
struct RecoveryChannel {
  Code code;
  /// Isometries A_a = E_a V, ambient x k.
  std::vector<ComplexMatrix> isometries;
  ComplexMatrix completion_projector;

  Index ambient_dim() const { return code.projection.rows(); }
  std::vector<ComplexMatrix> kraus_operators() const;
  ComplexMatrix apply(const ComplexMatrix& rho) const;
  /// ||sum_a K_a* K_a - I||.
  double completeness_residual() const;
};

/// Cutoff for dropping Gram eigenvalues of the error form, relative to the
/// largest.
inline constexpr double kGramCutoff = 1e-10;

/// Builds the channel after checking that P F* G P is proportional to P for
/// all F, G in span(errors). Throws NotCorrectableError otherwise.
RecoveryChannel build_recovery(const Code& code, const SubspaceBasis& errors,
                               double tol = kDefaultTol);

/// Same construction without the correctability check.
RecoveryChannel synthesize_recovery(const Code& code, const SubspaceBasis& errors);

struct RecoveryReport {
  Index trials = 0;
  double max_residual = 0.0;
  double completeness_residual = 0.0;
  bool pass = false;
};

inline constexpr double kRecoveryTol = 1e-8;
inline constexpr double kCompletenessTol = 1e-10;

/// Draws random code states rho and random E, F in span(errors) (unit HS
/// norm) and measures ||R(E rho F*) - tau rho|| with tau = Tr R(E rho F*).
RecoveryReport verify_recovery(const RecoveryChannel& ch,
                               const SubspaceBasis& errors, Index trials,
                               std::uint64_t seed, double tol = kRecoveryTol);

/// Nearest codeword, ties to the lowest point index. When `received` lies in
/// the open ball of radius t/2 around a codeword (t the minimum codeword
/// distance) that codeword is the answer.
int decode(const FiniteMetric& m, std::span<const int> codewords, int received);

}  // namespace wstar

#endif  // WSTAR_CODES_HPP
