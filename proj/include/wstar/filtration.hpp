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

#ifndef WSTAR_FILTRATION_HPP
#define WSTAR_FILTRATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wstar/matcore.hpp"
#include "wstar/su2rep.hpp"

namespace wstar {

enum class FiltrationKind { su2, hamming, classical };

std::string_view to_string(FiltrationKind kind);

struct Grade {
  double label = 0.0;
  SubspaceBasis basis;
};

/// Increasing family of operator subspaces E_t, stored cumulatively. Between
/// labels the filtration is constant: E_t is the grade with the largest label
/// not exceeding t, and the last grade holds for every larger t.
struct Filtration {
  Index ambient_dim = 0;
  std::vector<Grade> grades;
  FiltrationKind kind = FiltrationKind::su2;
  /// False when construction stopped before the top grade; E_t is then
  /// unknown above the last label.
  bool complete = true;

  /// E_t. Throws DomainError for t below the first label, or above the last
  /// label of an incomplete filtration.
  const SubspaceBasis& at(double t) const;
  const Grade& top() const { return grades.back(); }
};

/// Finite metric space on labelled points.
struct FiniteMetric {
  std::vector<std::string> labels;
  Eigen::MatrixXd dist;

  Index size() const { return dist.rows(); }
};

/// Throws DomainError unless `m` is a metric (zero diagonal, symmetric,
/// positive off the diagonal, triangle inequality).
void validate_metric(const FiniteMetric& m);

/// Path graph 0 - 1 - ... - (n-1) with unit edges.
FiniteMetric path_metric(int n);

/// E_0 = C I, E_1 = span{I, h, e, f}, E_t = E_{t-1} E_1, up to the first
/// grade that fills B(V), or up to max_grade when that is nonnegative.
Filtration su2_filtration(const Irrep& r, int max_grade = -1);

/// Grade t spanned by n-qubit Pauli words of weight <= t, scaled by 2^{-n/2}.
Filtration hamming_filtration(int n);

/// Grade t spanned by matrix units |x><y| with d(x, y) <= t.
Filtration classical_filtration(const FiniteMetric& m);

/// For each grade the orthogonal complement of the previous grade in it.
std::vector<Grade> pure_terms(const Filtration& f);

/// Recovers d(p, q) as the first label whose grade has an element with a
/// nonzero (p, q) entry. Pairs never connected get +infinity.
FiniteMetric metric_from_filtration(const Filtration& f, double tol = kDefaultTol);

struct AxiomReport {
  bool identity_ok = true;
  bool adjoint_ok = true;
  bool nesting_ok = true;
  bool product_ok = true;
  // Continuity from above holds trivially for finitely many grades.
  bool intersection_skipped = true;
  double max_residual = 0.0;

  bool ok() const { return identity_ok && adjoint_ok && nesting_ok && product_ok; }
};

AxiomReport verify_axioms(const Filtration& f, double tol = kDefaultTol);

}  // namespace wstar

#endif  // WSTAR_FILTRATION_HPP
