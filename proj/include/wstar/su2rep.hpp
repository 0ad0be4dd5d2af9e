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

#ifndef WSTAR_SU2REP_HPP
#define WSTAR_SU2REP_HPP

#include <vector>

#include "wstar/matcore.hpp"

namespace wstar {

// Half-integers (spins, weights) are carried as doubled integers: two_j = 2j.
// h acts with eigenvalues j, j-1, ..., -j (so [h,e] = e), i.e. the physics
// m label. Index i of the weight basis holds m = j - i.

/// C_+(a, m) = sqrt(a(a+1) - m(m+1)), from doubled arguments.
double ladder_up(int two_a, int two_m);
/// C_-(a, m) = sqrt(a(a+1) - m(m-1)), from doubled arguments.
double ladder_down(int two_a, int two_m);

/// Spin-j irreducible representation in the Condon-Shortley weight basis.
struct Irrep {
  int two_j = 0;
  Index dim = 1;
  ComplexMatrix h, e, f;

  double spin() const { return two_j / 2.0; }
  /// Weight m of basis index i.
  double weight(Index i) const { return spin() - static_cast<double>(i); }
};

Irrep build_irrep(int two_j);

/// h^2 + (ef + fe)/2, which equals j(j+1) I.
ComplexMatrix casimir(const Irrep& r);

/// Orthonormal weight basis M_d, M_{d-1}, ..., M_{-d} of the spin-d component
/// of B(V_j) under the adjoint action. ops[i] has ad[h]-weight d - i.
struct TensorOpBasis {
  int two_j = 0;
  int d = 0;
  std::vector<ComplexMatrix> ops;

  int weight(std::size_t i) const { return d - static_cast<int>(i); }
  SubspaceBasis span(double tol = kDefaultTol) const;
};

TensorOpBasis tensor_op_basis(const Irrep& r, int d);

struct WeightSpace {
  int weight = 0;
  SubspaceBasis basis;
};

/// Grading of B(V_j) into ad[h] eigenspaces, weights -2j..2j ascending.
std::vector<WeightSpace> ad_weight_decompose(const Irrep& r);

}  // namespace wstar

#endif  // WSTAR_SU2REP_HPP
