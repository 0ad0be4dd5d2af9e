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

#include "wstar/su2rep.hpp"

#include <cmath>
#include <string>

namespace wstar {

namespace {

// a(a+1) - m(m +/- 1) in doubled arguments is (A(A+2) - M(M +/- 2)) / 4.
double ladder(int two_a, int two_m, int sign) {
  const long num = static_cast<long>(two_a) * (two_a + 2) -
                   static_cast<long>(two_m) * (two_m + 2 * sign);
  return num <= 0 ? 0.0 : std::sqrt(static_cast<double>(num) / 4.0);
}

}  // namespace

double ladder_up(int two_a, int two_m) { return ladder(two_a, two_m, +1); }
double ladder_down(int two_a, int two_m) { return ladder(two_a, two_m, -1); }

Irrep build_irrep(int two_j) {
  if (two_j < 0) {
    throw DomainError("build_irrep: two_j must be nonnegative, got " +
                      std::to_string(two_j));
  }
  Irrep r;
  r.two_j = two_j;
  r.dim = two_j + 1;
  r.h = ComplexMatrix::Zero(r.dim, r.dim);
  r.f = ComplexMatrix::Zero(r.dim, r.dim);
  for (Index i = 0; i < r.dim; ++i) {
    const int two_m = two_j - 2 * static_cast<int>(i);
    r.h(i, i) = two_m / 2.0;
    // f|j m> = C_-(j, m) |j m-1>
    if (i + 1 < r.dim) r.f(i + 1, i) = ladder_down(two_j, two_m);
  }
  r.e = r.f.adjoint();
  return r;
}

ComplexMatrix casimir(const Irrep& r) {
  return r.h * r.h + 0.5 * (r.e * r.f + r.f * r.e);
}

SubspaceBasis TensorOpBasis::span(double tol) const {
  return orthonormalize(two_j + 1, ops, tol);
}

TensorOpBasis tensor_op_basis(const Irrep& r, int d) {
  if (d < 0 || d > r.two_j) {
    throw DomainError("tensor_op_basis: grade " + std::to_string(d) +
                      " outside [0, " + std::to_string(r.two_j) + "]");
  }
  TensorOpBasis out;
  out.two_j = r.two_j;
  out.d = d;
  out.ops.reserve(static_cast<std::size_t>(2 * d + 1));

  // Entries of e^d are real and nonnegative in this basis, which fixes the
  // overall sign of M_d.
  ComplexMatrix top = ComplexMatrix::Identity(r.dim, r.dim);
  for (int i = 0; i < d; ++i) top = top * r.e;
  out.ops.push_back(top / top.norm());

  for (int k = d; k > -d; --k) {
    const ComplexMatrix& m = out.ops.back();
    out.ops.push_back(commutator(r.f, m) / ladder_down(2 * d, 2 * k));
  }
  return out;
}

std::vector<WeightSpace> ad_weight_decompose(const Irrep& r) {
  // The matrix unit |i><k| has ad[h]-weight m_i - m_k = k - i.
  std::vector<WeightSpace> out;
  const Index n = r.dim;
  for (int lambda = -r.two_j; lambda <= r.two_j; ++lambda) {
    WeightSpace ws{lambda, SubspaceBasis(n, kDefaultTol)};
    for (Index i = 0; i < n; ++i) {
      const Index k = i + lambda;
      if (k < 0 || k >= n) continue;
      ComplexMatrix unit = ComplexMatrix::Zero(n, n);
      unit(i, k) = 1.0;
      ws.basis.push_back_orthonormal(unit);
    }
    out.push_back(std::move(ws));
  }
  return out;
}

}  // namespace wstar
