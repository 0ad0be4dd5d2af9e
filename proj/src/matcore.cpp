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

#include "wstar/matcore.hpp"

#include <algorithm>
#include <cmath>

namespace wstar {

namespace detail {

void require_square_pair(Index ar, Index ac, Index br, Index bc) {
  if (ar != ac || br != bc || ar != br) {
    throw ShapeError("hs_inner: operands must be square of equal size, got " +
                     std::to_string(ar) + "x" + std::to_string(ac) + " and " +
                     std::to_string(br) + "x" + std::to_string(bc));
  }
}

}  // namespace detail

SubspaceBasis::SubspaceBasis(Index ambient_dim, double tol)
    : ambient_dim_(ambient_dim),
      tol_(tol),
      columns_(ambient_dim * ambient_dim, 0) {}

void SubspaceBasis::push_back_orthonormal(const ComplexMatrix& m) {
  if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_) {
    throw ShapeError("SubspaceBasis: element has wrong dimension");
  }
  elements_.push_back(m);
  columns_.conservativeResize(ambient_dim_ * ambient_dim_, columns_.cols() + 1);
  columns_.col(columns_.cols() - 1) = vec(m);
}

double SubspaceBasis::gram_deviation() const {
  if (empty()) return 0.0;
  const ComplexMatrix gram = columns_.adjoint() * columns_;
  return (gram - ComplexMatrix::Identity(size(), size())).cwiseAbs().maxCoeff();
}

SubspaceBasis orthonormalize(std::span<const ComplexMatrix> mats, double tol) {
  const Index n = mats.empty() ? 0 : mats.front().rows();
  return orthonormalize(n, mats, tol);
}

SubspaceBasis orthonormalize(Index ambient_dim,
                             std::span<const ComplexMatrix> mats, double tol) {
  SubspaceBasis out(ambient_dim, tol);
  double largest = 0.0;
  for (const auto& m : mats) {
    if (m.rows() != ambient_dim || m.cols() != ambient_dim) {
      throw ShapeError("orthonormalize: inputs must be square of dimension " +
                       std::to_string(ambient_dim));
    }
    largest = std::max(largest, m.norm());
  }
  if (largest == 0.0) return out;
  const double cutoff = tol * largest;

  const Index len = ambient_dim * ambient_dim;
  for (const auto& m : mats) {
    if (out.size() == len) break;  // span is already everything
    const auto& q = out.columns();
    ComplexVector v = vec(m);
    for (int pass = 0; pass < 2; ++pass) {
      for (Index j = 0; j < q.cols(); ++j) {
        v -= q.col(j) * q.col(j).dot(v);
      }
    }
    const double r = v.norm();
    if (r < cutoff) continue;
    v /= r;
    out.push_back_orthonormal(unvec(v, ambient_dim));
  }
  return out;
}

Eigen::VectorXd membership_residuals(const SubspaceBasis& basis,
                                     const ComplexMatrix& vecs) {
  const Index n = basis.ambient_dim();
  if (!basis.empty() && vecs.rows() != n * n) {
    throw ShapeError("membership_residual: dimension mismatch");
  }
  Eigen::VectorXd norms = vecs.colwise().norm().transpose();
  Eigen::VectorXd res(vecs.cols());
  if (basis.empty()) {
    for (Index i = 0; i < vecs.cols(); ++i) res(i) = norms(i) > 0 ? 1.0 : 0.0;
    return res;
  }
  const auto& q = basis.columns();
  const ComplexMatrix rest = vecs - q * (q.adjoint() * vecs);
  const Eigen::VectorXd rnorm = rest.colwise().norm().transpose();
  for (Index i = 0; i < vecs.cols(); ++i) {
    res(i) = norms(i) > 0 ? rnorm(i) / norms(i) : 0.0;
  }
  return res;
}

double membership_residual(const SubspaceBasis& basis, const ComplexMatrix& m) {
  if (!basis.empty() &&
      (m.rows() != basis.ambient_dim() || m.cols() != basis.ambient_dim())) {
    throw ShapeError("membership_residual: expected " +
                     std::to_string(basis.ambient_dim()) + "x" +
                     std::to_string(basis.ambient_dim()) + " operator");
  }
  ComplexMatrix v = vec(m);
  return membership_residuals(basis, v)(0);
}

ComplexMatrix project(const SubspaceBasis& basis, const ComplexMatrix& m) {
  if (basis.empty()) return ComplexMatrix::Zero(m.rows(), m.cols());
  if (m.rows() != basis.ambient_dim() || m.cols() != basis.ambient_dim()) {
    throw ShapeError("project: dimension mismatch");
  }
  const auto& q = basis.columns();
  const ComplexVector p = q * (q.adjoint() * vec(m));
  return unvec(p, basis.ambient_dim());
}

SubspaceBasis product_span(const SubspaceBasis& a, const SubspaceBasis& b,
                           double tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ShapeError("product_span: ambient dimensions differ");
  }
  std::vector<ComplexMatrix> products;
  products.reserve(static_cast<std::size_t>(a.size() * b.size()));
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) products.push_back(x * y);
  }
  return orthonormalize(a.ambient_dim(), products, tol);
}

SubspaceBasis adjoint_basis(const SubspaceBasis& a) {
  // <x*, y*> = conj <x, y>, so the adjoints are orthonormal already.
  SubspaceBasis out(a.ambient_dim(), a.tol());
  for (const auto& x : a.elements()) out.push_back_orthonormal(x.adjoint());
  return out;
}

Eigen::VectorXd principal_angle_sines(const SubspaceBasis& a,
                                      const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.size() != b.size()) {
    throw ShapeError("principal_angle_sines: subspaces must match in shape");
  }
  if (a.empty()) return Eigen::VectorXd();
  // sin(theta_i) are the singular values of (I - Q_a Q_a*) Q_b.
  const auto& qa = a.columns();
  const auto& qb = b.columns();
  const ComplexMatrix rest = qb - qa * (qa.adjoint() * qb);
  Eigen::JacobiSVD<ComplexMatrix> svd(rest);
  return svd.singularValues();
}

}  // namespace wstar
