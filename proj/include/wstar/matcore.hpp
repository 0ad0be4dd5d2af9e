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

#ifndef WSTAR_MATCORE_HPP
#define WSTAR_MATCORE_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wstar {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;
using Index = Eigen::Index;

/// Relative rank / membership tolerance used when callers do not pass one.
inline constexpr double kDefaultTol = 1e-9;

/// Operand dimensions disagree.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
void require_square_pair(Index ar, Index ac, Index br, Index bc);
}  // namespace detail

/// Hilbert-Schmidt form Tr(a* b). Conjugate-linear in `a`, linear in `b`.
template <typename DA, typename DB>
typename DA::Scalar hs_inner(const Eigen::MatrixBase<DA>& a,
                             const Eigen::MatrixBase<DB>& b) {
  detail::require_square_pair(a.rows(), a.cols(), b.rows(), b.cols());
  return (a.conjugate().cwiseProduct(b)).sum();
}

template <typename Derived>
double hs_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

/// [a, b] = ab - ba.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> commutator(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  return a * b - b * a;
}

/// Orthonormal basis (under the HS form) of a subspace of operators on a
/// space of dimension `ambient_dim()`. Elements are stored both as matrices
/// and as the columns of a vectorized (column-major) matrix, which is what
/// projections use.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(Index ambient_dim, double tol);

  Index ambient_dim() const { return ambient_dim_; }
  double tol() const { return tol_; }
  Index size() const { return static_cast<Index>(elements_.size()); }
  bool empty() const { return elements_.empty(); }

  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  const ComplexMatrix& operator[](Index i) const { return elements_[i]; }

  /// ambient_dim^2 x size(); column i is vec(element i).
  const ComplexMatrix& columns() const { return columns_; }

  /// Appends an element assumed already orthonormal to the current ones.
  void push_back_orthonormal(const ComplexMatrix& m);

  /// Max-abs deviation of the HS Gram matrix from the identity.
  double gram_deviation() const;

 private:
  Index ambient_dim_ = 0;
  double tol_ = kDefaultTol;
  std::vector<ComplexMatrix> elements_;
  ComplexMatrix columns_;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass. Inputs whose
/// residual falls below tol * (largest input norm) are dropped.
SubspaceBasis orthonormalize(std::span<const ComplexMatrix> mats,
                             double tol = kDefaultTol);
SubspaceBasis orthonormalize(Index ambient_dim,
                             std::span<const ComplexMatrix> mats,
                             double tol = kDefaultTol);

/// ||m - proj(m)|| / ||m||, 0 for the zero matrix.
double membership_residual(const SubspaceBasis& basis, const ComplexMatrix& m);

/// Residuals for every column of `vecs` (each a vectorized operator) at once.
Eigen::VectorXd membership_residuals(const SubspaceBasis& basis,
                                     const ComplexMatrix& vecs);

/// Orthogonal projection of m onto span(basis).
ComplexMatrix project(const SubspaceBasis& basis, const ComplexMatrix& m);

/// Orthonormal basis of span{ X Y : X in a, Y in b }.
SubspaceBasis product_span(const SubspaceBasis& a, const SubspaceBasis& b,
                           double tol = kDefaultTol);

/// The adjoints of the elements of `a`, in order; still orthonormal.
SubspaceBasis adjoint_basis(const SubspaceBasis& a);

/// Sines of the principal angles between span(a) and span(b); both must
/// have the same size. Largest first.
Eigen::VectorXd principal_angle_sines(const SubspaceBasis& a,
                                      const SubspaceBasis& b);

inline ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

inline ComplexMatrix unvec(const Eigen::Ref<const ComplexVector>& v,
                           Index n) {
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

}  // namespace wstar

#endif  // WSTAR_MATCORE_HPP
