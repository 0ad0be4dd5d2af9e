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

#include <algorithm>
#include <cmath>
#include <limits>

#include "wstar/random.hpp"

namespace wstar {

std::vector<int> select_weights(int two_j, int s, int k) {
  if (two_j < 0) throw DomainError("select_weights: two_j must be nonnegative");
  if (s < 0) throw DomainError("select_weights: detection grade must be >= 0");
  if (k < 1) throw DomainError("select_weights: code dimension must be >= 1");
  const long spacing = s + 1;
  const long count = spacing * (k - 1) + 1;
  const long needed = spacing * spacing * (k - 1) + 1;
  if (two_j + 1 < needed) {
    throw CapacityError("select_weights: a dimension-" + std::to_string(k) +
                            " code detecting grade " + std::to_string(s) +
                            " needs 2j+1 >= " + std::to_string(needed) +
                            ", got " + std::to_string(two_j + 1),
                        static_cast<int>(needed));
  }
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) idx.push_back(static_cast<int>(i * spacing));
  return idx;
}

Code build_code(int two_j, int s, int k) {
  Code code;
  code.two_j = two_j;
  code.detect_grade = s;
  code.k = k;
  code.weight_support = select_weights(two_j, s, k);

  if (s == 0) {
    // Only E_0 = C I must be detected: every weight vector is its own part.
    TverbergPartition& p = code.partition;
    p.dim = 0;
    p.parts = k;
    for (int i = 0; i < k; ++i) {
      p.points.emplace_back(i);
      p.color.push_back(i);
      p.coeff.emplace_back(1);
    }
  } else {
    // Weight indices are an affine image of 0..N-1, so the index-space
    // partition carries over with the same coefficients.
    code.partition = construct(s, k);
  }

  const Index n = two_j + 1;
  code.vectors = ComplexMatrix::Zero(n, k);
  const TverbergPartition& p = code.partition;
  for (std::size_t i = 0; i < p.size(); ++i) {
    code.vectors(code.weight_support[i], p.color[i]) = std::sqrt(p.coeff[i].get_d());
  }
  code.projection = code.vectors * code.vectors.adjoint();
  return code;
}

namespace {

double scalar_detection_residual(const ComplexMatrix& p, Index k,
                                 const ComplexMatrix& x) {
  const ComplexMatrix pxp = p * x * p;
  const Complex lambda = (p * x).trace() / static_cast<double>(k);
  return (pxp - lambda * p).norm() / std::max(1.0, x.norm());
}

void require_dims(const ComplexMatrix& p, Index n, const char* who) {
  if (p.rows() != n || p.cols() != n) {
    throw ShapeError(std::string(who) + ": code lives in dimension " +
                     std::to_string(p.rows()) + ", filtration in " +
                     std::to_string(n));
  }
}

}  // namespace

DetectionReport verify_detection(const ComplexMatrix& projection, Index k,
                                 const Filtration& filt, double grade,
                                 double tol) {
  require_dims(projection, filt.ambient_dim, "verify_detection");
  const SubspaceBasis& errs = filt.at(grade);
  DetectionReport rep;
  rep.grade = grade;
  rep.checked = errs.size();

  if (filt.kind == FiltrationKind::classical) {
    std::vector<ComplexMatrix> zp;
    for (const auto& a : filt.grades.front().basis.elements()) {
      zp.push_back(a * projection);
    }
    const SubspaceBasis target = orthonormalize(filt.ambient_dim, zp);
    for (const auto& x : errs.elements()) {
      rep.max_residual = std::max(
          rep.max_residual, membership_residual(target, projection * x * projection));
    }
  } else {
    for (const auto& x : errs.elements()) {
      rep.max_residual =
          std::max(rep.max_residual, scalar_detection_residual(projection, k, x));
    }
  }
  rep.pass = rep.max_residual < tol;
  return rep;
}

DetectionReport verify_detection(const Code& code, const Filtration& filt,
                                 double grade, double tol) {
  return verify_detection(code.projection, code.k, filt, grade, tol);
}

std::vector<ComplexMatrix> RecoveryChannel::kraus_operators() const {
  const ComplexMatrix& v = code.vectors;
  std::vector<ComplexMatrix> ops;
  for (const auto& a : isometries) ops.push_back(v * a.adjoint());
  // Completion: every complement direction goes to |c_0>.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(completion_projector);
  for (Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) > 0.5) {
      ops.push_back(v.col(0) * eig.eigenvectors().col(i).adjoint());
    }
  }
  return ops;
}

ComplexMatrix RecoveryChannel::apply(const ComplexMatrix& rho) const {
  const ComplexMatrix& v = code.vectors;
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& a : isometries) {
    const ComplexMatrix k = v * a.adjoint();
    out += k * rho * k.adjoint();
  }
  const Complex lost = (completion_projector * rho).trace();
  out += lost * (v.col(0) * v.col(0).adjoint());
  return out;
}

double RecoveryChannel::completeness_residual() const {
  const Index n = ambient_dim();
  ComplexMatrix sum = completion_projector;
  for (const auto& a : isometries) sum += a * a.adjoint();
  return (sum - ComplexMatrix::Identity(n, n)).norm();
}

RecoveryChannel synthesize_recovery(const Code& code, const SubspaceBasis& errors) {
  const Index n = code.projection.rows();
  if (errors.ambient_dim() != n) {
    throw ShapeError("build_recovery: error operators have the wrong dimension");
  }
  const ComplexMatrix& v = code.vectors;
  const Index m = errors.size();

  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<std::size_t>(m));
  for (const auto& f : errors.elements()) images.push_back(f * v);

  // Gram matrix of the form (F, G) = Tr(P F* G P) / k.
  ComplexMatrix gram(m, m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      gram(a, b) = (images[a].adjoint() * images[b]).trace() / static_cast<double>(code.k);
    }
  }

  RecoveryChannel ch;
  ch.code = code;
  if (m > 0) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
    const double top = eig.eigenvalues().maxCoeff();
    for (Index i = m - 1; i >= 0; --i) {
      const double lambda = eig.eigenvalues()(i);
      if (top <= 0.0 || lambda <= kGramCutoff * top) continue;
      ComplexMatrix a = ComplexMatrix::Zero(n, code.k);
      for (Index b = 0; b < m; ++b) a += eig.eigenvectors()(b, i) * images[b];
      ch.isometries.push_back(a / std::sqrt(lambda));
    }
  }

  ComplexMatrix range = ComplexMatrix::Zero(n, n);
  for (const auto& a : ch.isometries) range += a * a.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(range);
  ch.completion_projector = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (eig.eigenvalues()(i) < 0.5) {
      const ComplexVector u = eig.eigenvectors().col(i);
      ch.completion_projector += u * u.adjoint();
    }
  }
  return ch;
}

RecoveryChannel build_recovery(const Code& code, const SubspaceBasis& errors,
                               double tol) {
  const SubspaceBasis pairs = product_span(adjoint_basis(errors), errors);
  double worst = 0.0;
  for (const auto& x : pairs.elements()) {
    worst = std::max(worst, scalar_detection_residual(code.projection, code.k, x));
  }
  if (!(worst < tol)) {
    throw NotCorrectableError(
        "build_recovery: code does not detect products of the errors (residual " +
            std::to_string(worst) + ")",
        worst);
  }
  return synthesize_recovery(code, errors);
}

RecoveryReport verify_recovery(const RecoveryChannel& ch,
                               const SubspaceBasis& errors, Index trials,
                               std::uint64_t seed, double tol) {
  RecoveryReport rep;
  rep.trials = trials;
  rep.completeness_residual = ch.completeness_residual();
  const ComplexMatrix& v = ch.code.vectors;
  const Index k = v.cols();
  const Index m = errors.size();

  auto random_error = [&](CounterStream& rng) {
    ComplexMatrix e = ComplexMatrix::Zero(ch.ambient_dim(), ch.ambient_dim());
    for (Index b = 0; b < m; ++b) e += rng.complex_normal() * errors[b];
    const double norm = e.norm();
    return norm > 0 ? ComplexMatrix(e / norm) : e;
  };

  for (Index t = 0; t < trials; ++t) {
    CounterStream rng(seed, static_cast<std::uint64_t>(t));
    ComplexMatrix g(k, k);
    for (Index j = 0; j < k; ++j) {
      for (Index i = 0; i < k; ++i) g(i, j) = rng.complex_normal();
    }
    ComplexMatrix rho_code = g * g.adjoint();
    rho_code /= rho_code.trace();
    const ComplexMatrix rho = v * rho_code * v.adjoint();
    const ComplexMatrix e = random_error(rng);
    const ComplexMatrix f = random_error(rng);

    const ComplexMatrix out = ch.apply(e * rho * f.adjoint());
    const Complex tau = out.trace() / rho.trace();
    rep.max_residual = std::max(rep.max_residual, (out - tau * rho).norm());
  }
  rep.pass = rep.max_residual < tol && rep.completeness_residual < kCompletenessTol;
  return rep;
}

int decode(const FiniteMetric& m, std::span<const int> codewords, int received) {
  if (codewords.empty()) throw DomainError("decode: empty codeword set");
  const Index n = m.size();
  auto in_range = [n](int p) { return p >= 0 && p < n; };
  if (!in_range(received)) throw DomainError("decode: received point out of range");
  for (int c : codewords) {
    if (!in_range(c)) throw DomainError("decode: codeword out of range");
  }

  double t = std::numeric_limits<double>::infinity();
  for (int a : codewords) {
    for (int b : codewords) {
      if (a != b) t = std::min(t, m.dist(a, b));
    }
  }
  for (int c : codewords) {
    if (m.dist(received, c) < t / 2) return c;
  }
  int best = codewords.front();
  for (int c : codewords) {
    const double dc = m.dist(received, c);
    const double db = m.dist(received, best);
    if (dc < db || (dc == db && c < best)) best = c;
  }
  return best;
}

}  // namespace wstar
