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

#include "wstar/filtration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>

namespace wstar {

std::string_view to_string(FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::su2:
      return "su2";
    case FiltrationKind::hamming:
      return "hamming";
    case FiltrationKind::classical:
      return "classical";
  }
  return "unknown";
}

const SubspaceBasis& Filtration::at(double t) const {
  if (grades.empty() || t < grades.front().label) {
    throw DomainError("Filtration::at: no grade at or below " +
                      std::to_string(t));
  }
  if (!complete && t > grades.back().label) {
    throw DomainError("Filtration::at: grade " + std::to_string(t) +
                      " lies above the last constructed grade");
  }
  auto it = std::upper_bound(
      grades.begin(), grades.end(), t,
      [](double v, const Grade& g) { return v < g.label; });
  return std::prev(it)->basis;
}

void validate_metric(const FiniteMetric& m) {
  const Index n = m.dist.rows();
  if (m.dist.cols() != n) throw DomainError("metric: distance matrix not square");
  if (n == 0) throw DomainError("metric: empty point set");
  if (!m.labels.empty() && static_cast<Index>(m.labels.size()) != n) {
    throw DomainError("metric: label count does not match distance matrix");
  }
  for (Index p = 0; p < n; ++p) {
    if (m.dist(p, p) != 0.0) throw DomainError("metric: nonzero diagonal");
    for (Index q = 0; q < n; ++q) {
      const double d = m.dist(p, q);
      if (!std::isfinite(d) || d < 0.0) {
        throw DomainError("metric: distances must be finite and nonnegative");
      }
      if (d != m.dist(q, p)) throw DomainError("metric: not symmetric");
      if (p != q && d == 0.0) {
        throw DomainError("metric: distinct points at distance zero");
      }
    }
  }
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      for (Index r = 0; r < n; ++r) {
        // Relative slack so irrational distances are not rejected by rounding.
        const double via = m.dist(p, r) + m.dist(r, q);
        if (m.dist(p, q) > via * (1.0 + 1e-12)) {
          throw DomainError("metric: triangle inequality fails");
        }
      }
    }
  }
}

FiniteMetric path_metric(int n) {
  if (n < 1) throw DomainError("path_metric: need at least one point");
  FiniteMetric m;
  m.dist.resize(n, n);
  for (int p = 0; p < n; ++p) {
    m.labels.push_back(std::to_string(p));
    for (int q = 0; q < n; ++q) m.dist(p, q) = std::abs(p - q);
  }
  return m;
}

Filtration su2_filtration(const Irrep& r, int max_grade) {
  Filtration f;
  f.kind = FiltrationKind::su2;
  f.ambient_dim = r.dim;
  const Index full = r.dim * r.dim;
  const ComplexMatrix id = ComplexMatrix::Identity(r.dim, r.dim);

  const std::array<ComplexMatrix, 1> zero_gens{id};
  f.grades.push_back({0.0, orthonormalize(r.dim, zero_gens)});
  if (f.grades.back().basis.size() == full) return f;
  if (max_grade == 0) {
    f.complete = false;
    return f;
  }

  const std::array<ComplexMatrix, 4> gens{id, r.h, r.e, r.f};
  const SubspaceBasis first = orthonormalize(r.dim, gens);
  f.grades.push_back({1.0, first});
  int t = 1;
  while (f.grades.back().basis.size() < full) {
    if (max_grade >= 0 && t >= max_grade) {
      f.complete = false;
      break;
    }
    ++t;
    f.grades.push_back(
        {static_cast<double>(t), product_span(f.grades.back().basis, first)});
  }
  return f;
}

Filtration hamming_filtration(int n) {
  if (n < 1 || n > 3) {
    throw DomainError("hamming_filtration: supported qubit counts are 1..3, got " +
                      std::to_string(n));
  }
  const Complex i1(0.0, 1.0);
  std::array<ComplexMatrix, 4> pauli;
  pauli[0] = ComplexMatrix::Identity(2, 2);
  pauli[1] = ComplexMatrix::Zero(2, 2);
  pauli[1] << 0.0, 1.0, 1.0, 0.0;
  pauli[2] = ComplexMatrix::Zero(2, 2);
  pauli[2] << 0.0, -i1, i1, 0.0;
  pauli[3] = ComplexMatrix::Zero(2, 2);
  pauli[3] << 1.0, 0.0, 0.0, -1.0;

  const Index dim = Index{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  int words = 1;
  for (int q = 0; q < n; ++q) words *= 4;

  // Words bucketed by weight (number of non-identity factors).
  std::vector<std::vector<ComplexMatrix>> by_weight(static_cast<std::size_t>(n + 1));
  for (int w = 0; w < words; ++w) {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    int weight = 0;
    int code = w;
    for (int q = 0; q < n; ++q) {
      const int letter = code % 4;
      code /= 4;
      if (letter != 0) ++weight;
      ComplexMatrix next(m.rows() * 2, m.cols() * 2);
      for (Index a = 0; a < m.rows(); ++a) {
        for (Index b = 0; b < m.cols(); ++b) {
          next.block(2 * a, 2 * b, 2, 2) = m(a, b) * pauli[letter];
        }
      }
      m = std::move(next);
    }
    by_weight[weight].push_back(m * scale);
  }

  Filtration f;
  f.kind = FiltrationKind::hamming;
  f.ambient_dim = dim;
  SubspaceBasis acc(dim, kDefaultTol);
  for (int t = 0; t <= n; ++t) {
    for (const auto& m : by_weight[t]) acc.push_back_orthonormal(m);
    f.grades.push_back({static_cast<double>(t), acc});
  }
  return f;
}

Filtration classical_filtration(const FiniteMetric& m) {
  validate_metric(m);
  const Index n = m.size();
  std::set<double> labels{0.0};
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) labels.insert(m.dist(p, q));
  }

  Filtration f;
  f.kind = FiltrationKind::classical;
  f.ambient_dim = n;
  SubspaceBasis acc(n, kDefaultTol);
  double prev = -1.0;
  for (double t : labels) {
    for (Index p = 0; p < n; ++p) {
      for (Index q = 0; q < n; ++q) {
        const double d = m.dist(p, q);
        if (d <= t && d > prev) {
          ComplexMatrix unit = ComplexMatrix::Zero(n, n);
          unit(p, q) = 1.0;
          acc.push_back_orthonormal(unit);
        }
      }
    }
    f.grades.push_back({t, acc});
    prev = t;
  }
  return f;
}

std::vector<Grade> pure_terms(const Filtration& f) {
  std::vector<Grade> out;
  out.reserve(f.grades.size());
  for (std::size_t g = 0; g < f.grades.size(); ++g) {
    const SubspaceBasis& cur = f.grades[g].basis;
    if (g == 0) {
      out.push_back(f.grades[0]);
      continue;
    }
    const SubspaceBasis& below = f.grades[g - 1].basis;
    std::vector<ComplexMatrix> rest;
    rest.reserve(cur.elements().size());
    for (const auto& x : cur.elements()) rest.push_back(x - project(below, x));
    out.push_back({f.grades[g].label,
                   orthonormalize(f.ambient_dim, rest, cur.tol())});
  }
  return out;
}

FiniteMetric metric_from_filtration(const Filtration& f, double tol) {
  if (f.kind != FiltrationKind::classical) {
    throw DomainError("metric_from_filtration: filtration is not classical");
  }
  const Index n = f.ambient_dim;
  const SubspaceBasis& zero = f.grades.front().basis;
  if (f.grades.front().label != 0.0 || zero.size() != n) {
    throw DomainError("metric_from_filtration: E_0 is not the diagonal algebra");
  }
  for (const auto& x : zero.elements()) {
    const ComplexMatrix off = x - ComplexMatrix(x.diagonal().asDiagonal());
    if (off.cwiseAbs().maxCoeff() > tol) {
      throw DomainError("metric_from_filtration: E_0 is not diagonal");
    }
  }

  FiniteMetric m;
  m.dist = Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::infinity());
  for (Index p = 0; p < n; ++p) m.labels.push_back(std::to_string(p));
  for (const auto& grade : f.grades) {
    Eigen::MatrixXd reach = Eigen::MatrixXd::Zero(n, n);
    for (const auto& x : grade.basis.elements()) {
      reach = reach.cwiseMax(x.cwiseAbs());
    }
    for (Index p = 0; p < n; ++p) {
      for (Index q = 0; q < n; ++q) {
        if (std::isinf(m.dist(p, q)) && reach(p, q) > tol) {
          m.dist(p, q) = grade.label;
        }
      }
    }
  }
  for (Index p = 0; p < n; ++p) m.dist(p, p) = 0.0;
  return m;
}

namespace {

// Relative distance from a subspace, through whichever of the subspace or its
// orthogonal complement is smaller.
class Membership {
 public:
  explicit Membership(const SubspaceBasis& b) : basis_(b) {
    const Index len = b.ambient_dim() * b.ambient_dim();
    use_complement_ = 2 * b.size() > len;
    if (use_complement_) {
      Eigen::HouseholderQR<ComplexMatrix> qr(b.columns());
      const ComplexMatrix q = qr.householderQ();
      complement_ = q.rightCols(len - b.size());
    }
  }

  Eigen::VectorXd residuals(const ComplexMatrix& vecs) const {
    if (!use_complement_) return membership_residuals(basis_, vecs);
    const Eigen::VectorXd norms = vecs.colwise().norm().transpose();
    Eigen::VectorXd res = Eigen::VectorXd::Zero(vecs.cols());
    if (complement_.cols() == 0) return res;
    const Eigen::VectorXd out =
        (complement_.adjoint() * vecs).colwise().norm().transpose();
    for (Index i = 0; i < vecs.cols(); ++i) {
      res(i) = norms(i) > 0 ? out(i) / norms(i) : 0.0;
    }
    return res;
  }

 private:
  const SubspaceBasis& basis_;
  bool use_complement_ = false;
  ComplexMatrix complement_;
};

}  // namespace

AxiomReport verify_axioms(const Filtration& f, double tol) {
  AxiomReport rep;
  if (f.grades.empty()) return rep;
  const Index n = f.ambient_dim;
  const Index len = n * n;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  std::vector<Membership> member;
  member.reserve(f.grades.size());
  for (const auto& g : f.grades) member.emplace_back(g.basis);

  auto note = [&](double r, bool& flag) {
    rep.max_residual = std::max(rep.max_residual, r);
    if (!(r < tol)) flag = false;
  };

  for (std::size_t g = 0; g < f.grades.size(); ++g) {
    const SubspaceBasis& b = f.grades[g].basis;
    if (g > 0 && f.grades[g].label <= f.grades[g - 1].label) rep.nesting_ok = false;

    note(member[g].residuals(vec(id))(0), rep.identity_ok);

    ComplexMatrix adj(len, b.size());
    for (Index i = 0; i < b.size(); ++i) adj.col(i) = vec(b[i].adjoint());
    if (b.size() > 0) note(member[g].residuals(adj).maxCoeff(), rep.adjoint_ok);

    if (g + 1 < f.grades.size() && b.size() > 0) {
      note(member[g + 1].residuals(b.columns()).maxCoeff(), rep.nesting_ok);
    }
  }

  // E_s E_t inside E_{s+t}; labels past the top use the top grade, and are
  // skipped for an incomplete filtration.
  for (std::size_t s = 0; s < f.grades.size(); ++s) {
    for (std::size_t t = 0; t < f.grades.size(); ++t) {
      const SubspaceBasis& a = f.grades[s].basis;
      const SubspaceBasis& b = f.grades[t].basis;
      if (a.empty() || b.empty()) continue;
      const double target = f.grades[s].label + f.grades[t].label;
      if (!f.complete && target > f.grades.back().label) continue;
      auto it = std::upper_bound(
          f.grades.begin(), f.grades.end(), target,
          [](double v, const Grade& g) { return v < g.label; });
      const std::size_t k = static_cast<std::size_t>(std::prev(it) - f.grades.begin());

      ComplexMatrix prods(len, a.size() * b.size());
      Index col = 0;
      for (const auto& x : a.elements()) {
        for (const auto& y : b.elements()) {
          const ComplexMatrix xy = x * y;
          prods.col(col++) = vec(xy);
        }
      }
      note(member[k].residuals(prods).maxCoeff(), rep.product_ok);
    }
  }
  return rep;
}

}  // namespace wstar
