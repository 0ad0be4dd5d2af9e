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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "wstar/su2rep.hpp"

namespace wstar {

bool triangle(int two_a, int two_b, int two_c) {
  if (two_a < 0 || two_b < 0 || two_c < 0) return false;
  if ((two_a + two_b + two_c) % 2 != 0) return false;
  return two_c <= two_a + two_b && two_c >= std::abs(two_a - two_b);
}

double CGTable::at(int two_m, int two_k) const {
  auto it = entries.find({two_m, two_k});
  return it == entries.end() ? 0.0 : it->second;
}

CGTable cg_coefficients(int two_a, int two_b, int two_j) {
  CGTable t;
  t.two_a = two_a;
  t.two_b = two_b;
  t.two_j = two_j;
  if (!triangle(two_a, two_b, two_j)) return t;

  // Highest weight: e annihilates sum_k c_k |a k>|b j-k>, which gives
  // c_{k+1} C_+(b, j-k-1) = -c_k C_+(a, k).
  const int lo = std::max(-two_a, two_j - two_b);
  const int hi = std::min(two_a, two_j + two_b);
  std::map<int, double> top;
  double c = 1.0;
  for (int k = lo; k <= hi; k += 2) {
    top[k] = c;
    if (k + 2 <= hi) c = -c * ladder_up(two_a, k) / ladder_up(two_b, two_j - k - 2);
  }
  double norm = 0.0;
  for (const auto& [k, v] : top) norm += v * v;
  norm = std::sqrt(norm);
  const double phase = top.at(two_a) > 0 ? 1.0 : -1.0;
  for (auto& [k, v] : top) v *= phase / norm;

  std::map<int, double> cur = std::move(top);
  for (int m = two_j; m >= -two_j; m -= 2) {
    for (const auto& [k, v] : cur) t.entries[{m, k}] = v;
    if (m == -two_j) break;
    // f = f_a + f_b, divided by C_-(j, m).
    std::map<int, double> next;
    for (const auto& [k, v] : cur) {
      if (k - 2 >= -two_a) next[k - 2] += v * ladder_down(two_a, k);
      if (m - k - 2 >= -two_b) next[k] += v * ladder_down(two_b, m - k);
    }
    const double scale = ladder_down(two_j, m);
    for (auto& [k, v] : next) v /= scale;
    cur = std::move(next);
  }
  return t;
}

namespace {

mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Delta(abc)^2 with doubled arguments of an admissible triad.
Rational delta_squared(int a, int b, int c) {
  Rational q(factorial((a + b - c) / 2) * factorial((a - b + c) / 2) *
                 factorial((-a + b + c) / 2),
             factorial((a + b + c) / 2 + 1));
  q.canonicalize();
  return q;
}

SixJ compute_sixj(const std::array<int, 6>& key) {
  const auto [a, b, c, d, e, f] = key;
  SixJ out;
  std::copy(key.begin(), key.end(), out.two);
  if (!triangle(a, b, c) || !triangle(a, e, f) || !triangle(d, b, f) ||
      !triangle(d, e, c)) {
    return out;
  }
  const long t1 = (a + b + c) / 2, t2 = (a + e + f) / 2, t3 = (d + b + f) / 2,
             t4 = (d + e + c) / 2;
  const long p1 = (a + b + d + e) / 2, p2 = (b + c + e + f) / 2,
             p3 = (c + a + f + d) / 2;
  const long zmin = std::max({t1, t2, t3, t4});
  const long zmax = std::min({p1, p2, p3});

  Rational sum = 0;
  for (long z = zmin; z <= zmax; ++z) {
    const mpz_class den = factorial(z - t1) * factorial(z - t2) * factorial(z - t3) *
                          factorial(z - t4) * factorial(p1 - z) * factorial(p2 - z) *
                          factorial(p3 - z);
    Rational term(factorial(z + 1), den);
    term.canonicalize();
    if (z % 2 != 0) term = -term;
    sum += term;
  }
  const Rational deltas = delta_squared(a, b, c) * delta_squared(a, e, f) *
                          delta_squared(d, b, f) * delta_squared(d, e, c);
  out.exact_square = deltas * sum * sum;
  out.sign = sgn(sum);
  out.value = out.sign * std::sqrt(out.exact_square.get_d());
  return out;
}

std::shared_mutex sixj_mutex;
std::map<std::array<int, 6>, SixJ>& sixj_cache() {
  static std::map<std::array<int, 6>, SixJ> cache;
  return cache;
}

void require_operands(int two_j, const ComplexMatrix& x, const ComplexMatrix& y,
                      const char* who) {
  if (two_j < 0) throw DomainError(std::string(who) + ": two_j must be >= 0");
  const Index n = two_j + 1;
  if (x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n) {
    throw ShapeError(std::string(who) + ": operands must be " + std::to_string(n) +
                     " x " + std::to_string(n));
  }
}

std::vector<TensorOpBasis> all_tensor_ops(int two_j) {
  const Irrep r = build_irrep(two_j);
  std::vector<TensorOpBasis> out;
  for (int d = 0; d <= two_j; ++d) out.push_back(tensor_op_basis(r, d));
  return out;
}

}  // namespace

SixJ sixj(int two_a, int two_b, int two_c, int two_d, int two_e, int two_f) {
  const std::array<int, 6> key{two_a, two_b, two_c, two_d, two_e, two_f};
  {
    std::shared_lock lock(sixj_mutex);
    auto it = sixj_cache().find(key);
    if (it != sixj_cache().end()) return it->second;
  }
  SixJ v = compute_sixj(key);
  std::unique_lock lock(sixj_mutex);
  sixj_cache().emplace(key, v);
  return v;
}

std::vector<Complex> weight_A(int two_j, const ComplexMatrix& x,
                              const ComplexMatrix& y) {
  require_operands(two_j, x, y, "weight_A");
  std::vector<Complex> out;
  for (const auto& t : all_tensor_ops(two_j)) {
    Complex acc = 0.0;
    for (const auto& m : t.ops) acc += hs_inner(m, x) * (m * y).trace();
    out.push_back(acc / std::sqrt(2.0 * t.d + 1.0));
  }
  return out;
}

std::vector<Complex> weight_B(int two_j, const ComplexMatrix& x,
                              const ComplexMatrix& y) {
  require_operands(two_j, x, y, "weight_B");
  std::vector<Complex> out;
  for (const auto& t : all_tensor_ops(two_j)) {
    Complex acc = 0.0;
    for (const auto& m : t.ops) acc += (m.adjoint() * x * m * y).trace();
    out.push_back(acc / std::sqrt(2.0 * t.d + 1.0));
  }
  return out;
}

WeightTable weight_table(int two_j, const ComplexMatrix& x, const ComplexMatrix& y,
                         std::string operands) {
  WeightTable t;
  t.two_j = two_j;
  t.A = weight_A(two_j, x, y);
  t.B = weight_B(two_j, x, y);
  t.operands = std::move(operands);
  return t;
}

double macwilliams_coefficient(int two_j, int d, int e) {
  const int sign = ((two_j + d + e) % 2 == 0) ? 1 : -1;
  return sign * std::sqrt((2.0 * e + 1.0) * (2.0 * d + 1.0)) *
         sixj_value(two_j, two_j, 2 * d, two_j, two_j, 2 * e);
}

Eigen::MatrixXd macwilliams_matrix(int two_j) {
  if (two_j < 0) throw DomainError("macwilliams_matrix: two_j must be >= 0");
  const int n = two_j + 1;
  Eigen::MatrixXd c(n, n);
  for (int d = 0; d < n; ++d) {
    for (int e = 0; e < n; ++e) c(d, e) = macwilliams_coefficient(two_j, d, e);
  }
  return c;
}

double macwilliams_deviation(const WeightTable& t) {
  const Eigen::MatrixXd c = macwilliams_matrix(t.two_j);
  double worst = 0.0;
  for (int d = 0; d <= t.two_j; ++d) {
    Complex rhs = 0.0;
    for (int e = 0; e <= t.two_j; ++e) rhs += c(d, e) * t.B[e];
    worst = std::max(worst, std::abs(t.A[d] - rhs));
  }
  return worst;
}

double macwilliams_check(int two_j, const ComplexMatrix& x, const ComplexMatrix& y) {
  return macwilliams_deviation(weight_table(two_j, x, y));
}

RainsReport rains_check(const ComplexMatrix& p, const ComplexMatrix& m) {
  if (p.rows() != p.cols() || m.rows() != p.rows() || m.cols() != p.cols()) {
    throw ShapeError("rains_check: P and M must be square of equal size");
  }
  if ((p - p.adjoint()).norm() > 1e-10 || (p * p - p).norm() > 1e-10) {
    throw DomainError("rains_check: P is not an orthogonal projection");
  }
  const double k = std::round(p.trace().real());
  RainsReport r;
  r.lhs = k * (m.adjoint() * p * m * p).trace().real();
  r.rhs = std::norm((m * p).trace());
  r.gap = r.lhs - r.rhs;
  return r;
}

std::map<double, long> classical_distribution(const FiniteMetric& m,
                                              std::span<const int> subset) {
  if (subset.empty()) throw DomainError("classical_distribution: empty subset");
  std::set<int> seen;
  for (int x : subset) {
    if (x < 0 || x >= m.size()) {
      throw DomainError("classical_distribution: point out of range");
    }
    if (!seen.insert(x).second) {
      throw DomainError("classical_distribution: repeated point");
    }
  }
  std::map<double, long> counts;
  for (int x : subset) {
    for (int y : subset) ++counts[m.dist(x, y)];
  }
  return counts;
}

std::map<double, Complex> pure_term_distribution(const Filtration& f,
                                                 const ComplexMatrix& x,
                                                 const ComplexMatrix& y) {
  const Index n = f.ambient_dim;
  if (x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n) {
    throw ShapeError("pure_term_distribution: operand size differs from filtration");
  }
  std::map<double, Complex> out;
  for (const auto& g : pure_terms(f)) {
    Complex acc = 0.0;
    for (const auto& mm : g.basis.elements()) acc += (mm.adjoint() * x * mm * y).trace();
    out[g.label] = acc;
  }
  return out;
}

}  // namespace wstar
