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

#ifndef WSTAR_TVERBERG_HPP
#define WSTAR_TVERBERG_HPP

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wstar {

/// Exact rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);
/// Parses "p", "p/q" or "-p/q". Throws DomainError on malformed input.
Rational parse_rational(const std::string& s);

/// Partition of points t_0 < t_1 < ... on the moment curve in R^dim into
/// `parts` classes by index modulo `parts`, with exact convex coefficients
/// whose combinations all land on `common_point`.
struct TverbergPartition {
  int dim = 1;
  int parts = 1;
  std::vector<Rational> points;
  std::vector<int> color;
  std::vector<Rational> coeff;
  std::vector<Rational> common_point;

  std::size_t size() const { return points.size(); }
  /// Point indices of class j, ascending.
  std::vector<std::size_t> part(int j) const;
};

/// (t, t^2, ..., t^d).
std::vector<Rational> moment_curve(const Rational& t, int d);

/// The 2S-1 points 0..2S-2 on the line.
TverbergPartition base_partition(int parts);

/// Combines the S windows over {k, ..., k+N-1}, k = 0..S-1, each a shift of
/// one partition in dimension d-1, into a partition of {0, ..., N+S-2} in
/// dimension d by averaging the windows with equal weights.
TverbergPartition lift(std::span<const TverbergPartition> windows);

/// Periodic partition of m_d({0, ..., (d+1)(S-1)}) into S parts; verified
/// before it is returned.
TverbergPartition construct(int dim, int parts);

/// Image under t -> a t + b. Coefficients are kept; the common point is
/// recomputed.
TverbergPartition transport(const TverbergPartition& p, const Rational& a,
                            const Rational& b);

/// Exact check: coefficients nonnegative, summing to one per part, and every
/// part's combination equals common_point. Dimension 0 (every hull meets at
/// the empty vector) is accepted.
bool verify(const TverbergPartition& p);

}  // namespace wstar

#endif  // WSTAR_TVERBERG_HPP
