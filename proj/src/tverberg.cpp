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

#include "wstar/tverberg.hpp"

#include <stdexcept>

#include "wstar/matcore.hpp"

namespace wstar {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("parse_rational: empty string");
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw DomainError("parse_rational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw DomainError("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::vector<std::size_t> TverbergPartition::part(int j) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < color.size(); ++i) {
    if (color[i] == j) idx.push_back(i);
  }
  return idx;
}

std::vector<Rational> moment_curve(const Rational& t, int d) {
  if (d < 1) throw DomainError("moment_curve: dimension must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(d));
  Rational power = t;
  for (int i = 0; i < d; ++i) {
    out.push_back(power);
    power *= t;
  }
  return out;
}

namespace {

std::vector<Rational> combination(const TverbergPartition& p, int j) {
  std::vector<Rational> acc(static_cast<std::size_t>(p.dim), Rational(0));
  if (p.dim == 0) return acc;
  for (std::size_t i : p.part(j)) {
    const auto m = moment_curve(p.points[i], p.dim);
    for (int c = 0; c < p.dim; ++c) acc[c] += p.coeff[i] * m[c];
  }
  return acc;
}

}  // namespace

TverbergPartition base_partition(int parts) {
  if (parts < 1) throw DomainError("base_partition: need at least one part");
  const int s = parts;
  TverbergPartition p;
  p.dim = 1;
  p.parts = s;
  const int n = 2 * s - 1;
  p.coeff.assign(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    p.points.emplace_back(i);
    p.color.push_back(i % s);
  }
  // Class {j, j+S} meets S-1 at weights (j+1)/S and (S-1-j)/S.
  for (int j = 0; j + 1 < s; ++j) {
    p.coeff[j] = Rational(j + 1, s);
    p.coeff[j + s] = Rational(s - 1 - j, s);
  }
  p.coeff[s - 1] = 1;
  for (auto& c : p.coeff) c.canonicalize();
  p.common_point = {Rational(s - 1)};
  return p;
}

TverbergPartition lift(std::span<const TverbergPartition> windows) {
  if (windows.empty()) throw DomainError("lift: no windows");
  const TverbergPartition& w0 = windows.front();
  const int s = w0.parts;
  const std::size_t n = w0.size();
  if (static_cast<int>(windows.size()) != s) {
    throw DomainError("lift: expected one window per part");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (w0.points[i] != Rational(static_cast<long>(i)) ||
        w0.color[i] != static_cast<int>(i % s)) {
      throw DomainError("lift: first window must be {0, ..., N-1} colored mod S");
    }
  }
  for (int k = 0; k < s; ++k) {
    const TverbergPartition& w = windows[k];
    if (w.dim != w0.dim || w.parts != s || w.size() != n) {
      throw DomainError("lift: inconsistent window shapes");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (w.points[i] != w0.points[i] + k || w.coeff[i] != w0.coeff[i] ||
          w.color[i] != w0.color[i]) {
        throw DomainError("lift: window " + std::to_string(k) +
                          " is not a shift of the first window");
      }
    }
  }

  TverbergPartition out;
  out.dim = w0.dim + 1;
  out.parts = s;
  const std::size_t total = n + static_cast<std::size_t>(s) - 1;
  out.coeff.assign(total, Rational(0));
  for (std::size_t i = 0; i < total; ++i) {
    out.points.emplace_back(static_cast<long>(i));
    out.color.push_back(static_cast<int>(i % s));
  }
  const Rational weight(1, s);
  out.common_point.assign(static_cast<std::size_t>(out.dim), Rational(0));
  for (int k = 0; k < s; ++k) {
    // Local index i of window k sits at global point i + k, whose global
    // color is (i + k) mod S.
    for (std::size_t i = 0; i < n; ++i) {
      out.coeff[i + k] += weight * windows[k].coeff[i];
      if ((i + k) % s == 0) {
        const auto m = moment_curve(windows[k].points[i], out.dim);
        for (int c = 0; c < out.dim; ++c) {
          out.common_point[c] += weight * windows[k].coeff[i] * m[c];
        }
      }
    }
  }
  return out;
}

TverbergPartition transport(const TverbergPartition& p, const Rational& a,
                            const Rational& b) {
  if (a == 0) throw DomainError("transport: degenerate affine map (a = 0)");
  TverbergPartition out = p;
  for (auto& t : out.points) t = a * t + b;
  out.common_point = combination(out, 0);
  if (!verify(out)) {
    throw std::logic_error("transport: image failed verification");
  }
  return out;
}

TverbergPartition construct(int dim, int parts) {
  if (dim < 1) throw DomainError("construct: dimension must be >= 1");
  if (parts < 1) throw DomainError("construct: need at least one part");

  TverbergPartition cur;
  if (parts == 1) {
    // One part: the single point t = 0 is its own hull.
    cur.dim = dim;
    cur.parts = 1;
    cur.points = {Rational(0)};
    cur.color = {0};
    cur.coeff = {Rational(1)};
    cur.common_point.assign(static_cast<std::size_t>(dim), Rational(0));
  } else {
    cur = base_partition(parts);
    for (int d = 2; d <= dim; ++d) {
      std::vector<TverbergPartition> windows;
      windows.reserve(static_cast<std::size_t>(parts));
      for (int k = 0; k < parts; ++k) {
        TverbergPartition w = cur;
        for (auto& t : w.points) t += k;
        windows.push_back(std::move(w));
      }
      cur = lift(windows);
    }
  }
  if (!verify(cur)) {
    throw std::logic_error("construct: partition failed exact verification");
  }
  return cur;
}

bool verify(const TverbergPartition& p) {
  if (p.dim < 0 || p.parts < 1) return false;
  if (p.color.size() != p.size() || p.coeff.size() != p.size()) return false;
  if (p.common_point.size() != static_cast<std::size_t>(p.dim)) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.color[i] < 0 || p.color[i] >= p.parts) return false;
    if (p.coeff[i] < 0) return false;
  }
  for (int j = 0; j < p.parts; ++j) {
    const auto idx = p.part(j);
    if (idx.empty()) return false;
    Rational total = 0;
    for (std::size_t i : idx) total += p.coeff[i];
    if (total != 1) return false;
    if (combination(p, j) != p.common_point) return false;
  }
  return true;
}

}  // namespace wstar
