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

#include "wstar/random.hpp"

#include <cmath>
#include <numbers>

namespace wstar {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t index)
    : key_(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL))) {}

std::uint64_t CounterStream::next_u64() {
  return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

double CounterStream::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u = uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

ComplexMatrix random_complex(std::uint64_t seed, std::uint64_t index, Index rows,
                             Index cols) {
  CounterStream rng(seed, index);
  ComplexMatrix a(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) a(i, j) = rng.complex_normal();
  }
  return a;
}

ComplexMatrix random_hermitian(std::uint64_t seed, std::uint64_t index, Index n) {
  const ComplexMatrix a = random_complex(seed, index, n, n);
  ComplexMatrix h = a + a.adjoint();
  for (Index i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  return h;
}

ComplexMatrix random_positive(std::uint64_t seed, std::uint64_t index, Index n) {
  const ComplexMatrix a = random_complex(seed, index, n, n);
  return a * a.adjoint();
}

}  // namespace wstar
