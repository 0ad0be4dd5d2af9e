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

#ifndef WSTAR_RANDOM_HPP
#define WSTAR_RANDOM_HPP

#include <cstdint>

#include "wstar/matcore.hpp"

namespace wstar {

/// Counter-based stream keyed by (seed, index): the n-th draw is a pure
/// function of (seed, index, n), so results do not depend on scheduling.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_complex(std::uint64_t seed, std::uint64_t index, Index rows,
                             Index cols);
/// A + A* for Gaussian A; real diagonal.
ComplexMatrix random_hermitian(std::uint64_t seed, std::uint64_t index, Index n);
/// A A* for Gaussian A.
ComplexMatrix random_positive(std::uint64_t seed, std::uint64_t index, Index n);

}  // namespace wstar

#endif  // WSTAR_RANDOM_HPP
