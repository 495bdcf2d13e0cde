// Copyright 2026 The heckecf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HECKECF_RANDOM_HPP_
#define HECKECF_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace heckecf {

// Seedable generator with a platform-independent uniform double: the
// distribution classes in <random> are not pinned by the standard, so
// verification runs would not reproduce across toolchains through them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform in (lo, hi]: verification points live in half-open boxes that
  // include their upper edge.
  double uniform_left_open(double lo, double hi) {
    return hi - (hi - lo) * uniform();
  }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace heckecf

#endif  // HECKECF_RANDOM_HPP_
