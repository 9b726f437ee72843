// Copyright 2026 The Teamform Authors
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

#ifndef TEAMFORM_RNG_HPP
#define TEAMFORM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace teamform {

/// Deterministic random source. The engine is the standard-specified
/// mt19937_64; int and real mappings are implemented here instead of the
/// std distributions, whose output is not pinned by the standard, so a seed
/// produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
  /// distribution exact.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1].
  double uniform_pos() { return 1.0 - uniform01(); }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// k distinct values from 0..m-1 in ascending order (partial shuffle).
  std::vector<int> sample_distinct(int k, int m) {
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      const int j = uniform_int(i, m - 1);
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace teamform

#endif  // TEAMFORM_RNG_HPP
