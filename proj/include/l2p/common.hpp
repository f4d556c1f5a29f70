// Copyright 2026 The l2p Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace l2p {

/// Thrown on malformed inputs (worlds, datasets, token streams).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a token cannot be applied to an execution state.
struct ExecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-capacity inline vector. Execution states are copied constantly
/// during search, so their containers must not touch the heap.
template <class T, int Cap>
struct SmallVec {
  std::array<T, Cap> items{};
  uint8_t count = 0;

  bool empty() const { return count == 0; }
  int size() const { return count; }
  bool full() const { return count == Cap; }
  const T& operator[](int i) const { return items[static_cast<size_t>(i)]; }
  T& operator[](int i) { return items[static_cast<size_t>(i)]; }
  const T& back() const { return items[static_cast<size_t>(count - 1)]; }
  void push_back(const T& v) {
    if (full()) throw std::length_error("SmallVec overflow");
    items[count++] = v;
  }
  void pop_back() { --count; }
  void clear() { count = 0; }
  const T* begin() const { return items.data(); }
  const T* end() const { return items.data() + count; }

  friend bool operator==(const SmallVec& a, const SmallVec& b) {
    if (a.count != b.count) return false;
    for (int i = 0; i < a.count; ++i)
      if (!(a.items[static_cast<size_t>(i)] == b.items[static_cast<size_t>(i)])) return false;
    return true;
  }
};

/// Deterministic RNG. All stochastic components draw from one of these,
/// seeded explicitly, so identical configs reproduce bit-identical runs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  /// Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 gen_;
};

/// Stable 64-bit mix for deriving per-(step, example) child seeds.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace l2p
