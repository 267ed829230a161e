// Copyright 2026 The raag Authors
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

// Seeded sampling of group elements. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; bounded draws use our own
// rejection step instead of the std distributions, whose algorithms vary
// between standard libraries.

#ifndef RAAG_RANDOM_HPP_
#define RAAG_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "raag/element.hpp"

namespace raag {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for stream `stream` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

class Sampler {
 public:
  Sampler(GraphPtr graph, std::uint64_t seed) : graph_(std::move(graph)), rng_(seed) {}

  Rng& rng() { return rng_; }
  const GraphPtr& graph() const { return graph_; }

  /// Uniformly random reduced word of exactly `length` letters, normalized.
  GroupElement exact(std::size_t length);
  /// Length uniform in [0, max_len], then exact(length).
  GroupElement element(std::size_t max_len);
  GroupElement nontrivial(std::size_t max_len);
  /// A signed letter as an element.
  GroupElement letter();
  /// Random element whose letters all lie in `gens`; identity if `gens` is empty.
  GroupElement over(GeneratorMask gens, std::size_t max_len);

 private:
  GroupElement draw(GeneratorMask gens, std::size_t length);

  GraphPtr graph_;
  Rng rng_;
};

}  // namespace raag

#endif  // RAAG_RANDOM_HPP_
