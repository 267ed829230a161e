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

// Randomized property suites over a presentation.
//
// Every property is evaluated on `samples` independent instances split over
// a fixed number of shards. Shard k of property P draws from its own stream
// seeded by (seed, P, k), and shard results are merged in shard order, so a
// report depends on the configuration but not on the worker count.

#ifndef RAAG_CHECKS_HPP_
#define RAAG_CHECKS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "raag/presentation.hpp"

namespace raag {

inline constexpr std::size_t kShards = 8;
inline constexpr std::size_t kMaxCounterexamples = 20;

struct CheckConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t max_len = 8;
  std::size_t interval_cap = 20'000;
  std::size_t conj_cap = 100'000;
  std::size_t workers = 1;
};

/// One failing instance: named words (or integers) in the order drawn.
using Counterexample = std::vector<std::pair<std::string, std::string>>;

struct PropertyReport {
  std::string suite;
  std::string property;
  bool warn_only = false;
  std::size_t samples = 0;
  std::size_t passed = 0;
  /// Samples where no instance satisfying the hypothesis was found.
  std::size_t vacuous = 0;
  std::size_t inconclusive = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;
};

struct CheckReport {
  std::vector<PropertyReport> properties;

  /// Failures outside warn-only properties.
  std::size_t hard_failures() const;
  bool ok() const { return hard_failures() == 0; }
};

/// Suite names in run order, without "all".
const std::vector<std::string>& suite_names();
/// Property names of a suite.
std::vector<std::string> property_names(const std::string& suite);

/// Runs `suite` ("all" for every suite). Throws std::invalid_argument on an
/// unknown suite name.
CheckReport run_checks(const GraphPtr& graph, const std::string& suite, const CheckConfig& config);

nlohmann::ordered_json to_json(const CheckReport& report);

}  // namespace raag

#endif  // RAAG_CHECKS_HPP_
