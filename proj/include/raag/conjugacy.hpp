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

// Cyclic reduction, conjugacy and roots.

#ifndef RAAG_CONJUGACY_HPP_
#define RAAG_CONJUGACY_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "raag/element.hpp"

namespace raag {

inline constexpr std::size_t kDefaultConjugateCap = 100'000;

/// w = u v u^-1 with v cyclically reduced and u = w ∩ w^-1.
struct CyclicReduction {
  GroupElement u;
  GroupElement v;
};

bool is_cyclically_reduced(const GroupElement& w);
CyclicReduction cyclic_reduce(const GroupElement& w);

/// Closure of {v} under v -> s^-1 v s, s a first letter of v, keeping moves
/// that preserve length. Shortlex sorted. Throws ResourceError past `cap`.
std::vector<GroupElement> cyclically_reduced_conjugates(const GroupElement& v,
                                                        std::size_t cap = kDefaultConjugateCap);

struct ConjugacyResult {
  bool conjugate = false;
  /// When conjugate: c with c^-1 w1 c = w2.
  std::optional<GroupElement> certificate;
};

ConjugacyResult conjugacy(const GroupElement& w1, const GroupElement& w2,
                          std::size_t cap = kDefaultConjugateCap);
bool are_conjugate(const GroupElement& w1, const GroupElement& w2, std::size_t cap = kDefaultConjugateCap);

/// The unique x with x^m = w, if any. m >= 1.
std::optional<GroupElement> mth_root(const GroupElement& w, std::size_t m);

/// (p, m) with p^m = w and m maximal. Throws PreconditionError on identity.
std::pair<GroupElement, std::size_t> max_root(const GroupElement& w);

}  // namespace raag

#endif  // RAAG_CONJUGACY_HPP_
