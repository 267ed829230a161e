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

// The order-theoretic layer of a right-angled Artin group: the prefix order
// x ⊂ y  <=>  l(x) + l(x^-1 y) = l(y), meets, medians, joins, orthogonality,
// geodesic intervals and balls.

#ifndef RAAG_LATTICE_HPP_
#define RAAG_LATTICE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "raag/element.hpp"

namespace raag {

inline constexpr std::size_t kDefaultIntervalCap = 20'000;
inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// The cell [x, y] = {z : d(x, z) + d(z, y) = d(x, y)}, d(x, y) = l(x^-1 y).
struct Interval {
  GroupElement from;
  GroupElement to;
  /// Sorted in shortlex order.
  std::vector<GroupElement> elements;

  bool contains(const GroupElement& z) const;
};

/// d(x, y) = l(x^-1 y).
std::size_t distance(const GroupElement& x, const GroupElement& y);

bool is_prefix(const GroupElement& x, const GroupElement& y);

/// Greatest common lower bound under ⊂.
GroupElement meet(const GroupElement& x, const GroupElement& y);

/// Y(x, y, z) = z ((z^-1 x) ∩ (z^-1 y)).
GroupElement median(const GroupElement& x, const GroupElement& y, const GroupElement& z);

/// x ∪ y when it exists.
std::optional<GroupElement> join(const GroupElement& x, const GroupElement& y);

/// x ⊥ y: disjoint supports whose generators pairwise commute.
bool is_orthogonal(const GroupElement& x, const GroupElement& y);
/// x ⊥ y from the definition: x ∩ y = 1 and x ∪ y exists.
bool is_orthogonal_by_definition(const GroupElement& x, const GroupElement& y);

/// Throws ResourceError if the cell has more than `cap` elements.
Interval interval(const GroupElement& x, const GroupElement& y, std::size_t cap = kDefaultIntervalCap);

/// Ends of the cell [1, v]: {a ⊂ v : a ⊥ a^-1 v}, shortlex sorted.
std::vector<GroupElement> boundary(const Interval& cell);

/// All elements of length <= radius, shortlex sorted.
std::vector<GroupElement> ball(const GraphPtr& graph, std::size_t radius, std::size_t cap = kDefaultBallCap);

using Preorder = std::function<bool(const GroupElement&, const GroupElement&)>;

/// a ∙ b = ∨_a U_{a,b}, U_{a,b} = {x ∈ [a, b] : a ⪯ x and b ⪯ x}, where
/// u ∨_a v = Y(u, a, v). Requires every pair to be bounded above under the
/// preorder; an empty U throws InvariantError.
GroupElement oracle_qdir(const GroupElement& a, const GroupElement& b, const Preorder& preceq,
                         std::size_t cap = kDefaultIntervalCap);

}  // namespace raag

#endif  // RAAG_LATTICE_HPP_
