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

// Primitive elements, the decomposition w = a (∏ p_i^{m_i}) a^-1 over
// pairwise orthogonal primitives, centralizers and the center.

#ifndef RAAG_STRUCTURE_HPP_
#define RAAG_STRUCTURE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "raag/element.hpp"
#include "raag/lattice.hpp"

namespace raag {

/// {s ∈ S : s ⊥ u} as a bitmask / as an index list.
GeneratorMask s_perp_mask(const GroupElement& u);
std::vector<std::size_t> s_perp_set(const GroupElement& u);

/// Connected components of the non-commutation graph induced on `gens`,
/// each as a mask, ordered by least generator.
std::vector<GeneratorMask> noncommuting_components(const CommutationGraph& graph, GeneratorMask gens);

bool is_primitive(const GroupElement& w);
/// Same predicate through the boundary of the cell [1, core(w)].
bool is_primitive_by_boundary(const GroupElement& w, std::size_t cap = kDefaultIntervalCap);

struct PrimitivePower {
  GroupElement p;
  std::size_t m;
};

struct PrimitiveDecomposition {
  GroupElement conjugator;
  /// Sorted by the shortlex order of p.
  std::vector<PrimitivePower> pairs;

  /// ∏ p_i^{m_i}.
  GroupElement product() const;
};

/// Throws PreconditionError on the identity.
PrimitiveDecomposition prim_decompose(const GroupElement& w);

/// The p_i's of the decomposition, i.e. Prim(w).
std::vector<GroupElement> primitives(const GroupElement& w);

struct CentralizerPresentation {
  std::vector<GroupElement> raag_generators;
  std::vector<GroupElement> abelian_generators;
};

CentralizerPresentation centralizer(const GroupElement& w);
bool in_centralizer(const GroupElement& w, const GroupElement& x);

/// Generators commuting with every generator.
std::vector<std::size_t> center(const CommutationGraph& graph);

/// For cyclically reduced w != 1.
std::vector<GroupElement> h_basis(const GroupElement& w);

enum class Membership { kYes, kNo, kInconclusive };
std::string to_string(Membership m);

/// Bounded search for x in the subgroup generated by `gens`: BFS over
/// products of generators and inverses whose partial products stay within
/// length `radius`. Found gives kYes; otherwise kInconclusive, since
/// the search is one-sided.
Membership subgroup_member(const std::vector<GroupElement>& gens, const GroupElement& x, std::size_t radius,
                           std::size_t cap = kDefaultBallCap);

}  // namespace raag

#endif  // RAAG_STRUCTURE_HPP_
