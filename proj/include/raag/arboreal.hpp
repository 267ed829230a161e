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

// Dynamics attached to an element w: the folding onto its axis, the preorder
// it induces and the derived congruences, quasidirection, axis slices and
// direction joins.

#ifndef RAAG_ARBOREAL_HPP_
#define RAAG_ARBOREAL_HPP_

#include <cstddef>
#include <map>
#include <utility>

#include "raag/conjugacy.hpp"
#include "raag/lattice.hpp"

namespace raag {

/// w with its cyclic reduction and a cache of powers.
class WContext {
 public:
  explicit WContext(GroupElement w);

  const GroupElement& w() const noexcept { return w_; }
  const CyclicReduction& core() const noexcept { return core_; }
  /// w^n, memoized.
  const GroupElement& pow(long long n) const;

 private:
  GroupElement w_;
  CyclicReduction core_;
  mutable std::map<long long, GroupElement> powers_;
};

/// φ_w(x) = Y(wx, x, w^-1 x).
GroupElement fold_phi(const GroupElement& w, const GroupElement& x);
/// x ∈ X_w, i.e. x^-1 w x is cyclically reduced.
bool in_axis(const GroupElement& w, const GroupElement& x);

/// x ⪯_w y: y ∈ [x, wy].
bool preceq(const GroupElement& w, const GroupElement& x, const GroupElement& y);
/// x ∼_w y: y^-1 x ⊥ y^-1 w y.
bool sim(const GroupElement& w, const GroupElement& x, const GroupElement& y);
/// x ≡_w y: no two distinct points of [x, y] are ∼_w related.
bool equiv(const GroupElement& w, const GroupElement& x, const GroupElement& y,
           std::size_t cap = kDefaultIntervalCap);
/// x ≪_w y.
bool ll(const GroupElement& w, const GroupElement& x, const GroupElement& y, std::size_t cap = kDefaultIntervalCap);

/// x ∙_w y = lim Y(x, y, w^n φ_w(x)).
GroupElement qdir(const GroupElement& w, const GroupElement& x, const GroupElement& y);
GroupElement qdir(const WContext& ctx, const GroupElement& x, const GroupElement& y);

/// x ∈ X_{w,a}, the union of the cells [w^-n a, w^n a]. Requires a ∈ X_w.
bool in_axis_slice(const GroupElement& w, const GroupElement& a, const GroupElement& x);

/// Ψ_{w,a}(x) = lim Y(w^-n a, x, w^n a). Requires a ∈ X_w.
GroupElement psi_fold(const GroupElement& w, const GroupElement& a, const GroupElement& x);

/// (y, z) with z = Ψ_{w,a}(x), y = x z^-1 a, so x = y a^-1 z. Requires a, x ∈ X_w.
std::pair<GroupElement, GroupElement> decompose_axis(const GroupElement& w, const GroupElement& a,
                                                     const GroupElement& x);

/// x ∨_{w;a} y = lim Y(x, y, Y(w^n φ_w(x), a, w^n φ_w(y))).
GroupElement dir_join(const GroupElement& w, const GroupElement& a, const GroupElement& x, const GroupElement& y);

}  // namespace raag

#endif  // RAAG_ARBOREAL_HPP_
