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

#include "raag/arboreal.hpp"

#include <algorithm>

#include "raag/errors.hpp"

namespace raag {

WContext::WContext(GroupElement w) : w_(std::move(w)), core_(cyclic_reduce(w_)) {}

const GroupElement& WContext::pow(long long n) const {
  auto it = powers_.find(n);
  if (it == powers_.end()) it = powers_.emplace(n, power(w_, n)).first;
  return it->second;
}

GroupElement fold_phi(const GroupElement& w, const GroupElement& x) {
  require_same_graph(w, x);
  return median(multiply(w, x), x, multiply(invert(w), x));
}

bool in_axis(const GroupElement& w, const GroupElement& x) {
  require_same_graph(w, x);
  return is_cyclically_reduced(multiply(multiply(invert(x), w), x));
}

bool preceq(const GroupElement& w, const GroupElement& x, const GroupElement& y) {
  require_same_graph(w, x);
  require_same_graph(w, y);
  const GroupElement xi = invert(x);
  return is_prefix(multiply(xi, y), multiply(multiply(xi, w), y));
}

bool sim(const GroupElement& w, const GroupElement& x, const GroupElement& y) {
  require_same_graph(w, x);
  require_same_graph(w, y);
  const GroupElement yi = invert(y);
  return is_orthogonal(multiply(yi, x), multiply(multiply(yi, w), y));
}

bool equiv(const GroupElement& w, const GroupElement& x, const GroupElement& y, std::size_t cap) {
  require_same_graph(w, x);
  const Interval cell = interval(x, y, cap);
  const auto& pts = cell.elements;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (sim(w, pts[i], pts[j])) return false;
    }
  }
  return true;
}

bool ll(const GroupElement& w, const GroupElement& x, const GroupElement& y, std::size_t cap) {
  return preceq(w, x, y) && equiv(w, x, y, cap);
}

namespace {

// Evaluates f(n) for n = start, start+1, ... until the value has repeated
// `run` times in a row, then confirms it once more. The sequences fed here
// are eventually constant; the step bound only guards against defects.
template <typename F>
GroupElement stabilize(F&& f, long long start, std::size_t run) {
  const long long limit = start + 64 + 16 * static_cast<long long>(run);
  GroupElement value = f(start);
  std::size_t repeats = 1;
  for (long long n = start + 1; n <= limit; ++n) {
    GroupElement next = f(n);
    if (next == value) {
      ++repeats;
      if (repeats >= run && f(n + 1) == value) return value;
    } else {
      value = std::move(next);
      repeats = 1;
    }
  }
  throw InvariantError("limit failed to stabilize");
}

}  // namespace

GroupElement qdir(const WContext& ctx, const GroupElement& x, const GroupElement& y) {
  require_same_graph(ctx.w(), x);
  require_same_graph(x, y);
  const GroupElement phi = fold_phi(ctx.w(), x);
  const std::size_t run = distance(x, y) + 1;
  return stabilize([&](long long n) { return median(x, y, multiply(ctx.pow(n), phi)); }, 0, run);
}

GroupElement qdir(const GroupElement& w, const GroupElement& x, const GroupElement& y) {
  return qdir(WContext(w), x, y);
}

namespace {

void require_axis_point(const GroupElement& w, const GroupElement& a) {
  if (!in_axis(w, a)) throw PreconditionError("base point " + a.str() + " is not on the axis of " + w.str());
}

}  // namespace

// A point at distance d from a that lies in the slice already lies in the
// cell for n = d + 1, so a single membership test decides.
bool in_axis_slice(const GroupElement& w, const GroupElement& a, const GroupElement& x) {
  require_same_graph(w, a);
  require_same_graph(w, x);
  require_axis_point(w, a);
  const long long n = static_cast<long long>(distance(a, x)) + 1;
  const GroupElement lo = multiply(power(w, -n), a);
  const GroupElement hi = multiply(power(w, n), a);
  return distance(lo, x) + distance(x, hi) == distance(lo, hi);
}

GroupElement psi_fold(const GroupElement& w, const GroupElement& a, const GroupElement& x) {
  require_same_graph(w, a);
  require_same_graph(w, x);
  require_axis_point(w, a);
  const WContext ctx(w);
  const long long n0 = static_cast<long long>(distance(a, x)) + 1;
  return stabilize([&](long long n) { return median(multiply(ctx.pow(-n), a), x, multiply(ctx.pow(n), a)); },
                   n0, 1);
}

std::pair<GroupElement, GroupElement> decompose_axis(const GroupElement& w, const GroupElement& a,
                                                     const GroupElement& x) {
  require_axis_point(w, a);
  if (!in_axis(w, x)) throw PreconditionError(x.str() + " is not on the axis of " + w.str());
  GroupElement z = psi_fold(w, a, x);
  GroupElement y = multiply(multiply(x, invert(z)), a);
  return {std::move(y), std::move(z)};
}

GroupElement dir_join(const GroupElement& w, const GroupElement& a, const GroupElement& x, const GroupElement& y) {
  require_same_graph(w, a);
  require_same_graph(w, x);
  require_same_graph(w, y);
  const WContext ctx(w);
  const GroupElement px = fold_phi(w, x);
  const GroupElement py = fold_phi(w, y);
  const std::size_t run = std::max({distance(x, y), distance(a, x), distance(a, y)}) + 1;
  return stabilize(
      [&](long long n) {
        const GroupElement& wn = ctx.pow(n);
        return median(x, y, median(multiply(wn, px), a, multiply(wn, py)));
      },
      0, run);
}

}  // namespace raag
