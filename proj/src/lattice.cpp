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

#include "raag/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "raag/errors.hpp"

namespace raag {

bool Interval::contains(const GroupElement& z) const {
  return std::binary_search(elements.begin(), elements.end(), z);
}

std::size_t distance(const GroupElement& x, const GroupElement& y) {
  return multiply(invert(x), y).length();
}

bool is_prefix(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  if (x.length() > y.length()) return false;
  return x.length() + distance(x, y) == y.length();
}

// Greedy: any common first letter lies below the meet, so it can be split
// off both arguments and the recursion continues on the quotients.
GroupElement meet(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  const CommutationGraph& g = x.graph();
  Word a = x.letters();
  Word b = y.letters();
  Word common;
  while (!a.empty() && !b.empty()) {
    auto pa = first_letter_positions(a, g);
    auto pb = first_letter_positions(b, g);
    std::size_t best_a = a.size();
    std::size_t best_b = b.size();
    for (auto i : pa) {
      for (auto j : pb) {
        if (a[i] == b[j] && (best_a == a.size() || a[i] < a[best_a])) {
          best_a = i;
          best_b = j;
        }
      }
    }
    if (best_a == a.size()) break;
    common.push_back(a[best_a]);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(best_a));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_b));
  }
  return from_reduced(std::move(common), x.graph_ptr());
}

GroupElement median(const GroupElement& x, const GroupElement& y, const GroupElement& z) {
  require_same_graph(x, y);
  require_same_graph(x, z);
  const GroupElement zi = invert(z);
  return multiply(z, meet(multiply(zi, x), multiply(zi, y)));
}

std::optional<GroupElement> join(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  const GroupElement m = meet(x, y);
  GroupElement z = multiply(multiply(x, invert(m)), y);
  if (is_prefix(x, z) && is_prefix(y, z)) return z;
  return std::nullopt;
}

bool is_orthogonal(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  const GeneratorMask sx = support_mask(x);
  const GeneratorMask sy = support_mask(y);
  if (sx & sy) return false;
  const CommutationGraph& g = x.graph();
  for (std::size_t gen = 0; gen < g.size(); ++gen) {
    if ((sx & (GeneratorMask{1} << gen)) && (g.blocking(gen) & sy)) return false;
  }
  return true;
}

bool is_orthogonal_by_definition(const GroupElement& x, const GroupElement& y) {
  return meet(x, y).is_identity() && join(x, y).has_value();
}

Interval interval(const GroupElement& x, const GroupElement& y, std::size_t cap) {
  require_same_graph(x, y);
  std::unordered_set<GroupElement> seen{x};
  std::deque<GroupElement> frontier{x};
  while (!frontier.empty()) {
    GroupElement z = std::move(frontier.front());
    frontier.pop_front();
    const GroupElement rest = multiply(invert(z), y);
    for (SignedLetter s : first_letters(rest)) {
      GroupElement next = multiply(z, GroupElement::letter(x.graph_ptr(), s));
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw ResourceError("interval", cap);
        frontier.push_back(std::move(next));
      }
    }
  }
  Interval cell{x, y, {seen.begin(), seen.end()}};
  std::sort(cell.elements.begin(), cell.elements.end());
  return cell;
}

std::vector<GroupElement> boundary(const Interval& cell) {
  if (!cell.from.is_identity()) throw PreconditionError("boundary expects a cell of the form [1, v]");
  std::vector<GroupElement> ends;
  for (const auto& a : cell.elements) {
    if (is_orthogonal(a, multiply(invert(a), cell.to))) ends.push_back(a);
  }
  return ends;
}

std::vector<GroupElement> ball(const GraphPtr& graph, std::size_t radius, std::size_t cap) {
  const GroupElement one = GroupElement::identity(graph);
  std::unordered_set<GroupElement> seen{one};
  std::vector<GroupElement> layer{one};
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<GroupElement> next_layer;
    for (const auto& z : layer) {
      for (std::size_t code = 0; code < 2 * graph->size(); ++code) {
        GroupElement next = multiply(z, GroupElement::letter(graph, SignedLetter::from_code(code)));
        if (next.length() != r + 1) continue;
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw ResourceError("ball", cap);
          next_layer.push_back(std::move(next));
        }
      }
    }
    layer = std::move(next_layer);
  }
  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement oracle_qdir(const GroupElement& a, const GroupElement& b, const Preorder& preceq, std::size_t cap) {
  require_same_graph(a, b);
  const Interval cell = interval(a, b, cap);
  std::optional<GroupElement> acc;
  for (const auto& x : cell.elements) {
    if (!preceq(a, x) || !preceq(b, x)) continue;
    acc = acc ? median(*acc, a, x) : x;
  }
  if (!acc) throw InvariantError("U_{a,b} is empty: the preorder bounds no pair above");
  return *acc;
}

}  // namespace raag
