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

#include "raag/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "raag/errors.hpp"
#include "raag/lattice.hpp"

namespace raag {

bool is_cyclically_reduced(const GroupElement& w) { return meet(w, invert(w)).is_identity(); }

CyclicReduction cyclic_reduce(const GroupElement& w) {
  GroupElement u = meet(w, invert(w));
  GroupElement v = multiply(multiply(invert(u), w), u);
  return {std::move(u), std::move(v)};
}

namespace {

struct Step {
  GroupElement parent;
  SignedLetter move;
};

// BFS over the shift moves. When `target` is given, stops as soon as it is
// reached; `steps` records how each state was first reached.
std::vector<GroupElement> explore(const GroupElement& v, std::size_t cap, const GroupElement* target,
                                  std::unordered_map<GroupElement, Step>* steps) {
  std::unordered_set<GroupElement> seen{v};
  std::deque<GroupElement> frontier{v};
  const GraphPtr& g = v.graph_ptr();
  while (!frontier.empty()) {
    if (target && seen.count(*target)) break;
    GroupElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (SignedLetter s : first_letters(cur)) {
      const GroupElement se = GroupElement::letter(g, s);
      GroupElement next = multiply(multiply(invert(se), cur), se);
      if (next.length() != v.length()) continue;
      if (!seen.insert(next).second) continue;
      if (seen.size() > cap) throw ResourceError("conjugate-set", cap);
      if (steps) steps->emplace(next, Step{cur, s});
      frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<GroupElement> cyclically_reduced_conjugates(const GroupElement& v, std::size_t cap) {
  if (!is_cyclically_reduced(v)) throw PreconditionError("expected a cyclically reduced element");
  auto out = explore(v, cap, nullptr, nullptr);
  std::sort(out.begin(), out.end());
  return out;
}

ConjugacyResult conjugacy(const GroupElement& w1, const GroupElement& w2, std::size_t cap) {
  require_same_graph(w1, w2);
  const CyclicReduction r1 = cyclic_reduce(w1);
  const CyclicReduction r2 = cyclic_reduce(w2);
  if (r1.v.length() != r2.v.length()) return {};
  std::unordered_map<GroupElement, Step> steps;
  auto reached = explore(r1.v, cap, &r2.v, &steps);
  if (std::find(reached.begin(), reached.end(), r2.v) == reached.end()) return {};
  // Walk back to r1.v collecting the moves; v_k = g^-1 v_1 g with g = s_1 ... s_k.
  Word moves;
  for (GroupElement cur = r2.v; cur != r1.v;) {
    const Step& st = steps.at(cur);
    moves.push_back(st.move);
    cur = st.parent;
  }
  std::reverse(moves.begin(), moves.end());
  const GroupElement g = normalize(moves, w1.graph_ptr());
  GroupElement c = multiply(multiply(r1.u, g), invert(r2.u));
  if (multiply(multiply(invert(c), w1), c) != w2) throw InvariantError("conjugator certificate failed to verify");
  return {true, std::move(c)};
}

bool are_conjugate(const GroupElement& w1, const GroupElement& w2, std::size_t cap) {
  return conjugacy(w1, w2, cap).conjugate;
}

namespace {

// Depth-first search for a prefix p of v whose letter counts are `want`,
// checking p^m = v at the leaves. Prefixes are deduplicated.
std::optional<GroupElement> root_search(const GroupElement& v, std::size_t m, std::vector<std::size_t> want) {
  const GraphPtr& g = v.graph_ptr();
  struct Frame {
    GroupElement prefix;
    GroupElement rest;
    std::vector<std::size_t> left;
  };
  std::unordered_set<GroupElement> seen;
  std::vector<Frame> stack{{GroupElement::identity(g), v, std::move(want)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (std::all_of(f.left.begin(), f.left.end(), [](std::size_t c) { return c == 0; })) {
      if (power(f.prefix, static_cast<long long>(m)) == v) return f.prefix;
      continue;
    }
    for (SignedLetter s : first_letters(f.rest)) {
      if (f.left[s.code()] == 0) continue;
      const GroupElement se = GroupElement::letter(g, s);
      GroupElement next = multiply(f.prefix, se);
      if (!seen.insert(next).second) continue;
      Frame child{std::move(next), multiply(invert(se), f.rest), f.left};
      --child.left[s.code()];
      stack.push_back(std::move(child));
    }
  }
  return std::nullopt;
}

}  // namespace

// A root of a cyclically reduced v is cyclically reduced, hence a prefix of
// v, and roots of u v u^-1 are the conjugates of roots of v.
std::optional<GroupElement> mth_root(const GroupElement& w, std::size_t m) {
  if (m == 0) throw PreconditionError("root degree must be at least 1");
  if (m == 1 || w.is_identity()) return w;
  const CyclicReduction r = cyclic_reduce(w);
  auto counts = letter_counts(r.v);
  for (auto& c : counts) {
    if (c % m != 0) return std::nullopt;
    c /= m;
  }
  auto root = root_search(r.v, m, std::move(counts));
  if (!root) return std::nullopt;
  return multiply(multiply(r.u, *root), invert(r.u));
}

std::pair<GroupElement, std::size_t> max_root(const GroupElement& w) {
  if (w.is_identity()) throw PreconditionError("max_root of the identity");
  const CyclicReduction r = cyclic_reduce(w);
  std::size_t g = 0;
  for (auto c : letter_counts(r.v)) g = std::gcd(g, c);
  for (std::size_t m = g; m > 1; --m) {
    if (g % m != 0) continue;
    if (auto p = mth_root(w, m)) return {std::move(*p), m};
  }
  return {w, 1};
}

}  // namespace raag
