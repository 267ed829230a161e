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

#include "raag/structure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"

namespace raag {

GeneratorMask s_perp_mask(const GroupElement& u) {
  const CommutationGraph& g = u.graph();
  const GeneratorMask supp = support_mask(u);
  GeneratorMask out = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (!(g.blocking(s) & supp)) out |= GeneratorMask{1} << s;
  }
  return out;
}

std::vector<std::size_t> s_perp_set(const GroupElement& u) {
  std::vector<std::size_t> out;
  const GeneratorMask m = s_perp_mask(u);
  for (std::size_t s = 0; s < u.graph().size(); ++s) {
    if (m & (GeneratorMask{1} << s)) out.push_back(s);
  }
  return out;
}

std::vector<GeneratorMask> noncommuting_components(const CommutationGraph& graph, GeneratorMask gens) {
  std::vector<GeneratorMask> comps;
  GeneratorMask left = gens;
  while (left) {
    GeneratorMask comp = left & (~left + 1);
    for (GeneratorMask grown = 0; grown != comp;) {
      grown = comp;
      for (std::size_t s = 0; s < graph.size(); ++s) {
        if (grown & (GeneratorMask{1} << s)) comp |= graph.blocking(s) & gens;
      }
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

bool is_primitive(const GroupElement& w) {
  if (w.is_identity()) return false;
  const GroupElement v = cyclic_reduce(w).v;
  if (noncommuting_components(v.graph(), support_mask(v)).size() != 1) return false;
  return max_root(v).second == 1;
}

bool is_primitive_by_boundary(const GroupElement& w, std::size_t cap) {
  if (w.is_identity()) return false;
  const GroupElement v = cyclic_reduce(w).v;
  if (boundary(interval(GroupElement::identity(v.graph_ptr()), v, cap)).size() > 2) return false;
  return max_root(v).second == 1;
}

GroupElement PrimitiveDecomposition::product() const {
  GroupElement out = GroupElement::identity(conjugator.graph_ptr());
  for (const auto& [p, m] : pairs) out = multiply(out, power(p, static_cast<long long>(m)));
  return out;
}

namespace {

// Letters of different components commute, so deleting the letters outside a
// component is the retraction onto it.
GroupElement project(const GroupElement& v, GeneratorMask keep) {
  Word w;
  for (auto s : v.letters()) {
    if (keep & (GeneratorMask{1} << s.gen)) w.push_back(s);
  }
  return from_reduced(std::move(w), v.graph_ptr());
}

struct CoreDecomposition {
  GroupElement conjugator;
  std::vector<PrimitivePower> core_pairs;
};

CoreDecomposition decompose_core(const GroupElement& w) {
  if (w.is_identity()) throw PreconditionError("the identity has no primitive decomposition");
  CyclicReduction r = cyclic_reduce(w);
  std::vector<PrimitivePower> pairs;
  for (GeneratorMask comp : noncommuting_components(w.graph(), support_mask(r.v))) {
    auto [p, m] = max_root(project(r.v, comp));
    pairs.push_back({std::move(p), m});
  }
  return {std::move(r.u), std::move(pairs)};
}

}  // namespace

PrimitiveDecomposition prim_decompose(const GroupElement& w) {
  CoreDecomposition core = decompose_core(w);
  PrimitiveDecomposition out{core.conjugator, {}};
  const GroupElement ai = invert(core.conjugator);
  for (auto& [p, m] : core.core_pairs) out.pairs.push_back({multiply(multiply(core.conjugator, p), ai), m});
  std::sort(out.pairs.begin(), out.pairs.end(), [](const auto& l, const auto& r) { return l.p < r.p; });
  if (out.product() != w) throw InvariantError("primitive decomposition does not reproduce " + w.str());
  return out;
}

std::vector<GroupElement> primitives(const GroupElement& w) {
  std::vector<GroupElement> out;
  for (auto& pp : prim_decompose(w).pairs) out.push_back(pp.p);
  return out;
}

CentralizerPresentation centralizer(const GroupElement& w) {
  CentralizerPresentation out;
  const GraphPtr& g = w.graph_ptr();
  if (w.is_identity()) {
    for (std::size_t s = 0; s < g->size(); ++s) out.raag_generators.push_back(GroupElement::generator(g, s));
    return out;
  }
  CoreDecomposition core = decompose_core(w);
  GeneratorMask common = g->all_generators();
  for (const auto& pp : core.core_pairs) common &= s_perp_mask(pp.p);
  const GroupElement& a = core.conjugator;
  const GroupElement ai = invert(a);
  for (std::size_t s = 0; s < g->size(); ++s) {
    if (common & (GeneratorMask{1} << s)) {
      out.raag_generators.push_back(multiply(multiply(a, GroupElement::generator(g, s)), ai));
    }
  }
  for (const auto& pp : core.core_pairs) out.abelian_generators.push_back(multiply(multiply(a, pp.p), ai));
  std::sort(out.abelian_generators.begin(), out.abelian_generators.end());
  for (const auto& gen : out.raag_generators) {
    if (!in_centralizer(w, gen)) throw InvariantError("centralizer generator " + gen.str() + " does not commute");
  }
  for (const auto& gen : out.abelian_generators) {
    if (!in_centralizer(w, gen)) throw InvariantError("centralizer generator " + gen.str() + " does not commute");
  }
  return out;
}

bool in_centralizer(const GroupElement& w, const GroupElement& x) { return multiply(x, w) == multiply(w, x); }

std::vector<std::size_t> center(const CommutationGraph& graph) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < graph.size(); ++s) {
    if (graph.blocking(s) == (GeneratorMask{1} << s)) out.push_back(s);
  }
  return out;
}

std::vector<GroupElement> h_basis(const GroupElement& w) {
  if (w.is_identity() || !is_cyclically_reduced(w)) {
    throw PreconditionError("h_basis expects a nontrivial cyclically reduced element");
  }
  return primitives(w);
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::kYes:
      return "yes";
    case Membership::kNo:
      return "no";
    case Membership::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Membership subgroup_member(const std::vector<GroupElement>& gens, const GroupElement& x, std::size_t radius,
                           std::size_t cap) {
  std::vector<GroupElement> steps;
  for (const auto& g : gens) {
    require_same_graph(g, x);
    if (g.is_identity()) continue;
    steps.push_back(g);
    steps.push_back(invert(g));
  }
  const GroupElement one = GroupElement::identity(x.graph_ptr());
  if (x == one) return Membership::kYes;
  // The trivial subgroup is the only one the search can exhaust.
  if (steps.empty()) return Membership::kNo;
  std::unordered_set<GroupElement> seen{one};
  std::deque<GroupElement> frontier{one};
  while (!frontier.empty()) {
    GroupElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : steps) {
      GroupElement next = multiply(cur, s);
      if (next.length() > radius) continue;
      if (next == x) return Membership::kYes;
      if (seen.insert(next).second) {
        if (seen.size() > cap) return Membership::kInconclusive;
        frontier.push_back(std::move(next));
      }
    }
  }
  return Membership::kInconclusive;
}

}  // namespace raag
