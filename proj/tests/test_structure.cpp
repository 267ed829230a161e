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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "raag/arboreal.hpp"
#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/random.hpp"
#include "raag/structure.hpp"

namespace raag {
namespace {

using oracle::E;

class Structure : public ::testing::Test {
 protected:
  GraphPtr f2xz = oracle::fixture("f2xz");
  GraphPtr free2 = oracle::fixture("free2");
  GraphPtr z2 = oracle::fixture("z2");
  GraphPtr path4 = oracle::fixture("path4");
  std::vector<GraphPtr> all() const { return {f2xz, free2, z2, path4}; }
};

std::vector<std::string> strs(const std::vector<GroupElement>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.str());
  return out;
}

TEST_F(Structure, PerpExamples) {
  EXPECT_EQ(s_perp_set(GroupElement::identity(f2xz)), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(s_perp_set(E(f2xz, "a")), std::vector<std::size_t>{2});
  EXPECT_EQ(s_perp_set(E(f2xz, "a b")), std::vector<std::size_t>{2});
  EXPECT_EQ(s_perp_set(E(path4, "b")), (std::vector<std::size_t>{0, 2}));
}

TEST_F(Structure, PrimitiveExamples) {
  for (const auto& g : all()) {
    for (std::size_t s = 0; s < g->size(); ++s) EXPECT_TRUE(is_primitive(GroupElement::generator(g, s, -1)));
  }
  EXPECT_FALSE(is_primitive(E(free2, "a^2")));
  EXPECT_FALSE(is_primitive(E(f2xz, "a c")));
  EXPECT_FALSE(is_primitive_by_boundary(E(f2xz, "a c")));
  EXPECT_TRUE(is_primitive(E(free2, "b a b^-1 a")));
  EXPECT_FALSE(is_primitive(GroupElement::identity(free2)));
}

// Brute force: the core is a proper power of something in `pts`, or the cell
// [1, core] has an end other than 1 and core.
bool brute_primitive(const GroupElement& w, const std::vector<GroupElement>& pts) {
  if (w.is_identity()) return false;
  const auto v = cyclic_reduce(w).v;
  const auto one = GroupElement::identity(v.graph_ptr());
  for (const auto& a : oracle::interval(one, v)) {
    if (a != one && a != v && is_orthogonal_by_definition(a, invert(a) * v)) return false;
  }
  for (const auto& x : pts) {
    for (long long m = 2; static_cast<std::size_t>(m) * x.length() <= v.length() && !x.is_identity(); ++m) {
      if (power(x, m) == v) return false;
    }
  }
  return true;
}

TEST_F(Structure, PrimitiveFastPathMatchesBoundary) {
  for (const auto& g : all()) {
    const auto pts = ball(g, 4);
    const auto roots = ball(g, 2);
    for (const auto& w : pts) {
      ASSERT_EQ(is_primitive(w), is_primitive_by_boundary(w)) << w.str();
      ASSERT_EQ(is_primitive(w), brute_primitive(w, roots)) << w.str();
    }
  }
}

TEST_F(Structure, DecompositionExamples) {
  auto d = prim_decompose(E(f2xz, "a^2 c^3"));
  EXPECT_TRUE(d.conjugator.is_identity());
  ASSERT_EQ(d.pairs.size(), 2u);
  EXPECT_EQ(d.pairs[0].p.str(), "a");
  EXPECT_EQ(d.pairs[0].m, 2u);
  EXPECT_EQ(d.pairs[1].p.str(), "c");
  EXPECT_EQ(d.pairs[1].m, 3u);
  d = prim_decompose(E(free2, "a b a b"));
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_EQ(d.pairs[0].p.str(), "a b");
  EXPECT_EQ(d.pairs[0].m, 2u);
  d = prim_decompose(E(free2, "a b^-1"));
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_EQ(d.pairs[0].p.str(), "a b^-1");
  EXPECT_EQ(d.pairs[0].m, 1u);
  d = prim_decompose(E(free2, "b a^3 b^-1"));
  EXPECT_EQ(d.conjugator.str(), "b");
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_EQ(d.pairs[0].p.str(), "b a b^-1");
  EXPECT_EQ(d.pairs[0].m, 3u);
  EXPECT_THROW(prim_decompose(GroupElement::identity(free2)), PreconditionError);
}

TEST_F(Structure, DecompositionRoundTrip) {
  for (const auto& g : all()) {
    Sampler s(g, 31);
    for (int i = 0; i < 300; ++i) {
      const auto w = s.nontrivial(10);
      const auto d = prim_decompose(w);
      ASSERT_EQ(d.product(), w);
      const auto ai = invert(d.conjugator);
      for (std::size_t k = 0; k < d.pairs.size(); ++k) {
        ASSERT_TRUE(is_primitive(d.pairs[k].p));
        ASSERT_GE(d.pairs[k].m, 1u);
        for (std::size_t j = k + 1; j < d.pairs.size(); ++j) {
          ASSERT_LT(d.pairs[k].p, d.pairs[j].p);
          ASSERT_TRUE(is_orthogonal(ai * d.pairs[k].p * d.conjugator, ai * d.pairs[j].p * d.conjugator));
        }
      }
      // Conjugating w conjugates the primitives.
      const auto x = s.element(5);
      std::vector<GroupElement> want;
      for (const auto& pp : d.pairs) want.push_back(x * pp.p * invert(x));
      std::sort(want.begin(), want.end());
      auto got = primitives(x * w * invert(x));
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, want) << w.str() << " by " << x.str();
    }
  }
}

TEST_F(Structure, CentralizerExamples) {
  auto z = centralizer(E(f2xz, "c"));
  EXPECT_EQ(strs(z.raag_generators), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(strs(z.abelian_generators), std::vector<std::string>{"c"});
  z = centralizer(E(free2, "a b"));
  EXPECT_TRUE(z.raag_generators.empty());
  EXPECT_EQ(strs(z.abelian_generators), std::vector<std::string>{"a b"});
  z = centralizer(E(free2, "a"));
  EXPECT_TRUE(z.raag_generators.empty());
  EXPECT_EQ(strs(z.abelian_generators), std::vector<std::string>{"a"});
  z = centralizer(GroupElement::identity(path4));
  EXPECT_EQ(z.raag_generators.size(), 4u);
  EXPECT_TRUE(z.abelian_generators.empty());
}

TEST_F(Structure, CentralizerMembershipExamples) {
  const auto w = E(free2, "a b^2");
  EXPECT_TRUE(in_centralizer(w, power(w, -3)));
  EXPECT_TRUE(in_centralizer(E(f2xz, "a"), E(f2xz, "c")));
  EXPECT_FALSE(in_centralizer(E(free2, "a"), E(free2, "b")));
}

TEST_F(Structure, CenterExamples) {
  EXPECT_EQ(center(*z2), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(center(*free2).empty());
  EXPECT_EQ(center(*f2xz), std::vector<std::size_t>{2});
  EXPECT_TRUE(center(*path4).empty());
}

TEST_F(Structure, HBasisExamples) {
  EXPECT_EQ(strs(h_basis(E(free2, "a b^-1"))), std::vector<std::string>{"a b^-1"});
  EXPECT_EQ(strs(h_basis(E(f2xz, "c"))), std::vector<std::string>{"c"});
  EXPECT_EQ(strs(h_basis(E(f2xz, "a^2 c^3"))), (std::vector<std::string>{"a", "c"}));
  EXPECT_THROW(h_basis(E(free2, "a b a^-1")), PreconditionError);
}

TEST_F(Structure, CentralizerOfCIsEverything) {
  const auto z = centralizer(E(f2xz, "c"));
  std::vector<GroupElement> gens = z.raag_generators;
  gens.insert(gens.end(), z.abelian_generators.begin(), z.abelian_generators.end());
  for (const auto& x : ball(f2xz, 3)) ASSERT_EQ(subgroup_member(gens, x, 3), Membership::kYes) << x.str();
}

TEST_F(Structure, CentralizerIsSoundAndComplete) {
  for (const auto& g : all()) {
    Sampler s(g, 8);
    const auto pts = ball(g, 3);
    for (int i = 0; i < 40; ++i) {
      const auto w = s.nontrivial(4);
      const auto z = centralizer(w);
      std::vector<GroupElement> gens = z.raag_generators;
      gens.insert(gens.end(), z.abelian_generators.begin(), z.abelian_generators.end());
      for (const auto& gen : gens) ASSERT_TRUE(in_centralizer(w, gen));
      for (const auto& x : pts) {
        if (!in_centralizer(w, x)) continue;
        // Search inside the conjugate by the decomposition's conjugator,
        // where the generators are short.
        const auto a = prim_decompose(w).conjugator;
        std::vector<GroupElement> inner;
        for (const auto& gen : gens) inner.push_back(invert(a) * gen * a);
        const auto xi = invert(a) * x * a;
        ASSERT_EQ(subgroup_member(inner, xi, xi.length() + 2), Membership::kYes) << w.str() << " " << x.str();
      }
    }
  }
}

TEST_F(Structure, PowersHaveTheSameCentralizer) {
  for (const auto& g : all()) {
    Sampler s(g, 2);
    const auto pts = ball(g, 3);
    for (int i = 0; i < 30; ++i) {
      const auto w = s.nontrivial(5);
      for (long long m : {2, 3}) {
        for (const auto& x : pts) ASSERT_EQ(in_centralizer(power(w, m), x), in_centralizer(w, x));
      }
    }
  }
}

TEST_F(Structure, AxisFoldingPreorderThroughPrimitives) {
  for (const auto& g : all()) {
    Sampler s(g, 13);
    for (int i = 0; i < 200; ++i) {
      const auto w = s.nontrivial(6);
      const auto prim = primitives(w);
      const auto x = s.element(4), y = s.element(4);
      bool all_axis = true, all_pre = true;
      auto composed = x;
      for (const auto& p : prim) {
        all_axis = all_axis && in_axis(p, x);
        all_pre = all_pre && preceq(p, x, y);
        composed = fold_phi(p, composed);
      }
      ASSERT_EQ(in_axis(w, x), all_axis);
      ASSERT_EQ(preceq(w, x, y), all_pre);
      ASSERT_EQ(fold_phi(w, x), composed);
      auto reversed = x;
      for (auto it = prim.rbegin(); it != prim.rend(); ++it) reversed = fold_phi(*it, reversed);
      ASSERT_EQ(reversed, composed);
    }
  }
}

TEST_F(Structure, SubgroupMembership) {
  const auto one = GroupElement::identity(free2);
  EXPECT_EQ(subgroup_member({}, one, 2), Membership::kYes);
  EXPECT_EQ(subgroup_member({}, E(free2, "a"), 2), Membership::kNo);
  EXPECT_EQ(subgroup_member({E(free2, "a b")}, E(free2, "b^-1 a^-1"), 2), Membership::kYes);
  EXPECT_EQ(subgroup_member({E(free2, "a b")}, E(free2, "a"), 4), Membership::kInconclusive);
  EXPECT_EQ(to_string(Membership::kInconclusive), "inconclusive");
}

}  // namespace
}  // namespace raag
