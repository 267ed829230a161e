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

#include "oracles.hpp"
#include "raag/arboreal.hpp"
#include "raag/errors.hpp"
#include "raag/random.hpp"

namespace raag {
namespace {

using oracle::E;

class Arboreal : public ::testing::Test {
 protected:
  GraphPtr f2xz = oracle::fixture("f2xz");
  GraphPtr free2 = oracle::fixture("free2");
  GraphPtr z2 = oracle::fixture("z2");
  std::vector<GraphPtr> all() const { return {f2xz, free2, z2}; }
};

TEST_F(Arboreal, FoldExamples) {
  const auto one = GroupElement::identity(free2);
  EXPECT_EQ(fold_phi(E(free2, "b"), E(free2, "a")), one);
  EXPECT_FALSE(in_axis(E(free2, "b"), E(free2, "a")));
  for (const auto& x : ball(f2xz, 3)) {
    EXPECT_EQ(fold_phi(E(f2xz, "c"), x), x);
    EXPECT_TRUE(in_axis(E(f2xz, "c"), x));
  }
  const auto w = E(free2, "a b^-1");
  for (const auto& x : ball(free2, 3)) {
    ASSERT_TRUE(in_axis(w, fold_phi(w, x)));
    ASSERT_EQ(in_axis(power(w, 3), x), in_axis(w, x));
    ASSERT_EQ(in_axis(w, x), is_cyclically_reduced(invert(x) * w * x));
  }
}

TEST_F(Arboreal, PreorderExamples) {
  const auto w = E(free2, "a b");
  const auto one = GroupElement::identity(free2);
  EXPECT_TRUE(preceq(w, w, w));
  EXPECT_TRUE(preceq(w, one, w));
  EXPECT_TRUE(preceq(E(free2, "b"), E(free2, "a"), one));
  EXPECT_TRUE(sim(w, w, w));
  EXPECT_TRUE(sim(E(f2xz, "c"), E(f2xz, "a"), GroupElement::identity(f2xz)));
  EXPECT_FALSE(sim(E(free2, "b"), E(free2, "a"), one));
}

TEST_F(Arboreal, CongruenceExamples) {
  const auto c = E(f2xz, "c");
  const auto one = GroupElement::identity(f2xz);
  EXPECT_TRUE(equiv(c, c, c));
  EXPECT_FALSE(equiv(c, one, E(f2xz, "a")));
  EXPECT_TRUE(equiv(c, one, c));
  EXPECT_TRUE(ll(E(free2, "b"), E(free2, "a"), GroupElement::identity(free2)));
  const auto w = E(free2, "a b a^-1");
  for (const auto& x : ball(free2, 3)) {
    ASSERT_TRUE(ll(w, x, fold_phi(w, x)));
    if (in_axis(w, x)) {
      ASSERT_TRUE(ll(w, x, w * x));
    }
  }
}

TEST_F(Arboreal, QdirExamples) {
  const auto one = GroupElement::identity(free2);
  const auto b = E(free2, "b");
  EXPECT_EQ(qdir(b, E(free2, "a b"), E(free2, "a b")), E(free2, "a b"));
  EXPECT_EQ(qdir(b, one, E(free2, "a")), one);
  EXPECT_EQ(qdir(b, one, E(free2, "b^-1")), one);
  const Preorder pre = [&](const GroupElement& x, const GroupElement& y) { return preceq(b, x, y); };
  EXPECT_EQ(oracle_qdir(one, E(free2, "a"), pre), one);
}

TEST_F(Arboreal, SliceExamples) {
  const auto c = E(f2xz, "c");
  const auto one = GroupElement::identity(f2xz);
  EXPECT_TRUE(in_axis_slice(c, one, one));
  EXPECT_TRUE(in_axis_slice(c, one, power(c, 2)));
  EXPECT_FALSE(in_axis_slice(c, one, E(f2xz, "a")));
  EXPECT_EQ(psi_fold(c, one, E(f2xz, "a")), one);
  EXPECT_EQ(psi_fold(c, one, E(f2xz, "c^2 a")).str(), "c^2");
  EXPECT_EQ(psi_fold(c, one, power(c, -3)), power(c, -3));
  EXPECT_THROW(psi_fold(E(free2, "b"), E(free2, "a"), E(free2, "a")), PreconditionError);
  EXPECT_THROW(in_axis_slice(E(free2, "b"), E(free2, "a"), E(free2, "a")), PreconditionError);
}

TEST_F(Arboreal, DecomposeExamples) {
  const auto c = E(f2xz, "c");
  const auto one = GroupElement::identity(f2xz);
  auto [y, z] = decompose_axis(c, one, one);
  EXPECT_EQ(y, one);
  EXPECT_EQ(z, one);
  std::tie(y, z) = decompose_axis(c, one, power(c, 2));
  EXPECT_EQ(y, one);
  EXPECT_EQ(z, power(c, 2));
  std::tie(y, z) = decompose_axis(c, one, E(f2xz, "a c^2"));
  EXPECT_EQ(y.str(), "a");
  EXPECT_EQ(z.str(), "c^2");
  EXPECT_EQ((y * z).str(), "a c^2");
  EXPECT_THROW(decompose_axis(E(free2, "b"), GroupElement::identity(free2), E(free2, "a")), PreconditionError);
}

TEST_F(Arboreal, DirJoinExamples) {
  const auto w = E(free2, "b");
  const auto one = GroupElement::identity(free2);
  const auto x = E(free2, "a b^2");
  EXPECT_EQ(dir_join(w, one, x, x), x);
  EXPECT_EQ(dir_join(w, one, one, w), w);
  EXPECT_EQ(dir_join(w, one, E(free2, "a"), E(free2, "a^-1")), one);
  const auto a = E(free2, "a");
  ASSERT_TRUE(in_axis(E(free2, "a b"), a));
  EXPECT_EQ(dir_join(E(free2, "a b"), a, a, E(free2, "a b") * a), E(free2, "a b") * a);
}

TEST_F(Arboreal, QdirMatchesOracleOnSmallBalls) {
  for (const auto& g : all()) {
    const auto pts = ball(g, 2);
    for (const auto& w : ball(g, 1)) {
      const WContext ctx(w);
      const auto pre = [&](const GroupElement& x, const GroupElement& y) { return preceq(w, x, y); };
      for (const auto& x : pts) {
        for (const auto& y : pts) {
          ASSERT_EQ(qdir(ctx, x, y), oracle::qdir(x, y, pre)) << w.str() << ": " << x.str() << " . " << y.str();
        }
      }
    }
  }
}

TEST_F(Arboreal, BandLaws) {
  for (const auto& g : all()) {
    Sampler s(g, 3);
    for (int i = 0; i < 200; ++i) {
      const WContext ctx(s.element(3));
      const auto x = s.element(4), y = s.element(4), z = s.element(4);
      const auto xy = qdir(ctx, x, y);
      ASSERT_EQ(qdir(ctx, x, x), x);
      ASSERT_EQ(qdir(ctx, xy, z), qdir(ctx, x, qdir(ctx, y, z)));
      ASSERT_EQ(qdir(ctx, xy, z), qdir(ctx, qdir(ctx, x, z), y));
      ASSERT_TRUE(interval(x, y).contains(xy));
      ASSERT_EQ(equiv(ctx.w(), x, y), xy == qdir(ctx, y, x));
    }
  }
}

TEST_F(Arboreal, FoldIsGateOntoAxis) {
  for (const auto& g : all()) {
    Sampler s(g, 9);
    for (int i = 0; i < 100; ++i) {
      const auto w = s.nontrivial(3);
      const auto c = fold_phi(w, s.element(4));
      const auto x = s.element(4);
      std::set<GroupElement> on_axis;
      for (const auto& z : interval(c, x).elements) {
        if (in_axis(w, z)) on_axis.insert(z);
      }
      const auto hull = interval(c, fold_phi(w, x)).elements;
      ASSERT_EQ(on_axis, std::set<GroupElement>(hull.begin(), hull.end())) << w.str() << " " << x.str();
    }
  }
}

TEST_F(Arboreal, SliceAgreesWithUnionOfCells) {
  for (const auto& g : all()) {
    Sampler s(g, 21);
    for (int i = 0; i < 60; ++i) {
      const auto w = s.nontrivial(3);
      const auto a = fold_phi(w, s.element(3));
      std::set<GroupElement> slice;
      for (long long n = 0; n <= 4; ++n) {
        for (const auto& z : interval(power(w, -n) * a, power(w, n) * a).elements) slice.insert(z);
      }
      for (const auto& x : ball(g, 2)) {
        const auto ax = a * x;
        if ((invert(a) * ax).length() * 1 > 2) continue;
        ASSERT_EQ(in_axis_slice(w, a, ax), slice.count(ax) > 0) << w.str() << " " << a.str() << " " << ax.str();
        const auto p = psi_fold(w, a, ax);
        ASSERT_TRUE(in_axis_slice(w, a, p));
        ASSERT_EQ(psi_fold(w, a, p), p);
      }
    }
  }
}

TEST_F(Arboreal, DecompositionReconstructs) {
  for (const auto& g : all()) {
    Sampler s(g, 17);
    for (int i = 0; i < 200; ++i) {
      const auto w = s.nontrivial(3);
      const auto a = fold_phi(w, s.element(4));
      const auto x = fold_phi(w, s.element(5));
      const auto [y, z] = decompose_axis(w, a, x);
      ASSERT_EQ(y * invert(a) * z, x);
      ASSERT_EQ(z * invert(a) * y, x);
      ASSERT_TRUE(sim(w, y, a));
      ASSERT_TRUE(in_axis_slice(w, a, z));
    }
  }
}

TEST_F(Arboreal, DirJoinIsDirection) {
  for (const auto& g : all()) {
    Sampler s(g, 4);
    for (int i = 0; i < 200; ++i) {
      const auto w = s.element(3);
      const auto a = s.element(3), x = s.element(4), y = s.element(4), z = s.element(4);
      ASSERT_EQ(dir_join(w, a, x, x), x);
      ASSERT_EQ(dir_join(w, a, x, y), dir_join(w, a, y, x));
      ASSERT_EQ(dir_join(w, a, dir_join(w, a, x, y), z), dir_join(w, a, x, dir_join(w, a, y, z)));
    }
  }
}

}  // namespace
}  // namespace raag
