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

#include "raag/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "raag/arboreal.hpp"
#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/lattice.hpp"
#include "raag/random.hpp"
#include "raag/structure.hpp"

namespace raag {
namespace {

enum class Status { kPass, kFail, kVacuous, kInconclusive };

struct Outcome {
  Status status;
  Counterexample witness;
};

// A named value in a counterexample; rendered only on failure.
struct Item {
  Item(const char* k, const GroupElement& e) : key(k), elem(&e) {}
  Item(const char* k, long long v) : key(k), number(v) {}
  const char* key;
  const GroupElement* elem = nullptr;
  long long number = 0;
};

Outcome expect(bool ok, std::initializer_list<Item> items) {
  if (ok) return {Status::kPass, {}};
  Counterexample w;
  for (const auto& it : items) w.emplace_back(it.key, it.elem ? it.elem->str() : std::to_string(it.number));
  return {Status::kFail, std::move(w)};
}

Outcome vacuous() { return {Status::kVacuous, {}}; }
Outcome inconclusive() { return {Status::kInconclusive, {}}; }

// Per-sample environment.
struct Env {
  Sampler& s;
  const CheckConfig& cfg;

  const GraphPtr& g() const { return s.graph(); }
  GroupElement one() const { return GroupElement::identity(s.graph()); }
  GroupElement elem() { return s.element(cfg.max_len); }
  GroupElement elem(std::size_t cap) { return s.element(std::min(cap, cfg.max_len)); }
  GroupElement nontrivial() { return s.nontrivial(cfg.max_len); }
  GroupElement nontrivial(std::size_t cap) { return s.nontrivial(std::min(cap, cfg.max_len)); }
  long long between(long long lo, long long hi) { return s.rng().between(lo, hi); }
  bool coin() { return s.rng().coin(); }

  // A random point of [a, b], reached by a random geodesic walk.
  GroupElement point_between(const GroupElement& a, const GroupElement& b) {
    GroupElement cur = a;
    GroupElement rest = multiply(invert(a), b);
    auto steps = static_cast<std::size_t>(between(0, static_cast<long long>(rest.length())));
    for (std::size_t k = 0; k < steps; ++k) {
      auto fl = first_letters(rest);
      const GroupElement s1 = GroupElement::letter(g(), fl[s.rng().below(fl.size())]);
      cur = multiply(cur, s1);
      rest = multiply(invert(s1), rest);
    }
    return cur;
  }

  GroupElement prefix_of(const GroupElement& x) { return point_between(one(), x); }

  // A pair x ⪯_w y, or nothing after a few tries.
  std::optional<std::pair<GroupElement, GroupElement>> preceq_pair(const GroupElement& w) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      GroupElement x = elem();
      GroupElement y = coin() ? elem() : point_between(x, multiply(power(w, between(1, 3)), fold_phi(w, x)));
      if (preceq(w, x, y)) return std::make_pair(std::move(x), std::move(y));
    }
    return std::nullopt;
  }
};

using PropertyFn = std::function<Outcome(Env&)>;

struct PropertyDef {
  std::string name;
  PropertyFn fn;
  bool warn_only = false;
};

struct SuiteDef {
  std::string name;
  std::vector<PropertyDef> properties;
};

// ---------------------------------------------------------------- median

std::vector<PropertyDef> median_suite() {
  return {
      {"symmetry",
       [](Env& e) {
         auto x = e.elem(), y = e.elem(), z = e.elem();
         const auto m = median(x, y, z);
         return expect(m == median(y, x, z) && m == median(x, z, y), {{"x", x}, {"y", y}, {"z", z}});
       }},
      {"absorptive",
       [](Env& e) {
         auto x = e.elem(), y = e.elem();
         return expect(median(x, y, x) == x, {{"x", x}, {"y", y}});
       }},
      {"selfdistributive",
       [](Env& e) {
         auto x = e.elem(), y = e.elem(), z = e.elem(), u = e.elem(), v = e.elem();
         const auto lhs = median(median(x, y, z), u, v);
         const auto rhs = median(median(x, u, v), y, median(z, u, v));
         return expect(lhs == rhs, {{"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v}});
       }},
      {"median-on-geodesics",
       [](Env& e) {
         auto x = e.elem(), y = e.elem(), z = e.elem();
         const auto m = median(x, y, z);
         auto on = [&](const GroupElement& a, const GroupElement& b) {
           return distance(a, m) + distance(m, b) == distance(a, b);
         };
         return expect(on(x, y) && on(y, z) && on(x, z), {{"x", x}, {"y", y}, {"z", z}});
       }},
  };
}

// ---------------------------------------------------------------- A-group

std::vector<PropertyDef> agroup_suite() {
  return {
      {"A1",
       [](Env& e) {
         // x ∪ y exists and x^-1 ⊂ y^-1 imply x ⊂ y.
         for (int attempt = 0; attempt < 32; ++attempt) {
           auto y = e.elem();
           auto x = e.coin() ? invert(e.prefix_of(invert(y))) : e.prefix_of(y);
           if (!join(x, y) || !is_prefix(invert(x), invert(y))) continue;
           return expect(is_prefix(x, y), {{"x", x}, {"y", y}});
         }
         return vacuous();
       }},
      {"A2",
       [](Env& e) {
         // x ∩ y = x^-1 ∩ z = y^-1 ∩ z = 1 imply xz ∩ yz ⊂ z.
         for (int attempt = 0; attempt < 64; ++attempt) {
           auto x = e.elem(), y = e.elem(), z = e.elem();
           if (!meet(x, y).is_identity() || !meet(invert(x), z).is_identity() ||
               !meet(invert(y), z).is_identity()) {
             continue;
           }
           return expect(is_prefix(meet(multiply(x, z), multiply(y, z)), z), {{"x", x}, {"y", y}, {"z", z}});
         }
         return vacuous();
       }},
      {"A4",
       [](Env& e) {
         auto x = e.elem();
         return expect(!join(x, invert(x)) || x.is_identity(), {{"x", x}});
       }},
      {"orthogonal-law",
       [](Env& e) {
         auto x = e.elem();
         auto y = e.s.over(s_perp_mask(x), e.cfg.max_len);
         if (!is_orthogonal_by_definition(x, y)) return expect(false, {{"x", x}, {"y", y}});
         const auto xy = multiply(x, y);
         const auto j = join(x, y);
         return expect(xy == multiply(y, x) && j && *j == xy, {{"x", x}, {"y", y}});
       }},
      {"orthogonal-fast-path",
       [](Env& e) {
         auto x = e.elem();
         auto y = e.coin() ? e.elem() : e.s.over(s_perp_mask(x) | (GeneratorMask{1} << e.s.rng().below(e.g()->size())),
                                                 e.cfg.max_len);
         return expect(is_orthogonal(x, y) == is_orthogonal_by_definition(x, y), {{"x", x}, {"y", y}});
       }},
      {"meet-greatest",
       [](Env& e) {
         auto x = e.elem();
         auto y = e.coin() ? e.elem() : multiply(e.prefix_of(x), e.elem());
         const auto m = meet(x, y);
         const auto rx = multiply(invert(m), x), ry = multiply(invert(m), y);
         bool ok = is_prefix(m, x) && is_prefix(m, y);
         const auto fx = first_letters(rx), fy = first_letters(ry);
         for (auto s : fx) ok = ok && std::find(fy.begin(), fy.end(), s) == fy.end();
         return expect(ok, {{"x", x}, {"y", y}});
       }},
  };
}

// ---------------------------------------------------------------- cyclic

std::vector<PropertyDef> cyclic_suite() {
  return {
      {"power-meet-invariance",
       [](Env& e) {
         auto w = e.elem();
         long long n = e.between(1, 4), m = e.between(1, 4);
         return expect(meet(power(w, n), power(w, -m)) == meet(w, invert(w)), {{"w", w}, {"n", n}, {"m", m}});
       }},
      {"power-cyclically-reduced",
       [](Env& e) {
         auto w = e.elem();
         long long n = e.between(1, 3) * (e.coin() ? 1 : -1);
         return expect(is_cyclically_reduced(power(w, n)) == is_cyclically_reduced(w), {{"w", w}, {"n", n}});
       }},
      {"torsion-free",
       [](Env& e) {
         auto w = e.nontrivial();
         long long n = e.between(2, 4);
         return expect(!power(w, n).is_identity(), {{"w", w}, {"n", n}});
       }},
      {"power-length",
       [](Env& e) {
         auto w = e.elem();
         long long n = e.between(1, 5);
         const auto r = cyclic_reduce(w);
         return expect(power(w, n).length() == 2 * r.u.length() + static_cast<std::size_t>(n) * r.v.length(),
                       {{"w", w}, {"n", n}});
       }},
      {"cyclic-reduction",
       [](Env& e) {
         auto w = e.elem();
         const auto r = cyclic_reduce(w);
         const bool ok = is_cyclically_reduced(r.v) && multiply(multiply(r.u, r.v), invert(r.u)) == w &&
                         w.length() == 2 * r.u.length() + r.v.length() && r.u == meet(w, invert(w));
         return expect(ok, {{"w", w}});
       }},
      {"conjugacy-certificate",
       [](Env& e) {
         auto w = e.elem(), x = e.elem();
         const auto w2 = multiply(multiply(x, w), invert(x));
         const auto res = conjugacy(w, w2, e.cfg.conj_cap);
         const bool ok = res.conjugate && res.certificate &&
                         multiply(multiply(invert(*res.certificate), w), *res.certificate) == w2;
         return expect(ok, {{"w1", w}, {"w2", w2}});
       }},
      {"conjugacy-invariant",
       [](Env& e) {
         // Conjugate elements have cyclic cores with equal letter multisets.
         auto w1 = e.elem(), w2 = e.elem();
         const bool c = are_conjugate(w1, w2, e.cfg.conj_cap);
         const bool same_counts = letter_counts(cyclic_reduce(w1).v) == letter_counts(cyclic_reduce(w2).v);
         return expect(!c || same_counts, {{"w1", w1}, {"w2", w2}});
       }},
      {"roots",
       [](Env& e) {
         auto x = e.nontrivial(std::max<std::size_t>(1, e.cfg.max_len / 2));
         long long m = e.between(2, 3);
         const auto r = mth_root(power(x, m), static_cast<std::size_t>(m));
         const auto [p, k] = max_root(x);
         const bool ok = r && *r == x && power(p, static_cast<long long>(k)) == x && max_root(p).second == 1;
         return expect(ok, {{"x", x}, {"m", m}});
       }},
  };
}

// ---------------------------------------------------------------- preorder

std::vector<PropertyDef> preorder_suite() {
  return {
      {"reflexive",
       [](Env& e) {
         auto w = e.elem(), x = e.elem();
         return expect(preceq(w, x, x), {{"w", w}, {"x", x}});
       }},
      {"transitive",
       [](Env& e) {
         auto w = e.elem();
         auto p = e.preceq_pair(w);
         if (!p) return vacuous();
         const auto& [x, y] = *p;
         auto z = e.point_between(y, multiply(power(w, e.between(1, 3)), fold_phi(w, y)));
         if (!preceq(w, y, z)) return vacuous();
         return expect(preceq(w, x, z), {{"w", w}, {"x", x}, {"y", y}, {"z", z}});
       }},
      {"symmetrization",
       [](Env& e) {
         // ∼_w is the symmetric part of ⪯_w.
         auto w = e.elem(), x = e.elem();
         GroupElement y = e.elem();
         if (e.coin()) {
           const auto wx = multiply(multiply(invert(x), w), x);
           y = multiply(x, e.s.over(s_perp_mask(wx), e.cfg.max_len));
         }
         return expect(sim(w, x, y) == (preceq(w, x, y) && preceq(w, y, x)), {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"convex",
       [](Env& e) {
         auto w = e.elem();
         auto p = e.preceq_pair(w);
         if (!p) return vacuous();
         const auto& [x, y] = *p;
         auto z = e.point_between(x, y);
         return expect(preceq(w, x, z) && preceq(w, z, y), {{"w", w}, {"x", x}, {"y", y}, {"z", z}});
       }},
      {"median-compatible",
       [](Env& e) {
         auto w = e.elem();
         auto p = e.preceq_pair(w);
         if (!p) return vacuous();
         const auto& [y, x] = *p;
         auto a = e.elem(), b = e.elem();
         return expect(preceq(w, median(a, b, y), median(a, b, x)), {{"w", w}, {"y", y}, {"x", x}, {"a", a}, {"b", b}});
       }},
      {"class-of-identity",
       [](Env& e) {
         auto w = e.elem();
         auto x = e.coin() ? e.elem() : e.s.over(s_perp_mask(w), e.cfg.max_len);
         auto y = e.s.over(s_perp_mask(w), e.cfg.max_len);
         const auto one = e.one();
         const bool ok = sim(w, x, one) == is_orthogonal(x, w) && sim(w, y, one) &&
                         (!sim(w, x, one) || sim(w, multiply(x, y), one));
         return expect(ok, {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"conjugation-equivariant",
       [](Env& e) {
         auto w = e.elem(), x = e.elem(), y = e.elem(), z = e.elem();
         const auto zw = multiply(multiply(z, w), invert(z));
         return expect(preceq(w, x, y) == preceq(zw, multiply(z, x), multiply(z, y)),
                       {{"w", w}, {"x", x}, {"y", y}, {"z", z}});
       }},
  };
}

// ---------------------------------------------------------------- folding

// Shorter w for properties that enumerate cells of size exponential in l(w).
constexpr std::size_t kShortW = 5;

std::vector<PropertyDef> folding_suite() {
  return {
      {"fixed-points",
       [](Env& e) {
         auto w = e.elem();
         auto x = e.coin() ? e.elem() : multiply(fold_phi(w, e.elem()), e.elem(2));
         return expect((fold_phi(w, x) == x) == in_axis(w, x), {{"w", w}, {"x", x}});
       }},
      {"image-is-axis",
       [](Env& e) {
         auto w = e.elem(), x = e.elem();
         const auto p = fold_phi(w, x);
         return expect(in_axis(w, p) && fold_phi(w, p) == p, {{"w", w}, {"x", x}});
       }},
      {"median-morphism",
       [](Env& e) {
         auto w = e.elem(), x = e.elem(), y = e.elem(), z = e.elem();
         return expect(fold_phi(w, median(x, y, z)) == median(fold_phi(w, x), fold_phi(w, y), fold_phi(w, z)),
                       {{"w", w}, {"x", x}, {"y", y}, {"z", z}});
       }},
      {"gate",
       [](Env& e) {
         // [c, x] ∩ X_w = [c, φ_w(x)] for c on the axis.
         auto w = e.elem(), x = e.elem(), r = e.elem();
         const auto c = fold_phi(w, r);
         Interval big = interval(c, x, e.cfg.interval_cap);
         std::vector<GroupElement> on_axis;
         for (const auto& z : big.elements) {
           if (in_axis(w, z)) on_axis.push_back(z);
         }
         return expect(on_axis == interval(c, fold_phi(w, x), e.cfg.interval_cap).elements,
                       {{"w", w}, {"x", x}, {"r", r}});
       }},
      {"fold-below",
       [](Env& e) {
         auto w = cyclic_reduce(e.elem()).v;
         auto x = e.elem();
         return expect(is_prefix(fold_phi(w, x), x), {{"w", w}, {"x", x}});
       }},
      {"inverse-preorder",
       [](Env& e) {
         auto w = e.elem();
         auto x = fold_phi(w, e.elem());
         auto y = e.coin() ? fold_phi(w, e.elem()) : fold_phi(w, e.point_between(x, multiply(power(w, 2), x)));
         return expect(preceq(w, x, y) == preceq(invert(w), y, x), {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"translate-along-axis",
       [](Env& e) {
         auto w = e.elem(kShortW);
         auto x = fold_phi(w, e.elem());
         return expect(ll(w, x, multiply(w, x), e.cfg.interval_cap), {{"w", w}, {"x", x}});
       }},
      {"power-invariance",
       [](Env& e) {
         auto w = e.elem(std::max<std::size_t>(1, e.cfg.max_len / 2)), x = e.elem();
         long long n = e.between(1, 3) * (e.coin() ? 1 : -1);
         return expect(fold_phi(power(w, n), x) == fold_phi(w, x), {{"w", w}, {"x", x}, {"n", n}});
       }},
      {"fold-dominates",
       [](Env& e) {
         auto w = e.elem(kShortW), x = e.elem();
         return expect(ll(w, x, fold_phi(w, x), e.cfg.interval_cap), {{"w", w}, {"x", x}});
       }},
  };
}

// ---------------------------------------------------------------- qdir

constexpr std::size_t kOracleW = 3;
constexpr std::size_t kOracleSpan = 4;

std::vector<PropertyDef> qdir_suite() {
  return {
      {"oracle",
       [](Env& e) {
         auto w = e.elem(kOracleW), x = e.elem();
         auto y = multiply(x, e.elem(kOracleSpan));
         const auto want = oracle_qdir(
             x, y, [&](const GroupElement& a, const GroupElement& b) { return preceq(w, a, b); },
             e.cfg.interval_cap);
         return expect(qdir(w, x, y) == want, {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"in-cell",
       [](Env& e) {
         auto w = e.elem(), x = e.elem(), y = e.elem();
         const auto q = qdir(w, x, y);
         return expect(distance(x, q) + distance(q, y) == distance(x, y) && qdir(w, x, x) == x,
                       {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"band-associative",
       [](Env& e) {
         auto w = e.elem(), a = e.elem(), b = e.elem(), c = e.elem();
         const WContext ctx(w);
         return expect(qdir(ctx, qdir(ctx, a, b), c) == qdir(ctx, a, qdir(ctx, b, c)),
                       {{"w", w}, {"a", a}, {"b", b}, {"c", c}});
       }},
      {"band-left-normal",
       [](Env& e) {
         auto w = e.elem(), a = e.elem(), b = e.elem(), c = e.elem();
         const WContext ctx(w);
         return expect(qdir(ctx, qdir(ctx, a, b), c) == qdir(ctx, qdir(ctx, a, c), b),
                       {{"w", w}, {"a", a}, {"b", b}, {"c", c}});
       }},
      {"left-translation-folds",
       [](Env& e) {
         auto w = e.elem(), a = e.elem(), x = e.elem(), y = e.elem(), z = e.elem();
         const WContext ctx(w);
         return expect(qdir(ctx, a, median(x, y, z)) == median(qdir(ctx, a, x), y, qdir(ctx, a, z)),
                       {{"w", w}, {"a", a}, {"x", x}, {"y", y}, {"z", z}});
       }},
      {"right-absorption",
       [](Env& e) {
         auto w = e.elem(), x = e.elem(), y = e.elem(), z = e.elem();
         const WContext ctx(w);
         return expect(qdir(ctx, median(x, y, z), x) == median(x, y, qdir(ctx, z, x)),
                       {{"w", w}, {"x", x}, {"y", y}, {"z", z}});
       }},
      {"commuting-pairs",
       [](Env& e) {
         // x ≡_w y iff x ∙ y = y ∙ x.
         auto w = e.elem(kOracleW), x = e.elem();
         auto y = multiply(x, e.elem(kOracleSpan));
         const WContext ctx(w);
         return expect(equiv(w, x, y, e.cfg.interval_cap) == (qdir(ctx, x, y) == qdir(ctx, y, x)),
                       {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"two-sided-folding",
       [](Env& e) {
         // φ_w read as a quasidirection joins ∙_w and ∙_{w^-1}.
         auto w = e.elem(), x = e.elem(), y = e.elem();
         const auto lhs = median(qdir(w, x, y), qdir(invert(w), x, y), x);
         return expect(lhs == median(x, y, fold_phi(w, x)), {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"slice",
       [](Env& e) {
         auto w = e.elem(), r = e.elem(), x = e.elem();
         const auto a = fold_phi(w, r);
         const auto z = psi_fold(w, a, x);
         long long n = e.between(-2, 2);
         const bool ok = in_axis_slice(w, a, z) && psi_fold(w, a, z) == z &&
                         in_axis_slice(w, a, multiply(power(w, n), a)) && (in_axis_slice(w, a, x) == (z == x));
         return expect(ok, {{"w", w}, {"r", r}, {"x", x}, {"n", n}});
       }},
      {"slice-commutative",
       [](Env& e) {
         auto w = e.elem(), r = e.elem();
         const auto a = fold_phi(w, r);
         const auto x = psi_fold(w, a, e.elem()), y = psi_fold(w, a, e.elem());
         return expect(qdir(w, x, y) == qdir(w, y, x), {{"w", w}, {"r", r}, {"x", x}, {"y", y}});
       }},
      {"orbit-hull",
       [](Env& e) {
         // Every axis point sits between two centralizer translates of a.
         auto w = e.elem(), r = e.elem(), s = e.elem();
         const auto a = fold_phi(w, r), x = fold_phi(w, s);
         const auto y = psi_fold(w, a, x);
         const long long n = static_cast<long long>(distance(a, y)) + 1;
         const auto xy = multiply(x, invert(y));
         const auto u = multiply(xy, power(w, -n)), v = multiply(xy, power(w, n));
         const auto ua = multiply(u, a), va = multiply(v, a);
         const bool ok = sim(w, x, y) && in_centralizer(w, u) && in_centralizer(w, v) &&
                         distance(ua, x) + distance(x, va) == distance(ua, va);
         return expect(ok, {{"w", w}, {"r", r}, {"s", s}});
       }},
      {"axis-product",
       [](Env& e) {
         auto w = e.elem(), r = e.elem(), s = e.elem();
         const auto a = fold_phi(w, r), x = fold_phi(w, s);
         const auto [y, z] = decompose_axis(w, a, x);
         const auto ai = invert(a);
         const bool ok = multiply(multiply(y, ai), z) == x && multiply(multiply(z, ai), y) == x &&
                         in_axis_slice(w, a, z) && sim(w, y, a);
         return expect(ok, {{"w", w}, {"r", r}, {"s", s}});
       }},
      {"direction",
       [](Env& e) {
         auto w = e.elem(), a = e.elem(), x = e.elem(), y = e.elem(), z = e.elem();
         const auto xy = dir_join(w, a, x, y);
         const bool ok = dir_join(w, a, x, x) == x && xy == dir_join(w, a, y, x) &&
                         dir_join(w, a, xy, z) == dir_join(w, a, x, dir_join(w, a, y, z));
         return expect(ok, {{"w", w}, {"a", a}, {"x", x}, {"y", y}, {"z", z}});
       }},
      {"ray",
       [](Env& e) {
         auto w = e.elem(kShortW), r = e.elem();
         const auto a = fold_phi(w, r);
         auto x = e.coin() ? e.elem() : e.point_between(a, multiply(power(w, e.between(1, 2)), a));
         auto y = e.point_between(a, multiply(power(w, e.between(1, 2)), a));
         const bool on_ray = ll(w, a, x, e.cfg.interval_cap);
         bool ok = on_ray == (dir_join(w, a, a, x) == x);
         if (on_ray && ll(w, a, y, e.cfg.interval_cap)) ok = ok && dir_join(w, a, x, y) == qdir(w, x, y);
         return expect(ok, {{"w", w}, {"r", r}, {"x", x}, {"y", y}});
       }},
  };
}

// ---------------------------------------------------------------- structure

std::vector<PropertyDef> structure_suite() {
  return {
      {"decomposition",
       [](Env& e) {
         auto w = e.nontrivial();
         const auto d = prim_decompose(w);
         const auto ai = invert(d.conjugator);
         bool ok = d.product() == w && !d.pairs.empty();
         for (std::size_t i = 0; i < d.pairs.size(); ++i) {
           ok = ok && is_primitive(d.pairs[i].p) && d.pairs[i].m >= 1;
           if (i > 0) ok = ok && d.pairs[i - 1].p < d.pairs[i].p;
           for (std::size_t j = i + 1; j < d.pairs.size(); ++j) {
             ok = ok && is_orthogonal(multiply(multiply(ai, d.pairs[i].p), d.conjugator),
                                      multiply(multiply(ai, d.pairs[j].p), d.conjugator));
           }
         }
         return expect(ok, {{"w", w}});
       }},
      {"decomposition-equivariant",
       [](Env& e) {
         auto w = e.nontrivial(), x = e.elem();
         const auto xi = invert(x);
         const auto d1 = prim_decompose(w);
         const auto d2 = prim_decompose(multiply(multiply(x, w), xi));
         std::vector<std::pair<GroupElement, std::size_t>> moved, got;
         for (const auto& [p, m] : d1.pairs) moved.emplace_back(multiply(multiply(x, p), xi), m);
         for (const auto& [p, m] : d2.pairs) got.emplace_back(p, m);
         std::sort(moved.begin(), moved.end());
         std::sort(got.begin(), got.end());
         return expect(moved == got, {{"w", w}, {"x", x}});
       }},
      {"power-centralizer",
       [](Env& e) {
         auto w = e.nontrivial();
         long long m = e.between(2, 3);
         GroupElement x = e.elem(3);
         if (e.coin()) {
           const auto c = centralizer(w);
           std::vector<GroupElement> gens = c.raag_generators;
           gens.insert(gens.end(), c.abelian_generators.begin(), c.abelian_generators.end());
           x = e.one();
           for (int k = 0; k < 3 && !gens.empty(); ++k) {
             x = multiply(x, power(gens[e.s.rng().below(gens.size())], e.coin() ? 1 : -1));
           }
         }
         return expect(in_centralizer(power(w, m), x) == in_centralizer(w, x), {{"w", w}, {"m", m}, {"x", x}});
       }},
      {"unique-roots",
       [](Env& e) {
         auto x = e.elem(), y = e.coin() ? e.elem() : multiply(x, e.elem(2));
         long long m = e.between(2, 3);
         if (x == y) return vacuous();
         return expect(power(x, m) != power(y, m), {{"x", x}, {"y", y}, {"m", m}});
       }},
      {"centralizer-sound",
       [](Env& e) {
         auto w = e.nontrivial();
         const auto c = centralizer(w);
         bool ok = c.abelian_generators == primitives(w);
         for (const auto& g : c.raag_generators) ok = ok && in_centralizer(w, g);
         for (const auto& g : c.abelian_generators) ok = ok && in_centralizer(w, g);
         return expect(ok, {{"w", w}});
       }},
      {"centralizer-complete",
       [](Env& e) -> Outcome {
         // Every commuting x of length <= 3 lies in the generated subgroup,
         // searched after conjugating back to the cyclic core.
         auto w = e.nontrivial();
         const auto c = centralizer(w);
         const auto a = cyclic_reduce(w).u;
         const auto ai = invert(a);
         std::vector<GroupElement> gens;
         for (const auto& g : c.raag_generators) gens.push_back(multiply(multiply(ai, g), a));
         for (const auto& g : c.abelian_generators) gens.push_back(multiply(multiply(ai, g), a));
         bool unresolved = false;
         for (const auto& x : ball(e.g(), 3, e.cfg.interval_cap)) {
           if (!in_centralizer(w, x)) continue;
           const auto core_x = multiply(multiply(ai, x), a);
           const Membership m = subgroup_member(gens, core_x, core_x.length() + 2, e.cfg.interval_cap);
           if (m == Membership::kNo) return expect(false, {{"w", w}, {"x", x}});
           if (m == Membership::kInconclusive) unresolved = true;
         }
         return unresolved ? inconclusive() : expect(true, {});
       }},
      {"axes-intersect",
       [](Env& e) {
         auto w = e.nontrivial();
         auto x = e.coin() ? e.elem(4) : fold_phi(w, e.elem());
         bool all = true;
         for (const auto& p : primitives(w)) all = all && in_axis(p, x);
         return expect(in_axis(w, x) == all, {{"w", w}, {"x", x}});
       }},
      {"foldings-compose",
       [](Env& e) {
         auto w = e.nontrivial(), x = e.elem();
         const auto prims = primitives(w);
         GroupElement fwd = x, bwd = x;
         for (const auto& p : prims) fwd = fold_phi(p, fwd);
         for (auto it = prims.rbegin(); it != prims.rend(); ++it) bwd = fold_phi(*it, bwd);
         const auto want = fold_phi(w, x);
         return expect(fwd == want && bwd == want, {{"w", w}, {"x", x}});
       }},
      {"preorders-intersect",
       [](Env& e) {
         auto w = e.nontrivial();
         auto p = e.preceq_pair(w);
         GroupElement x = p ? p->first : e.elem();
         GroupElement y = p && e.coin() ? p->second : e.elem();
         bool all = true;
         for (const auto& q : primitives(w)) all = all && preceq(q, x, y);
         return expect(preceq(w, x, y) == all, {{"w", w}, {"x", x}, {"y", y}});
       }},
      {"commuting-sublattice",
       [](Env& e) {
         auto x = e.elem();
         const auto cell = interval(e.one(), x, e.cfg.interval_cap);
         std::vector<GroupElement> zs;
         for (const auto& y : cell.elements) {
           if (in_centralizer(x, y)) zs.push_back(y);
         }
         auto inside = [&](const GroupElement& z) { return std::binary_search(zs.begin(), zs.end(), z); };
         for (const auto& y : zs) {
           for (const auto& z : zs) {
             if (!inside(meet(y, z)) || !inside(median(y, x, z))) return expect(false, {{"x", x}, {"y", y}, {"z", z}});
           }
         }
         return expect(true, {});
       }},
      {"orthogonal-factors",
       [](Env& e) {
         auto w = e.elem();
         for (int attempt = 0; attempt < 16; ++attempt) {
           auto x = e.prefix_of(w), y = e.prefix_of(w);
           if (!is_orthogonal(x, y)) continue;
           return expect(in_centralizer(w, multiply(x, y)) == (in_centralizer(w, x) && in_centralizer(w, y)),
                         {{"w", w}, {"x", x}, {"y", y}});
         }
         return vacuous();
       }},
      {"primitive-fast-path",
       [](Env& e) {
         auto w = e.elem();
         return expect(is_primitive(w) == is_primitive_by_boundary(w, e.cfg.interval_cap), {{"w", w}});
       }},
      {"stabilizer",
       [](Env& e) -> Outcome {
         // Commuting x stabilize φ_w; for non-commuting x a moved point is
         // searched in a small ball, and not finding one is inconclusive.
         auto w = e.nontrivial(), x = e.elem(4), y = e.elem();
         const bool commutes = in_centralizer(w, x);
         if (commutes) {
           return expect(fold_phi(w, multiply(x, y)) == multiply(x, fold_phi(w, y)), {{"w", w}, {"x", x}, {"y", y}});
         }
         for (const auto& z : ball(e.g(), 2)) {
           if (fold_phi(w, multiply(x, z)) != multiply(x, fold_phi(w, z))) return expect(true, {});
         }
         return inconclusive();
       },
       true},
  };
}

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> all = {
      {"median-axioms", median_suite()}, {"agroup-axioms", agroup_suite()}, {"cyclic", cyclic_suite()},
      {"preorder", preorder_suite()},    {"folding", folding_suite()},      {"qdir", qdir_suite()},
      {"structure", structure_suite()},
  };
  return all;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Task {
  const SuiteDef* suite;
  const PropertyDef* prop;
  std::size_t shard;
  std::size_t samples;
};

PropertyReport run_task(const GraphPtr& graph, const Task& t, const CheckConfig& cfg) {
  PropertyReport r;
  r.samples = t.samples;
  Sampler sampler(graph, derive_seed(cfg.seed, name_hash(t.suite->name + "/" + t.prop->name) + t.shard));
  Env env{sampler, cfg};
  for (std::size_t i = 0; i < t.samples; ++i) {
    Outcome o;
    try {
      o = t.prop->fn(env);
    } catch (const ResourceError&) {
      o = inconclusive();
    } catch (const std::exception& ex) {
      o = {Status::kFail, {{"error", ex.what()}}};
    }
    switch (o.status) {
      case Status::kPass:
        ++r.passed;
        break;
      case Status::kVacuous:
        ++r.vacuous;
        break;
      case Status::kInconclusive:
        ++r.inconclusive;
        break;
      case Status::kFail:
        ++r.failures;
        if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(o.witness));
        break;
    }
  }
  return r;
}

}  // namespace

std::size_t CheckReport::hard_failures() const {
  std::size_t n = 0;
  for (const auto& p : properties) {
    if (!p.warn_only) n += p.failures;
  }
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::vector<std::string> property_names(const std::string& suite) {
  for (const auto& s : suites()) {
    if (s.name != suite) continue;
    std::vector<std::string> out;
    for (const auto& p : s.properties) out.push_back(p.name);
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

CheckReport run_checks(const GraphPtr& graph, const std::string& suite, const CheckConfig& config) {
  std::vector<const SuiteDef*> chosen;
  for (const auto& s : suites()) {
    if (suite == "all" || s.name == suite) chosen.push_back(&s);
  }
  if (chosen.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");

  std::vector<Task> tasks;
  for (const SuiteDef* s : chosen) {
    for (const auto& p : s->properties) {
      for (std::size_t k = 0; k < kShards; ++k) {
        const std::size_t n = config.samples / kShards + (k < config.samples % kShards ? 1 : 0);
        tasks.push_back({s, &p, k, n});
      }
    }
  }

  std::vector<PropertyReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_task(graph, tasks[i], config);
  };
  const std::size_t n_workers = std::max<std::size_t>(1, std::min(config.workers, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n_workers; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CheckReport report;
  for (std::size_t i = 0; i < tasks.size(); i += kShards) {
    PropertyReport merged;
    merged.suite = tasks[i].suite->name;
    merged.property = tasks[i].prop->name;
    merged.warn_only = tasks[i].prop->warn_only;
    for (std::size_t k = 0; k < kShards; ++k) {
      auto& r = results[i + k];
      merged.samples += r.samples;
      merged.passed += r.passed;
      merged.vacuous += r.vacuous;
      merged.inconclusive += r.inconclusive;
      merged.failures += r.failures;
      for (auto& c : r.counterexamples) {
        if (merged.counterexamples.size() < kMaxCounterexamples) merged.counterexamples.push_back(std::move(c));
      }
    }
    report.properties.push_back(std::move(merged));
  }
  return report;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json props = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    nlohmann::ordered_json ces = nlohmann::ordered_json::array();
    for (const auto& c : p.counterexamples) {
      nlohmann::ordered_json rec = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c) rec[k] = v;
      ces.push_back(std::move(rec));
    }
    props.push_back({{"suite", p.suite},
                     {"property", p.property},
                     {"warn_only", p.warn_only},
                     {"samples", p.samples},
                     {"passed", p.passed},
                     {"vacuous", p.vacuous},
                     {"inconclusive", p.inconclusive},
                     {"failures", p.failures},
                     {"counterexamples", std::move(ces)}});
  }
  return {{"ok", report.ok()}, {"hard_failures", report.hard_failures()}, {"properties", std::move(props)}};
}

}  // namespace raag
