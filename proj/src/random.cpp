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

#include "raag/random.hpp"

#include <algorithm>
#include <vector>

namespace raag {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) { return mix64(mix64(seed) ^ mix64(~stream)); }

std::uint64_t Rng::below(std::uint64_t n) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    const std::uint64_t r = next();
    if (r < limit) return r % n;
  }
}

long long Rng::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

// Would appending s to the reduced word w cancel?
bool cancels(const Word& w, SignedLetter s, const CommutationGraph& g) {
  const GeneratorMask block = g.blocking(s.gen);
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k].gen == s.gen) return w[k].sign != s.sign;
    if (block & (GeneratorMask{1} << w[k].gen)) return false;
  }
  return false;
}

Word draw_reduced(Rng& rng, const std::vector<SignedLetter>& alphabet, std::size_t length,
                  const CommutationGraph& g) {
  // Restarting on the first cancellation is rejection sampling over all
  // words of this length, conditioned on being reduced.
  Word w;
  while (w.size() < length) {
    const SignedLetter s = alphabet[rng.below(alphabet.size())];
    if (cancels(w, s, g)) {
      w.clear();
      continue;
    }
    w.push_back(s);
  }
  return w;
}

}  // namespace

GroupElement Sampler::exact(std::size_t length) { return draw(graph_->all_generators(), length); }

GroupElement Sampler::element(std::size_t max_len) {
  return exact(static_cast<std::size_t>(rng_.below(max_len + 1)));
}

GroupElement Sampler::nontrivial(std::size_t max_len) {
  return exact(1 + static_cast<std::size_t>(rng_.below(std::max<std::size_t>(max_len, 1))));
}

GroupElement Sampler::letter() { return exact(1); }

GroupElement Sampler::over(GeneratorMask gens, std::size_t max_len) {
  return draw(gens, static_cast<std::size_t>(rng_.below(max_len + 1)));
}

GroupElement Sampler::draw(GeneratorMask gens, std::size_t length) {
  std::vector<SignedLetter> alphabet;
  for (std::size_t g = 0; g < graph_->size(); ++g) {
    if (!(gens & (GeneratorMask{1} << g))) continue;
    alphabet.push_back(SignedLetter{static_cast<std::uint16_t>(g), 1});
    alphabet.push_back(SignedLetter{static_cast<std::uint16_t>(g), -1});
  }
  if (alphabet.empty()) return GroupElement::identity(graph_);
  return from_reduced(draw_reduced(rng_, alphabet, length, *graph_), graph_);
}

}  // namespace raag
