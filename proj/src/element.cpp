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

#include "raag/element.hpp"

#include <algorithm>

#include "raag/errors.hpp"

namespace raag {

GroupElement::GroupElement(GraphPtr graph) : graph_(std::move(graph)) {
  if (!graph_) throw std::invalid_argument("null commutation graph");
}

GroupElement GroupElement::letter(GraphPtr graph, SignedLetter s) {
  if (!graph || s.gen >= graph->size() || (s.sign != 1 && s.sign != -1)) {
    throw std::invalid_argument("invalid signed letter");
  }
  return GroupElement(std::move(graph), Word{s});
}

GroupElement GroupElement::generator(GraphPtr graph, std::size_t gen, int sign) {
  return letter(std::move(graph), SignedLetter{static_cast<std::uint16_t>(gen),
                                               static_cast<std::int8_t>(sign < 0 ? -1 : 1)});
}

GroupElement GroupElement::parse(GraphPtr graph, std::string_view text) {
  Word w = parse_word(text, *graph);
  return normalize(w, std::move(graph));
}

// A letter s cancels against the most recent letter of its own generator
// provided everything stacked after that letter commutes with s. Scanning
// back from the end, the first letter that either shares s's generator or
// fails to commute with it decides.
Word reduce_word(std::span<const SignedLetter> word, const CommutationGraph& graph) {
  Word out;
  out.reserve(word.size());
  for (SignedLetter s : word) {
    bool cancelled = false;
    const GeneratorMask block = graph.blocking(s.gen);
    for (std::size_t k = out.size(); k-- > 0;) {
      const SignedLetter t = out[k];
      if (t.gen == s.gen) {
        if (t.sign != s.sign) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
          cancelled = true;
        }
        break;
      }
      if (block & (GeneratorMask{1} << t.gen)) break;
    }
    if (!cancelled) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> first_letter_positions(const Word& reduced, const CommutationGraph& graph) {
  std::vector<std::size_t> positions;
  GeneratorMask blocked = 0;
  const GeneratorMask all = graph.all_generators();
  for (std::size_t k = 0; k < reduced.size() && blocked != all; ++k) {
    const auto gen = reduced[k].gen;
    if (!(blocked & (GeneratorMask{1} << gen))) positions.push_back(k);
    blocked |= graph.blocking(gen);
  }
  return positions;
}

// Greedy extraction of the least minimal letter yields the lexicographically
// least linearization of the trace.
Word canonical_order(Word reduced, const CommutationGraph& graph) {
  Word out;
  out.reserve(reduced.size());
  const GeneratorMask all = graph.all_generators();
  while (!reduced.empty()) {
    GeneratorMask blocked = 0;
    std::size_t best = reduced.size();
    for (std::size_t k = 0; k < reduced.size() && blocked != all; ++k) {
      const auto s = reduced[k];
      if (!(blocked & (GeneratorMask{1} << s.gen)) && (best == reduced.size() || s < reduced[best])) {
        best = k;
      }
      blocked |= graph.blocking(s.gen);
    }
    out.push_back(reduced[best]);
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

GroupElement from_reduced(Word reduced, GraphPtr graph) {
  Word canonical = canonical_order(std::move(reduced), *graph);
  return GroupElement(std::move(graph), std::move(canonical));
}

GroupElement normalize(const Word& word, GraphPtr graph) {
  if (!graph) throw std::invalid_argument("null commutation graph");
  for (auto s : word) {
    if (s.gen >= graph->size() || (s.sign != 1 && s.sign != -1)) {
      throw std::invalid_argument("letter not valid for this graph");
    }
  }
  Word reduced = reduce_word(word, *graph);
  return from_reduced(std::move(reduced), std::move(graph));
}

void require_same_graph(const GroupElement& x, const GroupElement& y) {
  if (!x.same_graph(y)) throw GraphMismatch();
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  if (y.is_identity()) return x;
  if (x.is_identity()) return y;
  Word joined;
  joined.reserve(x.length() + y.length());
  joined.insert(joined.end(), x.letters().begin(), x.letters().end());
  joined.insert(joined.end(), y.letters().begin(), y.letters().end());
  return from_reduced(reduce_word(joined, x.graph()), x.graph_ptr());
}

GroupElement invert(const GroupElement& x) {
  Word w;
  w.reserve(x.length());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) w.push_back(it->inverse());
  // The reversed inverse of a reduced word is reduced.
  return from_reduced(std::move(w), x.graph_ptr());
}

GroupElement power(const GroupElement& x, long long n) {
  GroupElement base = n < 0 ? invert(x) : x;
  unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  GroupElement result = GroupElement::identity(x.graph_ptr());
  while (e > 0) {
    if (e & 1ULL) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

std::vector<SignedLetter> first_letters(const GroupElement& x) {
  std::vector<SignedLetter> out;
  for (auto k : first_letter_positions(x.letters(), x.graph())) out.push_back(x.letters()[k]);
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorMask support_mask(const GroupElement& x) {
  GeneratorMask m = 0;
  for (auto s : x.letters()) m |= GeneratorMask{1} << s.gen;
  return m;
}

std::vector<std::size_t> support(const GroupElement& x) {
  std::vector<std::size_t> out;
  const GeneratorMask m = support_mask(x);
  for (std::size_t g = 0; g < x.graph().size(); ++g) {
    if (m & (GeneratorMask{1} << g)) out.push_back(g);
  }
  return out;
}

bool equal(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  return x.letters() == y.letters();
}

std::vector<std::size_t> letter_counts(const GroupElement& x) {
  std::vector<std::size_t> counts(2 * x.graph().size(), 0);
  for (auto s : x.letters()) ++counts[s.code()];
  return counts;
}

}  // namespace raag
