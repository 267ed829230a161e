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

// Presentations of right-angled Artin groups by a commutation graph, and the
// textual syntax for graphs and words.
//
// Graph file format (line oriented, `#` starts a comment):
//
//   gens: a b c
//   edge: a c
//   edge: b c
//
// Word syntax: whitespace separated tokens `name` or `name^k`, k != 0.

#ifndef RAAG_PRESENTATION_HPP_
#define RAAG_PRESENTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Generator bitsets are 64 bits wide.
inline constexpr std::size_t kMaxGenerators = 64;

using GeneratorMask = std::uint64_t;

/// A generator together with an exponent of +1 or -1.
///
/// The natural ordering is the canonical letter order: for generator indices
/// i < j, i+ < i- < j+ < j-.
struct SignedLetter {
  std::uint16_t gen = 0;
  std::int8_t sign = 1;

  constexpr SignedLetter inverse() const noexcept {
    return SignedLetter{gen, static_cast<std::int8_t>(-sign)};
  }
  constexpr bool is_inverse_of(SignedLetter other) const noexcept {
    return gen == other.gen && sign != other.sign;
  }
  /// Dense index in [0, 2|S|): 2*gen for s+, 2*gen+1 for s-.
  constexpr std::size_t code() const noexcept {
    return 2 * static_cast<std::size_t>(gen) + (sign < 0 ? 1 : 0);
  }
  static constexpr SignedLetter from_code(std::size_t code) noexcept {
    return SignedLetter{static_cast<std::uint16_t>(code / 2),
                        static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(SignedLetter, SignedLetter) = default;
  friend constexpr std::strong_ordering operator<=>(SignedLetter a, SignedLetter b) noexcept {
    return a.code() <=> b.code();
  }
};

/// A finite, possibly unreduced sequence of signed letters.
using Word = std::vector<SignedLetter>;

class CommutationGraph {
 public:
  /// Throws ParseError on invalid names, duplicates, self-edges or unknown
  /// endpoints.
  CommutationGraph(std::vector<std::string> generators,
                   const std::vector<std::pair<std::size_t, std::size_t>>& commuting_pairs);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  const std::string& name(std::size_t gen) const { return names_.at(gen); }
  std::optional<std::size_t> find(std::string_view name) const;

  /// True iff the two distinct generators are declared to commute. A
  /// generator does not "commute" with itself in this sense.
  bool commute(std::size_t g, std::size_t h) const noexcept {
    return g != h && (blocking_[g] & (GeneratorMask{1} << h)) == 0;
  }
  /// Generators that do not commute with `gen`, including `gen` itself.
  GeneratorMask blocking(std::size_t gen) const noexcept { return blocking_[gen]; }
  GeneratorMask all_generators() const noexcept {
    return names_.size() == 64 ? ~GeneratorMask{0} : (GeneratorMask{1} << names_.size()) - 1;
  }

  /// Unordered commuting pairs (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs() const;

  friend bool operator==(const CommutationGraph& a, const CommutationGraph& b) {
    return a.names_ == b.names_ && a.blocking_ == b.blocking_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<GeneratorMask> blocking_;
};

using GraphPtr = std::shared_ptr<const CommutationGraph>;

GraphPtr parse_graph(std::string_view text);
GraphPtr load_graph_file(const std::string& path);

/// Expands `name^k` into |k| copies of the letter with sign sgn(k).
Word parse_word(std::string_view text, const CommutationGraph& graph);

/// Run-length rendering, e.g. "a^3 b^-1"; the empty word renders as "1".
std::string render_word(const Word& word, const CommutationGraph& graph);

/// Strict canonical letter order (i+ < i- < j+ < j-).
inline bool letter_less(SignedLetter a, SignedLetter b) noexcept { return a < b; }

}  // namespace raag

#endif  // RAAG_PRESENTATION_HPP_
