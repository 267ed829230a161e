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

// Group elements in canonical normal form and the group law.
//
// The canonical form of an element is the shortlex-least reduced word that
// represents it, under the canonical letter order. Two words represent the
// same element iff their canonical forms are identical, so equality is a
// sequence comparison.

#ifndef RAAG_ELEMENT_HPP_
#define RAAG_ELEMENT_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raag/presentation.hpp"

namespace raag {

class GroupElement {
 public:
  /// The identity of `graph`.
  explicit GroupElement(GraphPtr graph);

  static GroupElement identity(GraphPtr graph) { return GroupElement(std::move(graph)); }
  static GroupElement letter(GraphPtr graph, SignedLetter s);
  static GroupElement generator(GraphPtr graph, std::size_t gen, int sign = 1);
  /// Parses `text` in word syntax and normalizes it.
  static GroupElement parse(GraphPtr graph, std::string_view text);

  const CommutationGraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const Word& letters() const noexcept { return letters_; }
  /// The canonical length l(x).
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::string str() const { return render_word(letters_, *graph_); }

  /// Same presentation (pointer identity or structural equality).
  bool same_graph(const GroupElement& other) const noexcept {
    return graph_ == other.graph_ || *graph_ == *other.graph_;
  }

  /// Non-throwing comparison; elements of different graphs compare unequal.
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.letters_ == b.letters_ && a.same_graph(b);
  }
  /// Shortlex order on canonical forms.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

 private:
  friend GroupElement normalize(const Word& word, GraphPtr graph);
  friend GroupElement from_reduced(Word reduced, GraphPtr graph);
  GroupElement(GraphPtr graph, Word canonical) : graph_(std::move(graph)), letters_(std::move(canonical)) {}

  GraphPtr graph_;
  Word letters_;
};

/// Canonical form of `word`.
GroupElement normalize(const Word& word, GraphPtr graph);

/// Canonical form of a word already known to be reduced (skips the
/// cancellation pass).
GroupElement from_reduced(Word reduced, GraphPtr graph);

/// Free-partially-commutative reduction: returns some reduced word for the
/// same element, without reordering into canonical form.
Word reduce_word(std::span<const SignedLetter> word, const CommutationGraph& graph);

/// Shortlex-least rearrangement of a reduced word.
Word canonical_order(Word reduced, const CommutationGraph& graph);

/// Positions of the letters of a reduced word that commute with every letter
/// before them.
std::vector<std::size_t> first_letter_positions(const Word& reduced, const CommutationGraph& graph);

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
GroupElement power(const GroupElement& x, long long n);

/// Signed letters s with s ⊂ x, i.e. l(s^-1 x) = l(x) - 1, in letter order.
std::vector<SignedLetter> first_letters(const GroupElement& x);

/// Generators occurring in the canonical word, in index order.
std::vector<std::size_t> support(const GroupElement& x);
GeneratorMask support_mask(const GroupElement& x);

/// Throws GraphMismatch when the operands come from different graphs.
bool equal(const GroupElement& x, const GroupElement& y);
void require_same_graph(const GroupElement& x, const GroupElement& y);

/// Per signed letter occurrence counts, indexed by SignedLetter::code().
std::vector<std::size_t> letter_counts(const GroupElement& x);

inline GroupElement operator*(const GroupElement& x, const GroupElement& y) { return multiply(x, y); }

}  // namespace raag

template <>
struct std::hash<raag::GroupElement> {
  std::size_t operator()(const raag::GroupElement& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto s : x.letters()) {
      h ^= s.code() + 1;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // RAAG_ELEMENT_HPP_
