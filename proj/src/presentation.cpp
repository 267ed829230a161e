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

#include "raag/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

void validate_name(const std::string& name, std::size_t line) {
  if (name.empty()) throw ParseError("empty generator name", line);
  if (name == "1") throw ParseError("generator name '1' is reserved for the identity", line);
  for (char c : name) {
    if (is_space(c) || c == '^' || c == '\'' || c == ',' || c == '#') {
      throw ParseError("generator name '" + name + "' contains a forbidden character", line);
    }
  }
}

}  // namespace

CommutationGraph::CommutationGraph(std::vector<std::string> generators,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& commuting_pairs)
    : names_(std::move(generators)) {
  if (names_.empty()) throw ParseError("a presentation needs at least one generator");
  if (names_.size() > kMaxGenerators) {
    throw ParseError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    validate_name(n, 0);
    if (!seen.insert(n).second) throw ParseError("duplicate generator '" + n + "'");
  }
  // Start from "nothing commutes", then clear the declared pairs.
  blocking_.assign(names_.size(), all_generators());
  for (auto [i, j] : commuting_pairs) {
    if (i >= names_.size() || j >= names_.size()) throw ParseError("edge references an unknown generator");
    if (i == j) throw ParseError("self-edge on '" + names_[i] + "'");
    blocking_[i] &= ~(GeneratorMask{1} << j);
    blocking_[j] &= ~(GeneratorMask{1} << i);
  }
}

std::optional<std::size_t> CommutationGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> CommutationGraph::commuting_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (commute(i, j)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

GraphPtr parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_gens) {
      if (tokens[0] != "gens:") throw ParseError("expected 'gens:' declaration", line_no);
      if (tokens.size() < 2) throw ParseError("'gens:' declares no generators", line_no);
      std::set<std::string_view> seen;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        std::string name(tokens[k]);
        validate_name(name, line_no);
        if (!seen.insert(tokens[k]).second) throw ParseError("duplicate generator '" + name + "'", line_no);
        names.push_back(std::move(name));
      }
      if (names.size() > kMaxGenerators) {
        throw ParseError("at most " + std::to_string(kMaxGenerators) + " generators are supported", line_no);
      }
      have_gens = true;
    } else {
      if (tokens[0] != "edge:") throw ParseError("expected 'edge:' line", line_no);
      if (tokens.size() != 3) throw ParseError("'edge:' takes exactly two generators", line_no);
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        auto it = std::find(names.begin(), names.end(), tokens[1 + k]);
        if (it == names.end()) {
          throw ParseError("unknown generator '" + std::string(tokens[1 + k]) + "' in edge", line_no);
        }
        ends[k] = static_cast<std::size_t>(it - names.begin());
      }
      if (ends[0] == ends[1]) throw ParseError("self-edge on '" + names[ends[0]] + "'", line_no);
      edges.emplace_back(ends[0], ends[1]);
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing 'gens:' declaration", line_no);
  return std::make_shared<const CommutationGraph>(std::move(names), edges);
}

GraphPtr load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Word parse_word(std::string_view text, const CommutationGraph& graph) {
  Word word;
  for (std::string_view token : split_tokens(text)) {
    std::string_view name = token;
    long long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (!digits.empty() && digits.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (digits.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("malformed exponent in token '" + std::string(token) + "'");
      }
      if (exponent == 0) throw ParseError("zero exponent in token '" + std::string(token) + "'");
    }
    if (name == "1") {
      // The identity token, as printed by render_word.
      continue;
    }
    auto gen = graph.find(name);
    if (!gen) throw ParseError("unknown generator '" + std::string(name) + "'");
    SignedLetter letter{static_cast<std::uint16_t>(*gen), static_cast<std::int8_t>(exponent > 0 ? 1 : -1)};
    unsigned long long count = exponent > 0 ? static_cast<unsigned long long>(exponent)
                                            : 0ULL - static_cast<unsigned long long>(exponent);
    if (count > 1'000'000) throw ParseError("exponent too large in token '" + std::string(token) + "'");
    word.insert(word.end(), count, letter);
  }
  return word;
}

std::string render_word(const Word& word, const CommutationGraph& graph) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += ' ';
    out += graph.name(word[i].gen);
    long long run = static_cast<long long>(j - i) * word[i].sign;
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

}  // namespace raag
