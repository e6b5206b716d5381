// Copyright 2026 The trivalent Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Canonical labeling by individualization and refinement over darts.
//
// Free ends are unlabeled: any permutation of univalent vertices is an
// isomorphism. When a dart permutation is supplied, it is encoded through its
// action on vertices and edges only, so two permutations differing by loop
// reversals get the same code.

#ifndef TRIVALENT_CANONICAL_H_
#define TRIVALENT_CANONICAL_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trivalent/graph.h"

namespace trivalent {

class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<int> words) : words_(std::move(words)) {}

  const std::vector<int>& words() const { return words_; }
  // First 16 hex digits of the SHA-256 of the words.
  std::string Digest() const;
  // Words joined by '.', e.g. "2.0.2.6.0.0.0.1.1.1".
  std::string ToString() const;
  static std::optional<CanonicalCode> FromString(std::string_view text);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<int> words_;
};

struct CanonicalLabeling {
  CanonicalCode code;
  // Mates stay paired: darts 2k and 2k+1 of the canonical graph form edge k.
  std::vector<int> dart_to_canonical;
  std::vector<int> vertex_to_canonical;
};

// No validity precondition; usable on any dart graph.
CanonicalLabeling CanonicalLabel(const Graph& graph);
// Labels the pair (graph, dart_map) under simultaneous relabeling.
CanonicalLabeling CanonicalLabel(const Graph& graph, std::span<const int> dart_map);

// Requires a valid graph.
CanonicalCode CanonicalForm(const Graph& graph);

Graph ApplyLabeling(const Graph& graph, const CanonicalLabeling& labeling);
Graph CanonicalGraph(const Graph& graph);

}  // namespace trivalent

#endif  // TRIVALENT_CANONICAL_H_
