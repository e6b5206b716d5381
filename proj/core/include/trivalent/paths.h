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

// Minimal paths between vertices of one orbit and the ways two translates of
// such a path can meet.

#ifndef TRIVALENT_PATHS_H_
#define TRIVALENT_PATHS_H_

#include <optional>
#include <string>
#include <vector>

#include "trivalent/automorphism.h"
#include "trivalent/graph.h"

namespace trivalent {

// darts[t] leaves the t-th vertex along the t-th edge.
struct Path {
  std::vector<int> darts;

  int length() const { return static_cast<int>(darts.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Vertices along the path, length() + 1 of them.
std::vector<VertexId> PathVertices(const Graph& graph, const Path& path);
std::vector<EdgeId> PathEdges(const Path& path);
// phi^power applied to every dart.
Path MapPath(const Automorphism& phi, int power, const Path& path);
// Throws kPrecondition unless the darts chain into a simple path.
void RequireSimplePath(const Graph& graph, const Path& path);

// Shortest path joining two distinct vertices of one orbit, over all orbits;
// ties go to the lexicographically smallest dart sequence. Throws
// kPrecondition on the identity.
std::optional<Path> MinimalVertexPath(const Automorphism& phi);

// Shortest path joining the free ends of two distinct terminal edges of one
// orbit, both terminal edges included; same tie-breaking.
std::optional<Path> MinimalTerminalPath(const Automorphism& phi);

enum class PairKind { kDisjoint, kAdjacent, kDiagonal, kDoubled };

std::string_view PairKindName(PairKind kind);

// How phi^i(alpha) and phi^j(alpha) meet. Along each path, the stretches not
// shared with the other are its deltas; shared edges form the common paths.
struct PathOrbitClass {
  PairKind kind = PairKind::kDisjoint;
  // Adjacent with phi^i(v) = phi^j(v'): reported with i and j exchanged.
  bool swapped = false;
  bool identical = false;                // doubled with equal edge sets
  std::vector<int> delta_i;              // lengths along phi^i(alpha)
  std::vector<int> delta_j;              // lengths along phi^j(alpha)
  std::vector<int> common;               // common edge runs along phi^i(alpha)
  std::optional<std::string> violation;  // first structural property that fails
};

// alpha must be simple with distinct ends in one phi-orbit, i != j mod ord.
PathOrbitClass ClassifyPair(const Automorphism& phi, const Path& alpha, int i, int j);

}  // namespace trivalent

#endif  // TRIVALENT_PATHS_H_
