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

// F-moves: replacing subtrees by different trees on the same free ends.
//
// A subtree is given by its interior edges: a nonempty tree of internal,
// non-loop edges between trivalent vertices. Its free ends are its boundary
// darts, the darts at interior vertices that are not on interior edges. Free
// ends are darts rather than vertices so that loops and parallel edges around
// the tree are unambiguous. A tree with k interior edges has k + 3 free ends.
//
// A replacement is a Coupling: an unrooted binary tree whose leaves are the
// boundary darts. The complement of the interiors keeps every id. New interior
// edges and vertices reuse the ids of the old ones, either in a canonical
// layout or in an explicit one, so an inverse move can restore a graph exactly.

#ifndef TRIVALENT_FMOVE_H_
#define TRIVALENT_FMOVE_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trivalent/automorphism.h"
#include "trivalent/graph.h"

namespace trivalent {

// Unrooted binary tree over dart leaves, written as a parenthesized expression
// such as "(3 (8 10) 12)". A root with two children is suppressed.
class Coupling {
 public:
  struct Node {
    int leaf = -1;  // >= 0 for leaves
    std::vector<Node> children;
  };

  // Throws kParse on malformed text, kInvalidMove on a non-binary tree or
  // repeated leaves.
  static Coupling Parse(std::string_view text);
  static Coupling FromNode(Node root);
  // The coupling of the subtree currently in the graph.
  static Coupling OfTree(const Graph& graph, std::span<const EdgeId> interior);
  // All couplings of the given leaves.
  static std::vector<Coupling> All(std::vector<int> leaves);

  const std::vector<int>& leaves() const { return leaves_; }
  // Rooted at the vertex next to the smallest leaf, children by smallest leaf.
  const Node& root() const { return root_; }
  // Each interior edge as the side of its bipartition avoiding the smallest
  // leaf; sorted.
  const std::vector<std::vector<int>>& splits() const { return splits_; }
  // Canonical expression rooted at the smallest leaf.
  std::string ToString() const;
  // Leaves renamed through dart_map.
  Coupling Mapped(std::span<const int> dart_map) const;

  friend bool operator==(const Coupling& a, const Coupling& b) {
    return a.leaves_ == b.leaves_ && a.splits_ == b.splits_;
  }

 private:
  Node root_;
  std::vector<int> leaves_;
  std::vector<std::vector<int>> splits_;
};

// New vertex cell of a replacement tree: vertex id and its three darts.
struct LayoutCell {
  VertexId vertex;
  std::array<int, 3> darts;
  friend bool operator==(const LayoutCell&, const LayoutCell&) = default;
};

struct TreeReplacement {
  std::vector<EdgeId> interior;  // sorted
  Coupling coupling;
  std::vector<LayoutCell> layout;  // empty: canonical layout
};

struct FMoveSpec {
  std::vector<TreeReplacement> trees;
};

enum class EdgeCoupling {
  // With p1 < p2 the other darts at the first end and q1 < q2 those at the
  // second end, the source pairs (p1 p2)(q1 q2).
  kParallel,  // (p1 q1)(p2 q2)
  kCrossed,   // (p1 q2)(p2 q1)
};

struct EdgeCorrespondence {
  // Complement edges keep their ids; interior edges map to nullopt.
  std::vector<std::optional<EdgeId>> edge_image;
  // Per tree: old interior edges and the new ones on the same ids.
  std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> replaced;
};

struct FMoveResult {
  Graph graph;
  EdgeCorrespondence correspondence;
  // Applying this to graph restores the source exactly.
  FMoveSpec inverse;
};

// Interior vertices of a subtree, sorted. Throws kInvalidMove if the edges do
// not form a valid subtree.
std::vector<VertexId> TreeVertices(const Graph& graph, std::span<const EdgeId> interior);
// Boundary darts of a subtree, sorted.
std::vector<int> BoundaryDarts(const Graph& graph, std::span<const EdgeId> interior);

// Throws kInvalidMove describing the first problem.
void ValidateMove(const Graph& graph, const FMoveSpec& spec);
FMoveResult ApplyFMove(const Graph& graph, const FMoveSpec& spec);
FMoveSpec EdgeMoveSpec(const Graph& graph, EdgeId e, EdgeCoupling coupling);
FMoveResult ApplyEdgeFMove(const Graph& graph, EdgeId e, EdgeCoupling coupling);

struct NotInvariant {
  enum class Reason {
    kWrongGraph,  // phi is not on the move's source graph
    kFamilyNotInvariant,
    kDoesNotExtend,
  };
  Reason reason;
  std::string detail;
};

using TransportResult = std::variant<Automorphism, NotInvariant>;

// Loops whose two darts are both free ends of the family. Reversing such a
// loop does not change phi but may change what it induces.
std::vector<EdgeId> BoundaryLoops(const Graph& graph, const FMoveSpec& spec);

// Transports phi across the move using the dart-level lift of phi that
// reverses the given boundary loops. `target` must be the graph produced by
// the move; pass nullptr to build it.
TransportResult Transport(const Automorphism& phi, const FMoveSpec& spec,
                          std::span<const EdgeId> reversed_loops = {}, GraphPtr target = nullptr);
// Every automorphism induced by some lift, distinct, sorted by dart map.
std::vector<Automorphism> TransportAll(const Automorphism& phi, const FMoveSpec& spec,
                                       GraphPtr target = nullptr);

struct InvariantMoveOptions {
  int max_tree_ends = 6;
  // Families combining up to this many phi-orbits of trees.
  int max_orbits = 1;
};

// phi-invariant families, each induced by at least one lift; sorted by text.
std::vector<FMoveSpec> EnumerateInvariantFMoves(const Automorphism& phi,
                                                const InvariantMoveOptions& options = {});

// Move text format:
//   fmove
//   tree <edge-id>* -> coupling <expr> [layout v<id>=<d>,<d>,<d> ...]
std::string FormatFMove(const FMoveSpec& spec);
FMoveSpec ParseFMove(std::string_view text);

}  // namespace trivalent

#endif  // TRIVALENT_FMOVE_H_
