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

// Dart-based uni/trivalent multigraphs.
//
// Edge k owns darts 2k and 2k+1, so the edge pairing is d <-> d ^ 1. Each dart
// sits at exactly one vertex; a vertex is the cell of darts sitting at it.
// Loops and parallel edges are therefore unambiguous.

#ifndef TRIVALENT_GRAPH_H_
#define TRIVALENT_GRAPH_H_

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trivalent {

template <class Tag>
class StrongId {
 public:
  constexpr StrongId() = default;
  constexpr explicit StrongId(int value) : value_(value) {}
  constexpr int value() const { return value_; }
  friend constexpr auto operator<=>(StrongId, StrongId) = default;

 private:
  int value_ = -1;
};

using DartId = StrongId<struct DartTag>;
using EdgeId = StrongId<struct EdgeTag>;
using VertexId = StrongId<struct VertexTag>;

enum class ErrorCode {
  kInvalidGraph,
  kInadmissible,
  kSizeCap,
  kUnknownElement,
  kMismatchedGraphs,
  kNotAdjacent,
  kNotASwitch,
  kInvalidMove,
  kPrecondition,
  kParse,
  kBudget,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class Graph {
 public:
  // Edge k joins ends[k].first (dart 2k) and ends[k].second (dart 2k+1).
  static Graph FromEdges(int genus, int boundary, int num_vertices,
                         std::span<const std::pair<int, int>> ends);
  // dart_vertex[d] is the vertex of dart d; every vertex id below
  // num_vertices is a cell, possibly empty.
  static Graph FromDartVertices(int genus, int boundary, int num_vertices,
                                std::vector<int> dart_vertex);

  int genus() const { return genus_; }
  int boundary() const { return boundary_; }
  int num_darts() const { return static_cast<int>(dart_vertex_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_vertices() const { return static_cast<int>(cell_start_.size()) - 1; }

  static DartId mate(DartId d) { return DartId(d.value() ^ 1); }
  static EdgeId edge_of(DartId d) { return EdgeId(d.value() >> 1); }
  static std::pair<DartId, DartId> darts_of(EdgeId e) {
    return {DartId(2 * e.value()), DartId(2 * e.value() + 1)};
  }

  VertexId vertex_of(DartId d) const { return VertexId(dart_vertex_[d.value()]); }
  std::span<const int> cell(VertexId v) const {
    const auto begin = static_cast<std::size_t>(cell_start_[v.value()]);
    const auto end = static_cast<std::size_t>(cell_start_[v.value() + 1]);
    return std::span<const int>(cell_darts_).subspan(begin, end - begin);
  }
  int degree(VertexId v) const { return static_cast<int>(cell(v).size()); }
  bool is_univalent(VertexId v) const { return degree(v) == 1; }
  bool is_trivalent(VertexId v) const { return degree(v) == 3; }

  std::pair<VertexId, VertexId> ends(EdgeId e) const {
    auto [a, b] = darts_of(e);
    return {vertex_of(a), vertex_of(b)};
  }
  bool is_loop(EdgeId e) const {
    auto [v, w] = ends(e);
    return v == w;
  }

  bool contains(DartId d) const { return d.value() >= 0 && d.value() < num_darts(); }
  bool contains(EdgeId e) const { return e.value() >= 0 && e.value() < num_edges(); }
  bool contains(VertexId v) const { return v.value() >= 0 && v.value() < num_vertices(); }

  const std::vector<int>& dart_vertex() const { return dart_vertex_; }

  int count_vertices_of_degree(int degree) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.genus_ == b.genus_ && a.boundary_ == b.boundary_ && a.dart_vertex_ == b.dart_vertex_ &&
           a.num_vertices() == b.num_vertices();
  }

 private:
  Graph(int genus, int boundary, int num_vertices, std::vector<int> dart_vertex);

  int genus_ = 0;
  int boundary_ = 0;
  std::vector<int> dart_vertex_;
  std::vector<int> cell_start_;
  std::vector<int> cell_darts_;
};

bool IsAdmissible(int genus, int boundary);
int TrivalentCount(int genus, int boundary);
int EdgeCount(int genus, int boundary);

enum class Violation {
  kNegativeInvariant,
  kForbiddenGenusBoundary,
  kNoTrivalentVertex,
  kBadDegree,
  kDisconnected,
  kBettiMismatch,
  kTrivalentCountMismatch,
  kEdgeCountMismatch,
  kBoundaryCountMismatch,
  kLeafDeclaration,
};

struct Diagnostic {
  Violation violation;
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
  bool has(Violation v) const;
};

ValidationReport Validate(const Graph& graph);
bool IsConnected(const Graph& graph);
// Throws Error(kInvalidGraph) listing the first violation.
void RequireValid(const Graph& graph);

enum class EdgeKind { kTerminal, kInternal };
EdgeKind ClassifyEdge(const Graph& graph, EdgeId e);

// Returns the graph obtained by renaming darts and vertices. new_dart[d] is the
// new id of dart d and must keep mates paired; new_vertex likewise.
Graph Relabel(const Graph& graph, std::span<const int> new_dart, std::span<const int> new_vertex);

}  // namespace trivalent

#endif  // TRIVALENT_GRAPH_H_
