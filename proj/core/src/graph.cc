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

#include "trivalent/graph.h"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace trivalent {

Graph::Graph(int genus, int boundary, int num_vertices, std::vector<int> dart_vertex)
    : genus_(genus), boundary_(boundary), dart_vertex_(std::move(dart_vertex)) {
  if (dart_vertex_.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidGraph, "odd number of darts");
  }
  cell_start_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (int v : dart_vertex_) {
    if (v < 0 || v >= num_vertices) {
      throw Error(ErrorCode::kInvalidGraph, fmt::format("vertex id {} out of range", v));
    }
    ++cell_start_[static_cast<std::size_t>(v) + 1];
  }
  std::partial_sum(cell_start_.begin(), cell_start_.end(), cell_start_.begin());
  cell_darts_.resize(dart_vertex_.size());
  std::vector<int> fill(cell_start_.begin(), cell_start_.end() - 1);
  for (int d = 0; d < static_cast<int>(dart_vertex_.size()); ++d) {
    cell_darts_[static_cast<std::size_t>(fill[static_cast<std::size_t>(dart_vertex_[d])]++)] = d;
  }
}

Graph Graph::FromEdges(int genus, int boundary, int num_vertices,
                       std::span<const std::pair<int, int>> ends) {
  std::vector<int> dart_vertex;
  dart_vertex.reserve(2 * ends.size());
  for (auto [v, w] : ends) {
    dart_vertex.push_back(v);
    dart_vertex.push_back(w);
  }
  return Graph(genus, boundary, num_vertices, std::move(dart_vertex));
}

Graph Graph::FromDartVertices(int genus, int boundary, int num_vertices,
                              std::vector<int> dart_vertex) {
  return Graph(genus, boundary, num_vertices, std::move(dart_vertex));
}

int Graph::count_vertices_of_degree(int degree) const {
  int count = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    if (this->degree(VertexId(v)) == degree) ++count;
  }
  return count;
}

bool IsAdmissible(int genus, int boundary) {
  if (genus < 0 || boundary < 0) return false;
  if (genus == 0 && boundary <= 2) return false;
  if (genus == 1 && boundary == 0) return false;
  return true;
}

int TrivalentCount(int genus, int boundary) { return 2 * genus - 2 + boundary; }
int EdgeCount(int genus, int boundary) { return 3 * genus - 3 + 2 * boundary; }

bool ValidationReport::has(Violation v) const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [v](const Diagnostic& d) { return d.violation == v; });
}

bool IsConnected(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : graph.cell(VertexId(v))) {
      const int w = graph.vertex_of(Graph::mate(DartId(d))).value();
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

ValidationReport Validate(const Graph& graph) {
  ValidationReport report;
  auto add = [&report](Violation v, std::string message) {
    report.diagnostics.push_back({v, std::move(message)});
  };
  const int g = graph.genus();
  const int b = graph.boundary();
  if (g < 0 || b < 0) {
    add(Violation::kNegativeInvariant, fmt::format("negative genus or boundary ({},{})", g, b));
  } else if (!IsAdmissible(g, b)) {
    add(Violation::kForbiddenGenusBoundary, fmt::format("(g,b)=({},{}) is not admissible", g, b));
  }

  int trivalent = 0;
  int univalent = 0;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const int deg = graph.degree(VertexId(v));
    if (deg == 3) {
      ++trivalent;
    } else if (deg == 1) {
      ++univalent;
    } else {
      add(Violation::kBadDegree, fmt::format("vertex {} has degree {}", v, deg));
    }
  }
  if (trivalent == 0) add(Violation::kNoTrivalentVertex, "no trivalent vertex");
  if (!IsConnected(graph)) add(Violation::kDisconnected, "graph is not connected");

  const int betti = graph.num_edges() - graph.num_vertices() + 1;
  if (betti != g) {
    add(Violation::kBettiMismatch,
        fmt::format("first Betti number is {} but genus is {}", betti, g));
  }
  if (univalent != b) {
    add(Violation::kBoundaryCountMismatch,
        fmt::format("{} univalent vertices but boundary is {}", univalent, b));
  }
  if (trivalent != TrivalentCount(g, b)) {
    add(Violation::kTrivalentCountMismatch,
        fmt::format("{} trivalent vertices, expected {}", trivalent, TrivalentCount(g, b)));
  }
  if (graph.num_edges() != EdgeCount(g, b)) {
    add(Violation::kEdgeCountMismatch,
        fmt::format("{} edges, expected {}", graph.num_edges(), EdgeCount(g, b)));
  }
  return report;
}

void RequireValid(const Graph& graph) {
  const ValidationReport report = Validate(graph);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidGraph, "invalid graph: " + report.diagnostics.front().message);
  }
}

EdgeKind ClassifyEdge(const Graph& graph, EdgeId e) {
  if (!graph.contains(e)) {
    throw Error(ErrorCode::kUnknownElement, fmt::format("unknown edge {}", e.value()));
  }
  auto [v, w] = graph.ends(e);
  const bool v_free = graph.is_univalent(v);
  const bool w_free = graph.is_univalent(w);
  return v_free != w_free ? EdgeKind::kTerminal : EdgeKind::kInternal;
}

Graph Relabel(const Graph& graph, std::span<const int> new_dart, std::span<const int> new_vertex) {
  std::vector<int> dart_vertex(static_cast<std::size_t>(graph.num_darts()));
  for (int d = 0; d < graph.num_darts(); ++d) {
    if ((new_dart[static_cast<std::size_t>(d)] ^ 1) != new_dart[static_cast<std::size_t>(d ^ 1)]) {
      throw Error(ErrorCode::kInternal, "relabeling separates mates");
    }
    dart_vertex[static_cast<std::size_t>(new_dart[static_cast<std::size_t>(d)])] =
        new_vertex[static_cast<std::size_t>(graph.vertex_of(DartId(d)).value())];
  }
  return Graph::FromDartVertices(graph.genus(), graph.boundary(), graph.num_vertices(),
                                 std::move(dart_vertex));
}

}  // namespace trivalent
