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

#include "trivalent/paths.h"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <set>

namespace trivalent {
namespace {

constexpr int kUnreachable = 1 << 29;

std::vector<std::vector<int>> Distances(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), kUnreachable));
  for (int s = 0; s < n; ++s) {
    auto& row = dist[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int d : graph.cell(VertexId(v))) {
        const int w = graph.vertex_of(Graph::mate(DartId(d))).value();
        if (row[static_cast<std::size_t>(w)] == kUnreachable) {
          row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::vector<VertexId> VertexOrbit(const Automorphism& phi, VertexId v) {
  std::vector<VertexId> orbit{v};
  for (VertexId w = phi(v); w != v; w = phi(w)) orbit.push_back(w);
  return orbit;
}

// Shortest path between distinct orbit mates among vertices accepted by
// `eligible`; lexicographically smallest dart sequence among those.
template <class Eligible>
std::optional<Path> MinimalOrbitPath(const Automorphism& phi, Eligible eligible) {
  const Graph& graph = phi.graph();
  const auto dist = Distances(graph);
  const int n = graph.num_vertices();

  // targets[v]: the other vertices of v's orbit.
  std::vector<std::vector<int>> targets(static_cast<std::size_t>(n));
  int best = kUnreachable;
  for (int v = 0; v < n; ++v) {
    if (!eligible(VertexId(v))) continue;
    for (VertexId w : VertexOrbit(phi, VertexId(v))) {
      if (w.value() == v) continue;
      targets[static_cast<std::size_t>(v)].push_back(w.value());
      best = std::min(best, dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w.value())]);
    }
  }
  if (best == kUnreachable) return std::nullopt;

  auto reaches = [&](int u, int start, int remaining) {
    for (int t : targets[static_cast<std::size_t>(start)]) {
      if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)] <= remaining) return true;
    }
    return false;
  };

  // Any walk of length `best` between orbit mates is shortest, hence simple.
  std::vector<int> darts;
  auto extend = [&](auto& self, int start, int u) -> bool {
    const int remaining = best - static_cast<int>(darts.size());
    if (remaining == 0) {
      const auto& t = targets[static_cast<std::size_t>(start)];
      return std::find(t.begin(), t.end(), u) != t.end();
    }
    std::vector<int> cell(graph.cell(VertexId(u)).begin(), graph.cell(VertexId(u)).end());
    std::sort(cell.begin(), cell.end());
    for (int d : cell) {
      const int w = graph.vertex_of(Graph::mate(DartId(d))).value();
      if (!reaches(w, start, remaining - 1)) continue;
      darts.push_back(d);
      if (self(self, start, w)) return true;
      darts.pop_back();
    }
    return false;
  };
  for (int d = 0; d < graph.num_darts(); ++d) {
    const int start = graph.vertex_of(DartId(d)).value();
    if (targets[static_cast<std::size_t>(start)].empty()) continue;
    const int w = graph.vertex_of(Graph::mate(DartId(d))).value();
    if (!reaches(w, start, best - 1)) continue;
    darts = {d};
    if (extend(extend, start, w)) return Path{darts};
  }
  throw Error(ErrorCode::kInternal, "minimal orbit path not found");
}

// Lengths of maximal runs along `path`: edges in `common` (or not, per
// `want_common`), broken at interior vertices in `breaks`.
std::vector<int> Runs(const Graph& graph, const Path& path, const std::set<int>& common,
                      bool want_common, const std::set<int>& breaks) {
  std::vector<int> runs;
  int current = 0;
  const auto vertices = PathVertices(graph, path);
  for (int t = 0; t < path.length(); ++t) {
    const bool is_common = common.contains(path.darts[static_cast<std::size_t>(t)] >> 1);
    if (is_common == want_common) {
      ++current;
    } else if (current > 0) {
      runs.push_back(current);
      current = 0;
    }
    const bool last = t + 1 == path.length();
    if (!last && breaks.contains(vertices[static_cast<std::size_t>(t + 1)].value()) &&
        current > 0) {
      runs.push_back(current);
      current = 0;
    }
  }
  if (current > 0) runs.push_back(current);
  return runs;
}

std::set<int> EdgeSet(const Path& path) {
  std::set<int> edges;
  for (int d : path.darts) edges.insert(d >> 1);
  return edges;
}

std::set<int> VertexSet(const Graph& graph, const Path& path) {
  std::set<int> vertices;
  for (VertexId v : PathVertices(graph, path)) vertices.insert(v.value());
  return vertices;
}

std::vector<int> Reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<VertexId> PathVertices(const Graph& graph, const Path& path) {
  std::vector<VertexId> vertices;
  if (path.darts.empty()) return vertices;
  vertices.push_back(graph.vertex_of(DartId(path.darts.front())));
  for (int d : path.darts) vertices.push_back(graph.vertex_of(Graph::mate(DartId(d))));
  return vertices;
}

std::vector<EdgeId> PathEdges(const Path& path) {
  std::vector<EdgeId> edges;
  edges.reserve(path.darts.size());
  for (int d : path.darts) edges.push_back(Graph::edge_of(DartId(d)));
  return edges;
}

Path MapPath(const Automorphism& phi, int power, const Path& path) {
  const Automorphism p = Power(phi, power);
  Path image;
  image.darts.reserve(path.darts.size());
  for (int d : path.darts) image.darts.push_back(p(DartId(d)).value());
  return image;
}

void RequireSimplePath(const Graph& graph, const Path& path) {
  if (path.darts.empty()) throw Error(ErrorCode::kPrecondition, "empty path");
  for (int d : path.darts) {
    if (!graph.contains(DartId(d))) {
      throw Error(ErrorCode::kPrecondition, fmt::format("path dart {} out of range", d));
    }
  }
  for (std::size_t t = 0; t + 1 < path.darts.size(); ++t) {
    if (graph.vertex_of(Graph::mate(DartId(path.darts[t]))) !=
        graph.vertex_of(DartId(path.darts[t + 1]))) {
      throw Error(ErrorCode::kPrecondition,
                  fmt::format("darts {} and {} do not chain", path.darts[t], path.darts[t + 1]));
    }
  }
  const auto vertices = PathVertices(graph, path);
  if (VertexSet(graph, path).size() != vertices.size()) {
    throw Error(ErrorCode::kPrecondition, "path repeats a vertex");
  }
}

std::optional<Path> MinimalVertexPath(const Automorphism& phi) {
  if (phi.is_identity()) {
    throw Error(ErrorCode::kPrecondition, "minimal vertex path of the identity");
  }
  return MinimalOrbitPath(phi, [](VertexId) { return true; });
}

std::optional<Path> MinimalTerminalPath(const Automorphism& phi) {
  const Graph& graph = phi.graph();
  return MinimalOrbitPath(phi, [&](VertexId v) { return graph.is_univalent(v); });
}

std::string_view PairKindName(PairKind kind) {
  switch (kind) {
    case PairKind::kDisjoint:
      return "disjoint";
    case PairKind::kAdjacent:
      return "adjacent";
    case PairKind::kDiagonal:
      return "diagonal";
    case PairKind::kDoubled:
      return "doubled";
  }
  return "?";
}

PathOrbitClass ClassifyPair(const Automorphism& phi, const Path& alpha, int i, int j) {
  const Graph& graph = phi.graph();
  RequireSimplePath(graph, alpha);
  const int order = Order(phi);
  i = ((i % order) + order) % order;
  j = ((j % order) + order) % order;
  if (i == j) throw Error(ErrorCode::kPrecondition, "i and j agree modulo the order");
  const auto ends = PathVertices(graph, alpha);
  const auto orbit = VertexOrbit(phi, ends.front());
  if (std::find(orbit.begin(), orbit.end(), ends.back()) == orbit.end()) {
    throw Error(ErrorCode::kPrecondition, "path ends are not in one orbit");
  }

  PathOrbitClass result;
  Path a = MapPath(phi, i, alpha);
  Path b = MapPath(phi, j, alpha);
  auto front = [&](const Path& p) { return graph.vertex_of(DartId(p.darts.front())); };
  auto back = [&](const Path& p) { return graph.vertex_of(Graph::mate(DartId(p.darts.back()))); };

  if (front(a) == front(b) && back(a) == back(b)) {
    result.kind = PairKind::kDoubled;
  } else if (front(b) == back(a) && back(b) == front(a)) {
    result.kind = PairKind::kDiagonal;
  } else if (front(b) == back(a)) {
    result.kind = PairKind::kAdjacent;
  } else if (front(a) == back(b)) {
    result.kind = PairKind::kAdjacent;
    result.swapped = true;
    std::swap(a, b);
  } else {
    result.kind = PairKind::kDisjoint;
  }

  const std::set<int> edges_a = EdgeSet(a), edges_b = EdgeSet(b);
  std::set<int> common;
  std::set_intersection(edges_a.begin(), edges_a.end(), edges_b.begin(), edges_b.end(),
                        std::inserter(common, common.end()));
  const std::set<int> vertices_a = VertexSet(graph, a), vertices_b = VertexSet(graph, b);
  std::set<int> shared;
  std::set_intersection(vertices_a.begin(), vertices_a.end(), vertices_b.begin(), vertices_b.end(),
                        std::inserter(shared, shared.end()));

  result.identical = edges_a == edges_b;
  result.delta_i = Runs(graph, a, common, false, shared);
  result.delta_j = Runs(graph, b, common, false, shared);
  result.common = Runs(graph, a, common, true, {});

  const int length = alpha.length();
  auto fail = [&](std::string message) {
    if (!result.violation) result.violation = std::move(message);
  };
  switch (result.kind) {
    case PairKind::kDisjoint:
      if (!shared.empty()) fail("disjoint translates share a vertex");
      break;
    case PairKind::kAdjacent:
      if (result.delta_i.empty()) fail("adjacent translates without a delta");
      if (result.delta_i != Reversed(result.delta_j)) {
        fail(fmt::format("adjacent deltas do not pair in reverse: {} vs {}",
                         fmt::join(result.delta_i, ","), fmt::join(result.delta_j, ",")));
      }
      if (!result.delta_i.empty() && 2 * result.delta_i.front() < length) {
        fail("adjacent first delta shorter than half the path");
      }
      break;
    case PairKind::kDiagonal:
      if (result.delta_i != Reversed(result.delta_j)) {
        fail("diagonal deltas do not pair in reverse");
      }
      if (order % 2 != 0) fail("diagonal translates under odd order");
      break;
    case PairKind::kDoubled:
      if (result.delta_i != result.delta_j) fail("doubled deltas do not pair in order");
      if (!result.identical && order % 2 != 0 &&
          (order % 3 != 0 || result.delta_i.size() != 1 || !result.common.empty())) {
        fail("doubled translates under odd order outside the tripod pattern");
      }
      break;
  }
  return result;
}

}  // namespace trivalent
