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

// Small named graphs shared by the tests.

#ifndef TRIVALENT_TESTS_TEST_GRAPHS_H_
#define TRIVALENT_TESTS_TEST_GRAPHS_H_

#include <utility>
#include <vector>

#include "trivalent/automorphism.h"
#include "trivalent/graph.h"

namespace trivalent::testing {

inline Graph Build(int g, int b, int vertices, std::vector<std::pair<int, int>> ends) {
  return Graph::FromEdges(g, b, vertices, ends);
}

// One trivalent vertex and three free ends.
inline Graph Tripod() { return Build(0, 3, 4, {{0, 1}, {0, 2}, {0, 3}}); }
// Two vertices joined by three parallel edges.
inline Graph Theta() { return Build(2, 0, 2, {{0, 1}, {0, 1}, {0, 1}}); }
// Loop, bridge, loop.
inline Graph Dumbbell() { return Build(2, 0, 2, {{0, 0}, {0, 1}, {1, 1}}); }
// A loop with a terminal edge.
inline Graph LoopWithTail() { return Build(1, 1, 2, {{0, 0}, {0, 1}}); }
// The unique tree in G_{0,4}; edge 0 is the middle edge.
inline Graph FourEndTree() { return Build(0, 4, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }
// A cycle of n trivalent vertices, each with a pendant free end.
inline Graph CycleWithPendants(int n) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i) ends.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) ends.emplace_back(i, n + i);
  return Build(1, n, 2 * n, ends);
}
// Complete graph on four vertices.
inline Graph K4() { return Build(3, 0, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
// A single loop at a vertex of degree two, declared (1,0).
inline Graph SingleLoop() { return Build(1, 0, 1, {{0, 0}}); }

inline GraphPtr Ptr(Graph graph) { return MakeGraphPtr(std::move(graph)); }

}  // namespace trivalent::testing

#endif  // TRIVALENT_TESTS_TEST_GRAPHS_H_
