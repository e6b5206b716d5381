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

// Automorphisms of uni/trivalent graphs as dart permutations.
//
// Reversing a loop changes no vertex and no edge, so it is not a distinct
// automorphism of the non-oriented graph. Every Automorphism is stored as the
// representative that sends the even dart of each loop to the even dart of the
// image loop. These representatives form a group, and equality of
// automorphisms is equality of dart maps. DartSymmetries() gives the larger
// group in which loop reversals are distinct.

#ifndef TRIVALENT_AUTOMORPHISM_H_
#define TRIVALENT_AUTOMORPHISM_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/graph.h"

namespace trivalent {

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr MakeGraphPtr(Graph graph);

// True when dart_map is a bijection commuting with the edge pairing and
// mapping vertex cells onto vertex cells.
bool IsDartSymmetry(const Graph& graph, std::span<const int> dart_map);

// Rewrites dart_map so that every loop keeps its dart parity.
void NormalizeLoops(const Graph& graph, std::vector<int>& dart_map);

class Automorphism {
 public:
  // Throws kInvalidGraph if dart_map is not a dart symmetry; normalizes loops.
  Automorphism(GraphPtr graph, std::vector<int> dart_map);
  static Automorphism Identity(GraphPtr graph);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<int>& dart_map() const { return map_; }

  DartId operator()(DartId d) const { return DartId(map_[d.value()]); }
  EdgeId operator()(EdgeId e) const { return EdgeId(map_[2 * e.value()] >> 1); }
  VertexId operator()(VertexId v) const;

  bool is_identity() const;
  bool SameGraph(const Automorphism& other) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.map_ == b.map_ && a.SameGraph(b);
  }

 private:
  GraphPtr graph_;
  std::vector<int> map_;
};

// a o b: apply b first. Throws kMismatchedGraphs.
Automorphism Compose(const Automorphism& a, const Automorphism& b);
Automorphism Inverse(const Automorphism& a);
Automorphism Power(const Automorphism& a, long long exponent);
int Order(const Automorphism& a);

// Whole group, identity first, sorted by dart map. Requires a valid graph.
std::vector<Automorphism> AutomorphismGroup(const GraphPtr& graph);
// Every dart symmetry, loop reversals counted separately.
std::vector<std::vector<int>> DartSymmetries(const Graph& graph);

struct OrbitReport {
  int order = 1;
  std::vector<int> vertex_orders;
  std::vector<int> edge_orders;
  std::vector<int> edge_order_set;
  std::vector<int> vertex_order_set;
  std::vector<int> edge_orbit_sizes;
};

// Computes the report and checks the structure of vertex and edge orders;
// throws kInternal on any violation.
OrbitReport MakeOrbitReport(const Automorphism& phi);
// The same checks without throwing; nullopt when all hold.
std::optional<std::string> OrdersViolation(const Automorphism& phi, const OrbitReport& report);
OrbitReport ComputeOrbitReport(const Automorphism& phi);

struct CyclicFactorization {
  std::vector<Automorphism> factors;
  std::vector<int> orders;
};

// Powers of phi with pairwise coprime prime-power orders whose product is phi.
CyclicFactorization PrimaryDecomposition(const Automorphism& phi);

enum class SwitchKind { kTerminal, kInternal };

struct Switch {
  Automorphism automorphism;
  SwitchKind kind;
};

// Interchanges adjacent edges e1, e2 and fixes everything else.
// Throws kNotAdjacent or kNotASwitch.
Switch MakeSwitch(const GraphPtr& graph, EdgeId e1, EdgeId e2);
// Every switch of the graph, each unordered pair once, sorted.
std::vector<std::pair<EdgeId, EdgeId>> AllSwitchPairs(const Graph& graph);

// Automorphism text format: "aut <graph-hash>" then "dart <i> -> <j>" lines.
// Darts not listed are fixed.
std::string FormatAutomorphism(const Automorphism& phi);
Automorphism ParseAutomorphism(std::string_view text, const GraphPtr& graph);
std::string GraphHash(const Graph& graph);

}  // namespace trivalent

#endif  // TRIVALENT_AUTOMORPHISM_H_
