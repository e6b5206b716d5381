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

#include "trivalent/oracle.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "trivalent/enumerate.h"

namespace trivalent {

namespace {

using DartMap = std::vector<int>;

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <class Fn>
void ParallelFor(std::size_t n, int jobs, Fn&& fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(threads, n); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

// Every automorphism one invariant move away, with the move and lift used.
std::vector<FStep> Neighbors(const Automorphism& phi, int max_tree_ends) {
  std::vector<FStep> out;
  std::set<std::pair<std::string, DartMap>> seen;
  for (FMoveSpec& spec : EnumerateInvariantFMoves(phi, {.max_tree_ends = max_tree_ends})) {
    const GraphPtr target = MakeGraphPtr(ApplyFMove(phi.graph(), spec).graph);
    const std::vector<EdgeId> loops = BoundaryLoops(phi.graph(), spec);
    const std::string text = FormatFMove(spec);
    for (unsigned mask = 0; mask < (1u << loops.size()); ++mask) {
      std::vector<EdgeId> reversed;
      for (std::size_t i = 0; i < loops.size(); ++i) {
        if (mask & (1u << i)) reversed.push_back(loops[i]);
      }
      TransportResult result = Transport(phi, spec, reversed, target);
      auto* image = std::get_if<Automorphism>(&result);
      if (image == nullptr || !seen.emplace(text, image->dart_map()).second) continue;
      out.push_back(FStep{spec, std::move(reversed), std::move(*image)});
    }
  }
  return out;
}

DartMap ComposeMaps(const Graph& graph, const DartMap& a, const DartMap& b) {
  DartMap out(b.size());
  for (std::size_t d = 0; d < b.size(); ++d) out[d] = a[static_cast<std::size_t>(b[d])];
  NormalizeLoops(graph, out);
  return out;
}

DartMap InverseMap(const Graph& graph, const DartMap& a) {
  DartMap out(a.size());
  for (std::size_t d = 0; d < a.size(); ++d)
    out[static_cast<std::size_t>(a[d])] = static_cast<int>(d);
  NormalizeLoops(graph, out);
  return out;
}

struct ClassState {
  CanonicalCode code;
  GraphPtr graph;
  std::vector<DartMap> group;
  std::set<DartMap> members;
  std::set<DartMap> expanded;

  DartMap Conjugate(const DartMap& alpha, const DartMap& x) const {
    return ComposeMaps(*graph, ComposeMaps(*graph, alpha, x), InverseMap(*graph, alpha));
  }

  // Adds x and closes under composition and conjugation. False if present.
  bool Add(const DartMap& x) {
    if (members.contains(x)) return false;
    std::vector<DartMap> queue;
    for (const DartMap& alpha : group) queue.push_back(Conjugate(alpha, x));
    while (!queue.empty()) {
      DartMap y = std::move(queue.back());
      queue.pop_back();
      if (members.contains(y)) continue;
      std::vector<DartMap> snapshot(members.begin(), members.end());
      members.insert(y);
      for (const DartMap& z : snapshot) {
        queue.push_back(ComposeMaps(*graph, y, z));
        queue.push_back(ComposeMaps(*graph, z, y));
      }
      queue.push_back(ComposeMaps(*graph, y, y));
    }
    return true;
  }

  void MarkExpanded(const DartMap& x) {
    for (const DartMap& alpha : group) expanded.insert(Conjugate(alpha, x));
  }
};

// phi moved onto the canonical graph of its class.
std::pair<CanonicalCode, DartMap> ToCanonical(const Automorphism& phi) {
  const CanonicalLabeling labeling = CanonicalLabel(phi.graph());
  const auto& to = labeling.dart_to_canonical;
  DartMap map(phi.dart_map().size());
  for (std::size_t d = 0; d < map.size(); ++d) {
    map[static_cast<std::size_t>(to[d])] = to[static_cast<std::size_t>(phi.dart_map()[d])];
  }
  return {labeling.code, std::move(map)};
}

}  // namespace

StateKey MakeStateKey(const Automorphism& phi) {
  return CanonicalLabel(phi.graph(), phi.dart_map()).code;
}

int OddOrderPart(const Automorphism& phi) {
  int order = Order(phi);
  while (order % 2 == 0) order /= 2;
  return order;
}

FEquivalence FEquivalent(const Automorphism& phi, const Automorphism& psi,
                         const OracleOptions& options) {
  FEquivalence out;
  if (phi.graph().genus() != psi.graph().genus() ||
      phi.graph().boundary() != psi.graph().boundary()) {
    out.verdict = FEquivalence::Verdict::kNo;
    out.reason = "graphs have different (g,b)";
    return out;
  }
  if (OddOrderPart(phi) != OddOrderPart(psi)) {
    out.verdict = FEquivalence::Verdict::kNo;
    out.reason = fmt::format("odd parts of the orders differ ({} vs {})", Order(phi), Order(psi));
    return out;
  }
  const StateKey goal = MakeStateKey(psi);

  struct Node {
    Automorphism phi;
    int parent;
    std::optional<FStep> step;
  };
  std::vector<Node> nodes;
  std::set<StateKey> visited;
  nodes.push_back(Node{phi, -1, std::nullopt});
  visited.insert(MakeStateKey(phi));
  out.states = 1;

  auto finish = [&](int index) {
    for (int i = index; nodes[static_cast<std::size_t>(i)].parent >= 0;
         i = nodes[static_cast<std::size_t>(i)].parent) {
      out.path.push_back(*nodes[static_cast<std::size_t>(i)].step);
    }
    std::reverse(out.path.begin(), out.path.end());
    out.verdict = FEquivalence::Verdict::kYes;
    return out;
  };
  if (visited.contains(goal)) return finish(0);

  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::vector<FStep>> expansions(frontier.size());
    ParallelFor(frontier.size(), options.jobs, [&](std::size_t i) {
      expansions[i] =
          Neighbors(nodes[static_cast<std::size_t>(frontier[i])].phi, options.max_tree_ends);
    });
    std::vector<std::pair<StateKey, int>> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (FStep& step : expansions[i]) {
        if (out.states >= options.budget) {
          out.verdict = FEquivalence::Verdict::kInconclusive;
          out.reason = fmt::format("budget of {} states exhausted", options.budget);
          return out;
        }
        StateKey key = MakeStateKey(step.result);
        if (!visited.insert(key).second) continue;
        ++out.states;
        const int index = static_cast<int>(nodes.size());
        Automorphism result = step.result;
        nodes.push_back(Node{std::move(result), frontier[i], std::move(step)});
        if (key == goal) return finish(index);
        next.emplace_back(std::move(key), index);
      }
    }
    std::sort(next.begin(), next.end());
    frontier.clear();
    for (const auto& entry : next) frontier.push_back(entry.second);
  }
  out.verdict = FEquivalence::Verdict::kNo;
  out.reason = "F-equivalence class exhausted";
  return out;
}

bool ClosureReport::full() const {
  return fixed_point && std::all_of(classes.begin(), classes.end(), [](const ClassClosure& c) {
           return c.members == c.automorphisms;
         });
}

ClosureReport ClosureE(int genus, int boundary, const OracleOptions& options) {
  ClosureReport report;
  report.genus = genus;
  report.boundary = boundary;
  report.max_tree_ends = options.max_tree_ends;

  std::vector<ClassState> classes;
  for (const Graph& graph : EnumerateIsoClasses(genus, boundary)) {
    const CanonicalLabeling labeling = CanonicalLabel(graph);
    ClassState state;
    state.code = labeling.code;
    state.graph = MakeGraphPtr(ApplyLabeling(graph, labeling));
    for (const Automorphism& a : AutomorphismGroup(state.graph))
      state.group.push_back(a.dart_map());
    classes.push_back(std::move(state));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ClassState& a, const ClassState& b) { return a.code < b.code; });
  std::map<CanonicalCode, std::size_t> index;
  for (std::size_t c = 0; c < classes.size(); ++c) index[classes[c].code] = c;

  for (ClassState& state : classes) {
    state.Add(Automorphism::Identity(state.graph).dart_map());
    for (auto [e1, e2] : AllSwitchPairs(*state.graph)) {
      state.Add(MakeSwitch(state.graph, e1, e2).automorphism.dart_map());
    }
  }

  while (true) {
    std::vector<std::pair<std::size_t, DartMap>> work;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      ClassState& state = classes[c];
      for (const DartMap& x : state.members) {
        if (state.expanded.contains(x)) continue;
        state.MarkExpanded(x);
        work.emplace_back(c, x);
      }
    }
    if (work.empty()) {
      report.fixed_point = true;
      break;
    }
    ++report.rounds;
    std::vector<std::vector<std::pair<CanonicalCode, DartMap>>> images(work.size());
    std::vector<long long> counts(work.size(), 0);
    ParallelFor(work.size(), options.jobs, [&](std::size_t i) {
      const ClassState& state = classes[work[i].first];
      const Automorphism phi(state.graph, work[i].second);
      for (const FStep& step : Neighbors(phi, options.max_tree_ends)) {
        images[i].push_back(ToCanonical(step.result));
        ++counts[i];
      }
    });
    for (std::size_t i = 0; i < work.size(); ++i) {
      report.transports += counts[i];
      for (const auto& [code, map] : images[i]) {
        ClassState& target = classes.at(index.at(code));
        DartMap normalized = map;
        NormalizeLoops(*target.graph, normalized);
        target.Add(normalized);
      }
    }
    if (report.transports > options.budget) break;
  }

  std::set<StateKey> members;
  for (const ClassState& state : classes) {
    report.classes.push_back(ClassClosure{state.code, state.group.size(), state.members.size()});
    for (const DartMap& x : state.members) {
      members.insert(CanonicalLabel(*state.graph, x).code);
    }
  }
  report.members.assign(members.begin(), members.end());
  return report;
}

ClosureBound SmallestSufficientBound(int genus, int boundary, const OracleOptions& options) {
  ClosureBound out;
  for (int bound = 4; bound <= options.max_tree_ends; ++bound) {
    OracleOptions at = options;
    at.max_tree_ends = bound;
    out.report = ClosureE(genus, boundary, at);
    if (out.report.full()) {
      out.smallest_sufficient = bound;
      return out;
    }
  }
  return out;
}

std::vector<std::vector<CanonicalCode>> MoveGraphComponents(int genus, int boundary) {
  std::vector<Graph> graphs = EnumerateIsoClasses(genus, boundary);
  std::map<CanonicalCode, std::size_t> index;
  std::vector<CanonicalCode> codes;
  for (const Graph& graph : graphs) {
    codes.push_back(CanonicalForm(graph));
    index[codes.back()] = codes.size() - 1;
  }
  std::vector<std::size_t> parent(graphs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& graph = graphs[i];
    for (int e = 0; e < graph.num_edges(); ++e) {
      if (graph.is_loop(EdgeId(e)) || ClassifyEdge(graph, EdgeId(e)) != EdgeKind::kInternal) {
        continue;
      }
      for (EdgeCoupling coupling : {EdgeCoupling::kParallel, EdgeCoupling::kCrossed}) {
        const Graph moved = ApplyEdgeFMove(graph, EdgeId(e), coupling).graph;
        parent[find(i)] = find(index.at(CanonicalForm(moved)));
      }
    }
  }
  std::map<std::size_t, std::vector<CanonicalCode>> groups;
  for (std::size_t i = 0; i < graphs.size(); ++i) groups[find(i)].push_back(codes[i]);
  std::vector<std::vector<CanonicalCode>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trivalent
