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

#include "trivalent/decompose.h"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "trivalent/oracle.h"

namespace trivalent {
namespace {

bool IsPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Every automorphism induced across `spec`, with the boundary loops its lift
// reverses. Distinct results, in mask order.
std::vector<std::pair<std::vector<EdgeId>, Automorphism>> Lifts(const Automorphism& phi,
                                                                const FMoveSpec& spec) {
  const GraphPtr target = MakeGraphPtr(ApplyFMove(phi.graph(), spec).graph);
  const std::vector<EdgeId> loops = BoundaryLoops(phi.graph(), spec);
  std::vector<std::pair<std::vector<EdgeId>, Automorphism>> out;
  for (unsigned mask = 0; mask < (1u << loops.size()); ++mask) {
    std::vector<EdgeId> reversed;
    for (std::size_t k = 0; k < loops.size(); ++k) {
      if (mask & (1u << k)) reversed.push_back(loops[k]);
    }
    TransportResult r = Transport(phi, spec, reversed, target);
    auto* image = std::get_if<Automorphism>(&r);
    if (image == nullptr) continue;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const auto& entry) { return entry.second == *image; });
    if (!seen) out.emplace_back(std::move(reversed), std::move(*image));
  }
  return out;
}

ReductionStep TransportStep(const Automorphism& before, FMoveSpec move,
                            std::vector<EdgeId> reversed, Automorphism after) {
  return {ReductionStep::Kind::kTransport,
          {},
          std::move(move),
          std::move(reversed),
          before,
          std::move(after)};
}

ReductionStep SwitchStep(const Automorphism& before, EdgeId e1, EdgeId e2) {
  if (e2 < e1) std::swap(e1, e2);
  const Automorphism s = MakeSwitch(before.graph_ptr(), e1, e2).automorphism;
  return {ReductionStep::Kind::kSwitch, {e1, e2}, {}, {}, before, Compose(s, before)};
}

bool FixesAnEdge(const Automorphism& phi) {
  for (int e = 0; e < phi.graph().num_edges(); ++e) {
    if (phi(DartId(2 * e)) == DartId(2 * e) && phi(DartId(2 * e + 1)) == DartId(2 * e + 1)) {
      return true;
    }
  }
  return false;
}

std::optional<EdgeId> ReversedEdge(const Automorphism& phi) {
  const Graph& graph = phi.graph();
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (!graph.is_loop(EdgeId(e)) && phi(DartId(2 * e)) == DartId(2 * e + 1)) return EdgeId(e);
  }
  return std::nullopt;
}

bool Order2Ready(const Automorphism& phi) {
  return phi.is_identity() ||
         (Order(phi) == 2 && (FixesAnEdge(phi) || ReversedEdge(phi).has_value()));
}

// Breadth-first search over invariant-move transports for a state accepted
// by `goal`. Throws kBudget when the budget runs out first.
Reduction SearchTransports(const Automorphism& start,
                           const std::function<bool(const Automorphism&)>& goal,
                           const SearchOptions& options, std::string_view what) {
  struct Node {
    Automorphism phi;
    int parent;
    std::optional<ReductionStep> step;
  };
  std::vector<Node> nodes{{start, -1, std::nullopt}};
  std::set<StateKey> seen{MakeStateKey(start)};
  auto path_to = [&](int index) {
    Reduction r;
    for (int k = index; nodes[static_cast<std::size_t>(k)].parent >= 0;
         k = nodes[static_cast<std::size_t>(k)].parent) {
      r.steps.push_back(*nodes[static_cast<std::size_t>(k)].step);
    }
    std::reverse(r.steps.begin(), r.steps.end());
    return r;
  };
  if (goal(start)) return {};
  InvariantMoveOptions move_options;
  move_options.max_tree_ends = options.max_tree_ends;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Automorphism current = nodes[head].phi;
    for (const FMoveSpec& move : EnumerateInvariantFMoves(current, move_options)) {
      for (auto& [reversed, image] : Lifts(current, move)) {
        if (!seen.insert(MakeStateKey(image)).second) continue;
        if (static_cast<long long>(nodes.size()) >= options.budget) {
          throw Error(ErrorCode::kBudget,
                      fmt::format("{}: no state found within {} states", what, options.budget));
        }
        nodes.push_back(
            {image, static_cast<int>(head), TransportStep(current, move, reversed, image)});
        if (goal(image)) return path_to(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  throw Error(ErrorCode::kBudget,
              fmt::format("{}: search space exhausted after {} states", what, nodes.size()));
}

// An involution pair with tau o sigma = phi, both accepted by ReduceOrder2.
// Prefers sigma fixing an edge and tau reversing one.
std::optional<std::pair<Automorphism, Automorphism>> InvolutionPair(const Automorphism& phi) {
  std::optional<std::pair<Automorphism, Automorphism>> fallback;
  for (const Automorphism& sigma : AutomorphismGroup(phi.graph_ptr())) {
    if (sigma.is_identity() || !Compose(sigma, sigma).is_identity()) continue;
    const Automorphism tau = Compose(phi, sigma);
    if (tau.is_identity() || !Compose(tau, tau).is_identity()) continue;
    if (!Order2Ready(sigma) || !Order2Ready(tau)) continue;
    if (FixesAnEdge(sigma) && ReversedEdge(tau)) return std::make_pair(sigma, tau);
    if (!fallback) fallback.emplace(sigma, tau);
  }
  return fallback;
}

struct ReductionSite {
  DartId d1, d2;  // at v, exchanged by phi^(M/2)
};

// A trivalent vertex of order M/2 with a dart fixed by phi^(M/2) and two
// darts of order-M edges exchanged by it.
std::vector<ReductionSite> ReductionSites(const Automorphism& phi, const OrbitReport& report,
                                          int top) {
  const Graph& graph = phi.graph();
  const Automorphism half = Power(phi, top / 2);
  std::vector<ReductionSite> sites;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (!graph.is_trivalent(VertexId(v))) continue;
    if (report.vertex_orders[static_cast<std::size_t>(v)] != top / 2) continue;
    std::vector<int> cell(graph.cell(VertexId(v)).begin(), graph.cell(VertexId(v)).end());
    std::sort(cell.begin(), cell.end());
    for (int d : cell) {
      const DartId d1(d), d2 = half(DartId(d));
      if (d2.value() <= d) continue;
      const EdgeId e1 = Graph::edge_of(d1), e2 = Graph::edge_of(d2);
      if (e1 == e2 || graph.is_loop(e1) || graph.is_loop(e2)) continue;
      if (report.edge_orders[static_cast<std::size_t>(e1.value())] != top) continue;
      sites.push_back({d1, d2});
    }
  }
  return sites;
}

// One step strictly lowering the metric, or nullopt.
std::optional<ReductionStep> EdgeOrderStep(const Automorphism& phi) {
  const Graph& graph = phi.graph();
  const OrbitReport report = ComputeOrbitReport(phi);
  const int top = *std::max_element(report.edge_orders.begin(), report.edge_orders.end());
  const auto metric = EdgeOrderMetric(phi);
  for (const ReductionSite& site : ReductionSites(phi, report, top)) {
    const VertexId w1 = graph.vertex_of(Graph::mate(site.d1));
    const VertexId w2 = graph.vertex_of(Graph::mate(site.d2));
    const EdgeId e1 = Graph::edge_of(site.d1), e2 = Graph::edge_of(site.d2);
    if ((graph.is_univalent(w1) && graph.is_univalent(w2)) || w1 == w2) {
      ReductionStep step = SwitchStep(phi, e1, e2);
      if (EdgeOrderMetric(step.after) < metric) return step;
      continue;
    }
    // Re-couple the orbit of the two-edge tree so that one orbit of order M
    // becomes two of order M/2.
    std::vector<EdgeId> tree{std::min(e1, e2), std::max(e1, e2)};
    InvariantMoveOptions options;
    options.max_tree_ends = 5;
    std::optional<ReductionStep> best;
    std::pair<int, int> best_metric = metric;
    for (const FMoveSpec& move : EnumerateInvariantFMoves(phi, options)) {
      const bool on_site =
          std::any_of(move.trees.begin(), move.trees.end(),
                      [&](const TreeReplacement& t) { return t.interior == tree; });
      if (!on_site) continue;
      for (auto& [reversed, image] : Lifts(phi, move)) {
        const auto m = EdgeOrderMetric(image);
        if (m < best_metric) {
          best_metric = m;
          best = TransportStep(phi, move, reversed, image);
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

// Certificate for the result of `reduction` is `result`; returns one for its start.
Certificate UnwindStep(const ReductionStep& step, Certificate after) {
  if (step.kind == ReductionStep::Kind::kSwitch) {
    Certificate leaf = Certificate::SwitchLeaf(step.switch_edges.first, step.switch_edges.second);
    if (after.kind() == Certificate::Kind::kIdentity) return leaf;
    std::vector<Certificate> children{std::move(leaf)};
    if (after.kind() == Certificate::Kind::kCompose) {
      children.insert(children.end(), after.children().begin(), after.children().end());
    } else {
      children.push_back(std::move(after));
    }
    return Certificate::Compose(std::move(children));
  }
  const FMoveResult moved = ApplyFMove(step.before.graph(), step.move);
  const std::vector<EdgeId> loops = BoundaryLoops(moved.graph, moved.inverse);
  for (unsigned mask = 0; mask < (1u << loops.size()); ++mask) {
    std::vector<EdgeId> reversed;
    for (std::size_t k = 0; k < loops.size(); ++k) {
      if (mask & (1u << k)) reversed.push_back(loops[k]);
    }
    const TransportResult back =
        Transport(step.after, moved.inverse, reversed, step.before.graph_ptr());
    const auto* image = std::get_if<Automorphism>(&back);
    if (image != nullptr && *image == step.before) {
      return Certificate::Transport(step.move, std::move(reversed), std::move(after));
    }
  }
  throw Error(ErrorCode::kInternal, "transport step does not carry back");
}

std::string Describe(const Automorphism& phi) {
  return fmt::format("order {} on a graph with {} edges", Order(phi), phi.graph().num_edges());
}

Certificate DecomposeViaInvolutions(const Automorphism& phi, const SearchOptions& options) {
  const InvolutionFactors f = FactorIntoInvolutions(phi, options);
  Certificate product = Certificate::Compose({ReduceOrder2(f.tau), ReduceOrder2(f.sigma)});
  return Unwind(f.reduction, std::move(product));
}

// Uniform edge orders, order a power of two.
Certificate DecomposeUniform(const Automorphism& phi, const SearchOptions& options) {
  if (phi.is_identity()) return Certificate::Identity();
  if (Order(phi) > 2) return DecomposeViaInvolutions(phi, options);
  if (Order2Ready(phi)) return ReduceOrder2(phi);
  // Either a state ReduceOrder2 accepts, or a product of two such involutions.
  std::optional<std::pair<Automorphism, Automorphism>> pair;
  const Reduction r = SearchTransports(
      phi,
      [&](const Automorphism& state) {
        pair.reset();
        if (Order2Ready(state)) return true;
        pair = InvolutionPair(state);
        return pair.has_value();
      },
      options, "order-2 normal form");
  if (pair) {
    return Unwind(r, Certificate::Compose({ReduceOrder2(pair->second), ReduceOrder2(pair->first)}));
  }
  return Unwind(r, ReduceOrder2(r.Result(phi)));
}

Certificate DecomposePrimePower(const Automorphism& phi, const SearchOptions& options) {
  if (phi.is_identity()) return Certificate::Identity();
  const int n = Order(phi);
  if (IsPowerOfTwo(n)) {
    const EdgeOrderReduction r = ReduceEdgeOrders(phi);
    const Automorphism& uniform = r.reduction.Result(phi);
    return Unwind(r.reduction, DecomposeUniform(uniform, options));
  }
  return DecomposeViaInvolutions(phi, options);
}

}  // namespace

const Automorphism& Reduction::Result(const Automorphism& start) const {
  return steps.empty() ? start : steps.back().after;
}

void Reduction::Append(const Reduction& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

Certificate Unwind(const Reduction& reduction, Certificate result) {
  for (auto it = reduction.steps.rbegin(); it != reduction.steps.rend(); ++it) {
    result = UnwindStep(*it, std::move(result));
  }
  return result;
}

std::pair<int, int> EdgeOrderMetric(const Automorphism& phi) {
  const OrbitReport report = ComputeOrbitReport(phi);
  const int top = *std::max_element(report.edge_orders.begin(), report.edge_orders.end());
  const int count =
      static_cast<int>(std::count(report.edge_orders.begin(), report.edge_orders.end(), top));
  return {std::bit_width(static_cast<unsigned>(top)) - 1, count};
}

EdgeOrderReduction ReduceEdgeOrders(const Automorphism& phi) {
  if (!IsPowerOfTwo(Order(phi))) {
    throw Error(ErrorCode::kPrecondition,
                fmt::format("edge-order reduction needs a power-of-two order, got {}", Order(phi)));
  }
  EdgeOrderReduction out;
  Automorphism current = phi;
  out.metrics.push_back(EdgeOrderMetric(current));
  while (ComputeOrbitReport(current).edge_order_set.size() > 1) {
    std::optional<ReductionStep> step = EdgeOrderStep(current);
    if (!step) {
      throw Error(ErrorCode::kInternal,
                  "no reduction site lowers the edge-order metric: " + Describe(current));
    }
    current = step->after;
    out.metrics.push_back(EdgeOrderMetric(current));
    out.reduction.steps.push_back(*std::move(step));
  }
  return out;
}

Certificate ReduceOrder2(const Automorphism& phi) {
  if (phi.is_identity()) return Certificate::Identity();
  if (Order(phi) != 2) {
    throw Error(ErrorCode::kPrecondition,
                fmt::format("order-2 reduction on an automorphism of order {}", Order(phi)));
  }
  if (FixesAnEdge(phi)) {
    const EdgeOrderReduction r = ReduceEdgeOrders(phi);
    if (!r.reduction.Result(phi).is_identity()) {
      throw Error(ErrorCode::kInternal, "edge-order reduction stopped short of the identity");
    }
    return Unwind(r.reduction, Certificate::Identity());
  }
  const std::optional<EdgeId> reversed = ReversedEdge(phi);
  if (!reversed) {
    throw Error(ErrorCode::kPrecondition, "involution neither fixes nor reverses an edge");
  }
  // Couple each end with its image so the new edge is fixed.
  for (EdgeCoupling coupling : {EdgeCoupling::kParallel, EdgeCoupling::kCrossed}) {
    const FMoveSpec move = EdgeMoveSpec(phi.graph(), *reversed, coupling);
    for (auto& [loops, image] : Lifts(phi, move)) {
      if (!image.is_identity() && !FixesAnEdge(image)) continue;
      Reduction r;
      r.steps.push_back(TransportStep(phi, move, loops, image));
      return Unwind(r, ReduceOrder2(image));
    }
  }
  throw Error(ErrorCode::kInternal, "no move on the reversed edge fixes an edge");
}

InvolutionFactors FactorIntoInvolutions(const Automorphism& phi, const SearchOptions& options) {
  const int n = Order(phi);
  if (n <= 2 || (n % 2 == 0 && !IsPowerOfTwo(n))) {
    throw Error(ErrorCode::kPrecondition,
                fmt::format("involution factorization needs order > 2, odd or a power of two; "
                            "got {}",
                            n));
  }
  std::optional<std::pair<Automorphism, Automorphism>> pair;
  const Reduction r = SearchTransports(
      phi,
      [&](const Automorphism& state) {
        pair = InvolutionPair(state);
        return pair.has_value();
      },
      options, "involution factorization");
  return {r, pair->first, pair->second};
}

Certificate Decompose(const Automorphism& phi, const SearchOptions& options) {
  Certificate result;
  if (!phi.is_identity()) {
    const CyclicFactorization factors = PrimaryDecomposition(phi);
    if (factors.factors.size() == 1) {
      result = DecomposePrimePower(phi, options);
    } else {
      std::vector<Certificate> children;
      for (const Automorphism& factor : factors.factors) {
        children.push_back(DecomposePrimePower(factor, options));
      }
      result = Certificate::Compose(std::move(children));
    }
  }
  const Verification v = VerifyCertificate(result, phi);
  if (!v.ok) throw Error(ErrorCode::kInternal, "decomposition does not verify: " + v.diagnostic);
  return result;
}

std::optional<CycleStructure> AnalyzeCycle(const Automorphism& phi, const Path& alpha,
                                           std::string* reason) {
  auto reject = [&](std::string message) -> std::optional<CycleStructure> {
    if (reason != nullptr) *reason = std::move(message);
    return std::nullopt;
  };
  const Graph& graph = phi.graph();
  try {
    RequireSimplePath(graph, alpha);
  } catch (const Error& e) {
    return reject(e.what());
  }
  const int n = Order(phi);
  const auto ends = PathVertices(graph, alpha);
  std::vector<Automorphism> powers{Automorphism::Identity(phi.graph_ptr())};
  for (int k = 1; k < n; ++k) powers.push_back(Compose(phi, powers.back()));
  auto power = [&](int k) -> const Automorphism& {
    return powers[static_cast<std::size_t>(((k % n) + n) % n)];
  };
  auto translate = [&](int k, const Path& p) {
    Path image;
    for (int d : p.darts) image.darts.push_back(power(k)(DartId(d)).value());
    return image;
  };
  std::set<EdgeId> orbit_union;
  for (int k = 0; k < n; ++k) {
    for (EdgeId e : PathEdges(translate(k, alpha))) orbit_union.insert(e);
  }

  CycleStructure s;
  s.order = n;
  s.alpha = alpha;
  s.edges.assign(orbit_union.begin(), orbit_union.end());
  const DartId first(alpha.darts.front());

  if (alpha.length() == 1 && n % 2 == 0 && power(n / 2)(first) == Graph::mate(first)) {
    if (static_cast<int>(orbit_union.size()) != n / 2) {
      return reject("diagonal edge translates are not distinct");
    }
    s.kind = CycleKind::kDiagonal;
    s.ell = 2;
    s.step = n / 2;
    s.t = 1;
    return s;
  }
  for (int t : {1, 2}) {
    if (alpha.length() != 2 || n % 3 != 0) break;
    if (power(t * n / 3)(Graph::mate(first)) != DartId(alpha.darts[1])) continue;
    if (static_cast<int>(orbit_union.size()) != n) {
      return reject("tripod translates overlap");
    }
    s.kind = CycleKind::kTripod;
    s.ell = 3;
    s.step = t * n / 3;
    s.t = t;
    return s;
  }

  std::string why = "ends are not joined by a power";
  for (int step = 1; step < n; ++step) {
    if (power(step)(ends.front()) != ends.back()) continue;
    const int ell = n / std::gcd(step, n);
    Path cycle;
    for (int k = 0; k < ell; ++k) {
      const Path piece = translate(k * step, alpha);
      cycle.darts.insert(cycle.darts.end(), piece.darts.begin(), piece.darts.end());
    }
    const auto vertices = PathVertices(graph, cycle);
    std::set<VertexId> distinct(vertices.begin(), vertices.end() - 1);
    std::set<EdgeId> cycle_edges;
    for (EdgeId e : PathEdges(cycle)) cycle_edges.insert(e);
    if (vertices.front() != vertices.back() ||
        static_cast<int>(distinct.size()) != cycle.length() ||
        static_cast<int>(cycle_edges.size()) != cycle.length()) {
      why = fmt::format("translates by {} do not close into a simple cycle", step);
      continue;
    }
    std::set<EdgeId> covered;
    bool disjoint = true;
    for (int k = 0; k < n / ell && disjoint; ++k) {
      for (EdgeId e : cycle_edges) disjoint = disjoint && covered.insert(power(k)(e)).second;
    }
    if (!disjoint || covered != orbit_union) {
      why = fmt::format("cycle copies under step {} are not a disjoint cover", step);
      continue;
    }
    s.kind = CycleKind::kCycle;
    s.ell = ell;
    s.step = step;
    s.t = step / std::gcd(step, n);
    return s;
  }
  return reject(why);
}

namespace {

bool IsNormal(const CycleStructure& s) {
  return s.kind == CycleKind::kTripod ? s.alpha.length() == 2 : s.alpha.length() == 1;
}

std::optional<CycleStructure> AnalyzeStep(const Automorphism& phi, const Path& alpha) {
  const Graph& graph = phi.graph();
  if (alpha.length() < 2) return std::nullopt;
  const EdgeId first = Graph::edge_of(DartId(alpha.darts.front()));
  std::vector<EdgeId> terminals{first};
  for (EdgeId e = phi(first); e != first; e = phi(e)) terminals.push_back(e);
  std::sort(terminals.begin(), terminals.end());

  const Path inner{{alpha.darts.begin() + 1, alpha.darts.end() - 1}};
  CycleStructure s;
  if (inner.darts.empty()) {
    const VertexId center = graph.vertex_of(DartId(alpha.darts[1]));
    int at_center = 0;
    for (int d : graph.cell(center)) {
      at_center +=
          std::binary_search(terminals.begin(), terminals.end(), Graph::edge_of(DartId(d)));
    }
    s.order = Order(phi);
    s.alpha = alpha;
    s.kind = at_center == 3 ? CycleKind::kTripod : CycleKind::kCycle;
    s.ell = at_center;
    const EdgeId last = Graph::edge_of(DartId(alpha.darts.back()));
    s.step = 1;
    for (EdgeId e = phi(first); e != last; e = phi(e)) ++s.step;
    s.t = s.step * s.ell / s.order;
  } else {
    auto analyzed = AnalyzeCycle(phi, inner);
    if (!analyzed) return std::nullopt;
    s = *std::move(analyzed);
    s.alpha = alpha;
  }
  s.terminal_edges = terminals;
  return s;
}

bool StepIsNormal(const CycleStructure& s) { return s.alpha.length() <= 4; }

using Analyzer = std::function<std::optional<CycleStructure>(const Automorphism&, const Path&)>;
using Finder = std::function<std::optional<Path>(const Automorphism&)>;

// Greedy descent on the path length through invariant moves, then a bounded
// search for any state whose minimal path is in normal form.
Normalized Normalize(const Automorphism& phi, const Path& alpha, const Analyzer& analyze,
                     const Finder& find, const std::function<bool(const CycleStructure&)>& normal,
                     const SearchOptions& options, std::string_view what) {
  if (auto s = analyze(phi, alpha); s && normal(*s)) return {{}, *std::move(s)};

  Normalized out;
  Automorphism current = phi;
  int length = alpha.length();
  InvariantMoveOptions move_options;
  move_options.max_tree_ends = options.max_tree_ends;
  while (true) {
    std::optional<ReductionStep> best;
    std::optional<Path> best_path;
    for (const FMoveSpec& move : EnumerateInvariantFMoves(current, move_options)) {
      for (auto& [reversed, image] : Lifts(current, move)) {
        if (image.is_identity()) continue;
        std::optional<Path> path = find(image);
        if (!path || path->length() >= (best_path ? best_path->length() : length)) continue;
        best_path = std::move(path);
        best = TransportStep(current, move, reversed, image);
      }
    }
    if (!best) break;
    current = best->after;
    length = best_path->length();
    out.reduction.steps.push_back(*std::move(best));
    if (auto s = analyze(current, *best_path); s && normal(*s)) {
      out.structure = *std::move(s);
      return out;
    }
  }

  std::optional<CycleStructure> found;
  const Reduction rest = SearchTransports(
      current,
      [&](const Automorphism& state) {
        if (state.is_identity()) return false;
        const std::optional<Path> path = find(state);
        if (!path) return false;
        found = analyze(state, *path);
        return found.has_value() && normal(*found);
      },
      options, what);
  out.reduction.Append(rest);
  out.structure = *std::move(found);
  return out;
}

}  // namespace

Normalized NormalizeCycle(const Automorphism& phi, const Path& alpha,
                          const SearchOptions& options) {
  RequireSimplePath(phi.graph(), alpha);
  return Normalize(
      phi, alpha, [](const Automorphism& a, const Path& p) { return AnalyzeCycle(a, p); },
      [](const Automorphism& a) { return MinimalVertexPath(a); }, IsNormal, options,
      "cycle normal form");
}

Normalized NormalizeStep(const Automorphism& phi, const Path& alpha, const SearchOptions& options) {
  RequireSimplePath(phi.graph(), alpha);
  const Graph& graph = phi.graph();
  if (alpha.length() < 2 || !graph.is_univalent(graph.vertex_of(DartId(alpha.darts.front())))) {
    throw Error(ErrorCode::kPrecondition, "path does not start with a terminal edge");
  }
  return Normalize(
      phi, alpha, AnalyzeStep, [](const Automorphism& a) { return MinimalTerminalPath(a); },
      StepIsNormal, options, "terminal normal form");
}

}  // namespace trivalent
