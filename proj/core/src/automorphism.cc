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

#include "trivalent/automorphism.h"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "text_scanner.h"
#include "trivalent/canonical.h"

namespace trivalent {

GraphPtr MakeGraphPtr(Graph graph) { return std::make_shared<const Graph>(std::move(graph)); }

bool IsDartSymmetry(const Graph& graph, std::span<const int> dart_map) {
  const int n = graph.num_darts();
  if (static_cast<int>(dart_map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    const int x = dart_map[d];
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int d = 0; d < n; ++d) {
    if (dart_map[d ^ 1] != (dart_map[d] ^ 1)) return false;
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const auto cell = graph.cell(VertexId(v));
    if (cell.empty()) continue;
    const VertexId image = graph.vertex_of(DartId(dart_map[cell[0]]));
    if (graph.degree(image) != static_cast<int>(cell.size())) return false;
    for (int d : cell) {
      if (graph.vertex_of(DartId(dart_map[d])) != image) return false;
    }
  }
  return true;
}

void NormalizeLoops(const Graph& graph, std::vector<int>& dart_map) {
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (!graph.is_loop(EdgeId(e))) continue;
    const int image = dart_map[2 * e] >> 1;
    dart_map[2 * e] = 2 * image;
    dart_map[2 * e + 1] = 2 * image + 1;
  }
}

Automorphism::Automorphism(GraphPtr graph, std::vector<int> dart_map)
    : graph_(std::move(graph)), map_(std::move(dart_map)) {
  if (!IsDartSymmetry(*graph_, map_)) {
    throw Error(ErrorCode::kInvalidGraph, "dart map is not a graph automorphism");
  }
  NormalizeLoops(*graph_, map_);
}

Automorphism Automorphism::Identity(GraphPtr graph) {
  std::vector<int> map(static_cast<std::size_t>(graph->num_darts()));
  std::iota(map.begin(), map.end(), 0);
  return Automorphism(std::move(graph), std::move(map));
}

VertexId Automorphism::operator()(VertexId v) const {
  const auto cell = graph_->cell(v);
  if (cell.empty()) return v;
  return graph_->vertex_of(DartId(map_[cell[0]]));
}

bool Automorphism::is_identity() const {
  for (int d = 0; d < static_cast<int>(map_.size()); ++d) {
    if (map_[d] != d) return false;
  }
  return true;
}

bool Automorphism::SameGraph(const Automorphism& other) const {
  return graph_ == other.graph_ || *graph_ == *other.graph_;
}

Automorphism Compose(const Automorphism& a, const Automorphism& b) {
  if (!a.SameGraph(b)) {
    throw Error(ErrorCode::kMismatchedGraphs, "composing automorphisms of different graphs");
  }
  std::vector<int> map(b.dart_map().size());
  for (std::size_t d = 0; d < map.size(); ++d) map[d] = a.dart_map()[b.dart_map()[d]];
  return Automorphism(a.graph_ptr(), std::move(map));
}

Automorphism Inverse(const Automorphism& a) {
  std::vector<int> map(a.dart_map().size());
  for (std::size_t d = 0; d < map.size(); ++d) map[a.dart_map()[d]] = static_cast<int>(d);
  return Automorphism(a.graph_ptr(), std::move(map));
}

Automorphism Power(const Automorphism& a, long long exponent) {
  const int n = Order(a);
  long long k = exponent % n;
  if (k < 0) k += n;
  Automorphism result = Automorphism::Identity(a.graph_ptr());
  Automorphism base = a;
  while (k > 0) {
    if (k & 1) result = Compose(base, result);
    base = Compose(base, base);
    k >>= 1;
  }
  return result;
}

int Order(const Automorphism& a) {
  const auto& map = a.dart_map();
  std::vector<char> seen(map.size(), 0);
  long long order = 1;
  for (std::size_t d = 0; d < map.size(); ++d) {
    if (seen[d]) continue;
    long long length = 0;
    for (std::size_t x = d; !seen[x]; x = static_cast<std::size_t>(map[x])) {
      seen[x] = 1;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return static_cast<int>(order);
}

namespace {

// Depth-first dart-image backtracking. Darts are visited in an order where
// every dart after the first is the mate or a vertex sibling of an earlier
// one, which pins its candidate images.
class SymmetrySearch {
 public:
  explicit SymmetrySearch(const Graph& graph) : graph_(graph), n_(graph.num_darts()) {
    std::vector<char> queued(n_, 0);
    for (int root = 0; root < n_; ++root) {
      if (queued[root]) continue;
      queued[root] = 1;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        const int d = order_[head++];
        auto push = [&](int x) {
          if (!queued[x]) {
            queued[x] = 1;
            order_.push_back(x);
          }
        };
        push(d ^ 1);
        for (int s : graph_.cell(graph_.vertex_of(DartId(d)))) push(s);
      }
    }
    map_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  std::vector<std::vector<int>> Run() {
    if (n_ > 0) Assign(0);
    return std::move(found_);
  }

 private:
  bool SameVertex(int a, int b) const {
    return graph_.vertex_of(DartId(a)) == graph_.vertex_of(DartId(b));
  }

  bool Consistent(int d, int c) const {
    if (used_[c]) return false;
    if (graph_.degree(graph_.vertex_of(DartId(d))) != graph_.degree(graph_.vertex_of(DartId(c)))) {
      return false;
    }
    if (map_[d ^ 1] >= 0 && map_[d ^ 1] != (c ^ 1)) return false;
    for (int z = 0; z < n_; ++z) {
      if (map_[z] < 0) continue;
      if (SameVertex(d, z) != SameVertex(c, map_[z])) return false;
    }
    return true;
  }

  void Assign(int i) {
    if (i == n_) {
      found_.push_back(map_);
      return;
    }
    const int d = order_[i];
    std::vector<int> candidates;
    if (map_[d ^ 1] >= 0) {
      candidates.push_back(map_[d ^ 1] ^ 1);
    } else {
      int anchor = -1;
      for (int s : graph_.cell(graph_.vertex_of(DartId(d)))) {
        if (map_[s] >= 0) {
          anchor = s;
          break;
        }
      }
      if (anchor >= 0) {
        for (int c : graph_.cell(graph_.vertex_of(DartId(map_[anchor])))) candidates.push_back(c);
      } else {
        for (int c = 0; c < n_; ++c) candidates.push_back(c);
      }
    }
    for (int c : candidates) {
      if (!Consistent(d, c)) continue;
      map_[d] = c;
      used_[c] = 1;
      Assign(i + 1);
      used_[c] = 0;
      map_[d] = -1;
    }
  }

  const Graph& graph_;
  int n_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> DartSymmetries(const Graph& graph) {
  auto found = SymmetrySearch(graph).Run();
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Automorphism> AutomorphismGroup(const GraphPtr& graph) {
  RequireValid(*graph);
  std::set<std::vector<int>> reps;
  for (auto& map : SymmetrySearch(*graph).Run()) {
    NormalizeLoops(*graph, map);
    reps.insert(std::move(map));
  }
  std::vector<Automorphism> group;
  group.reserve(reps.size());
  for (const auto& map : reps) group.emplace_back(graph, map);
  return group;
}

OrbitReport ComputeOrbitReport(const Automorphism& phi) {
  const Graph& graph = phi.graph();
  OrbitReport report;
  report.order = Order(phi);
  const int vertices = graph.num_vertices();
  report.vertex_orders.assign(vertices, 0);
  for (int v = 0; v < vertices; ++v) {
    int length = 1;
    for (VertexId x = phi(VertexId(v)); x != VertexId(v); x = phi(x)) ++length;
    report.vertex_orders[v] = length;
  }
  const int edges = graph.num_edges();
  report.edge_orders.assign(edges, 0);
  report.edge_orbit_sizes.assign(edges, 0);
  for (int e = 0; e < edges; ++e) {
    int length = 1;
    for (EdgeId x = phi(EdgeId(e)); x != EdgeId(e); x = phi(x)) ++length;
    report.edge_orbit_sizes[e] = length;
    // A non-loop edge counts as oriented; a loop does not.
    if (graph.is_loop(EdgeId(e))) {
      report.edge_orders[e] = length;
    } else {
      const DartId start(2 * e);
      int dart_length = 1;
      for (DartId x = phi(start); x != start; x = phi(x)) ++dart_length;
      report.edge_orders[e] = dart_length;
    }
  }
  std::set<int> edge_set(report.edge_orders.begin(), report.edge_orders.end());
  std::set<int> vertex_set(report.vertex_orders.begin(), report.vertex_orders.end());
  report.edge_order_set.assign(edge_set.begin(), edge_set.end());
  report.vertex_order_set.assign(vertex_set.begin(), vertex_set.end());
  return report;
}

namespace {

bool IsPowerOfTwo(int x) { return x > 0 && (x & (x - 1)) == 0; }

int Log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

// Case analysis at end v of edge e; empty string when consistent.
std::string CheckEnd(const Automorphism& phi, const OrbitReport& report, EdgeId e, VertexId v) {
  const Graph& graph = phi.graph();
  const int ov = report.vertex_orders[v.value()];
  const int oe = report.edge_orders[e.value()];
  const int ratio = oe % ov == 0 ? oe / ov : 0;
  // Distinct edges at v other than e.
  std::vector<EdgeId> others;
  for (int d : graph.cell(v)) {
    const EdgeId x = Graph::edge_of(DartId(d));
    if (x != e && std::find(others.begin(), others.end(), x) == others.end()) others.push_back(x);
  }
  const bool three_distinct = graph.is_trivalent(v) && others.size() == 2;
  auto power_image = [&](int k) {
    EdgeId x = e;
    for (int i = 0; i < k; ++i) x = phi(x);
    return x;
  };
  bool case2 = false;
  bool case3 = false;
  if (three_distinct) {
    const EdgeId once = power_image(ov);
    const EdgeId twice = power_image(2 * ov);
    for (int i = 0; i < 2; ++i) {
      const EdgeId ep = others[i];
      const EdgeId epp = others[1 - i];
      if (once == ep && report.edge_orders[epp.value()] == ov) case2 = true;
      if (once == ep && twice == epp) case3 = true;
    }
  }
  if (ratio == 1) {
    if (case2 || case3)
      return fmt::format("edge {} has order of its end {} yet a case-2/3 pattern", e.value(),
                         v.value());
    return {};
  }
  if (ratio == 2) {
    if (!case2)
      return fmt::format("edge {} doubles the order of end {} without the case-2 pattern",
                         e.value(), v.value());
    return {};
  }
  if (ratio == 3) {
    if (!case3)
      return fmt::format("edge {} triples the order of end {} without the case-3 pattern",
                         e.value(), v.value());
    return {};
  }
  return fmt::format("edge {} has order {} but end {} has order {}", e.value(), oe, v.value(), ov);
}

}  // namespace

std::optional<std::string> OrdersViolation(const Automorphism& phi, const OrbitReport& report) {
  const Graph& graph = phi.graph();
  for (int e = 0; e < graph.num_edges(); ++e) {
    auto [v, w] = graph.ends(EdgeId(e));
    const int oe = report.edge_orders[e];
    const int orbit = report.edge_orbit_sizes[e];
    bool reversible = false;
    if (v != w) {
      // Some power fixes e and swaps its ends.
      VertexId a = v;
      VertexId b = w;
      EdgeId x(e);
      for (int k = 0; k < report.order; ++k) {
        if (x == EdgeId(e) && a == w && b == v) reversible = true;
        a = phi(a);
        b = phi(b);
        x = phi(x);
      }
    }
    const int ends_lcm = std::lcm(report.vertex_orders[v.value()], report.vertex_orders[w.value()]);
    if (oe % ends_lcm != 0) {
      return fmt::format("edge {}: order {} not a multiple of its ends' LCM {}", e, oe, ends_lcm);
    }
    const int expected = reversible ? 2 * orbit : orbit;
    if (oe != expected) {
      return fmt::format("edge {}: order {} but orbit size {}{}", e, oe, orbit,
                         reversible ? " (reversible)" : "");
    }
    for (VertexId end : {v, w}) {
      std::string problem = CheckEnd(phi, report, EdgeId(e), end);
      if (!problem.empty()) return problem;
    }
  }

  const auto& edge_set = report.edge_order_set;
  if (edge_set.empty()) return std::nullopt;
  const int m = edge_set.front();
  const int k = static_cast<int>(edge_set.size()) - 1;
  for (int i = 0; i <= k; ++i) {
    if (edge_set[i] != (m << i)) return fmt::format("edge orders are not of the form m*2^i");
  }
  if (report.order != (m << k)) {
    return fmt::format("order {} differs from 2^k m = {}", report.order, m << k);
  }

  // Vertex orders: {m, 2m, ..., 2^h m} with k-1 <= h <= k, plus values 2^j m/3.
  int h = -1;
  bool has_third = false;
  for (int value : report.vertex_order_set) {
    if (value % m == 0 && IsPowerOfTwo(value / m)) {
      h = std::max(h, Log2(value / m));
    } else if ((3 * value) % m == 0 && IsPowerOfTwo(3 * value / m) && Log2(3 * value / m) <= k) {
      has_third = true;
    } else {
      return fmt::format("vertex order {} outside the admissible set", value);
    }
  }
  for (int i = 0; i <= h; ++i) {
    if (!std::binary_search(report.vertex_order_set.begin(), report.vertex_order_set.end(),
                            m << i)) {
      return fmt::format("vertex order {} missing", m << i);
    }
  }
  if (h < k - 1 || h > k) return fmt::format("vertex exponent {} outside [{}, {}]", h, k - 1, k);
  if (has_third && m % 3 != 0)
    return fmt::format("vertex orders m/3 with m={} not a multiple of 3", m);
  return std::nullopt;
}

OrbitReport MakeOrbitReport(const Automorphism& phi) {
  OrbitReport report = ComputeOrbitReport(phi);
  if (auto problem = OrdersViolation(phi, report)) {
    throw Error(ErrorCode::kInternal, "orders structure violated: " + *problem);
  }
  return report;
}

CyclicFactorization PrimaryDecomposition(const Automorphism& phi) {
  CyclicFactorization result;
  const long long n = Order(phi);
  long long rest = n;
  for (long long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    long long q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    const long long r = n / q;
    // Inverse of r modulo q.
    long long inv = 1;
    for (long long x = 1; x < q; ++x) {
      if ((r * x) % q == 1) {
        inv = x;
        break;
      }
    }
    result.factors.push_back(Power(phi, (r * inv) % n));
    result.orders.push_back(static_cast<int>(q));
  }
  return result;
}

Switch MakeSwitch(const GraphPtr& graph, EdgeId e1, EdgeId e2) {
  const Graph& g = *graph;
  if (!g.contains(e1) || !g.contains(e2)) {
    throw Error(ErrorCode::kUnknownElement, "unknown edge in switch");
  }
  if (e1 == e2) throw Error(ErrorCode::kNotAdjacent, "a switch needs two distinct edges");
  if (g.is_loop(e1) || g.is_loop(e2)) {
    throw Error(ErrorCode::kNotASwitch, fmt::format("switching {} and {} cannot fix the rest: loop",
                                                    e1.value(), e2.value()));
  }
  auto [a1, b1] = Graph::darts_of(e1);
  auto [a2, b2] = Graph::darts_of(e2);
  // Orient both edges away from a common vertex.
  DartId d1{}, d2{};
  bool found = false;
  for (DartId x : {a1, b1}) {
    for (DartId y : {a2, b2}) {
      if (!found && g.vertex_of(x) == g.vertex_of(y)) {
        d1 = x;
        d2 = y;
        found = true;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::kNotAdjacent,
                fmt::format("edges {} and {} are not adjacent", e1.value(), e2.value()));
  }
  std::vector<int> map(static_cast<std::size_t>(g.num_darts()));
  std::iota(map.begin(), map.end(), 0);
  map[d1.value()] = d2.value();
  map[d2.value()] = d1.value();
  map[Graph::mate(d1).value()] = Graph::mate(d2).value();
  map[Graph::mate(d2).value()] = Graph::mate(d1).value();
  if (!IsDartSymmetry(g, map)) {
    throw Error(ErrorCode::kNotASwitch,
                fmt::format("switching {} and {} does not extend to an automorphism fixing "
                            "the rest",
                            e1.value(), e2.value()));
  }
  const SwitchKind kind =
      ClassifyEdge(g, e1) == EdgeKind::kTerminal ? SwitchKind::kTerminal : SwitchKind::kInternal;
  return {Automorphism(graph, std::move(map)), kind};
}

std::vector<std::pair<EdgeId, EdgeId>> AllSwitchPairs(const Graph& graph) {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  auto shared = std::make_shared<const Graph>(graph);
  for (int a = 0; a < graph.num_edges(); ++a) {
    for (int b = a + 1; b < graph.num_edges(); ++b) {
      try {
        MakeSwitch(shared, EdgeId(a), EdgeId(b));
        pairs.emplace_back(EdgeId(a), EdgeId(b));
      } catch (const Error&) {
      }
    }
  }
  return pairs;
}

std::string GraphHash(const Graph& graph) { return CanonicalForm(graph).Digest(); }

std::string FormatAutomorphism(const Automorphism& phi) {
  std::string out = fmt::format("aut {}\n", GraphHash(phi.graph()));
  for (int d = 0; d < static_cast<int>(phi.dart_map().size()); ++d) {
    out += fmt::format("dart {} -> {}\n", d, phi.dart_map()[d]);
  }
  return out;
}

Automorphism ParseAutomorphism(std::string_view text, const GraphPtr& graph) {
  using internal::Fail;
  const auto lines = internal::TokenizeLines(text, /*split_parens=*/false);
  if (lines.empty()) internal::FailAt(1, 1, "empty automorphism file");
  const auto& header = lines.front();
  if (header[0].text != "aut" || header.size() != 2) Fail(header[0], "expected 'aut <graph-hash>'");
  const std::string expected = GraphHash(*graph);
  if (header[1].text != expected) {
    Fail(header[1], fmt::format("graph hash {} does not match graph {}", header[1].text, expected));
  }
  const int n = graph->num_darts();
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  std::vector<char> listed(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0].text != "dart" || t.size() != 4 || t[2].text != "->") {
      Fail(t[0], "expected 'dart <i> -> <j>'");
    }
    const int from = internal::ParseInt(t[1], "dart");
    const int to = internal::ParseInt(t[3], "dart");
    if (from < 0 || from >= n) Fail(t[1], fmt::format("dart {} out of range", from));
    if (to < 0 || to >= n) Fail(t[3], fmt::format("dart {} out of range", to));
    if (listed[from]) Fail(t[1], fmt::format("dart {} listed twice", from));
    listed[from] = 1;
    map[from] = to;
  }
  if (!IsDartSymmetry(*graph, map)) {
    internal::FailAt(lines.back()[0].line, 1, "dart map is not an automorphism of the graph");
  }
  return Automorphism(graph, std::move(map));
}

}  // namespace trivalent
