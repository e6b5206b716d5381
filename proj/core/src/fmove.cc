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

#include "trivalent/fmove.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "text_scanner.h"
#include "trivalent/graph_io.h"

namespace trivalent {

namespace {

using internal::Token;

std::vector<int> Ids(std::span<const EdgeId> edges) {
  std::vector<int> out;
  for (EdgeId e : edges) out.push_back(e.value());
  return out;
}

[[noreturn]] void InvalidMove(const std::string& message) {
  throw Error(ErrorCode::kInvalidMove, message);
}

int MinLeaf(const Coupling::Node& node) {
  if (node.leaf >= 0) return node.leaf;
  int best = -1;
  for (const auto& child : node.children) {
    const int m = MinLeaf(child);
    if (best < 0 || m < best) best = m;
  }
  return best;
}

// Unrooted tree: nodes [0, leaves) are leaves, the rest internal.
struct Unrooted {
  std::vector<int> leaf_value;  // per leaf node
  std::vector<std::vector<int>> adjacent;
};

// Links use negative ids for leaves (-1 - leaf index).
void AddNode(const Coupling::Node& node, int parent, std::vector<int>& leaf_values,
             std::vector<std::pair<int, int>>& links, int& next_internal) {
  if (node.leaf >= 0) {
    const int id = static_cast<int>(leaf_values.size());
    leaf_values.push_back(node.leaf);
    links.emplace_back(parent, -1 - id);
    return;
  }
  const int id = next_internal++;
  if (parent != -1) links.emplace_back(parent, id);
  for (const auto& child : node.children) AddNode(child, id, leaf_values, links, next_internal);
}

Unrooted ToUnrooted(const Coupling::Node& root) {
  Unrooted tree;
  std::vector<int> leaf_values;
  std::vector<std::pair<int, int>> links;
  int next_internal = 0;
  AddNode(root, -1, leaf_values, links, next_internal);
  const int leaves = static_cast<int>(leaf_values.size());
  const int total = leaves + next_internal;
  tree.leaf_value = leaf_values;
  tree.adjacent.assign(total, {});
  auto index = [&](int x) { return x < 0 ? -1 - x : leaves + x; };
  for (auto [a, b] : links) {
    const int u = index(a);
    const int v = index(b);
    tree.adjacent[u].push_back(v);
    tree.adjacent[v].push_back(u);
  }
  // Suppress a binary root.
  const int root_id = leaves;
  if (root.leaf < 0 && root.children.size() == 2) {
    const int x = tree.adjacent[root_id][0];
    const int y = tree.adjacent[root_id][1];
    std::replace(tree.adjacent[x].begin(), tree.adjacent[x].end(), root_id, y);
    std::replace(tree.adjacent[y].begin(), tree.adjacent[y].end(), root_id, x);
    tree.adjacent[root_id].clear();
  }
  return tree;
}

Coupling::Node Hang(const Unrooted& tree, int node, int parent) {
  const int leaves = static_cast<int>(tree.leaf_value.size());
  if (node < leaves) return Coupling::Node{tree.leaf_value[node], {}};
  Coupling::Node out;
  for (int next : tree.adjacent[node]) {
    if (next != parent) out.children.push_back(Hang(tree, next, node));
  }
  std::sort(out.children.begin(), out.children.end(),
            [](const auto& a, const auto& b) { return MinLeaf(a) < MinLeaf(b); });
  return out;
}

void CollectLeaves(const Coupling::Node& node, std::vector<int>& out) {
  if (node.leaf >= 0) {
    out.push_back(node.leaf);
    return;
  }
  for (const auto& child : node.children) CollectLeaves(child, out);
}

std::string NodeText(const Coupling::Node& node) {
  if (node.leaf >= 0) return std::to_string(node.leaf);
  std::string out = "(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ' ';
    out += NodeText(node.children[i]);
  }
  return out + ")";
}

void CheckShape(const Coupling::Node& node, bool is_root) {
  if (node.leaf >= 0) return;
  const std::size_t n = node.children.size();
  if (is_root ? (n != 2 && n != 3) : n != 2) {
    InvalidMove(fmt::format("coupling node with {} children is not binary", n));
  }
  for (const auto& child : node.children) CheckShape(child, false);
}

// Recursive-descent parser over tokens.
class ExpressionParser {
 public:
  ExpressionParser(const std::vector<Token>& tokens, std::size_t pos)
      : tokens_(tokens), pos_(pos) {}

  Coupling::Node Parse() {
    if (pos_ >= tokens_.size()) {
      const Token& last = tokens_.back();
      internal::FailAt(last.line, last.column + static_cast<int>(last.text.size()),
                       "expected coupling expression");
    }
    const Token& token = tokens_[pos_++];
    if (token.text == "(") {
      Coupling::Node node;
      while (true) {
        if (pos_ >= tokens_.size()) {
          internal::FailAt(token.line, token.column, "unbalanced '('");
        }
        if (tokens_[pos_].text == ")") {
          ++pos_;
          break;
        }
        node.children.push_back(Parse());
      }
      if (node.children.empty()) internal::Fail(token, "empty coupling group");
      return node;
    }
    if (token.text == ")") internal::Fail(token, "unexpected ')'");
    const int leaf = internal::ParseInt(token, "dart id");
    if (leaf < 0) internal::Fail(token, "negative dart id");
    return Coupling::Node{leaf, {}};
  }

  std::size_t position() const { return pos_; }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_;
};

std::vector<Coupling::Node> RootedTrees(std::span<const int> leaves) {
  if (leaves.size() == 1) return {Coupling::Node{leaves[0], {}}};
  std::vector<Coupling::Node> out;
  const int rest = static_cast<int>(leaves.size()) - 1;
  // Subsets of the leaves after the first that join it on side A.
  for (int mask = 0; mask < (1 << rest) - 1; ++mask) {
    std::vector<int> a{leaves[0]};
    std::vector<int> b;
    for (int i = 0; i < rest; ++i) {
      (mask >> i & 1 ? a : b).push_back(leaves[i + 1]);
    }
    for (const auto& left : RootedTrees(a)) {
      for (const auto& right : RootedTrees(b)) out.push_back(Coupling::Node{-1, {left, right}});
    }
  }
  return out;
}

}  // namespace

Coupling Coupling::FromNode(Node root) {
  CheckShape(root, true);
  std::vector<int> leaves;
  CollectLeaves(root, leaves);
  std::sort(leaves.begin(), leaves.end());
  if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) {
    InvalidMove("coupling repeats a leaf");
  }
  if (leaves.size() < 3) InvalidMove("coupling needs at least three leaves");

  const Unrooted tree = ToUnrooted(root);
  const int leaf_count = static_cast<int>(tree.leaf_value.size());
  // Re-root at the internal neighbor of the smallest leaf.
  int smallest = 0;
  for (int i = 1; i < leaf_count; ++i) {
    if (tree.leaf_value[i] < tree.leaf_value[smallest]) smallest = i;
  }
  const int hub = tree.adjacent[smallest][0];
  Node canonical;
  for (int next : tree.adjacent[hub]) canonical.children.push_back(Hang(tree, next, hub));
  std::sort(canonical.children.begin(), canonical.children.end(),
            [](const auto& a, const auto& b) { return MinLeaf(a) < MinLeaf(b); });

  Coupling c;
  c.leaves_ = leaves;
  // Splits: leaf sets of non-leaf subtrees below the canonical root.
  std::function<std::vector<int>(const Node&)> walk = [&](const Node& node) {
    std::vector<int> below;
    CollectLeaves(node, below);
    std::sort(below.begin(), below.end());
    if (node.leaf < 0) {
      for (const auto& child : node.children) walk(child);
      c.splits_.push_back(below);
    }
    return below;
  };
  for (const auto& child : canonical.children) walk(child);
  std::sort(c.splits_.begin(), c.splits_.end());
  c.root_ = std::move(canonical);
  return c;
}

Coupling Coupling::Parse(std::string_view text) {
  const auto lines = internal::TokenizeLines(text, /*split_parens=*/true);
  if (lines.empty()) internal::FailAt(1, 1, "empty coupling");
  std::vector<Token> tokens;
  for (const auto& line : lines) tokens.insert(tokens.end(), line.begin(), line.end());
  ExpressionParser parser(tokens, 0);
  Node root = parser.Parse();
  if (parser.position() != tokens.size()) {
    internal::Fail(tokens[parser.position()], "trailing tokens after coupling");
  }
  return FromNode(std::move(root));
}

Coupling Coupling::OfTree(const Graph& graph, std::span<const EdgeId> interior) {
  const std::vector<VertexId> vertices = TreeVertices(graph, interior);
  std::vector<char> inside(static_cast<std::size_t>(graph.num_edges()), 0);
  for (EdgeId e : interior) inside[static_cast<std::size_t>(e.value())] = 1;
  std::function<Node(VertexId, int)> hang = [&](VertexId v, int entry) {
    Node node;
    for (int d : graph.cell(v)) {
      if (d == entry) continue;
      const EdgeId e = Graph::edge_of(DartId(d));
      if (inside[static_cast<std::size_t>(e.value())]) {
        const int mate = d ^ 1;
        node.children.push_back(hang(graph.vertex_of(DartId(mate)), mate));
      } else {
        node.children.push_back(Node{d, {}});
      }
    }
    return node;
  };
  return FromNode(hang(vertices.front(), -1));
}

std::vector<Coupling> Coupling::All(std::vector<int> leaves) {
  std::sort(leaves.begin(), leaves.end());
  if (leaves.size() < 3) InvalidMove("coupling needs at least three leaves");
  std::vector<Coupling> out;
  for (auto& rooted : RootedTrees(std::span<const int>(leaves).subspan(1))) {
    Node root{-1, {Node{leaves[0], {}}}};
    for (auto& child : rooted.children) root.children.push_back(std::move(child));
    out.push_back(FromNode(std::move(root)));
  }
  return out;
}

std::string Coupling::ToString() const { return NodeText(root_); }

Coupling Coupling::Mapped(std::span<const int> dart_map) const {
  std::function<Node(const Node&)> map = [&](const Node& node) {
    if (node.leaf >= 0) return Node{dart_map[static_cast<std::size_t>(node.leaf)], {}};
    Node out;
    for (const auto& child : node.children) out.children.push_back(map(child));
    return out;
  };
  return FromNode(map(root_));
}

std::vector<VertexId> TreeVertices(const Graph& graph, std::span<const EdgeId> interior) {
  if (interior.empty()) InvalidMove("a tree needs at least one interior edge");
  std::set<int> edges;
  std::set<int> vertices;
  for (EdgeId e : interior) {
    if (!graph.contains(e)) InvalidMove(fmt::format("unknown edge {}", e.value()));
    if (!edges.insert(e.value()).second) InvalidMove(fmt::format("edge {} repeated", e.value()));
    if (graph.is_loop(e)) InvalidMove(fmt::format("edge {} is a loop", e.value()));
    auto [v, w] = graph.ends(e);
    if (!graph.is_trivalent(v) || !graph.is_trivalent(w)) {
      InvalidMove(fmt::format("edge {} is not internal", e.value()));
    }
    vertices.insert(v.value());
    vertices.insert(w.value());
  }
  if (vertices.size() != edges.size() + 1) {
    InvalidMove(fmt::format("edges {} do not form a tree", fmt::join(edges, " ")));
  }
  // Connectivity by flooding from one vertex.
  std::set<int> reached{*vertices.begin()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int e : edges) {
      auto [v, w] = graph.ends(EdgeId(e));
      const bool has_v = reached.contains(v.value());
      const bool has_w = reached.contains(w.value());
      if (has_v != has_w) {
        reached.insert(has_v ? w.value() : v.value());
        grew = true;
      }
    }
  }
  if (reached.size() != vertices.size()) {
    InvalidMove(fmt::format("edges {} are not connected", fmt::join(edges, " ")));
  }
  std::vector<VertexId> out;
  for (int v : vertices) out.emplace_back(v);
  return out;
}

std::vector<int> BoundaryDarts(const Graph& graph, std::span<const EdgeId> interior) {
  const std::vector<VertexId> vertices = TreeVertices(graph, interior);
  std::vector<int> out;
  for (VertexId v : vertices) {
    for (int d : graph.cell(v)) {
      const EdgeId e = Graph::edge_of(DartId(d));
      if (std::find(interior.begin(), interior.end(), e) == interior.end()) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct TreeSite {
  std::vector<VertexId> vertices;
  std::vector<int> boundary;
};

std::vector<TreeSite> CheckFamily(const Graph& graph, const FMoveSpec& spec) {
  if (spec.trees.empty()) InvalidMove("move has no trees");
  std::vector<TreeSite> sites;
  std::vector<int> owner(static_cast<std::size_t>(graph.num_vertices()), -1);
  for (std::size_t i = 0; i < spec.trees.size(); ++i) {
    const TreeReplacement& tree = spec.trees[i];
    if (!std::is_sorted(tree.interior.begin(), tree.interior.end())) {
      InvalidMove("tree edges must be sorted");
    }
    TreeSite site{TreeVertices(graph, tree.interior), BoundaryDarts(graph, tree.interior)};
    for (VertexId v : site.vertices) {
      int& o = owner[static_cast<std::size_t>(v.value())];
      if (o >= 0) InvalidMove(fmt::format("trees {} and {} share vertex {}", o, i, v.value()));
      o = static_cast<int>(i);
    }
    if (tree.coupling.leaves() != site.boundary) {
      InvalidMove(fmt::format("coupling leaves [{}] differ from free ends [{}]",
                              fmt::join(tree.coupling.leaves(), " "),
                              fmt::join(site.boundary, " ")));
    }
    if (tree.coupling == Coupling::OfTree(graph, tree.interior)) {
      InvalidMove(
          fmt::format("replacement of tree [{}] equals the tree", fmt::join(site.boundary, " ")));
    }
    sites.push_back(std::move(site));
  }
  return sites;
}

// Canonical layout: internal coupling nodes in preorder take the sorted
// interior vertex ids; links in preorder take the sorted interior edge ids,
// dart 2k at the parent end.
void CanonicalCells(const Coupling::Node& root, const TreeReplacement& tree,
                    const std::vector<VertexId>& vertices, std::vector<int>& dart_vertex) {
  int next_vertex = 0;
  int next_edge = 0;
  std::function<void(const Coupling::Node&, int)> place = [&](const Coupling::Node& node,
                                                              int parent_dart) {
    const int v = vertices[static_cast<std::size_t>(next_vertex++)].value();
    if (parent_dart >= 0) dart_vertex[static_cast<std::size_t>(parent_dart)] = v;
    for (const auto& child : node.children) {
      if (child.leaf >= 0) {
        dart_vertex[static_cast<std::size_t>(child.leaf)] = v;
        continue;
      }
      const int e = tree.interior[static_cast<std::size_t>(next_edge++)].value();
      dart_vertex[static_cast<std::size_t>(2 * e)] = v;
      place(child, 2 * e + 1);
    }
  };
  place(root, -1);
}

void LayoutCells(const TreeReplacement& tree, const TreeSite& site, std::vector<int>& dart_vertex) {
  std::set<int> expected(site.boundary.begin(), site.boundary.end());
  for (EdgeId e : tree.interior) {
    expected.insert(2 * e.value());
    expected.insert(2 * e.value() + 1);
  }
  std::set<int> seen_vertices;
  std::set<int> seen_darts;
  for (const LayoutCell& cell : tree.layout) {
    if (!std::binary_search(site.vertices.begin(), site.vertices.end(), cell.vertex)) {
      InvalidMove(fmt::format("layout vertex {} is not interior", cell.vertex.value()));
    }
    if (!seen_vertices.insert(cell.vertex.value()).second) {
      InvalidMove(fmt::format("layout vertex {} repeated", cell.vertex.value()));
    }
    for (int d : cell.darts) {
      if (!expected.contains(d) || !seen_darts.insert(d).second) {
        InvalidMove(fmt::format("layout dart {} misplaced", d));
      }
      dart_vertex[static_cast<std::size_t>(d)] = cell.vertex.value();
    }
  }
  if (seen_vertices.size() != site.vertices.size() || seen_darts.size() != expected.size()) {
    InvalidMove("layout does not cover the tree");
  }
}

}  // namespace

void ValidateMove(const Graph& graph, const FMoveSpec& spec) { (void)ApplyFMove(graph, spec); }

FMoveResult ApplyFMove(const Graph& graph, const FMoveSpec& spec) {
  const std::vector<TreeSite> sites = CheckFamily(graph, spec);
  std::vector<int> dart_vertex = graph.dart_vertex();
  for (std::size_t i = 0; i < spec.trees.size(); ++i) {
    const TreeReplacement& tree = spec.trees[i];
    if (tree.layout.empty()) {
      CanonicalCells(tree.coupling.root(), tree, sites[i].vertices, dart_vertex);
    } else {
      LayoutCells(tree, sites[i], dart_vertex);
    }
  }
  Graph result = Graph::FromDartVertices(graph.genus(), graph.boundary(), graph.num_vertices(),
                                         std::move(dart_vertex));
  FMoveResult out{std::move(result), {}, {}};
  out.correspondence.edge_image.resize(static_cast<std::size_t>(graph.num_edges()));
  for (int e = 0; e < graph.num_edges(); ++e) out.correspondence.edge_image[e] = EdgeId(e);
  for (std::size_t i = 0; i < spec.trees.size(); ++i) {
    const TreeReplacement& tree = spec.trees[i];
    for (EdgeId e : tree.interior) {
      out.correspondence.edge_image[static_cast<std::size_t>(e.value())] = std::nullopt;
    }
    out.correspondence.replaced.emplace_back(tree.interior, tree.interior);
    // A layout must realize its coupling.
    try {
      if (!(Coupling::OfTree(out.graph, tree.interior) == tree.coupling)) {
        InvalidMove("layout does not realize its coupling");
      }
    } catch (const Error& e) {
      InvalidMove(fmt::format("replacement is not a tree on the free ends: {}", e.what()));
    }
    TreeReplacement back{tree.interior, Coupling::OfTree(graph, tree.interior), {}};
    for (VertexId v : sites[i].vertices) {
      const auto cell = graph.cell(v);
      back.layout.push_back(LayoutCell{v, {cell[0], cell[1], cell[2]}});
    }
    out.inverse.trees.push_back(std::move(back));
  }
  return out;
}

FMoveSpec EdgeMoveSpec(const Graph& graph, EdgeId e, EdgeCoupling coupling) {
  if (!graph.contains(e)) throw Error(ErrorCode::kUnknownElement, "unknown edge");
  if (graph.is_loop(e)) InvalidMove(fmt::format("edge {} is a loop", e.value()));
  if (ClassifyEdge(graph, e) != EdgeKind::kInternal) {
    InvalidMove(fmt::format("edge {} is terminal", e.value()));
  }
  auto [a, b] = Graph::darts_of(e);
  auto others = [&](DartId d) {
    std::vector<int> out;
    for (int x : graph.cell(graph.vertex_of(d))) {
      if (x != d.value()) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto p = others(a);
  const auto q = others(b);
  using Node = Coupling::Node;
  auto pair = [](int x, int y) { return Node{-1, {Node{x, {}}, Node{y, {}}}}; };
  const Node root = coupling == EdgeCoupling::kParallel
                        ? Node{-1, {pair(p[0], q[0]), pair(p[1], q[1])}}
                        : Node{-1, {pair(p[0], q[1]), pair(p[1], q[0])}};
  return FMoveSpec{{TreeReplacement{{e}, Coupling::FromNode(root), {}}}};
}

FMoveResult ApplyEdgeFMove(const Graph& graph, EdgeId e, EdgeCoupling coupling) {
  return ApplyFMove(graph, EdgeMoveSpec(graph, e, coupling));
}

std::vector<EdgeId> BoundaryLoops(const Graph& graph, const FMoveSpec& spec) {
  std::vector<EdgeId> out;
  for (const TreeReplacement& tree : spec.trees) {
    const std::vector<int> boundary = BoundaryDarts(graph, tree.interior);
    for (int d : boundary) {
      if ((d & 1) == 0 && graph.is_loop(EdgeId(d >> 1)) &&
          std::binary_search(boundary.begin(), boundary.end(), d + 1)) {
        out.emplace_back(d >> 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Free ends reachable through dart d away from its vertex, within one tree.
std::vector<int> FarSet(const Graph& graph, const std::vector<char>& interior_edge, int d) {
  std::vector<int> out;
  std::vector<int> stack{d ^ 1};
  while (!stack.empty()) {
    const int entry = stack.back();
    stack.pop_back();
    for (int x : graph.cell(graph.vertex_of(DartId(entry)))) {
      if (x == entry) continue;
      if (interior_edge[static_cast<std::size_t>(x >> 1)]) {
        stack.push_back(x ^ 1);
      } else {
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NotInvariant Fails(NotInvariant::Reason reason, std::string detail) {
  return NotInvariant{reason, std::move(detail)};
}

}  // namespace

TransportResult Transport(const Automorphism& phi, const FMoveSpec& spec,
                          std::span<const EdgeId> reversed_loops, GraphPtr target) {
  const Graph& graph = phi.graph();
  try {
    CheckFamily(graph, spec);
  } catch (const Error& e) {
    return Fails(NotInvariant::Reason::kWrongGraph, e.what());
  }
  std::vector<int> lift = phi.dart_map();
  const std::vector<EdgeId> loops = BoundaryLoops(graph, spec);
  for (EdgeId loop : reversed_loops) {
    if (!std::binary_search(loops.begin(), loops.end(), loop)) {
      InvalidMove(fmt::format("edge {} is not a boundary loop of the move", loop.value()));
    }
    std::swap(lift[static_cast<std::size_t>(2 * loop.value())],
              lift[static_cast<std::size_t>(2 * loop.value() + 1)]);
  }

  // Image tree of each tree.
  std::map<std::vector<EdgeId>, std::size_t> tree_index;
  for (std::size_t i = 0; i < spec.trees.size(); ++i) tree_index[spec.trees[i].interior] = i;
  std::vector<std::size_t> image_tree(spec.trees.size());
  for (std::size_t i = 0; i < spec.trees.size(); ++i) {
    std::vector<EdgeId> image;
    for (EdgeId e : spec.trees[i].interior) image.emplace_back(lift[2 * e.value()] >> 1);
    std::sort(image.begin(), image.end());
    auto it = tree_index.find(image);
    if (it == tree_index.end()) {
      return Fails(
          NotInvariant::Reason::kFamilyNotInvariant,
          fmt::format("tree [{}] maps to [{}], not a tree of the family",
                      fmt::join(Ids(spec.trees[i].interior), " "), fmt::join(Ids(image), " ")));
    }
    image_tree[i] = it->second;
  }

  if (!target) target = MakeGraphPtr(ApplyFMove(graph, spec).graph);
  const Graph& next = *target;
  std::vector<char> interior_edge(static_cast<std::size_t>(graph.num_edges()), 0);
  for (const auto& tree : spec.trees) {
    for (EdgeId e : tree.interior) interior_edge[static_cast<std::size_t>(e.value())] = 1;
  }

  std::vector<int> map = lift;
  for (std::size_t i = 0; i < spec.trees.size(); ++i) {
    const auto& source = spec.trees[i];
    const auto& dest = spec.trees[image_tree[i]];
    std::map<std::vector<int>, int> dest_darts;
    for (EdgeId e : dest.interior) {
      for (int d : {2 * e.value(), 2 * e.value() + 1}) {
        dest_darts[FarSet(next, interior_edge, d)] = d;
      }
    }
    for (EdgeId e : source.interior) {
      for (int d : {2 * e.value(), 2 * e.value() + 1}) {
        std::vector<int> image;
        for (int x : FarSet(next, interior_edge, d))
          image.push_back(lift[static_cast<std::size_t>(x)]);
        std::sort(image.begin(), image.end());
        auto it = dest_darts.find(image);
        if (it == dest_darts.end()) {
          return Fails(
              NotInvariant::Reason::kDoesNotExtend,
              fmt::format("free ends [{}] of the new tree map to [{}], not a branch",
                          fmt::join(FarSet(next, interior_edge, d), " "), fmt::join(image, " ")));
        }
        map[static_cast<std::size_t>(d)] = it->second;
      }
    }
  }
  if (!IsDartSymmetry(next, map)) {
    throw Error(ErrorCode::kInternal, "transported map is not a dart symmetry");
  }
  return Automorphism(std::move(target), std::move(map));
}

std::vector<Automorphism> TransportAll(const Automorphism& phi, const FMoveSpec& spec,
                                       GraphPtr target) {
  std::vector<Automorphism> out;
  try {
    CheckFamily(phi.graph(), spec);
  } catch (const Error&) {
    return out;
  }
  if (!target) target = MakeGraphPtr(ApplyFMove(phi.graph(), spec).graph);
  const std::vector<EdgeId> loops = BoundaryLoops(phi.graph(), spec);
  const int n = static_cast<int>(loops.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<EdgeId> reversed;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) reversed.push_back(loops[static_cast<std::size_t>(i)]);
    }
    TransportResult r = Transport(phi, spec, reversed, target);
    if (auto* a = std::get_if<Automorphism>(&r)) {
      if (std::find(out.begin(), out.end(), *a) == out.end()) out.push_back(std::move(*a));
    } else if (std::get<NotInvariant>(r).reason != NotInvariant::Reason::kDoesNotExtend) {
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) {
    return a.dart_map() < b.dart_map();
  });
  return out;
}

namespace {

std::vector<std::vector<EdgeId>> Subtrees(const Graph& graph, int max_edges) {
  std::vector<char> eligible(static_cast<std::size_t>(graph.num_edges()), 0);
  for (int e = 0; e < graph.num_edges(); ++e) {
    const EdgeId edge(e);
    auto [v, w] = graph.ends(edge);
    eligible[e] = v != w && graph.is_trivalent(v) && graph.is_trivalent(w);
  }
  std::set<std::vector<EdgeId>> found;
  std::vector<std::vector<EdgeId>> layer;
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (eligible[e]) layer.push_back({EdgeId(e)});
  }
  for (int size = 1; size <= max_edges && !layer.empty(); ++size) {
    std::vector<std::vector<EdgeId>> grown;
    for (const auto& tree : layer) {
      if (!found.insert(tree).second) continue;
      if (size == max_edges) continue;
      std::set<int> vertices;
      for (EdgeId e : tree) {
        auto [v, w] = graph.ends(e);
        vertices.insert(v.value());
        vertices.insert(w.value());
      }
      for (int v : vertices) {
        for (int d : graph.cell(VertexId(v))) {
          const EdgeId e = Graph::edge_of(DartId(d));
          if (!eligible[static_cast<std::size_t>(e.value())]) continue;
          const int far = graph.vertex_of(DartId(d ^ 1)).value();
          if (vertices.contains(far)) continue;
          auto bigger = tree;
          bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), e), e);
          grown.push_back(std::move(bigger));
        }
      }
    }
    layer = std::move(grown);
  }
  return {found.begin(), found.end()};
}

std::vector<EdgeId> EdgeImage(std::span<const int> map, std::span<const EdgeId> edges) {
  std::vector<EdgeId> out;
  for (EdgeId e : edges) out.emplace_back(map[static_cast<std::size_t>(2 * e.value())] >> 1);
  std::sort(out.begin(), out.end());
  return out;
}

FMoveSpec Sorted(FMoveSpec spec) {
  std::sort(
      spec.trees.begin(), spec.trees.end(),
      [](const TreeReplacement& a, const TreeReplacement& b) { return a.interior < b.interior; });
  return spec;
}

// Trees are compatible when no vertex is interior to both.
bool Compatible(const Graph& graph, std::span<const std::vector<EdgeId>> trees) {
  std::vector<char> seen(static_cast<std::size_t>(graph.num_vertices()), 0);
  for (const auto& tree : trees) {
    for (VertexId v : TreeVertices(graph, tree)) {
      char& s = seen[static_cast<std::size_t>(v.value())];
      if (s) return false;
      s = 1;
    }
  }
  return true;
}

}  // namespace

std::vector<FMoveSpec> EnumerateInvariantFMoves(const Automorphism& phi,
                                                const InvariantMoveOptions& options) {
  const Graph& graph = phi.graph();
  if (options.max_tree_ends < 4) {
    throw Error(ErrorCode::kPrecondition, "max_tree_ends must be at least 4");
  }
  const auto trees = Subtrees(graph, options.max_tree_ends - 3);

  // Single-orbit families, grouped by orbit.
  std::vector<std::vector<std::vector<EdgeId>>> orbit_trees;
  std::vector<std::vector<FMoveSpec>> orbit_moves;
  std::set<std::vector<EdgeId>> done;
  for (const auto& start : trees) {
    if (done.contains(start)) continue;
    std::vector<std::vector<EdgeId>> orbit{start};
    for (auto next = EdgeImage(phi.dart_map(), start); next != start;
         next = EdgeImage(phi.dart_map(), next)) {
      orbit.push_back(next);
    }
    for (const auto& t : orbit) done.insert(t);
    if (!Compatible(graph, orbit)) continue;

    std::vector<EdgeId> loops;
    for (const auto& t : orbit) {
      const auto boundary = BoundaryDarts(graph, t);
      for (int d : boundary) {
        if ((d & 1) == 0 && graph.is_loop(EdgeId(d >> 1)) &&
            std::binary_search(boundary.begin(), boundary.end(), d + 1)) {
          loops.emplace_back(d >> 1);
        }
      }
    }
    const Coupling source = Coupling::OfTree(graph, start);
    std::set<std::string> seen;
    std::vector<FMoveSpec> moves;
    for (const Coupling& first : Coupling::All(source.leaves())) {
      if (first == source) continue;
      for (int mask = 0; mask < (1 << loops.size()); ++mask) {
        std::vector<int> lift = phi.dart_map();
        for (std::size_t i = 0; i < loops.size(); ++i) {
          if (mask >> i & 1) {
            std::swap(lift[static_cast<std::size_t>(2 * loops[i].value())],
                      lift[static_cast<std::size_t>(2 * loops[i].value() + 1)]);
          }
        }
        FMoveSpec spec;
        Coupling current = first;
        for (const auto& t : orbit) {
          spec.trees.push_back(TreeReplacement{t, current, {}});
          current = current.Mapped(lift);
        }
        if (!(current == first)) continue;
        spec = Sorted(std::move(spec));
        if (seen.insert(FormatFMove(spec)).second) moves.push_back(std::move(spec));
      }
    }
    if (!moves.empty()) {
      orbit_trees.push_back(std::move(orbit));
      orbit_moves.push_back(std::move(moves));
    }
  }

  std::vector<FMoveSpec> out;
  // Combine moves of up to max_orbits pairwise compatible orbits.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const FMoveSpec&)> extend = [&](std::size_t from,
                                                                  const FMoveSpec& partial) {
    for (std::size_t o = from; o < orbit_moves.size(); ++o) {
      std::vector<std::vector<EdgeId>> all;
      for (std::size_t c : chosen)
        all.insert(all.end(), orbit_trees[c].begin(), orbit_trees[c].end());
      all.insert(all.end(), orbit_trees[o].begin(), orbit_trees[o].end());
      if (!Compatible(graph, all)) continue;
      chosen.push_back(o);
      for (const FMoveSpec& move : orbit_moves[o]) {
        FMoveSpec combined = partial;
        combined.trees.insert(combined.trees.end(), move.trees.begin(), move.trees.end());
        combined = Sorted(std::move(combined));
        out.push_back(combined);
        if (static_cast<int>(chosen.size()) < options.max_orbits) extend(o + 1, combined);
      }
      chosen.pop_back();
    }
  };
  extend(0, FMoveSpec{});
  std::sort(out.begin(), out.end(),
            [](const FMoveSpec& a, const FMoveSpec& b) { return FormatFMove(a) < FormatFMove(b); });
  return out;
}

std::string FormatFMove(const FMoveSpec& spec) {
  std::string out = "fmove\n";
  for (const TreeReplacement& tree : spec.trees) {
    out += "tree";
    for (EdgeId e : tree.interior) out += fmt::format(" {}", e.value());
    out += " -> coupling " + tree.coupling.ToString();
    if (!tree.layout.empty()) {
      out += " layout";
      for (const LayoutCell& cell : tree.layout) {
        out += fmt::format(" v{}={},{},{}", cell.vertex.value(), cell.darts[0], cell.darts[1],
                           cell.darts[2]);
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

LayoutCell ParseLayoutCell(const Token& token) {
  const std::string_view text = token.text;
  const auto eq = text.find('=');
  if (text.empty() || text[0] != 'v' || eq == std::string_view::npos) {
    internal::Fail(token, fmt::format("expected v<id>=<d>,<d>,<d>, got '{}'", text));
  }
  Token part = token;
  part.text = text.substr(1, eq - 1);
  part.column = token.column + 1;
  LayoutCell cell{VertexId(internal::ParseInt(part, "vertex id")), {}};
  std::size_t pos = eq + 1;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = text.find(',', pos);
    if (i == 2) {
      if (end != std::string_view::npos) internal::Fail(token, "layout cell needs three darts");
      end = text.size();
    } else if (end == std::string_view::npos) {
      internal::Fail(token, "layout cell needs three darts");
    }
    part.text = text.substr(pos, end - pos);
    part.column = token.column + static_cast<int>(pos);
    cell.darts[static_cast<std::size_t>(i)] = internal::ParseInt(part, "dart id");
    pos = end + 1;
  }
  return cell;
}

}  // namespace

FMoveSpec ParseFMove(std::string_view text) {
  const auto lines = internal::TokenizeLines(text, /*split_parens=*/true);
  if (lines.empty()) internal::FailAt(1, 1, "empty move file");
  if (lines[0][0].text != "fmove" || lines[0].size() != 1) {
    internal::Fail(lines[0][0], "expected 'fmove' header");
  }
  FMoveSpec spec;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens[0].text != "tree")
      internal::Fail(tokens[0], fmt::format("unknown record '{}'", tokens[0].text));
    std::size_t pos = 1;
    TreeReplacement tree;
    while (pos < tokens.size() && tokens[pos].text != "->") {
      tree.interior.emplace_back(internal::ParseInt(tokens[pos], "edge id"));
      ++pos;
    }
    if (pos + 1 >= tokens.size() || tokens[pos + 1].text != "coupling") {
      const Token& at = pos < tokens.size() ? tokens[pos] : tokens.back();
      internal::Fail(at, "expected '-> coupling <expr>'");
    }
    pos += 2;
    ExpressionParser parser(tokens, pos);
    Coupling::Node root = parser.Parse();
    pos = parser.position();
    try {
      tree.coupling = Coupling::FromNode(std::move(root));
    } catch (const Error& e) {
      internal::Fail(tokens[0], e.what());
    }
    if (pos < tokens.size()) {
      if (tokens[pos].text != "layout")
        internal::Fail(tokens[pos], "expected 'layout' or end of line");
      for (++pos; pos < tokens.size(); ++pos) tree.layout.push_back(ParseLayoutCell(tokens[pos]));
      if (tree.layout.empty()) internal::Fail(tokens.back(), "empty layout");
    }
    std::sort(tree.interior.begin(), tree.interior.end());
    spec.trees.push_back(std::move(tree));
  }
  if (spec.trees.empty()) internal::Fail(lines[0][0], "move has no trees");
  return spec;
}

}  // namespace trivalent
