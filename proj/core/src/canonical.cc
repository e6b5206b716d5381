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

#include "trivalent/canonical.h"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <numeric>

namespace trivalent {

std::string CanonicalCode::Digest() const {
  std::vector<unsigned char> bytes;
  bytes.reserve(words_.size() * 4);
  for (int w : words_) {
    const auto u = static_cast<std::uint32_t>(w);
    for (int shift = 0; shift < 32; shift += 8) {
      bytes.push_back(static_cast<unsigned char>((u >> shift) & 0xffu));
    }
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int md_len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md.data(), &md_len, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < 8 && i < md_len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

std::string CanonicalCode::ToString() const { return fmt::format("{}", fmt::join(words_, ".")); }

std::optional<CanonicalCode> CanonicalCode::FromString(std::string_view text) {
  std::vector<int> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('.', pos);
    if (end == std::string_view::npos) end = text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) return std::nullopt;
    words.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return CanonicalCode(std::move(words));
}

namespace {

class Labeler {
 public:
  Labeler(const Graph& graph, std::span<const int> phi) : graph_(graph), phi_(phi) {
    const int n = graph.num_darts();
    if (!phi_.empty()) {
      phi_inv_.resize(n);
      for (int d = 0; d < n; ++d) phi_inv_[phi_[d]] = d;
    }
  }

  CanonicalLabeling Run() {
    const int n = graph_.num_darts();
    std::vector<int> color(n);
    // Initial key: vertex degree and whether the dart lies on a loop.
    std::vector<std::array<int, 2>> initial(n);
    for (int d = 0; d < n; ++d) {
      const bool loop = graph_.is_loop(Graph::edge_of(DartId(d)));
      initial[d] = {graph_.degree(graph_.vertex_of(DartId(d))), loop ? 1 : 0};
    }
    AssignByKey(initial, color);
    Refine(color);
    Search(color);
    return Finish();
  }

 private:
  template <class Key>
  static int AssignByKey(const std::vector<Key>& keys, std::vector<int>& color) {
    const int n = static_cast<int>(keys.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || keys[order[i]] != keys[order[i - 1]]) {
        ++classes;
        color[order[i]] = i;
      } else {
        color[order[i]] = color[order[i - 1]];
      }
    }
    return classes;
  }

  static int CountClasses(const std::vector<int>& color) {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  // Colors of the darts of the image edge that sit at the image vertex.
  void AppendImage(int x, const std::vector<int>& color, std::vector<int>& key) const {
    const int y = x ^ 1;
    if (graph_.vertex_of(DartId(x)) == graph_.vertex_of(DartId(y))) {
      key.push_back(std::min(color[x], color[y]));
      key.push_back(std::max(color[x], color[y]));
    } else {
      key.push_back(color[x]);
    }
  }

  void Refine(std::vector<int>& color) const {
    const int n = graph_.num_darts();
    int classes = CountClasses(color);
    std::vector<std::vector<int>> keys(n);
    while (classes < n) {
      for (int d = 0; d < n; ++d) {
        auto& key = keys[d];
        key.clear();
        key.push_back(color[d]);
        key.push_back(color[d ^ 1]);
        const auto cell = graph_.cell(graph_.vertex_of(DartId(d)));
        const std::size_t mark = key.size();
        for (int s : cell) {
          if (s != d) key.push_back(color[s]);
        }
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(mark), key.end());
        if (!phi_.empty()) {
          key.push_back(-1);
          AppendImage(phi_[d], color, key);
          key.push_back(-2);
          AppendImage(phi_inv_[d], color, key);
        }
      }
      const int next = AssignByKey(keys, color);
      if (next == classes) break;
      classes = next;
    }
  }

  void Search(const std::vector<int>& color) {
    const int n = graph_.num_darts();
    // Target: the non-singleton class with the smallest color.
    std::vector<int> size(n, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      Leaf(color);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (color[x] != target) continue;
      std::vector<int> child = color;
      for (int y = 0; y < n; ++y) {
        if (y != x && color[y] == target) child[y] = target + 1;
      }
      Refine(child);
      Search(child);
    }
  }

  void Derive(const std::vector<int>& position, std::vector<int>& new_dart,
              std::vector<int>& new_vertex) const {
    const int n = graph_.num_darts();
    const int edges = n / 2;
    std::vector<int> edge_order(edges);
    std::iota(edge_order.begin(), edge_order.end(), 0);
    auto edge_key = [&](int e) { return std::min(position[2 * e], position[2 * e + 1]); };
    std::sort(edge_order.begin(), edge_order.end(),
              [&](int a, int b) { return edge_key(a) < edge_key(b); });
    new_dart.assign(n, 0);
    for (int k = 0; k < edges; ++k) {
      const int e = edge_order[k];
      const bool first_low = position[2 * e] < position[2 * e + 1];
      new_dart[2 * e] = first_low ? 2 * k : 2 * k + 1;
      new_dart[2 * e + 1] = first_low ? 2 * k + 1 : 2 * k;
    }
    const int vertices = graph_.num_vertices();
    std::vector<int> vertex_key(vertices, n);
    for (int d = 0; d < n; ++d) {
      int& key = vertex_key[graph_.vertex_of(DartId(d)).value()];
      key = std::min(key, new_dart[d]);
    }
    std::vector<int> vertex_order(vertices);
    std::iota(vertex_order.begin(), vertex_order.end(), 0);
    std::stable_sort(vertex_order.begin(), vertex_order.end(),
                     [&](int a, int b) { return vertex_key[a] < vertex_key[b]; });
    new_vertex.assign(vertices, 0);
    for (int k = 0; k < vertices; ++k) new_vertex[vertex_order[k]] = k;
  }

  std::vector<int> Encode(const std::vector<int>& new_dart,
                          const std::vector<int>& new_vertex) const {
    const int n = graph_.num_darts();
    std::vector<int> old_of(n);
    for (int d = 0; d < n; ++d) old_of[new_dart[d]] = d;
    std::vector<int> words = {graph_.genus(), graph_.boundary(), graph_.num_vertices(), n};
    words.reserve(words.size() + static_cast<std::size_t>(phi_.empty() ? n : 3 * n));
    for (int nd = 0; nd < n; ++nd) {
      words.push_back(new_vertex[graph_.vertex_of(DartId(old_of[nd])).value()]);
    }
    if (!phi_.empty()) {
      for (int nd = 0; nd < n; ++nd) {
        const int x = phi_[old_of[nd]];
        words.push_back(new_dart[x] >> 1);
        words.push_back(new_vertex[graph_.vertex_of(DartId(x)).value()]);
      }
    }
    return words;
  }

  void Leaf(const std::vector<int>& position) {
    std::vector<int> new_dart;
    std::vector<int> new_vertex;
    Derive(position, new_dart, new_vertex);
    std::vector<int> words = Encode(new_dart, new_vertex);
    if (!best_ || words < best_->code) {
      best_ = Best{std::move(words), std::move(new_dart), std::move(new_vertex)};
    }
  }

  CanonicalLabeling Finish() {
    if (!best_) {
      // No darts at all.
      std::vector<int> new_vertex(graph_.num_vertices());
      std::iota(new_vertex.begin(), new_vertex.end(), 0);
      return {CanonicalCode(Encode({}, new_vertex)), {}, new_vertex};
    }
    return {CanonicalCode(std::move(best_->code)), std::move(best_->new_dart),
            std::move(best_->new_vertex)};
  }

  struct Best {
    std::vector<int> code;
    std::vector<int> new_dart;
    std::vector<int> new_vertex;
  };

  const Graph& graph_;
  std::span<const int> phi_;
  std::vector<int> phi_inv_;
  std::optional<Best> best_;
};

}  // namespace

CanonicalLabeling CanonicalLabel(const Graph& graph) { return Labeler(graph, {}).Run(); }

CanonicalLabeling CanonicalLabel(const Graph& graph, std::span<const int> dart_map) {
  if (static_cast<int>(dart_map.size()) != graph.num_darts()) {
    throw Error(ErrorCode::kMismatchedGraphs, "dart map size differs from graph");
  }
  return Labeler(graph, dart_map).Run();
}

CanonicalCode CanonicalForm(const Graph& graph) {
  RequireValid(graph);
  return CanonicalLabel(graph).code;
}

Graph ApplyLabeling(const Graph& graph, const CanonicalLabeling& labeling) {
  return Relabel(graph, labeling.dart_to_canonical, labeling.vertex_to_canonical);
}

Graph CanonicalGraph(const Graph& graph) { return ApplyLabeling(graph, CanonicalLabel(graph)); }

}  // namespace trivalent
