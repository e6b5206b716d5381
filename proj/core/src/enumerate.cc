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

#include "trivalent/enumerate.h"

#include <fmt/format.h>

#include <map>

#include "trivalent/canonical.h"

namespace trivalent {
namespace {

// Perfect matchings on dart slots. Unmatched slots of one vertex are
// interchangeable, as are untouched trivalent vertices and unmatched leaves,
// so only the first of each is tried.
class MatchingGenerator {
 public:
  MatchingGenerator(int genus, int boundary) : genus_(genus), boundary_(boundary) {
    const int trivalent = TrivalentCount(genus, boundary);
    num_vertices_ = trivalent + boundary;
    for (int v = 0; v < num_vertices_; ++v) {
      start_.push_back(static_cast<int>(owner_.size()));
      const int degree = v < trivalent ? 3 : 1;
      for (int i = 0; i < degree; ++i) owner_.push_back(v);
    }
    start_.push_back(static_cast<int>(owner_.size()));
    matched_.assign(owner_.size(), 0);
    touched_.assign(static_cast<std::size_t>(num_vertices_), 0);
    trivalent_ = trivalent;
  }

  std::map<CanonicalCode, Graph> Run() {
    Recurse();
    return std::move(classes_);
  }

 private:
  int FirstFree(int v, int after) const {
    for (int s = std::max(start_[v], after); s < start_[v + 1]; ++s) {
      if (!matched_[s]) return s;
    }
    return -1;
  }

  void Recurse() {
    int s = 0;
    while (s < static_cast<int>(owner_.size()) && matched_[s]) ++s;
    if (s == static_cast<int>(owner_.size())) {
      Emit();
      return;
    }
    const int u = owner_[s];
    const bool u_leaf = u >= trivalent_;
    matched_[s] = 1;
    ++touched_[u];
    bool tried_untouched = false;
    bool tried_leaf = false;
    for (int w = u; w < num_vertices_; ++w) {
      const int t = FirstFree(w, w == u ? s + 1 : 0);
      if (t < 0) continue;
      const bool w_leaf = w >= trivalent_;
      if (w_leaf) {
        if (u_leaf || tried_leaf) continue;
        tried_leaf = true;
      } else if (w != u && touched_[w] == 0) {
        if (tried_untouched) continue;
        tried_untouched = true;
      }
      matched_[t] = 1;
      ++touched_[w];
      ends_.emplace_back(u, w);
      Recurse();
      ends_.pop_back();
      --touched_[w];
      matched_[t] = 0;
    }
    --touched_[u];
    matched_[s] = 0;
  }

  void Emit() {
    Graph graph = Graph::FromEdges(genus_, boundary_, num_vertices_, ends_);
    if (!IsConnected(graph)) return;
    CanonicalLabeling labeling = CanonicalLabel(graph);
    if (classes_.contains(labeling.code)) return;
    Graph canonical = ApplyLabeling(graph, labeling);
    classes_.emplace(std::move(labeling.code), std::move(canonical));
  }

  int genus_;
  int boundary_;
  int num_vertices_ = 0;
  int trivalent_ = 0;
  std::vector<int> owner_;
  std::vector<int> start_;
  std::vector<char> matched_;
  std::vector<int> touched_;
  std::vector<std::pair<int, int>> ends_;
  std::map<CanonicalCode, Graph> classes_;
};

}  // namespace

std::vector<Graph> EnumerateIsoClasses(int genus, int boundary, const EnumerationOptions& options) {
  if (!IsAdmissible(genus, boundary)) {
    throw Error(ErrorCode::kInadmissible,
                fmt::format("(g,b)=({},{}) is not admissible", genus, boundary));
  }
  if (EdgeCount(genus, boundary) > options.size_cap) {
    throw Error(ErrorCode::kSizeCap,
                fmt::format("(g,b)=({},{}) has {} edges, above the cap of {}", genus, boundary,
                            EdgeCount(genus, boundary), options.size_cap));
  }
  std::map<CanonicalCode, Graph> classes = MatchingGenerator(genus, boundary).Run();
  std::vector<Graph> result;
  result.reserve(classes.size());
  for (auto& [code, graph] : classes) result.push_back(std::move(graph));
  return result;
}

std::vector<std::pair<int, int>> AdmissiblePairsUpTo(int max_edges) {
  std::vector<std::pair<int, int>> pairs;
  for (int edges = 0; edges <= max_edges; ++edges) {
    for (int g = 0; 3 * g - 3 <= edges; ++g) {
      const int twice_b = edges - 3 * g + 3;
      if (twice_b < 0 || twice_b % 2 != 0) continue;
      const int b = twice_b / 2;
      if (IsAdmissible(g, b)) pairs.emplace_back(g, b);
    }
  }
  return pairs;
}

}  // namespace trivalent
