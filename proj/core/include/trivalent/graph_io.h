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

// Line-oriented graph text format:
//
//   graph g=<int> b=<int>
//   edge <edge-id> <vertex-id> <vertex-id>
//   leaf <vertex-id>
//
// '#' starts a comment. Edge k in file order owns darts 2k and 2k+1, dart 2k
// at the first listed endpoint. Vertex ids are numbered by first appearance.

#ifndef TRIVALENT_GRAPH_IO_H_
#define TRIVALENT_GRAPH_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/graph.h"

namespace trivalent {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct GraphDocument {
  Graph graph;
  std::vector<std::string> edge_names;
  std::vector<std::string> vertex_names;
  std::vector<VertexId> declared_leaves;

  std::optional<EdgeId> FindEdge(std::string_view name) const;
};

GraphDocument ParseGraph(std::string_view text);
GraphDocument ReadGraphFile(const std::string& path);

// Writes edges as 0..E-1 and vertices as 0..V-1.
std::string FormatGraph(const Graph& graph);

// Graph validation plus checks that exactly the univalent vertices are
// declared with `leaf`.
ValidationReport Validate(const GraphDocument& document);

// Shared helpers for the other text formats.
std::string ReadTextFile(const std::string& path);

}  // namespace trivalent

#endif  // TRIVALENT_GRAPH_IO_H_
