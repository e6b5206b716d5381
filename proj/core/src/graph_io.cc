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

#include "trivalent/graph_io.h"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "text_scanner.h"

namespace trivalent {

namespace internal {

std::vector<std::vector<Token>> TokenizeLines(std::string_view text, bool split_parens) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> tokens;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      if (split_parens && (line[i] == '(' || line[i] == ')')) {
        tokens.push_back({line.substr(i, 1), line_no, static_cast<int>(i) + 1});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j]) &&
             !(split_parens && (line[j] == '(' || line[j] == ')'))) {
        ++j;
      }
      tokens.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

void FailAt(int line, int column, std::string_view message) {
  throw ParseError(line, column, std::string(message));
}

void Fail(const Token& token, std::string_view message) {
  FailAt(token.line, token.column, message);
}

int ParseInt(const Token& token, std::string_view what) {
  int value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    Fail(token, fmt::format("expected integer {}, got '{}'", what, token.text));
  }
  return value;
}

int ParseKeyInt(const Token& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.text.substr(0, prefix.size()) != prefix) {
    Fail(token, fmt::format("expected {}<int>, got '{}'", prefix, token.text));
  }
  Token value = token;
  value.text = token.text.substr(prefix.size());
  value.column += static_cast<int>(prefix.size());
  return ParseInt(value, key);
}

}  // namespace internal

using internal::Fail;
using internal::Token;

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParse, fmt::format("{}:{}: {}", line, column, message)),
      line_(line),
      column_(column) {}

std::optional<EdgeId> GraphDocument::FindEdge(std::string_view name) const {
  for (std::size_t k = 0; k < edge_names.size(); ++k) {
    if (edge_names[k] == name) return EdgeId(static_cast<int>(k));
  }
  return std::nullopt;
}

GraphDocument ParseGraph(std::string_view text) {
  const auto lines = internal::TokenizeLines(text, /*split_parens=*/false);
  if (lines.empty()) internal::FailAt(1, 1, "empty graph file");

  const auto& header = lines.front();
  if (header[0].text != "graph") Fail(header[0], "expected 'graph' header");
  if (header.size() != 3) Fail(header[0], "header must be 'graph g=<int> b=<int>'");
  const int genus = internal::ParseKeyInt(header[1], "g");
  const int boundary = internal::ParseKeyInt(header[2], "b");

  std::map<std::string, int, std::less<>> vertex_index;
  std::vector<std::string> vertex_names;
  auto vertex = [&](const Token& token) {
    auto [it, inserted] =
        vertex_index.try_emplace(std::string(token.text), static_cast<int>(vertex_names.size()));
    if (inserted) vertex_names.emplace_back(token.text);
    return it->second;
  };

  std::vector<std::pair<int, int>> ends;
  std::vector<std::string> edge_names;
  std::map<std::string, int, std::less<>> edge_index;
  std::vector<VertexId> leaves;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens[0].text == "edge") {
      if (tokens.size() != 4) Fail(tokens[0], "expected 'edge <edge-id> <vertex-id> <vertex-id>'");
      if (!edge_index.try_emplace(std::string(tokens[1].text), static_cast<int>(ends.size()))
               .second) {
        Fail(tokens[1], fmt::format("duplicate edge id '{}'", tokens[1].text));
      }
      edge_names.emplace_back(tokens[1].text);
      const int v = vertex(tokens[2]);
      const int w = vertex(tokens[3]);
      ends.emplace_back(v, w);
    } else if (tokens[0].text == "leaf") {
      if (tokens.size() != 2) Fail(tokens[0], "expected 'leaf <vertex-id>'");
      leaves.emplace_back(vertex(tokens[1]));
    } else if (tokens[0].text == "graph") {
      Fail(tokens[0], "duplicate 'graph' header");
    } else {
      Fail(tokens[0], fmt::format("unknown record '{}'", tokens[0].text));
    }
  }

  GraphDocument document{
      Graph::FromEdges(genus, boundary, static_cast<int>(vertex_names.size()), ends),
      std::move(edge_names), std::move(vertex_names), std::move(leaves)};
  return document;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphDocument ReadGraphFile(const std::string& path) { return ParseGraph(ReadTextFile(path)); }

std::string FormatGraph(const Graph& graph) {
  std::string out = fmt::format("graph g={} b={}\n", graph.genus(), graph.boundary());
  for (int e = 0; e < graph.num_edges(); ++e) {
    auto [v, w] = graph.ends(EdgeId(e));
    out += fmt::format("edge {} {} {}\n", e, v.value(), w.value());
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (graph.is_univalent(VertexId(v))) out += fmt::format("leaf {}\n", v);
  }
  return out;
}

ValidationReport Validate(const GraphDocument& document) {
  ValidationReport report = Validate(document.graph);
  const Graph& graph = document.graph;
  std::vector<char> declared(static_cast<std::size_t>(graph.num_vertices()), 0);
  for (VertexId v : document.declared_leaves) {
    declared[static_cast<std::size_t>(v.value())] = 1;
    if (!graph.is_univalent(v)) {
      report.diagnostics.push_back(
          {Violation::kLeafDeclaration,
           fmt::format("vertex '{}' declared leaf but has degree {}",
                       document.vertex_names[static_cast<std::size_t>(v.value())],
                       graph.degree(v))});
    }
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (graph.is_univalent(VertexId(v)) && !declared[static_cast<std::size_t>(v)]) {
      report.diagnostics.push_back(
          {Violation::kLeafDeclaration,
           fmt::format("univalent vertex '{}' not declared leaf",
                       document.vertex_names[static_cast<std::size_t>(v)])});
    }
  }
  return report;
}

}  // namespace trivalent
