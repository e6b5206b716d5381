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

#include "trivalent/graph.h"

#include "gtest/gtest.h"
#include "test_graphs.h"
#include "trivalent/graph_io.h"

namespace trivalent {
namespace {

using testing::Dumbbell;
using testing::SingleLoop;
using testing::Theta;
using testing::Tripod;

TEST(ValidateTest, TripodIsValid) { EXPECT_TRUE(Validate(Tripod()).ok()); }

TEST(ValidateTest, ThetaIsValidWithHandCountedBetti) {
  const Graph theta = Theta();
  // Three edges, two vertices.
  EXPECT_EQ(theta.num_edges() - theta.num_vertices() + 1, 2);
  EXPECT_TRUE(Validate(theta).ok());
}

TEST(ValidateTest, SingleLoopIsRejected) {
  const ValidationReport report = Validate(SingleLoop());
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.has(Violation::kForbiddenGenusBoundary));
  EXPECT_TRUE(report.has(Violation::kNoTrivalentVertex));
  EXPECT_TRUE(report.has(Violation::kBadDegree));
}

TEST(ValidateTest, WrongDeclaredGenusIsReported) {
  const Graph theta =
      Graph::FromEdges(1, 0, 2, std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 1}});
  const ValidationReport report = Validate(theta);
  EXPECT_TRUE(report.has(Violation::kBettiMismatch));
  EXPECT_TRUE(report.has(Violation::kForbiddenGenusBoundary));
}

TEST(ValidateTest, DisconnectedIsReported) {
  const Graph two = Graph::FromEdges(
      2, 0, 4, std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
  EXPECT_TRUE(Validate(two).has(Violation::kDisconnected));
}

TEST(AdmissibilityTest, ForbiddenPairs) {
  EXPECT_FALSE(IsAdmissible(0, 0));
  EXPECT_FALSE(IsAdmissible(0, 1));
  EXPECT_FALSE(IsAdmissible(0, 2));
  EXPECT_FALSE(IsAdmissible(1, 0));
  EXPECT_TRUE(IsAdmissible(0, 3));
  EXPECT_TRUE(IsAdmissible(1, 1));
  EXPECT_TRUE(IsAdmissible(2, 0));
}

TEST(ClassifyEdgeTest, TripodEdgesAreTerminal) {
  const Graph g = Tripod();
  for (int e = 0; e < 3; ++e) EXPECT_EQ(ClassifyEdge(g, EdgeId(e)), EdgeKind::kTerminal);
}

TEST(ClassifyEdgeTest, ThetaEdgesAreInternal) {
  const Graph g = Theta();
  for (int e = 0; e < 3; ++e) EXPECT_EQ(ClassifyEdge(g, EdgeId(e)), EdgeKind::kInternal);
}

TEST(ClassifyEdgeTest, DumbbellBridgeAndLoopsAreInternal) {
  const Graph g = Dumbbell();
  for (int e = 0; e < 3; ++e) EXPECT_EQ(ClassifyEdge(g, EdgeId(e)), EdgeKind::kInternal);
}

TEST(ClassifyEdgeTest, UnknownEdgeThrows) {
  EXPECT_THROW(ClassifyEdge(Tripod(), EdgeId(7)), Error);
}

TEST(GraphIoTest, ParsesDartsInFileOrder) {
  const GraphDocument doc = ParseGraph(
      "# theta\n"
      "graph g=2 b=0\n"
      "edge a x y\n"
      "edge b y x  # reversed\n"
      "edge c x y\n");
  const Graph& g = doc.graph;
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.vertex_of(DartId(0)), VertexId(0));
  EXPECT_EQ(g.vertex_of(DartId(2)), VertexId(1));
  EXPECT_EQ(g.vertex_of(DartId(3)), VertexId(0));
  EXPECT_EQ(doc.FindEdge("b"), EdgeId(1));
  EXPECT_TRUE(Validate(doc).ok());
}

TEST(GraphIoTest, RoundTrip) {
  const Graph g = testing::FourEndTree();
  const GraphDocument doc = ParseGraph(FormatGraph(g));
  EXPECT_EQ(doc.graph, g);
  EXPECT_EQ(FormatGraph(doc.graph), FormatGraph(g));
  EXPECT_TRUE(Validate(doc).ok());
}

TEST(GraphIoTest, UndeclaredLeafIsReported) {
  const GraphDocument doc =
      ParseGraph("graph g=0 b=3\nedge 0 c 1\nedge 1 c 2\nedge 2 c 3\nleaf 1\nleaf 2\n");
  EXPECT_TRUE(Validate(doc).has(Violation::kLeafDeclaration));
}

TEST(GraphIoTest, ErrorsCarryLineAndColumn) {
  try {
    ParseGraph("graph g=0 b=3\nedge 0 c 1\n  edgy 1 c 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
  try {
    ParseGraph("graph g=x b=3\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 9);
  }
}

}  // namespace
}  // namespace trivalent
