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

#include "gtest/gtest.h"
#include "test_graphs.h"
#include "trivalent/enumerate.h"

namespace trivalent {
namespace {

using testing::Ptr;

Automorphism Rotation(const GraphPtr& graph, int n, int shift) {
  std::vector<int> map(static_cast<std::size_t>(graph->num_darts()));
  for (int i = 0; i < n; ++i) {
    const int ci = (i + shift) % n;
    map[2 * i] = 2 * ci;
    map[2 * i + 1] = 2 * ci + 1;
    map[2 * (n + i)] = 2 * (n + ci);
    map[2 * (n + i) + 1] = 2 * (n + ci) + 1;
  }
  return Automorphism(graph, map);
}

// Tree with a center, one leaf on it, and two branches of two leaves each.
Graph TwoBranchTree() {
  return testing::Build(0, 5, 8, {{0, 3}, {0, 1}, {0, 2}, {1, 4}, {1, 5}, {2, 6}, {2, 7}});
}

// Exchanges the two branches.
Automorphism BranchSwap(const GraphPtr& g) {
  return Automorphism(g, {0, 1, 4, 5, 2, 3, 10, 11, 12, 13, 6, 7, 8, 9});
}

bool IsPowerOfTwo(int n) { return (n & (n - 1)) == 0; }

bool IsPrimePower(int n) {
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

void ExpectError(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

void ExpectStepsChain(const Automorphism& phi, const Reduction& reduction) {
  const Automorphism* current = &phi;
  for (const ReductionStep& step : reduction.steps) {
    EXPECT_EQ(step.before, *current);
    current = &step.after;
  }
  EXPECT_EQ(reduction.Result(phi), *current);
}

TEST(EdgeOrderMetricTest, CountsEdgesOfTopOrder) {
  const GraphPtr g = Ptr(TwoBranchTree());
  EXPECT_EQ(EdgeOrderMetric(BranchSwap(g)), std::make_pair(1, 6));
  EXPECT_EQ(EdgeOrderMetric(Automorphism::Identity(g)), std::make_pair(0, 7));
}

TEST(ReduceEdgeOrdersTest, UniformOrdersNeedNothing) {
  const GraphPtr theta = Ptr(testing::Theta());
  const Automorphism swap(theta, {1, 0, 3, 2, 5, 4});
  const EdgeOrderReduction r = ReduceEdgeOrders(swap);
  EXPECT_TRUE(r.reduction.steps.empty());
  EXPECT_EQ(r.reduction.Result(swap), swap);
  ASSERT_EQ(r.metrics.size(), 1u);
}

TEST(ReduceEdgeOrdersTest, TerminalPairTakesOneSwitch) {
  const GraphPtr g = Ptr(testing::Tripod());
  const Automorphism s = MakeSwitch(g, EdgeId(0), EdgeId(1)).automorphism;
  const EdgeOrderReduction r = ReduceEdgeOrders(s);
  ASSERT_EQ(r.reduction.steps.size(), 1u);
  EXPECT_EQ(r.reduction.steps[0].kind, ReductionStep::Kind::kSwitch);
  EXPECT_TRUE(r.reduction.Result(s).is_identity());
  EXPECT_EQ(r.metrics, (std::vector<std::pair<int, int>>{{1, 2}, {0, 3}}));
}

TEST(ReduceEdgeOrdersTest, DistinctTrivalentEndsSplitTheOrbitFirst) {
  const GraphPtr g = Ptr(TwoBranchTree());
  const Automorphism phi = BranchSwap(g);
  const EdgeOrderReduction r = ReduceEdgeOrders(phi);
  ASSERT_FALSE(r.reduction.steps.empty());
  EXPECT_EQ(r.reduction.steps[0].kind, ReductionStep::Kind::kTransport);
  ExpectStepsChain(phi, r.reduction);
  EXPECT_TRUE(r.reduction.Result(phi).is_identity());
}

TEST(ReduceEdgeOrdersTest, RejectsOddOrder) {
  const GraphPtr theta = Ptr(testing::Theta());
  ExpectError(ErrorCode::kPrecondition,
              [&] { ReduceEdgeOrders(Automorphism(theta, {2, 3, 4, 5, 0, 1})); });
}

TEST(ReduceEdgeOrdersTest, MetricDecreasesOnEveryTwoPowerAutomorphism) {
  for (auto [gen, b] : AdmissiblePairsUpTo(7)) {
    for (const Graph& graph : EnumerateIsoClasses(gen, b)) {
      for (const Automorphism& phi : AutomorphismGroup(Ptr(graph))) {
        if (!IsPowerOfTwo(Order(phi))) continue;
        const EdgeOrderReduction r = ReduceEdgeOrders(phi);
        ASSERT_EQ(r.metrics.size(), r.reduction.steps.size() + 1);
        for (std::size_t k = 1; k < r.metrics.size(); ++k) {
          EXPECT_LT(r.metrics[k], r.metrics[k - 1]);
        }
        ExpectStepsChain(phi, r.reduction);
        const OrbitReport report = ComputeOrbitReport(r.reduction.Result(phi));
        EXPECT_EQ(report.edge_order_set.size(), 1u);
      }
    }
  }
}

TEST(ReduceOrder2Test, SwitchIsOneLeaf) {
  const GraphPtr g = Ptr(testing::Tripod());
  const Automorphism s = MakeSwitch(g, EdgeId(0), EdgeId(1)).automorphism;
  const Certificate c = ReduceOrder2(s);
  EXPECT_EQ(c.kind(), Certificate::Kind::kSwitch);
  EXPECT_EQ(c.switch_edges(), std::make_pair(EdgeId(0), EdgeId(1)));
}

TEST(ReduceOrder2Test, IdentityIsIdentityLeaf) {
  const GraphPtr g = Ptr(testing::Theta());
  EXPECT_EQ(ReduceOrder2(Automorphism::Identity(g)).kind(), Certificate::Kind::kIdentity);
}

TEST(ReduceOrder2Test, ThetaVertexSwapGoesThroughATransport) {
  const GraphPtr theta = Ptr(testing::Theta());
  const Automorphism swap(theta, {1, 0, 3, 2, 5, 4});
  const Certificate c = ReduceOrder2(swap);
  EXPECT_EQ(c.kind(), Certificate::Kind::kTransport);
  const Verification v = VerifyCertificate(c, swap);
  EXPECT_TRUE(v.ok) << v.diagnostic;
}

TEST(ReduceOrder2Test, RejectsOtherOrders) {
  const GraphPtr theta = Ptr(testing::Theta());
  ExpectError(ErrorCode::kPrecondition,
              [&] { ReduceOrder2(Automorphism(theta, {2, 3, 4, 5, 0, 1})); });
}

void ExpectInvolutionFactors(const Automorphism& phi) {
  const InvolutionFactors f = FactorIntoInvolutions(phi);
  ExpectStepsChain(phi, f.reduction);
  EXPECT_EQ(Compose(f.tau, f.sigma), f.reduction.Result(phi));
  EXPECT_EQ(Order(f.sigma), 2);
  EXPECT_EQ(Order(f.tau), 2);
  EXPECT_TRUE(VerifyCertificate(ReduceOrder2(f.sigma), f.sigma).ok);
  EXPECT_TRUE(VerifyCertificate(ReduceOrder2(f.tau), f.tau).ok);
}

TEST(FactorIntoInvolutionsTest, PentagonRotation) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(5));
  ExpectInvolutionFactors(Rotation(g, 5, 1));
}

TEST(FactorIntoInvolutionsTest, ThetaEdgeCycle) {
  const GraphPtr theta = Ptr(testing::Theta());
  ExpectInvolutionFactors(Automorphism(theta, {2, 3, 4, 5, 0, 1}));
}

TEST(FactorIntoInvolutionsTest, FourCycleRotation) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(4));
  ExpectInvolutionFactors(Rotation(g, 4, 1));
}

TEST(FactorIntoInvolutionsTest, RejectsOrderTwoAndSix) {
  const GraphPtr theta = Ptr(testing::Theta());
  ExpectError(ErrorCode::kPrecondition,
              [&] { FactorIntoInvolutions(Automorphism(theta, {1, 0, 3, 2, 5, 4})); });
  ExpectError(ErrorCode::kPrecondition,
              [&] { FactorIntoInvolutions(Automorphism(theta, {3, 2, 5, 4, 1, 0})); });
}

TEST(DecomposeTest, IdentityIsIdentityLeaf) {
  const GraphPtr g = Ptr(testing::Dumbbell());
  EXPECT_EQ(Decompose(Automorphism::Identity(g)).kind(), Certificate::Kind::kIdentity);
}

TEST(DecomposeTest, SmallGroupsVerify) {
  for (const Graph& graph : {testing::Theta(), testing::Dumbbell(), testing::Tripod()}) {
    const GraphPtr g = Ptr(graph);
    for (const Automorphism& phi : AutomorphismGroup(g)) {
      const Verification v = VerifyCertificate(Decompose(phi), phi);
      EXPECT_TRUE(v.ok) << FormatAutomorphism(phi) << v.diagnostic;
    }
  }
}

TEST(DecomposeTest, OrderSixSplitsIntoPrimaryParts) {
  const GraphPtr theta = Ptr(testing::Theta());
  const Automorphism phi(theta, {3, 2, 5, 4, 1, 0});
  const Certificate c = Decompose(phi);
  ASSERT_EQ(c.kind(), Certificate::Kind::kCompose);
  ASSERT_EQ(c.children().size(), 2u);
  std::vector<int> orders;
  for (const Certificate& child : c.children()) {
    orders.push_back(Order(*Evaluate(child, theta).value));
  }
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, std::vector<int>({2, 3}));
  EXPECT_TRUE(VerifyCertificate(c, phi).ok);
}

TEST(DecomposeTest, EveryAutomorphismUpToSevenEdges) {
  for (auto [gen, b] : AdmissiblePairsUpTo(7)) {
    for (const Graph& graph : EnumerateIsoClasses(gen, b)) {
      for (const Automorphism& phi : AutomorphismGroup(Ptr(graph))) {
        const Certificate c = Decompose(phi);
        const Verification v = VerifyCertificate(c, phi);
        EXPECT_TRUE(v.ok) << FormatAutomorphism(phi) << v.diagnostic;
        // Survives the text form.
        const Certificate stamped = Stamped(c, phi.graph_ptr());
        EXPECT_TRUE(VerifyCertificate(ParseCertificate(FormatCertificate(stamped)), phi).ok);
      }
    }
  }
}

TEST(UnwindTest, SwitchStepsBecomeComposition) {
  const GraphPtr g = Ptr(testing::Tripod());
  const Automorphism s = MakeSwitch(g, EdgeId(0), EdgeId(1)).automorphism;
  Reduction r;
  r.steps.push_back(
      {ReductionStep::Kind::kSwitch, {EdgeId(0), EdgeId(1)}, {}, {}, s, Automorphism::Identity(g)});
  const Certificate c = Unwind(r, Certificate::Identity());
  EXPECT_EQ(c.kind(), Certificate::Kind::kSwitch);
  EXPECT_TRUE(VerifyCertificate(c, s).ok);
}

TEST(AnalyzeCycleTest, PentagonEdgeIsACycle) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(5));
  const auto s = AnalyzeCycle(Rotation(g, 5, 1), Path{{0}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, CycleKind::kCycle);
  EXPECT_EQ(s->order, 5);
  EXPECT_EQ(s->ell, 5);
  EXPECT_EQ(s->step, 1);
  EXPECT_EQ(s->edges.size(), 5u);
}

TEST(AnalyzeCycleTest, ReversedEdgeIsDiagonal) {
  const GraphPtr theta = Ptr(testing::Theta());
  const auto s = AnalyzeCycle(Automorphism(theta, {3, 2, 5, 4, 1, 0}), Path{{0}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, CycleKind::kDiagonal);
  EXPECT_EQ(s->edges.size(), 3u);
}

TEST(AnalyzeCycleTest, TripodRotation) {
  const GraphPtr g = Ptr(testing::Tripod());
  const auto s = AnalyzeCycle(Automorphism(g, {2, 3, 4, 5, 0, 1}), Path{{1, 2}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, CycleKind::kTripod);
  EXPECT_EQ(s->edges.size(), 3u);
}

TEST(AnalyzeCycleTest, TripodRotationTheOtherWay) {
  const GraphPtr g = Ptr(testing::Tripod());
  const auto s = AnalyzeCycle(Automorphism(g, {4, 5, 0, 1, 2, 3}), Path{{1, 2}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, CycleKind::kTripod);
  EXPECT_EQ(s->step, 2);
  EXPECT_EQ(s->t, 2);
}

TEST(AnalyzeCycleTest, LongPathIsNotNormal) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(10));
  std::string reason;
  // Two edges between orbit mates of the order-5 rotation: a cycle, not a
  // normal form of one edge.
  const auto s = AnalyzeCycle(Rotation(g, 10, 2), Path{{0, 2}}, &reason);
  ASSERT_TRUE(s.has_value()) << reason;
  EXPECT_EQ(s->kind, CycleKind::kCycle);
  EXPECT_EQ(s->ell, 5);
}

TEST(NormalizeCycleTest, SingleEdgeCycleIsAlreadyNormal) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(5));
  const Normalized n = NormalizeCycle(Rotation(g, 5, 1), Path{{0}});
  EXPECT_TRUE(n.reduction.steps.empty());
  EXPECT_EQ(n.structure.kind, CycleKind::kCycle);
}

TEST(NormalizeCycleTest, TwoEdgePathsSlideToOne) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(10));
  const Automorphism phi = Rotation(g, 10, 2);
  const Normalized n = NormalizeCycle(phi, Path{{0, 2}});
  ASSERT_FALSE(n.reduction.steps.empty());
  ExpectStepsChain(phi, n.reduction);
  EXPECT_EQ(n.structure.kind, CycleKind::kCycle);
  EXPECT_EQ(n.structure.alpha.length(), 1);
  EXPECT_EQ(Order(n.reduction.Result(phi)), 5);
}

TEST(NormalizeCycleTest, TripodStaysATripod) {
  const GraphPtr g = Ptr(testing::Tripod());
  const Normalized n = NormalizeCycle(Automorphism(g, {2, 3, 4, 5, 0, 1}), Path{{1, 2}});
  EXPECT_TRUE(n.reduction.steps.empty());
  EXPECT_EQ(n.structure.kind, CycleKind::kTripod);
}

TEST(NormalizeStepTest, PentagonTerminalPathIsNormal) {
  const GraphPtr g = Ptr(testing::CycleWithPendants(5));
  const Normalized n = NormalizeStep(Rotation(g, 5, 1), Path{{11, 0, 12}});
  EXPECT_TRUE(n.reduction.steps.empty());
  EXPECT_EQ(n.structure.kind, CycleKind::kCycle);
  EXPECT_EQ(n.structure.terminal_edges.size(), 5u);
}

TEST(NormalizeStepTest, TripodTerminalEdgesShareTheCenter) {
  const GraphPtr g = Ptr(testing::Tripod());
  const Normalized n = NormalizeStep(Automorphism(g, {2, 3, 4, 5, 0, 1}), Path{{1, 2}});
  EXPECT_TRUE(n.reduction.steps.empty());
  EXPECT_EQ(n.structure.kind, CycleKind::kTripod);
  EXPECT_EQ(n.structure.terminal_edges.size(), 3u);
}

TEST(NormalizeStepTest, HalfTurnOfTheFourEndTreeIsDiagonal) {
  const GraphPtr g = Ptr(testing::FourEndTree());
  const Automorphism half_turn(g, {1, 0, 6, 7, 8, 9, 2, 3, 4, 5});
  const Normalized n = NormalizeStep(half_turn, Path{{3, 0, 6}});
  EXPECT_TRUE(n.reduction.steps.empty());
  EXPECT_EQ(n.structure.kind, CycleKind::kDiagonal);
}

// Even orders are normalized only after edge-order reduction.
bool UniformEdgeOrders(const Automorphism& phi) {
  const auto orders = ComputeOrbitReport(phi).edge_orders;
  return std::all_of(orders.begin(), orders.end(), [&](int o) { return o == Order(phi); });
}

TEST(NormalizeCyclePropertyTest, PrimePowerOrdersReachANormalForm) {
  for (auto [gen, b] : AdmissiblePairsUpTo(7)) {
    for (const Graph& graph : EnumerateIsoClasses(gen, b)) {
      for (const Automorphism& phi : AutomorphismGroup(Ptr(graph))) {
        if (phi.is_identity() || !IsPrimePower(Order(phi))) continue;
        if (Order(phi) % 2 == 0 && !UniformEdgeOrders(phi)) continue;
        const auto alpha = MinimalVertexPath(phi);
        if (!alpha) continue;
        const Normalized n = NormalizeCycle(phi, *alpha);
        ExpectStepsChain(phi, n.reduction);
        const Automorphism result = n.reduction.Result(phi);
        const auto again = AnalyzeCycle(result, n.structure.alpha);
        ASSERT_TRUE(again.has_value());
        EXPECT_EQ(again->kind, n.structure.kind);
        EXPECT_LE(n.structure.alpha.length(), 2);
      }
    }
  }
}

}  // namespace
}  // namespace trivalent
