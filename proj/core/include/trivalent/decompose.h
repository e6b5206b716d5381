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

// Reducing automorphisms to switches: orbit normal forms, edge-order
// reduction, factorization into involutions, and certificate assembly.

#ifndef TRIVALENT_DECOMPOSE_H_
#define TRIVALENT_DECOMPOSE_H_

#include <optional>
#include <utility>
#include <vector>

#include "trivalent/automorphism.h"
#include "trivalent/certificate.h"
#include "trivalent/fmove.h"
#include "trivalent/paths.h"

namespace trivalent {

// One step from `before` to `after`: either after = S(e1,e2) o before, or
// after is before carried across `move` with the given reversed loops.
struct ReductionStep {
  enum class Kind { kSwitch, kTransport };
  Kind kind;
  std::pair<EdgeId, EdgeId> switch_edges;
  FMoveSpec move;
  std::vector<EdgeId> reversed_loops;
  Automorphism before;
  Automorphism after;
};

struct Reduction {
  std::vector<ReductionStep> steps;

  // The automorphism reached from `start`.
  const Automorphism& Result(const Automorphism& start) const;
  void Append(const Reduction& other);
};

// Certificate for the start of the reduction, given one for its result.
Certificate Unwind(const Reduction& reduction, Certificate result);

// (m, n_m): log2 of the order and the number of edges of maximal order.
std::pair<int, int> EdgeOrderMetric(const Automorphism& phi);

struct EdgeOrderReduction {
  Reduction reduction;
  std::vector<std::pair<int, int>> metrics;  // before each step, then final
};

// Order must be a power of two. Ends with every edge of one order.
EdgeOrderReduction ReduceEdgeOrders(const Automorphism& phi);

// Order 2 and phi fixes an edge or reverses an invariant edge; or phi is the
// identity. Throws kPrecondition otherwise.
Certificate ReduceOrder2(const Automorphism& phi);

struct InvolutionFactors {
  Reduction reduction;  // from phi to tau o sigma
  Automorphism sigma;
  Automorphism tau;
};

struct SearchOptions {
  int max_tree_ends = 6;
  long long budget = 200'000;  // states
};

// For order > 2 not divisible by 6. sigma and tau are involutions accepted by
// ReduceOrder2. Throws kPrecondition on unsupported orders, kBudget if the
// search gives up.
InvolutionFactors FactorIntoInvolutions(const Automorphism& phi, const SearchOptions& options = {});

// Certificate evaluating exactly to phi; every step is checked as it is built.
Certificate Decompose(const Automorphism& phi, const SearchOptions& options = {});

enum class CycleKind { kCycle, kTripod, kDiagonal };

struct CycleStructure {
  CycleKind kind = CycleKind::kCycle;
  int order = 1;  // n
  int ell = 1;    // copies of alpha in one cycle
  int step = 0;   // s = t n / ell
  int t = 0;
  Path alpha;
  std::vector<EdgeId> edges;           // the union of the translates of alpha
  std::vector<EdgeId> terminal_edges;  // orbit of the joined terminal edge
};

// Reads the orbit union of alpha; nullopt with a reason if it has none of
// the three shapes.
std::optional<CycleStructure> AnalyzeCycle(const Automorphism& phi, const Path& alpha,
                                           std::string* reason = nullptr);

struct Normalized {
  Reduction reduction;
  CycleStructure structure;
};

// alpha minimal between two vertices of one orbit. Shortens it to one edge
// (two around a tripod) by invariant edge moves.
Normalized NormalizeCycle(const Automorphism& phi, const Path& alpha,
                          const SearchOptions& options = {});
// alpha minimal between two terminal edges of one orbit. Shortens it to at
// most two edges.
Normalized NormalizeStep(const Automorphism& phi, const Path& alpha,
                         const SearchOptions& options = {});

}  // namespace trivalent

#endif  // TRIVALENT_DECOMPOSE_H_
