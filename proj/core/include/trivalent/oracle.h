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

// Brute-force ground truth for F-equivalence, the closure of the switches
// under composition and F-equivalence, and edge-move connectivity.

#ifndef TRIVALENT_ORACLE_H_
#define TRIVALENT_ORACLE_H_

#include <optional>
#include <string>
#include <vector>

#include "trivalent/automorphism.h"
#include "trivalent/canonical.h"
#include "trivalent/fmove.h"

namespace trivalent {

// Equal iff the pairs (graph, phi) are isomorphic.
using StateKey = CanonicalCode;
StateKey MakeStateKey(const Automorphism& phi);

struct OracleOptions {
  long long budget = 2'000'000;  // transports evaluated
  int max_tree_ends = 6;
  int jobs = 1;
};

// The odd part of the order. Moves preserve the order of dart-level lifts,
// and the order of phi is that or half of it, so this is invariant.
int OddOrderPart(const Automorphism& phi);

struct FStep {
  FMoveSpec move;
  std::vector<EdgeId> reversed_loops;
  Automorphism result;
};

struct FEquivalence {
  enum class Verdict { kYes, kNo, kInconclusive };
  Verdict verdict = Verdict::kInconclusive;
  // On kYes: moves from phi to an automorphism isomorphic to psi.
  std::vector<FStep> path;
  std::string reason;
  long long states = 0;
};

FEquivalence FEquivalent(const Automorphism& phi, const Automorphism& psi,
                         const OracleOptions& options = {});

struct ClassClosure {
  CanonicalCode graph;
  std::size_t automorphisms = 0;
  std::size_t members = 0;
};

struct ClosureReport {
  int genus = 0;
  int boundary = 0;
  int max_tree_ends = 0;
  bool fixed_point = false;  // false: budget exhausted
  long long transports = 0;
  int rounds = 0;
  std::vector<ClassClosure> classes;  // by canonical code
  std::vector<StateKey> members;      // sorted, one per isomorphism type

  bool full() const;
};

// Least set containing the switches of every graph in G_{g,b}, closed under
// composition and F-equivalence. Graphs are taken up to isomorphism; the set
// is closed under conjugation by graph automorphisms.
ClosureReport ClosureE(int genus, int boundary, const OracleOptions& options = {});

struct ClosureBound {
  // Smallest max_tree_ends in [4, options.max_tree_ends] giving the full set.
  std::optional<int> smallest_sufficient;
  ClosureReport report;  // at that bound, else at options.max_tree_ends
};

ClosureBound SmallestSufficientBound(int genus, int boundary, const OracleOptions& options = {});

// Components of the graph on isomorphism classes joined by edge moves; each
// sorted, ordered by first code.
std::vector<std::vector<CanonicalCode>> MoveGraphComponents(int genus, int boundary);

}  // namespace trivalent

#endif  // TRIVALENT_ORACLE_H_
