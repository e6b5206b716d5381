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

#ifndef TRIVALENT_ENUMERATE_H_
#define TRIVALENT_ENUMERATE_H_

#include <vector>

#include "trivalent/graph.h"

namespace trivalent {

inline constexpr int kDefaultSizeCap = 12;

struct EnumerationOptions {
  int size_cap = kDefaultSizeCap;  // maximum number of edges
};

// One canonically labeled representative per isomorphism class of G_{g,b},
// sorted by canonical code. Throws kInadmissible or kSizeCap.
std::vector<Graph> EnumerateIsoClasses(int genus, int boundary,
                                       const EnumerationOptions& options = {});

// All admissible (g,b) with 3g-3+2b <= max_edges, ordered by (edges, g).
std::vector<std::pair<int, int>> AdmissiblePairsUpTo(int max_edges);

}  // namespace trivalent

#endif  // TRIVALENT_ENUMERATE_H_
