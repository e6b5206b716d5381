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

// Derivation trees proving that an automorphism is generated by switches
// under composition and F-equivalence.
//
// Every node lives on a concrete graph. The root's graph is supplied by the
// caller; a transport node names the move from its own graph to its child's
// graph, so each child graph is recomputed top-down. Evaluation is bottom-up:
//   identity        the identity
//   switch e1 e2    the elementary automorphism exchanging e1 and e2
//   compose c...    c0 o c1 o ... (all on the node's graph)
//   transport       the child's automorphism carried back across the move,
//                   using the lift that reverses the listed boundary loops

#ifndef TRIVALENT_CERTIFICATE_H_
#define TRIVALENT_CERTIFICATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/automorphism.h"
#include "trivalent/fmove.h"

namespace trivalent {

class Certificate {
 public:
  enum class Kind { kIdentity, kSwitch, kCompose, kTransport };

  // Digests recorded in the text form; checked on verification when present.
  struct Stamp {
    std::string graph;  // exact labeled graph
    std::string code;   // canonical code of the graph
    std::string aut;    // dart map of the node's automorphism
  };

  static Certificate Identity();
  static Certificate SwitchLeaf(EdgeId e1, EdgeId e2);
  static Certificate Compose(std::vector<Certificate> children);
  // `to_child` applies to this node's graph; `reversed_loops` are boundary
  // loops of the inverse move on the child's graph.
  static Certificate Transport(FMoveSpec to_child, std::vector<EdgeId> reversed_loops,
                               Certificate child);

  Kind kind() const { return kind_; }
  std::pair<EdgeId, EdgeId> switch_edges() const { return switch_edges_; }
  const std::vector<Certificate>& children() const { return children_; }
  const FMoveSpec& move() const { return move_; }
  const std::vector<EdgeId>& reversed_loops() const { return reversed_loops_; }
  const std::optional<Stamp>& stamp() const { return stamp_; }
  void set_stamp(Stamp stamp) { stamp_ = std::move(stamp); }

  std::size_t NodeCount() const;
  int Depth() const;

 private:
  Kind kind_ = Kind::kIdentity;
  std::pair<EdgeId, EdgeId> switch_edges_;
  std::vector<Certificate> children_;
  FMoveSpec move_;
  std::vector<EdgeId> reversed_loops_;
  std::optional<Stamp> stamp_;
};

struct Evaluation {
  std::optional<Automorphism> value;
  std::string diagnostic;  // first failure, with the node path
};

Evaluation Evaluate(const Certificate& certificate, const GraphPtr& graph);

struct Verification {
  bool ok = false;
  std::string diagnostic;
};

// True iff evaluation succeeds on phi's graph, every recorded stamp matches,
// and the value equals phi.
Verification VerifyCertificate(const Certificate& certificate, const Automorphism& phi);

// Evaluates and records stamps on every node. Throws kInternal on failure.
Certificate Stamped(const Certificate& certificate, const GraphPtr& graph);

// S-expression text form. Stamps are written when present.
std::string FormatCertificate(const Certificate& certificate);
Certificate ParseCertificate(std::string_view text);

// Digest of the exact labeled graph.
std::string LabeledGraphDigest(const Graph& graph);
std::string AutomorphismDigest(const Automorphism& phi);

}  // namespace trivalent

#endif  // TRIVALENT_CERTIFICATE_H_
