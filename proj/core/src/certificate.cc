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

#include "trivalent/certificate.h"

#include <fmt/format.h>

#include <algorithm>

#include "text_scanner.h"
#include "trivalent/canonical.h"
#include "trivalent/graph_io.h"

namespace trivalent {

Certificate Certificate::Identity() { return Certificate(); }

Certificate Certificate::SwitchLeaf(EdgeId e1, EdgeId e2) {
  Certificate c;
  c.kind_ = Kind::kSwitch;
  c.switch_edges_ = {e1, e2};
  return c;
}

Certificate Certificate::Compose(std::vector<Certificate> children) {
  Certificate c;
  c.kind_ = Kind::kCompose;
  c.children_ = std::move(children);
  return c;
}

Certificate Certificate::Transport(FMoveSpec to_child, std::vector<EdgeId> reversed_loops,
                                   Certificate child) {
  Certificate c;
  c.kind_ = Kind::kTransport;
  c.move_ = std::move(to_child);
  std::sort(reversed_loops.begin(), reversed_loops.end());
  c.reversed_loops_ = std::move(reversed_loops);
  c.children_.push_back(std::move(child));
  return c;
}

std::size_t Certificate::NodeCount() const {
  std::size_t count = 1;
  for (const Certificate& child : children_) count += child.NodeCount();
  return count;
}

int Certificate::Depth() const {
  int depth = 0;
  for (const Certificate& child : children_) depth = std::max(depth, child.Depth());
  return depth + 1;
}

std::string LabeledGraphDigest(const Graph& graph) {
  std::vector<int> words{graph.genus(), graph.boundary(), graph.num_vertices()};
  words.insert(words.end(), graph.dart_vertex().begin(), graph.dart_vertex().end());
  return CanonicalCode(std::move(words)).Digest();
}

std::string AutomorphismDigest(const Automorphism& phi) {
  return CanonicalCode(phi.dart_map()).Digest();
}

namespace {

struct Failure {
  std::string message;
};

Certificate::Stamp MakeStamp(const Graph& graph, const Automorphism& value) {
  return {LabeledGraphDigest(graph), CanonicalForm(graph).Digest(), AutomorphismDigest(value)};
}

// Evaluates `node` on `graph`; fills `stamped` with a stamped copy when given.
Automorphism Eval(const Certificate& node, const GraphPtr& graph, const std::string& where,
                  Certificate* stamped) {
  using Kind = Certificate::Kind;
  std::optional<Automorphism> value;
  switch (node.kind()) {
    case Kind::kIdentity:
      value = Automorphism::Identity(graph);
      break;
    case Kind::kSwitch: {
      const auto [e1, e2] = node.switch_edges();
      try {
        value = MakeSwitch(graph, e1, e2).automorphism;
      } catch (const Error& e) {
        throw Failure{
            fmt::format("{}: invalid switch {} {}: {}", where, e1.value(), e2.value(), e.what())};
      }
      break;
    }
    case Kind::kCompose: {
      value = Automorphism::Identity(graph);
      std::vector<Certificate> stamped_children;
      for (std::size_t k = 0; k < node.children().size(); ++k) {
        Certificate child_stamped;
        value = Compose(*value, Eval(node.children()[k], graph, fmt::format("{}/{}", where, k),
                                     stamped ? &child_stamped : nullptr));
        if (stamped) stamped_children.push_back(std::move(child_stamped));
      }
      if (stamped) *stamped = Certificate::Compose(std::move(stamped_children));
      break;
    }
    case Kind::kTransport: {
      std::optional<FMoveResult> moved;
      try {
        ValidateMove(*graph, node.move());
        moved = ApplyFMove(*graph, node.move());
      } catch (const Error& e) {
        throw Failure{fmt::format("{}: invalid move: {}", where, e.what())};
      }
      const GraphPtr child_graph = MakeGraphPtr(moved->graph);
      Certificate child_stamped;
      const Automorphism child = Eval(node.children().front(), child_graph, where + "/t",
                                      stamped ? &child_stamped : nullptr);
      const auto loops = BoundaryLoops(*child_graph, moved->inverse);
      for (EdgeId e : node.reversed_loops()) {
        if (!std::binary_search(loops.begin(), loops.end(), e)) {
          throw Failure{
              fmt::format("{}: reversed edge {} is not a boundary loop", where, e.value())};
        }
      }
      std::optional<TransportResult> back;
      try {
        back = trivalent::Transport(child, moved->inverse, node.reversed_loops(), graph);
      } catch (const Error& e) {
        throw Failure{fmt::format("{}: transport failed: {}", where, e.what())};
      }
      if (const auto* no = std::get_if<NotInvariant>(&*back)) {
        throw Failure{
            fmt::format("{}: move is not invariant for the child: {}", where, no->detail)};
      }
      value = std::get<Automorphism>(*std::move(back));
      if (stamped) {
        *stamped =
            Certificate::Transport(node.move(), node.reversed_loops(), std::move(child_stamped));
      }
      break;
    }
  }
  if (const auto& stamp = node.stamp()) {
    const Certificate::Stamp actual = MakeStamp(*graph, *value);
    if (stamp->graph != actual.graph) throw Failure{where + ": graph stamp mismatch"};
    if (stamp->code != actual.code) throw Failure{where + ": code stamp mismatch"};
    if (stamp->aut != actual.aut) throw Failure{where + ": automorphism stamp mismatch"};
  }
  if (stamped) {
    if (node.kind() == Certificate::Kind::kIdentity || node.kind() == Certificate::Kind::kSwitch) {
      *stamped = node;
    }
    stamped->set_stamp(MakeStamp(*graph, *value));
  }
  return *std::move(value);
}

// S-expression reader.
struct Sexp {
  internal::Token token;  // atom text, or the opening parenthesis
  bool list = false;
  std::vector<Sexp> items;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    for (auto& line : internal::TokenizeLines(text, /*split_parens=*/true)) {
      tokens_.insert(tokens_.end(), line.begin(), line.end());
    }
  }

  Sexp ReadTop() {
    if (tokens_.empty()) internal::FailAt(1, 1, "empty certificate");
    Sexp top = Read();
    if (pos_ < tokens_.size()) internal::Fail(tokens_[pos_], "trailing input after certificate");
    return top;
  }

 private:
  Sexp Read() {
    if (pos_ >= tokens_.size()) {
      const internal::Token& last = tokens_.back();
      internal::FailAt(last.line, last.column, "unexpected end of input");
    }
    const internal::Token& token = tokens_[pos_++];
    if (token.text == ")") internal::Fail(token, "unexpected ')'");
    if (token.text != "(") return Sexp{token, false, {}};
    Sexp list{token, true, {}};
    while (true) {
      if (pos_ >= tokens_.size()) internal::Fail(token, "unclosed '('");
      if (tokens_[pos_].text == ")") {
        ++pos_;
        return list;
      }
      list.items.push_back(Read());
    }
  }

  std::vector<internal::Token> tokens_;
  std::size_t pos_ = 0;
};

std::string Flatten(const Sexp& s) {
  if (!s.list) return std::string(s.token.text);
  std::string out = "(";
  for (std::size_t k = 0; k < s.items.size(); ++k) {
    if (k > 0) out += ' ';
    out += Flatten(s.items[k]);
  }
  return out + ")";
}

std::string_view Head(const Sexp& s) {
  if (!s.list || s.items.empty() || s.items.front().list) return {};
  return s.items.front().token.text;
}

std::string StampValue(const Sexp& field, std::string_view name) {
  if (Head(field) != name || field.items.size() != 2 || field.items[1].list) {
    internal::Fail(field.token, fmt::format("expected ({} <digest>)", name));
  }
  return std::string(field.items[1].token.text);
}

Certificate::Stamp ReadStamp(const Sexp& s) {
  if (s.items.size() != 4) internal::Fail(s.token, "stamp needs graph, code and aut");
  return {StampValue(s.items[1], "graph"), StampValue(s.items[2], "code"),
          StampValue(s.items[3], "aut")};
}

TreeReplacement ReadTree(const Sexp& s) {
  // Reuses the move reader on the flattened record.
  std::string line = "fmove\n";
  for (std::size_t k = 0; k < s.items.size(); ++k) {
    if (k > 0) line += ' ';
    line += Flatten(s.items[k]);
  }
  try {
    FMoveSpec spec = ParseFMove(line);
    return std::move(spec.trees.front());
  } catch (const ParseError& e) {
    internal::Fail(s.token, fmt::format("bad tree record: {}", e.what()));
  }
}

Certificate ReadNode(const Sexp& s) {
  if (!s.list) internal::Fail(s.token, fmt::format("expected a node, got '{}'", s.token.text));
  const std::string_view head = Head(s);
  std::optional<Certificate::Stamp> stamp;
  std::vector<const Sexp*> rest;
  for (std::size_t k = 1; k < s.items.size(); ++k) {
    if (Head(s.items[k]) == "stamp") {
      if (stamp) internal::Fail(s.items[k].token, "repeated stamp");
      stamp = ReadStamp(s.items[k]);
    } else {
      rest.push_back(&s.items[k]);
    }
  }

  Certificate node;
  if (head == "identity") {
    if (!rest.empty()) internal::Fail(rest.front()->token, "identity takes no arguments");
    node = Certificate::Identity();
  } else if (head == "switch") {
    if (rest.size() != 2 || rest[0]->list || rest[1]->list) {
      internal::Fail(s.token, "expected (switch <edge> <edge>)");
    }
    node = Certificate::SwitchLeaf(EdgeId(internal::ParseInt(rest[0]->token, "edge id")),
                                   EdgeId(internal::ParseInt(rest[1]->token, "edge id")));
  } else if (head == "compose") {
    std::vector<Certificate> children;
    for (const Sexp* child : rest) children.push_back(ReadNode(*child));
    node = Certificate::Compose(std::move(children));
  } else if (head == "transport") {
    FMoveSpec move;
    std::vector<EdgeId> reversed;
    std::optional<Certificate> child;
    for (const Sexp* item : rest) {
      const std::string_view h = Head(*item);
      if (h == "tree") {
        move.trees.push_back(ReadTree(*item));
      } else if (h == "reversed") {
        for (std::size_t k = 1; k < item->items.size(); ++k) {
          reversed.emplace_back(internal::ParseInt(item->items[k].token, "edge id"));
        }
      } else {
        if (child) internal::Fail(item->token, "transport has more than one child");
        child = ReadNode(*item);
      }
    }
    if (move.trees.empty()) internal::Fail(s.token, "transport without a tree");
    if (!child) internal::Fail(s.token, "transport without a child");
    node = Certificate::Transport(std::move(move), std::move(reversed), *std::move(child));
  } else {
    internal::Fail(s.items.empty() ? s.token : s.items.front().token,
                   fmt::format("unknown node '{}'", head));
  }
  if (stamp) node.set_stamp(*std::move(stamp));
  return node;
}

void Write(const Certificate& node, int indent, std::string& out) {
  using Kind = Certificate::Kind;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  out += pad;
  switch (node.kind()) {
    case Kind::kIdentity:
      out += "(identity";
      break;
    case Kind::kSwitch:
      out += fmt::format("(switch {} {}", node.switch_edges().first.value(),
                         node.switch_edges().second.value());
      break;
    case Kind::kCompose:
      out += "(compose";
      break;
    case Kind::kTransport:
      out += "(transport";
      break;
  }
  if (const auto& stamp = node.stamp()) {
    out += fmt::format(" (stamp (graph {}) (code {}) (aut {}))", stamp->graph, stamp->code,
                       stamp->aut);
  }
  if (node.kind() == Kind::kTransport) {
    for (const TreeReplacement& tree : node.move().trees) {
      FMoveSpec single{{tree}};
      std::string line = FormatFMove(single).substr(6);  // drop "fmove\n"
      line.pop_back();
      out += fmt::format("\n{}  ({})", pad, line);
    }
    if (!node.reversed_loops().empty()) {
      out += fmt::format("\n{}  (reversed", pad);
      for (EdgeId e : node.reversed_loops()) out += fmt::format(" {}", e.value());
      out += ')';
    }
  }
  for (const Certificate& child : node.children()) {
    out += '\n';
    Write(child, indent + 2, out);
  }
  out += ')';
}

}  // namespace

Evaluation Evaluate(const Certificate& certificate, const GraphPtr& graph) {
  try {
    return {Eval(certificate, graph, "root", nullptr), {}};
  } catch (const Failure& f) {
    return {std::nullopt, f.message};
  } catch (const Error& e) {
    return {std::nullopt, fmt::format("root: {}", e.what())};
  }
}

Verification VerifyCertificate(const Certificate& certificate, const Automorphism& phi) {
  const Evaluation e = Evaluate(certificate, phi.graph_ptr());
  if (!e.value) return {false, e.diagnostic};
  if (*e.value != phi) {
    return {false, fmt::format("certificate evaluates to {} instead of {}",
                               AutomorphismDigest(*e.value), AutomorphismDigest(phi))};
  }
  return {true, {}};
}

Certificate Stamped(const Certificate& certificate, const GraphPtr& graph) {
  Certificate out;
  try {
    Eval(certificate, graph, "root", &out);
  } catch (const Failure& f) {
    throw Error(ErrorCode::kInternal, f.message);
  }
  return out;
}

std::string FormatCertificate(const Certificate& certificate) {
  std::string out;
  Write(certificate, 0, out);
  out += '\n';
  return out;
}

Certificate ParseCertificate(std::string_view text) {
  Reader reader(text);
  return ReadNode(reader.ReadTop());
}

}  // namespace trivalent
