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

#include "cli.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "trivalent/automorphism.h"
#include "trivalent/certificate.h"
#include "trivalent/decompose.h"
#include "trivalent/enumerate.h"
#include "trivalent/fmove.h"
#include "trivalent/graph_io.h"
#include "trivalent/oracle.h"

namespace trivalent::cli {
namespace {

// Thrown for malformed input files and bad arguments. Parse errors already
// carry "line:column: " in their message.
struct UsageError {
  std::string message;
};

template <class Fn>
auto Load(const std::string& path, Fn&& parse) {
  try {
    return parse(ReadTextFile(path));
  } catch (const ParseError& e) {
    throw UsageError{fmt::format("{}:{}", path, e.what())};
  } catch (const Error& e) {
    throw UsageError{fmt::format("{}: {}", path, e.what())};
  }
}

GraphDocument LoadGraph(const std::string& path) {
  return Load(path, [](const std::string& text) { return ParseGraph(text); });
}

GraphPtr LoadValidGraph(const std::string& path) {
  GraphDocument document = LoadGraph(path);
  const ValidationReport report = Validate(document);
  if (!report.ok()) {
    throw UsageError{fmt::format("{}: {}", path, report.diagnostics.front().message)};
  }
  return MakeGraphPtr(std::move(document.graph));
}

Automorphism LoadAutomorphism(const std::string& path, const GraphPtr& graph) {
  return Load(path, [&](const std::string& text) { return ParseAutomorphism(text, graph); });
}

FMoveSpec LoadMove(const std::string& path) {
  return Load(path, [](const std::string& text) { return ParseFMove(text); });
}

Certificate LoadCertificate(const std::string& path) {
  return Load(path, [](const std::string& text) { return ParseCertificate(text); });
}

// Writes to `path` when given, else to `out`.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError{fmt::format("cannot write '{}'", path)};
  file << text;
}

struct Options {
  std::string graph, aut, move, cert, output;
  int genus = -1;
  int boundary = -1;
  long long budget = -1;
  int max_tree_ends = 6;
  int jobs = 1;
  std::optional<int> index;
  bool smallest_bound = false;
};

OracleOptions ToOracleOptions(const Options& o) {
  OracleOptions options;
  if (o.budget > 0) options.budget = o.budget;
  options.max_tree_ends = o.max_tree_ends;
  options.jobs = o.jobs;
  return options;
}

int Validate(const Options& o, std::ostream& out) {
  const GraphDocument document = LoadGraph(o.graph);
  const Graph& g = document.graph;
  out << fmt::format("graph g={} b={} vertices={} edges={}\n", g.genus(), g.boundary(),
                     g.num_vertices(), g.num_edges());
  const ValidationReport report = trivalent::Validate(document);
  for (const Diagnostic& d : report.diagnostics) out << "invalid: " << d.message << '\n';
  if (!report.ok()) return kNegative;
  out << "valid\n";
  return kOk;
}

int Enumerate(const Options& o, std::ostream& out) {
  const auto classes = EnumerateIsoClasses(o.genus, o.boundary);
  out << fmt::format("classes {} g={} b={}\n", classes.size(), o.genus, o.boundary);
  if (!o.output.empty()) std::filesystem::create_directories(o.output);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const GraphPtr graph = MakeGraphPtr(classes[i]);
    out << fmt::format("class {} automorphisms {} code {}\n", i, AutomorphismGroup(graph).size(),
                       CanonicalForm(*graph).ToString());
    if (!o.output.empty()) {
      Emit((std::filesystem::path(o.output) / fmt::format("class{}.graph", i)).string(),
           FormatGraph(*graph), out);
    }
  }
  return kOk;
}

int Aut(const Options& o, std::ostream& out) {
  const GraphPtr graph = LoadValidGraph(o.graph);
  const auto group = AutomorphismGroup(graph);
  if (o.index) {
    if (*o.index < 0 || *o.index >= static_cast<int>(group.size())) {
      throw UsageError{fmt::format("index {} out of range [0, {})", *o.index, group.size())};
    }
    Emit(o.output, FormatAutomorphism(group[static_cast<std::size_t>(*o.index)]), out);
    return kOk;
  }
  std::string text = fmt::format("automorphisms {}\n", group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    text += fmt::format("aut {} order {} darts {}\n", i, Order(group[i]),
                        fmt::join(group[i].dart_map(), " "));
  }
  Emit(o.output, text, out);
  return kOk;
}

int Orbits(const Options& o, std::ostream& out) {
  const GraphPtr graph = LoadValidGraph(o.graph);
  const Automorphism phi = LoadAutomorphism(o.aut, graph);
  const OrbitReport report = ComputeOrbitReport(phi);
  out << fmt::format("order {}\n", report.order);
  out << fmt::format("vertex-orders {}\n", fmt::join(report.vertex_orders, " "));
  out << fmt::format("edge-orders {}\n", fmt::join(report.edge_orders, " "));
  out << fmt::format("edge-order-set {}\n", fmt::join(report.edge_order_set, " "));
  out << fmt::format("primary-orders {}\n", fmt::join(PrimaryDecomposition(phi).orders, " "));
  if (const auto violation = OrdersViolation(phi, report)) {
    out << "orders-check failed: " << *violation << '\n';
    return kNegative;
  }
  out << "orders-check ok\n";
  return kOk;
}

std::string Commented(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    out += "# " + text.substr(start, end - start) + '\n';
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

int FMove(const Options& o, std::ostream& out) {
  const GraphPtr graph = LoadValidGraph(o.graph);
  const FMoveSpec spec = LoadMove(o.move);
  try {
    ValidateMove(*graph, spec);
  } catch (const Error& e) {
    out << "invalid move: " << e.what() << '\n';
    return kNegative;
  }
  const FMoveResult result = ApplyFMove(*graph, spec);
  Emit(o.output,
       FormatGraph(result.graph) + "# inverse move\n" + Commented(FormatFMove(result.inverse)),
       out);
  return kOk;
}

int TransportCommand(const Options& o, std::ostream& out) {
  const GraphPtr graph = LoadValidGraph(o.graph);
  const Automorphism phi = LoadAutomorphism(o.aut, graph);
  const FMoveSpec spec = LoadMove(o.move);
  try {
    ValidateMove(*graph, spec);
  } catch (const Error& e) {
    out << "invalid move: " << e.what() << '\n';
    return kNegative;
  }
  const auto images = TransportAll(phi, spec);
  if (images.empty()) {
    const TransportResult r = Transport(phi, spec);
    out << "not invariant: " << std::get<NotInvariant>(r).detail << '\n';
    return kNegative;
  }
  std::string text = fmt::format("lifts {}\n", images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    text += fmt::format("# lift {} order {}\n", i, Order(images[i]));
    text += FormatAutomorphism(images[i]);
  }
  Emit(o.output, text, out);
  return kOk;
}

int DecomposeCommand(const Options& o, std::ostream& out) {
  const GraphPtr graph = LoadValidGraph(o.graph);
  const Automorphism phi = LoadAutomorphism(o.aut, graph);
  SearchOptions options;
  options.max_tree_ends = o.max_tree_ends;
  if (o.budget > 0) options.budget = o.budget;
  const Certificate certificate = Stamped(Decompose(phi, options), graph);
  Emit(o.output, FormatCertificate(certificate), out);
  if (!o.output.empty()) {
    out << fmt::format("certificate nodes {} depth {} written to {}\n", certificate.NodeCount(),
                       certificate.Depth(), o.output);
  }
  return kOk;
}

int Verify(const Options& o, std::ostream& out) {
  const GraphPtr graph = LoadValidGraph(o.graph);
  const Automorphism phi = LoadAutomorphism(o.aut, graph);
  const Certificate certificate = LoadCertificate(o.cert);
  const Verification v = VerifyCertificate(certificate, phi);
  if (!v.ok) {
    out << "rejected: " << v.diagnostic << '\n';
    return kNegative;
  }
  out << fmt::format("verified nodes {} depth {}\n", certificate.NodeCount(), certificate.Depth());
  return kOk;
}

int OracleClosure(const Options& o, std::ostream& out) {
  const OracleOptions options = ToOracleOptions(o);
  ClosureReport report;
  std::optional<int> bound;
  if (o.smallest_bound) {
    ClosureBound b = SmallestSufficientBound(o.genus, o.boundary, options);
    bound = b.smallest_sufficient;
    report = std::move(b.report);
  } else {
    report = ClosureE(o.genus, o.boundary, options);
  }
  out << fmt::format("closure g={} b={} max-tree-ends={}\n", report.genus, report.boundary,
                     report.max_tree_ends);
  std::size_t automorphisms = 0, members = 0;
  for (const ClassClosure& c : report.classes) {
    out << fmt::format("class {} automorphisms {} members {}\n", c.graph.ToString(),
                       c.automorphisms, c.members);
    automorphisms += c.automorphisms;
    members += c.members;
  }
  out << fmt::format("total automorphisms {} members {} conjugacy-types {}\n", automorphisms,
                     members, report.members.size());
  out << fmt::format("rounds {} transports {}\n", report.rounds, report.transports);
  if (o.smallest_bound) {
    out << (bound ? fmt::format("smallest sufficient max-tree-ends = {}\n", *bound)
                  : fmt::format("no sufficient max-tree-ends up to {}\n", options.max_tree_ends));
  }
  if (report.full()) {
    out << "closure = full automorphism set\n";
    return kOk;
  }
  if (!report.fixed_point) {
    out << "closure = inconclusive (budget exhausted)\n";
    return kInconclusive;
  }
  out << "closure = proper subset\n";
  return kNegative;
}

int OracleComponents(const Options& o, std::ostream& out) {
  const auto components = MoveGraphComponents(o.genus, o.boundary);
  out << fmt::format("components {} g={} b={}\n", components.size(), o.genus, o.boundary);
  for (std::size_t i = 0; i < components.size(); ++i) {
    out << fmt::format("component {} size {}\n", i, components[i].size());
    for (const CanonicalCode& code : components[i]) out << "  " << code.ToString() << '\n';
  }
  return components.size() == 1 ? kOk : kNegative;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"F-move calculus and automorphism decomposition for uni/trivalent graphs",
               "trivalent"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> command;

  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&command, fn] { command = fn; });
    return sub;
  };
  auto pair_flags = [&](CLI::App* sub) {
    sub->add_option("--g", o.genus, "First Betti number")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--b", o.boundary, "Number of free ends")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };
  auto search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-tree-ends", o.max_tree_ends, "Largest tree in invariant moves")
        ->check(CLI::Range(4, 16));
  };

  CLI::App* validate = add("validate", "Check a graph file", Validate);
  validate->add_option("graph", o.graph, "Graph file")->required();

  CLI::App* enumerate = add("enumerate", "List isomorphism classes of G(g,b)", Enumerate);
  pair_flags(enumerate);
  enumerate->add_option("-o", o.output, "Directory for class<i>.graph files");

  CLI::App* aut = add("aut", "List automorphisms of a graph", Aut);
  aut->add_option("graph", o.graph, "Graph file")->required();
  aut->add_option("--index", o.index, "Write only this automorphism, in .aut format");
  aut->add_option("-o", o.output, "Output file");

  CLI::App* orbits = add("orbits", "Orders of vertices and edges", Orbits);
  orbits->add_option("graph", o.graph, "Graph file")->required();
  orbits->add_option("aut", o.aut, "Automorphism file")->required();

  CLI::App* fmove = add("fmove", "Apply an F-move", FMove);
  fmove->add_option("graph", o.graph, "Graph file")->required();
  fmove->add_option("move", o.move, "Move file")->required();
  fmove->add_option("-o", o.output, "Output graph file");

  CLI::App* transport =
      add("transport", "Automorphisms induced across an F-move", TransportCommand);
  transport->add_option("graph", o.graph, "Graph file")->required();
  transport->add_option("aut", o.aut, "Automorphism file")->required();
  transport->add_option("move", o.move, "Move file")->required();
  transport->add_option("-o", o.output, "Output file");

  CLI::App* decompose =
      add("decompose", "Certificate expressing an automorphism through switches", DecomposeCommand);
  decompose->add_option("graph", o.graph, "Graph file")->required();
  decompose->add_option("aut", o.aut, "Automorphism file")->required();
  decompose->add_option("-o", o.output, "Certificate file");
  search_flags(decompose);

  CLI::App* verify = add("verify", "Check a certificate against an automorphism", Verify);
  verify->add_option("graph", o.graph, "Graph file")->required();
  verify->add_option("aut", o.aut, "Automorphism file")->required();
  verify->add_option("cert", o.cert, "Certificate file")->required();

  CLI::App* closure = add("oracle-closure", "Saturate the switch closure of G(g,b)", OracleClosure);
  pair_flags(closure);
  search_flags(closure);
  closure->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  closure->add_flag("--smallest-bound", o.smallest_bound,
                    "Search the smallest sufficient --max-tree-ends from 4 up");

  CLI::App* components =
      add("oracle-components", "Components of the edge-move graph on G(g,b)", OracleComponents);
  pair_flags(components);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    return command(o, out);
  } catch (const UsageError& e) {
    err << e.message << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kBudget:
        return kInconclusive;
      case ErrorCode::kInadmissible:
      case ErrorCode::kSizeCap:
      case ErrorCode::kParse:
        return kUsage;
      default:
        return kNegative;
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kNegative;
  }
}

}  // namespace trivalent::cli
