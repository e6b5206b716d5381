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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "trivalent/graph_io.h"

namespace trivalent::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome Call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = Run(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("trivalent_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    Write("theta.graph", "graph g=2 b=0\nedge a x y\nedge b x y\nedge c x y\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }
  std::string Slurp(const std::string& name) const { return ReadTextFile(Path(name)); }

  // Writes automorphism `index` of the theta graph to `name`.
  void WriteThetaAut(int index, const std::string& name) const {
    ASSERT_EQ(Call({"aut", Path("theta.graph"), "--index", std::to_string(index), "-o", Path(name)})
                  .status,
              kOk);
  }

  fs::path dir_;
};

TEST_F(CliTest, ValidateStatuses) {
  EXPECT_EQ(Call({"validate", Path("theta.graph")}).status, kOk);
  Write("two_loops.graph", "graph g=2 b=0\nedge a x x\nedge b y y\n");
  const Outcome invalid = Call({"validate", Path("two_loops.graph")});
  EXPECT_EQ(invalid.status, kNegative);
  EXPECT_NE(invalid.out.find("invalid:"), std::string::npos);
  Write("broken.graph", "graph g=2 b=0\nedge a x\n");
  const Outcome broken = Call({"validate", Path("broken.graph")});
  EXPECT_EQ(broken.status, kUsage);
  EXPECT_NE(broken.err.find("broken.graph:2:1:"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).status, kUsage);
  EXPECT_EQ(Call({"frobnicate"}).status, kUsage);
  EXPECT_EQ(Call({"enumerate", "--g", "0"}).status, kUsage);
  EXPECT_EQ(Call({"enumerate", "--g", "0", "--b", "2"}).status, kUsage);
  EXPECT_EQ(Call({"validate", Path("missing.graph")}).status, kUsage);
  EXPECT_EQ(Call({"--help"}).status, kOk);
}

TEST_F(CliTest, EnumerateWritesClassFiles) {
  const Outcome r = Call({"enumerate", "--g", "2", "--b", "0", "-o", Path("classes")});
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(r.out.rfind("classes 2 g=2 b=0\n", 0), 0u);
  EXPECT_EQ(Call({"validate", Path("classes/class0.graph")}).status, kOk);
  EXPECT_EQ(Call({"validate", Path("classes/class1.graph")}).status, kOk);
}

TEST_F(CliTest, AutListsTheGroup) {
  const Outcome r = Call({"aut", Path("theta.graph")});
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(r.out.rfind("automorphisms 12\n", 0), 0u);
  EXPECT_EQ(Call({"aut", Path("theta.graph"), "--index", "12"}).status, kUsage);
}

TEST_F(CliTest, DecomposeThenVerify) {
  for (int index = 0; index < 12; ++index) {
    WriteThetaAut(index, "phi.aut");
    ASSERT_EQ(
        Call({"decompose", Path("theta.graph"), Path("phi.aut"), "-o", Path("cert.txt")}).status,
        kOk);
    const Outcome v = Call({"verify", Path("theta.graph"), Path("phi.aut"), Path("cert.txt")});
    EXPECT_EQ(v.status, kOk) << v.out;
  }
}

TEST_F(CliTest, VerifyRejectsAWrongAutomorphism) {
  WriteThetaAut(2, "phi.aut");
  WriteThetaAut(0, "id.aut");
  ASSERT_EQ(
      Call({"decompose", Path("theta.graph"), Path("phi.aut"), "-o", Path("cert.txt")}).status,
      kOk);
  const Outcome v = Call({"verify", Path("theta.graph"), Path("id.aut"), Path("cert.txt")});
  EXPECT_EQ(v.status, kNegative);
  EXPECT_EQ(v.out.rfind("rejected:", 0), 0u);
  Write("garbage.cert", "(switch 0\n");
  EXPECT_EQ(Call({"verify", Path("theta.graph"), Path("id.aut"), Path("garbage.cert")}).status,
            kUsage);
}

TEST_F(CliTest, OrbitsReport) {
  WriteThetaAut(2, "phi.aut");
  const Outcome r = Call({"orbits", Path("theta.graph"), Path("phi.aut")});
  ASSERT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("orders-check ok"), std::string::npos);
}

TEST_F(CliTest, FMoveAndTransport) {
  Write("move.txt", "fmove\ntree 0 -> coupling (2 (3 4) 5)\n");
  const Outcome moved =
      Call({"fmove", Path("theta.graph"), Path("move.txt"), "-o", Path("d.graph")});
  ASSERT_EQ(moved.status, kOk) << moved.err;
  EXPECT_EQ(Call({"validate", Path("d.graph")}).status, kOk);

  WriteThetaAut(0, "id.aut");
  const Outcome lifted = Call({"transport", Path("theta.graph"), Path("id.aut"), Path("move.txt")});
  ASSERT_EQ(lifted.status, kOk) << lifted.err;
  EXPECT_EQ(lifted.out.rfind("lifts 1\n", 0), 0u);

  // The edge 3-cycle moves the tree off itself.
  const Outcome blocked = Call({"aut", Path("theta.graph")});
  int cycle = -1;
  std::istringstream lines(blocked.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("order 3") != std::string::npos) {
      cycle = std::stoi(line.substr(4));
      break;
    }
  }
  ASSERT_GE(cycle, 0);
  WriteThetaAut(cycle, "cycle.aut");
  EXPECT_EQ(Call({"transport", Path("theta.graph"), Path("cycle.aut"), Path("move.txt")}).status,
            kNegative);
}

TEST_F(CliTest, OracleClosureReportsFullSet) {
  const Outcome r = Call({"oracle-closure", "--g", "2", "--b", "0"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("closure = full automorphism set\n"), std::string::npos);
  EXPECT_EQ(r.out, Call({"oracle-closure", "--g", "2", "--b", "0", "--jobs", "3"}).out);
}

TEST_F(CliTest, OracleClosureBudgetIsInconclusive) {
  const Outcome r = Call({"oracle-closure", "--g", "2", "--b", "0", "--budget", "1"});
  EXPECT_EQ(r.status, kInconclusive);
  EXPECT_NE(r.out.find("inconclusive"), std::string::npos);
}

TEST_F(CliTest, OracleClosureSmallestBound) {
  const Outcome r = Call({"oracle-closure", "--g", "1", "--b", "1", "--smallest-bound"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("smallest sufficient max-tree-ends = 4\n"), std::string::npos);
}

TEST_F(CliTest, OracleComponentsIsConnected) {
  const Outcome r = Call({"oracle-components", "--g", "0", "--b", "5"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out.rfind("components 1 g=0 b=5\n", 0), 0u);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  WriteThetaAut(5, "phi.aut");
  const Outcome a = Call({"decompose", Path("theta.graph"), Path("phi.aut")});
  const Outcome b = Call({"decompose", Path("theta.graph"), Path("phi.aut")});
  EXPECT_EQ(a.status, kOk);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace trivalent::cli
