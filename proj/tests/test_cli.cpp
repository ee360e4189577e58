// Copyright 2026 The polymedial Authors
//
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


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef POLYMEDIAL_CLI_PATH
#error "POLYMEDIAL_CLI_PATH must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(POLYMEDIAL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polymedial_cli_" + name);
}

TEST(Cli, BuildReportsOrderAndVertices) {
  auto r = run("build universal:3,6:1,1:3,0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("group_order: 324"), std::string::npos);
  EXPECT_NE(r.out.find("N: 54"), std::string::npos);
  EXPECT_NE(r.out.find("presentation: gens: r0 r1 r2 r3; rels:"), std::string::npos);
  auto e = run("build eisenstein:m=2-2w:A=");
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("group_order: 720"), std::string::npos);
  EXPECT_NE(e.out.find("N: 120"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("build universal:3,6:9,9:9,0 --max-cosets 100000").code, 2);
  EXPECT_EQ(run("build nonsense").code, 4);
  EXPECT_EQ(run("build eisenstein:m=2:A=").code, 4);
  EXPECT_EQ(run("--format xml table1").code, 4);
  EXPECT_EQ(run("").code, 4);
  EXPECT_EQ(run("classify /nonexistent/file").code, 4);
  EXPECT_EQ(run("classify universal:3,6:3,0:4,0 --no-timing").code, 2);
}

TEST(Cli, ClassifyRows) {
  auto r = run("classify universal:3,6:1,1:3,0 --no-timing");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "key,s,t,group_order,N,verdict,aut_order,seconds\n"
            "\"universal:3,6:1,1:3,0\",\"(1,1)\",\"(3,0)\",324,54,\"ss-(4,3)\",1296,-\n");
  auto u = run("classify universal:3,6:3,0:4,0 --no-timing");
  EXPECT_NE(u.out.find(",40320,undecided,"), std::string::npos);
}

TEST(Cli, GraphExportRoundTrips) {
  for (const char* fmt : {"adj", "graph6"}) {
    auto path = temp_file(std::string("gray.") + fmt);
    auto r = run(std::string("build eisenstein:m=3:A= --format ") + fmt);
    ASSERT_EQ(r.code, 0);
    std::ofstream(path) << r.out;
    auto c = run("classify " + path.string() + " --no-timing --format md");
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("| 54 | ss-{3,4} | 1296 | - |"), std::string::npos) << c.out;
    std::filesystem::remove(path);
  }
  auto dot = run("build universal:3,6:1,1:1,1 --format dot");
  EXPECT_EQ(dot.out.rfind("graph medial {", 0), 0u);
}

TEST(Cli, AuxiliaryExports) {
  auto table = temp_file("cosets.csv");
  auto elements = temp_file("elements.txt");
  EXPECT_EQ(run("build universal:3,6:1,1:1,1 --coset-table " + table.string()).code, 0);
  std::ifstream t(table);
  std::string header;
  std::getline(t, header);
  EXPECT_EQ(header, "coset,r0,r0^-1,r1,r1^-1,r2,r2^-1,r3,r3^-1");
  std::size_t rows = 0;
  for (std::string line; std::getline(t, line);) ++rows;
  EXPECT_EQ(rows, 108u);
  EXPECT_EQ(run("build eisenstein:m=3:A= --elements " + elements.string()).code, 0);
  std::ifstream e(elements);
  std::size_t count = 0;
  for (std::string line; std::getline(e, line);) {
    EXPECT_EQ(line.front(), '(');
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
    ++count;
  }
  EXPECT_EQ(count, 162u);
  std::filesystem::remove(table);
  std::filesystem::remove(elements);
}

TEST(Cli, TableIsByteIdenticalAcrossRunsAndJobCounts) {
  auto a = run("table1 --no-timing");
  auto b = run("table1 --no-timing --jobs 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"universal:3,6:3,0:2,2\",\"(3,0)\",\"(2,2)\",41472,6912,undecided,,-"),
            std::string::npos);
}

TEST(Cli, ConfigFile) {
  auto cfg = temp_file("config.ini");
  std::ofstream(cfg) << "max-cosets=100000\nno-timing=true\n";
  auto r = run("--config " + cfg.string() + " build universal:3,6:9,9:9,0");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("coset limit 100000"), std::string::npos);
  std::filesystem::remove(cfg);
}

TEST(Cli, GrayVerify) {
  auto r = run("gray-verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
  EXPECT_NE(r.out.find("witness_digest: fnv1a64:"), std::string::npos);
  EXPECT_NE(r.out.find("index |Aut(G_3)| / |H_3| = 4"), std::string::npos);
}

}  // namespace
