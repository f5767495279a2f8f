// Copyright 2026 The nfg Authors.
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

// Runs the nfg binary on the bundled data files.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
  const std::string cmd =
      env + " " + std::string(NFG_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const char* name) { return std::string(NFG_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("eval prints the scalar") {
  const auto r = run("eval " + data("closed_pair.nfg"));
  CHECK(r.status == 0);
  CHECK(r.out == "3+0i\n");
  CHECK(run("eval --mode brute " + data("closed_pair.nfg")).out == "3+0i\n");
  CHECK(run("eval --mode sideways " + data("closed_pair.nfg")).status == 2);
}

TEST_CASE("verify-holant with the identity assignment") {
  const auto r = run("verify-holant " + data("pair.nfg") + " " + data("identity.assign"));
  CHECK(r.status == 0);
  CHECK(r.out.find("deviation: 0\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run("--json verify-holant " + data("pair.nfg") + " " + data("identity.assign")).out);
  CHECK(j["deviation"] == 0.0);
  CHECK(j["ok"] == true);
}

TEST_CASE("verify-duality on a plain alphabet is an input error") {
  const auto r = run("verify-duality " + data("bad.nfg"), true);
  CHECK(r.status == 2);
  CHECK(r.out.find("non-group alphabet") != std::string::npos);
  CHECK(r.out.find("on edge") != std::string::npos);
}

TEST_CASE("verification failures exit 1") {
  // Transformers at both ends of an edge that are not an inverse pair are
  // an input error; a tolerance below the rounding error is a failure.
  CHECK(run("verify-holant " + data("closed_pair.nfg") + " " + data("kappa_both.assign")).status == 2);
  CHECK(run("verify-holant --random 100").status == 0);
  CHECK(run("--tol 1e-300 verify-holant --random 100").status == 1);
}

TEST_CASE("missing and malformed input") {
  CHECK(run("eval /nonexistent/file.nfg").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("verify-holant " + data("pair.nfg")).status == 2);
  const auto r = run("eval " + data("hadamard.assign"), true);
  CHECK(r.status == 2);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* args : {"verify-holant --random 20 --seed 3", "verify-duality --random 10 --seed 4",
                           "verify-decomposition --random 10 --seed 5", "--json eval data/pair.nfg"}) {
    std::string a = args;
    const auto pos = a.find("data/");
    if (pos != std::string::npos) a = a.substr(0, pos) + data(a.substr(pos + 5).c_str());
    const auto first = run(a);
    CHECK(first.status == 0);
    CHECK(run(a).out == first.out);
    CHECK(run(a, false, "OMP_NUM_THREADS=1").out == first.out);
    CHECK(run(a, false, "OMP_NUM_THREADS=7").out == first.out);
  }
  // a different seed draws different instances
  CHECK(run("verify-holant --random 20 --seed 3").out != run("verify-holant --random 20 --seed 4").out);
}

TEST_CASE("subcommands run on the sample files") {
  CHECK(run("perfmatch " + data("four_cycle.graph")).out == "11+0i\n");
  CHECK(run("perfmatch --fkt " + data("four_cycle.graph")).out == "11+0i\n");
  CHECK(run("code-dual " + data("hamming74.code")).status == 0);
  CHECK(run("code-dual " + data("repetition3.code")).status == 0);
  CHECK(run("dualize " + data("closed_pair.nfg")).status == 0);
  CHECK(run("normalize " + data("three_factor.marked")).status == 0);
  CHECK(run("signature " + data("path.gate")).out.find("(1,0) 1+0i") != std::string::npos);
  CHECK(run("verify-decomposition " + data("two_edges.assembly")).status == 0);
  CHECK(run("reduce " + data("square.nfg") + " " + data("identity.assign") + " " + data("square.gates")).status == 0);
  CHECK(run("transform " + data("closed_pair.nfg") + " " + data("hadamard.assign")).status == 0);
}

TEST_CASE("rewrite subcommand") {
  const auto cp = data("closed_pair.nfg");
  CHECK(run("rewrite " + cp + " --op group --vertices f,g --verify").status == 0);
  CHECK(run("rewrite " + cp + " --op eq-insert --edge int:0 --verify").status == 0);
  CHECK(run("rewrite " + cp + " --op dual-insert --edge int:0 --pair kappa --verify").status == 0);
  CHECK(run("rewrite " + cp + " --op eq-delete --vertex f").status == 2);
  CHECK(run("rewrite " + cp + " --op eq-insert --edge sideways").status == 2);

  // --out writes the rewritten NFG, which evaluates to the same scalar
  const auto out = (std::filesystem::temp_directory_path() / "nfg_cli_rewrite.nfg").string();
  CHECK(run("--out " + out + " rewrite " + cp + " --op eq-insert --edge int:0").status == 0);
  CHECK(run("eval " + out).out == "3+0i\n");
  CHECK(run("--out " + out + " rewrite " + out + " --op eq-delete --vertex eq").status == 0);
  CHECK(run("eval " + out).out == "3+0i\n");
  std::filesystem::remove(out);
}
