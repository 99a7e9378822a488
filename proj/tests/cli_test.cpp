// Copyright 2026 The Gfrieze Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the installed command-line interface: output fixtures,
// exit codes, format agreement between the computation routes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "gfrieze/matrix.hpp"
#include "json.hpp"

#ifndef GFRIEZE_CLI
#error "GFRIEZE_CLI must point at the binary under test"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_shell(const std::string& cmd_line) {
  const std::string cmd = cmd_line + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(GFRIEZE_CLI) + " " + args);
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string(P_tmpdir) + "/gfrieze_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kOctagonFile =
    write_temp("octagon.txt", "# triangulated octagon\n8 3\n1 4\n2 4\n4 6\n1 6\n1 7\n");
const std::string kTengonFile =
    write_temp("tengon.txt", "10 4\n2 5\n5 8\n1 8\n");
const std::string kTwelveFile =
    write_temp("twelve.txt", "12 4\n1 4\n4 7\n7 12\n8 11\n");

}  // namespace

TEST_CASE("cli validate") {
  RunResult ok = run_cli("validate " + kOctagonFile);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "n=8 d=3 m=5, 6 faces\n");

  RunResult bad_size = run_cli("validate " + write_temp("badsize.txt", "9 4\n"));
  CHECK(bad_size.exit_code == 2);
  CHECK(bad_size.output.find("InvalidSize") != std::string::npos);

  RunResult crossing =
      run_cli("validate " + write_temp("crossing.txt", "4 3\n1 3\n2 4\n"));
  CHECK(crossing.exit_code == 2);
  CHECK(crossing.output.find("CrossingDiagonals") != std::string::npos);
  CHECK(crossing.output.find("(1,3)") != std::string::npos);
  CHECK(crossing.output.find("(2,4)") != std::string::npos);

  RunResult missing = run_cli("validate /no/such/file");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("ParseError") != std::string::npos);
}

TEST_CASE("cli matrix: routes agree byte for byte and round trip") {
  RunResult fast = run_cli("matrix " + kTengonFile);
  RunResult brute = run_cli("matrix --method brute " + kTengonFile);
  RunResult glue = run_cli("matrix --method glue " + kTengonFile);
  CHECK(fast.exit_code == 0);
  CHECK(fast.output == brute.output);
  CHECK(fast.output == glue.output);

  gfrieze::IntMatrix parsed = gfrieze::matrix_from_text(fast.output);
  CHECK(parsed == gfrieze::matrix_fast(fixtures::tengon()).entries);
  CHECK(parsed == fixtures::to_matrix(fixtures::kTengonMatrix));

  // The brute-force cap rejects large instances unless overridden.
  std::string big = "16 3\n";
  for (int v = 3; v <= 15; ++v) big += "1 " + std::to_string(v) + "\n";
  std::string big_file = write_temp("fan16.txt", big);
  RunResult capped = run_cli("matrix --method brute " + big_file);
  CHECK(capped.exit_code == 2);
  CHECK(capped.output.find("SizeLimit") != std::string::npos);
  RunResult lifted = run_cli("matrix --method brute --unsafe-brute " + big_file);
  CHECK(lifted.exit_code == 0);
  RunResult fast16 = run_cli("matrix " + big_file);
  CHECK(lifted.output == fast16.output);

  // A single d-gon from stdin: zero diagonal, ones elsewhere.
  RunResult single =
      run_shell("printf '4 4\\n' | " + std::string(GFRIEZE_CLI) + " matrix -");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n");
}

TEST_CASE("cli matrix: structured output carries the dissection") {
  RunResult res = run_cli("matrix --format structured " + kTwelveFile);
  CHECK(res.exit_code == 0);
  auto parsed = nlohmann::json::parse(res.output);
  CHECK(parsed["n"] == 12);
  CHECK(parsed["d"] == 4);
  CHECK(parsed["diagonals"].size() == 4);
  CHECK(parsed["entries"].size() == 12);
  CHECK(parsed["entries"][0][8] == "4");
}

TEST_CASE("cli invariants") {
  RunResult oct = run_cli("invariants " + kOctagonFile);
  CHECK(oct.exit_code == 0);
  CHECK(oct.output.find("determinant: -64") != std::string::npos);
  CHECK(oct.output.find("divisors: 1^2 2^6") != std::string::npos);
  CHECK(oct.output.find("PASS") != std::string::npos);

  RunResult ten = run_cli("invariants " + kTengonFile);
  CHECK(ten.output.find("determinant: -81") != std::string::npos);
  CHECK(ten.output.find("divisors: 1^6 3^4") != std::string::npos);

  RunResult twelve = run_cli("invariants " + kTwelveFile);
  CHECK(twelve.output.find("determinant: -243") != std::string::npos);
  CHECK(twelve.output.find("divisors: 1^7 3^5") != std::string::npos);
}

TEST_CASE("cli hinge") {
  RunResult w = run_cli("hinge " + kTwelveFile + " -e 4 -f 1");
  CHECK(w.exit_code == 0);
  CHECK(w.output.find("witness s=3") != std::string::npos);
  CHECK(w.output.find("edges: (4,5) (4,7) (1,4) (1,2)") != std::string::npos);

  RunResult none = run_cli("hinge " + kTwelveFile + " -e 4 -f 12");
  CHECK(none.exit_code == 0);
  CHECK(none.output.find("minor: 0") != std::string::npos);
  CHECK(none.output.find("no witness") != std::string::npos);

  RunResult same = run_cli("hinge " + kTwelveFile + " -e 4 -f 4");
  CHECK(same.exit_code == 2);
  CHECK(same.output.find("SameEdge") != std::string::npos);
}

TEST_CASE("cli enumerate") {
  RunResult hex = run_cli("enumerate -n 6 -d 4");
  CHECK(hex.exit_code == 0);
  CHECK(hex.output == "1-4\n2-5\n3-6\n");
  RunResult count = run_cli("enumerate -n 12 -d 3 --count-only");
  CHECK(count.output == "16796\n");
  RunResult single = run_cli("enumerate -n 5 -d 5");
  CHECK(single.output == "\n");
  RunResult invalid = run_cli("enumerate -n 9 -d 4");
  CHECK(invalid.exit_code == 2);
}

TEST_CASE("cli verify") {
  RunResult ok = run_cli("verify --nmax 8 --brute-nmax 7 --jobs 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("OK") != std::string::npos);

  RunResult sel = run_cli(
      "verify --nmax 8 --checks divisors,triangle-minors --format structured");
  CHECK(sel.exit_code == 0);
  auto parsed = nlohmann::json::parse(sel.output);
  CHECK(parsed["ok"] == true);
  CHECK(parsed["cases"]["divisors"] == 218);  // 196 + 16 + 5 + 1
  CHECK(parsed["failures"].empty());

  RunResult unknown = run_cli("verify --checks no-such");
  CHECK(unknown.exit_code == 3);
}

TEST_CASE("cli usage errors and determinism") {
  CHECK(run_cli("").exit_code == 3);
  CHECK(run_cli("frobnicate").exit_code == 3);
  CHECK(run_cli("matrix --method wat " + kOctagonFile).exit_code == 3);
  CHECK(run_cli("--help").exit_code == 0);

  RunResult a = run_cli("minors " + kTwelveFile);
  RunResult b = run_cli("minors " + kTwelveFile);
  CHECK(a.output == b.output);
  CHECK(a.output.substr(0, a.output.find('\n')) ==
        "-1 1 0 1 0 1 0 0 0 0 0 1");
}
