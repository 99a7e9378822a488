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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfrieze/polygon.hpp"

namespace gfrieze {

/// The properties the exhaustive harness can check on every d-angulation.
enum class CheckId {
  Symmetry,        // path-count matrix symmetric, zero diagonal, positive
                   // off-diagonal, ones next to the diagonal
  Oracle,          // matrix_fast equals the brute-force path enumeration
  Direction,       // clockwise counts equal counterclockwise counts
  Divisors,        // determinant and Smith normal form closed forms
  Glue,            // gluing recursion reproduces the matrix
  Minors,          // adjacent 2x2 minors in {-1,0,1} + hinge criterion
  TriangleMinors,  // d = 3: every off-diagonal adjacent minor is 1
};

constexpr std::string_view check_name(CheckId c) {
  switch (c) {
    case CheckId::Symmetry: return "symmetry";
    case CheckId::Oracle: return "oracle";
    case CheckId::Direction: return "direction";
    case CheckId::Divisors: return "divisors";
    case CheckId::Glue: return "glue";
    case CheckId::Minors: return "minors";
    case CheckId::TriangleMinors: return "triangle-minors";
  }
  return "unknown";
}

std::optional<CheckId> check_from_name(std::string_view name);
std::vector<CheckId> all_checks();

struct VerifyOptions {
  int d_min = 3;
  int d_max = 6;
  int n_max = 12;
  // Checks that enumerate paths (oracle, direction) are exponential and run
  // only on instances with n <= brute_n_max.
  int brute_n_max = 10;
  int jobs = 1;
  std::vector<CheckId> checks;  // empty means all
};

struct VerifyFailure {
  int n = 0, d = 0;
  std::vector<Diagonal> diagonals;
  CheckId check = CheckId::Symmetry;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::map<CheckId, long long> cases;  // d-angulations checked per check
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
  long long total_cases() const;
};

/// Enumerate every d-angulation with d_min <= d <= d_max and n <= n_max and
/// run the selected checks on each. The report is deterministic for any job
/// count: counts are aggregated and failures sorted into enumeration order.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace gfrieze
