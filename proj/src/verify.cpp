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

#include "gfrieze/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "gfrieze/exactla.hpp"
#include "gfrieze/frieze.hpp"
#include "gfrieze/matrix.hpp"
#include "gfrieze/paths.hpp"

namespace gfrieze {

std::optional<CheckId> check_from_name(std::string_view name) {
  for (CheckId c : all_checks())
    if (check_name(c) == name) return c;
  return std::nullopt;
}

std::vector<CheckId> all_checks() {
  return {CheckId::Symmetry, CheckId::Oracle,  CheckId::Direction,
          CheckId::Divisors, CheckId::Glue,    CheckId::Minors,
          CheckId::TriangleMinors};
}

long long VerifyReport::total_cases() const {
  long long total = 0;
  for (const auto& [c, k] : cases) total += k;
  return total;
}

namespace {

struct Family {
  int n, d;
  DAngulationEnumerator enumerator;
};

struct Keyed {
  long long key;  // global enumeration order, for deterministic sorting
  VerifyFailure failure;
};

struct LocalReport {
  std::map<CheckId, long long> cases;
  std::vector<Keyed> failures;
};

bool selected(const std::vector<CheckId>& checks, CheckId c) {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

std::string divisors_str(const std::vector<Int>& div) {
  std::string s;
  for (const Int& v : div) s += (s.empty() ? "" : " ") + v.get_str();
  return s;
}

void check_one(const DAngulation& T, const VerifyOptions& opt,
               const std::vector<CheckId>& checks, long long key,
               LocalReport& rep) {
  const int n = T.n();
  auto report = [&](CheckId c, std::string detail) {
    rep.failures.push_back(
        {key, VerifyFailure{n, T.d(), T.diagonals(), c, std::move(detail)}});
  };

  const PathMatrix M = matrix_fast(T);
  const bool brute_ok = n <= opt.brute_n_max;

  if (selected(checks, CheckId::Symmetry)) {
    ++rep.cases[CheckId::Symmetry];
    for (int i = 1; i <= n; ++i) {
      if (M.count(i, i) != 0) report(CheckId::Symmetry, "nonzero diagonal");
      if (M.count(i, i + 1) != 1 || M.count(i, i + n - 1) != 1)
        report(CheckId::Symmetry, "border entry is not 1");
      for (int j = i + 1; j <= n; ++j) {
        if (M.count(i, j) != M.count(j, i))
          report(CheckId::Symmetry,
                 "asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (M.count(i, j) <= 0)
          report(CheckId::Symmetry, "non-positive off-diagonal entry");
      }
    }
  }

  if (selected(checks, CheckId::Oracle) && brute_ok) {
    ++rep.cases[CheckId::Oracle];
    const PathMatrix B = matrix_bruteforce(T);
    if (!(B == M)) report(CheckId::Oracle, "brute-force matrix differs from fast matrix");
    if (!B.is_symmetric()) report(CheckId::Oracle, "brute-force matrix asymmetric");
  }

  if (selected(checks, CheckId::Direction) && brute_ok) {
    ++rep.cases[CheckId::Direction];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (count_dpaths(T, i, j, Direction::Clockwise) !=
            count_dpaths(T, i, j, Direction::CounterClockwise))
          report(CheckId::Direction, "clockwise count differs at (" +
                                         std::to_string(i) + "," +
                                         std::to_string(j) + ")");
  }

  if (selected(checks, CheckId::Divisors)) {
    ++rep.cases[CheckId::Divisors];
    DivisorTheoremReport r = verify_divisor_theorem(T, M);
    if (!r.pass)
      report(CheckId::Divisors,
             "det " + r.det_actual.get_str() + " (expected " +
                 r.det_expected.get_str() + "), divisors " +
                 divisors_str(r.divisors_actual) + " (expected " +
                 divisors_str(r.divisors_expected) + ")");
  }

  if (selected(checks, CheckId::Glue)) {
    ++rep.cases[CheckId::Glue];
    if (T.m() >= 1) {
      // When the glued face sits at {1, n', .., n} the block identity applies
      // verbatim to the cut matrix.
      const int nprime = n - T.d() + 2;
      if (T.has_diagonal(1, nprime)) {
        int fid = T.boundary_edge_face(n);  // face containing edge (n, 1)
        bool in_position = T.diagonal_edge_count(fid) == 1;
        const Face& alpha = T.face(fid);
        for (int v : alpha.vertices)
          if (v != 1 && v < nprime) in_position = false;
        if (in_position) {
          CutResult cut = cut_boundary_face(T, alpha);
          if (!(glue_matrix(matrix_fast(cut.rest), T.d()) == M))
            report(CheckId::Glue, "block gluing onto the cut matrix differs");
        }
      }
    }
    if (!(matrix_via_gluing(T) == M))
      report(CheckId::Glue, "gluing recursion differs from fast matrix");
  }

  const bool minors = selected(checks, CheckId::Minors);
  const bool triangle = selected(checks, CheckId::TriangleMinors) && T.d() == 3;
  if (minors || triangle) {
    if (minors) ++rep.cases[CheckId::Minors];
    if (triangle) ++rep.cases[CheckId::TriangleMinors];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Int det = adjacent_minor(M, BoundaryEdge{i}, BoundaryEdge{j});
        auto at = [&] {
          return " at e=(" + std::to_string(i) + ",*) f=(" + std::to_string(j) + ",*)";
        };
        if (minors) {
          if (i == j) {
            if (det != -1) report(CheckId::Minors, "diagonal minor != -1" + at());
            continue;
          }
          if (det != 0 && det != 1) {
            report(CheckId::Minors, "minor " + det.get_str() + " outside {0,1}" + at());
            continue;
          }
          auto w = hinge_sequence(T, BoundaryEdge{i}, BoundaryEdge{j});
          if (w.has_value() != (det == 1))
            report(CheckId::Minors, "hinge witness existence != (minor == 1)" + at());
          if (w) {
            if (!check_witness(T, *w, BoundaryEdge{i}, BoundaryEdge{j}))
              report(CheckId::Minors, "returned witness invalid" + at());
            if (w->s() > T.m() + 1)
              report(CheckId::Minors, "witness longer than m+1 faces" + at());
          }
        }
        if (triangle && i != j && det != 1)
          report(CheckId::TriangleMinors, "off-diagonal minor != 1" + at());
      }
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport out;
  out.options = options;
  const std::vector<CheckId> checks =
      options.checks.empty() ? all_checks() : options.checks;
  for (CheckId c : checks) out.cases[c] = 0;

  std::vector<Family> families;
  for (int d = std::max(3, options.d_min); d <= options.d_max; ++d)
    for (int n = d; n <= options.n_max; n += d - 2)
      families.push_back({n, d, enumerate_dangulations(n, d)});

  std::vector<std::pair<int, size_t>> items;  // (family, index)
  for (size_t f = 0; f < families.size(); ++f)
    for (size_t i = 0; i < families[f].enumerator.size(); ++i)
      items.push_back({static_cast<int>(f), i});

  const int jobs = std::max(1, options.jobs);
  std::vector<LocalReport> locals(jobs);
  std::atomic<size_t> cursor{0};

  auto worker = [&](LocalReport& rep) {
    for (;;) {
      size_t at = cursor.fetch_add(1);
      if (at >= items.size()) return;
      auto [f, i] = items[at];
      check_one(families[f].enumerator.at(i), options, checks,
                static_cast<long long>(at), rep);
    }
  };

  if (jobs == 1) {
    worker(locals[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, std::ref(locals[t]));
    for (auto& th : pool) th.join();
  }

  std::vector<Keyed> merged;
  for (LocalReport& rep : locals) {
    for (auto& [c, k] : rep.cases) out.cases[c] += k;
    merged.insert(merged.end(), std::make_move_iterator(rep.failures.begin()),
                  std::make_move_iterator(rep.failures.end()));
  }
  std::sort(merged.begin(), merged.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.failure.check < b.failure.check;
  });
  for (Keyed& k : merged) out.failures.push_back(std::move(k.failure));
  return out;
}

}  // namespace gfrieze
