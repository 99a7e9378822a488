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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 parse/validation error, 3 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gfrieze/exactla.hpp"
#include "gfrieze/frieze.hpp"
#include "gfrieze/matrix.hpp"
#include "gfrieze/paths.hpp"
#include "gfrieze/polygon.hpp"
#include "gfrieze/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace gfrieze;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 3;

constexpr int kDefaultBruteCap = 14;

DAngulation load_input(const std::string& path) {
  if (path == "-") return parse_dangulation(std::cin);
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_dangulation(in);
}

json diagonals_json(const DAngulation& T) {
  json out = json::array();
  for (const Diagonal& t : T.diagonals()) out.push_back({t.first, t.second});
  return out;
}

json entries_json(const IntMatrix& M) {
  json rows = json::array();
  for (int r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string exponent_form(const std::vector<Int>& divisors) {
  std::string out;
  for (size_t i = 0; i < divisors.size();) {
    size_t j = i;
    while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
    if (!out.empty()) out += ' ';
    out += divisors[i].get_str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

json witness_json(const HingeWitness& w) {
  json edges = json::array();
  for (const Diagonal& z : w.edges) edges.push_back({z.first, z.second});
  return json{{"s", w.s()}, {"edges", edges}, {"faces", w.faces}};
}

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string method = "fast";
  bool unsafe_brute = false;
  int columns = 0;
  int edge_e = 0, edge_f = 0;
  int en_n = 0, en_d = 0;
  bool count_only = false;
  VerifyOptions verify;
  std::string checks_arg;
};

int run_validate(const Options& opt) {
  DAngulation T = load_input(opt.input);
  if (opt.format == "structured") {
    json faces = json::array();
    for (const Face& f : T.faces())
      faces.push_back({{"id", f.id}, {"vertices", f.vertices}});
    json out{{"n", T.n()},
             {"d", T.d()},
             {"m", T.m()},
             {"diagonals", diagonals_json(T)},
             {"faces", faces}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n=" << T.n() << " d=" << T.d() << " m=" << T.m() << ", "
              << T.faces().size() << " faces\n";
  }
  return kExitOk;
}

int run_matrix(const Options& opt) {
  DAngulation T = load_input(opt.input);
  PathMatrix M;
  if (opt.method == "fast") {
    M = matrix_fast(T);
  } else if (opt.method == "brute") {
    if (T.n() > kDefaultBruteCap && !opt.unsafe_brute)
      fail(Errc::SizeLimit, "brute-force counting capped at n <= " +
                                std::to_string(kDefaultBruteCap) +
                                "; pass --unsafe-brute to override");
    M = matrix_bruteforce(T);
  } else {
    M = matrix_via_gluing(T);
  }
  if (opt.format == "structured") {
    json out{{"n", T.n()},
             {"d", T.d()},
             {"diagonals", diagonals_json(T)},
             {"entries", entries_json(M.entries)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << matrix_to_text(M.entries);
  }
  return kExitOk;
}

int run_invariants(const Options& opt) {
  DAngulation T = load_input(opt.input);
  DivisorTheoremReport rep = verify_divisor_theorem(T);
  if (opt.format == "structured") {
    json div = json::array(), ediv = json::array();
    for (const Int& v : rep.divisors_actual) div.push_back(v.get_str());
    for (const Int& v : rep.divisors_expected) ediv.push_back(v.get_str());
    json out{{"n", rep.n},
             {"d", rep.d},
             {"m", rep.m},
             {"determinant", rep.det_actual.get_str()},
             {"expected_determinant", rep.det_expected.get_str()},
             {"divisors", div},
             {"expected_divisors", ediv},
             {"pass", rep.pass}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n=" << rep.n << " d=" << rep.d << " m=" << rep.m << '\n'
              << "determinant: " << rep.det_actual.get_str() << '\n'
              << "expected:    " << rep.det_expected.get_str() << '\n'
              << "divisors: " << exponent_form(rep.divisors_actual) << '\n'
              << "expected: " << exponent_form(rep.divisors_expected) << '\n'
              << (rep.pass ? "PASS" : "FAIL") << '\n';
  }
  return rep.pass ? kExitOk : kExitVerifyFailure;
}

int run_frieze(const Options& opt) {
  DAngulation T = load_input(opt.input);
  int columns = opt.columns > 0 ? opt.columns : 2 * T.n();
  if (opt.format == "structured") {
    FriezePattern P(T);
    json rows = json::array();
    for (int k = 1; k <= T.n() - 1; ++k) {
      json row = json::array();
      for (int t = 0; t < columns; ++t) {
        long long x = (k % 2) + 2LL * t;
        long long i = (x - k) / 2;
        row.push_back(P.entry(i, i + k).get_str());
      }
      rows.push_back(std::move(row));
    }
    json out{{"n", T.n()}, {"columns", columns}, {"rows", rows}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << render_frieze(T, columns);
  }
  return kExitOk;
}

int run_minors(const Options& opt) {
  DAngulation T = load_input(opt.input);
  MinorClassification cls = classify_minors(T);
  if (opt.format == "structured") {
    json witnesses = json::array();
    for (int i = 1; i <= cls.n; ++i)
      for (int j = 1; j <= cls.n; ++j)
        if (cls.witnesses[i - 1][j - 1])
          witnesses.push_back(
              {{"e", i},
               {"f", j},
               {"witness", witness_json(*cls.witnesses[i - 1][j - 1])}});
    json out{{"n", cls.n}, {"table", cls.table}, {"witnesses", witnesses}};
    std::cout << out.dump(2) << '\n';
  } else {
    for (int i = 0; i < cls.n; ++i) {
      for (int j = 0; j < cls.n; ++j) {
        if (j) std::cout << ' ';
        std::cout << cls.table[i][j];
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int run_hinge(const Options& opt) {
  DAngulation T = load_input(opt.input);
  BoundaryEdge e{opt.edge_e}, f{opt.edge_f};
  Int det = adjacent_minor(T, e, f);
  auto w = hinge_sequence(T, e, f);  // throws SameEdge when e = f
  if (opt.format == "structured") {
    json out{{"e", reduce_label(e.i, T.n())},
             {"f", reduce_label(f.i, T.n())},
             {"minor", det.get_str()},
             {"witness", w ? witness_json(*w) : json(nullptr)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "minor: " << det.get_str() << '\n';
    if (w) {
      std::cout << "witness s=" << w->s() << '\n' << "edges:";
      for (const Diagonal& z : w->edges)
        std::cout << " (" << z.first << "," << z.second << ")";
      std::cout << '\n' << "faces:";
      for (int fid : w->faces) std::cout << ' ' << fid;
      std::cout << '\n';
    } else {
      std::cout << "no witness\n";
    }
  }
  return kExitOk;
}

int run_enumerate(const Options& opt) {
  DAngulationEnumerator en(opt.en_n, opt.en_d);
  if (opt.format == "structured") {
    json out{{"n", opt.en_n}, {"d", opt.en_d}, {"count", en.size()}};
    if (!opt.count_only) {
      json sets = json::array();
      for (const auto& set : en.diagonal_sets()) {
        json one = json::array();
        for (const Diagonal& t : set) one.push_back({t.first, t.second});
        sets.push_back(std::move(one));
      }
      out["dangulations"] = std::move(sets);
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  if (opt.count_only) {
    std::cout << en.size() << '\n';
    return kExitOk;
  }
  for (const auto& set : en.diagonal_sets()) {
    for (size_t i = 0; i < set.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << set[i].first << '-' << set[i].second;
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int run_verify(Options& opt) {
  if (!opt.checks_arg.empty()) {
    std::stringstream ss(opt.checks_arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto c = check_from_name(name);
      if (!c) {
        std::cerr << "unknown check '" << name << "'\n";
        return kExitUsage;
      }
      opt.verify.checks.push_back(*c);
    }
  }
  VerifyReport rep = run_verification(opt.verify);
  if (opt.format == "structured") {
    json cases = json::object();
    for (const auto& [c, k] : rep.cases) cases[std::string(check_name(c))] = k;
    json failures = json::array();
    for (const VerifyFailure& f : rep.failures) {
      json diag = json::array();
      for (const Diagonal& t : f.diagonals) diag.push_back({t.first, t.second});
      failures.push_back({{"n", f.n},
                          {"d", f.d},
                          {"diagonals", diag},
                          {"check", std::string(check_name(f.check))},
                          {"detail", f.detail}});
    }
    json out{{"d_min", rep.options.d_min},
             {"d_max", rep.options.d_max},
             {"n_max", rep.options.n_max},
             {"brute_n_max", rep.options.brute_n_max},
             {"cases", cases},
             {"failures", failures},
             {"ok", rep.ok()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "verify: d=" << rep.options.d_min << ".." << rep.options.d_max
              << " n<=" << rep.options.n_max
              << " brute-n<=" << rep.options.brute_n_max
              << " jobs=" << rep.options.jobs << '\n';
    for (const auto& [c, k] : rep.cases)
      std::cout << "  " << check_name(c) << ": " << k << " cases\n";
    for (const VerifyFailure& f : rep.failures) {
      std::cout << "FAIL [" << check_name(f.check) << "] n=" << f.n
                << " d=" << f.d << " diagonals";
      for (const Diagonal& t : f.diagonals)
        std::cout << " (" << t.first << "," << t.second << ")";
      std::cout << ": " << f.detail << '\n';
    }
    std::cout << (rep.ok() ? "OK"
                           : "FAILURES: " + std::to_string(rep.failures.size()))
              << " (" << rep.total_cases() << " case runs)\n";
  }
  return rep.ok() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized frieze patterns from polygon d-angulations"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Input file, or - for stdin");
  };

  int rc = kExitOk;

  CLI::App* validate = app.add_subcommand(
      "validate", "Parse and validate a d-angulation, print a summary");
  add_input(validate);
  add_format(validate);
  validate->callback([&] { rc = run_validate(opt); });

  CLI::App* matrix = app.add_subcommand(
      "matrix", "Print the path-count matrix of a d-angulation");
  add_input(matrix);
  add_format(matrix);
  matrix->add_option("--method", opt.method, "Computation route")
      ->check(CLI::IsMember({"fast", "brute", "glue"}));
  matrix->add_flag("--unsafe-brute", opt.unsafe_brute,
                   "Lift the n cap on the brute-force method");
  matrix->callback([&] { rc = run_matrix(opt); });

  CLI::App* invariants = app.add_subcommand(
      "invariants",
      "Determinant and elementary divisors, checked against the closed forms");
  add_input(invariants);
  add_format(invariants);
  invariants->callback([&] { rc = run_invariants(opt); });

  CLI::App* frieze = app.add_subcommand("frieze", "Render the frieze pattern");
  add_input(frieze);
  add_format(frieze);
  frieze->add_option("--columns", opt.columns, "Entries per row (default 2n)");
  frieze->callback([&] { rc = run_frieze(opt); });

  CLI::App* minors = app.add_subcommand(
      "minors", "Adjacent 2x2 minors over all boundary-edge pairs");
  add_input(minors);
  add_format(minors);
  minors->callback([&] { rc = run_minors(opt); });

  CLI::App* hinge =
      app.add_subcommand("hinge", "Hinge witness between two boundary edges");
  add_input(hinge);
  add_format(hinge);
  hinge->add_option("-e", opt.edge_e, "First boundary edge (i, i+1), given i")
      ->required();
  hinge->add_option("-f", opt.edge_f, "Second boundary edge (j, j+1), given j")
      ->required();
  hinge->callback([&] { rc = run_hinge(opt); });

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List all d-angulations of the n-gon");
  add_format(enumerate);
  enumerate->add_option("-n", opt.en_n, "Vertex count")->required();
  enumerate->add_option("-d", opt.en_d, "Face size")->required();
  enumerate->add_flag("--count-only", opt.count_only, "Print only the count");
  enumerate->callback([&] { rc = run_enumerate(opt); });

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Exhaustively check the structure theorems on all d-angulations in range");
  add_format(verify);
  verify->add_option("--dmin", opt.verify.d_min, "Smallest face size");
  verify->add_option("--dmax", opt.verify.d_max, "Largest face size");
  verify->add_option("--nmax", opt.verify.n_max, "Largest polygon");
  verify->add_option("--brute-nmax", opt.verify.brute_n_max,
                     "Cap for the path-enumeration checks");
  verify->add_option("--jobs", opt.verify.jobs, "Worker threads");
  verify->add_option("--checks", opt.checks_arg,
                     "Comma-separated subset of: symmetry,oracle,direction,"
                     "divisors,glue,minors,triangle-minors");
  verify->callback([&] { rc = run_verify(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_rc = app.exit(e);
    return cli_rc == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return rc;
}
