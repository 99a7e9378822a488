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

#include "gfrieze/intmatrix.hpp"

#include <sstream>

namespace gfrieze {

Int div_exact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(Errc::DimensionMismatch, "negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int k) {
  IntMatrix E(k, k);
  for (int i = 0; i < k; ++i) E(i, i) = 1;
  return E;
}

std::string matrix_to_text(const IntMatrix& A) {
  std::ostringstream out;
  for (int r = 0; r < A.rows(); ++r) {
    for (int c = 0; c < A.cols(); ++c) {
      if (c) out << ' ';
      out << A(r, c).get_str();
    }
    out << '\n';
  }
  return out.str();
}

IntMatrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        fail(Errc::ParseError, "bad matrix entry '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::ParseError, "empty matrix");
  const size_t cols = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != cols) fail(Errc::ParseError, "ragged matrix rows");
  IntMatrix A(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) A(r, c) = std::move(rows[r][c]);
  return A;
}

}  // namespace gfrieze
