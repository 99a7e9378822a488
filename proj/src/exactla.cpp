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

#include "gfrieze/exactla.hpp"

#include <algorithm>
#include <utility>

namespace gfrieze {

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) fail(Errc::NotSquare, "determinant of non-square matrix");
  const int k = A.rows();
  if (k == 0) return 1;

  IntMatrix B = A;
  int sign = 1;
  Int prev = 1;
  for (int p = 0; p + 1 < k; ++p) {
    if (B(p, p) == 0) {
      int r = p + 1;
      while (r < k && B(r, p) == 0) ++r;
      if (r == k) return 0;
      for (int c = p; c < k; ++c) std::swap(B(p, c), B(r, c));
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j)
        B(i, j) = div_exact(B(i, j) * B(p, p) - B(i, p) * B(p, j), prev);
      B(i, p) = 0;
    }
    prev = B(p, p);
  }
  return sign > 0 ? B(k - 1, k - 1) : Int(-B(k - 1, k - 1));
}

namespace {

void swap_rows(IntMatrix& B, int a, int b) {
  for (int c = 0; c < B.cols(); ++c) std::swap(B(a, c), B(b, c));
}

void swap_cols(IntMatrix& B, int a, int b) {
  for (int r = 0; r < B.rows(); ++r) std::swap(B(r, a), B(r, b));
}

// Pivot position with minimal nonzero |entry| in the trailing submatrix,
// or (-1, -1) when that submatrix is zero.
std::pair<int, int> min_abs_pivot(const IntMatrix& B, int t) {
  std::pair<int, int> best{-1, -1};
  Int best_abs;
  for (int r = t; r < B.rows(); ++r)
    for (int c = t; c < B.cols(); ++c) {
      if (B(r, c) == 0) continue;
      Int a = abs(B(r, c));
      if (best.first < 0 || a < best_abs) {
        best = {r, c};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  IntMatrix B = A;
  const int R = B.rows(), C = B.cols();
  const int k = std::min(R, C);
  SmithDecomposition out;
  out.divisors.assign(k, Int(0));
  if (R == C) out.determinant = determinant(A);

  for (int t = 0; t < k; ++t) {
    auto pos = min_abs_pivot(B, t);
    if (pos.first < 0) break;  // trailing submatrix zero: divisors stay 0
    if (pos.first != t) swap_rows(B, t, pos.first);
    if (pos.second != t) swap_cols(B, t, pos.second);

    for (;;) {
      // Euclidean clearing of column t and row t. Swaps pull smaller
      // remainders into the pivot, so |B(t,t)| strictly shrinks.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (int i = t + 1; i < R; ++i)
          while (B(i, t) != 0) {
            Int q = B(i, t) / B(t, t);
            for (int c = t; c < C; ++c) B(i, c) -= q * B(t, c);
            if (B(i, t) != 0) swap_rows(B, i, t);
          }
        for (int j = t + 1; j < C; ++j)
          while (B(t, j) != 0) {
            Int q = B(t, j) / B(t, t);
            for (int r = t; r < R; ++r) B(r, j) -= q * B(r, t);
            if (B(t, j) != 0) swap_cols(B, j, t);
          }
        for (int i = t + 1; i < R && !dirty; ++i)
          if (B(i, t) != 0) dirty = true;
      }
      // Divisibility repair: the pivot must divide the whole submatrix.
      int vi = -1;
      for (int i = t + 1; i < R && vi < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (B(i, j) % B(t, t) != 0) {
            vi = i;
            break;
          }
      if (vi < 0) break;
      for (int c = t; c < C; ++c) B(t, c) += B(vi, c);
    }
    out.divisors[t] = abs(B(t, t));
  }
  return out;
}

IntMatrix special_matrix(SpecialKind kind, int d) {
  if (d < 1) fail(Errc::DimensionMismatch, "need d >= 1");
  IntMatrix M(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      M(r, c) = (kind == SpecialKind::Md) ? Int(r == c ? 0 : 1)
                                          : Int(r == c ? -2 : -1);
  return M;
}

Int expected_determinant(int n, int d, int m) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d - 1),
                static_cast<unsigned long>(m + 1));
  return (n - 1) % 2 == 0 ? p : Int(-p);
}

std::vector<Int> expected_divisors(int n, int d, int m) {
  std::vector<Int> div(n, Int(1));
  for (int i = n - m - 1; i < n; ++i) div[i] = d - 1;
  return div;
}

DivisorTheoremReport verify_divisor_theorem(const DAngulation& T,
                                            const PathMatrix& M) {
  DivisorTheoremReport rep;
  rep.n = T.n();
  rep.d = T.d();
  rep.m = T.m();
  SmithDecomposition snf = smith_normal_form(M.entries);
  rep.det_actual = snf.determinant;
  rep.divisors_actual = snf.divisors;
  rep.det_expected = expected_determinant(rep.n, rep.d, rep.m);
  rep.divisors_expected = expected_divisors(rep.n, rep.d, rep.m);
  rep.pass = rep.det_actual == rep.det_expected &&
             rep.divisors_actual == rep.divisors_expected;
  return rep;
}

DivisorTheoremReport verify_divisor_theorem(const DAngulation& T) {
  return verify_divisor_theorem(T, matrix_fast(T));
}

}  // namespace gfrieze
