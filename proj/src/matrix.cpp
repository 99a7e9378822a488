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

#include "gfrieze/matrix.hpp"

#include <string>

namespace gfrieze {

bool PathMatrix::is_symmetric() const {
  for (int r = 0; r < n(); ++r)
    for (int c = r + 1; c < n(); ++c)
      if (entries(r, c) != entries(c, r)) return false;
  return true;
}

PathMatrix matrix_fast(const DAngulation& T) {
  const int n = T.n();
  IntMatrix M(n, n);
  std::vector<Int> val(n + 1);
  std::vector<char> assigned(n + 1);
  std::vector<char> done(T.faces().size());
  std::vector<int> queue;
  queue.reserve(T.faces().size());

  for (int i = 1; i <= n; ++i) {
    std::fill(assigned.begin(), assigned.end(), 0);
    std::fill(done.begin(), done.end(), 0);
    queue.clear();

    val[i] = 0;
    assigned[i] = 1;
    for (int fid : T.faces_at(i)) {
      for (int v : T.face(fid).vertices) {
        if (!assigned[v]) {
          val[v] = 1;
          assigned[v] = 1;
        }
      }
      done[fid] = 1;
      queue.push_back(fid);
    }
    for (size_t q = 0; q < queue.size(); ++q) {
      for (auto [g, idx] : T.dual_neighbors(queue[q])) {
        if (done[g]) continue;
        const Diagonal& t = T.diagonal(idx);
        Int sum = val[t.first] + val[t.second];
        for (int v : T.face(g).vertices)
          if (!assigned[v]) {
            val[v] = sum;
            assigned[v] = 1;
          }
        done[g] = 1;
        queue.push_back(g);
      }
    }
    for (int j = 1; j <= n; ++j) M(i - 1, j - 1) = val[j];
  }
  return PathMatrix{std::move(M)};
}

PathMatrix glue_matrix(const PathMatrix& Mprime, int d) {
  const int n = Mprime.entries.rows();
  if (n != Mprime.entries.cols())
    fail(Errc::DimensionMismatch, "matrix is not square");
  if (d < 3) fail(Errc::DimensionMismatch, "need d >= 3");
  if (n < d || (n - d) % (d - 2) != 0)
    fail(Errc::DimensionMismatch,
         "a " + std::to_string(n) + "-gon admits no " + std::to_string(d) +
             "-angulation to glue onto");

  const int N = n + d - 2;
  IntMatrix M(N, N);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) M(r, c) = Mprime.entries(r, c);
  for (int r = 0; r < n; ++r) {
    Int ri = Mprime.entries(r, 0) + Mprime.entries(r, n - 1);
    for (int c = n; c < N; ++c) {
      M(r, c) = ri;
      M(c, r) = ri;
    }
  }
  for (int r = n; r < N; ++r)
    for (int c = n; c < N; ++c) M(r, c) = (r == c) ? 0 : 1;
  return PathMatrix{std::move(M)};
}

PathMatrix matrix_via_gluing(const DAngulation& T) {
  const int N = T.n();
  const int d = T.d();
  if (T.m() == 0) {
    IntMatrix M(N, N);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) M(r, c) = (r == c) ? 0 : 1;
    return PathMatrix{std::move(M)};
  }

  const Face alpha = boundary_faces(T).front();
  // Locate the diagonal as a directed edge (v_p, v_{p+1}) of the face cycle;
  // the vertices v_{p+2}..v_{p+d-1} are then consecutive boundary labels.
  int p = -1;
  for (int q = 0; q < alpha.size(); ++q) {
    int u = alpha.vertices[q], v = alpha.vertices[(q + 1) % alpha.size()];
    int lo = std::min(u, v), hi = std::max(u, v);
    if (!T.is_boundary_edge(lo, hi)) p = q;
  }
  const int start = alpha.vertices[(p + 1) % alpha.size()];
  const int nprime = N - d + 2;
  const int shift = nprime - start;  // maps start -> nprime, cut face -> {1, nprime..N}

  DAngulation rotated = rotate_labels(T, shift);
  std::vector<Diagonal> rest;
  for (const Diagonal& t : rotated.diagonals())
    if (t != Diagonal{1, nprime}) rest.push_back(t);
  DAngulation Tprime = build_dangulation(nprime, d, std::move(rest));

  PathMatrix rotated_M = glue_matrix(matrix_via_gluing(Tprime), d);
  IntMatrix M(N, N);
  for (int x = 1; x <= N; ++x)
    for (int y = 1; y <= N; ++y)
      M(x - 1, y - 1) = rotated_M.count(reduce_label(x + shift, N),
                                        reduce_label(y + shift, N));
  return PathMatrix{std::move(M)};
}

std::vector<Int> quiddity_row(const DAngulation& T, const PathMatrix& M) {
  std::vector<Int> row;
  row.reserve(T.n());
  for (int i = 1; i <= T.n(); ++i) row.push_back(M.count(i - 1, i + 1));
  return row;
}

std::vector<Int> quiddity_row(const DAngulation& T) {
  return quiddity_row(T, matrix_fast(T));
}

}  // namespace gfrieze
