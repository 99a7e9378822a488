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

#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracles {

using gfrieze::DAngulation;
using gfrieze::Diagonal;
using gfrieze::Int;
using gfrieze::IntMatrix;

Int cofactor_determinant(const IntMatrix& A) {
  const int k = A.rows();
  if (k == 0) return 1;
  if (k == 1) return A(0, 0);
  Int det = 0;
  for (int c = 0; c < k; ++c) {
    if (A(0, c) == 0) continue;
    IntMatrix sub(k - 1, k - 1);
    for (int r = 1; r < k; ++r)
      for (int cc = 0, sc = 0; cc < k; ++cc)
        if (cc != c) sub(r - 1, sc++) = A(r, cc);
    Int term = A(0, c) * cofactor_determinant(sub);
    det += (c % 2 == 0) ? term : Int(-term);
  }
  return det;
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == k) {
      emit(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Int> gcd_of_minors_divisors(const IntMatrix& A) {
  const int k = std::min(A.rows(), A.cols());
  std::vector<Int> gcds(k + 1);
  gcds[0] = 1;
  for (int size = 1; size <= k; ++size) {
    Int g = 0;
    combinations(A.rows(), size, [&](const std::vector<int>& rows) {
      combinations(A.cols(), size, [&](const std::vector<int>& cols) {
        IntMatrix sub(size, size);
        for (int r = 0; r < size; ++r)
          for (int c = 0; c < size; ++c) sub(r, c) = A(rows[r], cols[c]);
        g = gcd(g, cofactor_determinant(sub));
      });
    });
    gcds[size] = abs(g);
  }
  std::vector<Int> div(k);
  for (int i = 1; i <= k; ++i)
    div[i - 1] = gcds[i] == 0 ? Int(0) : Int(gcds[i] / gcds[i - 1]);
  return div;
}

namespace {

bool chords_cross(const Diagonal& a, const Diagonal& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

// Face sizes of a non-crossing chord set via the nesting forest: each face
// is cut out by one chord (or the boundary) minus the spans of its maximal
// nested chords.
bool all_faces_are_dgons(int n, int d, const std::vector<Diagonal>& chords) {
  auto contains = [](const Diagonal& a, const Diagonal& b) {
    return a != b && a.first <= b.first && b.second <= a.second;
  };
  auto maximal_inside = [&](const Diagonal& outer, const Diagonal& c) {
    if (!contains(outer, c)) return false;
    for (const Diagonal& mid : chords)
      if (contains(outer, mid) && contains(mid, c)) return false;
    return true;
  };
  for (const Diagonal& outer : chords) {
    int size = outer.second - outer.first + 1;
    for (const Diagonal& c : chords)
      if (maximal_inside(outer, c)) size -= c.second - c.first - 1;
    if (size != d) return false;
  }
  int root = n;
  for (const Diagonal& c : chords) {
    bool top = true;
    for (const Diagonal& other : chords)
      if (contains(other, c)) top = false;
    if (top) root -= c.second - c.first - 1;
  }
  return root == d;
}

}  // namespace

long long count_dangulations_by_filter(int n, int d) {
  const int m = (n - d) / (d - 2);
  std::vector<Diagonal> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 2; v <= n; ++v)
      if (!(u == 1 && v == n)) all.push_back({u, v});

  long long count = 0;
  std::vector<Diagonal> chosen;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(chosen.size()) == m) {
      if (all_faces_are_dgons(n, d, chosen)) ++count;
      return;
    }
    for (size_t i = start; i < all.size(); ++i) {
      bool crossing = false;
      for (const Diagonal& c : chosen)
        if (chords_cross(c, all[i])) crossing = true;
      if (crossing) continue;
      chosen.push_back(all[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return count;
}

std::vector<Int> triangle_counts(const DAngulation& T) {
  std::vector<Int> counts;
  for (int v = 1; v <= T.n(); ++v)
    counts.push_back(static_cast<long>(T.faces_at(v).size()));
  return counts;
}

long long count_hinge_witnesses_bruteforce(const DAngulation& T, int e, int f) {
  const int n = T.n();
  auto edge_pair = [&](int i) {
    int u = gfrieze::reduce_label(i, n), v = gfrieze::reduce_label(i + 1, n);
    return Diagonal{std::min(u, v), std::max(u, v)};
  };
  auto share_vertex = [](const Diagonal& a, const Diagonal& b) {
    return a.first == b.first || a.first == b.second || a.second == b.first ||
           a.second == b.second;
  };
  auto face_edges = [&](int fid) {
    std::vector<Diagonal> edges;
    const gfrieze::Face& face = T.face(fid);
    for (int p = 0; p < face.size(); ++p) {
      int u = face.vertices[p], v = face.vertices[(p + 1) % face.size()];
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return edges;
  };

  const Diagonal target = edge_pair(f);
  long long found = 0;
  std::vector<char> used(T.faces().size(), 0);

  // Try every continuation: any unused face containing the current edge,
  // any of its edges sharing a vertex with it. Interior steps must be
  // diagonals; reaching the target edge completes a witness.
  std::function<void(const Diagonal&)> rec = [&](const Diagonal& z) {
    for (size_t fid = 0; fid < T.faces().size(); ++fid) {
      if (used[fid]) continue;
      auto edges = face_edges(static_cast<int>(fid));
      if (std::find(edges.begin(), edges.end(), z) == edges.end()) continue;
      for (const Diagonal& w : edges) {
        if (!share_vertex(z, w)) continue;
        if (w == target) {
          ++found;
          continue;
        }
        if (!T.has_diagonal(w.first, w.second)) continue;
        used[fid] = 1;
        rec(w);
        used[fid] = 0;
      }
    }
  };
  rec(edge_pair(e));
  return found;
}

}  // namespace oracles
