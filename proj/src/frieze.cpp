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

#include "gfrieze/frieze.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfrieze {

namespace {

Diagonal edge_pair(const BoundaryEdge& e, int n) {
  int u = reduce_label(e.i, n), v = reduce_label(e.i + 1, n);
  if (u > v) std::swap(u, v);
  return {u, v};
}

bool face_has_edge(const Face& f, const Diagonal& z) {
  for (int p = 0; p < f.size(); ++p) {
    int u = f.vertices[p], v = f.vertices[(p + 1) % f.size()];
    if (u > v) std::swap(u, v);
    if (Diagonal{u, v} == z) return true;
  }
  return false;
}

bool share_vertex(const Diagonal& a, const Diagonal& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

// Unique face path in the dual tree from face `from` to face `to`.
std::vector<int> dual_tree_path(const DAngulation& T, int from, int to) {
  std::vector<int> parent(T.faces().size(), -2);
  std::vector<int> queue{from};
  parent[from] = -1;
  for (size_t q = 0; q < queue.size() && parent[to] == -2; ++q)
    for (auto [g, idx] : T.dual_neighbors(queue[q]))
      if (parent[g] == -2) {
        parent[g] = queue[q];
        queue.push_back(g);
      }
  std::vector<int> path;
  for (int f = to; f != -1; f = parent[f]) path.push_back(f);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

FriezePattern::FriezePattern(DAngulation T)
    : T_(std::move(T)), M_(matrix_fast(T_)) {}

FriezePattern::FriezePattern(DAngulation T, PathMatrix M)
    : T_(std::move(T)), M_(std::move(M)) {}

const Int& FriezePattern::entry(long long i, long long j) const {
  if (j < i || j > i + n())
    throw std::out_of_range("frieze entry needs i <= j <= i+n");
  return M_.count(i, j);
}

Int adjacent_minor(const PathMatrix& M, BoundaryEdge e, BoundaryEdge f) {
  const long long i = e.i, j = f.i;
  return M.count(i, j) * M.count(i + 1, j + 1) -
         M.count(i, j + 1) * M.count(i + 1, j);
}

Int adjacent_minor(const DAngulation& T, BoundaryEdge e, BoundaryEdge f) {
  return adjacent_minor(matrix_fast(T), e, f);
}

std::optional<HingeWitness> hinge_sequence(const DAngulation& T,
                                           BoundaryEdge e, BoundaryEdge f) {
  const int n = T.n();
  const int ei = reduce_label(e.i, n), fi = reduce_label(f.i, n);
  if (ei == fi) fail(Errc::SameEdge, "need two distinct boundary edges");

  const std::vector<int> faces =
      dual_tree_path(T, T.boundary_edge_face(ei), T.boundary_edge_face(fi));

  HingeWitness w;
  w.faces = faces;
  w.edges.push_back(edge_pair(BoundaryEdge{ei}, n));
  for (size_t k = 0; k + 1 < faces.size(); ++k) {
    for (auto [g, idx] : T.dual_neighbors(faces[k]))
      if (g == faces[k + 1]) w.edges.push_back(T.diagonal(idx));
  }
  w.edges.push_back(edge_pair(BoundaryEdge{fi}, n));

  for (size_t k = 0; k + 1 < w.edges.size(); ++k)
    if (!share_vertex(w.edges[k], w.edges[k + 1])) return std::nullopt;
  return w;
}

bool check_witness(const DAngulation& T, const HingeWitness& w,
                   BoundaryEdge e, BoundaryEdge f) {
  const int n = T.n();
  if (w.edges.size() != w.faces.size() + 1 || w.faces.empty()) return false;
  if (w.edges.front() != edge_pair(e, n)) return false;
  if (w.edges.back() != edge_pair(f, n)) return false;
  for (size_t k = 1; k + 1 < w.edges.size(); ++k)
    if (!T.has_diagonal(w.edges[k].first, w.edges[k].second)) return false;
  for (size_t k = 0; k < w.faces.size(); ++k) {
    if (w.faces[k] < 0 || w.faces[k] >= static_cast<int>(T.faces().size()))
      return false;
    const Face& p = T.face(w.faces[k]);
    if (!face_has_edge(p, w.edges[k]) || !face_has_edge(p, w.edges[k + 1]))
      return false;  // (i)
    if (!share_vertex(w.edges[k], w.edges[k + 1])) return false;  // (iii)
  }
  std::vector<int> sorted = w.faces;  // (ii)
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

MinorClassification classify_minors(const DAngulation& T,
                                    const PathMatrix& M) {
  const int n = T.n();
  MinorClassification out;
  out.n = n;
  out.table.assign(n, std::vector<int>(n, 0));
  out.witnesses.assign(n, std::vector<std::optional<HingeWitness>>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Int det = adjacent_minor(M, BoundaryEdge{i}, BoundaryEdge{j});
      if (i == j) {
        if (det != -1) throw std::logic_error("adjacent minor at e = f is not -1");
        out.table[i - 1][j - 1] = -1;
        continue;
      }
      if (det != 0 && det != 1)
        throw std::logic_error("adjacent minor outside {0, 1}: " + det.get_str());
      out.table[i - 1][j - 1] = static_cast<int>(det.get_si());
      auto w = hinge_sequence(T, BoundaryEdge{i}, BoundaryEdge{j});
      if (w.has_value() != (det == 1))
        throw std::logic_error("hinge witness existence disagrees with minor");
      out.witnesses[i - 1][j - 1] = std::move(w);
    }
  return out;
}

MinorClassification classify_minors(const DAngulation& T) {
  return classify_minors(T, matrix_fast(T));
}

std::string render_frieze(const DAngulation& T, int columns) {
  if (columns < 1) fail(Errc::DimensionMismatch, "need columns >= 1");
  const FriezePattern P(T);
  const int n = P.n();

  // Row k holds entry(i, i+k) at staggered positions x = 2i + k; rendering
  // the window 0 <= x - (k mod 2) < 2*columns lines consecutive rows up with
  // alternating half-step offsets, as in a diamond-ruled pattern.
  std::vector<std::vector<Int>> rows(n - 1);
  size_t width = 1;
  for (int k = 1; k <= n - 1; ++k) {
    for (int t = 0; t < columns; ++t) {
      long long x = (k % 2) + 2LL * t;
      long long i = (x - k) / 2;  // x == k (mod 2), so this is exact
      rows[k - 1].push_back(P.entry(i, i + k));
      width = std::max(width, rows[k - 1].back().get_str().size());
    }
  }
  const size_t half = width + 1;
  std::ostringstream out;
  for (int k = 1; k <= n - 1; ++k) {
    std::string line;
    for (int t = 0; t < columns; ++t) {
      const std::string s = rows[k - 1][t].get_str();
      size_t col = (static_cast<size_t>(k % 2) + 2 * t) * half + (width - s.size());
      if (line.size() < col) line.resize(col, ' ');
      line += s;
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace gfrieze
