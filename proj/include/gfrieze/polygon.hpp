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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gfrieze/error.hpp"
#include "gfrieze/intmatrix.hpp"

namespace gfrieze {

/// Chord of the polygon, endpoints normalized so first < second.
using Diagonal = std::pair<int, int>;

/// Reduce any integer into the vertex label range 1..n.
inline int reduce_label(long long x, int n) {
  long long r = (x - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

/// One d-gon of a dissection. Vertices are listed in counterclockwise order
/// starting from the smallest label; `id` is the face's index in
/// DAngulation::faces().
struct Face {
  std::vector<int> vertices;
  int id = -1;

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const;
  bool operator==(const Face&) const = default;
};

/// Boundary edge (i, i+1) of the labeled n-gon, indices mod n.
struct BoundaryEdge {
  int i = 1;
};

/// A d-angulation of the convex n-gon with vertices labeled 1..n
/// counterclockwise: m non-crossing diagonals dividing it into m+1 d-gons.
/// Immutable after construction; all derived structure (faces, incidences,
/// dual tree) is precomputed and validated by build_dangulation.
class DAngulation {
 public:
  /// Empty placeholder; every usable instance comes from build_dangulation.
  DAngulation() = default;

  int n() const { return n_; }
  int d() const { return d_; }
  int m() const { return m_; }

  /// Sorted lexicographically, endpoints normalized.
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  /// Sorted by canonical vertex list; face ids equal positions here.
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }

  /// Ids of the faces incident to vertex v, ascending.
  const std::vector<int>& faces_at(int v) const { return faces_at_[v]; }

  /// Dual-tree neighbors of a face: (other face id, diagonal index) pairs.
  const std::vector<std::pair<int, int>>& dual_neighbors(int face_id) const {
    return dual_[face_id];
  }
  const Diagonal& diagonal(int index) const { return diagonals_[index]; }

  /// Id of the unique face containing boundary edge (i, i+1).
  int boundary_edge_face(int i) const { return edge_face_[reduce_label(i, n_)]; }

  /// Number of edges of the face that are diagonals of the dissection.
  int diagonal_edge_count(int face_id) const { return diag_edge_count_[face_id]; }

  bool has_diagonal(int u, int v) const { return diagonal_index(u, v) >= 0; }
  int diagonal_index(int u, int v) const;
  bool is_boundary_edge(int u, int v) const;

  bool operator==(const DAngulation& o) const {
    return n_ == o.n_ && d_ == o.d_ && diagonals_ == o.diagonals_;
  }

  friend DAngulation build_dangulation(int n, int d,
                                       std::vector<Diagonal> diagonals);

 private:
  int n_ = 0, d_ = 0, m_ = 0;
  std::vector<Diagonal> diagonals_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> faces_at_;             // index 1..n
  std::vector<std::vector<std::pair<int, int>>> dual_;  // per face
  std::vector<int> edge_face_;                          // index 1..n
  std::vector<int> diag_edge_count_;                    // per face
};

/// Validate (n, d, diagonals) and extract all derived structure.
/// Throws InvalidSize, CrossingDiagonals or NotDAngulation.
DAngulation build_dangulation(int n, int d, std::vector<Diagonal> diagonals);

/// Faces with at most one diagonal edge, in face-id order. Nonempty for any
/// valid input; has at least two elements whenever m >= 1.
std::vector<Face> boundary_faces(const DAngulation& T);

struct CutResult {
  DAngulation rest;           // d-angulation of the (n-d+2)-gon
  Diagonal cut_diagonal;      // in the original labels
  std::vector<int> old_to_new;  // size n+1; 0 for removed vertices
  std::vector<int> new_to_old;  // size n-d+3
};

/// Cut off a boundary face along its single diagonal. Survivors are
/// relabeled 1..n-d+2 preserving counterclockwise order (by rank), which
/// makes the cut diagonal's endpoints adjacent in the smaller polygon.
/// Throws CannotCut when m = 0 and NotBoundaryFace otherwise.
CutResult cut_boundary_face(const DAngulation& T, const Face& f);

/// Relabel vertices by x -> x + shift (mod n).
DAngulation rotate_labels(const DAngulation& T, int shift);

/// All d-angulations of the labeled n-gon, materialized as diagonal sets in
/// lexicographic order (each set sorted internally).
class DAngulationEnumerator {
 public:
  DAngulationEnumerator(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<std::vector<Diagonal>>& diagonal_sets() const {
    return sets_;
  }
  DAngulation at(std::size_t index) const;

 private:
  int n_, d_;
  std::vector<std::vector<Diagonal>> sets_;
};

/// Enumerate every d-angulation of the labeled n-gon exactly once.
/// Throws InvalidSize unless n = d + m(d-2) for some m >= 0.
DAngulationEnumerator enumerate_dangulations(int n, int d);

/// (1/(m+1)) * binomial((d-1)(m+1), m): the number of d-angulations of the
/// polygon with n = d + m(d-2) vertices.
Int fuss_catalan(int d, int m);

/// Parse the text format: comment lines start with '#'; first data line is
/// "n d"; every further data line is one diagonal "u v". Strict: duplicate
/// diagonals, boundary edges and out-of-range labels are errors.
DAngulation parse_dangulation(std::istream& in);
DAngulation parse_dangulation_text(std::string_view text);

/// Inverse of parse_dangulation.
std::string format_dangulation(const DAngulation& T);

/// Short human-readable description, used in diagnostics.
std::string describe(const DAngulation& T);

}  // namespace gfrieze
