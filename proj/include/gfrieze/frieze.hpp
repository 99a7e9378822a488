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

#include <optional>
#include <string>
#include <vector>

#include "gfrieze/matrix.hpp"
#include "gfrieze/polygon.hpp"

namespace gfrieze {

/// The bi-infinite pattern generated from the upper triangle of the
/// path-count matrix by glide reflection. entry(i, j) is defined for all
/// integer pairs with i <= j <= i+n as count(i, j); the matrix symmetry
/// makes entry(i, j) = entry(j, i+n), and reduction mod n gives horizontal
/// period n. Rows 0 and n of the pattern are the zero rows, rows 1 and n-1
/// the bordering rows of ones.
class FriezePattern {
 public:
  explicit FriezePattern(DAngulation T);
  FriezePattern(DAngulation T, PathMatrix M);

  int n() const { return M_.n(); }
  const DAngulation& dangulation() const { return T_; }
  const PathMatrix& matrix() const { return M_; }

  /// Requires i <= j <= i+n; throws std::out_of_range otherwise.
  const Int& entry(long long i, long long j) const;

 private:
  DAngulation T_;
  PathMatrix M_;
};

/// Determinant of the adjacent 2x2 block of M_T at boundary edges
/// e = (i, i+1), f = (j, j+1):
///   | count(i,j)    count(i,j+1)   |
///   | count(i+1,j)  count(i+1,j+1) |
/// with indices reduced mod n. Equals -1 exactly when e = f, otherwise
/// 0 or 1.
Int adjacent_minor(const PathMatrix& M, BoundaryEdge e, BoundaryEdge f);
Int adjacent_minor(const DAngulation& T, BoundaryEdge e, BoundaryEdge f);

/// Certificate that the adjacent minor at (e, f) is 1: a sequence
/// e = z_0, z_1, ..., z_s = f whose interior members are diagonals, with
/// witnessing faces p_0, ..., p_{s-1} such that
///   (i)  z_k and z_{k+1} are edges of p_k,
///   (ii) the p_k are pairwise different,
///  (iii) z_k and z_{k+1} share a vertex.
struct HingeWitness {
  std::vector<Diagonal> edges;  // z_0..z_s, endpoints normalized
  std::vector<int> faces;       // p_0..p_{s-1}, face ids

  int s() const { return static_cast<int>(faces.size()); }
};

/// Search for a hinge witness from e to f. The witnessing faces must form a
/// simple path in the dual tree between the unique faces containing e and f,
/// so the candidate is unique; it is returned iff the shared-vertex
/// condition holds along it. Throws SameEdge when e = f.
std::optional<HingeWitness> hinge_sequence(const DAngulation& T,
                                           BoundaryEdge e, BoundaryEdge f);

/// Structural validation of a witness against conditions (i)-(iii).
bool check_witness(const DAngulation& T, const HingeWitness& w,
                   BoundaryEdge e, BoundaryEdge f);

/// All adjacent minors plus the witnesses backing every 1-cell.
/// table[i-1][j-1] holds the minor for e = (i, i+1), f = (j, j+1).
/// Construction cross-checks that minors lie in {-1, 0, 1} with -1 exactly
/// on the diagonal and that a witness exists exactly for the 1-cells;
/// violations (which would falsify the hinge criterion) raise
/// std::logic_error.
struct MinorClassification {
  int n = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::vector<std::optional<HingeWitness>>> witnesses;
};

MinorClassification classify_minors(const DAngulation& T);
MinorClassification classify_minors(const DAngulation& T, const PathMatrix& M);

/// Plain-text frieze: rows k = 1..n-1 of the pattern in the classic
/// staggered diamond layout, `columns` entries per row, width-aligned.
/// The bordering 1-rows are included, the zero rows are not.
std::string render_frieze(const DAngulation& T, int columns);

}  // namespace gfrieze
