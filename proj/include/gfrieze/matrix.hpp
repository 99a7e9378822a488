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

#include <vector>

#include "gfrieze/intmatrix.hpp"
#include "gfrieze/polygon.hpp"

namespace gfrieze {

/// The symmetric n x n matrix of d-path counts of a d-angulation.
/// count(i, j) accepts arbitrary integers and reduces them into 1..n, which
/// is exactly the glide-reflection periodicity of the associated pattern.
struct PathMatrix {
  IntMatrix entries;

  int n() const { return entries.rows(); }
  const Int& count(long long i, long long j) const {
    return entries(reduce_label(i, n()) - 1, reduce_label(j, n()) - 1);
  }
  bool is_symmetric() const;
  bool operator==(const PathMatrix&) const = default;
};

/// Compute the path-count matrix by inductive propagation: per source vertex
/// i, every vertex sharing a face with i gets 1, then faces are filled
/// outward across the dual tree, each new face assigning the sum of its two
/// entry-diagonal endpoints to its remaining vertices. O(n^2 d) entries,
/// no path enumeration.
PathMatrix matrix_fast(const DAngulation& T);

/// Extend the matrix of a d-angulation of the n-gon by a d-gon glued onto
/// the boundary edge (n, 1). The result is the (n+d-2) x (n+d-2) matrix with
/// block structure: top-left Mprime; top-right columns constant per row with
/// value Mprime(i,1) + Mprime(i,n); bottom-left its transpose; bottom-right
/// zero diagonal and ones elsewhere. Throws DimensionMismatch when Mprime is
/// not square or its size is not d + m(d-2).
PathMatrix glue_matrix(const PathMatrix& Mprime, int d);

/// Path-count matrix computed purely through the gluing recursion: cut
/// boundary faces down to a single d-gon, then glue back up (rotating labels
/// so each attachment edge is (n, 1)). Agrees with matrix_fast everywhere.
PathMatrix matrix_via_gluing(const DAngulation& T);

/// Entry i is count(i-1, i+1). For triangulations this is the number of
/// triangles incident to vertex i, i.e. the second row of the frieze.
std::vector<Int> quiddity_row(const DAngulation& T);
std::vector<Int> quiddity_row(const DAngulation& T, const PathMatrix& M);

}  // namespace gfrieze
