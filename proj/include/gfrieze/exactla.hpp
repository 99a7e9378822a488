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
#include "gfrieze/matrix.hpp"
#include "gfrieze/polygon.hpp"

namespace gfrieze {

/// Elementary divisors d1 | d2 | ... (non-negative, zeros last) plus, for
/// square input, the exact determinant. The product of the divisors equals
/// |determinant|.
struct SmithDecomposition {
  std::vector<Int> divisors;
  Int determinant = 0;

  bool operator==(const SmithDecomposition&) const = default;
};

/// Exact determinant by fraction-free (Bareiss) elimination: every division
/// is exact, no rational intermediates. Throws NotSquare.
Int determinant(const IntMatrix& A);

/// Smith normal form by row/column reduction with minimal-absolute-value
/// pivoting and the divisibility repair step.
SmithDecomposition smith_normal_form(const IntMatrix& A);

enum class SpecialKind {
  Md,  // zero diagonal, ones elsewhere
  Zd,  // -2 diagonal, -1 elsewhere: -2*E - M
};

/// The d x d fixture matrices of the determinant/divisor induction.
IntMatrix special_matrix(SpecialKind kind, int d);

struct DivisorTheoremReport {
  bool pass = false;
  int n = 0, d = 0, m = 0;
  Int det_actual, det_expected;
  std::vector<Int> divisors_actual, divisors_expected;
};

/// Expected invariants of any path-count matrix of a d-angulation:
/// determinant (-1)^(n-1) (d-1)^(m+1) and elementary divisors
/// 1^(n-m-1), (d-1)^(m+1).
Int expected_determinant(int n, int d, int m);
std::vector<Int> expected_divisors(int n, int d, int m);

/// Check the determinant and elementary divisors of M_T against the closed
/// forms. Disagreement is a report outcome, not an error.
DivisorTheoremReport verify_divisor_theorem(const DAngulation& T);
DivisorTheoremReport verify_divisor_theorem(const DAngulation& T,
                                            const PathMatrix& M);

}  // namespace gfrieze
