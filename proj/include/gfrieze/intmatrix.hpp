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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "gfrieze/error.hpp"

namespace gfrieze {

/// Exact arbitrary-precision integer. Path counts double with every glued
/// polygon, so all matrix entries live in Int, never in a fixed-width type.
using Int = mpz_class;

/// Quotient a/b for known-exact divisions (Bareiss pivots).
Int div_exact(const Int& a, const Int& b);

/// Dense matrix over Int, row-major, 0-based indices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Rows of space-separated decimal entries, one matrix row per line.
std::string matrix_to_text(const IntMatrix& A);

/// Inverse of matrix_to_text. Ragged rows or junk tokens raise ParseError.
IntMatrix matrix_from_text(std::string_view text);

}  // namespace gfrieze
