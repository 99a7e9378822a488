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

// Frozen reference instances used across the test suites: three worked
// d-angulations with their full path-count matrices, plus small derived
// fixtures.

#pragma once

#include <vector>

#include "gfrieze/intmatrix.hpp"
#include "gfrieze/polygon.hpp"

namespace fixtures {

using gfrieze::Diagonal;

// Triangulated octagon (d = 3, m = 5).
inline const std::vector<Diagonal> kOctagonDiagonals = {
    {1, 4}, {2, 4}, {4, 6}, {1, 6}, {1, 7}};
inline const int kOctagonMatrix[8][8] = {
    {0, 1, 2, 1, 2, 1, 1, 1},  //
    {1, 0, 1, 1, 3, 2, 3, 4},  //
    {2, 1, 0, 1, 4, 3, 5, 7},  //
    {1, 1, 1, 0, 1, 1, 2, 3},  //
    {2, 3, 4, 1, 0, 1, 3, 5},  //
    {1, 2, 3, 1, 1, 0, 1, 2},  //
    {1, 3, 5, 2, 3, 1, 0, 1},  //
    {1, 4, 7, 3, 5, 2, 1, 0},
};

// Quadrangulated 10-gon (d = 4, m = 3) with faces
// {2,3,4,5}, {5,6,7,8}, {1,8,9,10} and the inner face {1,2,5,8}.
inline const std::vector<Diagonal> kTengonDiagonals = {{2, 5}, {5, 8}, {1, 8}};
inline const int kTengonMatrix[10][10] = {
    {0, 1, 2, 2, 1, 2, 2, 1, 1, 1},  //
    {1, 0, 1, 1, 1, 2, 2, 1, 2, 2},  //
    {2, 1, 0, 1, 1, 3, 3, 2, 4, 4},  //
    {2, 1, 1, 0, 1, 3, 3, 2, 4, 4},  //
    {1, 1, 1, 1, 0, 1, 1, 1, 2, 2},  //
    {2, 2, 3, 3, 1, 0, 1, 1, 3, 3},  //
    {2, 2, 3, 3, 1, 1, 0, 1, 3, 3},  //
    {1, 1, 2, 2, 1, 1, 1, 0, 1, 1},  //
    {1, 2, 4, 4, 2, 3, 3, 1, 0, 1},  //
    {1, 2, 4, 4, 2, 3, 3, 1, 1, 0},
};

// Quadrangulated 12-gon (d = 4, m = 4).
inline const std::vector<Diagonal> kTwelvegonDiagonals = {
    {1, 4}, {4, 7}, {7, 12}, {8, 11}};
inline const int kTwelvegonMatrix[12][12] = {
    {0, 1, 1, 1, 2, 2, 1, 2, 4, 4, 2, 1},  //
    {1, 0, 1, 1, 3, 3, 2, 4, 8, 8, 4, 2},  //
    {1, 1, 0, 1, 3, 3, 2, 4, 8, 8, 4, 2},  //
    {1, 1, 1, 0, 1, 1, 1, 2, 4, 4, 2, 1},  //
    {2, 3, 3, 1, 0, 1, 1, 3, 6, 6, 3, 2},  //
    {2, 3, 3, 1, 1, 0, 1, 3, 6, 6, 3, 2},  //
    {1, 2, 2, 1, 1, 1, 0, 1, 2, 2, 1, 1},  //
    {2, 4, 4, 2, 3, 3, 1, 0, 1, 1, 1, 1},  //
    {4, 8, 8, 4, 6, 6, 2, 1, 0, 1, 1, 2},  //
    {4, 8, 8, 4, 6, 6, 2, 1, 1, 0, 1, 2},  //
    {2, 4, 4, 2, 3, 3, 1, 1, 1, 1, 0, 1},  //
    {1, 2, 2, 1, 2, 2, 1, 1, 2, 2, 1, 0},
};

// Triangulated pentagon (d = 3, m = 2): second frieze row 1,3,1,2,2.
inline const std::vector<Diagonal> kPentagonDiagonals = {{2, 4}, {2, 5}};
inline const int kPentagonQuiddity[5] = {1, 3, 1, 2, 2};

// Quadrangulated hexagon (d = 4, m = 1), diagonal (1,4): the smallest glued
// instance. Derived from the single-quadrilateral matrix by the block
// extension and confirmed by brute-force path counts.
inline const std::vector<Diagonal> kHexagonDiagonals = {{1, 4}};
inline const int kHexagonMatrix[6][6] = {
    {0, 1, 1, 1, 1, 1},  //
    {1, 0, 1, 1, 2, 2},  //
    {1, 1, 0, 1, 2, 2},  //
    {1, 1, 1, 0, 1, 1},  //
    {1, 2, 2, 1, 0, 1},  //
    {1, 2, 2, 1, 1, 0},
};

template <int N>
gfrieze::IntMatrix to_matrix(const int (&a)[N][N]) {
  gfrieze::IntMatrix M(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) M(r, c) = a[r][c];
  return M;
}

inline gfrieze::DAngulation octagon() {
  return gfrieze::build_dangulation(8, 3, kOctagonDiagonals);
}
inline gfrieze::DAngulation tengon() {
  return gfrieze::build_dangulation(10, 4, kTengonDiagonals);
}
inline gfrieze::DAngulation twelvegon() {
  return gfrieze::build_dangulation(12, 4, kTwelvegonDiagonals);
}
inline gfrieze::DAngulation pentagon() {
  return gfrieze::build_dangulation(5, 3, kPentagonDiagonals);
}
inline gfrieze::DAngulation hexagon() {
  return gfrieze::build_dangulation(6, 4, kHexagonDiagonals);
}

}  // namespace fixtures
