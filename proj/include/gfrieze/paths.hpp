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

#include "gfrieze/matrix.hpp"
#include "gfrieze/polygon.hpp"

namespace gfrieze {

enum class Direction { CounterClockwise, Clockwise };

/// A d-path from vertex `from` to vertex `to`: one face per intermediate
/// vertex in traversal order, each face used at most d-2 times overall.
/// Counterclockwise paths visit from+1, from+2, ..., to-1; clockwise paths
/// visit from-1, from-2, ..., to+1 (labels mod n).
struct DPath {
  int from = 0;
  int to = 0;
  std::vector<int> gons;  // face ids

  bool operator==(const DPath&) const = default;
};

/// All d-paths from i to j, in lexicographic order by face-id sequence.
/// For i = j the list is empty: no path may wrap the full polygon.
/// Deliberately a plain depth-first enumeration with a per-face multiplicity
/// counter; this is the ground-truth oracle and shares nothing with
/// matrix_fast.
std::vector<DPath> enumerate_dpaths(const DAngulation& T, int i, int j,
                                    Direction dir = Direction::CounterClockwise);

/// |enumerate_dpaths(T, i, j, dir)| without materializing the paths.
Int count_dpaths(const DAngulation& T, int i, int j,
                 Direction dir = Direction::CounterClockwise);

/// The full n x n matrix of counterclockwise path counts. Exponential in n;
/// intended for small instances.
PathMatrix matrix_bruteforce(const DAngulation& T);

}  // namespace gfrieze
