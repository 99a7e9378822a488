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

#include "gfrieze/paths.hpp"

namespace gfrieze {

namespace {

// Shared DFS skeleton: walk the intermediate vertices in traversal order,
// choosing an incident face at each one, pruning at multiplicity d-2.
template <typename Emit>
void dfs_paths(const DAngulation& T, int from, int to, Direction dir,
               Emit&& emit) {
  const int n = T.n();
  from = reduce_label(from, n);
  to = reduce_label(to, n);
  if (from == to) return;  // a d-path never goes full circle

  const bool ccw = dir == Direction::CounterClockwise;
  const int steps = ccw ? (to - from - 1 + 2 * n) % n : (from - to - 1 + 2 * n) % n;
  std::vector<int> used(T.faces().size(), 0);
  std::vector<int> chosen(steps);

  auto rec = [&](auto&& self, int t) -> void {
    if (t == steps) {
      emit(chosen);
      return;
    }
    int v = ccw ? reduce_label(from + 1 + t, n) : reduce_label(from - 1 - t, n);
    for (int fid : T.faces_at(v)) {
      if (used[fid] == T.d() - 2) continue;
      ++used[fid];
      chosen[t] = fid;
      self(self, t + 1);
      --used[fid];
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<DPath> enumerate_dpaths(const DAngulation& T, int i, int j,
                                    Direction dir) {
  std::vector<DPath> out;
  const int n = T.n();
  dfs_paths(T, i, j, dir, [&](const std::vector<int>& gons) {
    out.push_back(DPath{reduce_label(i, n), reduce_label(j, n), gons});
  });
  return out;
}

Int count_dpaths(const DAngulation& T, int i, int j, Direction dir) {
  Int count = 0;
  dfs_paths(T, i, j, dir, [&](const std::vector<int>&) { ++count; });
  return count;
}

PathMatrix matrix_bruteforce(const DAngulation& T) {
  const int n = T.n();
  IntMatrix M(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) M(i - 1, j - 1) = count_dpaths(T, i, j);
  return PathMatrix{std::move(M)};
}

}  // namespace gfrieze
