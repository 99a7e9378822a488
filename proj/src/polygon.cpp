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

#include "gfrieze/polygon.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace gfrieze {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string pair_str(const Diagonal& t) { return pair_str(t.first, t.second); }

bool chords_cross(const Diagonal& a, const Diagonal& b) {
  // Strict interior crossing: a1 < b1 < a2 < b2 up to swapping the chords.
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

// Split a region (vertex labels in counterclockwise order) at the first
// diagonal lying strictly inside it; regions with no interior diagonal are
// faces. Purely interval-based, no geometry.
void split_region(const std::vector<int>& region,
                  const std::vector<Diagonal>& diagonals, int d,
                  std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(region.size());
  for (const Diagonal& t : diagonals) {
    int pu = -1, pv = -1;
    for (int p = 0; p < k; ++p) {
      if (region[p] == t.first) pu = p;
      if (region[p] == t.second) pv = p;
    }
    if (pu < 0 || pv < 0) continue;
    int lo = std::min(pu, pv), hi = std::max(pu, pv);
    if (hi - lo == 1 || hi - lo == k - 1) continue;  // edge of the region
    std::vector<int> a(region.begin() + lo, region.begin() + hi + 1);
    std::vector<int> b(region.begin() + hi, region.end());
    b.insert(b.end(), region.begin(), region.begin() + lo + 1);
    split_region(a, diagonals, d, out);
    split_region(b, diagonals, d, out);
    return;
  }
  if (k != d) {
    std::string verts;
    for (int v : region) verts += (verts.empty() ? "" : ",") + std::to_string(v);
    fail(Errc::NotDAngulation, "face {" + verts + "} is a " + std::to_string(k) +
                                   "-gon, expected a " + std::to_string(d) + "-gon");
  }
  out.push_back(region);
}

// Rotate so the smallest label comes first, preserving cyclic order.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

bool valid_interval(int size, int d) {
  return size == 2 || (size >= d && (size - d) % (d - 2) == 0);
}

// Recursive ear-based generator. Every d-angulation of the interval polygon
// [a..b] is produced exactly once by choosing the face that contains the
// root chord (a, b) and recursing into the chord-bounded gaps.
class Generator {
 public:
  Generator(int n, int d, std::vector<std::vector<Diagonal>>& out)
      : d_(d), out_(out) {
    pending_.push_back({1, n});
    run();
  }

 private:
  void run() {
    if (pending_.empty()) {
      std::vector<Diagonal> set = current_;
      std::sort(set.begin(), set.end());
      out_.push_back(std::move(set));
      return;
    }
    auto [a, b] = pending_.back();
    pending_.pop_back();
    std::vector<int> picks;
    choose(a, b, picks);
    pending_.push_back({a, b});
  }

  void choose(int a, int b, std::vector<int>& picks) {
    if (static_cast<int>(picks.size()) == d_ - 2) {
      int last = picks.empty() ? a : picks.back();
      if (valid_interval(b - last + 1, d_)) apply(a, b, picks);
      return;
    }
    int prev = picks.empty() ? a : picks.back();
    int remaining = d_ - 2 - static_cast<int>(picks.size());
    for (int v = prev + 1; v <= b - remaining; ++v) {
      if (!valid_interval(v - prev + 1, d_)) continue;
      picks.push_back(v);
      choose(a, b, picks);
      picks.pop_back();
    }
  }

  void apply(int a, int b, const std::vector<int>& picks) {
    std::vector<int> fv;
    fv.reserve(d_);
    fv.push_back(a);
    fv.insert(fv.end(), picks.begin(), picks.end());
    fv.push_back(b);
    size_t chords = 0;
    for (size_t t = 0; t + 1 < fv.size(); ++t) {
      if (fv[t + 1] - fv[t] >= 2) {
        current_.push_back({fv[t], fv[t + 1]});
        pending_.push_back({fv[t], fv[t + 1]});
        ++chords;
      }
    }
    run();
    for (size_t c = 0; c < chords; ++c) {
      current_.pop_back();
      pending_.pop_back();
    }
  }

  int d_;
  std::vector<std::vector<Diagonal>>& out_;
  std::vector<Diagonal> current_;
  std::vector<std::pair<int, int>> pending_;
};

int required_diagonal_count(int n, int d) {
  if (n < 3 || d < 3)
    fail(Errc::InvalidSize, "need n >= 3 and d >= 3, got n=" + std::to_string(n) +
                                " d=" + std::to_string(d));
  if (n < d || (n - d) % (d - 2) != 0)
    fail(Errc::InvalidSize,
         std::to_string(n) + " is not of the form " + std::to_string(d) +
             " + m*" + std::to_string(d - 2));
  return (n - d) / (d - 2);
}

}  // namespace

bool Face::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int DAngulation::diagonal_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(),
                             Diagonal{u, v});
  if (it != diagonals_.end() && *it == Diagonal{u, v})
    return static_cast<int>(it - diagonals_.begin());
  return -1;
}

bool DAngulation::is_boundary_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return v - u == 1 || (u == 1 && v == n_);
}

DAngulation build_dangulation(int n, int d, std::vector<Diagonal> diagonals) {
  DAngulation T;
  T.n_ = n;
  T.d_ = d;
  T.m_ = required_diagonal_count(n, d);

  for (Diagonal& t : diagonals) {
    if (t.first > t.second) std::swap(t.first, t.second);
    if (t.first < 1 || t.second > n)
      fail(Errc::NotDAngulation, "diagonal " + pair_str(t) + " out of range 1.." +
                                     std::to_string(n));
    if (t.first == t.second)
      fail(Errc::NotDAngulation, "degenerate diagonal " + pair_str(t));
    if (t.second - t.first == 1 || (t.first == 1 && t.second == n))
      fail(Errc::NotDAngulation,
           pair_str(t) + " is a boundary edge, not a diagonal");
  }
  std::sort(diagonals.begin(), diagonals.end());
  for (size_t i = 0; i + 1 < diagonals.size(); ++i)
    if (diagonals[i] == diagonals[i + 1])
      fail(Errc::NotDAngulation, "duplicate diagonal " + pair_str(diagonals[i]));
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j)
      if (chords_cross(diagonals[i], diagonals[j]))
        fail(Errc::CrossingDiagonals, "diagonals " + pair_str(diagonals[i]) +
                                          " and " + pair_str(diagonals[j]) +
                                          " cross");
  if (static_cast<int>(diagonals.size()) != T.m_)
    fail(Errc::NotDAngulation,
         "expected " + std::to_string(T.m_) + " diagonals, got " +
             std::to_string(diagonals.size()));
  T.diagonals_ = std::move(diagonals);

  // Faces by recursive interval splitting, then canonical order.
  std::vector<int> whole(n);
  for (int v = 1; v <= n; ++v) whole[v - 1] = v;
  std::vector<std::vector<int>> cycles;
  split_region(whole, T.diagonals_, d, cycles);
  for (auto& c : cycles) c = canonical_cycle(std::move(c));
  std::sort(cycles.begin(), cycles.end());
  T.faces_.resize(cycles.size());
  for (size_t f = 0; f < cycles.size(); ++f)
    T.faces_[f] = Face{std::move(cycles[f]), static_cast<int>(f)};

  // Incidences, boundary-edge owners and the dual tree.
  T.faces_at_.assign(n + 1, {});
  T.edge_face_.assign(n + 1, -1);
  T.diag_edge_count_.assign(T.faces_.size(), 0);
  T.dual_.assign(T.faces_.size(), {});
  std::map<Diagonal, std::vector<int>> diag_faces;
  for (const Face& f : T.faces_) {
    for (int v : f.vertices) T.faces_at_[v].push_back(f.id);
    for (int p = 0; p < f.size(); ++p) {
      int u = f.vertices[p];
      int v = f.vertices[(p + 1) % f.size()];
      if (u > v) std::swap(u, v);
      if (T.is_boundary_edge(u, v)) {
        int start = (v - u == 1) ? u : v;  // edge (start, start+1)
        T.edge_face_[start] = f.id;
      } else {
        int idx = T.diagonal_index(u, v);
        if (idx < 0)
          fail(Errc::NotDAngulation,
               "face edge " + pair_str(u, v) + " is not a diagonal");
        ++T.diag_edge_count_[f.id];
        diag_faces[{u, v}].push_back(f.id);
      }
    }
  }
  for (const auto& [t, fs] : diag_faces) {
    if (fs.size() != 2)
      fail(Errc::NotDAngulation,
           "diagonal " + pair_str(t) + " does not separate two faces");
    int idx = T.diagonal_index(t.first, t.second);
    T.dual_[fs[0]].push_back({fs[1], idx});
    T.dual_[fs[1]].push_back({fs[0], idx});
  }
  for (int e = 1; e <= n; ++e)
    if (T.edge_face_[e] < 0)
      fail(Errc::NotDAngulation, "boundary edge (" + std::to_string(e) + "," +
                                     std::to_string(reduce_label(e + 1, n)) +
                                     ") not covered by a face");

  // The dual graph must be a tree: m+1 nodes, m edges, connected.
  std::vector<char> seen(T.faces_.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (auto [g, idx] : T.dual_[queue[q]])
      if (!seen[g]) {
        seen[g] = 1;
        queue.push_back(g);
      }
  if (queue.size() != T.faces_.size())
    fail(Errc::NotDAngulation, "dual graph of faces is not connected");

  return T;
}

std::vector<Face> boundary_faces(const DAngulation& T) {
  std::vector<Face> out;
  for (const Face& f : T.faces())
    if (T.diagonal_edge_count(f.id) <= 1) out.push_back(f);
  return out;
}

CutResult cut_boundary_face(const DAngulation& T, const Face& f) {
  if (T.m() == 0) fail(Errc::CannotCut, "single d-gon has nothing to cut");
  if (f.id < 0 || f.id >= static_cast<int>(T.faces().size()) ||
      !(T.face(f.id) == f))
    fail(Errc::NotBoundaryFace, "face does not belong to this d-angulation");
  if (T.diagonal_edge_count(f.id) != 1)
    fail(Errc::NotBoundaryFace,
         "face " + std::to_string(f.id) + " has " +
             std::to_string(T.diagonal_edge_count(f.id)) + " diagonal edges");

  Diagonal cut{-1, -1};
  for (int p = 0; p < f.size(); ++p) {
    int u = f.vertices[p], v = f.vertices[(p + 1) % f.size()];
    if (u > v) std::swap(u, v);
    if (!T.is_boundary_edge(u, v)) cut = {u, v};
  }

  std::vector<char> removed(T.n() + 1, 0);
  for (int v : f.vertices)
    if (v != cut.first && v != cut.second) removed[v] = 1;

  CutResult res;
  res.cut_diagonal = cut;
  res.old_to_new.assign(T.n() + 1, 0);
  res.new_to_old.assign(1, 0);
  int next = 0;
  for (int v = 1; v <= T.n(); ++v) {
    if (removed[v]) continue;
    res.old_to_new[v] = ++next;
    res.new_to_old.push_back(v);
  }
  std::vector<Diagonal> rest;
  for (const Diagonal& t : T.diagonals()) {
    if (t == cut) continue;
    rest.push_back({res.old_to_new[t.first], res.old_to_new[t.second]});
  }
  res.rest = build_dangulation(T.n() - T.d() + 2, T.d(), std::move(rest));
  return res;
}

DAngulation rotate_labels(const DAngulation& T, int shift) {
  std::vector<Diagonal> diags;
  diags.reserve(T.diagonals().size());
  for (const Diagonal& t : T.diagonals())
    diags.push_back({reduce_label(t.first + shift, T.n()),
                     reduce_label(t.second + shift, T.n())});
  return build_dangulation(T.n(), T.d(), std::move(diags));
}

DAngulationEnumerator::DAngulationEnumerator(int n, int d) : n_(n), d_(d) {
  required_diagonal_count(n, d);
  Generator gen(n, d, sets_);
  std::sort(sets_.begin(), sets_.end());
}

DAngulation DAngulationEnumerator::at(std::size_t index) const {
  return build_dangulation(n_, d_, sets_[index]);
}

DAngulationEnumerator enumerate_dangulations(int n, int d) {
  return DAngulationEnumerator(n, d);
}

Int fuss_catalan(int d, int m) {
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(),
               static_cast<unsigned long>(d - 1) * (m + 1),
               static_cast<unsigned long>(m));
  return div_exact(binom, Int(m + 1));
}

DAngulation parse_dangulation(std::istream& in) {
  std::vector<std::string> data_lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) data_lines.push_back(line);
  }
  if (data_lines.empty()) fail(Errc::ParseError, "empty input");

  auto parse_two = [](const std::string& s, const char* what) {
    std::istringstream ls(s);
    long long a, b;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra))
      fail(Errc::ParseError, std::string("expected '") + what + "', got '" + s + "'");
    return std::pair<long long, long long>{a, b};
  };

  auto [n, d] = parse_two(data_lines[0], "n d");
  if (n < 3 || n > 1'000'000 || d < 3 || d > 1'000'000)
    fail(Errc::ParseError, "header out of range: n=" + std::to_string(n) +
                               " d=" + std::to_string(d));
  std::vector<Diagonal> diagonals;
  for (size_t i = 1; i < data_lines.size(); ++i) {
    auto [u, v] = parse_two(data_lines[i], "u v");
    if (u < 1 || u > n || v < 1 || v > n)
      fail(Errc::ParseError, "diagonal label out of range 1.." +
                                 std::to_string(n) + " in '" + data_lines[i] + "'");
    diagonals.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return build_dangulation(static_cast<int>(n), static_cast<int>(d),
                           std::move(diagonals));
}

DAngulation parse_dangulation_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dangulation(in);
}

std::string format_dangulation(const DAngulation& T) {
  std::ostringstream out;
  out << T.n() << ' ' << T.d() << '\n';
  for (const Diagonal& t : T.diagonals())
    out << t.first << ' ' << t.second << '\n';
  return out.str();
}

std::string describe(const DAngulation& T) {
  std::ostringstream out;
  out << "n=" << T.n() << " d=" << T.d() << " diagonals";
  if (T.diagonals().empty()) out << "=none";
  for (const Diagonal& t : T.diagonals()) out << ' ' << pair_str(t);
  return out.str();
}

}  // namespace gfrieze
