// Copyright 2026 The ramsey-trails Authors
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

#include "ramsey_trails/trail_solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey_trails {

namespace {

using Rows = std::array<std::uint64_t, kWordVertices>;

struct ComponentStats {
  int edges = 0;
  int odd = 0;
};

ComponentStats component_of(const Rows& rows, Vertex v) {
  std::uint64_t seen = std::uint64_t{1} << v;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  ComponentStats s;
  int degree_sum = 0;
  for (std::uint64_t m = seen; m != 0; m &= m - 1) {
    int d = std::popcount(rows[std::countr_zero(m)]);
    degree_sum += d;
    s.odd += d & 1;
  }
  s.edges = degree_sum / 2;
  return s;
}

// Most edges a trail starting at `v` can still take inside its component.
// Whatever the trail leaves behind keeps at least |odd Δ {v, end}| odd
// vertices, each pair of which costs one edge.
int bound_from(const ComponentStats& c, bool v_odd) {
  if (c.odd == 0) return c.edges;
  return c.edges - (c.odd / 2 - (v_odd ? 1 : 0));
}

// Euler trail over the component of `v`, consuming the edges in `rows`.
void euler_tail(Rows& rows, Vertex v, std::vector<Vertex>& out) {
  std::vector<Vertex> stack{v};
  std::vector<Vertex> circuit;
  while (!stack.empty()) {
    Vertex x = stack.back();
    if (rows[x] == 0) {
      circuit.push_back(x);
      stack.pop_back();
    } else {
      Vertex y = std::countr_zero(rows[x]);
      rows[x] &= ~(std::uint64_t{1} << y);
      rows[y] &= ~(std::uint64_t{1} << x);
      stack.push_back(y);
    }
  }
  // circuit is reversed and starts with the final vertex; it ends with v
  for (auto it = circuit.rbegin() + 1; it != circuit.rend(); ++it) out.push_back(*it);
}

// Set of (end vertex, used edges) states already expanded. Two partial
// trails in the same state have the same continuations, so the second one
// can be skipped. Grows up to a fixed cap; beyond it new states are dropped.
class StateSet {
 public:
  // True if the state was already present.
  bool check_and_insert(std::uint64_t used, Vertex v) {
    const std::uint64_t tag = static_cast<std::uint64_t>(v) + 1;
    Slot* slot = find(used, tag);
    if (slot != nullptr && slot->tag == tag) return true;
    if ((size_ + 1) * 4 > slots_.size() * 3) {
      if (slots_.size() >= kMaxSlots) return false;
      grow();
      slot = find(used, tag);
    }
    if (slot == nullptr) return false;
    *slot = {used, tag};
    ++size_;
    return false;
  }

 private:
  struct Slot {
    std::uint64_t used = 0;
    std::uint64_t tag = 0;  // vertex + 1; 0 marks an empty slot
  };
  static constexpr std::size_t kMaxSlots = std::size_t{1} << 22;

  static std::size_t hash(std::uint64_t used, std::uint64_t tag) {
    std::uint64_t h = (used ^ (tag * 0x9e3779b97f4a7c15ULL)) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  // Matching slot, else the first empty slot on the probe sequence.
  Slot* find(std::uint64_t used, std::uint64_t tag) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(used, tag) & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.tag == 0 || (s.tag == tag && s.used == used)) return &s;
    }
  }

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    for (const Slot& s : old) {
      if (s.tag != 0) *find(s.used, s.tag) = s;
    }
  }

  std::vector<Slot> slots_ = std::vector<Slot>(1024);
  std::size_t size_ = 0;
};

class TrailSearch {
 public:
  TrailSearch(const Graph& g, int target_edges, bool stop_on_target, const SearchOptions& options)
      : n_(g.order()), target_(target_edges), stop_on_target_(stop_on_target), options_(options) {
    rows_.fill(0);
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.row64(v);
    if (options_.prune && g.edge_count() <= 64 && g.edge_count() > 12) {
      int id = 0;
      for (Vertex a = 0; a < n_; ++a) {
        for (std::uint64_t r = rows_[a] >> a; r != 0; r &= r - 1) {
          const Vertex b = a + std::countr_zero(r);
          edge_id_[a][b] = edge_id_[b][a] = static_cast<std::int8_t>(id++);
        }
      }
      seen_.emplace();
    }
  }

  void run() {
    const Rows original = rows_;
    for (Vertex s = 0; s < n_ && !stop_; ++s) {
      if (original[s] == 0) continue;
      if (options_.reduce_starts && twin_of_earlier_start(original, s)) continue;
      path_.assign(1, s);
      extend(s);
    }
  }

  int best_edges() const { return best_edges_; }
  const std::vector<Vertex>& best() const { return best_; }

 private:
  bool twin_of_earlier_start(const Rows& rows, Vertex s) const {
    const std::uint64_t bit_s = std::uint64_t{1} << s;
    for (Vertex t = 0; t < s; ++t) {
      if (rows[t] == 0) continue;
      const std::uint64_t bit_t = std::uint64_t{1} << t;
      if ((rows[t] & ~bit_s) == (rows[s] & ~bit_t)) return true;
    }
    return false;
  }

  void record(const std::vector<Vertex>& trail) {
    int edges = static_cast<int>(trail.size()) - 1;
    if (edges > best_edges_) {
      best_edges_ = edges;
      best_ = trail;
      if (stop_on_target_ && best_edges_ >= target_) stop_ = true;
    }
  }

  void extend(Vertex v) {
    const int depth = static_cast<int>(path_.size()) - 1;
    if (depth > best_edges_) record(path_);
    if (stop_ || rows_[v] == 0) return;
    if (seen_ && seen_->check_and_insert(used_, v)) return;

    if (options_.prune) {
      ComponentStats c = component_of(rows_, v);
      const bool v_odd = (std::popcount(rows_[v]) & 1) != 0;
      const int reach = depth + bound_from(c, v_odd);
      if (reach <= best_edges_) return;
      if (stop_on_target_ && reach < target_) return;
      if (c.odd == 0 || (c.odd == 2 && v_odd)) {
        // The whole component is traversable from v, which is optimal here.
        Rows saved = rows_;
        std::vector<Vertex> trail = path_;
        euler_tail(rows_, v, trail);
        rows_ = saved;
        record(trail);
        return;
      }
    }

    for (std::uint64_t next = rows_[v]; next != 0; next &= next - 1) {
      Vertex w = std::countr_zero(next);
      const std::uint64_t edge_bit = seen_ ? std::uint64_t{1} << edge_id_[v][w] : 0;
      rows_[v] &= ~(std::uint64_t{1} << w);
      rows_[w] &= ~(std::uint64_t{1} << v);
      used_ ^= edge_bit;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      used_ ^= edge_bit;
      rows_[v] |= std::uint64_t{1} << w;
      rows_[w] |= std::uint64_t{1} << v;
      if (stop_) return;
    }
  }

  int n_;
  int target_;
  bool stop_on_target_;
  SearchOptions options_;
  Rows rows_{};
  std::optional<StateSet> seen_;
  std::array<std::array<std::int8_t, kWordVertices>, kWordVertices> edge_id_{};
  std::uint64_t used_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  int best_edges_ = -1;
  bool stop_ = false;
};

void require_word_graph(const Graph& g) {
  if (!g.fits_word()) throw std::out_of_range("trail search supports at most 64 vertices");
}

}  // namespace

TrailResult longest_trail(const Graph& g, const SearchOptions& options) {
  require_word_graph(g);
  if (g.edge_count() == 0) return {1, Trail({0})};
  const int ceiling = options.prune ? trail_edge_upper_bound(g) : INT_MAX;
  TrailSearch search(g, ceiling, options.prune, options);
  search.run();
  return {search.best_edges() + 1, Trail(search.best())};
}

std::optional<Trail> trail_with_vertices(const Graph& g, int k, const SearchOptions& options) {
  require_word_graph(g);
  if (k <= 1) return Trail({0});
  if (options.prune && trail_edge_upper_bound(g) + 1 < k) return std::nullopt;
  TrailSearch search(g, k - 1, true, options);
  search.run();
  if (search.best_edges() + 1 < k) return std::nullopt;
  return Trail(search.best()).prefix(k);
}

int t_value(const Graph& g, const SearchOptions& options) {
  return std::max(longest_trail(g, options).best_vertex_count,
                  longest_trail(g.complement(), options).best_vertex_count);
}

}  // namespace ramsey_trails
