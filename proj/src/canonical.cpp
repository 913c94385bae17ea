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

#include "ramsey_trails/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramsey_trails {

namespace {

void require_canonical_order(int n) {
  if (n > kMaxCanonicalOrder) throw std::out_of_range("canonical codes support at most 11 vertices");
}

// Stable colour refinement seeded with degrees; colours are ranks of sorted
// signatures, so the final colouring is isomorphism invariant.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig;
    sig.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      sig.push_back({std::move(s), v});
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int rank = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      next[sig[i].second] = rank;
    }
    int now = rank + 1;
    colour = std::move(next);
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.row64(v);
    colour_ = refine_colours(g);
    cell_ = colour_;
    std::sort(cell_.begin(), cell_.end());
  }

  void run() { place(0, /*less=*/false); }

  std::vector<Vertex> labelling() const { return {best_perm_.begin(), best_perm_.begin() + n_}; }

  CanonicalCode code() const {
    CanonicalCode code = 0;
    for (int p = 1; p < n_; ++p) code = (code << p) | best_col_[p];
    return code;
  }

 private:
  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    return (rows_[a] & ~bb) == (rows_[b] & ~ba);
  }

  // less == true: the prefix is already below the best code.
  void place(int p, bool less) {
    if (p == n_) {
      if (less || !has_best_) {
        has_best_ = true;
        ++updates_;
        best_col_ = col_;
        best_perm_ = perm_;
      }
      return;
    }
    std::array<Vertex, kMaxCanonicalOrder> tried{};
    int tried_count = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1U || colour_[v] != cell_[p]) continue;
      bool redundant = false;
      for (int i = 0; i < tried_count && !redundant; ++i) redundant = twins(tried[i], v);
      if (redundant) continue;
      tried[tried_count++] = v;

      std::uint32_t col = 0;
      for (int i = 0; i < p; ++i) col = (col << 1) | static_cast<std::uint32_t>((rows_[perm_[i]] >> v) & 1U);
      bool child_less = less || !has_best_;
      if (!child_less) {
        if (col > best_col_[p]) continue;
        child_less = col < best_col_[p];
      }
      perm_[p] = v;
      col_[p] = col;
      used_ |= std::uint32_t{1} << v;
      const long before = updates_;
      place(p + 1, child_less);
      used_ &= ~(std::uint32_t{1} << v);
      // A new best from this subtree shares our prefix.
      if (updates_ != before) less = false;
    }
  }

  int n_;
  std::array<std::uint64_t, kMaxCanonicalOrder> rows_{};
  std::vector<int> colour_;
  std::vector<int> cell_;
  std::array<Vertex, kMaxCanonicalOrder> perm_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> col_{};
  std::array<Vertex, kMaxCanonicalOrder> best_perm_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_col_{};
  bool has_best_ = false;
  long updates_ = 0;
  std::uint32_t used_ = 0;
};

}  // namespace

CanonicalCode labelled_code(const Graph& g) {
  require_canonical_order(g.order());
  CanonicalCode code = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
  return code;
}

CanonicalCode canonical_code(const Graph& g) {
  require_canonical_order(g.order());
  CanonicalSearch search(g);
  search.run();
  return search.code();
}

std::vector<Vertex> canonical_labelling(const Graph& g) {
  require_canonical_order(g.order());
  CanonicalSearch search(g);
  search.run();
  return search.labelling();
}

Graph graph_from_code(int n, CanonicalCode code) {
  require_canonical_order(n);
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace ramsey_trails
