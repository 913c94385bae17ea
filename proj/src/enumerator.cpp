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

#include "ramsey_trails/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "ramsey_trails/trail_solver.hpp"
#include "ramsey_trails/version.hpp"

namespace ramsey_trails {

namespace {

void require_order(int n, int lo) {
  if (n < lo || n > kMaxEnumerationOrder) {
    throw std::out_of_range("n = " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                            std::to_string(kMaxEnumerationOrder));
  }
}

// Runs body(begin, end, worker) over contiguous slices of [0, count).
void parallel_slices(std::size_t count, int jobs,
                     const std::function<void(std::size_t, std::size_t, int)>& body) {
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)),
                                                             std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t step = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t begin = std::min(count, step * w);
    std::size_t end = std::min(count, begin + step);
    threads.emplace_back(body, begin, end, w);
  }
  for (auto& t : threads) t.join();
}

std::vector<CanonicalCode> extend_level(const std::vector<CanonicalCode>& parents, int n, int jobs) {
  std::vector<std::vector<CanonicalCode>> found(static_cast<std::size_t>(resolve_jobs(jobs)));
  parallel_slices(parents.size(), jobs, [&](std::size_t begin, std::size_t end, int worker) {
    std::unordered_set<CanonicalCode> local;
    for (std::size_t i = begin; i < end; ++i) {
      const Graph parent = graph_from_code(n - 1, parents[i]);
      Graph child(n);
      for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
        Graph g = child;
        for (Vertex v = 0; v < n - 1; ++v) {
          if ((mask >> v) & 1U) g.add_edge(v, n - 1);
        }
        local.insert(canonical_code(g));
      }
    }
    found[static_cast<std::size_t>(worker)].assign(local.begin(), local.end());
  });
  std::vector<CanonicalCode> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<CanonicalCode> enumerate_codes(int n, int jobs) {
  require_order(n, 1);
  std::vector<CanonicalCode> level{0};  // the single graph on one vertex
  for (int m = 2; m <= n; ++m) level = extend_level(level, m, jobs);
  return level;
}

std::vector<Graph> enumerate_graphs(int n, int jobs) {
  std::vector<Graph> out;
  for (CanonicalCode c : enumerate_codes(n, jobs)) out.push_back(graph_from_code(n, c));
  return out;
}

int value_over(int n, const std::vector<CanonicalCode>& codes, int jobs) {
  if (n == 1) return 1;
  if (codes.empty()) throw std::invalid_argument("value_over: no graphs");
  // Every t(G) is at most max(bound(G), bound(co-G)) + 1, so the smallest
  // such bound plus one is a valid starting point for the running minimum:
  // only graphs with t(G) below it need an exact evaluation.
  std::atomic<int> seed{INT_MAX};
  parallel_slices(codes.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
    int local = INT_MAX;
    for (std::size_t i = begin; i < end; ++i) {
      const Graph g = graph_from_code(n, codes[i]);
      local = std::min(local, std::max(trail_edge_upper_bound(g), trail_edge_upper_bound(g.complement())) + 1);
    }
    int seen = seed.load();
    while (local < seen && !seed.compare_exchange_weak(seen, local)) {
    }
  });

  std::atomic<int> best{seed.load() + 1};
  parallel_slices(codes.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) {
      const Graph g = graph_from_code(n, codes[i]);
      const int current = best.load();
      // t(G) >= current rules the graph out without computing t exactly.
      if (has_trail_with_k(g, current) || has_trail_with_k(g.complement(), current)) continue;
      const int t = t_value(g);
      int seen = best.load();
      while (t < seen && !best.compare_exchange_weak(seen, t)) {
      }
    }
  });
  return best.load();
}

int value(int n, int jobs) {
  require_order(n, 2);
  return value_over(n, enumerate_codes(n, jobs), jobs);
}

std::string ValueCache::stamp() {
  return std::string(kVersion) + "+value." + std::to_string(kValueAlgorithmRevision);
}

std::filesystem::path ValueCache::entry(int n) const { return dir_ / ("value-n" + std::to_string(n) + ".json"); }

std::optional<int> ValueCache::load(int n) const {
  std::ifstream in(entry(n));
  if (!in) return std::nullopt;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("version").get<std::string>() != stamp() || doc.at("n").get<int>() != n) return std::nullopt;
    return doc.at("value").get<int>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

bool ValueCache::store(int n, int value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return false;
  nlohmann::json doc = {{"version", stamp()}, {"n", n}, {"value", value}};
  auto final_path = entry(n);
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << doc.dump() << '\n';
    if (!out) return false;
  }
  std::filesystem::rename(tmp, final_path, ec);
  return !ec;
}

std::map<int, int> ramsey_from_values(const std::map<int, int>& values) {
  std::map<int, int> ramsey;
  int previous = 1;  // value(1)
  for (const auto& [n, v] : values) {
    for (int k = std::max(previous + 1, 2); k <= v; ++k) ramsey[k] = n;
    previous = std::max(previous, v);
  }
  return ramsey;
}

RamseyTable ramsey_table(int max_n, int jobs, const ValueCache* cache) {
  require_order(max_n, 2);
  RamseyTable table;
  table.max_n = max_n;
  int last_missing = 0;
  for (int n = 2; n <= max_n; ++n) {
    std::optional<int> hit = cache ? cache->load(n) : std::nullopt;
    if (hit) {
      table.values[n] = *hit;
    } else {
      last_missing = n;
    }
  }
  std::vector<CanonicalCode> level{0};
  for (int n = 2; n <= last_missing; ++n) {
    level = extend_level(level, n, jobs);
    if (table.values.count(n)) continue;
    int v = value_over(n, level, jobs);
    table.values[n] = v;
    if (cache) cache->store(n, v);
  }
  table.ramsey = ramsey_from_values(table.values);
  return table;
}

}  // namespace ramsey_trails
