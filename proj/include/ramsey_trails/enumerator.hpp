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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey_trails/canonical.hpp"
#include "ramsey_trails/graph.hpp"

namespace ramsey_trails {

inline constexpr int kMaxEnumerationOrder = 9;

// jobs <= 0 selects std::thread::hardware_concurrency(). The value of jobs
// never changes a result.
int resolve_jobs(int jobs);

// One canonical code per isomorphism class of graphs on n vertices
// (1 <= n <= 9), ascending. Built by adding a vertex to every class on n-1
// vertices in all 2^(n-1) ways and de-duplicating canonical codes.
std::vector<CanonicalCode> enumerate_codes(int n, int jobs = 0);

std::vector<Graph> enumerate_graphs(int n, int jobs = 0);

// Minimum of t_value over all graphs on n vertices (2 <= n <= 9).
int value(int n, int jobs = 0);

// Same minimum over a given list of classes on n vertices.
int value_over(int n, const std::vector<CanonicalCode>& codes, int jobs = 0);

// On-disk memo of value(n), stamped with the library version.
class ValueCache {
 public:
  explicit ValueCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  static std::string stamp();

  // nullopt when missing, unreadable or stamped by another version.
  std::optional<int> load(int n) const;
  // false when the entry could not be written.
  bool store(int n, int value) const;

 private:
  std::filesystem::path entry(int n) const;

  std::filesystem::path dir_;
};

struct RamseyTable {
  int max_n = 0;
  std::map<int, int> values;  // n -> value(n), 2 <= n <= max_n
  std::map<int, int> ramsey;  // k -> R(T_k, T_k), 2 <= k <= value(max_n)

  // Largest k whose Ramsey number the table determines.
  int resolved_up_to() const { return ramsey.empty() ? 1 : ramsey.rbegin()->first; }
};

// value(n) for 2 <= n <= max_n and the Ramsey numbers they pin down:
// R = n exactly when value(n-1) < k <= value(n), with value(1) = 1.
RamseyTable ramsey_table(int max_n, int jobs = 0, const ValueCache* cache = nullptr);

// Rebuilds the ramsey map from values (n -> value(n)).
std::map<int, int> ramsey_from_values(const std::map<int, int>& values);

}  // namespace ramsey_trails
