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

// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
// Usage: acceptance CLI_PATH [--random-per-cell N]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "ramsey_trails/enumerator.hpp"
#include "ramsey_trails/lower_bound.hpp"
#include "ramsey_trails/prover.hpp"
#include "ramsey_trails/trail_solver.hpp"

namespace rt = ramsey_trails;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

int failures = 0;

template <typename F>
void criterion(int id, const char* title, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.summary.c_str(), secs);
  for (const std::string& d : o.details) std::printf("    %s\n", d.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string run_command(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot run " + command);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (status != 0) throw std::runtime_error(command + " exited with status " + std::to_string(status));
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Outcome table_reproduction(const std::string& cli) {
  const std::string out = run_command("'" + cli + "' --format json ramsey --max-n 7 --no-cache");
  const auto doc = nlohmann::json::parse(out);
  std::vector<int> row;
  for (int k = 2; k <= 10; ++k) row.push_back(doc.at("result").at("ramsey").at(std::to_string(k)).get<int>());
  const std::vector<int> expected{2, 3, 4, 5, 6, 6, 6, 7, 7};
  Outcome o;
  o.pass = row == expected;
  o.summary = "R(T_k,T_k) for k=2..10: " + join(row) + (o.pass ? "" : " (expected " + join(expected) + ")");
  std::vector<int> values;
  for (int n = 2; n <= 7; ++n) values.push_back(doc.at("result").at("value").at(std::to_string(n)).get<int>());
  o.details.push_back("value(n) for n=2..7: " + join(values));
  return o;
}

Outcome exhaustive_witnesses() {
  Outcome o;
  o.pass = true;
  int checked = 0;
  for (int k = 2; k <= 30; ++k) {
    const rt::WitnessCertificate w = rt::witness(k, rt::Evidence::Exhaustive);
    const rt::CertificateCheck c = rt::check_certificate(w);
    ++checked;
    if (!c.valid()) {
      o.pass = false;
      o.details.push_back("k=" + std::to_string(k) + ": " + to_string(c.status) + " " + c.detail);
    }
  }
  o.summary = std::to_string(checked) + " certificates, exhaustive check on both sides";
  return o;
}

Outcome structural_witnesses() {
  Outcome o;
  o.pass = true;
  int checked = 0;
  for (int k = 31; k <= 10000; ++k) {
    const rt::WitnessCertificate w = rt::witness(k, rt::Evidence::Structural);
    const rt::CertificateCheck c = rt::check_certificate(w);
    ++checked;
    if (!c.valid()) {
      o.pass = false;
      if (o.details.size() < 20) o.details.push_back("k=" + std::to_string(k) + ": " + c.detail);
    }
  }
  o.summary = std::to_string(checked) + " certificates for k=31..10000";
  return o;
}

Outcome bound_consistency() {
  Outcome o;
  int agree = 0;
  std::vector<std::string> discrepancies;
  for (int k = 7; k <= 10000; ++k) {
    const int from_witness = rt::witness_order(k) + 1;
    const int formula = rt::lb_formula(k);
    if (from_witness == formula) {
      ++agree;
    } else {
      discrepancies.push_back("k=" + std::to_string(k) + ": witness order+1 = " + std::to_string(from_witness) +
                              ", lb_formula = " + std::to_string(formula));
    }
  }
  // Every k is either an agreement or listed; nothing is dropped.
  o.pass = agree + static_cast<int>(discrepancies.size()) == 10000 - 7 + 1;
  o.summary = std::to_string(agree) + " of " + std::to_string(10000 - 7 + 1) + " agree, " +
              std::to_string(discrepancies.size()) + " discrepancies";
  o.details = std::move(discrepancies);
  return o;
}

Outcome exhaustive_upper_bound() {
  Outcome o;
  o.pass = true;
  long total = 0;
  long fallbacks = 0;
  std::vector<std::size_t> per_n;
  for (int n = 2; n <= 8; ++n) {
    const auto graphs = rt::enumerate_graphs(n);
    per_n.push_back(graphs.size());
    for (const rt::Graph& g : graphs) {
      const rt::ProofTrace t = rt::find_trail(g);
      const rt::TraceCheck c = rt::validate_trace(g, t);
      ++total;
      if (t.fallback_used) ++fallbacks;
      if (!c.ok) {
        o.pass = false;
        if (o.details.size() < 20) o.details.push_back("n=" + std::to_string(n) + ": " + c.message);
      }
    }
  }
  o.summary = std::to_string(total) + " classes with 2..8 vertices validated, " + std::to_string(fallbacks) +
              " fallbacks";
  std::string counts;
  for (std::size_t c : per_n) counts += (counts.empty() ? "" : " ") + std::to_string(c);
  o.details.insert(o.details.begin(), "classes per n=2..8: " + counts);
  return o;
}

Outcome random_upper_bound(int per_cell) {
  Outcome o;
  std::mt19937_64 rng(20260101);
  long total = 0, invalid = 0, fallback_graphs = 0;
  std::map<std::string, long> fallback_labels;
  std::map<std::string, long> labels;
  for (int k = 11; k <= 40; ++k) {
    for (double p : {0.1, 0.3, 0.5}) {
      std::bernoulli_distribution coin(p);
      for (int r = 0; r < per_cell; ++r) {
        rt::Graph g(k);
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (coin(rng)) g.add_edge(a, b);
        const rt::ProofTrace t = rt::find_trail(g);
        ++total;
        if (!rt::validate_trace(g, t).ok) ++invalid;
        for (rt::CaseLabel l : t.case_path) ++labels[to_string(l)];
        if (t.fallback_used) {
          ++fallback_graphs;
          for (const rt::FallbackEvent& e : t.fallback_events) {
            ++fallback_labels[std::string(to_string(e.label)) + " at order " + std::to_string(e.order) + ": " +
                              e.reason];
          }
        }
      }
    }
  }
  o.pass = invalid == 0;
  char rate[64];
  std::snprintf(rate, sizeof rate, "%.6f", total == 0 ? 0.0 : static_cast<double>(fallback_graphs) / total);
  o.summary = std::to_string(total) + " graphs (" + std::to_string(per_cell) +
              " per k in 11..40 and p in {0.1,0.3,0.5}), " + std::to_string(invalid) +
              " validation failures, fallback rate " + rate;
  std::string hist;
  for (const auto& [l, c] : labels) hist += (hist.empty() ? "" : ", ") + l + "=" + std::to_string(c);
  o.details.push_back("case labels taken: " + hist);
  for (const auto& [l, c] : fallback_labels) o.details.push_back("fallback " + l + " (x" + std::to_string(c) + ")");
  return o;
}

Outcome lemma7_exhaustive() {
  Outcome o;
  o.pass = true;
  const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  long instances = 0;
  for (int m = 0; m <= 7; ++m) {
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      rt::BipartiteInstance inst;
      inst.a = {0, 1, 2};
      std::set<std::pair<int, int>> expected;
      int c = code;
      for (int i = 0; i < m; ++i, c /= 3) {
        inst.b.push_back(3 + i);
        inst.links.push_back(pairs[c % 3]);
        expected.insert({pairs[c % 3][0], 3 + i});
        expected.insert({pairs[c % 3][1], 3 + i});
      }
      const rt::Trail t = rt::bipartite_trail(inst);
      ++instances;
      std::set<std::pair<int, int>> used;
      bool ok = t.edge_count() == 2 * m && t.front() <= 2 && t.back() <= 2;
      for (std::size_t i = 0; ok && i + 1 < t.vertices().size(); ++i) {
        const int a = std::min(t[i], t[i + 1]), b = std::max(t[i], t[i + 1]);
        ok = expected.count({a, b}) == 1 && used.insert({a, b}).second;
      }
      if (!ok) {
        o.pass = false;
        if (o.details.size() < 20) o.details.push_back("|B|=" + std::to_string(m) + " code " + std::to_string(code));
      }
    }
  }
  o.summary = std::to_string(instances) + " instances with |B| <= 7";
  return o;
}

Outcome symmetry_and_monotonicity() {
  Outcome o;
  o.pass = true;
  long graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::pair_count(n)); ++mask) {
      const rt::Graph g = oracle::labelled_graph(n, mask);
      const rt::Graph c = g.complement();
      ++graphs;
      const int exact = rt::longest_trail(g).best_vertex_count;
      const int naive = oracle::longest_trail(g);
      if (rt::t_value(g) != rt::t_value(c) || exact != naive) {
        o.pass = false;
        if (o.details.size() < 20) o.details.push_back("mismatch on " + oracle::graph6(g));
      }
    }
  }
  std::vector<int> values;
  for (int n = 2; n <= 8; ++n) values.push_back(rt::value(n));
  const bool monotone = std::is_sorted(values.begin(), values.end());
  o.pass = o.pass && monotone;
  o.summary = std::to_string(graphs) + " labelled graphs on <= 6 vertices: t(G)=t(co-G) and solver = naive search; "
              "value(2..8) = " + join(values) + (monotone ? " non-decreasing" : " NOT monotone");
  return o;
}

Outcome cross_formula() {
  const rt::RamseyTable table = rt::ramsey_table(8);
  Outcome o;
  o.pass = !table.ramsey.empty();
  for (const auto& [k, r] : table.ramsey) {
    const int bound = std::min(k, 3 * k / 2 - 1);
    const bool ok = r <= bound;
    o.details.push_back("k=" + std::to_string(k) + ": R=" + std::to_string(r) + " <= " + std::to_string(bound) +
                        (ok ? "" : "  VIOLATED"));
    o.pass = o.pass && ok;
  }
  o.summary = "k=2.." + std::to_string(table.resolved_up_to()) + " from value(2..8)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s CLI_PATH [--random-per-cell N]\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  int per_cell = 10000;
  for (int i = 2; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--random-per-cell") per_cell = std::atoi(argv[i + 1]);
  }

  criterion(1, "Table 1 reproduction", [&] { return table_reproduction(cli); });
  criterion(2, "witness soundness, exhaustive", exhaustive_witnesses);
  criterion(3, "witness soundness, structural", structural_witnesses);
  criterion(4, "lower-bound consistency", bound_consistency);
  criterion(5, "upper bound, exhaustive", exhaustive_upper_bound);
  criterion(6, "upper bound, randomized", [&] { return random_upper_bound(per_cell); });
  criterion(7, "bipartite trail lemma, exhaustive", lemma7_exhaustive);
  criterion(8, "symmetry and monotonicity", symmetry_and_monotonicity);
  criterion(9, "cross-formula check", cross_formula);

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
