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

#include "ramsey_trails/prover.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "ramsey_trails/trail_solver.hpp"

namespace ramsey_trails {

namespace {

constexpr std::pair<CaseLabel, const char*> kLabelNames[] = {
    {CaseLabel::Base, "Base"},
    {CaseLabel::ExtendEndpoint, "ExtendEndpoint"},
    {CaseLabel::Case1, "Case1"},
    {CaseLabel::Case2, "Case2"},
    {CaseLabel::Case2_1, "Case2-1"},
    {CaseLabel::Case2_2, "Case2-2"},
    {CaseLabel::Case3_1, "Case3-1"},
    {CaseLabel::Case3_2, "Case3-2"},
    {CaseLabel::Case3_3, "Case3-3"},
    {CaseLabel::Case3_3_1, "Case3-3-1"},
    {CaseLabel::Case3_3_1_Lemma7, "Case3-3-1-Lemma7"},
    {CaseLabel::Case3_3_2, "Case3-3-2"},
    {CaseLabel::Case3_3_2_Lemma7, "Case3-3-2-Lemma7"},
    {CaseLabel::Fallback, "Fallback"},
};

// A proof step that did not apply as written.
struct StepFailure {
  CaseLabel label;
  std::string reason;
};

struct Found {
  Side side;  // relative to the graph handed to prove()
  Trail trail;
};

std::vector<Vertex> concat(std::initializer_list<std::span<const Vertex>> parts) {
  std::vector<Vertex> out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string edge_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

// One induction step on a graph H known to contain the (k-1)-vertex trail S.
// Trails found in H are reported as Side::G, trails in co-H as Side::CoG.
class Step {
 public:
  Step(const Graph& h, const Trail& s, std::vector<CaseLabel>& path)
      : h_(h), s_(s), path_(path), k_(h.order()), u1_(s.front()), ul_(s.back()) {
    for (Vertex v : s.vertices()) u_mask_ |= bit(v);
    for (Vertex v = 0; v < k_; ++v) {
      if (u_mask_ & bit(v)) {
        u_.push_back(v);
      } else {
        w_.push_back(v);
      }
    }
    in_s_.fill(0);
    for (const Edge& e : s.edges()) {
      in_s_[e.u] |= bit(e.v);
      in_s_[e.v] |= bit(e.u);
    }
  }

  const std::vector<Vertex>& u() const { return u_; }
  const std::vector<Vertex>& w() const { return w_; }
  Vertex u1() const { return u1_; }
  Vertex ul() const { return ul_; }

  bool in_h(Vertex a, Vertex b) const { return h_.has_edge(a, b); }
  bool in_co(Vertex a, Vertex b) const { return a != b && !h_.has_edge(a, b); }
  bool in_s(Vertex a, Vertex b) const { return (in_s_[a] & bit(b)) != 0; }

  std::optional<Trail> extend_endpoint() const {
    const auto sv = s_.vertices();
    for (Vertex w : w_) {
      if (in_h(u1_, w)) return Trail(concat({std::span<const Vertex>(&w, 1), sv}));
    }
    for (Vertex w : w_) {
      if (in_h(ul_, w)) return Trail(concat({sv, std::span<const Vertex>(&w, 1)}));
    }
    for (Vertex u : u_) {
      if (in_h(u, u1_) && !in_s(u, u1_)) return Trail(concat({std::span<const Vertex>(&u, 1), sv}));
    }
    for (Vertex u : u_) {
      if (in_h(u, ul_) && !in_s(u, ul_)) return Trail(concat({sv, std::span<const Vertex>(&u, 1)}));
    }
    return std::nullopt;
  }

  void verify_conditions() const {
    for (Vertex w : w_) {
      if (!in_co(u1_, w) || !in_co(ul_, w)) {
        throw StepFailure{CaseLabel::ExtendEndpoint, "Condition 1 fails at w=" + std::to_string(w)};
      }
    }
    for (Vertex u : u_) {
      if ((u != u1_ && !in_s(u, u1_) && !in_co(u, u1_)) || (u != ul_ && !in_s(u, ul_) && !in_co(u, ul_))) {
        throw StepFailure{CaseLabel::ExtendEndpoint, "Condition 2 fails at u=" + std::to_string(u)};
      }
    }
  }

  Found dispatch(const std::function<Found(const Graph&)>& recurse) {
    if (static_cast<int>(u_.size()) == k_ - 1) return case1();
    if (u1_ == ul_) return case2();
    return case3(recurse);
  }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  // Euler trail of the given edges, all of which must lie in co-H.
  Trail euler_in_co(const std::vector<Edge>& edges, CaseLabel label) const {
    Graph g(k_);
    for (const Edge& e : edges) {
      if (!in_co(e.u, e.v)) throw StepFailure{label, "edge " + edge_text(e.u, e.v) + " not in the complement"};
      if (g.has_edge(e.u, e.v)) throw StepFailure{label, "edge " + edge_text(e.u, e.v) + " listed twice"};
      g.add_edge(e.u, e.v);
    }
    try {
      return eulerian_trail(g);
    } catch (const NotEulerianError& err) {
      throw StepFailure{label, err.what()};
    }
  }

  Found finish(Side side, Trail trail, CaseLabel label) const {
    if (trail.vertex_count() < k_) {
      throw StepFailure{label, "trail has " + std::to_string(trail.vertex_count()) + " vertices, need " +
                                   std::to_string(k_)};
    }
    path_.push_back(label);
    return {side, trail.prefix(k_)};
  }

  // S is a path: everything except u_2 and u_{k-2} hangs off u_1 and u_{k-1} in co-H.
  Found case1() {
    const Vertex w = w_.at(0);
    std::vector<Edge> edges;
    for (int i = 3; i <= k_ - 3; ++i) {
      edges.push_back(Edge::of(u1_, s_[i - 1]));
      edges.push_back(Edge::of(ul_, s_[i - 1]));
    }
    edges.push_back(Edge::of(u1_, w));
    edges.push_back(Edge::of(ul_, w));
    edges.push_back(Edge::of(u1_, ul_));
    return finish(Side::CoG, euler_in_co(edges, CaseLabel::Case1), CaseLabel::Case1);
  }

  Found case2() {
    // Enter the circuit at u_i from an outside vertex w.
    for (Vertex w : w_) {
      for (int i = 0; i < s_.vertex_count() - 1; ++i) {
        if (in_h(w, s_[i])) {
          Trail rotated = s_.rotated(i);
          return finish(Side::G, Trail(concat({std::span<const Vertex>(&w, 1), rotated.vertices()})),
                        CaseLabel::Case2);
        }
      }
    }
    std::vector<Edge> edges;
    if (u_.size() >= w_.size()) {
      if (w_.size() < 2) throw StepFailure{CaseLabel::Case2_1, "fewer than two vertices outside S"};
      for (Vertex u : u_) {
        edges.push_back(Edge::of(w_[0], u));
        edges.push_back(Edge::of(w_[1], u));
      }
      return finish(Side::CoG, euler_in_co(edges, CaseLabel::Case2_1), CaseLabel::Case2_1);
    }
    if (u_.size() < 2) throw StepFailure{CaseLabel::Case2_2, "circuit with fewer than two vertices"};
    for (Vertex w : w_) {
      edges.push_back(Edge::of(w, u_[0]));
      edges.push_back(Edge::of(w, u_[1]));
    }
    return finish(Side::CoG, euler_in_co(edges, CaseLabel::Case2_2), CaseLabel::Case2_2);
  }

  Found case3(const std::function<Found(const Graph&)>& recurse) {
    const int size_u = static_cast<int>(u_.size());
    if (size_u == k_ - 2) {
      std::vector<Vertex> spare;
      for (Vertex u : u_) {
        if (u != u1_ && u != ul_ && !in_h(u, u1_) && !in_h(u, ul_)) spare.push_back(u);
      }
      if (static_cast<int>(spare.size()) < k_ - 8) {
        throw StepFailure{CaseLabel::Case3_1, "|U'| = " + std::to_string(spare.size()) + " < k-8"};
      }
      std::vector<Edge> edges;
      for (Vertex w : w_) {
        edges.push_back(Edge::of(w, u1_));
        edges.push_back(Edge::of(w, ul_));
      }
      for (Vertex u : spare) {
        edges.push_back(Edge::of(u1_, u));
        edges.push_back(Edge::of(ul_, u));
      }
      return finish(Side::CoG, euler_in_co(edges, CaseLabel::Case3_1), CaseLabel::Case3_1);
    }
    if (size_u <= k_ / 2) {
      std::vector<Edge> edges;
      for (Vertex w : w_) {
        edges.push_back(Edge::of(w, u1_));
        edges.push_back(Edge::of(w, ul_));
      }
      return finish(Side::CoG, euler_in_co(edges, CaseLabel::Case3_2), CaseLabel::Case3_2);
    }
    if (w_.size() < 3) throw StepFailure{CaseLabel::Case3_3, "|W| < 3"};

    path_.push_back(CaseLabel::Case3_3);
    Found inner = recurse(h_.induced(w_));
    std::vector<Vertex> lifted;
    for (Vertex x : inner.trail.vertices()) lifted.push_back(w_[x]);
    const Trail t(std::move(lifted));

    std::vector<Vertex> distinct(t.vertices().begin(), t.vertices().end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) throw StepFailure{CaseLabel::Case3_3, "trail on W has fewer than three vertices"};
    const std::array<Vertex, 3> picked{distinct[0], distinct[1], distinct[2]};

    return inner.side == Side::G ? case3_3_1(t, picked) : case3_3_2(t, picked);
  }

  // For every b, the first two vertices of `a` not adjacent to b in H.
  std::optional<BipartiteInstance> co_bipartite(const std::array<Vertex, 3>& a, const std::vector<Vertex>& b) const {
    BipartiteInstance inst;
    inst.a = a;
    for (Vertex x : b) {
      std::array<Vertex, 2> pair{};
      int found = 0;
      for (Vertex y : a) {
        if (found < 2 && in_co(x, y)) pair[found++] = y;
      }
      if (found < 2) return std::nullopt;
      inst.b.push_back(x);
      inst.links.push_back(pair);
    }
    return inst;
  }

  Found case3_3_1(const Trail& t, const std::array<Vertex, 3>& picked) {
    // Detour from an occurrence of u_i through a stretch of T and back.
    for (int i = 0; i < s_.vertex_count(); ++i) {
      const Vertex u = s_[i];
      for (int x = 0; x < t.vertex_count(); ++x) {
        if (!in_h(u, t[x])) continue;
        for (int y = x + 1; y < t.vertex_count(); ++y) {
          if (t[y] == t[x] || !in_h(u, t[y])) continue;
          auto sv = s_.vertices();
          auto tv = t.vertices();
          Trail detour(concat({sv.subspan(0, static_cast<std::size_t>(i) + 1),
                               tv.subspan(static_cast<std::size_t>(x), static_cast<std::size_t>(y - x + 1)),
                               sv.subspan(static_cast<std::size_t>(i))}));
          return finish(Side::G, std::move(detour), CaseLabel::Case3_3_1);
        }
      }
    }
    auto inst = co_bipartite(picked, u_);
    if (!inst) throw StepFailure{CaseLabel::Case3_3_1_Lemma7, "a vertex of U has two H-neighbours in W'"};
    return finish(Side::CoG, bipartite_trail(*inst), CaseLabel::Case3_3_1_Lemma7);
  }

  // Closed walk on {ux,uy,uz} x picked using H edges: a 4-cycle when two of
  // the u's share two neighbours, otherwise a 6-cycle.
  std::optional<std::vector<Vertex>> figure_cycle(const std::array<Vertex, 3>& us,
                                                  const std::array<Vertex, 3>& picked) const {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        std::vector<Vertex> common;
        for (Vertex a : picked) {
          if (in_h(us[p], a) && in_h(us[q], a)) common.push_back(a);
        }
        if (common.size() >= 2) return std::vector<Vertex>{us[p], common[0], us[q], common[1], us[p]};
      }
    }
    std::array<Vertex, 3> order = picked;
    std::sort(order.begin(), order.end());
    do {
      // order[0] joins us[0]-us[1], order[1] joins us[1]-us[2], order[2] joins us[2]-us[0]
      if (in_h(us[0], order[0]) && in_h(us[1], order[0]) && in_h(us[1], order[1]) && in_h(us[2], order[1]) &&
          in_h(us[2], order[2]) && in_h(us[0], order[2])) {
        return std::vector<Vertex>{us[0], order[0], us[1], order[1], us[2], order[2], us[0]};
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
  }

  Found case3_3_2(const Trail& t, const std::array<Vertex, 3>& picked) {
    std::vector<Vertex> rich;  // inner vertices of U with >= 2 H-neighbours among picked
    for (Vertex u : u_) {
      if (u == u1_ || u == ul_) continue;
      int hits = 0;
      for (Vertex a : picked) hits += in_h(u, a) ? 1 : 0;
      if (hits >= 2) rich.push_back(u);
    }

    if (rich.size() >= 3) {
      auto cycle = figure_cycle({rich[0], rich[1], rich[2]}, picked);
      if (!cycle) throw StepFailure{CaseLabel::Case3_3_2, "no 4- or 6-cycle among the three rich vertices"};
      const Vertex anchor = cycle->front();
      auto sv = s_.vertices();
      auto at = std::find(sv.begin(), sv.end(), anchor);
      const auto i = static_cast<std::size_t>(at - sv.begin());
      std::span<const Vertex> loop(*cycle);
      Trail spliced(concat({sv.subspan(0, i + 1), loop.subspan(1), sv.subspan(i + 1)}));
      return finish(Side::G, std::move(spliced), CaseLabel::Case3_3_2);
    }

    std::vector<Vertex> rest;
    for (Vertex u : u_) {
      if (u != u1_ && u != ul_ && std::find(rich.begin(), rich.end(), u) == rich.end()) rest.push_back(u);
    }
    auto inst = co_bipartite(picked, rest);
    if (!inst) throw StepFailure{CaseLabel::Case3_3_2_Lemma7, "bipartite instance incomplete"};
    const Trail x = bipartite_trail(*inst);
    const Vertex end = x.back();

    Trail t2 = t;
    if (t.front() == end) t2 = t.is_closed() ? t.rotated(1) : t.reversed();
    const Vertex w = t2.front();
    const Vertex last = t2.back();
    for (auto [a, b] : {std::pair{end, u1_}, std::pair{u1_, w}, std::pair{last, ul_}}) {
      if (!in_co(a, b)) {
        throw StepFailure{CaseLabel::Case3_3_2_Lemma7, "connecting edge " + edge_text(a, b) + " not in the complement"};
      }
    }
    std::vector<Vertex> joined(x.vertices().begin(), x.vertices().end());
    joined.push_back(u1_);
    joined.insert(joined.end(), t2.vertices().begin(), t2.vertices().end());
    joined.push_back(ul_);
    return finish(Side::CoG, Trail(std::move(joined)), CaseLabel::Case3_3_2_Lemma7);
  }

  const Graph& h_;
  const Trail& s_;
  std::vector<CaseLabel>& path_;
  int k_;
  Vertex u1_;
  Vertex ul_;
  std::uint64_t u_mask_ = 0;
  std::vector<Vertex> u_;
  std::vector<Vertex> w_;
  std::array<std::uint64_t, kWordVertices> in_s_{};
};

class Prover {
 public:
  explicit Prover(const ProverOptions& options) : options_(options) {}

  Found prove(const Graph& g) {
    const int k = g.order();
    if (k <= std::max(options_.base_threshold, 2)) {
      path_.push_back(CaseLabel::Base);
      return exact(g, CaseLabel::Base);
    }
    try {
      Found found = step(g);
      const Graph& side = found.side == Side::G ? g : complement_of(g);
      if (auto why = trail_violation(side, found.trail)) {
        throw StepFailure{path_.empty() ? CaseLabel::Base : path_.back(), *why};
      }
      return found;
    } catch (const StepFailure& failure) {
      events_.push_back({failure.label, k, failure.reason});
      path_.push_back(CaseLabel::Fallback);
      return exact(g, CaseLabel::Fallback);
    }
  }

  std::vector<CaseLabel> take_path() { return std::move(path_); }
  std::vector<FallbackEvent> take_events() { return std::move(events_); }

 private:
  static Graph complement_of(const Graph& g) { return g.complement(); }

  Found exact(const Graph& g, CaseLabel label) {
    const int k = g.order();
    if (auto t = trail_with_vertices(g, k)) return {Side::G, *t};
    if (auto t = trail_with_vertices(g.complement(), k)) return {Side::CoG, *t};
    throw std::logic_error(std::string(to_string(label)) + ": neither side of a graph on " + std::to_string(k) +
                           " vertices has a trail with " + std::to_string(k) + " vertices");
  }

  Found step(const Graph& g) {
    const int k = g.order();
    std::vector<Vertex> smaller(static_cast<std::size_t>(k - 1));
    for (Vertex v = 0; v < k - 1; ++v) smaller[v] = v;
    const Found sub = prove(g.induced(smaller));

    const Graph h = sub.side == Side::G ? g : g.complement();
    Step step(h, sub.trail, path_);
    Found found;
    if (auto extended = step.extend_endpoint()) {
      path_.push_back(CaseLabel::ExtendEndpoint);
      found = {Side::G, *extended};
    } else {
      if (options_.verify_conditions) step.verify_conditions();
      found = step.dispatch([this](const Graph& sub_graph) { return prove(sub_graph); });
    }
    // Sides so far are relative to h; translate back to g.
    if (sub.side == Side::CoG) found.side = flip(found.side);
    return found;
  }

  ProverOptions options_;
  std::vector<CaseLabel> path_;
  std::vector<FallbackEvent> events_;
};

}  // namespace

const char* to_string(Side s) { return s == Side::G ? "G" : "co-G"; }

std::optional<Side> side_from_string(const std::string& s) {
  if (s == "G") return Side::G;
  if (s == "co-G") return Side::CoG;
  return std::nullopt;
}

const char* to_string(CaseLabel label) {
  for (const auto& [l, name] : kLabelNames) {
    if (l == label) return name;
  }
  return "?";
}

std::optional<CaseLabel> case_label_from_string(const std::string& s) {
  for (const auto& [l, name] : kLabelNames) {
    if (s == name) return l;
  }
  return std::nullopt;
}

ProofTrace find_trail(const Graph& g, const ProverOptions& options) {
  if (!g.fits_word()) throw std::out_of_range("find_trail supports at most 64 vertices");
  Prover prover(options);
  Found found = prover.prove(g);
  ProofTrace trace;
  trace.k = g.order();
  trace.side = found.side;
  trace.trail = std::move(found.trail);
  trace.case_path = prover.take_path();
  trace.fallback_events = prover.take_events();
  trace.fallback_used = !trace.fallback_events.empty();
  return trace;
}

TraceCheck validate_trace(const Graph& g, const ProofTrace& trace) {
  if (trace.k != g.order()) {
    return {false, "trace is for k=" + std::to_string(trace.k) + " but the graph has " +
                       std::to_string(g.order()) + " vertices"};
  }
  if (trace.trail.vertex_count() != trace.k) {
    return {false, "trail has " + std::to_string(trace.trail.vertex_count()) + " vertices, expected " +
                       std::to_string(trace.k)};
  }
  const Graph side = trace.side == Side::G ? g : g.complement();
  if (auto why = trail_violation(side, trace.trail)) return {false, std::string("in ") + to_string(trace.side) + ": " + *why};
  const bool has_fallback =
      std::find(trace.case_path.begin(), trace.case_path.end(), CaseLabel::Fallback) != trace.case_path.end();
  if (has_fallback != trace.fallback_used) {
    return {false, "fallback flag disagrees with the case path"};
  }
  if (trace.case_path.empty()) return {false, "empty case path"};
  return {true, ""};
}

std::optional<std::string> BipartiteInstance::violation() const {
  if (a[0] == a[1] || a[0] == a[2] || a[1] == a[2]) return "A must have three distinct vertices";
  if (links.size() != b.size()) return "every vertex of B needs exactly one pair of A-neighbours";
  std::vector<Vertex> seen(b.begin(), b.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return "B has a repeated vertex";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::find(a.begin(), a.end(), b[i]) != a.end()) return "A and B intersect";
    const auto& [x, y] = links[i];
    if (x == y) return "a vertex of B has a repeated A-neighbour";
    if (std::find(a.begin(), a.end(), x) == a.end() || std::find(a.begin(), a.end(), y) == a.end()) {
      return "a vertex of B is linked outside A";
    }
  }
  return std::nullopt;
}

Trail bipartite_trail(const BipartiteInstance& inst) {
  if (auto why = inst.violation()) throw std::invalid_argument(*why);
  // local ids: A -> 0,1,2; b[i] -> 3 + i
  auto local_a = [&](Vertex v) { return static_cast<Vertex>(std::find(inst.a.begin(), inst.a.end(), v) - inst.a.begin()); };
  Graph g(3 + static_cast<int>(inst.b.size()));
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    g.add_edge(3 + static_cast<Vertex>(i), local_a(inst.links[i][0]));
    g.add_edge(3 + static_cast<Vertex>(i), local_a(inst.links[i][1]));
  }
  Trail local;
  if (inst.b.empty()) {
    local = Trail({0});
  } else {
    // Odd vertices, if any, are in A; otherwise start at the first non-isolated a.
    Vertex start = 0;
    bool any_odd = false;
    for (Vertex v = 0; v < 3; ++v) {
      if (g.degree(v) % 2 == 1) {
        start = v;
        any_odd = true;
        break;
      }
    }
    if (!any_odd) {
      while (g.degree(start) == 0) ++start;
    }
    local = eulerian_trail(g, start);
  }
  std::vector<Vertex> out;
  for (Vertex v : local.vertices()) out.push_back(v < 3 ? inst.a[v] : inst.b[v - 3]);
  return Trail(std::move(out));
}

}  // namespace ramsey_trails
