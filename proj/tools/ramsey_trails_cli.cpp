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

// ramsey-trails: command-line front end to the ramsey-trails C library.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey_trails/ramsey_trails.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

// Environment variable that overrides the value cache directory.
constexpr const char* kCacheEnv = "RAMSEY_TRAILS_CACHE";

struct Failure {
  int exit_code;
  std::string message;
};

void check(rt_status status) {
  if (status == RT_OK) return;
  std::string message = rt_status_name(status);
  if (*rt_last_error() != '\0') message += std::string(": ") + rt_last_error();
  const int code = status == RT_ERR_INTERNAL ? kExitClaimFailed : kExitUsage;
  throw Failure{code, message};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using GraphHandle = Handle<rt_graph, rt_graph_free>;
using TrailHandle = Handle<rt_trail, rt_trail_free>;
using TableHandle = Handle<rt_table, rt_table_free>;
using CertificateHandle = Handle<rt_certificate, rt_certificate_free>;
using TraceHandle = Handle<rt_trace, rt_trace_free>;
using StringHandle = Handle<char, rt_string_free>;

std::string take(char* s) {
  StringHandle owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

Json parse_payload(char* s) { return Json::parse(take(s)); }

std::vector<int> trail_vertices(const rt_trail* t) {
  int count = 0;
  check(rt_trail_vertex_count(t, &count));
  std::vector<int> out(static_cast<std::size_t>(count));
  check(rt_trail_copy_vertices(t, out.data(), out.size()));
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

struct Global {
  std::string format = "human";
  bool timing = false;
  bool json() const { return format == "json"; }
};

class Report {
 public:
  Report(const Global& global, std::string command, Json parameters)
      : global_(global), command_(std::move(command)), parameters_(std::move(parameters)),
        start_(std::chrono::steady_clock::now()) {}

  void emit(Json result, std::optional<Json> extra = std::nullopt) const {
    Json doc;
    doc["schema_version"] = 1;
    doc["command"] = command_;
    doc["parameters"] = parameters_;
    doc["version"] = rt_version();
    if (global_.timing) {
      doc["wall_time_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    doc["result"] = std::move(result);
    if (extra) doc.update(*extra);
    std::cout << doc.dump() << '\n';
  }

 private:
  const Global& global_;
  std::string command_;
  Json parameters_;
  std::chrono::steady_clock::time_point start_;
};

std::optional<std::string> cache_dir() {
  if (const char* dir = std::getenv(kCacheEnv); dir != nullptr && *dir != '\0') return dir;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg != nullptr && *xdg != '\0') {
    return (std::filesystem::path(xdg) / "ramsey-trails").string();
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return (std::filesystem::path(home) / ".local" / "share" / "ramsey-trails").string();
  }
  return std::nullopt;
}

// ---- ramsey ----

struct RamseyArgs {
  int max_n = 7;
  int jobs = 0;
  bool no_cache = false;
};

int run_ramsey(const Global& global, const RamseyArgs& args) {
  Report report(global, "ramsey", {{"max_n", args.max_n}});
  std::optional<std::string> dir;
  if (!args.no_cache) dir = cache_dir();
  rt_table* raw = nullptr;
  check(rt_ramsey_table(args.max_n, args.jobs, dir ? dir->c_str() : nullptr, &raw));
  TableHandle table(raw);

  if (global.json()) {
    char* text = nullptr;
    check(rt_table_to_json(table.get(), &text));
    report.emit(parse_payload(text));
    return kExitOk;
  }
  std::vector<int> ns, values, ks, rs;
  for (int n = 2; n <= args.max_n; ++n) {
    int v = 0;
    check(rt_table_value(table.get(), n, &v));
    ns.push_back(n);
    values.push_back(v);
  }
  int resolved = 0;
  check(rt_table_resolved_up_to(table.get(), &resolved));
  for (int k = 2; k <= resolved; ++k) {
    int r = 0;
    check(rt_table_ramsey(table.get(), k, &r));
    ks.push_back(k);
    rs.push_back(r);
  }
  std::cout << "n         " << join(ns) << '\n'
            << "value(n)  " << join(values) << '\n'
            << "k         " << join(ks) << '\n'
            << "R(T_k)    " << join(rs) << '\n'
            << "R(T_k) for k > " << resolved << ": unresolved at max_n " << args.max_n << '\n';
  return kExitOk;
}

// ---- witness ----

struct WitnessArgs {
  int k = 0;
  bool verify = false;
  std::string evidence = "auto";
};

int run_witness(const Global& global, const WitnessArgs& args) {
  Report report(global, "witness", {{"k", args.k}, {"evidence", args.evidence}, {"verify", args.verify}});
  rt_evidence evidence = RT_EVIDENCE_AUTO;
  if (args.evidence == "exhaustive") evidence = RT_EVIDENCE_EXHAUSTIVE;
  if (args.evidence == "structural") evidence = RT_EVIDENCE_STRUCTURAL;

  rt_certificate* raw = nullptr;
  check(rt_witness(args.k, evidence, &raw));
  CertificateHandle cert(raw);
  char* text = nullptr;
  check(rt_certificate_to_json(cert.get(), &text));
  const Json payload = parse_payload(text);

  std::optional<Json> verification;
  bool valid = true;
  if (args.verify) {
    rt_certificate_status status = RT_CERTIFICATE_MALFORMED;
    char* detail = nullptr;
    check(rt_certificate_check(cert.get(), &status, &detail));
    static const char* const kNames[] = {"valid", "false", "malformed"};
    valid = status == RT_CERTIFICATE_VALID;
    verification = Json{{"verification", {{"status", kNames[status]}, {"detail", take(detail)}}}};
  }

  if (global.json()) {
    report.emit(payload, verification);
  } else {
    std::cout << payload["graph6"].get<std::string>() << '\n' << payload.dump() << '\n';
    if (verification) {
      const Json& v = (*verification)["verification"];
      std::cout << "verification: " << v["status"].get<std::string>();
      if (!v["detail"].get<std::string>().empty()) std::cout << " (" << v["detail"].get<std::string>() << ")";
      std::cout << '\n';
    }
  }
  return valid ? kExitOk : kExitClaimFailed;
}

// ---- graph6 streams ----

// Calls handle(line_number, line, graph) for every non-empty stdin line; reports
// malformed lines on stderr. Returns the number of malformed lines.
template <typename F>
int for_each_input_graph(F&& handle) {
  std::string line;
  int number = 0;
  int bad = 0;
  while (std::getline(std::cin, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rt_graph* raw = nullptr;
    const rt_status status = rt_graph_from_graph6(line.c_str(), &raw);
    if (status != RT_OK) {
      std::cerr << "line " << number << ": " << rt_status_name(status) << ": " << rt_last_error() << '\n';
      ++bad;
      continue;
    }
    GraphHandle g(raw);
    try {
      handle(number, line, g.get());
    } catch (const Failure& f) {
      std::cerr << "line " << number << ": " << f.message << '\n';
      ++bad;
    }
  }
  return bad;
}

struct FindTrailArgs {
  std::optional<int> k;
};

int run_find_trail(const Global& global, const FindTrailArgs& args) {
  int total = 0, validated = 0, fallbacks = 0, invalid = 0;
  const int bad = for_each_input_graph([&](int number, const std::string& text, const rt_graph* g) {
    int order = 0;
    check(rt_graph_order(g, &order));
    if (args.k && order != *args.k) {
      throw Failure{kExitUsage, "graph has " + std::to_string(order) + " vertices, expected " + std::to_string(*args.k)};
    }
    rt_trace* raw = nullptr;
    check(rt_find_trail(g, 0, &raw));
    TraceHandle trace(raw);
    int ok = 0;
    char* message = nullptr;
    check(rt_trace_validate(g, trace.get(), &ok, &message));
    const std::string why = take(message);
    char* json_text = nullptr;
    check(rt_trace_to_json(trace.get(), &json_text));
    const Json payload = parse_payload(json_text);

    ++total;
    if (ok) {
      ++validated;
    } else {
      ++invalid;
      std::cerr << "line " << number << ": trace failed validation: " << why << '\n';
    }
    if (payload["fallback"].get<bool>()) ++fallbacks;

    if (global.json()) {
      Json params = {{"line", number}, {"graph6", text}};
      if (args.k) params["k"] = *args.k;
      Report(global, "find-trail", params).emit(payload);
    } else {
      std::vector<int> vs = payload["vertices"].get<std::vector<int>>();
      std::cout << payload["side"].get<std::string>() << '\t' << join(vs);
      if (payload["fallback"].get<bool>()) std::cout << "\t(fallback)";
      std::cout << '\n';
    }
  });
  std::cerr << "find-trail: " << total << " graphs, " << validated << " validated, " << fallbacks
            << " used fallback, " << bad << " rejected\n";
  if (bad > 0) return kExitUsage;
  return invalid > 0 ? kExitClaimFailed : kExitOk;
}

struct LongestTrailArgs {
  bool complement = false;
};

int run_longest_trail(const Global& global, const LongestTrailArgs& args) {
  const int bad = for_each_input_graph([&](int number, const std::string& text, const rt_graph* g) {
    GraphHandle target;
    if (args.complement) {
      rt_graph* raw = nullptr;
      check(rt_graph_complement(g, &raw));
      target.reset(raw);
    }
    rt_trail* raw = nullptr;
    check(rt_longest_trail(target ? target.get() : g, 1, &raw));
    TrailHandle trail(raw);
    if (global.json()) {
      char* json_text = nullptr;
      check(rt_trail_to_json(trail.get(), &json_text));
      Report(global, "longest-trail", {{"line", number}, {"graph6", text}, {"complement", args.complement}})
          .emit(parse_payload(json_text));
    } else {
      const std::vector<int> vs = trail_vertices(trail.get());
      std::cout << vs.size() << '\t' << join(vs) << '\n';
    }
  });
  return bad > 0 ? kExitUsage : kExitOk;
}

// ---- enumerate ----

struct EnumerateArgs {
  int n = 0;
  int jobs = 0;
};

int run_enumerate(const Global& global, const EnumerateArgs& args) {
  std::vector<std::string> graphs;
  auto visit = [](const char* graph6, void* user) -> int {
    if (user == nullptr) {
      std::cout << graph6 << '\n';
    } else {
      static_cast<std::vector<std::string>*>(user)->emplace_back(graph6);
    }
    return 0;
  };
  if (!global.json()) {
    check(rt_enumerate(args.n, args.jobs, visit, nullptr));
    return kExitOk;
  }
  Report report(global, "enumerate", {{"n", args.n}});
  check(rt_enumerate(args.n, args.jobs, visit, &graphs));
  report.emit({{"n", args.n}, {"count", graphs.size()}, {"graph6", graphs}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ramsey numbers R(T_k, T_k) for trails, with witnesses and proof traces."};
  app.name("ramsey-trails");
  app.set_version_flag("--version", rt_version());
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", global.timing, "Include wall time in JSON reports");

  RamseyArgs ramsey;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "Compute value(n) for n <= max-n and the resulting R(T_k, T_k)");
  ramsey_cmd->add_option("--max-n", ramsey.max_n, "Largest graph order searched (2..9)")
      ->check(CLI::Range(2, 9))
      ->capture_default_str();
  ramsey_cmd->add_option("--jobs", ramsey.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  ramsey_cmd->add_flag("--no-cache", ramsey.no_cache,
                       std::string("Ignore the value cache (location: $") + kCacheEnv +
                           ", else $XDG_DATA_HOME/ramsey-trails or ~/.local/share/ramsey-trails)");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Lower-bound witness graph for R(T_k, T_k)");
  witness_cmd->add_option("--k", witness.k, "Trail length in vertices (k >= 2)")->required()->check(CLI::Range(2, 1 << 30));
  witness_cmd->add_flag("--verify", witness.verify, "Check the certificate");
  witness_cmd->add_option("--evidence", witness.evidence, "Certificate evidence")
      ->check(CLI::IsMember({"auto", "exhaustive", "structural"}))
      ->capture_default_str();

  FindTrailArgs find_trail;
  auto* find_cmd = app.add_subcommand("find-trail", "Trail with k vertices in each stdin graph or its complement");
  find_cmd->add_option("--k", find_trail.k, "Required vertex count of every input graph")->check(CLI::Range(1, 64));

  LongestTrailArgs longest;
  auto* longest_cmd = app.add_subcommand("longest-trail", "Longest trail of each stdin graph");
  longest_cmd->add_flag("--complement", longest.complement, "Search the complement instead");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Print one graph6 line per isomorphism class");
  enumerate_cmd->add_option("--n", enumerate.n, "Graph order (1..9)")->required()->check(CLI::Range(1, 9));
  enumerate_cmd->add_option("--jobs", enumerate.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ramsey_cmd) return run_ramsey(global, ramsey);
    if (*witness_cmd) return run_witness(global, witness);
    if (*find_cmd) return run_find_trail(global, find_trail);
    if (*longest_cmd) return run_longest_trail(global, longest);
    if (*enumerate_cmd) return run_enumerate(global, enumerate);
  } catch (const Failure& f) {
    std::cerr << "ramsey-trails: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
