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

#include "ramsey_trails/serialize.hpp"

#include <utility>
#include <vector>

#include "json.hpp"
#include "ramsey_trails/graph6.hpp"

namespace ramsey_trails {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SerializationError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw SerializationError("expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw SerializationError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_number_integer()) throw SerializationError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_string()) throw SerializationError(std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

bool bool_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_boolean()) throw SerializationError(std::string("field \"") + name + "\" must be a boolean");
  return v.get<bool>();
}

Json int_map(const std::map<int, int>& m) {
  Json out = Json::object();
  for (auto [key, val] : m) out[std::to_string(key)] = val;
  return out;
}

std::map<int, int> int_map_from(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_object()) throw SerializationError(std::string("field \"") + name + "\" must be an object");
  std::map<int, int> out;
  for (const auto& [key, val] : v.items()) {
    std::size_t used = 0;
    int parsed = 0;
    try {
      parsed = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size() || !val.is_number_integer()) {
      throw SerializationError(std::string("field \"") + name + "\" must map integers to integers");
    }
    out[parsed] = val.get<int>();
  }
  return out;
}

Json vertices_json(const Trail& t) {
  Json out = Json::array();
  for (Vertex v : t.vertices()) out.push_back(v);
  return out;
}

}  // namespace

std::string to_json(const RamseyTable& table) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["max_n"] = table.max_n;
  j["value"] = int_map(table.values);
  j["ramsey"] = int_map(table.ramsey);
  j["resolved_up_to"] = table.resolved_up_to();
  return j.dump();
}

std::string to_json(const WitnessCertificate& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = c.k;
  j["graph6"] = encode_graph6(c.graph);
  j["evidence"] = to_string(c.evidence);
  j["bound"] = c.bound;
  j["construction"] = c.construction;
  return j.dump();
}

std::string to_json(const ProofTrace& trace) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = trace.k;
  j["side"] = to_string(trace.side);
  j["vertices"] = vertices_json(trace.trail);
  Json path = Json::array();
  for (CaseLabel l : trace.case_path) path.push_back(to_string(l));
  j["case_path"] = std::move(path);
  j["fallback"] = trace.fallback_used;
  Json events = Json::array();
  for (const FallbackEvent& e : trace.fallback_events) {
    events.push_back({{"label", to_string(e.label)}, {"order", e.order}, {"reason", e.reason}});
  }
  j["fallback_events"] = std::move(events);
  return j.dump();
}

std::string to_json(const TrailResult& result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["vertex_count"] = result.best_vertex_count;
  j["vertices"] = vertices_json(result.witness);
  return j.dump();
}

RamseyTable table_from_json(const std::string& text) {
  const Json j = parse(text);
  RamseyTable t;
  t.max_n = int_field(j, "max_n");
  t.values = int_map_from(j, "value");
  t.ramsey = int_map_from(j, "ramsey");
  return t;
}

WitnessCertificate certificate_from_json(const std::string& text) {
  const Json j = parse(text);
  WitnessCertificate c;
  c.k = int_field(j, "k");
  try {
    c.graph = decode_graph6(string_field(j, "graph6"));
  } catch (const Graph6Error& e) {
    throw SerializationError(std::string("field \"graph6\": ") + e.what());
  }
  auto ev = evidence_from_string(string_field(j, "evidence"));
  if (!ev) throw SerializationError("field \"evidence\" must be \"exhaustive\" or \"structural\"");
  c.evidence = *ev;
  c.bound = int_field(j, "bound");
  if (j.contains("construction")) c.construction = string_field(j, "construction");
  return c;
}

ProofTrace trace_from_json(const std::string& text) {
  const Json j = parse(text);
  ProofTrace t;
  t.k = int_field(j, "k");
  auto side = side_from_string(string_field(j, "side"));
  if (!side) throw SerializationError("field \"side\" must be \"G\" or \"co-G\"");
  t.side = *side;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw SerializationError("field \"vertices\" must be an array");
  std::vector<Vertex> vertices;
  for (const Json& v : vs) {
    if (!v.is_number_integer()) throw SerializationError("field \"vertices\" must hold integers");
    vertices.push_back(v.get<Vertex>());
  }
  t.trail = Trail(std::move(vertices));
  const Json& path = field(j, "case_path");
  if (!path.is_array()) throw SerializationError("field \"case_path\" must be an array");
  for (const Json& l : path) {
    auto label = l.is_string() ? case_label_from_string(l.get<std::string>()) : std::nullopt;
    if (!label) throw SerializationError("unknown case label in \"case_path\"");
    t.case_path.push_back(*label);
  }
  t.fallback_used = bool_field(j, "fallback");
  if (j.contains("fallback_events")) {
    const Json& events = j["fallback_events"];
    if (!events.is_array()) throw SerializationError("field \"fallback_events\" must be an array");
    for (const Json& e : events) {
      auto label = case_label_from_string(string_field(e, "label"));
      if (!label) throw SerializationError("unknown case label in \"fallback_events\"");
      t.fallback_events.push_back({*label, int_field(e, "order"), string_field(e, "reason")});
    }
  }
  return t;
}

}  // namespace ramsey_trails
