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

#include "ramsey_trails/graph6.hpp"

#include <cstdint>

namespace ramsey_trails {

namespace {

constexpr int kShortFormMax = 62;
constexpr int kLongFormMax = 258047;

std::size_t body_length(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kShortFormMax) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error(Graph6ErrorKind::MalformedHeader, "graph6: empty input");
  for (char c : text) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Graph6Error(Graph6ErrorKind::InvalidCharacter,
                        "graph6: byte " + std::to_string(b) + " outside 63..126");
    }
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error(Graph6ErrorKind::MalformedHeader, "graph6: 8-byte header not supported");
    }
    if (text.size() < 4) {
      throw Graph6Error(Graph6ErrorKind::MalformedHeader, "graph6: truncated long-form header");
    }
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    if (n <= kShortFormMax || n > kLongFormMax) {
      throw Graph6Error(Graph6ErrorKind::MalformedHeader,
                        "graph6: long-form header with vertex count " + std::to_string(n));
    }
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) {
    throw Graph6Error(Graph6ErrorKind::MalformedHeader,
                      "graph6: vertex count " + std::to_string(n) + " unsupported");
  }
  std::string_view body = text.substr(pos);
  if (body.size() != body_length(n)) {
    throw Graph6Error(Graph6ErrorKind::LengthMismatch,
                      "graph6: expected " + std::to_string(body_length(n)) + " data bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(body.size()));
  }
  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t padding = body.size() * 6 - total_bits;
  if (padding > 0) {
    int last = body.back() - 63;
    if ((last & ((1 << padding) - 1)) != 0) {
      throw Graph6Error(Graph6ErrorKind::NonzeroPadding, "graph6: nonzero padding bits");
    }
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = body[bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace ramsey_trails
