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

#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey_trails/graph.hpp"

namespace ramsey_trails {

enum class Graph6ErrorKind {
  MalformedHeader,   // empty text, unsupported or out-of-range vertex count
  InvalidCharacter,  // byte outside the printable range 63..126
  LengthMismatch,    // body length disagrees with the vertex count
  NonzeroPadding,    // unused low bits of the final byte are set
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

// graph6 encoding: short form for n <= 62, the 4-byte long-form header
// above that. Upper-triangle bits in column order, six per byte.
std::string encode_graph6(const Graph& g);

// Inverse of encode_graph6. Accepts exactly one graph with no surrounding
// whitespace.
Graph decode_graph6(std::string_view text);

}  // namespace ramsey_trails
