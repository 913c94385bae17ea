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

#include "ramsey_trails/enumerator.hpp"
#include "ramsey_trails/lower_bound.hpp"
#include "ramsey_trails/prover.hpp"
#include "ramsey_trails/trail_solver.hpp"

namespace ramsey_trails {

inline constexpr int kSchemaVersion = 1;

// Thrown by the *_from_json readers on syntax errors, missing or mistyped
// fields and values that do not describe a well-formed object.
class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compact JSON, keys in a fixed order; identical inputs give identical bytes.
std::string to_json(const RamseyTable& table);
std::string to_json(const WitnessCertificate& certificate);
std::string to_json(const ProofTrace& trace);
std::string to_json(const TrailResult& result);

RamseyTable table_from_json(const std::string& text);
WitnessCertificate certificate_from_json(const std::string& text);
ProofTrace trace_from_json(const std::string& text);

}  // namespace ramsey_trails
