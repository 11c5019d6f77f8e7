// Copyright 2026 The lgt-thermal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV serialization, grid parsing and run manifests.

#ifndef LGT_IO_HPP
#define LGT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgt/vqe.hpp"

namespace lgt {

using json = nlohmann::json;

/// Parses "start:stop:count" (inclusive, evenly spaced) or a single number.
std::vector<double> parse_grid(const std::string& spec);

json to_json(const PauliSum& s);
PauliSum pauli_sum_from_json(const json& j);

json to_json(const Gate& g);
json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json to_json(const NoiseModel& n);
json to_json(const VqeConfig& c);
json to_json(const VqeResult& r);
json to_json(const BoxSummary& b);

/// Reads theta and phi of a VqeResult JSON as one parameter vector.
RVec parameters_from_json(const json& j);

/// eval,cost,best columns.
void write_trace_csv(std::ostream& os, const VqeResult& r);

struct RunManifest {
  std::string subcommand;
  json config = json::object();
  std::uint64_t seed = 0;
  std::string version;
  std::vector<std::string> outputs;
  double wall_clock_seconds = 0.0;
};

json to_json(const RunManifest& m);
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

/// Version string compiled into the library.
std::string library_version();

}  // namespace lgt

#endif  // LGT_IO_HPP
