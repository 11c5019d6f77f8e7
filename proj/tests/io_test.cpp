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


#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "lgt/io.hpp"

namespace lgt {
namespace {

TEST(Io, ParseGrid) {
  EXPECT_EQ(parse_grid("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(parse_grid("2.5"), std::vector<double>{2.5});
  EXPECT_EQ(parse_grid("1:1:1"), std::vector<double>{1.0});
  EXPECT_THROW(parse_grid("0:1"), std::invalid_argument);
  EXPECT_THROW(parse_grid("a:b:c"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0:1:0"), std::invalid_argument);
}

TEST(Io, PauliSumRoundTrip) {
  const PauliSum h = build_hamiltonian({Group::SU3, 2, 0.5, 1.0, 0.3}).full;
  const PauliSum back = pauli_sum_from_json(json::parse(to_json(h).dump()));
  EXPECT_EQ(back.n_qubits(), h.n_qubits());
  EXPECT_LT(back.distance(h), 1e-15);
}

TEST(Io, CircuitRoundTrip) {
  RVec th = RVec::Constant(4, 0.4), phi = RVec::LinSpaced(6, -1, 1);
  Circuit c = build_ansatz(Group::SU2, th, phi);
  c.add({GateKind::PAULI, {0, 3}, 0.2, "YX"});
  const json j = to_json(c);
  EXPECT_EQ(j["ms_gate_count"], c.ms_gate_count());
  const Circuit back = circuit_from_json(json::parse(j.dump()));
  ASSERT_EQ(back.gates.size(), c.gates.size());
  EXPECT_EQ(back.n_ancillae, c.n_ancillae);
  EXPECT_LT(phase_insensitive_distance(circuit_unitary(back), circuit_unitary(c)), 1e-15);
  EXPECT_THROW(circuit_from_json(json{{"gates", 3}}), std::exception);
}

TEST(Io, VqeResultWarmStartRoundTrip) {
  VqeResult r;
  r.config = VqeConfig::defaults(Group::SU2);
  r.theta = RVec::Constant(4, 1.25);
  r.phi = RVec::LinSpaced(6, 0, 1);
  r.free_energy_trace = {1.0, 0.5};
  r.best_trace = {1.0, 0.5};
  const RVec x = parameters_from_json(json::parse(to_json(r).dump()));
  ASSERT_EQ(x.size(), 10);
  EXPECT_EQ(x.head(4), r.theta);
  EXPECT_EQ(x.tail(6), r.phi);
  std::ostringstream os;
  write_trace_csv(os, r);
  EXPECT_EQ(os.str(), "eval,cost,best\n1,1,1\n2,0.5,0.5\n");
}

TEST(Io, FilesAndManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "lgt_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "m.json").string();
  RunManifest m{"ed-sweep", json{{"T_grid", "0:1:2"}}, 7, library_version(), {"a.csv"}, 1.5};
  write_json_file(path, to_json(m));
  const json back = read_json_file(path);
  EXPECT_EQ(back["subcommand"], "ed-sweep");
  EXPECT_EQ(back["seed"], 7);
  EXPECT_EQ(back["outputs"][0], "a.csv");
  EXPECT_FALSE(library_version().empty());
  EXPECT_THROW(read_json_file((dir / "missing.json").string()), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace lgt
