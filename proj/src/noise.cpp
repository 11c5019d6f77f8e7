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

#include "lgt/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "lgt/transpile.hpp"

namespace lgt {

void NoiseModel::validate() const {
  if (!(overrotation_frac >= 0 && overrotation_frac < 1))
    throw std::invalid_argument("over-rotation fraction must be in [0, 1)");
  if (!(ms_fidelity > 0.5 && ms_fidelity <= 1))
    throw std::invalid_argument("MS fidelity must be in (0.5, 1]");
}

double depolarizing_strength(double average_fidelity) {
  if (!(average_fidelity > 0.25 && average_fidelity <= 1))
    throw std::invalid_argument("average fidelity out of range");
  return 4.0 * (1.0 - average_fidelity) / 3.0;
}

double depolarizing_average_fidelity(double p) { return 1.0 - 0.75 * p; }

void apply_depolarizing(Mat& rho, int n, int a, int b, double p) {
  if (p == 0) return;
  const char kLetters[] = {'I', 'X', 'Y', 'Z'};
  const Eigen::Index dim = rho.rows();
  // (I/4) (x) Tr_ab(rho) = (1/16) sum_P P rho P over two-qubit Paulis.
  Mat twirl = Mat::Zero(dim, dim);
  std::vector<std::uint64_t> to(dim);
  Vec amp(dim);
  for (char la : kLetters)
    for (char lb : kLetters) {
      std::string s(n, 'I');
      s[a] = la;
      s[b] = lb;
      const PauliString pstr = PauliString::from_label(s);
      for (Eigen::Index c = 0; c < dim; ++c) {
        cplx v;
        pstr.apply(static_cast<std::uint64_t>(c), &to[c], &v);
        amp(c) = v;
      }
      for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
          twirl(to[i], to[j]) += amp(i) * rho(i, j) * std::conj(amp(j));
    }
  rho = (1 - p) * rho + (p / 16.0) * twirl;
}

RVec perturb_angles(const RVec& theta, double frac, std::mt19937_64& rng) {
  RVec out = theta;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double sigma = frac * std::abs(theta(i));
    if (sigma > 0) out(i) = std::normal_distribution<double>(theta(i), sigma)(rng);
  }
  return out;
}

Mat run_noisy_circuit(const Mat& rho, const Circuit& native, double p) {
  const int n = native.n_qubits();
  Mat out = rho;
  for (const auto& g : native.gates) {
    Circuit one;
    one.n_system_qubits = native.n_system_qubits;
    one.n_ancillae = native.n_ancillae;
    one.gates = {g};
    out = conjugate_state(out, one);
    if (g.kind == GateKind::MS) apply_depolarizing(out, n, g.qubits[0], g.qubits[1], p);
  }
  return out;
}

NoisyState apply_noise(Group g, const RVec& theta, const RVec& phi,
                       const NoiseModel& noise, std::mt19937_64& rng) {
  noise.validate();
  NoisyState s;
  s.theta_used = noise.overrotation
                     ? perturb_angles(theta, noise.overrotation_frac, rng)
                     : theta;
  s.phi_used = noise.system_overrotation
                   ? perturb_angles(phi, noise.overrotation_frac, rng)
                   : phi;
  const double p =
      noise.depolarizing ? depolarizing_strength(noise.ms_fidelity) : 0.0;
  const Circuit native =
      transpile_to_native(reduced_system_circuit(g, s.phi_used));
  const Mat rho0 = product_probabilities(s.theta_used).cast<cplx>().asDiagonal();
  const Mat rho = run_noisy_circuit(rho0, native, p);
  s.state.rho = conjugate_state(rho, diagonal_frame(g));
  s.state.regime = Regime::NotThermal;
  return s;
}

}  // namespace lgt
