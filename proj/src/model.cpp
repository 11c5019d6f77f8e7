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

#include "lgt/model.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lgt {
namespace {

// Operator factory with 1-based qubit labels, so the builders below read
// like the lattice formulas they implement.
class Ops {
 public:
  explicit Ops(int n) : n_(n) {}
  PauliSum one() const { return PauliSum::identity(n_); }
  PauliSum zero() const { return PauliSum(n_); }
  PauliSum z(int q) const { return PauliSum::sigma_z(n_, q - 1); }
  PauliSum sp(int q) const { return PauliSum::sigma_plus(n_, q - 1); }
  PauliSum sm(int q) const { return PauliSum::sigma_minus(n_, q - 1); }
  PauliSum hc(const PauliSum& a) const { return a + a.adjoint(); }

 private:
  int n_;
};

double stagger(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

int num_colors(Group g) { return g == Group::SU2 ? 2 : 3; }

std::string group_name(Group g) { return g == Group::SU2 ? "su2" : "su3"; }

Group parse_group(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(c));
  if (l == "su2") return Group::SU2;
  if (l == "su3") return Group::SU3;
  throw std::invalid_argument("unknown group '" + s + "'");
}

int max_sites(Group g) { return g == Group::SU2 ? 7 : 4; }

void ModelParams::validate() const {
  if (n_sites < 2 || n_sites > max_sites(group))
    throw std::invalid_argument("n_sites=" + std::to_string(n_sites) +
                                " out of range for " + group_name(group));
  if (!(coupling_x > 0) || !std::isfinite(coupling_x))
    throw std::invalid_argument("coupling x must be positive");
  if (!std::isfinite(mass) || !std::isfinite(chem_potential))
    throw std::invalid_argument("mass and chemical potential must be finite");
}

HamiltonianTerms build_su2_terms(const ModelParams& p) {
  if (p.group != Group::SU2) throw std::invalid_argument("expected SU2 params");
  p.validate();
  const int N = p.n_sites;
  const Ops o(2 * N);
  HamiltonianTerms t{o.zero(), o.zero(), o.zero(), o.zero()};

  for (int n = 1; n <= N - 1; ++n) {
    t.kinetic += o.hc(o.sp(2 * n - 1) * o.z(2 * n) * o.sm(2 * n + 1));
    t.kinetic += o.hc(o.sp(2 * n) * o.z(2 * n + 1) * o.sm(2 * n + 2));
  }
  t.kinetic *= -0.5;

  for (int n = 1; n <= N; ++n)
    t.mass += cplx(stagger(n) / 2) * (o.z(2 * n - 1) + o.z(2 * n)) + o.one();

  for (int n = 1; n <= N - 1; ++n)
    t.electric += cplx(3.0 / 8.0 * (N - n)) *
                  (o.one() - o.z(2 * n - 1) * o.z(2 * n));
  for (int n = 1; n <= N - 2; ++n) {
    for (int m = n + 1; m <= N - 1; ++m) {
      const cplx w = N - m;
      t.electric += (w / 8.0) * (o.z(2 * n - 1) - o.z(2 * n)) *
                    (o.z(2 * m - 1) - o.z(2 * m));
      t.electric += w * o.hc(o.sp(2 * n - 1) * o.sm(2 * n) * o.sp(2 * m) *
                             o.sm(2 * m - 1));
    }
  }

  for (int q = 1; q <= 2 * N; ++q) t.chem += o.z(q);
  t.chem *= 0.25;
  return t;
}

HamiltonianTerms build_su3_terms(const ModelParams& p) {
  if (p.group != Group::SU3) throw std::invalid_argument("expected SU3 params");
  p.validate();
  const int N = p.n_sites;
  const Ops o(3 * N);
  HamiltonianTerms t{o.zero(), o.zero(), o.zero(), o.zero()};

  for (int n = 1; n <= N - 1; ++n) {
    const int a = 3 * n;
    PauliSum hop = o.sp(a - 2) * o.z(a - 1) * o.z(a) * o.sm(a + 1);
    hop -= o.sp(a - 1) * o.z(a) * o.z(a + 1) * o.sm(a + 2);
    hop += o.sp(a) * o.z(a + 1) * o.z(a + 2) * o.sm(a + 3);
    t.kinetic += cplx(stagger(n)) * o.hc(hop);
  }
  t.kinetic *= 0.5;

  for (int n = 1; n <= N; ++n) {
    const int a = 3 * n;
    t.mass += cplx(stagger(n)) * (o.z(a - 2) + o.z(a - 1) + o.z(a)) +
              cplx(3.0) * o.one();
  }
  t.mass *= 0.5;

  for (int n = 1; n <= N - 1; ++n) {
    const int a = 3 * n;
    t.electric += cplx((N - n) / 3.0) *
                  (cplx(3.0) * o.one() - o.z(a - 2) * o.z(a - 1) -
                   o.z(a - 2) * o.z(a) - o.z(a - 1) * o.z(a));
  }
  for (int n = 1; n <= N - 2; ++n) {
    for (int m = n + 1; m <= N - 1; ++m) {
      const int a = 3 * n, b = 3 * m;
      const cplx w = N - m;
      PauliSum pair = o.sp(a - 2) * o.sm(a - 1) * o.sp(b - 1) * o.sm(b - 2);
      pair += o.sp(a - 1) * o.sm(a) * o.sm(b - 1) * o.sp(b);
      t.electric += w * cplx(stagger(n + m)) * o.hc(pair);
      t.electric += w * o.hc(o.sp(a - 2) * o.z(a - 1) * o.sm(a) * o.sm(b - 2) *
                             o.z(b - 1) * o.sp(b));
      const cplx c = -w / 12.0;
      t.electric += c * o.z(b - 2) *
                    (o.z(a - 1) + o.z(a) - cplx(2.0) * o.z(a - 2));
      t.electric += c * o.z(b - 1) *
                    (o.z(a) + o.z(a - 2) - cplx(2.0) * o.z(a - 1));
      t.electric += c * o.z(b) *
                    (o.z(a - 2) + o.z(a - 1) - cplx(2.0) * o.z(a));
    }
  }

  for (int q = 1; q <= 3 * N; ++q) t.chem += o.z(q);
  t.chem *= 1.0 / 6.0;
  return t;
}

HamiltonianTerms build_terms(const ModelParams& p) {
  return p.group == Group::SU2 ? build_su2_terms(p) : build_su3_terms(p);
}

QubitHamiltonian assemble(const ModelParams& p, const HamiltonianTerms& t) {
  PauliSum full = t.kinetic;
  full += cplx(p.mass) * t.mass;
  full += cplx(1.0 / (2.0 * p.coupling_x)) * t.electric;
  full -= cplx(p.chem_potential) * t.chem;
  full.prune();
  QubitHamiltonian h{p, full.diagonal_part(), full.offdiagonal_part(), full};
  return h;
}

QubitHamiltonian build_su2_hamiltonian(const ModelParams& p) {
  return assemble(p, build_su2_terms(p));
}

QubitHamiltonian build_su3_hamiltonian(const ModelParams& p) {
  return assemble(p, build_su3_terms(p));
}

QubitHamiltonian build_hamiltonian(const ModelParams& p) {
  return assemble(p, build_terms(p));
}

PauliSum build_chiral(const ModelParams& p) {
  p.validate();
  const int nc = num_colors(p.group);
  const Ops o(p.n_qubits());
  PauliSum chi = o.zero();
  for (int n = 1; n <= p.n_sites; ++n)
    for (int c = 1; c <= nc; ++c)
      chi += cplx(stagger(n) / 2) * o.z(nc * (n - 1) + c);
  return chi;
}

PauliSum build_baryon_number(const ModelParams& p) {
  return build_terms(p).chem;
}

std::vector<PauliSum> site_charges(const ModelParams& p, int site) {
  p.validate();
  if (site < 0 || site >= p.n_sites)
    throw std::invalid_argument("site index out of range");
  const Ops o(p.n_qubits());
  const int n = site + 1;
  const cplx i = kI;
  if (p.group == Group::SU2) {
    const int a = 2 * n - 1, b = 2 * n;
    PauliSum qx = 0.5 * o.hc(o.sp(a) * o.sm(b));
    PauliSum y = o.sm(a) * o.sp(b);
    PauliSum qy = (i / 2.0) * (y - y.adjoint());
    PauliSum qz = 0.25 * (o.z(a) - o.z(b));
    return {qx, qy, qz};
  }
  const int a = 3 * n - 2, b = 3 * n - 1, c = 3 * n;
  const cplx s = stagger(n);
  auto anti = [&](const PauliSum& t) { return t - t.adjoint(); };
  std::vector<PauliSum> q;
  q.push_back((s / 2.0) * o.hc(o.sp(a) * o.sm(b)));
  q.push_back((i * s / 2.0) * anti(o.sp(b) * o.sm(a)));
  q.push_back(0.25 * (o.z(a) - o.z(b)));
  q.push_back(-0.5 * o.hc(o.sp(a) * o.z(b) * o.sm(c)));
  q.push_back((i / 2.0) * anti(o.sp(a) * o.z(b) * o.sm(c)));
  q.push_back((s / 2.0) * o.hc(o.sp(b) * o.sm(c)));
  q.push_back((i * s / 2.0) * anti(o.sp(c) * o.sm(b)));
  q.push_back(cplx(1.0 / (4.0 * std::sqrt(3.0))) *
              (o.z(a) + o.z(b) - 2.0 * o.z(c)));
  return q;
}

ChargeSet build_charges(const ModelParams& p) {
  p.validate();
  ChargeSet cs;
  cs.group = p.group;
  for (int s = 0; s < p.n_sites; ++s) {
    auto q = site_charges(p, s);
    if (cs.charges.empty()) {
      cs.charges = std::move(q);
    } else {
      for (std::size_t a = 0; a < q.size(); ++a) cs.charges[a] += q[a];
    }
  }
  cs.cartan_indices = p.group == Group::SU2 ? std::vector<int>{2}
                                            : std::vector<int>{2, 7};
  return cs;
}

PauliSum electric_from_charges(const ModelParams& p) {
  p.validate();
  std::vector<PauliSum> running;
  PauliSum out(p.n_qubits());
  for (int k = 0; k < p.n_sites - 1; ++k) {
    auto q = site_charges(p, k);
    if (running.empty()) {
      running = std::move(q);
    } else {
      for (std::size_t a = 0; a < q.size(); ++a) running[a] += q[a];
    }
    for (const auto& r : running) out += r * r;
  }
  out.prune(1e-12);
  return out;
}

std::uint64_t strong_coupling_vacuum(const ModelParams& p) {
  const HamiltonianTerms t = build_terms(p);
  const RVec elec = diagonal_values(t.electric);
  const RVec mass = diagonal_values(t.mass);
  std::uint64_t best = 0;
  for (std::uint64_t c = 1; c < static_cast<std::uint64_t>(elec.size()); ++c) {
    const double de = elec(c) - elec(best);
    if (de < -1e-12 || (std::abs(de) <= 1e-12 && mass(c) < mass(best) - 1e-12))
      best = c;
  }
  return best;
}

Occupation count_occupation(const ModelParams& p, std::uint64_t basis_index) {
  const int nc = num_colors(p.group);
  const int n = p.n_qubits();
  Occupation occ;
  for (int s = 0; s < p.n_sites; ++s) {
    for (int c = 0; c < nc; ++c) {
      const bool occupied = (basis_index & qubit_bit(n, s * nc + c)) == 0;
      if (is_matter_site(s) && occupied) ++occ.quarks;
      if (!is_matter_site(s) && !occupied) ++occ.antiquarks;
    }
  }
  return occ;
}

}  // namespace lgt
