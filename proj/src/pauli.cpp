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

#include "lgt/pauli.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgt/errors.hpp"

namespace lgt {
namespace {

const cplx kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int mod4(int k) { return ((k % 4) + 4) % 4; }

void check_qubits(int n) {
  if (n < 1 || n > kMaxPauliQubits)
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(n));
}

void check_same_size(int a, int b) {
  if (a != b)
    throw std::invalid_argument("Pauli size mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
}

void check_cap(int n, int cap) {
  if (n > cap)
    throw ResourceError("dense realization of " + std::to_string(n) +
                        " qubits exceeds cap of " + std::to_string(cap));
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
  check_qubits(n_qubits);
  return PauliString{n_qubits, 0, 0, 0};
}

PauliString PauliString::from_label(std::string_view label) {
  int phase = 0;
  if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
    if (label.front() == '-') phase = 2;
    label.remove_prefix(1);
  }
  if (!label.empty() && label.front() == 'i') {
    phase += 1;
    label.remove_prefix(1);
  }
  const int n = static_cast<int>(label.size());
  check_qubits(n);
  PauliString p{n, 0, 0, phase};
  for (int q = 0; q < n; ++q) {
    const Mask b = qubit_bit(n, q);
    switch (label[q]) {
      case 'I': break;
      case 'X': p.x |= b; break;
      case 'Z': p.z |= b; break;
      case 'Y': p.x |= b; p.z |= b; break;
      default:
        throw std::invalid_argument(std::string("bad Pauli letter '") +
                                    label[q] + "'");
    }
  }
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  check_qubits(n_qubits);
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("qubit index out of range");
  std::string s(n_qubits, 'I');
  s[qubit] = letter;
  return from_label(s);
}

char PauliString::letter(int qubit) const {
  const Mask b = qubit_bit(n_qubits, qubit);
  const bool xb = x & b, zb = z & b;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string s(n_qubits, 'I');
  for (int q = 0; q < n_qubits; ++q) s[q] = letter(q);
  return s;
}

std::string PauliString::to_string() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[mod4(phase)] + letters();
}

cplx PauliString::prefactor() const { return kPowI[mod4(phase)]; }

PauliString PauliString::bare() const { return PauliString{n_qubits, x, z, 0}; }

void PauliString::apply(std::uint64_t col, std::uint64_t* row,
                        cplx* amp) const {
  int k = phase + popcount(x & z) + 2 * popcount(z & col);
  *row = col ^ x;
  *amp = kPowI[mod4(k)];
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits, b.n_qubits);
  PauliString c{a.n_qubits, a.x ^ b.x, a.z ^ b.z, 0};
  // Write P = i^{k + |x&z|} X^x Z^z and commute Z^{z_a} past X^{x_b}.
  const int k = a.phase + b.phase + popcount(a.x & a.z) + popcount(b.x & b.z) +
                2 * popcount(a.z & b.x) - popcount(c.x & c.z);
  c.phase = mod4(k);
  return c;
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits, b.n_qubits);
  return ((popcount(a.x & b.z) + popcount(a.z & b.x)) & 1) == 0;
}

Mat string_to_matrix(const PauliString& p, int cap) {
  check_cap(p.n_qubits, cap);
  const std::uint64_t dim = std::uint64_t{1} << p.n_qubits;
  Mat m = Mat::Zero(dim, dim);
  for (std::uint64_t c = 0; c < dim; ++c) {
    std::uint64_t r;
    cplx a;
    p.apply(c, &r, &a);
    m(r, c) = a;
  }
  return m;
}

// ---------------------------------------------------------------------------

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliSum PauliSum::identity(int n_qubits, cplx coeff) {
  return from_string(PauliString::identity(n_qubits), coeff);
}

PauliSum PauliSum::from_string(const PauliString& p, cplx coeff) {
  PauliSum s(p.n_qubits);
  s.add_term(p, coeff);
  return s;
}

PauliSum PauliSum::from_label(std::string_view label, cplx coeff) {
  return from_string(PauliString::from_label(label), coeff);
}

PauliSum PauliSum::single(int n_qubits, int qubit, char letter, cplx coeff) {
  return from_string(PauliString::single(n_qubits, qubit, letter), coeff);
}

PauliSum PauliSum::sigma_plus(int n_qubits, int qubit) {
  return single(n_qubits, qubit, 'X', 0.5) +
         single(n_qubits, qubit, 'Y', cplx(0, 0.5));
}

PauliSum PauliSum::sigma_minus(int n_qubits, int qubit) {
  return single(n_qubits, qubit, 'X', 0.5) +
         single(n_qubits, qubit, 'Y', cplx(0, -0.5));
}

void PauliSum::add_term(const PauliString& p, cplx coeff) {
  check_same_size(n_qubits_, p.n_qubits);
  const cplx c = coeff * p.prefactor();
  auto [it, inserted] = terms_.try_emplace(Key{p.x, p.z}, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
}

cplx PauliSum::coefficient(const PauliString& p) const {
  check_same_size(n_qubits_, p.n_qubits);
  auto it = terms_.find(Key{p.x, p.z});
  return it == terms_.end() ? cplx(0) : it->second;
}

cplx PauliSum::coefficient(std::string_view letters) const {
  return coefficient(PauliString::from_label(letters));
}

std::vector<std::pair<PauliString, cplx>> PauliSum::term_list() const {
  std::vector<std::pair<PauliString, cplx>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_)
    out.emplace_back(PauliString{n_qubits_, key.first, key.second, 0}, c);
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  check_same_size(n_qubits_, o.n_qubits_);
  for (const auto& [key, c] : o.terms_)
    add_term(PauliString{n_qubits_, key.first, key.second, 0}, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  check_same_size(n_qubits_, o.n_qubits_);
  for (const auto& [key, c] : o.terms_)
    add_term(PauliString{n_qubits_, key.first, key.second, 0}, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx c) {
  for (auto& [key, v] : terms_) v *= c;
  prune();
  return *this;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, std::conj(c));
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
    return std::abs(kv.second.imag()) <= tol;
  });
}

bool PauliSum::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.first == 0; });
}

PauliSum PauliSum::diagonal_part() const {
  PauliSum out(n_qubits_);
  for (const auto& [key, c] : terms_)
    if (key.first == 0) out.terms_.emplace(key, c);
  return out;
}

PauliSum PauliSum::offdiagonal_part() const {
  PauliSum out(n_qubits_);
  for (const auto& [key, c] : terms_)
    if (key.first != 0) out.terms_.emplace(key, c);
  return out;
}

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) {
    return std::abs(kv.second) < tol;
  });
}

double PauliSum::distance(const PauliSum& o) const {
  PauliSum d = *this;
  d -= o;
  double m = 0;
  for (const auto& [key, c] : d.terms_) m = std::max(m, std::abs(c));
  return m;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(cplx c, PauliSum a) { return a *= c; }
PauliSum operator*(PauliSum a, cplx c) { return a *= c; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  const int n = a.n_qubits();
  PauliSum out(n);
  for (const auto& [ka, ca] : a.terms()) {
    const PauliString pa{n, ka.first, ka.second, 0};
    for (const auto& [kb, cb] : b.terms()) {
      const PauliString pb{n, kb.first, kb.second, 0};
      out.add_term(pauli_mul(pa, pb), ca * cb);
    }
  }
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return a * b - b * a;
}

Mat sum_to_matrix(const PauliSum& s, int cap) {
  const int n = s.n_qubits();
  check_cap(n, cap);
  const std::uint64_t dim = std::uint64_t{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [key, c] : s.terms()) {
    const PauliString p{n, key.first, key.second, 0};
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t row;
      cplx amp;
      p.apply(col, &row, &amp);
      m(row, col) += c * amp;
    }
  }
  return m;
}

RVec diagonal_values(const PauliSum& s, int cap) {
  const int n = s.n_qubits();
  check_cap(n, cap);
  const std::uint64_t dim = std::uint64_t{1} << n;
  Vec d = Vec::Zero(dim);
  for (const auto& [key, c] : s.terms()) {
    if (key.first != 0) continue;
    for (std::uint64_t col = 0; col < dim; ++col)
      d(col) += (popcount(key.second & col) & 1) ? -c : c;
  }
  if (d.size() > 0 && d.imag().cwiseAbs().maxCoeff() > 1e-10)
    throw NumericError("diagonal of Pauli sum is not real");
  return d.real();
}

cplx trace_product(const Mat& rho, const PauliSum& s) {
  const int n = s.n_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (rho.rows() != static_cast<Eigen::Index>(dim) || rho.cols() != rho.rows())
    throw std::invalid_argument("density matrix dimension mismatch");
  cplx total = 0;
  for (const auto& [key, c] : s.terms()) {
    const PauliString p{n, key.first, key.second, 0};
    cplx acc = 0;
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t row;
      cplx amp;
      p.apply(col, &row, &amp);
      // Tr(rho P) = sum_c rho(c, r) P(r, c)
      acc += rho(col, row) * amp;
    }
    total += c * acc;
  }
  return total;
}

double expectation(const Mat& rho, const PauliSum& s) {
  const cplx v = trace_product(rho, s);
  if (std::abs(v.imag()) > 1e-10)
    throw NumericError("expectation has imaginary part " +
                       std::to_string(v.imag()));
  return v.real();
}

std::vector<PauliSum> partition_commuting(const PauliSum& s) {
  const int n = s.n_qubits();
  PauliSum diag = s.diagonal_part();
  std::vector<PauliSum> rest;
  for (const auto& [key, c] : s.terms()) {
    if (key.first == 0) continue;
    const PauliString p{n, key.first, key.second, 0};
    bool placed = false;
    for (auto& fam : rest) {
      const bool ok = std::all_of(
          fam.terms().begin(), fam.terms().end(), [&](const auto& kv) {
            return pauli_commutes(
                p, PauliString{n, kv.first.first, kv.first.second, 0});
          });
      if (ok) {
        fam.add_term(p, c);
        placed = true;
        break;
      }
    }
    if (!placed) rest.push_back(PauliSum::from_string(p, c));
  }
  std::vector<PauliSum> out;
  if (!diag.empty()) out.push_back(std::move(diag));
  for (auto& f : rest) out.push_back(std::move(f));
  return out;
}

}  // namespace lgt
