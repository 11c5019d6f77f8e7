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

// Pauli strings and sums over n qubits.
//
// Bit-order convention, used everywhere in the library:
//   * Qubit indices in the API are 0-based; qubit 0 is the LEFTMOST tensor
//     factor, so the label "XZ" means X (x) Z with X acting on qubit 0.
//   * A computational basis index c stores qubit q in bit (n - 1 - q), i.e.
//     |b_0 b_1 ... b_{n-1}> has index sum_q b_q 2^{n-1-q}.
//   * x/z masks use the same bit positions as basis indices.
//   * sigma^z |0> = +|0>.
//
// A PauliString carries an explicit phase i^k and literal letters: a qubit
// with both x and z bits set is a literal sigma^y, not X*Z.

#ifndef LGT_PAULI_HPP
#define LGT_PAULI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgt/linalg.hpp"

namespace lgt {

using Mask = std::uint64_t;

inline constexpr int kMaxPauliQubits = 62;
inline constexpr int kDefaultDenseCap = 14;
inline constexpr double kPruneTolerance = 1e-14;

/// Basis-index bit that holds qubit q of an n-qubit register.
inline Mask qubit_bit(int n_qubits, int q) {
  return Mask{1} << (n_qubits - 1 - q);
}

struct PauliString {
  int n_qubits = 1;
  Mask x = 0;
  Mask z = 0;
  int phase = 0;  // exponent k of the prefactor i^k, kept in [0, 4)

  static PauliString identity(int n_qubits);
  /// Parses letters from {I,X,Y,Z}, qubit 0 first, with an optional sign
  /// prefix among "+", "-", "i", "+i", "-i".
  static PauliString from_label(std::string_view label);
  static PauliString single(int n_qubits, int qubit, char letter);

  char letter(int qubit) const;
  std::string letters() const;
  /// Letters with a sign prefix, e.g. "-iXYZ".
  std::string to_string() const;

  bool is_diagonal() const { return x == 0; }
  int weight() const { return popcount(x | z); }
  cplx prefactor() const;
  /// Same letters with phase 0.
  PauliString bare() const;

  /// Column action: P |col> = amp |row>.
  void apply(std::uint64_t col, std::uint64_t* row, cplx* amp) const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_qubits == b.n_qubits && a.x == b.x && a.z == b.z &&
           a.phase == b.phase;
  }
};

/// Product with exact phase: matrix(c) == matrix(a) * matrix(b).
PauliString pauli_mul(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return pauli_mul(a, b);
}

/// True iff the symplectic inner product of the masks is even.
bool pauli_commutes(const PauliString& a, const PauliString& b);

/// Dense matrix of a single string.
Mat string_to_matrix(const PauliString& p, int cap = kDefaultDenseCap);

class PauliSum {
 public:
  using Key = std::pair<Mask, Mask>;  // (x, z) of the bare string

  explicit PauliSum(int n_qubits = 1);

  static PauliSum identity(int n_qubits, cplx coeff = 1.0);
  static PauliSum from_string(const PauliString& p, cplx coeff = 1.0);
  static PauliSum from_label(std::string_view label, cplx coeff = 1.0);
  static PauliSum single(int n_qubits, int qubit, char letter,
                         cplx coeff = 1.0);
  static PauliSum sigma_z(int n_qubits, int qubit) {
    return single(n_qubits, qubit, 'Z');
  }
  /// (X + iY)/2 = |0><1|.
  static PauliSum sigma_plus(int n_qubits, int qubit);
  /// (X - iY)/2 = |1><0|.
  static PauliSum sigma_minus(int n_qubits, int qubit);

  int n_qubits() const { return n_qubits_; }
  const std::map<Key, cplx>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(const PauliString& p, cplx coeff);
  /// Coefficient of the bare string with these letters.
  cplx coefficient(const PauliString& p) const;
  cplx coefficient(std::string_view letters) const;
  /// Terms as (bare string, coefficient) pairs in deterministic order.
  std::vector<std::pair<PauliString, cplx>> term_list() const;

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx c);

  PauliSum adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_diagonal() const;
  PauliSum diagonal_part() const;
  PauliSum offdiagonal_part() const;
  void prune(double tol = kPruneTolerance);
  /// Largest coefficient magnitude of (this - o).
  double distance(const PauliSum& o) const;

 private:
  int n_qubits_;
  std::map<Key, cplx> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);
PauliSum operator*(cplx c, PauliSum a);
PauliSum operator*(PauliSum a, cplx c);
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Dense 2^n x 2^n matrix. Throws ResourceError above the cap.
Mat sum_to_matrix(const PauliSum& s, int cap = kDefaultDenseCap);

/// Diagonal entries <c|s|c> for every basis state (imaginary parts dropped
/// after a NumericError check).
RVec diagonal_values(const PauliSum& s, int cap = kDefaultDenseCap);

/// Tr(rho * s) without forming the dense matrix of s.
cplx trace_product(const Mat& rho, const PauliSum& s);

/// Real Tr(rho * s). Throws NumericError if |Im| > 1e-10.
double expectation(const Mat& rho, const PauliSum& s);

/// Greedy partition into mutually commuting families; the family of
/// diagonal strings (with the identity) comes first.
std::vector<PauliSum> partition_commuting(const PauliSum& s);

}  // namespace lgt

#endif  // LGT_PAULI_HPP
