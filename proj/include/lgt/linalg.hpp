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

#ifndef LGT_LINALG_HPP
#define LGT_LINALG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>

namespace lgt {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

inline int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

/// Largest |A - A^dagger| entry.
template <typename Derived>
typename Derived::RealScalar hermiticity_defect(
    const Eigen::MatrixBase<Derived>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-10) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

/// Spectral norm (largest singular value).
template <typename Derived>
typename Derived::RealScalar operator_norm(
    const Eigen::MatrixBase<Derived>& a) {
  using PlainT = typename Derived::PlainObject;
  Eigen::JacobiSVD<PlainT> svd(a.eval());
  return svd.singularValues()(0);
}

/// min over global phases of ||A - e^{i phi} B||_2, using the phase that
/// aligns Tr(B^dagger A).
template <typename DerivedA, typename DerivedB>
double phase_insensitive_distance(const Eigen::MatrixBase<DerivedA>& a,
                                  const Eigen::MatrixBase<DerivedB>& b) {
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0, 0.0);
  return operator_norm(a - phase * b);
}

/// Shannon entropy -sum p ln p with 0 ln 0 = 0.
template <typename Derived>
typename Derived::Scalar shannon_entropy(const Eigen::MatrixBase<Derived>& p) {
  using S = typename Derived::Scalar;
  S s = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S v = p(i);
    if (v > 0) s -= v * std::log(v);
  }
  return s;
}

/// Binary entropy of a Bernoulli(q) variable, 0 ln 0 = 0.
template <typename Scalar>
Scalar binary_entropy(Scalar q) {
  Scalar s = 0;
  if (q > 0) s -= q * std::log(q);
  if (q < 1) s -= (1 - q) * std::log(1 - q);
  return s;
}

/// Kronecker product of two dense matrices.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace lgt

#endif  // LGT_LINALG_HPP
