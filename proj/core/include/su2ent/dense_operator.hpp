#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace su2ent {

using Complex = std::complex<double>;

// Dense complex operator over the tensor-product basis. Row/column index
// convention: (2S1 - 2m1)/2 * (2S2 + 1) + (2S2 - 2m2)/2, both m descending.
using DenseOperator = Eigen::MatrixXcd;

inline DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  return a * b - b * a;
}

// Max-abs entry norm; the residual norm used throughout.
inline double max_abs(const DenseOperator& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const DenseOperator& a, double tol = 1e-12) {
  return max_abs(a - a.adjoint()) <= tol;
}

// Eigenvalues of a Hermitian operator, ascending.
inline std::vector<double> hermitian_eigenvalues(const DenseOperator& a) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace su2ent
