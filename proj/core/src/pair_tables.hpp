#pragma once

// Internal memoized per-spin-pair tables. Everything here is derived
// exactly from (ts1, ts2), so caching keeps the public operations pure
// while sweeps over 10^4+ states stay fast. Not installed.

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "su2ent/angular_momentum.hpp"
#include "su2ent/dense_operator.hpp"
#include "su2ent/twice_spin.hpp"

namespace su2ent::detail {

// Scalar tables for the diagonal/witness path.
struct CgTables {
  std::vector<int> tjs;       // ascending doubled J
  std::vector<int> diag_tk;   // doubled m1-m2 per product index
  // cg_sq(i, j) = |<m1(i), m2(i) | J_j, m1(i)+m2(i)>|^2
  Eigen::MatrixXd cg_sq;
};

// Dense operator tables for the sum-rule and brute-force paths.
struct DenseTables {
  KOperators k;
  DenseOperator k_squared;
  std::vector<DenseOperator> projectors;  // multiplet projectors, ascending J
  std::vector<DenseOperator> k2n_pt;      // ((K^2)^n)^T2, n = 0..2 min(S1,S2)
  // newton_traces(n, j) = tr[(N_n(K^2))^T2 Pi_J] / (2J+1) with the Newton
  // polynomials N_n(X) = prod_{l<n} (X - x_l) over the ascending nodes
  // x_l = K_l(K_l+1). Contracting with the weights gives Newton-basis
  // right-hand sides, so the sum-rule system solves by back substitution
  // instead of an ill-conditioned monomial Vandermonde factorization.
  // Entries grow to ~1e13 for the largest supported pairs while the solved
  // coefficients are O(1), so the table and the solve stay in long double.
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> newton_traces;
};

std::shared_ptr<const CgTables> cg_tables(TwiceSpin ts1, TwiceSpin ts2);
std::shared_ptr<const DenseTables> dense_tables(TwiceSpin ts1, TwiceSpin ts2);

}  // namespace su2ent::detail
