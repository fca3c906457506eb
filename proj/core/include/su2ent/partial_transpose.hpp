#pragma once

#include <vector>

#include "su2ent/dense_operator.hpp"
#include "su2ent/state.hpp"
#include "su2ent/twice_spin.hpp"

namespace su2ent {

// B(K) grows a genuine negative part only below this; smaller magnitudes
// are treated as round-off.
inline constexpr double kNegativityThreshold = 1e-10;

// Multiplet coefficients of the partial transpose:
// rho^T2 = sum_K B(K)/(2K+1) sum_Kz |K,Kz><K,Kz|, indexed by ascending
// doubled K over the same triangle range as the state weights.
struct PTSpectrum {
  TwiceSpin ts1, ts2;
  std::vector<int> tks;  // ascending doubled K
  std::vector<double> b;

  double b_of(int tk) const;
  // B(S1+S2); never negative beyond round-off.
  double top() const { return b.back(); }
  double min_b() const;
  double sum() const;
  // Expected eigenvalues of the dense rho^T2: B(K)/(2K+1), each 2K+1 times.
  std::vector<double> dense_eigenvalues() const;  // ascending
};

// Transposition of the subsystem-2 indices in the standard product basis.
// Involutive; preserves Hermiticity and trace.
DenseOperator partial_transpose_dense(const DenseOperator& rho, TwiceSpin ts1,
                                      TwiceSpin ts2);

// Method 1: diagonal-element differences,
// B(K)/(2K+1) = sum_{m1-m2=K} <m1,m2|rho|m1,m2> - sum_{m1-m2=K+1} (...),
// with the diagonal evaluated from squared Clebsch-Gordan coefficients.
// No dense matrices are constructed.
PTSpectrum b_from_diagonal(const SU2State& state);

// Method 2: the linear sum-rule system
// sum_K (K(K+1))^n B(K) = tr[((K^2)^n)^T2 rho], n = 0..2 min(S1,S2),
// solved by LU with partial pivoting (row-equilibrated, one refinement pass).
PTSpectrum b_from_sum_rules(const SU2State& state);

// Right-hand side tr[((K^2)^n)^T2 rho] computed densely.
double sum_rule_rhs_dense(const SU2State& state, int n);

// Same right-hand side from the closed-form operator identities, available
// for n <= 3:
//   n=1:  <(S1-S2)^2>
//   n=2:  <((S1-S2)^2)^2> + 4 <S1.S2>
//   n=3:  <((S1-S2)^2)^3> - 32 <(S1.S2)^2>
//         + 4(3(S1(S1+1)+S2(S2+1)) - 4) <S1.S2> + 8 S1(S1+1) S2(S2+1)
double sum_rule_rhs_moments(const SU2State& state, int n);

// Method 3 (brute-force oracle): diagonalize the dense rho^T2 and assign
// each eigenvector to a multiplet through its K^2 expectation; degenerate
// eigenvalue clusters are split by re-diagonalizing K^2 inside the cluster.
// Throws when an expectation sits further than tol from every K(K+1).
PTSpectrum b_from_dense(const SU2State& state, double tol = 1e-6);

// Closed form for S2 = 1/2 (doubled ts2 == 1), S := S1 >= 1/2:
//   B(S-1/2) = [S + 2<S1.S2>] / (2S+1),
//   B(S+1/2) = [S + 1 - 2<S1.S2>] / (2S+1).
PTSpectrum closed_form_half(const SU2State& state);

// Closed form for S2 = 1 (doubled ts2 == 2), S := S1 >= 1, from the first
// two dot-correlator moments.
PTSpectrum closed_form_one(const SU2State& state);

// Same coefficients as closed_form_one, expressed linearly in the state
// weights A(S-1), A(S); algebraically identical.
PTSpectrum b_from_a_linear(const SU2State& state);

// Signed residual of the state-independent sum rule
// sum_L L(L+1)(A(L)+B(L)) = 2(S1(S1+1) + S2(S2+1)).
// Throws when spectrum and state carry different spins.
double combined_sum_rule_residual(const SU2State& state, const PTSpectrum& spectrum);

// prod_{K>L} (K(K+1) - L(L+1)) over the multiplet range; the determinant
// of the sum-rule moment matrix. Strictly positive; 1 for a single multiplet.
double vandermonde_determinant(TwiceSpin ts1, TwiceSpin ts2);

}  // namespace su2ent
