#pragma once

#include <cstdint>
#include <vector>

#include "su2ent/angular_momentum.hpp"
#include "su2ent/dense_operator.hpp"
#include "su2ent/twice_spin.hpp"

namespace su2ent {

inline constexpr double kWeightNegativityTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kInvarianceTol = 1e-10;

// SU(2)-invariant bipartite state: rho = sum_J A(J)/(2J+1) Pi_J.
// Weights are indexed by ascending doubled J over the triangle range.
class SU2State {
 public:
  // Validates and stores the weight vector. Weights in [-neg_tol, 0) are
  // clamped to zero; the vector is rescaled to unit sum when |sum-1| is
  // within norm_tol. Throws std::invalid_argument otherwise.
  SU2State(TwiceSpin ts1, TwiceSpin ts2, std::vector<double> weights,
           double norm_tol = kNormalizationTol,
           double neg_tol = kWeightNegativityTol);

  TwiceSpin ts1() const { return ts1_; }
  TwiceSpin ts2() const { return ts2_; }
  int dim() const { return ts1_.dim() * ts2_.dim(); }
  const std::vector<int>& multiplets() const { return tjs_; }
  const std::vector<double>& weights() const { return a_; }
  double weight(int tj) const;

 private:
  TwiceSpin ts1_, ts2_;
  std::vector<int> tjs_;
  std::vector<double> a_;
};

// Moments m_n of a scalar observable, n = 0..2 min(S1,S2); m_0 = 1.
struct MomentVector {
  std::vector<double> values;
};

// Eigenvalue of S1.S2 on the spin-J multiplet:
// c_J = [J(J+1) - S1(S1+1) - S2(S2+1)] / 2.
double dot_eigenvalue(TwiceSpin ts1, TwiceSpin ts2, int tj);

// <(S1.S2)^n>, evaluated per multiplet without dense matrices.
double dot_moment(const SU2State& state, int n);
// <((S1-S2)^2)^n>, evaluated per multiplet.
double diff_moment(const SU2State& state, int n);

MomentVector dot_moments(const SU2State& state);
MomentVector diff_moments(const SU2State& state);

// Dense realization sum_J A(J)/(2J+1) Pi_J.
DenseOperator to_dense(const SU2State& state);

struct Extraction {
  SU2State state;
  // max_a ||[rho, J^a]|| (max-abs entries)
  double invariance_residual;
  // ||rho - to_dense(state)||
  double reconstruction_residual;
};

// Inverse of to_dense via A(J) = tr[Pi_J rho]. Throws when rho has the
// wrong dimension, is not unit trace, or fails SU(2) invariance beyond tol.
Extraction from_dense(const DenseOperator& rho, TwiceSpin ts1, TwiceSpin ts2,
                      double tol = kInvarianceTol);

// Gibbs state of H = coupling * S1.S2 at inverse temperature beta:
// A(J) proportional to (2J+1) exp(-beta*coupling*c_J).
SU2State thermal_pair(TwiceSpin ts1, TwiceSpin ts2, double coupling, double beta);

// Two-site density matrix of a nearest-neighbor pair in the thermal
// isotropic spin-1/2 Heisenberg ring of n_sites sites (2 <= n_sites <= 10;
// n_sites == 2 is the single bond). Product-basis convention of this library,
// site 0 = subsystem 1.
DenseOperator ring_pair_density(int n_sites, double beta);

// ring_pair_density followed by from_dense.
SU2State ring_reduction(int n_sites, double beta);

// Uniform sample from the weight simplex (flat Dirichlet), deterministic
// given the seed. All weights strictly positive.
SU2State random_state(TwiceSpin ts1, TwiceSpin ts2, std::uint64_t seed);

}  // namespace su2ent
