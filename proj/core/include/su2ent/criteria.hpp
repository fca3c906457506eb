#pragma once

#include <vector>

#include "su2ent/partial_transpose.hpp"
#include "su2ent/state.hpp"

namespace su2ent {

// Verdicts use strict inequalities with this margin on the decisive scalar;
// ties within the margin never claim entanglement.
inline constexpr double kVerdictTol = 1e-10;

struct CriteriaReport {
  bool ppt_negative = false;
  std::vector<int> negative_tks;       // doubled K with B(K) < -tol
  std::vector<double> witness_values;  // B(K)/(2K+1), ascending K < S1+S2
  bool sufficient_npt = false;
  bool max_neg_necessary_met = false;
  bool reduction_violated = false;
  bool majorization_violated = false;
  bool lur_violated = false;
  double dot_correlator = 0.0;
  double dot_squared_correlator = 0.0;

  bool entangled() const {
    return ppt_negative || sufficient_npt || reduction_violated ||
           majorization_violated || lur_violated;
  }
};

// Witness expectation tr[(P(K) - P(K+1)) rho] with z-axis difference
// projectors; equals B(K)/(2K+1). Valid for |S1-S2| <= K < S1+S2 (doubled
// tk in [|ts1-ts2|, ts1+ts2)); throws outside that range. A negative value
// certifies entanglement.
double witness_expectation(const SU2State& state, int tk);

// <S1.S2> < -S1*S2: sufficient for a negative partial transpose, hence for
// entanglement.
bool sufficient_npt(const SU2State& state, double tol = kVerdictTol);

// The same correlator condition, read as the necessary criterion for the
// partial transpose to have its maximum number of negative eigenvalues.
bool max_negativity_necessary(const SU2State& state, double tol = kVerdictTol);

// Reduction criterion: violated iff A(J)/(2J+1) > 1/(2 max(S1,S2)+1) for
// some J (the two subsystem thresholds nest).
bool reduction_check(const SU2State& state, double tol = kVerdictTol);

// Majorization criterion: prefix sums of the sorted rho spectrum against
// each zero-padded flat reduced spectrum; violation of either returns true.
bool majorization_check(const SU2State& state, double tol = kVerdictTol);

// Local uncertainty relation with M_i = spin components:
// violated iff <S1.S2> < -(S1^2 + S2^2)/2. Alternative operator sets are a
// documented extension point and intentionally not implemented.
bool lur_check(const SU2State& state, double tol = kVerdictTol);

// One-pass evaluation of every criterion. The spectrum is computed by the
// diagonal method and cross-checked against the sum-rule method; a
// disagreement beyond 1e-8 throws std::runtime_error.
CriteriaReport full_report(const SU2State& state, double tol = kVerdictTol);

}  // namespace su2ent
