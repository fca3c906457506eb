#include "su2ent/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pair_tables.hpp"

namespace su2ent {

double witness_expectation(const SU2State& state, int tk) {
  const int tk_min = std::abs(state.ts1().value - state.ts2().value);
  const int tk_max = state.ts1().value + state.ts2().value;
  if (tk < tk_min || tk >= tk_max || (tk - tk_min) % 2 != 0)
    throw std::invalid_argument("witness_expectation: tk outside [|S1-S2|, S1+S2)");

  const auto tables = detail::cg_tables(state.ts1(), state.ts2());
  const auto& tjs = state.multiplets();
  Eigen::VectorXd scaled(static_cast<int>(tjs.size()));
  for (std::size_t j = 0; j < tjs.size(); ++j)
    scaled(static_cast<int>(j)) = state.weights()[j] / (tjs[j] + 1);
  const Eigen::VectorXd diag = tables->cg_sq * scaled;

  double value = 0.0;
  for (int i = 0; i < state.dim(); ++i) {
    if (tables->diag_tk[i] == tk) value += diag(i);
    if (tables->diag_tk[i] == tk + 2) value -= diag(i);
  }
  return value;
}

bool sufficient_npt(const SU2State& state, double tol) {
  const double bound = -state.ts1().value * state.ts2().value / 4.0;
  return dot_moment(state, 1) < bound - tol;
}

bool max_negativity_necessary(const SU2State& state, double tol) {
  return sufficient_npt(state, tol);
}

bool reduction_check(const SU2State& state, double tol) {
  const double threshold =
      1.0 / (std::max(state.ts1().value, state.ts2().value) + 1);
  const auto& tjs = state.multiplets();
  for (std::size_t j = 0; j < tjs.size(); ++j)
    if (state.weights()[j] / (tjs[j] + 1) > threshold + tol) return true;
  return false;
}

bool majorization_check(const SU2State& state, double tol) {
  const auto& tjs = state.multiplets();
  std::vector<double> spectrum;
  for (std::size_t j = 0; j < tjs.size(); ++j)
    spectrum.insert(spectrum.end(), static_cast<std::size_t>(tjs[j] + 1),
                    state.weights()[j] / (tjs[j] + 1));
  std::sort(spectrum.begin(), spectrum.end(), std::greater<double>());

  const int d1 = state.ts1().dim(), d2 = state.ts2().dim();
  double prefix = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    prefix += spectrum[k];
    const double flat1 = std::min<double>(static_cast<double>(k + 1), d1) / d1;
    const double flat2 = std::min<double>(static_cast<double>(k + 1), d2) / d2;
    if (prefix > std::min(flat1, flat2) + tol) return true;
  }
  return false;
}

bool lur_check(const SU2State& state, double tol) {
  const double ts1 = state.ts1().value, ts2 = state.ts2().value;
  const double bound = -(ts1 * ts1 + ts2 * ts2) / 8.0;
  return dot_moment(state, 1) < bound - tol;
}

CriteriaReport full_report(const SU2State& state, double tol) {
  const PTSpectrum diag = b_from_diagonal(state);
  const PTSpectrum rules = b_from_sum_rules(state);
  for (std::size_t j = 0; j < diag.b.size(); ++j)
    if (std::abs(diag.b[j] - rules.b[j]) > 1e-8)
      throw std::runtime_error("full_report: spectrum methods disagree");

  CriteriaReport report;
  for (std::size_t j = 0; j < diag.tks.size(); ++j) {
    if (diag.b[j] < -kNegativityThreshold)
      report.negative_tks.push_back(diag.tks[j]);
    if (j + 1 < diag.tks.size())
      report.witness_values.push_back(diag.b[j] / (diag.tks[j] + 1));
  }
  report.ppt_negative = !report.negative_tks.empty();
  report.sufficient_npt = sufficient_npt(state, tol);
  report.max_neg_necessary_met = max_negativity_necessary(state, tol);
  report.reduction_violated = reduction_check(state, tol);
  report.majorization_violated = majorization_check(state, tol);
  report.lur_violated = lur_check(state, tol);
  report.dot_correlator = dot_moment(state, 1);
  report.dot_squared_correlator = dot_moment(state, 2);
  return report;
}

}  // namespace su2ent
