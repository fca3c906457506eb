#include "su2ent/partial_transpose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pair_tables.hpp"

namespace su2ent {

namespace {

double node(int tk) { return tk * (tk + 2) / 4.0; }  // K(K+1)

}  // namespace

double PTSpectrum::b_of(int tk) const {
  for (std::size_t i = 0; i < tks.size(); ++i)
    if (tks[i] == tk) return b[i];
  throw std::invalid_argument("PTSpectrum::b_of: tk outside multiplet range");
}

double PTSpectrum::min_b() const { return *std::min_element(b.begin(), b.end()); }

double PTSpectrum::sum() const { return std::accumulate(b.begin(), b.end(), 0.0); }

std::vector<double> PTSpectrum::dense_eigenvalues() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < tks.size(); ++i)
    out.insert(out.end(), static_cast<std::size_t>(tks[i] + 1), b[i] / (tks[i] + 1));
  std::sort(out.begin(), out.end());
  return out;
}

DenseOperator partial_transpose_dense(const DenseOperator& rho, TwiceSpin ts1,
                                      TwiceSpin ts2) {
  const int d1 = ts1.dim(), d2 = ts2.dim();
  if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2)
    throw std::invalid_argument("partial_transpose_dense: dimension mismatch");
  DenseOperator out(d1 * d2, d1 * d2);
  for (int i1 = 0; i1 < d1; ++i1)
    for (int j1 = 0; j1 < d1; ++j1)
      for (int i2 = 0; i2 < d2; ++i2)
        for (int j2 = 0; j2 < d2; ++j2)
          out(i1 * d2 + j2, j1 * d2 + i2) = rho(i1 * d2 + i2, j1 * d2 + j2);
  return out;
}

PTSpectrum b_from_diagonal(const SU2State& state) {
  const auto tables = detail::cg_tables(state.ts1(), state.ts2());
  const auto& tjs = state.multiplets();
  const int d = state.dim();

  Eigen::VectorXd scaled(static_cast<int>(tjs.size()));
  for (std::size_t j = 0; j < tjs.size(); ++j)
    scaled(static_cast<int>(j)) = state.weights()[j] / (tjs[j] + 1);
  const Eigen::VectorXd diag = tables->cg_sq * scaled;

  // t(tk) = sum of diagonal entries with doubled m1-m2 == tk
  const int tk_max = state.ts1().value + state.ts2().value;
  std::vector<double> t(static_cast<std::size_t>(tk_max) + 2, 0.0);
  for (int i = 0; i < d; ++i)
    if (tables->diag_tk[i] >= 0) t[static_cast<std::size_t>(tables->diag_tk[i])] += diag(i);

  PTSpectrum out{state.ts1(), state.ts2(), tjs, {}};
  out.b.resize(tjs.size());
  for (std::size_t j = 0; j < tjs.size(); ++j) {
    const int tk = tjs[j];
    const double next = tk + 2 <= tk_max ? t[static_cast<std::size_t>(tk) + 2] : 0.0;
    out.b[j] = (tk + 1) * (t[static_cast<std::size_t>(tk)] - next);
  }
  return out;
}

double sum_rule_rhs_dense(const SU2State& state, int n) {
  const int n_max = std::min(state.ts1().value, state.ts2().value);
  if (n < 0 || n > n_max)
    throw std::invalid_argument("sum_rule_rhs_dense: n outside 0..2 min(S1,S2)");
  const auto tables = detail::dense_tables(state.ts1(), state.ts2());
  return (tables->k2n_pt[static_cast<std::size_t>(n)] * to_dense(state))
      .trace()
      .real();
}

double sum_rule_rhs_moments(const SU2State& state, int n) {
  const double cas1 = state.ts1().casimir();
  const double cas2 = state.ts2().casimir();
  switch (n) {
    case 0:
      return 1.0;
    case 1:
      return diff_moment(state, 1);
    case 2:
      return diff_moment(state, 2) + 4.0 * dot_moment(state, 1);
    case 3:
      return diff_moment(state, 3) - 32.0 * dot_moment(state, 2) +
             4.0 * (3.0 * (cas1 + cas2) - 4.0) * dot_moment(state, 1) +
             8.0 * cas1 * cas2;
    default:
      throw std::invalid_argument("sum_rule_rhs_moments: only n <= 3 has a closed form");
  }
}

PTSpectrum b_from_sum_rules(const SU2State& state) {
  const auto tables = detail::dense_tables(state.ts1(), state.ts2());
  const auto& tjs = state.multiplets();
  const int m = static_cast<int>(tjs.size());

  using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  LongVector weights(m);
  for (int j = 0; j < m; ++j) weights(j) = state.weights()[static_cast<std::size_t>(j)];
  const LongVector rhs = tables->newton_traces * weights;

  // Newton-basis coefficient matrix: T(n, k) = prod_{l<n} (x_k - x_l). The
  // nodes ascend, so T is upper triangular with positive diagonal and the
  // system solves by back substitution; the monomial Vandermonde form loses
  // most of its digits beyond ten multiplets.
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> t =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    const long double x = node(tjs[static_cast<std::size_t>(k)]);
    long double p = 1.0L;
    for (int n = 0; n <= k; ++n) {
      t(n, k) = p;
      p *= x - node(tjs[static_cast<std::size_t>(n)]);
    }
  }

  LongVector b(m);
  for (int n = m - 1; n >= 0; --n) {
    long double acc = rhs(n);
    for (int k = n + 1; k < m; ++k) acc -= t(n, k) * b(k);
    b(n) = acc / t(n, n);
  }

  PTSpectrum out{state.ts1(), state.ts2(), tjs, {}};
  out.b.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.b[static_cast<std::size_t>(k)] = static_cast<double>(b(k));
  return out;
}

PTSpectrum b_from_dense(const SU2State& state, double tol) {
  const auto tables = detail::dense_tables(state.ts1(), state.ts2());
  const auto& tjs = state.multiplets();
  const DenseOperator pt = partial_transpose_dense(to_dense(state), state.ts1(), state.ts2());
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(pt);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("b_from_dense: eigensolver failed");
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const DenseOperator& v = es.eigenvectors();
  const int d = state.dim();

  std::vector<int> count(tjs.size(), 0);
  std::vector<double> bsum(tjs.size(), 0.0);
  constexpr double kClusterGap = 1e-8;

  int begin = 0;
  while (begin < d) {
    int end = begin + 1;
    while (end < d && lambda(end) - lambda(end - 1) <= kClusterGap) ++end;
    const int width = end - begin;
    const auto block = v.middleCols(begin, width);

    // Split the (near-)degenerate cluster along K^2.
    const DenseOperator small = block.adjoint() * tables->k_squared * block;
    Eigen::SelfAdjointEigenSolver<DenseOperator> sub(small);
    if (sub.info() != Eigen::Success)
      throw std::runtime_error("b_from_dense: cluster eigensolver failed");
    for (int r = 0; r < width; ++r) {
      const double mu = sub.eigenvalues()(r);
      int found = -1;
      for (std::size_t j = 0; j < tjs.size(); ++j)
        if (std::abs(mu - node(tjs[j])) <= tol) found = static_cast<int>(j);
      if (found < 0)
        throw std::runtime_error(
            "b_from_dense: eigenvector expectation matches no K(K+1)");
      const Eigen::VectorXcd w = sub.eigenvectors().col(r);
      const double value =
          (w.adjoint() * lambda.segment(begin, width).asDiagonal() * w)(0).real();
      ++count[static_cast<std::size_t>(found)];
      bsum[static_cast<std::size_t>(found)] += value;
    }
    begin = end;
  }

  for (std::size_t j = 0; j < tjs.size(); ++j)
    if (count[j] != tjs[j] + 1)
      throw std::runtime_error("b_from_dense: multiplet multiplicity mismatch");

  PTSpectrum out{state.ts1(), state.ts2(), tjs, std::move(bsum)};
  return out;
}

PTSpectrum closed_form_half(const SU2State& state) {
  if (state.ts2().value != 1)
    throw std::invalid_argument("closed_form_half: requires S2 = 1/2");
  const int ts1 = state.ts1().value;
  if (ts1 < 1) throw std::invalid_argument("closed_form_half: requires S1 >= 1/2");
  const double s = ts1 / 2.0;
  const double dot = dot_moment(state, 1);
  PTSpectrum out{state.ts1(), state.ts2(), state.multiplets(), {}};
  out.b = {(s + 2.0 * dot) / (2.0 * s + 1.0), (s + 1.0 - 2.0 * dot) / (2.0 * s + 1.0)};
  return out;
}

PTSpectrum closed_form_one(const SU2State& state) {
  if (state.ts2().value != 2)
    throw std::invalid_argument("closed_form_one: requires S2 = 1");
  const int ts1 = state.ts1().value;
  if (ts1 < 2) throw std::invalid_argument("closed_form_one: requires S1 >= 1");
  const double s = ts1 / 2.0;
  const double dot = dot_moment(state, 1);
  const double dot2 = dot_moment(state, 2);
  PTSpectrum out{state.ts1(), state.ts2(), state.multiplets(), {}};
  out.b = {(-1.0 + dot + dot2 / s) / (2.0 * s + 1.0),
           1.0 - dot2 / (s * (s + 1.0)),
           (1.0 - dot + dot2 / (s + 1.0)) / (2.0 * s + 1.0)};
  return out;
}

PTSpectrum b_from_a_linear(const SU2State& state) {
  if (state.ts2().value != 2)
    throw std::invalid_argument("b_from_a_linear: requires S2 = 1");
  const int ts1 = state.ts1().value;
  if (ts1 < 2) throw std::invalid_argument("b_from_a_linear: requires S1 >= 1");
  const double s = ts1 / 2.0;
  const double a_lo = state.weight(ts1 - 2);
  const double a_mid = state.weight(ts1);
  PTSpectrum out{state.ts1(), state.ts2(), state.multiplets(), {}};
  out.b = {(2.0 * s - 1.0) / (2.0 * s + 1.0) - (s - 1.0) / s * a_lo -
               (2.0 * s - 1.0) / (2.0 * s + 1.0) * (s + 1.0) / s * a_mid,
           1.0 / (s + 1.0) - (2.0 * s + 1.0) / (s * (s + 1.0)) * a_lo +
               (s - 1.0) / s * a_mid,
           1.0 / ((2.0 * s + 1.0) * (s + 1.0)) + (s + 2.0) / (s + 1.0) * a_lo +
               2.0 / (2.0 * s + 1.0) * a_mid};
  return out;
}

double combined_sum_rule_residual(const SU2State& state, const PTSpectrum& spectrum) {
  if (spectrum.ts1 != state.ts1() || spectrum.ts2 != state.ts2())
    throw std::invalid_argument("combined_sum_rule_residual: spin mismatch");
  const auto& tjs = state.multiplets();
  double lhs = 0.0;
  for (std::size_t j = 0; j < tjs.size(); ++j)
    lhs += node(tjs[j]) * (state.weights()[j] + spectrum.b[j]);
  return lhs - 2.0 * (state.ts1().casimir() + state.ts2().casimir());
}

double vandermonde_determinant(TwiceSpin ts1, TwiceSpin ts2) {
  const auto tks = multiplet_range(ts1, ts2);
  double det = 1.0;
  for (std::size_t hi = 1; hi < tks.size(); ++hi)
    for (std::size_t lo = 0; lo < hi; ++lo) det *= node(tks[hi]) - node(tks[lo]);
  return det;
}

}  // namespace su2ent
