#include "su2ent/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pair_tables.hpp"

namespace su2ent {

SU2State::SU2State(TwiceSpin ts1, TwiceSpin ts2, std::vector<double> weights,
                   double norm_tol, double neg_tol)
    : ts1_(ts1), ts2_(ts2), tjs_(multiplet_range(ts1, ts2)), a_(std::move(weights)) {
  if (a_.size() != tjs_.size())
    throw std::invalid_argument("SU2State: weight vector has wrong length");
  for (double& w : a_) {
    if (w < -neg_tol) throw std::invalid_argument("SU2State: negative weight");
    if (w < 0.0) w = 0.0;
  }
  const double sum = std::accumulate(a_.begin(), a_.end(), 0.0);
  if (std::abs(sum - 1.0) > norm_tol)
    throw std::invalid_argument("SU2State: weights do not sum to one");
  for (double& w : a_) w /= sum;
}

double SU2State::weight(int tj) const {
  if (tj < tjs_.front() || tj > tjs_.back() || (tj - tjs_.front()) % 2 != 0)
    throw std::invalid_argument("SU2State::weight: tj outside multiplet range");
  return a_[static_cast<std::size_t>((tj - tjs_.front()) / 2)];
}

double dot_eigenvalue(TwiceSpin ts1, TwiceSpin ts2, int tj) {
  const double jj = tj * (tj + 2) / 4.0;
  return (jj - ts1.casimir() - ts2.casimir()) / 2.0;
}

double dot_moment(const SU2State& state, int n) {
  if (n < 0) throw std::invalid_argument("dot_moment: negative power");
  double out = 0.0;
  const auto& tjs = state.multiplets();
  for (std::size_t j = 0; j < tjs.size(); ++j)
    out += state.weights()[j] *
           std::pow(dot_eigenvalue(state.ts1(), state.ts2(), tjs[j]), n);
  return out;
}

double diff_moment(const SU2State& state, int n) {
  if (n < 0) throw std::invalid_argument("diff_moment: negative power");
  double out = 0.0;
  const double cas = state.ts1().casimir() + state.ts2().casimir();
  const auto& tjs = state.multiplets();
  for (std::size_t j = 0; j < tjs.size(); ++j) {
    const double d = cas - 2.0 * dot_eigenvalue(state.ts1(), state.ts2(), tjs[j]);
    out += state.weights()[j] * std::pow(d, n);
  }
  return out;
}

MomentVector dot_moments(const SU2State& state) {
  MomentVector mv;
  const int n_max = std::min(state.ts1().value, state.ts2().value);
  for (int n = 0; n <= n_max; ++n) mv.values.push_back(dot_moment(state, n));
  return mv;
}

MomentVector diff_moments(const SU2State& state) {
  MomentVector mv;
  const int n_max = std::min(state.ts1().value, state.ts2().value);
  for (int n = 0; n <= n_max; ++n) mv.values.push_back(diff_moment(state, n));
  return mv;
}

DenseOperator to_dense(const SU2State& state) {
  const auto tables = detail::dense_tables(state.ts1(), state.ts2());
  const int d = state.dim();
  DenseOperator rho = DenseOperator::Zero(d, d);
  const auto& tjs = state.multiplets();
  for (std::size_t j = 0; j < tjs.size(); ++j)
    rho += (state.weights()[j] / (tjs[j] + 1)) * tables->projectors[j];
  return rho;
}

Extraction from_dense(const DenseOperator& rho, TwiceSpin ts1, TwiceSpin ts2,
                      double tol) {
  const int d = ts1.dim() * ts2.dim();
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("from_dense: dimension mismatch");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw std::invalid_argument("from_dense: input is not unit trace");

  const auto tables = detail::dense_tables(ts1, ts2);
  const SpinMatrices s1 = spin_matrices(ts1);
  const SpinMatrices s2 = spin_matrices(ts2);
  const DenseOperator i1 = DenseOperator::Identity(ts1.dim(), ts1.dim());
  const DenseOperator i2 = DenseOperator::Identity(ts2.dim(), ts2.dim());
  const DenseOperator total[3] = {kron(s1.sx, i2) + kron(i1, s2.sx),
                                  kron(s1.sy, i2) + kron(i1, s2.sy),
                                  kron(s1.sz, i2) + kron(i1, s2.sz)};
  double invariance = 0.0;
  for (const auto& j : total) invariance = std::max(invariance, max_abs(commutator(rho, j)));
  if (invariance > tol)
    throw std::invalid_argument("from_dense: input is not SU(2)-invariant");

  const auto& tjs = multiplet_range(ts1, ts2);
  std::vector<double> weights(tjs.size());
  for (std::size_t j = 0; j < tjs.size(); ++j)
    weights[j] = (tables->projectors[j] * rho).trace().real();
  SU2State state(ts1, ts2, std::move(weights));
  const double reconstruction = max_abs(rho - to_dense(state));
  return Extraction{std::move(state), invariance, reconstruction};
}

SU2State thermal_pair(TwiceSpin ts1, TwiceSpin ts2, double coupling, double beta) {
  if (beta < 0.0) throw std::invalid_argument("thermal_pair: negative beta");
  const auto tjs = multiplet_range(ts1, ts2);
  std::vector<double> exponents(tjs.size());
  for (std::size_t j = 0; j < tjs.size(); ++j)
    exponents[j] = -beta * coupling * dot_eigenvalue(ts1, ts2, tjs[j]);
  const double shift = *std::max_element(exponents.begin(), exponents.end());
  std::vector<double> weights(tjs.size());
  double z = 0.0;
  for (std::size_t j = 0; j < tjs.size(); ++j) {
    weights[j] = (tjs[j] + 1) * std::exp(exponents[j] - shift);
    z += weights[j];
  }
  for (double& w : weights) w /= z;
  return SU2State(ts1, ts2, std::move(weights));
}

namespace {

// Isotropic spin-1/2 Heisenberg Hamiltonian on n sites with the given bond
// list, assembled in the basis where site 0 is the highest bit and bit 0
// means m = +1/2.
Eigen::MatrixXd heisenberg_hamiltonian(int n_sites,
                                       const std::vector<std::pair<int, int>>& bonds) {
  const int dim = 1 << n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int basis = 0; basis < dim; ++basis) {
    for (const auto& [i, j] : bonds) {
      const int bi = (basis >> (n_sites - 1 - i)) & 1;
      const int bj = (basis >> (n_sites - 1 - j)) & 1;
      const double mi = 0.5 - bi, mj = 0.5 - bj;
      h(basis, basis) += mi * mj;
      if (bi != bj) {
        const int flipped =
            basis ^ (1 << (n_sites - 1 - i)) ^ (1 << (n_sites - 1 - j));
        h(flipped, basis) += 0.5;
      }
    }
  }
  return h;
}

}  // namespace

DenseOperator ring_pair_density(int n_sites, double beta) {
  if (n_sites < 2 || n_sites > 10)
    throw std::invalid_argument("ring_pair_density: n_sites outside [2, 10]");
  if (beta < 0.0) throw std::invalid_argument("ring_pair_density: negative beta");

  std::vector<std::pair<int, int>> bonds;
  if (n_sites == 2) {
    bonds.emplace_back(0, 1);
  } else {
    for (int i = 0; i < n_sites; ++i) bonds.emplace_back(i, (i + 1) % n_sites);
  }
  const Eigen::MatrixXd h = heisenberg_hamiltonian(n_sites, bonds);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::VectorXd shifted = -beta * (es.eigenvalues().array() -
                                           es.eigenvalues().minCoeff());
  const Eigen::VectorXd boltzmann = shifted.array().exp();
  const Eigen::MatrixXd rho_full = es.eigenvectors() * boltzmann.asDiagonal() *
                                   es.eigenvectors().transpose() / boltzmann.sum();

  // Trace out all sites but (0, 1).
  const int rest = 1 << (n_sites - 2);
  DenseOperator pair = DenseOperator::Zero(4, 4);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < rest; ++r)
        pair(p, q) += rho_full(p * rest + r, q * rest + r);
  return pair;
}

SU2State ring_reduction(int n_sites, double beta) {
  return from_dense(ring_pair_density(n_sites, beta), 1, 1).state;
}

namespace {

// Strictly inside (0, 1); keeps the sampler implementation-defined-free.
double uniform01(std::uint64_t raw) { return ((raw >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace

SU2State random_state(TwiceSpin ts1, TwiceSpin ts2, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto tjs = multiplet_range(ts1, ts2);
  std::vector<double> weights(tjs.size());
  double sum = 0.0;
  for (double& w : weights) {
    w = -std::log(uniform01(rng()));
    sum += w;
  }
  for (double& w : weights) w /= sum;
  return SU2State(ts1, ts2, std::move(weights));
}

}  // namespace su2ent
