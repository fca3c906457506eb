#pragma once

// Reference constructions for the tests, built from textbook formulas and
// kept independent of the library implementations they check: a ladder
// construction of the coupled basis, dense correlator operators, and a
// kron-assembled Heisenberg ring with its Gibbs state.

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline Eigen::MatrixXd kron_real(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// S- on one spin in the m-descending basis: S-|s,m> = sqrt(s(s+1)-m(m-1)) |s,m-1>.
inline Eigen::MatrixXd single_lowering(int ts) {
  const double s = ts / 2.0;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(ts + 1, ts + 1);
  for (int i = 0; i + 1 <= ts; ++i) {
    const double m = s - i;
    out(i + 1, i) = std::sqrt(s * (s + 1) - m * (m - 1));
  }
  return out;
}

inline Eigen::MatrixXd single_z(int ts) {
  Eigen::VectorXd d(ts + 1);
  for (int i = 0; i <= ts; ++i) d(i) = (ts - 2 * i) / 2.0;
  return d.asDiagonal();
}

// S1.S2 = (S1+ S2- + S1- S2+)/2 + S1z S2z, a real matrix in the product basis.
inline Eigen::MatrixXd dot_operator(int ts1, int ts2) {
  const Eigen::MatrixXd l1 = single_lowering(ts1), l2 = single_lowering(ts2);
  return 0.5 * (kron_real(l1.transpose(), l2) + kron_real(l1, l2.transpose())) +
         kron_real(single_z(ts1), single_z(ts2));
}

inline Eigen::MatrixXd pair_lowering(int ts1, int ts2) {
  const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(ts1 + 1, ts1 + 1);
  const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(ts2 + 1, ts2 + 1);
  return kron_real(single_lowering(ts1), i2) + kron_real(i1, single_lowering(ts2));
}

// Coupled basis by the ladder method: the top multiplet starts from the
// stretched state; each lower highest-weight state is the orthogonal
// complement within its magnetization subspace, signed so the amplitude on
// the largest m1 is positive (Condon-Shortley); columns descend in J, then
// in M within a multiplet.
inline Eigen::MatrixXd ladder_coupled_basis(int ts1, int ts2) {
  const int d = (ts1 + 1) * (ts2 + 1);
  const Eigen::MatrixXd lower = pair_lowering(ts1, ts2);
  Eigen::MatrixXd u(d, d);
  std::map<std::pair<int, int>, Eigen::VectorXd> built;  // (tJ, tM) -> state

  int col = 0;
  for (int tj = ts1 + ts2; tj >= std::abs(ts1 - ts2); tj -= 2) {
    Eigen::VectorXd hw = Eigen::VectorXd::Zero(d);
    if (tj == ts1 + ts2) {
      hw(0) = 1.0;
    } else {
      std::vector<int> rows, row_tm1;
      for (int i1 = 0; i1 <= ts1; ++i1)
        for (int i2 = 0; i2 <= ts2; ++i2) {
          const int tm1 = ts1 - 2 * i1, tm2 = ts2 - 2 * i2;
          if (tm1 + tm2 == tj) {
            rows.push_back(i1 * (ts2 + 1) + i2);
            row_tm1.push_back(tm1);
          }
        }
      const int width = static_cast<int>(rows.size());
      Eigen::MatrixXd prev(width, width - 1);
      int c = 0;
      for (int tjp = ts1 + ts2; tjp > tj; tjp -= 2, ++c) {
        const Eigen::VectorXd& state = built.at({tjp, tj});
        for (int r = 0; r < width; ++r) prev(r, c) = state(rows[static_cast<std::size_t>(r)]);
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(prev.transpose(), Eigen::ComputeFullV);
      Eigen::VectorXd w = svd.matrixV().col(width - 1);
      int best = 0;
      for (int r = 1; r < width; ++r)
        if (row_tm1[static_cast<std::size_t>(r)] > row_tm1[static_cast<std::size_t>(best)])
          best = r;
      if (w(best) < 0) w = -w;
      for (int r = 0; r < width; ++r) hw(rows[static_cast<std::size_t>(r)]) = w(r);
    }

    Eigen::VectorXd v = hw;
    built[{tj, tj}] = v;
    u.col(col++) = v;
    for (int tm = tj - 2; tm >= -tj; tm -= 2) {
      v = lower * v;
      v.normalize();
      built[{tj, tm}] = v;
      u.col(col++) = v;
    }
  }
  return u;
}

// Isotropic spin-1/2 Heisenberg ring assembled from kron chains; site 0 is
// the leftmost factor. A two-site ring is the single bond.
inline Eigen::MatrixXd ring_hamiltonian(int n_sites) {
  if (n_sites < 2) throw std::invalid_argument("ring_hamiltonian: need at least 2 sites");
  const int dim = 1 << n_sites;
  auto site_op = [&](int site, const Eigen::MatrixXd& op) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (int s = 0; s < n_sites; ++s)
      out = kron_real(out, s == site ? op : Eigen::MatrixXd::Identity(2, 2));
    return out;
  };
  const Eigen::MatrixXd sz = single_z(1);
  const Eigen::MatrixXd sm = single_lowering(1);
  const Eigen::MatrixXd sp = sm.transpose();

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const int n_bonds = n_sites == 2 ? 1 : n_sites;
  for (int b = 0; b < n_bonds; ++b) {
    const int i = b, j = (b + 1) % n_sites;
    h += 0.5 * (site_op(i, sp) * site_op(j, sm) + site_op(i, sm) * site_op(j, sp)) +
         site_op(i, sz) * site_op(j, sz);
  }
  return h;
}

inline Eigen::MatrixXd gibbs(const Eigen::MatrixXd& h, double beta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::VectorXd w =
      (-beta * (es.eigenvalues().array() - es.eigenvalues().minCoeff())).exp();
  return es.eigenvectors() * (w / w.sum()).asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace oracle
