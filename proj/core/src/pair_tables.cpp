#include "pair_tables.hpp"

#include <mutex>
#include <unordered_map>

#include "su2ent/partial_transpose.hpp"

namespace su2ent::detail {

namespace {

std::uint64_t key_of(TwiceSpin ts1, TwiceSpin ts2) {
  return (static_cast<std::uint64_t>(ts1.value) << 32) |
         static_cast<std::uint32_t>(ts2.value);
}

template <typename T, typename Build>
std::shared_ptr<const T> memoized(TwiceSpin ts1, TwiceSpin ts2, Build build) {
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, std::shared_ptr<const T>> cache;
  const std::uint64_t key = key_of(ts1, ts2);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = std::make_shared<const T>(build());
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

std::shared_ptr<const CgTables> cg_tables(TwiceSpin ts1, TwiceSpin ts2) {
  return memoized<CgTables>(ts1, ts2, [&] {
    CgTables t;
    t.tjs = multiplet_range(ts1, ts2);
    const int d2 = ts2.dim();
    const int d = ts1.dim() * d2;
    t.diag_tk.resize(d);
    t.cg_sq = Eigen::MatrixXd::Zero(d, static_cast<int>(t.tjs.size()));
    for (int i = 0; i < d; ++i) {
      const int tm1 = ts1.value - 2 * (i / d2);
      const int tm2 = ts2.value - 2 * (i % d2);
      t.diag_tk[i] = tm1 - tm2;
      const int tm = tm1 + tm2;
      for (std::size_t j = 0; j < t.tjs.size(); ++j) {
        if (std::abs(tm) > t.tjs[j]) continue;
        const double c = clebsch_gordan(ts1.value, ts2.value, tm1, tm2, t.tjs[j], tm);
        t.cg_sq(i, static_cast<int>(j)) = c * c;
      }
    }
    return t;
  });
}

std::shared_ptr<const DenseTables> dense_tables(TwiceSpin ts1, TwiceSpin ts2) {
  return memoized<DenseTables>(ts1, ts2, [&] {
    DenseTables t;
    t.k = k_operators(ts1, ts2);
    t.k_squared = t.k.squared();

    const DenseOperator u = coupled_basis(ts1, ts2);
    const std::vector<int> tjs = multiplet_range(ts1, ts2);
    int offset = 0;
    t.projectors.resize(tjs.size());
    for (auto it = tjs.rbegin(); it != tjs.rend(); ++it) {
      const int tj = *it;
      const auto block = u.middleCols(offset, tj + 1);
      t.projectors[static_cast<std::size_t>(
          (tj - tjs.front()) / 2)] = block * block.adjoint();
      offset += tj + 1;
    }

    const int n_max = std::min(ts1.value, ts2.value);
    const int d = ts1.dim() * ts2.dim();
    t.k2n_pt.reserve(static_cast<std::size_t>(n_max) + 1);
    DenseOperator power = DenseOperator::Identity(d, d);
    t.k2n_pt.push_back(power);  // n = 0, identity is PT-invariant
    for (int n = 1; n <= n_max; ++n) {
      power = power * t.k_squared;
      t.k2n_pt.push_back(partial_transpose_dense(power, ts1, ts2));
    }

    // K^2 and the projectors are real, which keeps this path real-valued.
    using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    const LongMatrix k2 = t.k_squared.real().cast<long double>();
    std::vector<LongMatrix> projectors_pt(tjs.size());
    for (std::size_t j = 0; j < tjs.size(); ++j) {
      const LongMatrix p = t.projectors[j].real().cast<long double>();
      LongMatrix ppt(d, d);
      const int d1 = ts1.dim(), d2 = ts2.dim();
      for (int i1 = 0; i1 < d1; ++i1)
        for (int j1 = 0; j1 < d1; ++j1)
          for (int i2 = 0; i2 < d2; ++i2)
            for (int j2 = 0; j2 < d2; ++j2)
              ppt(i1 * d2 + j2, j1 * d2 + i2) = p(i1 * d2 + i2, j1 * d2 + j2);
      projectors_pt[j] = std::move(ppt);
    }

    t.newton_traces.resize(n_max + 1, static_cast<int>(tjs.size()));
    LongMatrix newton = LongMatrix::Identity(d, d);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) {
        const long double x =
            tjs[static_cast<std::size_t>(n - 1)] *
            (tjs[static_cast<std::size_t>(n - 1)] + 2) / 4.0L;
        newton = (k2 - x * LongMatrix::Identity(d, d)) * newton;
      }
      for (std::size_t j = 0; j < tjs.size(); ++j)
        t.newton_traces(n, static_cast<int>(j)) =
            (newton * projectors_pt[j]).trace() / (tjs[j] + 1);
    }
    return t;
  });
}

}  // namespace su2ent::detail
