#include "su2ent/angular_momentum.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace su2ent {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Factorial of a doubled quantum number; the argument must be even and
// non-negative (guaranteed by the parity checks in clebsch_gordan).
const BigInt& half_factorial(int t) {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> f(128);
    f[0] = 1;
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * BigInt(i);
    return f;
  }();
  return table.at(static_cast<std::size_t>(t / 2));
}

bool parity_ok(int tj, int tm) { return std::abs(tm) <= tj && (tj + tm) % 2 == 0; }

}  // namespace

SpinMatrices spin_matrices(TwiceSpin ts) {
  const int d = ts.dim();
  const double s = ts.spin();
  DenseOperator sz = DenseOperator::Zero(d, d);
  DenseOperator sp = DenseOperator::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = s - i;
    sz(i, i) = m;
    if (i > 0) sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const DenseOperator sm = sp.adjoint();
  SpinMatrices out{DenseOperator(), DenseOperator(), std::move(sz)};
  out.sx = 0.5 * (sp + sm);
  out.sy = Complex(0, -0.5) * (sp - sm);
  return out;
}

double clebsch_gordan(int tj1, int tj2, int tm1, int tm2, int tJ, int tM) {
  if (tj1 < 0 || tj2 < 0 || tJ < 0)
    throw std::invalid_argument("clebsch_gordan: negative doubled spin");
  if (!parity_ok(tj1, tm1) || !parity_ok(tj2, tm2) || !parity_ok(tJ, tM))
    throw std::invalid_argument("clebsch_gordan: |m| > j or parity mismatch");
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || (tj1 + tj2 + tJ) % 2 != 0)
    throw std::invalid_argument("clebsch_gordan: triangle condition violated");
  if (tM != tm1 + tm2) return 0.0;

  // Racah's single-sum closed form. Every factorial argument below is an
  // even doubled integer when the checks above pass.
  const BigRational delta =
      BigRational(half_factorial(tj1 + tj2 - tJ) * half_factorial(tj1 - tj2 + tJ) *
                      half_factorial(-tj1 + tj2 + tJ),
                  half_factorial(tj1 + tj2 + tJ + 2));
  const BigInt weight = half_factorial(tJ + tM) * half_factorial(tJ - tM) *
                        half_factorial(tj1 - tm1) * half_factorial(tj1 + tm1) *
                        half_factorial(tj2 - tm2) * half_factorial(tj2 + tm2);
  const BigRational prefactor = BigRational(tJ + 1) * delta * BigRational(weight);

  const int k_min = std::max({0, -(tJ - tj2 + tm1) / 2, -(tJ - tj1 - tm2) / 2});
  const int k_max =
      std::min({(tj1 + tj2 - tJ) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
  BigRational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    BigInt denom = half_factorial(2 * k) * half_factorial(tj1 + tj2 - tJ - 2 * k) *
                   half_factorial(tj1 - tm1 - 2 * k) *
                   half_factorial(tj2 + tm2 - 2 * k) *
                   half_factorial(tJ - tj2 + tm1 + 2 * k) *
                   half_factorial(tJ - tj1 - tm2 + 2 * k);
    BigRational term(1, denom);
    if (k % 2 != 0) term = -term;
    sum += term;
  }
  return std::sqrt(prefactor.convert_to<double>()) * sum.convert_to<double>();
}

std::vector<int> multiplet_range(TwiceSpin ts1, TwiceSpin ts2) {
  std::vector<int> tjs;
  for (int tj = std::abs(ts1.value - ts2.value); tj <= ts1.value + ts2.value; tj += 2)
    tjs.push_back(tj);
  return tjs;
}

int product_index(TwiceSpin ts1, TwiceSpin ts2, int tm1, int tm2) {
  if (!parity_ok(ts1.value, tm1) || !parity_ok(ts2.value, tm2))
    throw std::invalid_argument("product_index: invalid magnetic quantum number");
  return (ts1.value - tm1) / 2 * ts2.dim() + (ts2.value - tm2) / 2;
}

DenseOperator coupled_basis(TwiceSpin ts1, TwiceSpin ts2) {
  const int d = ts1.dim() * ts2.dim();
  DenseOperator u = DenseOperator::Zero(d, d);
  int col = 0;
  for (int tj = ts1.value + ts2.value; tj >= std::abs(ts1.value - ts2.value); tj -= 2) {
    for (int tm = tj; tm >= -tj; tm -= 2, ++col) {
      for (int tm1 = ts1.value; tm1 >= -ts1.value; tm1 -= 2) {
        const int tm2 = tm - tm1;
        if (std::abs(tm2) > ts2.value) continue;
        u(product_index(ts1, ts2, tm1, tm2), col) =
            clebsch_gordan(ts1.value, ts2.value, tm1, tm2, tj, tm);
      }
    }
  }
  return u;
}

DenseOperator multiplet_projector(TwiceSpin ts1, TwiceSpin ts2, int tj) {
  if (tj < std::abs(ts1.value - ts2.value) || tj > ts1.value + ts2.value ||
      (ts1.value + ts2.value + tj) % 2 != 0)
    throw std::invalid_argument("multiplet_projector: tj outside triangle range");
  const DenseOperator u = coupled_basis(ts1, ts2);
  // Column offset of (J, M=J): multiplets with J' > J come first.
  int offset = 0;
  for (int t = ts1.value + ts2.value; t > tj; t -= 2) offset += t + 1;
  const auto block = u.middleCols(offset, tj + 1);
  return block * block.adjoint();
}

KOperators k_operators(TwiceSpin ts1, TwiceSpin ts2) {
  const SpinMatrices s1 = spin_matrices(ts1);
  const SpinMatrices s2 = spin_matrices(ts2);
  const DenseOperator i1 = DenseOperator::Identity(ts1.dim(), ts1.dim());
  const DenseOperator i2 = DenseOperator::Identity(ts2.dim(), ts2.dim());
  return KOperators{kron(s1.sx, i2) - kron(i1, s2.sx),
                    kron(s1.sy, i2) + kron(i1, s2.sy),
                    kron(s1.sz, i2) - kron(i1, s2.sz)};
}

DenseOperator difference_projector(TwiceSpin ts1, TwiceSpin ts2, int tk) {
  const int d2 = ts2.dim();
  const int d = ts1.dim() * d2;
  DenseOperator p = DenseOperator::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const int tm1 = ts1.value - 2 * (i / d2);
    const int tm2 = ts2.value - 2 * (i % d2);
    if (tm1 - tm2 == tk) p(i, i) = 1.0;
  }
  return p;
}

}  // namespace su2ent
