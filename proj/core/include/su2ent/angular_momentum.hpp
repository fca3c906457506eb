#pragma once

#include <vector>

#include "su2ent/dense_operator.hpp"
#include "su2ent/twice_spin.hpp"

namespace su2ent {

struct SpinMatrices {
  DenseOperator sx, sy, sz;
};

// Spin operators of a single spin S in the basis of descending S^z
// eigenvalues. Satisfy [Sx,Sy] = i Sz (cyclic) and Sx^2+Sy^2+Sz^2 = S(S+1).
SpinMatrices spin_matrices(TwiceSpin ts);

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
// convention, all quantum numbers doubled. Evaluated through the Racah
// closed-form sum with exact integer factorial ratios; the conversion to
// floating point happens only in the final square root and sum.
// Returns 0 when tM != tm1 + tm2. Throws std::invalid_argument on parity
// or triangle violations.
double clebsch_gordan(int tj1, int tj2, int tm1, int tm2, int tJ, int tM);

// Doubled total-spin values |ts1-ts2|, |ts1-ts2|+2, ..., ts1+ts2 (ascending).
std::vector<int> multiplet_range(TwiceSpin ts1, TwiceSpin ts2);

// Flat index of the product state |m1, m2>, both quantum numbers doubled.
int product_index(TwiceSpin ts1, TwiceSpin ts2, int tm1, int tm2);

// Unitary mapping the coupled basis |J, Jz> to the product basis. Columns
// ordered by descending J, then descending Jz.
DenseOperator coupled_basis(TwiceSpin ts1, TwiceSpin ts2);

// Projector onto the total-spin-J multiplet of S1+S2. Hermitian idempotent
// of rank 2J+1. Throws if tj lies outside the triangle range.
DenseOperator multiplet_projector(TwiceSpin ts1, TwiceSpin ts2, int tj);

struct KOperators {
  DenseOperator kx, ky, kz;

  DenseOperator squared() const { return kx * kx + ky * ky + kz * kz; }
};

// The su(2) triple commuting with the partial transpose of any invariant
// state: Kx = S1x - S2x, Ky = S1y + S2y, Kz = S1z - S2z.
KOperators k_operators(TwiceSpin ts1, TwiceSpin ts2);

// Diagonal 0/1 projector onto the product states with 2(m1 - m2) == tk.
// Out-of-range or wrong-parity tk yields the zero operator.
DenseOperator difference_projector(TwiceSpin ts1, TwiceSpin ts2, int tk);

}  // namespace su2ent
