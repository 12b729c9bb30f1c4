#pragma once

#include "b2chain/cmatrix.hpp"

namespace b2chain {

// Vector-vector R-matrix, 25x25 on V (x) V, built from the closed form
// R^{ij}_{kl} = u(u+3/2) d_ik d_jl + (u+3/2) d_il d_jk - u d_{j,ibar} d_{k,lbar},
// ibar = 6-i.
CMat r_vv(cx u);
// Same operator assembled from the seven-case weight table; kept as an
// independent transcription oracle against r_vv.
CMat r_vv_table(cx u);

// Spinor-spinor R-matrix, 16x16 on Vs (x) Vs, labels 1..4 with ibar = 5-i.
CMat r_ss(cx u);

// Spinor-vector R-matrix, 20x20 on Vs (x) V (first factor 4-dim).
CMat r_sv(cx u);
// Vector-spinor partner on V (x) Vs, realized by conjugating r_sv with the
// factor swap; unitarity r_sv(u) r_vs(-u) = rho3(u) id is verified in tests.
CMat r_vs(cx u);

// 5x5 crossing matrix, anti-diagonal of ones.
CMat crossing_v();

// Test seam for the suite-sensitivity control: adds `delta` to one entry of
// every subsequently built r_vv. Reset with clear_rvv_perturbation().
void set_rvv_perturbation(int row, int col, cx delta);
void clear_rvv_perturbation();

}  // namespace b2chain
