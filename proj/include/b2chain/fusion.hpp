#pragma once

#include "b2chain/cmatrix.hpp"

#include <string>
#include <vector>

namespace b2chain::fusion {

// Result of a degeneracy / equivalence / determinant check. `scalar` is the
// least-squares fit of lhs ~ scalar * rhs; acceptance uses fitted_residual,
// and the scalar is reported so normalization slips show up instead of
// getting absorbed silently.
struct CheckReport {
    std::string id;
    double raw_residual = 0.0;
    double fitted_residual = 0.0;
    cx scalar = 1.0;
    int rank = -1;  // numeric rank of the factorized operator, where relevant
};

// Fused R-matrices (compressed onto the listed invariant subspaces).
CMat r_barv_v(cx u);        // 55x55 on Vbar (x) V
CMat r_v_barv(cx u);        // 55x55 on V (x) Vbar, swap-conjugated partner
CMat r_tildev_v(cx u);      // 75x75 on Vtilde (x) V
CMat r_v_tildev(cx u);      // 75x75 on V (x) Vtilde
CMat r_fused_1234_v(cx u);  // 80x80 on the 16-dim fused space (x) V

// Reconstruction routes used by the equivalence checks.
CMat r_sv_from_ss(cx u);         // 20x20
CMat r_vv_from_sv(cx u);         // 25x25
CMat r_barv_from_tildev(cx u);   // 55x55
CMat r_sv_from_vv_sv(cx u);      // 20x20

// point ids: ss@-1/2, vv@-3/2, vv@-1, vvv-product, vvvv-product, sv@-5/4,
//            barv@-1, tildev@-1/2
CheckReport check_degeneracy(const std::string& point_id);
std::vector<std::string> degeneracy_ids();

// equiv ids: sv-fused-table, vv-reconstruct, spinor-1234, vv-from-barv,
//            barv-from-tildev, sv-from-vv-sv
CheckReport check_equivalence(const std::string& equiv_id, cx u);
std::vector<std::string> equivalence_ids();

CheckReport check_quantum_det_r(cx u);

int numeric_rank(const CMat& m, double tol = 1e-8);

}  // namespace b2chain::fusion
