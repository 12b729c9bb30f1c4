#pragma once

#include "b2chain/cmatrix.hpp"
#include "b2chain/tensor.hpp"

#include <string>
#include <vector>

namespace b2chain {

// Orthonormal basis of an invariant subspace, kept both as the isometry
// U (ambient_dim x rank, columns in the listed order) and the projector
// P = U U^dag. The bases are transcribed data, not derived.
struct Isometry {
    std::string id;
    TensorLayout layout;  // ambient factors
    CMat u;               // ambient_dim x rank
    int rank() const { return u.cols(); }
    CMat projector() const { return u * u.dagger(); }
};

// Catalog ids:
//   ss5        five-dim subspace of Vs (x) Vs          (rank 5)
//   ss5_swap   same subspace, swapped-factor basis     (rank 5)
//   vv1        singlet in V (x) V                      (rank 1)
//   vv11       antisym + singlet in V (x) V            (rank 11)
//   vvv15      triple fusion subspace of V^3           (rank 15)
//   vvvv16     quadruple fusion subspace of V^4        (rank 16)
//   sv4        spinor subspace of Vs (x) V             (rank 4)
//   vs4        spinor subspace of V (x) Vs             (rank 4)
//   barv_v5    vector subspace of Vbar (x) V           (rank 5)
//   v_barv5    vector subspace of V (x) Vbar           (rank 5)
//   tildev_v11 Vbar subspace of Vtilde (x) V           (rank 11)
//   v_tildev11 Vbar subspace of V (x) Vtilde           (rank 11)
const Isometry& isometry(const std::string& id);
std::vector<std::string> isometry_ids();

// gauge matrices used by the fused correspondences
const CMat& gauge_s12();        // 16x16 on Vs (x) Vs
CMat gauge_s12_inverse();
const CMat& gauge_s_barv();     // 11x11 diagonal
CMat gauge_s_barv_inverse();

}  // namespace b2chain
