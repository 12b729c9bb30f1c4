#pragma once

#include "b2chain/cmatrix.hpp"
#include "b2chain/fusion.hpp"

#include <string>
#include <vector>

namespace b2chain {

struct BoundaryParams {
    cx c1, c2, ct1, ct2;

    cx h(cx u) const { return (1.0 + c1 * c2) * (4.0 * u + 1.0); }
    cx ht(cx u) const { return (1.0 + ct1 * ct2) * (4.0 * u + 1.0); }
    // every construction divides by these; keep them away from zero
    bool valid() const {
        return std::abs(1.0 + c1 * c2) > 1e-12 && std::abs(1.0 + ct1 * ct2) > 1e-12;
    }
};

enum class KKind { Vm, Vp, Sm, Sp, BarVm, BarVp, TildeVm, TildeVp };

int k_dimension(KKind k);
std::string k_kind_name(KKind k);

// Boundary matrices. The fused kinds are degree-2 matrix polynomials in u;
// they are evaluated through a cached polynomial form so the isolated zeros
// of the construction's normalization are transparent to callers. The raw
// projected-product construction is exposed for tests.
CMat k_matrix(KKind kind, cx u, const BoundaryParams& p);
CMat k_matrix_direct(KKind kind, cx u, const BoundaryParams& p);  // throws near poles

// reflection-equation checks; kinds Vm/Sm/BarVm/TildeVm use the RE, the
// plus kinds the dual RE (fused kinds pair with the fundamental K)
fusion::CheckReport check_reflection_equation(KKind kind, cx u, cx v, const BoundaryParams& p);

// scalar boundary quantum determinants and their closed forms
cx quantum_det_k(int sign, cx u, const BoundaryParams& p);
cx quantum_det_k_closed(int sign, cx u, const BoundaryParams& p);

// itemized special-value identities of the boundary matrices
std::vector<fusion::CheckReport> check_k_special_values(const BoundaryParams& p);

// fusion-consistency checks: ids v-from-s-minus, v-from-s-plus,
// v-from-barv-minus, v-from-barv-plus, barv-from-tildev-minus,
// barv-from-tildev-plus, fused-1234-minus, fused-1234-plus,
// s-from-vs-minus, s-from-vs-plus
fusion::CheckReport check_k_fusion_consistency(const std::string& fusion_id, cx u,
                                               const BoundaryParams& p);
std::vector<std::string> k_fusion_ids();

}  // namespace b2chain
