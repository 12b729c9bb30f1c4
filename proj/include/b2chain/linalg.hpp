#pragma once

#include "b2chain/cmatrix.hpp"

namespace b2chain {

// Solve A X = B by LU with partial pivoting. A square.
CMat lu_solve(CMat a, CMat b);
CMat inverse(const CMat& a);

// Least squares min ||A X - B||_F via Householder QR, A is m x n with m >= n.
CMat lstsq(CMat a, CMat b);

// Eigendecomposition of a general complex matrix.
// values[i] with right column vectors in `right` and left column vectors in
// `left` satisfying  A v_i ~ values[i] v_i  and  w_i^dag A ~ values[i] w_i^dag.
// For a simple spectrum the pair is biorthonormalized, w_i^dag v_j = delta_ij.
struct EigResult {
    std::vector<cx> values;
    CMat right;
    CMat left;
    bool converged = false;
    bool simple = false;  // all eigenvalues pairwise separated
    int iterations = 0;
};

// Hessenberg reduction + shifted QR, self-contained. Iteration cap 100*dim,
// deflation threshold 1e-12 on subdiagonal entries (relative to neighbors).
EigResult eig_general(const CMat& m);

// max_i |A v_i - lambda_i v_i| / (1 + |lambda_i| ||v_i||); diagnostic.
double eig_residual(const CMat& a, const EigResult& e);

}  // namespace b2chain
