#pragma once

#include "b2chain/cmatrix.hpp"

#include <vector>

namespace b2chain {

// Ordered list of local dimensions of a tensor-product space.
// Basis vector |i1 i2 ... iL> with 1-based labels i_k maps to flat index
// sum_k (i_k - 1) * prod_{m>k} d_m (first factor slowest).
struct TensorLayout {
    std::vector<int> dims;

    TensorLayout() = default;
    TensorLayout(std::initializer_list<int> d) : dims(d) {}
    explicit TensorLayout(std::vector<int> d) : dims(std::move(d)) {}

    int factors() const { return static_cast<int>(dims.size()); }
    size_t total() const {
        size_t t = 1;
        for (int d : dims) t *= d;
        return t;
    }
    // flat index from 1-based labels
    size_t flat(const std::vector<int>& labels) const;
    // dimension of the subspace spanned by the listed factor positions
    int sub_dim(const std::vector<int>& sites) const;
};

CMat kron(const CMat& a, const CMat& b);

// P[(i,j),(k,l)] = delta_il delta_jk on d x d factors.
CMat permutation_operator(int d);
// Swap map V_a (x) V_b -> V_b (x) V_a as a (da*db) x (da*db) matrix.
CMat swap_matrix(int da, int db);
// Conjugate a matrix on V_a (x) V_b into one on V_b (x) V_a.
CMat swap_conjugate(const CMat& m, int da, int db);

// Operator acting as `op` on the listed factors (in listed order), identity
// elsewhere. Materialized densely; use kernels::apply_embedded to act on a
// block without materializing.
CMat embed(const CMat& op, const std::vector<int>& sites, const TensorLayout& layout);

// Trace out the factor at `site`; returns the operator on the remaining factors.
CMat partial_trace(const CMat& m, int site, const TensorLayout& layout);

// Transpose only the factor at `site`.
CMat partial_transpose(const CMat& m, int site, const TensorLayout& layout);

}  // namespace b2chain
