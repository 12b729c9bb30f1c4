#pragma once

#include "b2chain/cmatrix.hpp"

namespace b2chain::kernels {

// Thread control. Parallel kernels are deterministic by construction
// (every output element is written by exactly one thread), so results are
// bit-identical for any thread count. B2CHAIN_THREADS caps the pool.
int max_threads();
void set_max_threads(int n);

// c = a * b, serial reference.
void matmul_serial(const cx* a, const cx* b, cx* c, int m, int k, int n);
// c = a * b, OpenMP over rows of c.
void matmul_omp(const cx* a, const cx* b, cx* c, int m, int k, int n);
// Dispatch: OpenMP when the product is large enough to pay off.
CMat matmul(const CMat& a, const CMat& b);

// y = embed(op, sites, dims) * x  where `op` acts on the listed tensor
// factors (in listed order) and as identity elsewhere. x is a dense
// (prod(dims) x cols) block. Core kernel of the monodromy builder.
//
// `sites` are 0-based factor indices into `dims`; they must be distinct.
void apply_embedded_serial(const CMat& op, const std::vector<int>& sites,
                           const std::vector<int>& dims, const CMat& x, CMat& y);
void apply_embedded_omp(const CMat& op, const std::vector<int>& sites,
                        const std::vector<int>& dims, const CMat& x, CMat& y);
CMat apply_embedded(const CMat& op, const std::vector<int>& sites,
                    const std::vector<int>& dims, const CMat& x);

}  // namespace b2chain::kernels
