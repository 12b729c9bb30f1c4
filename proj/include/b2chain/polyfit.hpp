#pragma once

#include "b2chain/cmatrix.hpp"

#include <vector>

namespace b2chain {

struct PolyFit {
    int degree = 0;
    std::vector<cx> coefficients;  // ascending powers
    double max_interp_error = 0.0; // relative, over the input samples

    cx eval(cx u) const {
        cx acc = 0.0;
        for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
            acc = acc * u + coefficients[k];
        return acc;
    }
};

// Least-squares fit of degree <= degree_bound through the samples.
// Needs at least degree_bound+1 distinct points; repeated points are an error.
PolyFit fit_polynomial(const std::vector<cx>& u, const std::vector<cx>& v, int degree_bound);

// Per-entry polynomial fit of a matrix-valued function sampled at the given
// points; returns coefficient matrices C_k with  M(u) ~ sum_k C_k u^k,
// and the worst relative interpolation error over entries and samples.
struct MatrixPolyFit {
    int degree = 0;
    std::vector<CMat> coeff;
    double max_interp_error = 0.0;
};
MatrixPolyFit fit_matrix_polynomial(const std::vector<cx>& u, const std::vector<CMat>& m,
                                    int degree_bound);

}  // namespace b2chain
