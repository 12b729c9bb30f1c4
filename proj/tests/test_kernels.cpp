#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/kernels.hpp"
#include "b2chain/tensor.hpp"
#include "b2chain/rng.hpp"

using namespace b2chain;

namespace {

CMat random_matrix(Rng& rng, int r, int c) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = cx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return m;
}

}  // namespace

TEST_CASE("matmul omp agrees with serial reference") {
    Rng rng(101);
    for (int n : {17, 64, 130}) {
        CMat a = random_matrix(rng, n, n + 3), b = random_matrix(rng, n + 3, n - 1);
        CMat cs(n, n - 1), cp(n, n - 1);
        kernels::matmul_serial(a.data(), b.data(), cs.data(), n, n + 3, n - 1);
        kernels::matmul_omp(a.data(), b.data(), cp.data(), n, n + 3, n - 1);
        CHECK(residual(cs, cp) <= 1e-15);
    }
}

TEST_CASE("apply_embedded omp agrees with serial reference") {
    Rng rng(202);
    std::vector<int> dims{5, 4, 5, 3};
    const int total = 5 * 4 * 5 * 3;
    CMat x = random_matrix(rng, total, 37);
    for (auto sites : std::vector<std::vector<int>>{{0}, {2}, {0, 2}, {3, 1}, {1, 2, 3}}) {
        int d = 1;
        for (int s : sites) d *= dims[s];
        CMat op = random_matrix(rng, d, d);
        CMat ys, yp;
        kernels::apply_embedded_serial(op, sites, dims, x, ys);
        kernels::apply_embedded_omp(op, sites, dims, x, yp);
        CHECK(residual(ys, yp) <= 1e-15);
    }
}

TEST_CASE("apply_embedded equals dense embed multiplication") {
    Rng rng(303);
    TensorLayout lay{4, 5, 3};
    CMat x = random_matrix(rng, 60, 60);
    for (auto sites : std::vector<std::vector<int>>{{1}, {2, 0}, {0, 1}}) {
        int d = lay.sub_dim(sites);
        CMat op = random_matrix(rng, d, d);
        CMat dense = embed(op, sites, lay) * x;
        CMat fast = kernels::apply_embedded(op, sites, lay.dims, x);
        CHECK(residual(dense, fast) <= 1e-14);
    }
}

TEST_CASE("apply_embedded rejects bad input") {
    CMat op(4, 4);
    CMat x(10, 2);
    CMat y;
    CHECK_THROWS(kernels::apply_embedded_serial(op, {0, 0}, {2, 2, 5}, x, y));
    CHECK_THROWS(kernels::apply_embedded_serial(op, {0}, {2, 2, 5}, x, y));
}
