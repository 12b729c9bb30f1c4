#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/tensor.hpp"
#include "b2chain/kernels.hpp"
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

TEST_CASE("kron identity and dimensions") {
    CMat i2 = CMat::identity(2), i3 = CMat::identity(3);
    CHECK(residual(kron(i2, i3), CMat::identity(6)) == 0.0);
    CMat a(5, 5), b(4, 4);
    CHECK(kron(a, b).rows() == 20);
    CHECK(kron(a, b).cols() == 20);
}

TEST_CASE("kron permutation action on basis kets") {
    // sigma_x (x) I2 applied to |1> (x) |2> gives |2> (x) |2>
    CMat sx(2, 2);
    sx(0, 1) = 1.0; sx(1, 0) = 1.0;
    CMat op = kron(sx, CMat::identity(2));
    TensorLayout lay{2, 2};
    CMat ket(4, 1);
    ket(static_cast<int>(lay.flat({1, 2})), 0) = 1.0;
    CMat out = op * ket;
    CHECK(std::abs(out(static_cast<int>(lay.flat({2, 2})), 0) - 1.0) < 1e-15);
    CHECK(std::abs(out.max_abs() - 1.0) < 1e-15);
}

TEST_CASE("kron associativity on random small factors") {
    Rng rng(11);
    for (int rep = 0; rep < 4; ++rep) {
        CMat a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3), c = random_matrix(rng, 5, 5);
        CHECK(residual(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-14);
    }
}

TEST_CASE("permutation operator basics") {
    CMat p2 = permutation_operator(2);
    CMat expect(4, 4);
    expect(0, 0) = 1; expect(1, 2) = 1; expect(2, 1) = 1; expect(3, 3) = 1;
    CHECK(residual(p2, expect) == 0.0);

    CMat p5 = permutation_operator(5);
    CHECK(std::abs(p5.trace() - cx(5.0)) < 1e-15);
    CHECK(residual(p5 * p5, CMat::identity(25)) == 0.0);

    TensorLayout lay{5, 5};
    CMat ket(25, 1);
    ket(static_cast<int>(lay.flat({1, 3})), 0) = 1.0;
    CMat out = p5 * ket;
    CHECK(std::abs(out(static_cast<int>(lay.flat({3, 1})), 0) - 1.0) < 1e-15);
}

TEST_CASE("embed identity and definitional cases") {
    TensorLayout lay{5, 5};
    CHECK(residual(embed(CMat::identity(5), {0}, lay), CMat::identity(25)) == 0.0);

    Rng rng(7);
    CMat a = random_matrix(rng, 5, 5);
    CHECK(residual(embed(a, {0}, lay), kron(a, CMat::identity(5))) == 0.0);
    CHECK(residual(embed(a, {1}, lay), kron(CMat::identity(5), a)) == 0.0);
}

TEST_CASE("embed on non-adjacent sites vs basis-vector action") {
    // swap of factors 0 and 2 with an idle middle factor, checked on all kets
    TensorLayout lay{5, 4, 5};
    CMat p5 = permutation_operator(5);
    CMat e = embed(p5, {0, 2}, lay);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 5; ++k) {
                CMat ket(100, 1);
                ket(static_cast<int>(lay.flat({i, j, k})), 0) = 1.0;
                CMat out = e * ket;
                CHECK(std::abs(out(static_cast<int>(lay.flat({k, j, i})), 0) - 1.0) < 1e-15);
            }
}

TEST_CASE("embedded operators on disjoint sites commute") {
    Rng rng(3);
    TensorLayout lay{4, 5, 4};
    CMat a = random_matrix(rng, 4, 4), b = random_matrix(rng, 5, 5);
    CMat ea = embed(a, {0}, lay), eb = embed(b, {1}, lay);
    CHECK(residual(ea * eb, eb * ea) <= 1e-13);
    CMat c = random_matrix(rng, 4, 4);
    CMat ec = embed(c, {2}, lay);
    CHECK(residual(ea * ec, ec * ea) <= 1e-13);
}

TEST_CASE("embed listed-order semantics matches swap conjugation") {
    Rng rng(5);
    TensorLayout lay{4, 5};
    CMat m = random_matrix(rng, 20, 20);  // on Vs (x) V
    CMat direct = embed(m, {0, 1}, lay);
    CHECK(residual(direct, m) == 0.0);
    CMat swapped = embed(m, {1, 0}, TensorLayout{5, 4});
    CHECK(residual(swapped, swap_conjugate(m, 4, 5)) <= 1e-15);
}

TEST_CASE("partial trace product state and permutation") {
    Rng rng(13);
    CMat a = random_matrix(rng, 4, 4), b = random_matrix(rng, 5, 5);
    CMat ab = kron(a, b);
    TensorLayout lay{4, 5};
    CHECK(residual(partial_trace(ab, 0, lay), a.trace() * b) <= 1e-14);
    CHECK(residual(partial_trace(ab, 1, lay), b.trace() * a) <= 1e-14);

    CMat p = permutation_operator(5);
    CHECK(residual(partial_trace(p, 0, TensorLayout{5, 5}), CMat::identity(5)) == 0.0);

    // trace over untouched site returns dim-scaled original
    CMat e = embed(a, {0}, TensorLayout{4, 5});
    CHECK(residual(partial_trace(e, 1, TensorLayout{4, 5}), 5.0 * a) <= 1e-14);
}

TEST_CASE("partial trace of embedded permutation vs triple-loop sum") {
    TensorLayout lay{5, 5, 5};
    CMat p = embed(permutation_operator(5), {0, 2}, lay);
    CMat traced = partial_trace(p, 1, lay);
    // brute force: sum the middle index directly
    CMat expect(25, 25);
    for (int i = 1; i <= 5; ++i)
        for (int k = 1; k <= 5; ++k)
            for (int i2 = 1; i2 <= 5; ++i2)
                for (int k2 = 1; k2 <= 5; ++k2) {
                    cx s = 0.0;
                    for (int j = 1; j <= 5; ++j)
                        s += p(static_cast<int>(lay.flat({i, j, k})),
                               static_cast<int>(lay.flat({i2, j, k2})));
                    expect((i - 1) * 5 + (k - 1), (i2 - 1) * 5 + (k2 - 1)) = s;
                }
    CHECK(residual(traced, expect) == 0.0);
    CHECK(std::abs(traced.trace() - p.trace()) < 1e-12);
}

TEST_CASE("partial transpose involution and consistency") {
    Rng rng(17);
    CMat m = random_matrix(rng, 20, 20);
    TensorLayout lay{4, 5};
    CMat t0 = partial_transpose(m, 0, lay);
    CHECK(residual(partial_transpose(t0, 0, lay), m) == 0.0);
    CMat t01 = partial_transpose(partial_transpose(m, 0, lay), 1, lay);
    CHECK(residual(t01, m.transpose()) == 0.0);
}

TEST_CASE("residual normalization") {
    CMat i5 = CMat::identity(5);
    CHECK(residual(i5, i5) == 0.0);
    CHECK(residual(CMat(3, 3), CMat(3, 3)) == 0.0);
    CHECK(residual(i5, cx(2.0) * i5) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}
