#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/linalg.hpp"
#include "b2chain/polyfit.hpp"
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

bool contains_value(const std::vector<cx>& vals, cx v, double tol) {
    for (const auto& w : vals)
        if (std::abs(w - v) <= tol) return true;
    return false;
}

}  // namespace

TEST_CASE("lu_solve and inverse") {
    Rng rng(1);
    CMat a = random_matrix(rng, 12, 12);
    CMat b = random_matrix(rng, 12, 3);
    CMat x = lu_solve(a, b);
    CHECK(residual(a * x, b) <= 1e-12);
    CHECK(residual(a * inverse(a), CMat::identity(12)) <= 1e-12);
}

TEST_CASE("eig of a diagonal matrix") {
    CMat d(3, 3);
    d(0, 0) = 1.0; d(1, 1) = cx(0.0, 2.0); d(2, 2) = -3.0;
    auto e = eig_general(d);
    REQUIRE(e.converged);
    CHECK(contains_value(e.values, 1.0, 1e-12));
    CHECK(contains_value(e.values, cx(0.0, 2.0), 1e-12));
    CHECK(contains_value(e.values, -3.0, 1e-12));
}

TEST_CASE("eig of the 5-dim permutation operator") {
    auto e = eig_general(permutation_operator(5));
    REQUIRE(e.converged);
    int plus = 0, minus = 0;
    for (auto v : e.values) {
        if (std::abs(v - 1.0) < 1e-9) ++plus;
        if (std::abs(v + 1.0) < 1e-9) ++minus;
    }
    CHECK(plus == 15);   // symmetric subspace
    CHECK(minus == 10);  // antisymmetric subspace
    CHECK(eig_residual(permutation_operator(5), e) <= 1e-10);
}

TEST_CASE("eig of a companion matrix") {
    // u^2 - 1
    CMat c(2, 2);
    c(0, 1) = 1.0; c(1, 0) = 1.0;
    auto e = eig_general(c);
    CHECK(contains_value(e.values, 1.0, 1e-12));
    CHECK(contains_value(e.values, -1.0, 1e-12));
}

TEST_CASE("eig right/left residuals and biorthogonality on random matrices") {
    Rng rng(42);
    for (int n : {5, 16, 40}) {
        CMat a = random_matrix(rng, n, n);
        auto e = eig_general(a);
        REQUIRE(e.converged);
        CHECK(eig_residual(a, e) <= 1e-10);
        // left residuals
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double num = 0.0;
            for (int c2 = 0; c2 < n; ++c2) {
                cx s = 0.0;
                for (int r = 0; r < n; ++r) s += std::conj(e.left(r, i)) * a(r, c2);
                s -= e.values[i] * std::conj(e.left(c2, i));
                num += std::norm(s);
            }
            double den = 0.0;
            for (int r = 0; r < n; ++r) den += std::norm(e.left(r, i));
            worst = std::max(worst, std::sqrt(num) / ((1.0 + std::abs(e.values[i])) * std::sqrt(den)));
        }
        CHECK(worst <= 1e-10);
        if (e.simple) {
            // w_i^dag v_j = delta_ij
            CMat g = e.left.dagger() * e.right;
            CHECK(residual(g, CMat::identity(n)) <= 1e-9);
            // reconstruction sum lambda_i v_i w_i^dag
            CMat rec(n, n);
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < n; ++r)
                    for (int c2 = 0; c2 < n; ++c2)
                        rec(r, c2) += e.values[i] * e.right(r, i) * std::conj(e.left(c2, i));
            CHECK(residual(rec, a) <= 1e-9);
        }
    }
}

TEST_CASE("fit_polynomial recovers exact polynomials") {
    std::vector<cx> u, v;
    for (int k = 0; k < 5; ++k) {
        cx x(0.3 + 0.4 * k, 0.1 * k);
        u.push_back(x);
        v.push_back(x * x + 1.0);
    }
    auto fit = fit_polynomial(u, v, 2);
    CHECK(std::abs(fit.coefficients[0] - 1.0) <= 1e-12);
    CHECK(std::abs(fit.coefficients[1]) <= 1e-12);
    CHECK(std::abs(fit.coefficients[2] - 1.0) <= 1e-12);
    CHECK(fit.max_interp_error <= 1e-13);
}

TEST_CASE("fit_polynomial on the one-site vacuum eigenvalue") {
    // 5u^2 + 7.5u + 1.5 sampled at 7 points
    std::vector<cx> u, v;
    for (int k = 0; k < 7; ++k) {
        cx x(-0.9 + 0.31 * k, 0.07 * (k % 3));
        u.push_back(x);
        v.push_back(5.0 * x * x + 7.5 * x + 1.5);
    }
    auto fit = fit_polynomial(u, v, 2);
    CHECK(std::abs(fit.coefficients[0] - 1.5) <= 1e-11);
    CHECK(std::abs(fit.coefficients[1] - 7.5) <= 1e-11);
    CHECK(std::abs(fit.coefficients[2] - 5.0) <= 1e-11);
}

TEST_CASE("fit_polynomial negative control: degree bound too small") {
    std::vector<cx> u, v;
    for (int k = 0; k < 9; ++k) {
        cx x(-1.0 + 0.25 * k, 0.05 * k);
        u.push_back(x);
        v.push_back(x * x * x);
    }
    auto fit = fit_polynomial(u, v, 2);
    CHECK(fit.max_interp_error > 1e-4);
}

TEST_CASE("fit_polynomial rejects repeated points") {
    std::vector<cx> u{1.0, 2.0, 1.0, 3.0};
    std::vector<cx> v{1.0, 4.0, 1.0, 9.0};
    CHECK_THROWS(fit_polynomial(u, v, 2));
}
