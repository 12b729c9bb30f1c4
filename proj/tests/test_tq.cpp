#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/tq.hpp"
#include "b2chain/weights.hpp"
#include "b2chain/rng.hpp"

using namespace b2chain;
using namespace b2chain::weights;

namespace {

ModelConfig one_site_homogeneous() {
    ModelConfig cfg;
    cfg.N = 1;
    cfg.theta = {0.0};
    return cfg;
}

}  // namespace

TEST_CASE("trial factor evaluation") {
    tq::BetheRoots r;
    r.open = false;
    CHECK(std::abs(tq::q_eval(1, cx(0.7), r) - cx(1.0)) < 1e-15);  // empty product
    r.roots1 = {cx(0.5)};
    CHECK(std::abs(tq::q_eval(1, cx(0.5), r) - cx(0.5)) < 1e-15);
    tq::BetheRoots ro;
    ro.open = true;
    ro.roots2 = {cx(0.3)};
    // a zero of the paired factor
    CHECK(std::abs(tq::q_eval(2, ro.roots2[0] - 1.0, ro)) < 1e-15);
}

TEST_CASE("inhomogeneous weight values") {
    BoundaryParams p0{0.0, 0.0, 0.0, 0.0};
    CHECK(std::abs(tq::x_param(p0)) < 1e-15);
    BoundaryParams p1{1.0, 1.0, 0.0, 0.0};
    CHECK(std::abs(tq::x_param(p1) - (std::sqrt(2.0) - 2.0)) < 1e-14);
}

TEST_CASE("one-site vacuum trial terms") {
    ModelConfig cfg = one_site_homogeneous();
    tq::BetheRoots vac;
    vac.open = false;
    Rng rng(51);
    for (int k = 0; k < 4; ++k) {
        cx u = rng.annulus();
        CHECK(std::abs(tq::z_term(1, u, vac, cfg) - a1(u)) < 1e-13);
        cx sum = 0.0;
        for (int i = 1; i <= 5; ++i) sum += tq::z_term(i, u, vac, cfg);
        cx expect = 5.0 * u * u + 7.5 * u + 1.5;
        CHECK(std::abs(sum - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("vacuum eigenvalue satisfies the product relation at the origin") {
    ModelConfig cfg = one_site_homogeneous();
    tq::BetheRoots vac;
    vac.open = false;
    cx l0 = tq::lambda_eval(tq::Level::Fundamental, 0.0, vac, cfg);
    cx l32 = tq::lambda_eval(tq::Level::Fundamental, -1.5, vac, cfg);
    CHECK(std::abs(l0 * l32 - cx(2.25)) <= 1e-12);
}

TEST_CASE("vacuum asymptotic leading coefficient") {
    ModelConfig cfg = one_site_homogeneous();
    tq::BetheRoots vac;
    vac.open = false;
    cx big(137.0, 21.0);
    cx val = tq::lambda_eval(tq::Level::Fundamental, big, vac, cfg);
    cx lead = val / (big * big);
    CHECK(std::abs(lead - cx(5.0)) <= 0.2);  // leading term dominates at |u| ~ 1e2
}

TEST_CASE("open trial terms vanish with the inhomogeneous weight") {
    ModelConfig cfg = make_open(1, 61);
    cfg.bp = BoundaryParams{0.0, 0.0, 0.0, 0.0};
    tq::BetheRoots r;
    r.open = true;
    r.roots2 = {cx(0.4, 0.1), cx(0.9, -0.2)};
    r.x = tq::x_param(cfg.bp);
    CHECK(std::abs(r.x) < 1e-15);
    Rng rng(52);
    for (int k = 0; k < 20; ++k) {
        cx u = rng.annulus();
        for (int i = 1; i <= 5; ++i)
            CHECK(std::abs(tq::f_term(i, u, r, cfg)) == 0.0);
    }
}

TEST_CASE("periodic functional relations for the vacuum at the inhomogeneities") {
    // two sites, generic points; the no-root sector solves its conditions
    ModelConfig cfg = make_periodic(2, 63);
    tq::BetheRoots vac;
    vac.open = false;
    auto L = [&](tq::Level lv, cx u) { return tq::lambda_eval(lv, u, vac, cfg); };
    for (cx tj : cfg.theta) {
        cx prod = 1.0;
        for (cx th : cfg.theta) prod *= rho_tilde0(tj - th);
        // scalar product relation
        cx lhs1 = L(tq::Level::Fundamental, tj) * L(tq::Level::Fundamental, tj - 1.5);
        cx rhs1 = 1.0;
        for (cx th : cfg.theta) rhs1 *= a1(tj - th) * e1(tj - th - 1.5);
        CHECK(std::abs(lhs1 - rhs1) <= 1e-9 * (1.0 + std::abs(rhs1)));
        // closure onto the 11-dim level
        cx lhs2 = L(tq::Level::Fundamental, tj) * L(tq::Level::Fundamental, tj - 1.0);
        cx rhs2 = prod * L(tq::Level::Eleven, tj - 0.5);
        CHECK(std::abs(lhs2 - rhs2) <= 1e-9 * (1.0 + std::abs(rhs2)));
        // closure onto the 15-dim level
        cx lhs3 = L(tq::Level::Fundamental, tj) * L(tq::Level::Eleven, tj - 1.5);
        cx rhs3 = prod * L(tq::Level::Fifteen, tj - 1.0);
        CHECK(std::abs(lhs3 - rhs3) <= 1e-9 * (1.0 + std::abs(rhs3)));
        // closure onto the spinor level
        cx lhs4 = L(tq::Level::Fundamental, tj) * L(tq::Level::Fifteen, tj - 2.0);
        cx rhs4 = prod * L(tq::Level::Spinor, tj - 0.25) * L(tq::Level::Spinor, tj - 2.75);
        CHECK(std::abs(lhs4 - rhs4) <= 1e-9 * (1.0 + std::abs(rhs4)));
        // degenerate closures
        cx lhs5 = L(tq::Level::Fundamental, tj) * L(tq::Level::Eleven, tj - 1.0);
        cx rhs5 = prod * L(tq::Level::Fundamental, tj - 0.5);
        CHECK(std::abs(lhs5 - rhs5) <= 1e-9 * (1.0 + std::abs(rhs5)));
        cx lhs6 = L(tq::Level::Fundamental, tj) * L(tq::Level::Fifteen, tj - 0.5);
        cx rhs6 = prod * L(tq::Level::Eleven, tj);
        CHECK(std::abs(lhs6 - rhs6) <= 1e-9 * (1.0 + std::abs(rhs6)));
        cx lhs7 = L(tq::Level::Fundamental, tj) * L(tq::Level::Spinor, tj - 1.25);
        cx rhs7 = prod * L(tq::Level::Spinor, tj - 0.25);
        CHECK(std::abs(lhs7 - rhs7) <= 1e-9 * (1.0 + std::abs(rhs7)));
    }
}

TEST_CASE("spinor-level branches agree for solved root sets") {
    ModelConfig cfg = make_periodic(2, 63);
    tq::BetheRoots vac;
    vac.open = false;
    Rng rng(53);
    for (int k = 0; k < 10; ++k) {
        cx u = rng.annulus();
        cx b1v = tq::lambda_s_branch(1, u, vac, cfg);
        cx b2v = tq::lambda_s_branch(2, u, vac, cfg);
        CHECK(std::abs(b1v - b2v) <= 1e-8 * (1.0 + std::abs(b1v)));
    }
}

TEST_CASE("root-condition residuals are symmetric under root relabeling") {
    ModelConfig cfg = make_periodic(2, 67);
    tq::BetheRoots r;
    r.open = false;
    r.roots1 = {cx(0.31, 0.2), cx(-0.42, 0.6)};
    r.roots2 = {cx(0.11, -0.37)};
    cx before = tq::bae_residual(0, 2, r, cfg);
    std::swap(r.roots1[0], r.roots1[1]);
    cx after = tq::bae_residual(0, 2, r, cfg);
    CHECK(std::abs(before - after) <= 1e-13 * (1.0 + std::abs(before)));
}
