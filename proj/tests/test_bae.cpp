#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/bae.hpp"

using namespace b2chain;

TEST_CASE("empty sector converges trivially") {
    ModelConfig cfg = make_periodic(1, 5);
    auto sols = bae::solve_sector(cfg, 0, 0, bae::SolveOptions{});
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].converged);
    CHECK(sols[0].residual_inf == 0.0);
}

TEST_CASE("one-site homogeneous chain: every branch is matched") {
    ModelConfig cfg;
    cfg.N = 1;
    cfg.theta = {0.0};
    bae::SolveOptions opt;
    opt.seed = 42;
    auto rep = bae::run_spectrum_match(cfg, opt);
    CHECK(rep.total_branches == 5);
    CHECK(rep.matched_branches == 5);
    CHECK(rep.worst_match_error <= 1e-6);
    CHECK(rep.worst_bae_residual <= 1e-10);
}

TEST_CASE("converged solutions satisfy their root conditions when re-evaluated") {
    ModelConfig cfg = make_periodic(2, 42);
    bae::SolveOptions opt;
    opt.seed = 42;
    auto sols = bae::solve_sector(cfg, 1, 0, opt);
    for (const auto& s : sols) {
        REQUIRE(s.converged);
        for (int k = 0; k < s.roots.L1(); ++k)
            CHECK(std::abs(tq::bae_residual(k, 1, s.roots, cfg)) <= 1e-10);
    }
}

TEST_CASE("open one-site run yields matched solutions in the tied sectors") {
    ModelConfig cfg = make_open(1, 42);
    bae::SolveOptions opt;
    opt.seed = 42;
    auto rep = bae::run_spectrum_match(cfg, opt);
    CHECK(rep.total_branches == 5);
    CHECK(rep.matched_branches >= 1);
    for (const auto& sect : rep.sectors)
        CHECK(sect.l2 == 2 * sect.l1 + cfg.N + 1);
    CHECK(rep.worst_bae_residual <= 1e-10);
}

TEST_CASE("diagonal boundary limit matches direct diagonalization") {
    ModelConfig cfg = make_open(1, 42);
    cfg.bp = BoundaryParams{0.0, 0.0, 0.0, 0.0};
    // the inhomogeneous weight vanishes in this limit
    CHECK(std::abs(tq::x_param(cfg.bp)) == 0.0);
    bae::SolveOptions opt;
    opt.seed = 42;
    auto rep = bae::run_spectrum_match(cfg, opt);
    CHECK(rep.matched_branches >= 1);
    CHECK(rep.worst_match_error <= 1e-8);
}

TEST_CASE("matching points stay away from the trial-term poles") {
    ModelConfig cfg = make_periodic(2, 7);
    auto pts = bae::matching_points(cfg, 11, 7);
    CHECK(pts.size() == 11);
    for (cx u : pts)
        for (double bad : {0.0, -0.5, -1.0})
            CHECK(std::abs(u - bad) > 0.05);
}
