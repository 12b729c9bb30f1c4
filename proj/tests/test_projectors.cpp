#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/projectors.hpp"
#include "b2chain/linalg.hpp"

#include <map>

using namespace b2chain;

TEST_CASE("all projector bases are orthonormal and idempotent with exact ranks") {
    const std::map<std::string, int> expected_rank = {
        {"ss5", 5},        {"ss5_swap", 5},  {"vv1", 1},         {"vv11", 11},
        {"vvv15", 15},     {"vvvv16", 16},   {"sv4", 4},         {"vs4", 4},
        {"barv_v5", 5},    {"v_barv5", 5},   {"tildev_v11", 11}, {"v_tildev11", 11},
    };
    auto ids = isometry_ids();
    CHECK(ids.size() == 12);
    for (const auto& id : ids) {
        CAPTURE(id);
        const Isometry& iso = isometry(id);
        REQUIRE(expected_rank.count(id) == 1);
        CHECK(iso.rank() == expected_rank.at(id));
        // U^dag U = I (orthonormal listed basis)
        CHECK(residual(iso.u.dagger() * iso.u, CMat::identity(iso.rank())) <= 1e-12);
        CMat p = iso.projector();
        CHECK(residual(p * p, p) <= 1e-12);
        CHECK(residual(p, p.dagger()) <= 1e-12);
        CHECK(std::abs(p.trace() - cx(iso.rank())) <= 1e-12);
    }
}

TEST_CASE("swapped spinor-pair basis spans the same subspace") {
    CMat p1 = isometry("ss5").projector();
    CMat p2 = isometry("ss5_swap").projector();
    CHECK(residual(p1, p2) <= 1e-13);
}

TEST_CASE("singlet and antisymmetric projectors on V x V are orthogonal complements inside V x V") {
    CMat p1 = isometry("vv1").projector();
    CMat p11 = isometry("vv11").projector();
    // the 11-dim projector contains the singlet: P11 P1 = P1
    CHECK(residual(p11 * p1, p1) <= 1e-12);
    // the antisymmetric part alone is orthogonal to the singlet
    CMat anti = p11 - p1;
    CHECK(residual(anti * p1, CMat(25, 25)) <= 1e-12);
    CHECK(std::abs(anti.trace() - cx(10.0)) <= 1e-12);
}

TEST_CASE("antisymmetry audit of the 11- and 15-dim bases") {
    // first ten columns of vv11 are antisymmetric under factor swap
    const Isometry& iso = isometry("vv11");
    CMat p = permutation_operator(5);
    for (int c = 0; c < 10; ++c) {
        double worst = 0.0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                worst = std::max(worst, std::abs(iso.u(i * 5 + j, c) + iso.u(j * 5 + i, c)));
        CHECK(worst <= 1e-14);
    }
    // the singlet column is symmetric
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(std::abs(iso.u(i * 5 + j, 10) - iso.u(j * 5 + i, 10)) <= 1e-14);

    // first ten columns of vvv15 are fully antisymmetric in the three factors
    const Isometry& iso15 = isometry("vvv15");
    for (int c = 0; c < 10; ++c) {
        double worst = 0.0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k) {
                    const cx v = iso15.u((i * 5 + j) * 5 + k, c);
                    worst = std::max(worst, std::abs(v + iso15.u((j * 5 + i) * 5 + k, c)));
                    worst = std::max(worst, std::abs(v + iso15.u((i * 5 + k) * 5 + j, c)));
                }
        CHECK(worst <= 1e-14);
    }
}

TEST_CASE("gauge matrices") {
    const CMat& s12 = gauge_s12();
    CHECK(s12.rows() == 16);
    CHECK(residual(s12 * gauge_s12_inverse(), CMat::identity(16)) <= 1e-12);
    const CMat& sb = gauge_s_barv();
    CHECK(sb.rows() == 11);
    CHECK(std::abs(sb(10, 10) - cx(std::sqrt(13.0 / 61.0))) <= 1e-15);
    CHECK(residual(sb * gauge_s_barv_inverse(), CMat::identity(11)) <= 1e-14);
}

TEST_CASE("unknown projector id is rejected") {
    CHECK_THROWS(isometry("nope"));
}
