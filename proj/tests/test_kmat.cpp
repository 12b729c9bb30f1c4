#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b2chain/kmat.hpp"
#include "b2chain/rng.hpp"
#include "b2chain/tensor.hpp"

using namespace b2chain;

namespace {

BoundaryParams generic_params() { return {1.0, 0.5, 0.3, 0.7}; }

BoundaryParams random_params(Rng& rng) {
    for (;;) {
        BoundaryParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                         rng.uniform(-1, 1)};
        // keep both boundary norms real and safely positive
        if ((1.0 + p.c1 * p.c2).real() > 0.1 && (1.0 + p.ct1 * p.ct2).real() > 0.1) return p;
    }
}

}  // namespace

TEST_CASE("vector K-matrix special structure") {
    BoundaryParams p = generic_params();
    // value at the origin is a multiple of the identity
    CHECK(residual(k_matrix(KKind::Vm, 0.0, p),
                   -(1.0 + p.c1 * p.c2) * CMat::identity(5)) <= 1e-14);
    // diagonal for vanishing boundary parameters
    BoundaryParams p0{0.0, 0.0, 0.0, 0.0};
    for (cx u : {cx(0.3), cx(-0.8, 0.2)}) {
        CMat k = k_matrix(KKind::Vm, u, p0);
        CMat expect(5, 5);
        expect(0, 0) = -1.0 + 4.0 * u;
        expect(1, 1) = -(4.0 * u + 1.0);
        expect(2, 2) = -1.0 - 4.0 * u;
        expect(3, 3) = -(4.0 * u + 1.0);
        expect(4, 4) = -1.0 + 4.0 * u;
        CHECK(residual(k, expect) <= 1e-14);
        CMat kp = k_matrix(KKind::Vp, u, p0);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (i != j) CHECK(std::abs(kp(i, j)) <= 1e-14);
    }
    CHECK(std::abs(k_matrix(KKind::Vp, 0.0, p).trace() - (1.0 + p.ct1 * p.ct2)) <= 1e-13);
}

TEST_CASE("boundary matrices cannot be diagonalized simultaneously") {
    BoundaryParams p = generic_params();
    CMat a = k_matrix(KKind::Vm, 0.3, p);
    CMat b = k_matrix(KKind::Vp, 0.6, p);
    CHECK((a * b - b * a).max_abs() > 1e-3);
}

TEST_CASE("fused K-matrices: cached polynomial matches the direct construction") {
    BoundaryParams p = generic_params();
    Rng rng(41);
    for (KKind k : {KKind::BarVm, KKind::BarVp, KKind::TildeVm, KKind::TildeVp}) {
        for (int i = 0; i < 3; ++i) {
            cx u = rng.annulus(0.9, 2.2);
            CMat direct = k_matrix_direct(k, u, p);
            CMat cached = k_matrix(k, u, p);
            CAPTURE(k_kind_name(k));
            CHECK(residual(direct, cached) <= 1e-9);
        }
    }
    // near a normalization zero the direct route refuses, the cached one works
    CHECK_THROWS(k_matrix_direct(KKind::BarVm, 0.5, p));
    CHECK(k_matrix(KKind::BarVm, 0.5, p).all_finite());
}

TEST_CASE("reflection equations for all eight boundary kinds") {
    Rng rng(42);
    for (int rep = 0; rep < 5; ++rep) {
        BoundaryParams p = random_params(rng);
        cx u = rng.annulus(0.3, 1.1), v = rng.annulus(0.3, 1.1);
        for (KKind k : {KKind::Vm, KKind::Vp, KKind::Sm, KKind::Sp, KKind::BarVm, KKind::BarVp,
                        KKind::TildeVm, KKind::TildeVp}) {
            CAPTURE(k_kind_name(k));
            CAPTURE(rep);
            auto r = check_reflection_equation(k, u, v, p);
            CHECK(r.raw_residual <= 1e-10);
        }
    }
    // symmetric point: both sides coincide identically
    BoundaryParams p = generic_params();
    auto r = check_reflection_equation(KKind::Vm, 0.45, 0.45, p);
    CHECK(r.raw_residual <= 1e-13);
}

TEST_CASE("boundary quantum determinants match the closed forms") {
    Rng rng(43);
    BoundaryParams p = generic_params();
    CHECK(std::abs(quantum_det_k(-1, 0.25, p)) <= 1e-10 * std::abs(quantum_det_k(-1, 1.3, p)));
    BoundaryParams p0{0.0, 0.0, 0.0, 0.0};
    CHECK(std::abs(quantum_det_k(-1, 0.0, p0) - cx(-1.5)) <= 1e-12);
    for (int rep = 0; rep < 10; ++rep) {
        BoundaryParams pr = random_params(rng);
        cx u = rng.annulus(0.3, 1.7);
        for (int sign : {-1, +1}) {
            cx got = quantum_det_k(sign, u, pr);
            cx want = quantum_det_k_closed(sign, u, pr);
            CHECK(std::abs(got - want) <= 1e-10 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("special values of the boundary matrices") {
    Rng rng(44);
    for (BoundaryParams p : {generic_params(), random_params(rng)}) {
        auto reports = check_k_special_values(p);
        CHECK(reports.size() == 17);
        for (const auto& r : reports) {
            CAPTURE(r.id);
            CHECK(r.raw_residual <= 1e-10);
        }
    }
    // vanishing boundary parameters: everything reduces to rational constants
    BoundaryParams p0{0.0, 0.0, 0.0, 0.0};
    for (const auto& r : check_k_special_values(p0)) {
        CAPTURE(r.id);
        CHECK(r.raw_residual <= 1e-11);
    }
}

TEST_CASE("K-matrix fusion consistency") {
    Rng rng(45);
    BoundaryParams p = generic_params();
    for (const auto& id : k_fusion_ids()) {
        CAPTURE(id);
        for (int rep = 0; rep < 2; ++rep) {
            cx u = rng.annulus(0.8, 1.9);
            auto r = check_k_fusion_consistency(id, u, p);
            CHECK(r.fitted_residual <= 1e-9);
        }
    }
    // the direct value at the origin
    auto r = check_k_fusion_consistency("v-from-s-minus", 0.0, p);
    CHECK(r.fitted_residual <= 1e-10);
}
