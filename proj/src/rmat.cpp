#include "b2chain/rmat.hpp"
#include "b2chain/weights.hpp"
#include "b2chain/tensor.hpp"

namespace b2chain {

namespace {

struct Perturbation {
    bool active = false;
    int row = 0, col = 0;
    cx delta;
};
Perturbation g_pert;

}  // namespace

void set_rvv_perturbation(int row, int col, cx delta) { g_pert = {true, row, col, delta}; }
void clear_rvv_perturbation() { g_pert.active = false; }

CMat r_vv(cx u) {
    using namespace weights;
    CMat r(25, 25);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k)
                for (int l = 1; l <= 5; ++l) {
                    cx v = 0.0;
                    if (i == k && j == l) v += u * (u + 1.5);
                    if (i == l && j == k) v += u + 1.5;
                    if (j == 6 - i && k == 6 - l) v -= u;
                    if (v != cx(0.0)) r((i - 1) * 5 + (j - 1), (k - 1) * 5 + (l - 1)) = v;
                }
    if (g_pert.active) r(g_pert.row, g_pert.col) += g_pert.delta;
    return r;
}

CMat r_vv_table(cx u) {
    using namespace weights;
    CMat r(25, 25);
    auto at = [&r](int i, int j, int k, int l) -> cx& {
        return r((i - 1) * 5 + (j - 1), (k - 1) * 5 + (l - 1));
    };
    for (int i = 1; i <= 5; ++i) {
        const int ib = 6 - i;
        if (i != 3) at(i, i, i, i) = a1(u);
        else at(i, i, i, i) = f1(u);
        if (i != ib) {
            at(i, ib, ib, i) = c1(u);
            at(i, ib, i, ib) = e1(u);
        }
        for (int j = 1; j <= 5; ++j) {
            if (j == i || j == ib) continue;
            at(i, j, i, j) = b1(u);
            at(i, j, j, i) = g1(u);
            at(i, ib, j, 6 - j) = d1(u);
        }
    }
    return r;
}

CMat r_ss(cx u) {
    using namespace weights;
    CMat r(16, 16);
    auto at = [&r](int i, int j, int k, int l) -> cx& {
        return r((i - 1) * 4 + (j - 1), (k - 1) * 4 + (l - 1));
    };
    auto xi = [](int i) { return (i <= 2) ? 1.0 : -1.0; };
    for (int i = 1; i <= 4; ++i) {
        const int ib = 5 - i;
        at(i, i, i, i) = a2(u);
        at(i, ib, ib, i) = c2(u);
        at(i, ib, i, ib) = e2(u);
        for (int j = 1; j <= 4; ++j) {
            if (j == i || j == ib) continue;
            at(i, j, i, j) = b2(u);
            at(i, j, j, i) = g2(u);
            // printed with the sign rule xi_i xi_{jbar} R^{i ibar}_{j jbar} = d2(u)
            at(i, ib, j, 5 - j) = d2(u) / (xi(i) * xi(5 - j));
        }
    }
    return r;
}

CMat r_sv(cx u) {
    using namespace weights;
    CMat r(20, 20);
    auto at = [&r](int i, int a, int j, int b) -> cx& {
        return r((i - 1) * 5 + (a - 1), (j - 1) * 5 + (b - 1));
    };
    const cx va = a3(u), vb = b3(u), vc = c3(u), ve = e3(u), vg = g3(u);
    for (auto [i, a] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 4}, {3, 2}, {3, 5}, {4, 4}, {4, 5}})
        at(i, a, i, a) = va;
    for (auto [i, a] : {std::pair{1, 4}, {1, 5}, {2, 2}, {2, 5}, {3, 1}, {3, 4}, {4, 1}, {4, 2}})
        at(i, a, i, a) = vb;
    for (auto [i, a] : {std::pair{1, 3}, {2, 3}, {3, 3}, {4, 3}})
        at(i, a, i, a) = ve;
    // off-diagonal c3 block, signs as printed
    at(1, 4, 4, 1) = -vc; at(1, 5, 4, 2) = vc;
    at(2, 2, 3, 1) = -vc; at(2, 5, 3, 4) = vc;
    at(3, 1, 2, 2) = -vc; at(3, 4, 2, 5) = vc;
    at(4, 1, 1, 4) = -vc; at(4, 2, 1, 5) = vc;
    // off-diagonal g3 block, signs as printed
    at(1, 3, 2, 2) = -vg; at(1, 4, 2, 3) = vg;
    at(1, 3, 3, 1) = -vg; at(1, 5, 3, 3) = vg;
    at(2, 2, 1, 3) = -vg; at(2, 3, 1, 4) = vg;
    at(2, 3, 4, 1) = vg;  at(2, 5, 4, 3) = -vg;
    at(3, 1, 1, 3) = -vg; at(3, 3, 1, 5) = vg;
    at(3, 3, 4, 2) = -vg; at(3, 4, 4, 3) = vg;
    at(4, 1, 2, 3) = vg;  at(4, 3, 2, 5) = -vg;
    at(4, 2, 3, 3) = -vg; at(4, 3, 3, 4) = vg;
    return r;
}

CMat r_vs(cx u) { return swap_conjugate(r_sv(u), 4, 5); }

CMat crossing_v() {
    CMat v(5, 5);
    for (int i = 0; i < 5; ++i) v(i, 4 - i) = 1.0;
    return v;
}

}  // namespace b2chain
