// Serial vs OpenMP kernel comparison on the shapes that dominate the
// identity suite: dense complex matmul and embedded two-site application.
#include "b2chain/kernels.hpp"
#include "b2chain/rmat.hpp"
#include "b2chain/rng.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

using namespace b2chain;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

CMat random_matrix(Rng& rng, int r, int c) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = cx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return m;
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = now_seconds();
        f();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

}  // namespace

int main() {
    Rng rng(2024);
    std::printf("threads available: %d\n\n", kernels::max_threads());

    std::printf("dense complex matmul (n x n):\n");
    for (int n : {128, 256, 512, 1024}) {
        CMat a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
        CMat c(n, n);
        const double flops = 8.0 * double(n) * n * n;
        double ts = time_best_of(3, [&] {
            kernels::matmul_serial(a.data(), b.data(), c.data(), n, n, n);
        });
        double tp = time_best_of(3, [&] {
            kernels::matmul_omp(a.data(), b.data(), c.data(), n, n, n);
        });
        std::printf("  n=%4d  serial %7.1f ms (%5.2f GF/s)   omp %7.1f ms (%5.2f GF/s)   speedup %.2fx\n",
                    n, ts * 1e3, flops / ts * 1e-9, tp * 1e3, flops / tp * 1e-9, ts / tp);
    }

    std::printf("\ntwo-site R application on a chain block:\n");
    for (int factors : {4, 5}) {
        std::vector<int> dims(factors, 5);
        int total = 1;
        for (int d : dims) total *= d;
        CMat x = random_matrix(rng, total, total);
        CMat r = r_vv(cx(0.37, 0.21));
        CMat y;
        double ts = time_best_of(3, [&] {
            kernels::apply_embedded_serial(r, {0, factors - 1}, dims, x, y);
        });
        double tp = time_best_of(3, [&] {
            kernels::apply_embedded_omp(r, {0, factors - 1}, dims, x, y);
        });
        std::printf("  dim=%5d  serial %7.1f ms   omp %7.1f ms   speedup %.2fx\n", total,
                    ts * 1e3, tp * 1e3, ts / tp);
    }

    std::printf("\nmonodromy-style sweep (eight applications on a 3125-dim block):\n");
    {
        std::vector<int> dims(5, 5);
        CMat x = random_matrix(rng, 3125, 3125);
        CMat r = r_vv(cx(0.37, 0.21));
        auto sweep = [&](bool parallel) {
            CMat y = x;
            CMat tmp;
            for (int k = 0; k < 8; ++k) {
                if (parallel)
                    kernels::apply_embedded_omp(r, {k % 4, 4}, dims, y, tmp);
                else
                    kernels::apply_embedded_serial(r, {k % 4, 4}, dims, y, tmp);
                std::swap(y, tmp);
            }
            return y.max_abs();
        };
        double ts = time_best_of(2, [&] { sweep(false); });
        double tp = time_best_of(2, [&] { sweep(true); });
        std::printf("  serial %7.1f ms   omp %7.1f ms   speedup %.2fx\n", ts * 1e3, tp * 1e3,
                    ts / tp);
    }
    return 0;
}
