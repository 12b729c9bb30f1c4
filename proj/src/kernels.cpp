#include "b2chain/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <numeric>

namespace b2chain::kernels {

namespace {

int g_max_threads = 0;  // 0 = uninitialized

int env_thread_cap() {
    const char* s = std::getenv("B2CHAIN_THREADS");
    if (!s) return omp_get_max_threads();
    int n = std::atoi(s);
    if (n < 1) n = 1;
    return n;
}

}  // namespace

int max_threads() {
    if (g_max_threads == 0) g_max_threads = env_thread_cap();
    return g_max_threads;
}

void set_max_threads(int n) { g_max_threads = n < 1 ? 1 : n; }

void matmul_serial(const cx* a, const cx* b, cx* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        cx* ci = c + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] = 0.0;
        const cx* ai = a + static_cast<size_t>(i) * k;
        for (int l = 0; l < k; ++l) {
            const cx s = ai[l];
            if (s == cx(0.0)) continue;
            const cx* bl = b + static_cast<size_t>(l) * n;
            for (int j = 0; j < n; ++j) ci[j] += s * bl[j];
        }
    }
}

void matmul_omp(const cx* a, const cx* b, cx* c, int m, int k, int n) {
    const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int i = 0; i < m; ++i) {
        cx* ci = c + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] = 0.0;
        const cx* ai = a + static_cast<size_t>(i) * k;
        for (int l = 0; l < k; ++l) {
            const cx s = ai[l];
            if (s == cx(0.0)) continue;
            const cx* bl = b + static_cast<size_t>(l) * n;
            for (int j = 0; j < n; ++j) ci[j] += s * bl[j];
        }
    }
}

CMat matmul(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimension mismatch");
    CMat c(a.rows(), b.cols());
    const size_t work = static_cast<size_t>(a.rows()) * a.cols() * b.cols();
    if (work >= 200000 && max_threads() > 1)
        matmul_omp(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    else
        matmul_serial(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

namespace {

struct EmbedPlan {
    size_t total = 1;       // product of dims
    int fiber = 1;          // product of dims at the listed sites
    std::vector<size_t> fiber_offset;   // flat offset of each fiber index
    std::vector<size_t> rest_base;      // flat base offset of each rest config
    // nonzeros of op, row-compressed
    std::vector<std::vector<std::pair<int, cx>>> nz;
};

EmbedPlan make_plan(const CMat& op, const std::vector<int>& sites, const std::vector<int>& dims) {
    const int L = static_cast<int>(dims.size());
    std::vector<char> on(L, 0);
    for (int s : sites) {
        if (s < 0 || s >= L) throw std::invalid_argument("apply_embedded: site out of range");
        if (on[s]) throw std::invalid_argument("apply_embedded: duplicate site");
        on[s] = 1;
    }
    EmbedPlan p;
    std::vector<size_t> stride(L, 1);
    for (int q = L - 2; q >= 0; --q) stride[q] = stride[q + 1] * dims[q + 1];
    for (int q = 0; q < L; ++q) p.total *= dims[q];

    for (int s : sites) p.fiber *= dims[s];
    if (op.rows() != p.fiber || op.cols() != p.fiber)
        throw std::invalid_argument("apply_embedded: op dimension does not match listed sites");

    // fiber offsets, site-list order with the last listed site fastest
    p.fiber_offset.assign(p.fiber, 0);
    for (int f = 0; f < p.fiber; ++f) {
        int rem = f;
        size_t off = 0;
        for (int t = static_cast<int>(sites.size()) - 1; t >= 0; --t) {
            int d = dims[sites[t]];
            off += static_cast<size_t>(rem % d) * stride[sites[t]];
            rem /= d;
        }
        p.fiber_offset[f] = off;
    }

    // base offsets of the untouched factors
    std::vector<int> rest;
    for (int q = 0; q < L; ++q)
        if (!on[q]) rest.push_back(q);
    size_t rn = 1;
    for (int q : rest) rn *= dims[q];
    p.rest_base.assign(rn, 0);
    for (size_t r = 0; r < rn; ++r) {
        size_t rem = r, off = 0;
        for (int t = static_cast<int>(rest.size()) - 1; t >= 0; --t) {
            int d = dims[rest[t]];
            off += (rem % d) * stride[rest[t]];
            rem /= d;
        }
        p.rest_base[r] = off;
    }

    p.nz.resize(p.fiber);
    for (int i = 0; i < p.fiber; ++i)
        for (int j = 0; j < p.fiber; ++j)
            if (op(i, j) != cx(0.0)) p.nz[i].emplace_back(j, op(i, j));
    return p;
}

template <bool Parallel>
void apply_impl(const EmbedPlan& p, const CMat& x, CMat& y, int nt) {
    const int cols = x.cols();
    const long long units = static_cast<long long>(p.rest_base.size()) * p.fiber;
#pragma omp parallel for schedule(static) num_threads(nt) if (Parallel)
    for (long long u = 0; u < units; ++u) {
        const size_t rb = p.rest_base[static_cast<size_t>(u) / p.fiber];
        const int i = static_cast<int>(u % p.fiber);
        cx* yr = y.data() + (rb + p.fiber_offset[i]) * cols;
        for (int c = 0; c < cols; ++c) yr[c] = 0.0;
        for (const auto& [j, s] : p.nz[i]) {
            const cx* xr = x.data() + (rb + p.fiber_offset[j]) * cols;
            for (int c = 0; c < cols; ++c) yr[c] += s * xr[c];
        }
    }
}

}  // namespace

void apply_embedded_serial(const CMat& op, const std::vector<int>& sites,
                           const std::vector<int>& dims, const CMat& x, CMat& y) {
    EmbedPlan p = make_plan(op, sites, dims);
    if (static_cast<size_t>(x.rows()) != p.total)
        throw std::invalid_argument("apply_embedded: x rows do not match layout");
    y = CMat(x.rows(), x.cols());
    apply_impl<false>(p, x, y, 1);
}

void apply_embedded_omp(const CMat& op, const std::vector<int>& sites,
                        const std::vector<int>& dims, const CMat& x, CMat& y) {
    EmbedPlan p = make_plan(op, sites, dims);
    if (static_cast<size_t>(x.rows()) != p.total)
        throw std::invalid_argument("apply_embedded: x rows do not match layout");
    y = CMat(x.rows(), x.cols());
    apply_impl<true>(p, x, y, max_threads());
}

CMat apply_embedded(const CMat& op, const std::vector<int>& sites,
                    const std::vector<int>& dims, const CMat& x) {
    CMat y;
    const size_t work = static_cast<size_t>(x.rows()) * x.cols();
    if (work >= 100000 && max_threads() > 1)
        apply_embedded_omp(op, sites, dims, x, y);
    else
        apply_embedded_serial(op, sites, dims, x, y);
    return y;
}

}  // namespace b2chain::kernels
