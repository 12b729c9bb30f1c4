#include "b2chain/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace b2chain {

CMat lu_solve(CMat a, CMat b) {
    if (!a.square() || a.rows() != b.rows())
        throw std::invalid_argument("lu_solve: shape mismatch");
    const int n = a.rows();
    const int m = b.cols();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > best) { best = std::abs(a(i, k)); piv = i; }
        if (best == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        const cx d = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cx f = a(i, k) / d;
            if (f == cx(0.0)) continue;
            a(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (int j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        const cx d = a(k, k);
        for (int j = 0; j < m; ++j) {
            cx s = b(k, j);
            for (int l = k + 1; l < n; ++l) s -= a(k, l) * b(l, j);
            b(k, j) = s / d;
        }
    }
    return b;
}

CMat inverse(const CMat& a) { return lu_solve(a, CMat::identity(a.rows())); }

CMat lstsq(CMat a, CMat b) {
    const int m = a.rows(), n = a.cols();
    if (m < n) throw std::invalid_argument("lstsq: underdetermined system");
    if (b.rows() != m) throw std::invalid_argument("lstsq: rhs rows mismatch");
    const int k = b.cols();
    // Householder QR, applying reflectors to b on the fly
    for (int j = 0; j < n; ++j) {
        double nrm = 0.0;
        for (int i = j; i < m; ++i) nrm += std::norm(a(i, j));
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw std::runtime_error("lstsq: rank deficient");
        cx alpha = -nrm;
        if (a(j, j) != cx(0.0)) alpha = -(a(j, j) / std::abs(a(j, j))) * nrm;
        std::vector<cx> v(m - j);
        v[0] = a(j, j) - alpha;
        for (int i = j + 1; i < m; ++i) v[i - j] = a(i, j);
        double vv = 0.0;
        for (const auto& z : v) vv += std::norm(z);
        a(j, j) = alpha;
        for (int i = j + 1; i < m; ++i) a(i, j) = 0.0;
        if (vv == 0.0) continue;
        for (int c = j + 1; c < n; ++c) {
            cx s = 0.0;
            for (int i = j; i < m; ++i) s += std::conj(v[i - j]) * a(i, c);
            s *= 2.0 / vv;
            for (int i = j; i < m; ++i) a(i, c) -= s * v[i - j];
        }
        for (int c = 0; c < k; ++c) {
            cx s = 0.0;
            for (int i = j; i < m; ++i) s += std::conj(v[i - j]) * b(i, c);
            s *= 2.0 / vv;
            for (int i = j; i < m; ++i) b(i, c) -= s * v[i - j];
        }
    }
    CMat x(n, k);
    for (int i = n - 1; i >= 0; --i)
        for (int c = 0; c < k; ++c) {
            cx s = b(i, c);
            for (int l = i + 1; l < n; ++l) s -= a(i, l) * x(l, c);
            x(i, c) = s / a(i, i);
        }
    return x;
}

namespace {

// reduce to upper Hessenberg, accumulating the unitary similarity in q
void hessenberg(CMat& h, CMat& q) {
    const int n = h.rows();
    q = CMat::identity(n);
    for (int k = 0; k < n - 2; ++k) {
        double nrm = 0.0;
        for (int i = k + 1; i < n; ++i) nrm += std::norm(h(i, k));
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        cx alpha = -nrm;
        if (h(k + 1, k) != cx(0.0)) alpha = -(h(k + 1, k) / std::abs(h(k + 1, k))) * nrm;
        std::vector<cx> v(n - k - 1);
        v[0] = h(k + 1, k) - alpha;
        for (int i = k + 2; i < n; ++i) v[i - k - 1] = h(i, k);
        double vv = 0.0;
        for (const auto& z : v) vv += std::norm(z);
        if (vv == 0.0) continue;
        const double tau = 2.0 / vv;
        // H <- P H
        for (int c = k; c < n; ++c) {
            cx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, c);
            s *= tau;
            for (int i = k + 1; i < n; ++i) h(i, c) -= s * v[i - k - 1];
        }
        // H <- H P
        for (int r = 0; r < n; ++r) {
            cx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += h(r, i) * v[i - k - 1];
            s *= tau;
            for (int i = k + 1; i < n; ++i) h(r, i) -= s * std::conj(v[i - k - 1]);
        }
        // Q <- Q P
        for (int r = 0; r < n; ++r) {
            cx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += q(r, i) * v[i - k - 1];
            s *= tau;
            for (int i = k + 1; i < n; ++i) q(r, i) -= s * std::conj(v[i - k - 1]);
        }
    }
}

struct Givens { cx cf, sf; double r; };

// Wilkinson shift: eigenvalue of the trailing 2x2 closest to h(hi,hi)
cx wilkinson_shift(const CMat& h, int hi) {
    const cx a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
    const cx tr = a + d;
    const cx det = a * d - b * c;
    const cx disc = std::sqrt(tr * tr - 4.0 * det);
    const cx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

}  // namespace

EigResult eig_general(const CMat& m) {
    if (!m.square()) throw std::invalid_argument("eig_general: matrix not square");
    const int n = m.rows();
    if (n > 4096) throw std::invalid_argument("eig_general: dimension cap exceeded");
    EigResult res;
    if (n == 0) { res.converged = true; res.simple = true; return res; }

    CMat t = m, z;
    hessenberg(t, z);

    const double kSubdiagTol = 1e-12;
    const int max_iter = 100 * n;
    int iter = 0;
    int hi = n - 1;
    int stuck = 0;
    while (hi > 0) {
        // deflate
        bool deflated = false;
        for (int i = hi; i > 0; --i) {
            if (std::abs(t(i, i - 1)) <= kSubdiagTol * (std::abs(t(i - 1, i - 1)) + std::abs(t(i, i)))) {
                t(i, i - 1) = 0.0;
                if (i == hi) { --hi; deflated = true; break; }
            }
        }
        if (deflated) { stuck = 0; continue; }
        if (hi == 0) break;
        if (++iter > max_iter) break;

        int lo = hi;
        while (lo > 0 && t(lo, lo - 1) != cx(0.0)) --lo;
        cx shift = wilkinson_shift(t, hi);
        if (++stuck % 12 == 0)  // exceptional shift to break rare cycles
            shift = t(hi, hi) + cx(0.75 * std::abs(t(hi, hi - 1)), 0.0);

        // explicit shifted QR sweep on t[lo..hi] via Givens rotations
        std::vector<Givens> rots(hi - lo);
        for (int k = lo; k <= hi; ++k) t(k, k) -= shift;
        for (int k = lo; k < hi; ++k) {
            const cx f = t(k, k), g = t(k + 1, k);
            const double r = std::sqrt(std::norm(f) + std::norm(g));
            Givens gv;
            if (r == 0.0) { gv.cf = 1.0; gv.sf = 0.0; gv.r = 0.0; }
            else { gv.cf = std::conj(f) / r; gv.sf = std::conj(g) / r; gv.r = r; }
            rots[k - lo] = gv;
            for (int c = k; c <= std::min(hi, n - 1); ++c) {
                const cx x = t(k, c), y = t(k + 1, c);
                t(k, c) = gv.cf * x + gv.sf * y;
                t(k + 1, c) = -std::conj(gv.sf) * x + std::conj(gv.cf) * y;
            }
            // also touch trailing columns beyond hi (full rows of t)
            for (int c = hi + 1; c < n; ++c) {
                const cx x = t(k, c), y = t(k + 1, c);
                t(k, c) = gv.cf * x + gv.sf * y;
                t(k + 1, c) = -std::conj(gv.sf) * x + std::conj(gv.cf) * y;
            }
        }
        for (int k = lo; k < hi; ++k) {
            const Givens& gv = rots[k - lo];
            const int top = 0;  // full columns, t is globally upper Hessenberg
            for (int r2 = top; r2 <= std::min(k + 2, hi); ++r2) {
                const cx x = t(r2, k), y = t(r2, k + 1);
                t(r2, k) = x * std::conj(gv.cf) + y * std::conj(gv.sf);
                t(r2, k + 1) = -x * gv.sf + y * gv.cf;
            }
            for (int r2 = 0; r2 < n; ++r2) {
                const cx x = z(r2, k), y = z(r2, k + 1);
                z(r2, k) = x * std::conj(gv.cf) + y * std::conj(gv.sf);
                z(r2, k + 1) = -x * gv.sf + y * gv.cf;
            }
        }
        for (int k = lo; k <= hi; ++k) t(k, k) += shift;
    }
    res.iterations = iter;
    res.converged = iter <= max_iter;

    res.values.resize(n);
    for (int i = 0; i < n; ++i) res.values[i] = t(i, i);

    double tnorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) tnorm = std::max(tnorm, std::abs(t(i, j)));
    const double smin = std::max(1e-300, 1e-15 * tnorm);

    // right eigenvectors: back-substitution in the triangular factor
    CMat y_right(n, n);
    for (int i = 0; i < n; ++i) {
        y_right(i, i) = 1.0;
        for (int j = i - 1; j >= 0; --j) {
            cx s = 0.0;
            for (int k = j + 1; k <= i; ++k) s += t(j, k) * y_right(k, i);
            cx d = t(j, j) - res.values[i];
            if (std::abs(d) < smin) d = smin;
            y_right(j, i) = -s / d;
        }
    }
    // left eigenvectors: forward substitution in t^dagger
    CMat y_left(n, n);
    for (int i = 0; i < n; ++i) {
        y_left(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            cx s = 0.0;
            for (int k = i; k < j; ++k) s += std::conj(t(k, j)) * y_left(k, i);
            cx d = std::conj(t(j, j) - res.values[i]);
            if (std::abs(d) < smin) d = smin;
            y_left(j, i) = -s / d;
        }
    }
    res.right = z * y_right;
    res.left = z * y_left;

    // normalize right vectors; check simplicity; biorthonormalize when simple
    for (int i = 0; i < n; ++i) {
        double nr = 0.0, nl = 0.0;
        for (int r = 0; r < n; ++r) { nr += std::norm(res.right(r, i)); nl += std::norm(res.left(r, i)); }
        nr = std::sqrt(nr); nl = std::sqrt(nl);
        for (int r = 0; r < n; ++r) { res.right(r, i) /= nr; res.left(r, i) /= nl; }
    }
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(res.values[i]));
    res.simple = true;
    for (int i = 0; i < n && res.simple; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(res.values[i] - res.values[j]) <= 1e-8 * (1.0 + scale)) { res.simple = false; break; }
    if (res.simple) {
        for (int i = 0; i < n; ++i) {
            cx d = 0.0;
            for (int r = 0; r < n; ++r) d += std::conj(res.left(r, i)) * res.right(r, i);
            const cx s = std::conj(1.0 / d);
            for (int r = 0; r < n; ++r) res.left(r, i) *= s;
        }
    }
    return res;
}

double eig_residual(const CMat& a, const EigResult& e) {
    const int n = a.rows();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double num = 0.0, den = 0.0;
        for (int r = 0; r < n; ++r) {
            cx s = 0.0;
            for (int c = 0; c < n; ++c) s += a(r, c) * e.right(c, i);
            s -= e.values[i] * e.right(r, i);
            num += std::norm(s);
            den += std::norm(e.right(r, i));
        }
        worst = std::max(worst, std::sqrt(num) / ((1.0 + std::abs(e.values[i])) * std::sqrt(den)));
    }
    return worst;
}

}  // namespace b2chain
