#include "b2chain/polyfit.hpp"
#include "b2chain/linalg.hpp"

namespace b2chain {

namespace {

CMat vandermonde(const std::vector<cx>& u, int degree) {
    CMat a(static_cast<int>(u.size()), degree + 1);
    for (size_t i = 0; i < u.size(); ++i) {
        cx p = 1.0;
        for (int k = 0; k <= degree; ++k) { a(static_cast<int>(i), k) = p; p *= u[i]; }
    }
    return a;
}

void check_points(const std::vector<cx>& u, int degree_bound) {
    if (static_cast<int>(u.size()) < degree_bound + 1)
        throw std::invalid_argument("fit_polynomial: not enough sample points");
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (std::abs(u[i] - u[j]) < 1e-12)
                throw std::invalid_argument("fit_polynomial: repeated sample points");
}

}  // namespace

PolyFit fit_polynomial(const std::vector<cx>& u, const std::vector<cx>& v, int degree_bound) {
    if (u.size() != v.size()) throw std::invalid_argument("fit_polynomial: size mismatch");
    check_points(u, degree_bound);
    CMat a = vandermonde(u, degree_bound);
    CMat b(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) b(static_cast<int>(i), 0) = v[i];
    CMat x = lstsq(a, b);

    PolyFit fit;
    fit.degree = degree_bound;
    fit.coefficients.resize(degree_bound + 1);
    for (int k = 0; k <= degree_bound; ++k) fit.coefficients[k] = x(k, 0);
    double vmax = 0.0;
    for (const auto& w : v) vmax = std::max(vmax, std::abs(w));
    double err = 0.0;
    for (size_t i = 0; i < u.size(); ++i) err = std::max(err, std::abs(fit.eval(u[i]) - v[i]));
    fit.max_interp_error = err / (1.0 + vmax);
    return fit;
}

MatrixPolyFit fit_matrix_polynomial(const std::vector<cx>& u, const std::vector<CMat>& m,
                                    int degree_bound) {
    if (u.size() != m.size() || m.empty())
        throw std::invalid_argument("fit_matrix_polynomial: size mismatch");
    check_points(u, degree_bound);
    const int rows = m[0].rows(), cols = m[0].cols();
    CMat a = vandermonde(u, degree_bound);
    CMat b(static_cast<int>(u.size()), rows * cols);
    for (size_t i = 0; i < u.size(); ++i) {
        m[i].check_shape(m[0], "fit_matrix_polynomial");
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) b(static_cast<int>(i), r * cols + c) = m[i](r, c);
    }
    CMat x = lstsq(a, b);

    MatrixPolyFit fit;
    fit.degree = degree_bound;
    fit.coeff.assign(degree_bound + 1, CMat(rows, cols));
    for (int k = 0; k <= degree_bound; ++k)
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) fit.coeff[k](r, c) = x(k, r * cols + c);

    double vmax = 0.0;
    for (const auto& mm : m) vmax = std::max(vmax, mm.max_abs());
    double err = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        CMat acc(rows, cols);
        for (int k = degree_bound; k >= 0; --k) {
            acc *= u[i];
            acc += fit.coeff[k];
        }
        err = std::max(err, residual(acc, m[i]) * (1.0 + std::max(acc.max_abs(), m[i].max_abs())));
    }
    fit.max_interp_error = err / (1.0 + vmax);
    return fit;
}

}  // namespace b2chain
