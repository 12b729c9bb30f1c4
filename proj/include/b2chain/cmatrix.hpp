#pragma once

#include <complex>
#include <vector>
#include <stdexcept>
#include <string>
#include <cmath>

namespace b2chain {

using cx = std::complex<double>;

// Dense complex matrix, row-major. The single operator carrier for the
// whole toolkit; everything (R-matrices, projectors, monodromies, K-matrices)
// is one of these.
class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMat zeros(int rows, int cols) { return CMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    size_t size() const { return a_.size(); }

    cx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    cx* data() { return a_.data(); }
    const cx* data() const { return a_.data(); }
    cx* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }
    const cx* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cx s);

    CMat dagger() const;
    CMat transpose() const;
    CMat conj() const;

    cx trace() const;
    double max_abs() const;
    double frobenius() const;
    bool all_finite() const;

    void check_shape(const CMat& o, const char* what) const;

private:
    int rows_, cols_;
    std::vector<cx> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(cx s, CMat a);
CMat operator*(const CMat& a, const CMat& b);  // dispatches to kernels::matmul

// max|a-b| entrywise over (1 + max entry magnitude of a, b); 0 iff equal.
double residual(const CMat& a, const CMat& b);
double residual_scalar(cx a, cx b);

// Least-squares scalar s minimizing ||lhs - s*rhs||_F, for the
// best-fit-scalar policy on factorization/equivalence checks.
cx fit_scalar(const CMat& lhs, const CMat& rhs);

}  // namespace b2chain
