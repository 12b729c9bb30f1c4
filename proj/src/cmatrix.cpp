#include "b2chain/cmatrix.hpp"
#include "b2chain/kernels.hpp"

#include <algorithm>

namespace b2chain {

void CMat::check_shape(const CMat& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument(std::string(what) + ": shape mismatch " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                                    std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
}

CMat& CMat::operator+=(const CMat& o) {
    check_shape(o, "operator+=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    check_shape(o, "operator-=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMat& CMat::operator*=(cx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMat CMat::dagger() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMat CMat::transpose() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

CMat CMat::conj() const {
    CMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
    return r;
}

cx CMat::trace() const {
    cx t = 0.0;
    int n = std::min(rows_, cols_);
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMat::frobenius() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool CMat::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

CMat operator+(CMat a, const CMat& b) { a += b; return a; }
CMat operator-(CMat a, const CMat& b) { a -= b; return a; }
CMat operator*(cx s, CMat a) { a *= s; return a; }
CMat operator*(const CMat& a, const CMat& b) { return kernels::matmul(a, b); }

double residual(const CMat& a, const CMat& b) {
    a.check_shape(b, "residual");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        const cx* ra = a.row(i);
        const cx* rb = b.row(i);
        for (int j = 0; j < a.cols(); ++j) {
            num = std::max(num, std::abs(ra[j] - rb[j]));
            den = std::max(den, std::max(std::abs(ra[j]), std::abs(rb[j])));
        }
    }
    return num / (1.0 + den);
}

double residual_scalar(cx a, cx b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

cx fit_scalar(const CMat& lhs, const CMat& rhs) {
    lhs.check_shape(rhs, "fit_scalar");
    cx num = 0.0;
    double den = 0.0;
    for (int i = 0; i < lhs.rows(); ++i) {
        const cx* rl = lhs.row(i);
        const cx* rr = rhs.row(i);
        for (int j = 0; j < lhs.cols(); ++j) {
            num += std::conj(rr[j]) * rl[j];
            den += std::norm(rr[j]);
        }
    }
    if (den == 0.0) return 1.0;
    return num / den;
}

}  // namespace b2chain
