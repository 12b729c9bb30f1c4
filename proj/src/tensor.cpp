#include "b2chain/tensor.hpp"
#include "b2chain/kernels.hpp"

namespace b2chain {

size_t TensorLayout::flat(const std::vector<int>& labels) const {
    if (labels.size() != dims.size())
        throw std::invalid_argument("TensorLayout::flat: wrong label count");
    size_t idx = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (labels[k] < 1 || labels[k] > dims[k])
            throw std::invalid_argument("TensorLayout::flat: label out of range");
        idx = idx * dims[k] + (labels[k] - 1);
    }
    return idx;
}

int TensorLayout::sub_dim(const std::vector<int>& sites) const {
    int d = 1;
    for (int s : sites) d *= dims.at(s);
    return d;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cx s = a(i, j);
            if (s == cx(0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
    return r;
}

CMat permutation_operator(int d) {
    CMat p(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
    return p;
}

CMat swap_matrix(int da, int db) {
    CMat p(da * db, da * db);
    // maps |a,b> to |b,a>: row index (b,a) in the db x da layout
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b) p(b * da + a, a * db + b) = 1.0;
    return p;
}

CMat swap_conjugate(const CMat& m, int da, int db) {
    if (m.rows() != da * db || m.cols() != da * db)
        throw std::invalid_argument("swap_conjugate: shape mismatch");
    CMat r(da * db, da * db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int a2 = 0; a2 < da; ++a2)
                for (int b2 = 0; b2 < db; ++b2)
                    r(b * da + a, b2 * da + a2) = m(a * db + b, a2 * db + b2);
    return r;
}

CMat embed(const CMat& op, const std::vector<int>& sites, const TensorLayout& layout) {
    if (op.rows() != op.cols() || op.rows() != layout.sub_dim(sites))
        throw std::invalid_argument("embed: op does not match listed sites");
    const size_t total = layout.total();
    CMat id = CMat::identity(static_cast<int>(total));
    return kernels::apply_embedded(op, sites, layout.dims, id);
}

CMat partial_trace(const CMat& m, int site, const TensorLayout& layout) {
    const size_t total = layout.total();
    if (static_cast<size_t>(m.rows()) != total || !m.square())
        throw std::invalid_argument("partial_trace: dimension mismatch");
    const int L = layout.factors();
    if (site < 0 || site >= L) throw std::invalid_argument("partial_trace: bad site");
    const int d = layout.dims[site];
    size_t stride = 1;
    for (int q = site + 1; q < L; ++q) stride *= layout.dims[q];
    const size_t outer = total / (d * stride);  // configs of factors before `site`
    const size_t rest = total / d;

    CMat r(static_cast<int>(rest), static_cast<int>(rest));
    for (size_t po = 0; po < outer; ++po)
        for (size_t pi = 0; pi < stride; ++pi) {
            const size_t ro = po * stride + pi;
            for (size_t qo = 0; qo < outer; ++qo)
                for (size_t qi = 0; qi < stride; ++qi) {
                    const size_t co = qo * stride + qi;
                    cx s = 0.0;
                    for (int a = 0; a < d; ++a)
                        s += m(static_cast<int>((po * d + a) * stride + pi),
                               static_cast<int>((qo * d + a) * stride + qi));
                    r(static_cast<int>(ro), static_cast<int>(co)) = s;
                }
        }
    return r;
}

CMat partial_transpose(const CMat& m, int site, const TensorLayout& layout) {
    const size_t total = layout.total();
    if (static_cast<size_t>(m.rows()) != total || !m.square())
        throw std::invalid_argument("partial_transpose: dimension mismatch");
    const int L = layout.factors();
    const int d = layout.dims.at(site);
    size_t stride = 1;
    for (int q = site + 1; q < L; ++q) stride *= layout.dims[q];
    const size_t outer = total / (d * stride);

    CMat r(m.rows(), m.cols());
    for (size_t po = 0; po < outer; ++po)
        for (int a = 0; a < d; ++a)
            for (size_t pi = 0; pi < stride; ++pi)
                for (size_t qo = 0; qo < outer; ++qo)
                    for (int b = 0; b < d; ++b)
                        for (size_t qi = 0; qi < stride; ++qi)
                            r(static_cast<int>((po * d + a) * stride + pi),
                              static_cast<int>((qo * d + b) * stride + qi)) =
                                m(static_cast<int>((po * d + b) * stride + pi),
                                  static_cast<int>((qo * d + a) * stride + qi));
    return r;
}

}  // namespace b2chain
