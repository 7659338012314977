#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sicq {

CVec CVec::basis(std::size_t dim, std::size_t k) {
    CVec v(dim);
    v[k] = 1.0;
    return v;
}

double CVec::norm_sq() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return s;
}

double CVec::norm() const { return std::sqrt(norm_sq()); }

bool CVec::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

CVec CVec::normalized() const {
    const double n = norm();
    if (n == 0.0) throw NormalizationError("cannot normalize the zero vector (norm 0)", 0.0);
    CVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] / n;
    return out;
}

cplx inner(const CVec& a, const CVec& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner: dimension mismatch, " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("CMat: data size " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
}

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diagonal(const std::vector<cplx>& diag) {
    CMat m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMat CMat::adjoint() const {
    CMat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx CMat::trace() const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : data_) s += std::norm(e);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& e : data_) m = std::max(m, std::abs(e));
    return m;
}

double CMat::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

namespace {
void require_same_shape(const CMat& a, const CMat& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch, " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    }
}
}  // namespace

CMat& CMat::operator+=(const CMat& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

CMat& CMat::operator*=(cplx scalar) {
    for (auto& e : data_) e *= scalar;
    return *this;
}

CMat CMat::operator+(const CMat& other) const {
    CMat out = *this;
    out += other;
    return out;
}

CMat CMat::operator-(const CMat& other) const {
    CMat out = *this;
    out -= other;
    return out;
}

CMat CMat::operator*(const CMat& other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("operator*: inner dimension mismatch, " + std::to_string(cols_) +
                             " vs " + std::to_string(other.rows_));
    }
    CMat out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = (*this)(r, k);
            if (a == cplx{}) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    }
    return out;
}

CMat CMat::operator*(cplx scalar) const {
    CMat out = *this;
    out *= scalar;
    return out;
}

CVec CMat::apply(const CVec& v) const {
    if (cols_ != v.dim()) {
        throw DimensionError("apply: matrix is " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " but vector has dim " +
                             std::to_string(v.dim()));
    }
    CVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        cplx s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

CMat outer(const CVec& v, const CVec& w) {
    CMat out(v.dim(), w.dim());
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < w.dim(); ++c) out(r, c) = v[r] * std::conj(w[c]);
    return out;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
    return out;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

double frobenius_diff(const CMat& a, const CMat& b) {
    require_same_shape(a, b, "frobenius_diff");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
    return std::sqrt(s);
}

}  // namespace sicq
