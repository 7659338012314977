#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace sicq {

using cplx = std::complex<double>;

// Complex column vector of fixed dimension.
class CVec {
  public:
    explicit CVec(std::size_t dim) : entries_(dim) {}
    explicit CVec(std::vector<cplx> entries) : entries_(std::move(entries)) {}

    static CVec basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries_.size(); }
    cplx& operator[](std::size_t i) { return entries_[i]; }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<cplx>& entries() const { return entries_; }

    double norm_sq() const;
    double norm() const;
    // |<v|v> - 1| <= tol
    bool is_normalized(double tol = 1e-12) const;
    CVec normalized() const;  // throws NormalizationError on the zero vector

  private:
    std::vector<cplx> entries_;
};

// <a|b>: conjugate-linear in a, linear in b.
cplx inner(const CVec& a, const CVec& b);

// Dense row-major complex matrix. Dimensions in this artifact stay at or
// below 4096, so no sparse path exists.
class CMat {
  public:
    CMat() : rows_(0), cols_(0) {}
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMat(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    static CMat identity(std::size_t n);
    static CMat diagonal(const std::vector<cplx>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    CMat adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    // max_ij |a_ij - conj(a_ji)|; zero for an exactly Hermitian matrix
    double hermiticity_defect() const;

    CMat& operator+=(const CMat& other);
    CMat& operator-=(const CMat& other);
    CMat& operator*=(cplx scalar);
    CMat operator+(const CMat& other) const;
    CMat operator-(const CMat& other) const;
    CMat operator*(const CMat& other) const;
    CMat operator*(cplx scalar) const;

    CVec apply(const CVec& v) const;

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

// |v><w|
CMat outer(const CVec& v, const CVec& w);

// Kronecker product; (a⊗b)[(i·rb+k)(j·cb+l)] = a[i][j]·b[k][l].
CMat kron(const CMat& a, const CMat& b);

double max_abs_diff(const CMat& a, const CMat& b);
double frobenius_diff(const CMat& a, const CMat& b);

}  // namespace sicq
