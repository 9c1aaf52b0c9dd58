#include "pnlie/matrix.hpp"

#include <utility>

#include "pnlie/errors.hpp"

namespace pnlie {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Mat Mat::operator-() const { return scaled(Rational(-1)); }

Mat Mat::scaled(const Rational& c) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = c * a_[k];
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Mat::apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector length mismatch");
    Vec r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
}

Rational Mat::trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Mat::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Rational Mat::max_abs() const {
    Rational m(0);
    for (const auto& x : a_) {
        Rational ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

Mat Mat::inverse() const {
    if (!is_square()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = rows_;
    Mat work(*this);
    Mat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw DegenerateMatrixError("degenerate matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rational p = work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const Rational f = work.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rational Mat::determinant() const {
    if (!is_square()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = rows_;
    Mat work(*this);
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        det *= work.at(col, col);
        const Rational p = work.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rational f = work.at(i, col) / p;
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) work.at(i, j) -= f * work.at(col, j);
        }
    }
    return det;
}

std::size_t Mat::rank() const {
    Mat work(*this);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && work.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(r, j));
        const Rational p = work.at(r, col);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            const Rational f = work.at(i, col) / p;
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace pnlie
