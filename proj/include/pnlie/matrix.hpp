#pragma once

#include <cstddef>
#include <vector>

#include "pnlie/rational.hpp"

namespace pnlie {

/// Dense matrix over exact rationals, row-major. All arithmetic is exact;
/// singularity detection in inverse()/determinant() is therefore exact too.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const = default;

    Mat scaled(const Rational& c) const;
    Mat transpose() const;
    Vec apply(const Vec& x) const;  ///< matrix–vector product
    Rational trace() const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_antisymmetric() const;
    Rational max_abs() const;

    /// Exact inverse by Gauss–Jordan elimination, pivoting on the first
    /// nonzero entry of each column. Throws DegenerateMatrixError when
    /// the determinant is zero.
    Mat inverse() const;
    Rational determinant() const;
    std::size_t rank() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace pnlie
