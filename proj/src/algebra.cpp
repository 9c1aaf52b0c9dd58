#include "pnlie/algebra.hpp"

#include <utility>

#include "pnlie/errors.hpp"

namespace pnlie {

Rational Tensor3::max_abs() const {
    Rational m(0);
    for (const auto& x : a) {
        Rational ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

AlgebraSpec::AlgebraSpec(std::size_t dim, Tensor3 r) : dim_(dim), r_(std::move(r)) {
    if (r_.dim != dim_) throw DimensionError("structure constant array does not match dim");
}

LieAlgebraSpec::LieAlgebraSpec(std::size_t dim, Tensor3 c) : dim_(dim), c_(std::move(c)) {
    if (c_.dim != dim_) throw DimensionError("structure constant array does not match dim");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c_.at(i, j, k) != -c_.at(j, i, k))
                    throw PreconditionError("Lie structure constants not antisymmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ")");
}

void LieAlgebraSpec::set_pair(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (i == j && v != 0) throw PreconditionError("bracket [e_i,e_i] must vanish");
    c_.at(i, j, k) = v;
    c_.at(j, i, k) = -v;
}

Vec multiply(const AlgebraSpec& alg, const Vec& x, const Vec& y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("multiply: vector length mismatch");
    Vec r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += f * alg.r(i, j, k);
        }
    }
    return r;
}

Vec bracket(const LieAlgebraSpec& lie, const Vec& x, const Vec& y) {
    const std::size_t n = lie.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector length mismatch");
    Vec r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += f * lie.c(i, j, k);
        }
    }
    return r;
}

Vec associator(const AlgebraSpec& alg, const Vec& x, const Vec& y, const Vec& z) {
    return vec_sub(multiply(alg, multiply(alg, x, y), z),
                   multiply(alg, x, multiply(alg, y, z)));
}

DefectWitness left_symmetry_defect_witness(const AlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    DefectWitness w{Rational(0), 0, 0, 0};
    // Trilinearity makes the basis sweep a complete check.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                const Vec d = vec_sub(associator(alg, ei, ej, ek), associator(alg, ej, ei, ek));
                const Rational m = vec_max_abs(d);
                if (m > w.defect) w = DefectWitness{m, i, j, k};
            }
    return w;
}

Rational left_symmetry_defect(const AlgebraSpec& alg) {
    return left_symmetry_defect_witness(alg).defect;
}

Rational jacobi_defect(const LieAlgebraSpec& lie) {
    const std::size_t n = lie.dim();
    Rational defect(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                Vec s = bracket(lie, ei, bracket(lie, ej, ek));
                s = vec_add(s, bracket(lie, ej, bracket(lie, ek, ei)));
                s = vec_add(s, bracket(lie, ek, bracket(lie, ei, ej)));
                const Rational m = vec_max_abs(s);
                if (m > defect) defect = m;
            }
    return defect;
}

LieAlgebraSpec derived_lie(const AlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    Tensor3 c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c.at(i, j, k) = alg.r(i, j, k) - alg.r(j, i, k);
    return LieAlgebraSpec(n, std::move(c));
}

Mat right_mult(const AlgebraSpec& alg, const Vec& x) {
    const std::size_t n = alg.dim();
    if (x.size() != n) throw DimensionError("right_mult: vector length mismatch");
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(k, i) += alg.r(i, j, k) * x[j];
    return m;
}

Mat left_mult(const AlgebraSpec& alg, const Vec& x) {
    const std::size_t n = alg.dim();
    if (x.size() != n) throw DimensionError("left_mult: vector length mismatch");
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) m.at(k, j) += alg.r(i, j, k) * x[i];
    return m;
}

Mat ad_matrix(const LieAlgebraSpec& lie, const Vec& x) {
    const std::size_t n = lie.dim();
    if (x.size() != n) throw DimensionError("ad_matrix: vector length mismatch");
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) m.at(k, j) += lie.c(i, j, k) * x[i];
    return m;
}

Vec tau(const AlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    Vec t(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) t[i] = right_mult(alg, basis_vec(n, i)).trace();
    return t;
}

Mat b_form(const AlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    std::vector<Mat> rs;
    rs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rs.push_back(right_mult(alg, basis_vec(n, i)));
    Mat b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.at(i, j) = (rs[i] * rs[j]).trace();
    return b;
}

}  // namespace pnlie
