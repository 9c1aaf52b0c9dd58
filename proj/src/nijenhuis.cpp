#include "pnlie/nijenhuis.hpp"

#include <utility>

#include "pnlie/errors.hpp"

namespace pnlie {

LinearTensorField::LinearTensorField(std::size_t dim, Tensor3 coeffs)
    : dim_(dim), n_(std::move(coeffs)) {
    if (n_.dim != dim_) throw DimensionError("tensor coefficient array does not match dim");
}

Mat LinearTensorField::at_point(const Vec& p) const {
    if (p.size() != dim_) throw DimensionError("at_point: length mismatch");
    Mat m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t l = 0; l < dim_; ++l) m.at(k, i) += n_.at(k, i, l) * p[l];
    return m;
}

LinearTensorField nijenhuis_from_algebra(const AlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    LinearTensorField t(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) t.coeff(k, i, l) = alg.r(i, l, k);
    return t;
}

AlgebraSpec algebra_from_tensor(const LinearTensorField& t) {
    const std::size_t n = t.dim();
    AlgebraSpec alg(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) alg.set(i, j, k, t.coeff(k, i, j));
    return alg;
}

Rational Tensor4::max_abs() const {
    Rational m(0);
    for (const auto& x : a) {
        Rational ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

Tensor4 torsion_coord(const LinearTensorField& t) {
    const std::size_t n = t.dim();
    auto r = [&](std::size_t k, std::size_t i, std::size_t j) -> const Rational& {
        return t.coeff(k, i, j);
    };
    Tensor4 out(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s(0);
                    for (std::size_t m = 0; m < n; ++m) {
                        s -= r(k, m, l) * (r(m, i, j) - r(m, j, i));
                        s -= r(m, i, l) * r(k, j, m) - r(m, j, l) * r(k, i, m);
                    }
                    out.at(k, i, j, l) = s;
                }
    return out;
}

Vec torsion_assoc(const AlgebraSpec& alg, const Vec& p, const Vec& x, const Vec& y) {
    return vec_sub(associator(alg, x, y, p), associator(alg, y, x, p));
}

LinearBivector::LinearBivector(std::size_t dim) : const_part_(dim, dim), lin_part_(dim) {}

LinearBivector::LinearBivector(Mat const_part, Tensor3 lin_part)
    : const_part_(std::move(const_part)), lin_part_(std::move(lin_part)) {
    if (!const_part_.is_square() || lin_part_.dim != const_part_.rows())
        throw DimensionError("bivector parts have mismatched dimensions");
    const std::size_t n = const_part_.rows();
    if (!const_part_.is_antisymmetric())
        throw PreconditionError("bivector constant part is not antisymmetric");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (lin_part_.at(i, j, l) != -lin_part_.at(j, i, l))
                    throw PreconditionError("bivector linear part is not antisymmetric");
}

Mat LinearBivector::at_point(const Vec& p) const {
    const std::size_t n = dim();
    if (p.size() != n) throw DimensionError("at_point: length mismatch");
    Mat m = const_part_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) m.at(i, j) += lin_part_.at(i, j, l) * p[l];
    return m;
}

bool LinearBivector::is_constant() const { return lin_part_.max_abs() == 0; }

LinearBivector lambda_from_omega(const Cocycle2& w) {
    const std::size_t n = w.dim();
    // sharp(Lambda)^{ij} = Lambda^{ij}; the sharp of w is exactly that matrix.
    return LinearBivector(w.sharp(), Tensor3(n));
}

LinearBivector lambda_n(const LinearBivector& lambda, const LinearTensorField& t) {
    const std::size_t n = lambda.dim();
    if (t.dim() != n) throw DimensionError("lambda_n: dimension mismatch");
    if (!lambda.is_constant()) throw PreconditionError("lambda_n: Lambda must be constant");
    const Mat& p = lambda.const_part();
    // Pi^{ij}(x) = (P N(x)^T)^{ij}; linear coefficient sum_k P^{ik} coeff(j,k,l).
    Tensor3 lin(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Rational s(0);
                for (std::size_t k = 0; k < n; ++k) s += p.at(i, k) * t.coeff(j, k, l);
                lin.at(i, j, l) = s;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (lin.at(i, j, l) != -lin.at(j, i, l))
                    throw PreconditionError(
                        "lambda_n: result not antisymmetric; N is not symmetric with respect "
                        "to omega");
    return LinearBivector(Mat(n, n), std::move(lin));
}

Rational omega_symmetry_defect(const LinearTensorField& t, const Cocycle2& w) {
    const std::size_t n = t.dim();
    if (w.dim() != n) throw DimensionError("omega_symmetry_defect: dimension mismatch");
    Rational defect(0);
    for (std::size_t l = 0; l < n; ++l) {
        const Mat nl = t.at_point(basis_vec(n, l));
        // omega(N y, z) - omega(y, N z) = (N^T W - W N)_{yz}
        const Mat d = nl.transpose() * w.omega() - w.omega() * nl;
        const Rational m = d.max_abs();
        if (m > defect) defect = m;
    }
    return defect;
}

Rational ConstantThreeForm::eval(const Vec& u, const Vec& v, const Vec& w) const {
    Rational r(0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (v[j] == 0) continue;
            const Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < dim; ++k) r += f * at(i, j, k) * w[k];
        }
    }
    return r;
}

ConstantThreeForm dF_form(const LinearTensorField& t, const Cocycle2& w) {
    const std::size_t n = t.dim();
    if (w.dim() != n) throw DimensionError("dF_form: dimension mismatch");
    if (omega_symmetry_defect(t, w) != 0)
        throw PreconditionError("dF_form: N is not symmetric with respect to omega");
    // F_{ab,l} = omega(N(e_l) e_a, e_b); dF_{abc} = F_{bc,a} - F_{ac,b} + F_{ab,c}.
    Tensor3 f(n);
    for (std::size_t l = 0; l < n; ++l) {
        const Mat nl = t.at_point(basis_vec(n, l));
        const Mat fw = nl.transpose() * w.omega();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) f.at(a, b, l) = fw.at(a, b);
    }
    ConstantThreeForm out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                out.at(a, b, c) = f.at(b, c, a) - f.at(a, c, b) + f.at(a, b, c);
    return out;
}

Rational dF_defect(const LinearTensorField& t, const Cocycle2& w) {
    const ConstantThreeForm d = dF_form(t, w);
    Rational defect(0);
    for (const auto& x : d.a) {
        Rational ax = abs(x);
        if (ax > defect) defect = ax;
    }
    return defect;
}

Rational SchoutenTrivector::max_abs() const {
    Rational m(0);
    for (const auto& x : s0.a) {
        Rational ax = abs(x);
        if (ax > m) m = ax;
    }
    const Rational m1 = s1.max_abs();
    return m1 > m ? m1 : m;
}

SchoutenTrivector schouten_trivector(const LinearBivector& p) {
    const std::size_t n = p.dim();
    const Mat& c = p.const_part();
    const Tensor3& lin = p.lin_part();
    SchoutenTrivector out;
    out.s0 = ConstantThreeForm(n);
    out.s1 = Tensor4(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational c0(0);
                for (std::size_t l = 0; l < n; ++l) {
                    c0 += c.at(l, i) * lin.at(j, k, l);
                    c0 += c.at(l, j) * lin.at(k, i, l);
                    c0 += c.at(l, k) * lin.at(i, j, l);
                }
                out.s0.at(i, j, k) = c0;
                for (std::size_t m = 0; m < n; ++m) {
                    Rational c1(0);
                    for (std::size_t l = 0; l < n; ++l) {
                        c1 += lin.at(l, i, m) * lin.at(j, k, l);
                        c1 += lin.at(l, j, m) * lin.at(k, i, l);
                        c1 += lin.at(l, k, m) * lin.at(i, j, l);
                    }
                    out.s1.at(i, j, k, m) = c1;
                }
            }
    return out;
}

Rational schouten_defect(const LinearBivector& p) { return schouten_trivector(p).max_abs(); }

}  // namespace pnlie
