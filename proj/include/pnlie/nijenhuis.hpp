#pragma once

#include "pnlie/algebra.hpp"
#include "pnlie/matrix.hpp"
#include "pnlie/symplectic.hpp"

namespace pnlie {

/// Endomorphism field depending linearly on the point:
/// (N(p))^k_i = sum_l coeff(k, i, l) x^l(p).
class LinearTensorField {
  public:
    explicit LinearTensorField(std::size_t dim) : dim_(dim), n_(dim) {}
    LinearTensorField(std::size_t dim, Tensor3 coeffs);

    std::size_t dim() const { return dim_; }
    const Tensor3& coeffs() const { return n_; }
    Rational& coeff(std::size_t k, std::size_t i, std::size_t l) { return n_.at(k, i, l); }
    const Rational& coeff(std::size_t k, std::size_t i, std::size_t l) const {
        return n_.at(k, i, l);
    }

    /// The matrix N(p).
    Mat at_point(const Vec& p) const;

  private:
    std::size_t dim_;
    Tensor3 n_;
};

/// N(p) = R_p, i.e. coeff(k, i, l) = R^k_{il}.
LinearTensorField nijenhuis_from_algebra(const AlgebraSpec& alg);

/// Inverse direction of the same correspondence: R^k_{ij} = coeff(k, i, j).
AlgebraSpec algebra_from_tensor(const LinearTensorField& t);

/// Rank-4 array over one dimension.
struct Tensor4 {
    std::size_t dim = 0;
    std::vector<Rational> a;

    Tensor4() = default;
    explicit Tensor4(std::size_t d) : dim(d), a(d * d * d * d, Rational(0)) {}

    Rational& at(std::size_t k, std::size_t i, std::size_t j, std::size_t l) {
        return a[((k * dim + i) * dim + j) * dim + l];
    }
    const Rational& at(std::size_t k, std::size_t i, std::size_t j, std::size_t l) const {
        return a[((k * dim + i) * dim + j) * dim + l];
    }
    Rational max_abs() const;
};

/// Closed coordinate formula for the torsion: entry (k, i, j, l) is the
/// coefficient of x^l in (1/2)[N,N]^k_{ij} in the convention
///   -R^k_{ml}(R^m_{ij} - R^m_{ji}) - (R^m_{il} R^k_{jm} - R^m_{jl} R^k_{im}),
/// with R^k_{ij} = coeff(k, i, j). This equals -1 times the associator form
/// below when contracted; the factor is pinned by a calibration test.
Tensor4 torsion_coord(const LinearTensorField& t);

/// Torsion in associator form: [x,y,p] - [y,x,p].
Vec torsion_assoc(const AlgebraSpec& alg, const Vec& p, const Vec& x, const Vec& y);

/// Bivector with affine coefficients:
/// Pi^{ij}(x) = const_part(i,j) + sum_l lin_part(i,j,l) x^l.
/// Both parts must be antisymmetric in (i, j), exactly.
class LinearBivector {
  public:
    explicit LinearBivector(std::size_t dim);
    LinearBivector(Mat const_part, Tensor3 lin_part);

    std::size_t dim() const { return const_part_.rows(); }
    const Mat& const_part() const { return const_part_; }
    const Tensor3& lin_part() const { return lin_part_; }

    Mat at_point(const Vec& p) const;
    bool is_constant() const;

  private:
    Mat const_part_;
    Tensor3 lin_part_;
};

/// The constant bivector with sharp = (flat)^{-1} of w, so that
/// sharp(Lambda) composed with flat(omega) is the identity.
LinearBivector lambda_from_omega(const Cocycle2& w);

/// Lambda_N(a, b) = Lambda(a, N^* b): the bivector whose sharp is
/// sharp(Lambda) . N^* at every point. Requires a constant Lambda; fails
/// unless the result is antisymmetric, which is equivalent to N being
/// symmetric with respect to the corresponding omega.
LinearBivector lambda_n(const LinearBivector& lambda, const LinearTensorField& t);

/// max |omega(N(e_l) e_i, e_j) - omega(e_i, N(e_l) e_j)| over basis triples.
Rational omega_symmetry_defect(const LinearTensorField& t, const Cocycle2& w);

/// The constant 3-form dF of F(X,Y) = omega(N X, Y), as the full
/// antisymmetric array dF(e_a, e_b, e_c). Requires omega-symmetry of N.
struct ConstantThreeForm {
    std::size_t dim = 0;
    std::vector<Rational> a;

    ConstantThreeForm() = default;
    explicit ConstantThreeForm(std::size_t d) : dim(d), a(d * d * d, Rational(0)) {}

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return a[(i * dim + j) * dim + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a[(i * dim + j) * dim + k];
    }
    Rational eval(const Vec& u, const Vec& v, const Vec& w) const;
};
ConstantThreeForm dF_form(const LinearTensorField& t, const Cocycle2& w);

/// max |dF(e_i, e_j, e_k)| over basis triples; zero iff F is closed.
Rational dF_defect(const LinearTensorField& t, const Cocycle2& w);

/// The Schouten obstruction of an affine bivector as a polynomial trivector:
/// S^{ijk}(x) = sum_l (Pi^{li} d_l Pi^{jk} + Pi^{lj} d_l Pi^{ki}
///                     + Pi^{lk} d_l Pi^{ij}),
/// which is the Jacobiator of the induced bracket on coordinates. Split into
/// the constant part s0(i,j,k) and the linear part s1(i,j,k,l).
struct SchoutenTrivector {
    ConstantThreeForm s0;
    Tensor4 s1;
    Rational max_abs() const;
};
SchoutenTrivector schouten_trivector(const LinearBivector& p);

/// max |coefficient| over the trivector components; zero iff Poisson.
Rational schouten_defect(const LinearBivector& p);

}  // namespace pnlie
