#pragma once

#include <utility>
#include <vector>

#include "pnlie/algebra.hpp"
#include "pnlie/errors.hpp"
#include "pnlie/gln_example.hpp"
#include "pnlie/matrix.hpp"
#include "pnlie/random_points.hpp"
#include "pnlie/symplectic.hpp"

namespace pnlie::testing {

/// sl(2): e1 = H, e2 = X+, e3 = X-.
inline LieAlgebraSpec sl2() {
    LieAlgebraSpec lie(3);
    lie.set_pair(0, 1, 1, Rational(2));   // [H, X+] = 2 X+
    lie.set_pair(0, 2, 2, Rational(-2));  // [H, X-] = -2 X-
    lie.set_pair(1, 2, 0, Rational(1));   // [X+, X-] = H
    return lie;
}

/// Heisenberg algebra h3: [e1, e2] = e3.
inline LieAlgebraSpec heisenberg3() {
    LieAlgebraSpec lie(3);
    lie.set_pair(0, 1, 2, Rational(1));
    return lie;
}

/// h3 + R with the cocycle e^1^e^4 + e^2^e^3: a nilpotent (hence
/// unimodular) symplectic Lie algebra.
inline std::pair<LieAlgebraSpec, Mat> heisenberg_symplectic() {
    LieAlgebraSpec lie(4);
    lie.set_pair(0, 1, 2, Rational(1));
    Mat w(4, 4);
    w.at(0, 3) = 1;
    w.at(3, 0) = -1;
    w.at(1, 2) = 1;
    w.at(2, 1) = -1;
    return {lie, w};
}

/// Block-diagonal standard symplectic form on even dimension.
inline Mat standard_omega(std::size_t n) {
    Mat w(n, n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        w.at(i, i + 1) = 1;
        w.at(i + 1, i) = -1;
    }
    return w;
}

/// The 4-dimensional algebra of 2x2 matrices (associative, so trivially
/// left-symmetric). Basis E11, E12, E21, E22; E_ab E_cd = delta_bc E_ad.
inline AlgebraSpec matrix_algebra_2x2() {
    AlgebraSpec alg(4);
    auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    if (b == c) alg.set(idx(a, b), idx(c, d), idx(a, d), Rational(1));
    return alg;
}

/// Two-dimensional non-left-symmetric fixture used for torsion calibration:
/// e1e1 = e1, e1e2 = e2, e2e2 = e1, e2e1 = 0. Left-symmetry defect is 1.
inline AlgebraSpec non_left_symmetric_2d() {
    AlgebraSpec alg(2);
    alg.set(0, 0, 0, Rational(1));
    alg.set(0, 1, 1, Rational(1));
    alg.set(1, 1, 0, Rational(1));
    return alg;
}

/// Random 2-dimensional Lie algebra [e1,e2] = a e1 + b e2 (always Jacobi)
/// with a random invertible antisymmetric form (always a cocycle in dim 2).
inline SymplecticLieAlgebra random_symplectic_dim2(RationalSampler& s) {
    LieAlgebraSpec lie(2);
    lie.set_pair(0, 1, 0, s.small());
    lie.set_pair(0, 1, 1, s.small());
    Mat w(2, 2);
    w.at(0, 1) = s.coordinate();  // nonzero by construction
    w.at(1, 0) = -w.at(0, 1);
    return SymplecticLieAlgebra(lie, Cocycle2(w));
}

/// Direct sum of Lie algebras with block omega.
inline std::pair<LieAlgebraSpec, Mat> direct_sum(const LieAlgebraSpec& l1, const Mat& w1,
                                                 const LieAlgebraSpec& l2, const Mat& w2) {
    const std::size_t n1 = l1.dim(), n2 = l2.dim(), n = n1 + n2;
    Tensor3 c(n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) c.at(i, j, k) = l1.c(i, j, k);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k) c.at(n1 + i, n1 + j, n1 + k) = l2.c(i, j, k);
    Mat w(n, n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) w.at(i, j) = w1.at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) w.at(n1 + i, n1 + j) = w2.at(i, j);
    return {LieAlgebraSpec(n, std::move(c)), std::move(w)};
}

/// Random 4-dimensional symplectic Lie algebra: direct sum of two random
/// 2-dimensional ones.
inline SymplecticLieAlgebra random_symplectic_dim4(RationalSampler& s) {
    const SymplecticLieAlgebra a = random_symplectic_dim2(s);
    const SymplecticLieAlgebra b = random_symplectic_dim2(s);
    auto [lie, w] = direct_sum(a.lie(), a.omega().omega(), b.lie(), b.omega().omega());
    return SymplecticLieAlgebra(lie, Cocycle2(w));
}

/// Random gl(n) x R^n build with invertible omega (seeded re-roll).
inline GlnBuild random_gln_build(std::size_t n, RationalSampler& s) {
    for (int tries = 0; tries < 128; ++tries) {
        GlnSemidirectConfig gc;
        gc.n = n;
        gc.m = Mat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gc.m.at(i, j) = s.small();
        gc.g = Vec(n);
        for (auto& x : gc.g) x = s.coordinate();
        GlnBuild b = build_gln(gc);
        if (b.omega.determinant() != 0) return b;
    }
    throw PreconditionError("random_gln_build: no invertible omega found");
}

inline SymplecticLieAlgebra random_symplectic_dim6(RationalSampler& s) {
    const GlnBuild b = random_gln_build(2, s);
    return SymplecticLieAlgebra(b.lie, Cocycle2(b.omega));
}

/// The defining product omega(x.y, z) = -omega(y, [x,z]) computed without
/// any validity checks; used to build omega-symmetric tensor fields from
/// brackets that are not cocycle-compatible (or not even Lie).
inline AlgebraSpec raw_product(const LieAlgebraSpec& lie, const Cocycle2& w) {
    const std::size_t n = lie.dim();
    AlgebraSpec alg(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Mat coad = -ad_matrix(lie, basis_vec(n, i)).transpose();
        const Mat li = w.sharp() * coad * w.flat();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) alg.set(i, j, k, li.at(k, j));
    }
    return alg;
}

/// Random antisymmetric-bracket structure (not necessarily Jacobi).
inline LieAlgebraSpec random_antisymmetric_bracket(std::size_t n, RationalSampler& s) {
    Tensor3 c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational v = s.small();
                c.at(i, j, k) = v;
                c.at(j, i, k) = -v;
            }
    return LieAlgebraSpec(n, std::move(c));
}

/// The paper-parameter 6-dimensional structure, built once per test file.
inline SymplecticLieAlgebra paper_structure(const Rational& a = Rational(1),
                                            const Rational& l = Rational(0)) {
    const GlnBuild b = build_paper_n2(a, l);
    return SymplecticLieAlgebra(b.lie, Cocycle2(b.omega));
}

}  // namespace pnlie::testing
