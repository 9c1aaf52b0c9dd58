#pragma once

#include "pnlie/algebra.hpp"
#include "pnlie/matrix.hpp"

namespace pnlie {

/// Antisymmetric non-degenerate bilinear form. Construction fails on
/// non-antisymmetric or singular input; the inverse is cached.
///
/// Convention pinned here and used everywhere downstream:
///   (flat(x))(y) = omega(x, y), i.e. flat = W^T as a matrix, and
///   sharp = flat^{-1}.
class Cocycle2 {
  public:
    explicit Cocycle2(Mat omega);

    std::size_t dim() const { return omega_.rows(); }
    const Mat& omega() const { return omega_; }
    const Mat& flat() const { return flat_; }
    const Mat& sharp() const { return sharp_; }

    /// omega(x, y)
    Rational pair(const Vec& x, const Vec& y) const;

  private:
    Mat omega_;
    Mat flat_;
    Mat sharp_;
};

/// max |omega([e_i,e_j],e_k) + omega([e_j,e_k],e_i) + omega([e_k,e_i],e_j)|
/// over basis triples; zero iff w is a 2-cocycle for the bracket.
Rational cocycle_defect(const LieAlgebraSpec& lie, const Mat& w);

/// true iff Tr ad(e_i) = 0 for all i.
bool is_unimodular(const LieAlgebraSpec& lie);

/// The product defined by omega(x.y, z) = -omega(y, [x,z]).
/// Computed by the closed matrix formula L_{e_i} = sharp * coad(e_i) * flat
/// with coad(x) = -ad(x)^T; the result is re-verified to be left-symmetric
/// with derived Lie bracket equal to the input.
/// Preconditions: jacobi_defect(lie) = 0, cocycle_defect = 0.
AlgebraSpec lsa_from_symplectic(const LieAlgebraSpec& lie, const Cocycle2& w);

/// A Lie algebra with a non-degenerate 2-cocycle and its canonical
/// left-symmetric product. Cannot exist in an invalid state: all structure
/// checks run exactly at construction.
class SymplecticLieAlgebra {
  public:
    SymplecticLieAlgebra(LieAlgebraSpec lie, Cocycle2 omega);

    std::size_t dim() const { return lie_.dim(); }
    const LieAlgebraSpec& lie() const { return lie_; }
    const Cocycle2& omega() const { return omega_; }
    const AlgebraSpec& lsa() const { return lsa_; }

  private:
    LieAlgebraSpec lie_;
    Cocycle2 omega_;
    AlgebraSpec lsa_;
};

}  // namespace pnlie
