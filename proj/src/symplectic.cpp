#include "pnlie/symplectic.hpp"

#include <utility>

#include "pnlie/errors.hpp"

namespace pnlie {

Cocycle2::Cocycle2(Mat omega) : omega_(std::move(omega)) {
    if (!omega_.is_square()) throw DimensionError("omega must be square");
    if (!omega_.is_antisymmetric()) throw PreconditionError("omega must be antisymmetric");
    flat_ = omega_.transpose();
    sharp_ = flat_.inverse();  // throws DegenerateMatrixError on a degenerate 2-cocycle
}

Rational Cocycle2::pair(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("pair: length mismatch");
    Rational r(0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) r += x[i] * omega_.at(i, j) * y[j];
    }
    return r;
}

Rational cocycle_defect(const LieAlgebraSpec& lie, const Mat& w) {
    const std::size_t n = lie.dim();
    if (w.rows() != n || w.cols() != n) throw DimensionError("cocycle_defect: dimension mismatch");
    if (!w.is_antisymmetric()) throw PreconditionError("cocycle_defect: w must be antisymmetric");
    auto pair = [&](const Vec& x, const Vec& y) {
        Rational r(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r += x[i] * w.at(i, j) * y[j];
        return r;
    };
    Rational defect(0);
    // The cyclic sum is alternating, so i<j<k triples are exhaustive.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                Rational s = pair(bracket(lie, ei, ej), ek);
                s += pair(bracket(lie, ej, ek), ei);
                s += pair(bracket(lie, ek, ei), ej);
                const Rational m = abs(s);
                if (m > defect) defect = m;
            }
    return defect;
}

bool is_unimodular(const LieAlgebraSpec& lie) {
    const std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i)
        if (ad_matrix(lie, basis_vec(n, i)).trace() != 0) return false;
    return true;
}

AlgebraSpec lsa_from_symplectic(const LieAlgebraSpec& lie, const Cocycle2& w) {
    const std::size_t n = lie.dim();
    if (w.dim() != n) throw DimensionError("lsa_from_symplectic: dimension mismatch");
    if (jacobi_defect(lie) != 0)
        throw PreconditionError("lsa_from_symplectic: Jacobi identity violated");
    if (cocycle_defect(lie, w.omega()) != 0)
        throw PreconditionError("lsa_from_symplectic: omega is not a 2-cocycle");

    AlgebraSpec alg(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Mat coad = -ad_matrix(lie, basis_vec(n, i)).transpose();
        const Mat li = w.sharp() * coad * w.flat();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) alg.set(i, j, k, li.at(k, j));
    }

    if (left_symmetry_defect(alg) != 0)
        throw PreconditionError("lsa_from_symplectic: constructed product is not left-symmetric");
    if (derived_lie(alg) != lie)
        throw PreconditionError("lsa_from_symplectic: commutator does not recover the bracket");
    return alg;
}

SymplecticLieAlgebra::SymplecticLieAlgebra(LieAlgebraSpec lie, Cocycle2 omega)
    : lie_(std::move(lie)),
      omega_(std::move(omega)),
      lsa_(lsa_from_symplectic(lie_, omega_)) {}

}  // namespace pnlie
