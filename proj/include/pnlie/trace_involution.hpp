#pragma once

#include <cstdint>
#include <vector>

#include "pnlie/algebra.hpp"
#include "pnlie/mpoly.hpp"
#include "pnlie/nijenhuis.hpp"
#include "pnlie/report.hpp"
#include "pnlie/symplectic.hpp"

namespace pnlie {

using PolyVec = std::vector<MPoly>;

/// Small dense matrix of polynomials; used for the symbolic R_x and for
/// bivectors applied to polynomial covectors.
class PolyMat {
  public:
    PolyMat(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    MPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const MPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    PolyMat operator*(const PolyMat& o) const;
    PolyMat transpose() const;
    MPoly trace() const;
    PolyVec apply(const PolyVec& v) const;
    Mat eval(const Vec& p) const;

    static PolyMat from_constant(const Mat& m, std::size_t nvars);

  private:
    std::size_t rows_, cols_, nvars_;
    std::vector<MPoly> a_;
};

/// The matrix of R_x with x symbolic: entry (k, i) = sum_l R^k_{il} x^l.
PolyMat symbolic_right_mult(const AlgebraSpec& alg);

/// Affine polynomial matrix Pi^{ij}(x) of a bivector.
PolyMat bivector_poly_mat(const LinearBivector& p);

/// H_n = (1/n) Tr (R_x)^n. Homogeneous of degree n.
MPoly hamiltonian(const AlgebraSpec& alg, unsigned n);

struct HamiltonianFamily {
    AlgebraSpec algebra;
    unsigned max_n;
    std::vector<MPoly> polys;  ///< H_1 .. H_max_n

    const MPoly& h(unsigned n) const { return polys.at(n - 1); }
};
HamiltonianFamily hamiltonian_family(const AlgebraSpec& alg, unsigned max_n);

/// Componentwise gradient (d/dx^1 f, ..., d/dx^n f).
PolyVec differential(const MPoly& f);

/// max |coefficient| of (R_x)^T dH_n - dH_{n+1}; zero certifies the Lenard
/// chain link N^* dH_n = dH_{n+1}. Requires a left-symmetric algebra.
Rational recursion_defect(const AlgebraSpec& alg, unsigned n);

/// {f, g} = sum_{ij} Pi^{ij}(x) d_i f d_j g.
MPoly poisson_bracket(const LinearBivector& p, const MPoly& f, const MPoly& g);

/// Full involution certificate: every bracket {H_n, H_m} under Lambda and
/// Lambda_N as an exact polynomial identity, plus the recursion relation
/// sharp(Lambda_N) dH_n = sharp(Lambda) dH_{n+1}. Flags unimodular inputs,
/// whose trace polynomials vanish identically.
Report involution_certificate(const SymplecticLieAlgebra& s, unsigned max_n);

struct RankResult {
    std::size_t rank = 0;
    Vec witness;  ///< point achieving the rank
};

/// Evaluates the Jacobian of the polynomials at seeded pseudo-random
/// rational points and returns the maximal rank found with a witness.
/// One full-rank witness certifies independence almost everywhere, since
/// rank deficiency is a Zariski-closed condition.
RankResult independence_rank(const std::vector<MPoly>& polys, std::uint64_t seed,
                             unsigned attempts);

}  // namespace pnlie
