#pragma once

#include <cstddef>
#include <vector>

#include "pnlie/matrix.hpp"
#include "pnlie/rational.hpp"

namespace pnlie {

/// Rank-3 array of rationals with all three index ranges equal to dim.
struct Tensor3 {
    std::size_t dim = 0;
    std::vector<Rational> a;

    Tensor3() = default;
    explicit Tensor3(std::size_t d) : dim(d), a(d * d * d, Rational(0)) {}

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return a[(i * dim + j) * dim + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a[(i * dim + j) * dim + k];
    }
    bool operator==(const Tensor3& o) const = default;
    Rational max_abs() const;
};

/// Bilinear product on an n-dimensional space, given by structure constants
/// R^k_{ij}: e_i . e_j = sum_k R^k_{ij} e_k (i is the left factor). Stored as
/// at(i, j, k). No symmetry is imposed; left-symmetry is a checked property.
class AlgebraSpec {
  public:
    explicit AlgebraSpec(std::size_t dim) : dim_(dim), r_(dim) {}
    AlgebraSpec(std::size_t dim, Tensor3 r);

    std::size_t dim() const { return dim_; }
    const Tensor3& constants() const { return r_; }
    const Rational& r(std::size_t i, std::size_t j, std::size_t k) const { return r_.at(i, j, k); }
    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) { r_.at(i, j, k) = v; }

    bool operator==(const AlgebraSpec& o) const = default;

  private:
    std::size_t dim_;
    Tensor3 r_;
};

/// Lie bracket structure constants c^k_{ij}, antisymmetric in (i, j).
/// The constructor rejects non-antisymmetric data instead of fixing it.
class LieAlgebraSpec {
  public:
    explicit LieAlgebraSpec(std::size_t dim) : dim_(dim), c_(dim) {}
    LieAlgebraSpec(std::size_t dim, Tensor3 c);

    std::size_t dim() const { return dim_; }
    const Tensor3& constants() const { return c_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_.at(i, j, k); }

    /// Sets c^k_{ij} = v and c^k_{ji} = -v.
    void set_pair(std::size_t i, std::size_t j, std::size_t k, const Rational& v);

    bool operator==(const LieAlgebraSpec& o) const = default;

  private:
    std::size_t dim_;
    Tensor3 c_;
};

// -- products and brackets ---------------------------------------------------

/// Bilinear extension of e_i . e_j = sum_k R^k_{ij} e_k.
Vec multiply(const AlgebraSpec& alg, const Vec& x, const Vec& y);

Vec bracket(const LieAlgebraSpec& lie, const Vec& x, const Vec& y);

/// [x,y,z] = (x.y).z - x.(y.z)
Vec associator(const AlgebraSpec& alg, const Vec& x, const Vec& y, const Vec& z);

// -- defects (max |coefficient|, exactly zero iff the identity holds) --------

struct DefectWitness {
    Rational defect;
    std::size_t i = 0, j = 0, k = 0;
};

/// max |coefficient| of [e_i,e_j,e_k] - [e_j,e_i,e_k] over all basis triples.
Rational left_symmetry_defect(const AlgebraSpec& alg);
DefectWitness left_symmetry_defect_witness(const AlgebraSpec& alg);

/// max |coefficient| of [e_i,[e_j,e_k]] + cyclic over all basis triples.
Rational jacobi_defect(const LieAlgebraSpec& lie);

// -- derived structures -------------------------------------------------------

/// Commutator bracket c^k_{ij} = R^k_{ij} - R^k_{ji}.
LieAlgebraSpec derived_lie(const AlgebraSpec& alg);

/// Right multiplication R_x: y -> y.x as a matrix, (R_x)^k_i = sum_j R^k_{ij} x^j.
Mat right_mult(const AlgebraSpec& alg, const Vec& x);

/// Left multiplication L_x: y -> x.y as a matrix, (L_x)^k_j = sum_i R^k_{ij} x^i.
Mat left_mult(const AlgebraSpec& alg, const Vec& x);

/// Adjoint action ad(x): y -> [x,y] as a matrix.
Mat ad_matrix(const LieAlgebraSpec& lie, const Vec& x);

/// The linear functional tau_i = Tr R_{e_i}, returned as a covector.
Vec tau(const AlgebraSpec& alg);

/// The bilinear form b_{ij} = Tr R_{e_i} R_{e_j}.
Mat b_form(const AlgebraSpec& alg);

}  // namespace pnlie
