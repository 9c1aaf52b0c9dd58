#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pnlie/matrix.hpp"
#include "pnlie/rational.hpp"

namespace pnlie {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically. Fixed once so serialization is canonical.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial in x^1..x^n with exact rational
/// coefficients. Invariant: no stored coefficient is zero, every exponent
/// vector has length nvars, terms are kept in graded-lex order.
class MPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    /// Accumulates coeff * x^exps, dropping the term if it cancels to zero.
    void add_term(const Exponents& exps, const Rational& coeff);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const = default;

    MPoly scaled(const Rational& c) const;

    /// Partial derivative with respect to x^i.
    MPoly partial(std::size_t i) const;

    Rational eval(const Vec& p) const;

    /// Substitutes x_i -> sum_j C(i,j) * x_j; C must have nvars rows.
    MPoly subst_linear(const Mat& c) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t total_degree() const;  ///< 0 for the zero polynomial
    bool is_homogeneous() const;       ///< zero polynomial counts as homogeneous
    Rational max_abs_coeff() const;

    std::string str() const;  ///< human-readable, canonical term order

  private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Exact power with non-negative integer exponent.
Rational rat_pow(const Rational& base, unsigned e);

}  // namespace pnlie
