#include "pnlie/trace_involution.hpp"

#include <string>
#include <utility>

#include "pnlie/errors.hpp"
#include "pnlie/random_points.hpp"

namespace pnlie {

PolyMat::PolyMat(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), a_(rows * cols, MPoly(nvars)) {}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_ || nvars_ != o.nvars_)
        throw DimensionError("polynomial matrix shape mismatch in *");
    PolyMat r(rows_, o.cols_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const MPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

PolyMat PolyMat::transpose() const {
    PolyMat r(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

MPoly PolyMat::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of non-square polynomial matrix");
    MPoly t(nvars_);
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

PolyVec PolyMat::apply(const PolyVec& v) const {
    if (v.size() != cols_) throw DimensionError("polynomial matrix-vector mismatch");
    PolyVec r(rows_, MPoly(nvars_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Mat PolyMat::eval(const Vec& p) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(p);
    return m;
}

PolyMat PolyMat::from_constant(const Mat& m, std::size_t nvars) {
    PolyMat r(m.rows(), m.cols(), nvars);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = MPoly::constant(nvars, m.at(i, j));
    return r;
}

PolyMat symbolic_right_mult(const AlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    PolyMat m(n, n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            MPoly entry(n);
            for (std::size_t l = 0; l < n; ++l) {
                Exponents e(n, 0);
                e[l] = 1;
                entry.add_term(e, alg.r(i, l, k));
            }
            m.at(k, i) = std::move(entry);
        }
    return m;
}

PolyMat bivector_poly_mat(const LinearBivector& p) {
    const std::size_t n = p.dim();
    PolyMat m(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MPoly entry = MPoly::constant(n, p.const_part().at(i, j));
            for (std::size_t l = 0; l < n; ++l) {
                Exponents e(n, 0);
                e[l] = 1;
                entry.add_term(e, p.lin_part().at(i, j, l));
            }
            m.at(i, j) = std::move(entry);
        }
    return m;
}

MPoly hamiltonian(const AlgebraSpec& alg, unsigned n) {
    if (n < 1) throw PreconditionError("hamiltonian: n must be >= 1");
    const PolyMat rx = symbolic_right_mult(alg);
    PolyMat power = rx;
    for (unsigned k = 1; k < n; ++k) power = power * rx;
    return power.trace().scaled(Rational(1) / Rational(n));
}

HamiltonianFamily hamiltonian_family(const AlgebraSpec& alg, unsigned max_n) {
    if (max_n < 1) throw PreconditionError("hamiltonian_family: max_n must be >= 1");
    HamiltonianFamily fam{alg, max_n, {}};
    const PolyMat rx = symbolic_right_mult(alg);
    PolyMat power = rx;
    for (unsigned n = 1; n <= max_n; ++n) {
        fam.polys.push_back(power.trace().scaled(Rational(1) / Rational(n)));
        if (n < max_n) power = power * rx;
    }
    return fam;
}

PolyVec differential(const MPoly& f) {
    PolyVec d;
    d.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) d.push_back(f.partial(i));
    return d;
}

Rational recursion_defect(const AlgebraSpec& alg, unsigned n) {
    if (left_symmetry_defect(alg) != 0)
        throw PreconditionError("recursion_defect: algebra is not left-symmetric");
    const HamiltonianFamily fam = hamiltonian_family(alg, n + 1);
    const PolyMat nstar = symbolic_right_mult(alg).transpose();
    const PolyVec lhs = nstar.apply(differential(fam.h(n)));
    const PolyVec rhs = differential(fam.h(n + 1));
    Rational defect(0);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const Rational m = (lhs[i] - rhs[i]).max_abs_coeff();
        if (m > defect) defect = m;
    }
    return defect;
}

MPoly poisson_bracket(const LinearBivector& p, const MPoly& f, const MPoly& g) {
    const std::size_t n = p.dim();
    if (f.nvars() != n || g.nvars() != n) throw DimensionError("poisson_bracket: nvars mismatch");
    const PolyVec df = differential(f);
    const PolyVec dg = differential(g);
    MPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (df[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (dg[j].is_zero()) continue;
            MPoly pij = MPoly::constant(n, p.const_part().at(i, j));
            for (std::size_t l = 0; l < n; ++l) {
                Exponents e(n, 0);
                e[l] = 1;
                pij.add_term(e, p.lin_part().at(i, j, l));
            }
            if (pij.is_zero()) continue;
            out = out + pij * df[i] * dg[j];
        }
    }
    return out;
}

Report involution_certificate(const SymplecticLieAlgebra& s, unsigned max_n) {
    if (max_n < 2) throw PreconditionError("involution_certificate: max_n must be >= 2");
    Report rep;
    const AlgebraSpec& alg = s.lsa();
    const LinearBivector lambda = lambda_from_omega(s.omega());
    const LinearBivector lambda_nn = lambda_n(lambda, nijenhuis_from_algebra(alg));
    const HamiltonianFamily fam = hamiltonian_family(alg, max_n);

    if (is_unimodular(s.lie())) {
        bool all_zero = true;
        for (const auto& h : fam.polys) all_zero = all_zero && h.is_zero();
        rep.add("unimodular", all_zero, Rational(0),
                all_zero ? "unimodular: trace polynomials vanish"
                         : "unimodular input but some H_n is nonzero");
    }

    for (unsigned n = 1; n <= max_n; ++n)
        for (unsigned m = 1; m <= max_n; ++m) {
            const MPoly b1 = poisson_bracket(lambda, fam.h(n), fam.h(m));
            const MPoly b2 = poisson_bracket(lambda_nn, fam.h(n), fam.h(m));
            const std::string pair =
                "H" + std::to_string(n) + ",H" + std::to_string(m);
            rep.add("involution-lambda{" + pair + "}", b1.is_zero(), b1.max_abs_coeff(),
                    b1.is_zero() ? "" : "nonzero bracket for pair {" + pair + "}");
            rep.add("involution-lambdaN{" + pair + "}", b2.is_zero(), b2.max_abs_coeff(),
                    b2.is_zero() ? "" : "nonzero bracket for pair {" + pair + "}");
        }

    // sharp(Lambda_N) dH_n = sharp(Lambda) dH_{n+1}
    const PolyMat lam_mat = bivector_poly_mat(lambda);
    const PolyMat lam_n_mat = bivector_poly_mat(lambda_nn);
    for (unsigned n = 1; n + 1 <= max_n; ++n) {
        const PolyVec lhs = lam_n_mat.apply(differential(fam.h(n)));
        const PolyVec rhs = lam_mat.apply(differential(fam.h(n + 1)));
        Rational defect(0);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            const Rational d = (lhs[i] - rhs[i]).max_abs_coeff();
            if (d > defect) defect = d;
        }
        rep.add("recursion{n=" + std::to_string(n) + "}", defect == 0, defect);
    }

    rep.hamiltonians = fam.polys;
    return rep;
}

RankResult independence_rank(const std::vector<MPoly>& polys, std::uint64_t seed,
                             unsigned attempts) {
    if (polys.empty()) throw PreconditionError("independence_rank: empty polynomial list");
    const std::size_t nvars = polys.front().nvars();
    for (const auto& p : polys)
        if (p.nvars() != nvars) throw DimensionError("independence_rank: nvars mismatch");

    std::vector<PolyVec> grads;
    grads.reserve(polys.size());
    for (const auto& p : polys) grads.push_back(differential(p));

    RationalSampler sampler(seed);
    RankResult best;
    best.witness = zero_vec(nvars);
    for (unsigned t = 0; t < attempts; ++t) {
        const Vec point = sampler.point(nvars);
        Mat jac(polys.size(), nvars);
        for (std::size_t r = 0; r < polys.size(); ++r)
            for (std::size_t c = 0; c < nvars; ++c) jac.at(r, c) = grads[r][c].eval(point);
        const std::size_t rank = jac.rank();
        if (rank > best.rank) {
            best.rank = rank;
            best.witness = point;
        }
        if (best.rank == polys.size()) break;
    }
    return best;
}

}  // namespace pnlie
