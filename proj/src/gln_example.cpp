#include "pnlie/gln_example.hpp"

#include <utility>

#include "pnlie/errors.hpp"
#include "pnlie/trace_involution.hpp"

namespace pnlie {

namespace {

/// One basis element (A, y) of the semidirect product.
struct SemidirectElement {
    Mat a;  // n x n
    Vec y;  // length n
};

SemidirectElement se_bracket(const SemidirectElement& u, const SemidirectElement& v) {
    return SemidirectElement{u.a * v.a - v.a * u.a, vec_sub(u.a.apply(v.y), v.a.apply(u.y))};
}

Vec se_flatten(const SemidirectElement& e) {
    Vec out;
    out.reserve(e.a.rows() * e.a.cols() + e.y.size());
    for (std::size_t i = 0; i < e.a.rows(); ++i)
        for (std::size_t j = 0; j < e.a.cols(); ++j) out.push_back(e.a.at(i, j));
    for (const auto& x : e.y) out.push_back(x);
    return out;
}

GlnBuild build_from_basis(const std::vector<SemidirectElement>& basis, const Mat& m,
                          const Vec& g) {
    const std::size_t dim = basis.size();
    const std::size_t n = m.rows();

    // Coordinates of an element with respect to the basis, via one exact
    // inversion of the flattened basis matrix.
    Mat basis_mat(n * n + n, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const Vec col = se_flatten(basis[j]);
        for (std::size_t i = 0; i < col.size(); ++i) basis_mat.at(i, j) = col[i];
    }
    const Mat expand = basis_mat.inverse();

    Tensor3 c(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Vec coords = expand.apply(se_flatten(se_bracket(basis[i], basis[j])));
            for (std::size_t k = 0; k < dim; ++k) {
                c.at(i, j, k) = coords[k];
                c.at(j, i, k) = -coords[k];
            }
        }

    auto g_of = [&](const Vec& x) {
        Rational r(0);
        for (std::size_t i = 0; i < n; ++i) r += g[i] * x[i];
        return r;
    };
    // omega(u, v) = g(A_u y_v) - g(A_v y_u) + Tr([M, A_u] A_v)
    Mat omega(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Mat comm = m * basis[i].a - basis[i].a * m;
            omega.at(i, j) = g_of(basis[i].a.apply(basis[j].y)) -
                             g_of(basis[j].a.apply(basis[i].y)) + (comm * basis[j].a).trace();
        }

    return GlnBuild{LieAlgebraSpec(dim, std::move(c)), std::move(omega)};
}

Mat unit_matrix(std::size_t n, std::size_t a, std::size_t b) {
    Mat m(n, n);
    m.at(a, b) = 1;
    return m;
}

}  // namespace

GlnBuild build_gln(const GlnSemidirectConfig& config) {
    const std::size_t n = config.n;
    if (n < 1) throw PreconditionError("build_gln: n must be >= 1");
    if (config.m.rows() != n || config.m.cols() != n || config.g.size() != n)
        throw DimensionError("build_gln: M must be n x n and g of length n");

    std::vector<SemidirectElement> basis;
    basis.reserve(n * n + n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back({Mat(n, n), basis_vec(n, i)});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) basis.push_back({unit_matrix(n, a, b), zero_vec(n)});
    return build_from_basis(basis, config.m, config.g);
}

std::vector<std::string> paper_basis() {
    return {"v1=(0,e1)", "v2=(0,e2)", "v3=(I,0)", "v4=(H,0)", "v5=(X+,0)", "v6=(X-,0)"};
}

GlnBuild build_paper_n2(const Rational& a, const Rational& l) {
    Mat m(2, 2);
    m.at(0, 0) = l;
    m.at(0, 1) = 1;
    m.at(1, 1) = l;
    Vec g = {a, Rational(0)};

    Mat ident = Mat::identity(2);
    Mat h(2, 2);
    h.at(0, 0) = 1;
    h.at(1, 1) = -1;
    std::vector<SemidirectElement> basis = {
        {Mat(2, 2), basis_vec(2, 0)}, {Mat(2, 2), basis_vec(2, 1)}, {ident, zero_vec(2)},
        {h, zero_vec(2)},             {unit_matrix(2, 0, 1), zero_vec(2)},
        {unit_matrix(2, 1, 0), zero_vec(2)},
    };
    return build_from_basis(basis, m, g);
}

Mat paper_coordinate_change(const Rational& a) {
    if (a == 0) throw PreconditionError("paper_coordinate_change: a must be nonzero");
    Mat c(6, 6);
    c.at(0, 0) = 1;
    c.at(0, 4) = -1;
    c.at(0, 5) = Rational(2) / a;
    c.at(1, 1) = 1;
    c.at(2, 2) = 1;
    c.at(2, 3) = -1;
    c.at(3, 3) = 1;
    c.at(4, 0) = 1;
    c.at(4, 4) = 1;
    c.at(5, 5) = 1;
    return c;
}

std::vector<MPoly> paper_reference_polys(const Rational& a) {
    const auto x = [](std::size_t i) { return MPoly::variable(6, i); };

    // H1 = -4 x3 + 4 x4
    MPoly h1 = x(2).scaled(-4) + x(3).scaled(4);

    // 2 H2 = -4a x1^2 + 4 x3^2 + 8 x4^2 + 4a x5^2
    MPoly two_h2 = (x(0) * x(0)).scaled(-4 * a) + (x(2) * x(2)).scaled(4) +
                   (x(3) * x(3)).scaled(8) + (x(4) * x(4)).scaled(4 * a);

    // 3 H3 = -4 x3^3 + 16 x4^3 + 6a (x1 - x5)(x1 + x5)(x3 - 2 x4) - 6a x2 (x1 + x5)^2
    const MPoly sum15 = x(0) + x(4);
    const MPoly diff15 = x(0) - x(4);
    MPoly three_h3 = (x(2) * x(2) * x(2)).scaled(-4) + (x(3) * x(3) * x(3)).scaled(16) +
                     (diff15 * sum15 * (x(2) - x(3).scaled(2))).scaled(6 * a) -
                     (x(1) * sum15 * sum15).scaled(6 * a);

    return {h1, two_h2.scaled(Rational(1) / 2), three_h3.scaled(Rational(1) / 3)};
}

bool PaperComparison::reproduced() const {
    bool all_exact = true, all_flipped = true;
    for (const auto& e : entries) {
        // A vanishing polynomial counts for either outcome.
        const bool zero = e.computed.is_zero() && e.target.is_zero();
        all_exact = all_exact && (e.status == MatchStatus::exact || zero);
        all_flipped = all_flipped && (e.status == MatchStatus::global_sign || zero);
    }
    return !entries.empty() && (all_exact || all_flipped);
}

bool PaperComparison::uniform_sign_flip() const {
    if (entries.empty() || !reproduced()) return false;
    for (const auto& e : entries)
        if (e.status == MatchStatus::global_sign) return true;
    return false;
}

PaperComparison reproduce_paper(const Rational& a, const Rational& l) {
    const GlnBuild build = build_paper_n2(a, l);
    const SymplecticLieAlgebra s(build.lie, Cocycle2(build.omega));
    const HamiltonianFamily fam = hamiltonian_family(s.lsa(), 3);
    const Mat change = paper_coordinate_change(a);
    const std::vector<MPoly> targets = paper_reference_polys(a);

    PaperComparison cmp;
    for (unsigned n = 1; n <= 3; ++n) {
        PolyComparison entry;
        entry.name = "H" + std::to_string(n);
        entry.computed = fam.h(n).subst_linear(change);
        entry.target = targets[n - 1];
        if (entry.computed == entry.target)
            entry.status = MatchStatus::exact;
        else if (entry.computed == -entry.target)
            entry.status = MatchStatus::global_sign;
        else
            entry.status = MatchStatus::mismatch;
        cmp.entries.push_back(std::move(entry));
    }
    return cmp;
}

}  // namespace pnlie
