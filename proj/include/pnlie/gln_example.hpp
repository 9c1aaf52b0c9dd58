#pragma once

#include <string>
#include <vector>

#include "pnlie/algebra.hpp"
#include "pnlie/matrix.hpp"
#include "pnlie/mpoly.hpp"
#include "pnlie/symplectic.hpp"

namespace pnlie {

/// Data for the semidirect product of the n x n matrix algebra with R^n,
/// bracket [(A,x),(B,y)] = (AB - BA, Ay - Bx), together with the 1-form
/// nu(A,x) = Tr(M A) + g(x) whose coboundary omega(u,v) = nu([u,v]) is the
/// candidate symplectic form.
struct GlnSemidirectConfig {
    std::size_t n = 2;
    Mat m;  ///< n x n
    Vec g;  ///< length n covector
};

struct GlnBuild {
    LieAlgebraSpec lie;
    Mat omega;
};

/// Structure constants and omega in the basis (0,e_1)..(0,e_n),
/// (E_11,0), (E_12,0), ..., (E_nn,0). Degeneracy of omega is not checked
/// here; it surfaces when a Cocycle2 is constructed from the result.
GlnBuild build_gln(const GlnSemidirectConfig& config);

/// Labels of the fixed n = 2 basis: v1=(0,e1), v2=(0,e2), v3=(I,0),
/// v4=(H,0), v5=(X+,0), v6=(X-,0) with H = diag(1,-1), X+ = E_12,
/// X- = E_21. Coordinates x_1..x_6 refer to this ordering.
std::vector<std::string> paper_basis();

/// Same build in the fixed n = 2 basis, with M = ((l,1),(0,l)) and
/// g = a<e_1, .>.
GlnBuild build_paper_n2(const Rational& a, const Rational& l);

/// The 6 x 6 matrix C of the coordinate substitution applied to the n = 2
/// Hamiltonians, old_i = sum_j C(i,j) new_j:
///   old_1 = x1 - x5 + (2/a) x6, old_2 = x2, old_3 = x3 - x4,
///   old_4 = x4, old_5 = x1 + x5, old_6 = x6.
/// Requires a != 0.
Mat paper_coordinate_change(const Rational& a);

enum class MatchStatus { exact, global_sign, mismatch };

struct PolyComparison {
    std::string name;
    MatchStatus status = MatchStatus::mismatch;
    MPoly computed;
    MPoly target;
    PolyComparison() : computed(0), target(0) {}
};

struct PaperComparison {
    std::vector<PolyComparison> entries;

    /// True when all three polynomials match exactly, or all three match
    /// after one uniform global sign flip.
    bool reproduced() const;
    bool uniform_sign_flip() const;
};

/// Runs the full n = 2 pipeline at the given parameter values, applies the
/// coordinate substitution and compares H1, H2, H3 against the reference
/// polynomials 4x4 - 4x3, (-4a x1^2 + 4 x3^2 + 8 x4^2 + 4a x5^2)/2 and
/// (-4 x3^3 + 16 x4^3 + 6a(x1-x5)(x1+x5)(x3-2x4) - 6a x2 (x1+x5)^2)/3.
/// A mismatch is a report outcome, not an exception.
PaperComparison reproduce_paper(const Rational& a, const Rational& l);

/// The reference polynomials above, instantiated at the parameter a.
std::vector<MPoly> paper_reference_polys(const Rational& a);

}  // namespace pnlie
