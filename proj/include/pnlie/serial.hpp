#pragma once

#include <string>

#include "json.hpp"
#include "pnlie/algebra.hpp"
#include "pnlie/matrix.hpp"
#include "pnlie/mpoly.hpp"

namespace pnlie {

// Algebra files: {"dim": n, "constants": [[i, j, k, "p/q"], ...]} listing only
// nonzero entries, zero-based, meaning the coefficient of e_k in e_i.e_j
// (respectively [e_i, e_j]). Unlisted entries are zero; duplicate (i,j,k)
// keys are an error. Lie files must list both halves of each antisymmetric
// pair explicitly.

nlohmann::json algebra_to_json(const AlgebraSpec& alg);
AlgebraSpec algebra_from_json(const nlohmann::json& j);

nlohmann::json lie_to_json(const LieAlgebraSpec& lie);
LieAlgebraSpec lie_from_json(const nlohmann::json& j);

// omega: full dense n x n array of rational strings.
nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

// Symplectic input document: {"lie": <lie doc>, "omega": [["p/q", ...], ...]}.
struct SymplecticInput {
    LieAlgebraSpec lie;
    Mat omega;
};
nlohmann::json symplectic_to_json(const LieAlgebraSpec& lie, const Mat& omega);
SymplecticInput symplectic_from_json(const nlohmann::json& j);

// Polynomials: [{"coeff": "p/q", "exps": [e1, ..., en]}, ...] in canonical
// graded-lex term order.
nlohmann::json poly_to_json(const MPoly& p);
MPoly poly_from_json(const nlohmann::json& j, std::size_t nvars);

/// Reads and parses a JSON document; throws ParseError with the path on
/// any failure.
nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pnlie
