#include "pnlie/serial.hpp"

#include <fstream>
#include <set>
#include <tuple>

#include "pnlie/errors.hpp"

namespace pnlie {

namespace {

using IndexTriple = std::tuple<std::size_t, std::size_t, std::size_t>;

std::size_t get_dim(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
        throw ParseError("expected an object with an unsigned \"dim\" field");
    return j["dim"].get<std::size_t>();
}

Tensor3 constants_from_json(const nlohmann::json& j, std::size_t dim) {
    if (!j.contains("constants") || !j["constants"].is_array())
        throw ParseError("expected a \"constants\" array");
    Tensor3 t(dim);
    std::set<IndexTriple> seen;
    for (const auto& entry : j["constants"]) {
        if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned() || !entry[2].is_number_unsigned() ||
            !entry[3].is_string())
            throw ParseError("constants entries must be [i, j, k, \"p/q\"]");
        const std::size_t i = entry[0].get<std::size_t>();
        const std::size_t jj = entry[1].get<std::size_t>();
        const std::size_t k = entry[2].get<std::size_t>();
        if (i >= dim || jj >= dim || k >= dim)
            throw ParseError("constants index out of range for dim " + std::to_string(dim));
        if (!seen.insert({i, jj, k}).second)
            throw ParseError("duplicate constants key (" + std::to_string(i) + "," +
                             std::to_string(jj) + "," + std::to_string(k) + ")");
        t.at(i, jj, k) = parse_rational(entry[3].get<std::string>());
    }
    return t;
}

nlohmann::json constants_to_json(const Tensor3& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            for (std::size_t k = 0; k < t.dim; ++k)
                if (t.at(i, j, k) != 0)
                    arr.push_back({i, j, k, rational_str(t.at(i, j, k))});
    return arr;
}

}  // namespace

nlohmann::json algebra_to_json(const AlgebraSpec& alg) {
    nlohmann::json j;
    j["dim"] = alg.dim();
    j["constants"] = constants_to_json(alg.constants());
    return j;
}

AlgebraSpec algebra_from_json(const nlohmann::json& j) {
    const std::size_t dim = get_dim(j);
    return AlgebraSpec(dim, constants_from_json(j, dim));
}

nlohmann::json lie_to_json(const LieAlgebraSpec& lie) {
    nlohmann::json j;
    j["dim"] = lie.dim();
    j["constants"] = constants_to_json(lie.constants());
    return j;
}

LieAlgebraSpec lie_from_json(const nlohmann::json& j) {
    const std::size_t dim = get_dim(j);
    return LieAlgebraSpec(dim, constants_from_json(j, dim));
}

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_string()) throw ParseError("matrix entries must be rational strings");
            m.at(i, k) = parse_rational(j[i][k].get<std::string>());
        }
    }
    return m;
}

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(rational_str(x));
    return arr;
}

Vec vec_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array of rational strings");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("vector entries must be rational strings");
        v.push_back(parse_rational(e.get<std::string>()));
    }
    return v;
}

nlohmann::json symplectic_to_json(const LieAlgebraSpec& lie, const Mat& omega) {
    nlohmann::json j;
    j["lie"] = lie_to_json(lie);
    j["omega"] = mat_to_json(omega);
    return j;
}

SymplecticInput symplectic_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lie") || !j.contains("omega"))
        throw ParseError("symplectic input must contain \"lie\" and \"omega\"");
    LieAlgebraSpec lie = lie_from_json(j["lie"]);
    Mat omega = mat_from_json(j["omega"]);
    if (omega.rows() != lie.dim() || omega.cols() != lie.dim())
        throw ParseError("omega dimensions do not match the Lie algebra");
    return SymplecticInput{std::move(lie), std::move(omega)};
}

nlohmann::json poly_to_json(const MPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        nlohmann::json t;
        t["coeff"] = rational_str(coeff);
        t["exps"] = exps;
        arr.push_back(t);
    }
    return arr;
}

MPoly poly_from_json(const nlohmann::json& j, std::size_t nvars) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
    MPoly p(nvars);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") ||
            !t["coeff"].is_string() || !t["exps"].is_array() || t["exps"].size() != nvars)
            throw ParseError("polynomial terms must be {\"coeff\": \"p/q\", \"exps\": [...]}");
        Exponents e;
        for (const auto& x : t["exps"]) {
            if (!x.is_number_unsigned()) throw ParseError("exponents must be unsigned integers");
            e.push_back(x.get<unsigned>());
        }
        p.add_term(e, parse_rational(t["coeff"].get<std::string>()));
    }
    return p;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << content;
}

}  // namespace pnlie
