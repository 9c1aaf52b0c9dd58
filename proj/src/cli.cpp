#include "pnlie/cli.hpp"

#include <ostream>
#include <string>

#include "json.hpp"
#include "pnlie/errors.hpp"
#include "pnlie/gln_example.hpp"
#include "pnlie/nijenhuis.hpp"
#include "pnlie/report.hpp"
#include "pnlie/serial.hpp"
#include "pnlie/symplectic.hpp"
#include "pnlie/trace_involution.hpp"

namespace pnlie {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPreconditionError = 3;

void emit(const Report& rep, const CommandConfig& config, std::ostream& out) {
    const std::string body =
        config.format == "text" ? rep.to_text() : rep.to_json().dump(2) + "\n";
    if (config.output_path.empty())
        out << body;
    else
        write_text_file(config.output_path, body);
}

int finish(const Report& rep, const CommandConfig& config, std::ostream& out) {
    emit(rep, config, out);
    return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

nlohmann::json require_input(const CommandConfig& config) {
    if (config.input_path.empty()) throw ParseError("--input is required for this command");
    return load_json_file(config.input_path);
}

int run_check_lsa(const CommandConfig& config, std::ostream& out) {
    const AlgebraSpec alg = algebra_from_json(require_input(config));
    Report rep;
    const DefectWitness w = left_symmetry_defect_witness(alg);
    rep.add("left-symmetry", w.defect == 0, w.defect,
            w.defect == 0 ? ""
                          : "left-symmetry fails at basis triple (i,j,k)=(" +
                                std::to_string(w.i) + "," + std::to_string(w.j) + "," +
                                std::to_string(w.k) + ")");
    const Rational jd = jacobi_defect(derived_lie(alg));
    rep.add("derived-jacobi", jd == 0, jd);
    return finish(rep, config, out);
}

int run_check_lie(const CommandConfig& config, std::ostream& out) {
    const LieAlgebraSpec lie = lie_from_json(require_input(config));
    Report rep;
    const Rational jd = jacobi_defect(lie);
    rep.add("jacobi", jd == 0, jd);
    rep.add("unimodular", true, Rational(0), is_unimodular(lie) ? "yes" : "no");
    return finish(rep, config, out);
}

int run_derive_lsa(const CommandConfig& config, std::ostream& out) {
    const SymplecticInput in = symplectic_from_json(require_input(config));
    const AlgebraSpec alg = lsa_from_symplectic(in.lie, Cocycle2(in.omega));
    const std::string body = algebra_to_json(alg).dump(2) + "\n";
    if (config.output_path.empty())
        out << body;
    else
        write_text_file(config.output_path, body);
    return kExitPass;
}

int run_hamiltonians(const CommandConfig& config, std::ostream& out) {
    const AlgebraSpec alg = algebra_from_json(require_input(config));
    const HamiltonianFamily fam = hamiltonian_family(alg, config.max_n);
    Report rep;
    rep.hamiltonians = fam.polys;
    rep.add("hamiltonians", true, Rational(0),
            "H1..H" + std::to_string(config.max_n) + " computed");
    return finish(rep, config, out);
}

Report certify_report(const LieAlgebraSpec& lie, const Mat& omega, const CommandConfig& config) {
    Report rep;
    const Rational jd = jacobi_defect(lie);
    rep.add("jacobi", jd == 0, jd);
    rep.add("omega-antisymmetric", omega.is_antisymmetric());
    if (jd != 0 || !omega.is_antisymmetric()) return rep;

    const Rational cd = cocycle_defect(lie, omega);
    rep.add("cocycle", cd == 0, cd);
    if (cd != 0) return rep;

    const Cocycle2 w(omega);  // throws DegenerateMatrixError if singular
    rep.add("omega-invertible", true);
    const SymplecticLieAlgebra s(lie, w);
    rep.add("left-symmetry", true, left_symmetry_defect(s.lsa()));
    rep.add("derived-bracket-roundtrip", derived_lie(s.lsa()) == lie);

    const LinearTensorField t = nijenhuis_from_algebra(s.lsa());
    const Rational osd = omega_symmetry_defect(t, w);
    rep.add("omega-symmetry-of-N", osd == 0, osd);
    const Rational dfd = dF_defect(t, w);
    rep.add("dF-closed", dfd == 0, dfd);
    const Rational tor = torsion_coord(t).max_abs();
    rep.add("torsion-vanishes", tor == 0, tor);

    const LinearBivector lambda = lambda_from_omega(w);
    const LinearBivector ln = lambda_n(lambda, t);
    const Rational sd0 = schouten_defect(lambda);
    rep.add("schouten-lambda", sd0 == 0, sd0);
    const Rational sd1 = schouten_defect(ln);
    rep.add("schouten-lambdaN", sd1 == 0, sd1);

    Report inv = involution_certificate(s, config.max_n);
    for (auto& c : inv.checks) rep.checks.push_back(std::move(c));
    rep.hamiltonians = std::move(inv.hamiltonians);
    return rep;
}

int run_certify(const CommandConfig& config, std::ostream& out) {
    if (config.paper_n2) {
        const GlnBuild build = build_paper_n2(config.a, config.l);
        Report rep = certify_report(build.lie, build.omega, config);
        if (rep.all_pass()) {
            const PaperComparison cmp = reproduce_paper(config.a, config.l);
            for (const auto& e : cmp.entries) {
                const char* status = e.status == MatchStatus::exact ? "exact"
                    : e.status == MatchStatus::global_sign          ? "global-sign"
                                                                    : "mismatch";
                rep.add("paper-" + e.name, e.status != MatchStatus::mismatch, Rational(0),
                        status);
            }
            // Report the polynomials in the comparison coordinates.
            const Mat change = paper_coordinate_change(config.a);
            for (auto& h : rep.hamiltonians) h = h.subst_linear(change);
        }
        return finish(rep, config, out);
    }
    const SymplecticInput in = symplectic_from_json(require_input(config));
    return finish(certify_report(in.lie, in.omega, config), config, out);
}

int run_independence(const CommandConfig& config, std::ostream& out) {
    const AlgebraSpec alg = algebra_from_json(require_input(config));
    const HamiltonianFamily fam = hamiltonian_family(alg, config.max_n);
    const RankResult rr = independence_rank(fam.polys, config.seed, config.attempts);
    Report rep;
    rep.add("independence-rank", true, Rational(0),
            "rank " + std::to_string(rr.rank) + " of " + std::to_string(fam.polys.size()) +
                " polynomials");
    rep.hamiltonians = fam.polys;
    rep.witness_points.push_back(rr.witness);
    return finish(rep, config, out);
}

int run_example(const CommandConfig& config, std::ostream& out) {
    if (config.generator != "gln-semidirect")
        throw ParseError("unknown generator: " + config.generator);
    GlnBuild build = [&] {
        if (config.paper_n2) return build_paper_n2(config.a, config.l);
        GlnSemidirectConfig gc;
        gc.n = config.gln_n;
        if (!config.m_json.empty() && !config.g_json.empty()) {
            try {
                gc.m = mat_from_json(nlohmann::json::parse(config.m_json));
                gc.g = vec_from_json(nlohmann::json::parse(config.g_json));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("invalid --m/--g JSON: ") + e.what());
            }
        } else {
            // Seeded draw, re-rolled until omega is invertible.
            RationalSampler sampler(config.seed);
            for (int tries = 0; tries < 64; ++tries) {
                gc.m = Mat(gc.n, gc.n);
                for (std::size_t i = 0; i < gc.n; ++i)
                    for (std::size_t j = 0; j < gc.n; ++j) gc.m.at(i, j) = sampler.small();
                gc.g = Vec(gc.n);
                for (auto& x : gc.g) x = sampler.coordinate();
                const GlnBuild candidate = build_gln(gc);
                if (candidate.omega.determinant() != 0) return candidate;
            }
            throw PreconditionError("could not find an invertible omega for n=" +
                                    std::to_string(gc.n));
        }
        return build_gln(gc);
    }();
    if (build.omega.determinant() == 0)
        throw PreconditionError("configuration rejected: omega is degenerate");
    const std::string body = symplectic_to_json(build.lie, build.omega).dump(2) + "\n";
    if (config.output_path.empty())
        out << body;
    else
        write_text_file(config.output_path, body);
    return kExitPass;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "check-lsa") return run_check_lsa(config, out);
        if (config.command == "check-lie") return run_check_lie(config, out);
        if (config.command == "derive-lsa") return run_derive_lsa(config, out);
        if (config.command == "hamiltonians") return run_hamiltonians(config, out);
        if (config.command == "certify") return run_certify(config, out);
        if (config.command == "independence") return run_independence(config, out);
        if (config.command == "example") return run_example(config, out);
        throw ParseError("unknown command: " + config.command);
    } catch (const ParseError& e) {
        nlohmann::json j;
        j["error"] = {{"type", "parse"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return kExitParseError;
    } catch (const PreconditionError& e) {
        nlohmann::json j;
        j["error"] = {{"type", "precondition"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return kExitPreconditionError;
    }
}

}  // namespace pnlie
