#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pnlie/cli.hpp"
#include "pnlie/errors.hpp"

namespace {

void add_common(CLI::App* cmd, pnlie::CommandConfig& config) {
    cmd->add_option("--input", config.input_path, "input file path");
    cmd->add_option("--output", config.output_path, "output file path (default stdout)");
    cmd->add_option("--max-n,--maxN", config.max_n, "number of Hamiltonians H_1..H_maxN");
    cmd->add_option("--seed", config.seed, "seed for randomized witnesses");
    cmd->add_option("--format", config.format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

void add_paper_flags(CLI::App* cmd, pnlie::CommandConfig& config, std::string& a_str,
                     std::string& l_str) {
    cmd->add_flag("--paper-n2", config.paper_n2,
                  "use the built-in 6-dimensional gl(2)xR^2 structure");
    cmd->add_option("--a", a_str, "parameter a as p/q (default 1)");
    cmd->add_option("--l", l_str, "parameter l as p/q (default 0)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "pnlie: exact Poisson-Nijenhuis structures on symplectic Lie algebras.\n"
        "Builds left-symmetric products, trace-polynomial Hamiltonians, and\n"
        "certifies recursion and involution as exact polynomial identities."};
    app.require_subcommand(1);

    pnlie::CommandConfig config;
    std::string a_str, l_str;

    auto* check_lsa = app.add_subcommand("check-lsa", "verify left-symmetry of an algebra file");
    add_common(check_lsa, config);
    auto* check_lie = app.add_subcommand("check-lie", "verify the Jacobi identity of a Lie file");
    add_common(check_lie, config);
    auto* derive = app.add_subcommand(
        "derive-lsa", "construct the left-symmetric product of a symplectic Lie algebra");
    add_common(derive, config);
    auto* hams = app.add_subcommand("hamiltonians", "emit the trace polynomials H_1..H_maxN");
    add_common(hams, config);
    auto* certify = app.add_subcommand(
        "certify", "full structure certificate: cocycle, torsion, closedness, involution");
    add_common(certify, config);
    add_paper_flags(certify, config, a_str, l_str);
    auto* indep =
        app.add_subcommand("independence", "Jacobian rank of the Hamiltonians at seeded points");
    add_common(indep, config);
    indep->add_option("--attempts", config.attempts, "number of sample points");
    auto* example = app.add_subcommand("example", "generate input files");
    example->add_option("generator", config.generator, "generator name (gln-semidirect)");
    add_common(example, config);
    add_paper_flags(example, config, a_str, l_str);
    example->add_option("--n", config.gln_n, "matrix size n (algebra dimension n^2+n)");
    example->add_option("--m", config.m_json, "matrix M as JSON, e.g. [[\"0\",\"1\"],[\"0\",\"0\"]]");
    example->add_option("--g", config.g_json, "covector g as JSON, e.g. [\"1\",\"0\"]");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!a_str.empty()) config.a = pnlie::parse_rational(a_str);
        if (!l_str.empty()) config.l = pnlie::parse_rational(l_str);
    } catch (const pnlie::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (auto* cmd : {check_lsa, check_lie, derive, hams, certify, indep, example})
        if (cmd->parsed()) config.command = cmd->get_name();

    return pnlie::run(config, std::cout, std::cerr);
}
