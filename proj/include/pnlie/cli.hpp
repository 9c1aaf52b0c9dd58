#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pnlie/random_points.hpp"
#include "pnlie/rational.hpp"

namespace pnlie {

/// Parsed command line. Exit-code contract of run():
///   0 all requested checks pass, 1 check failure,
///   2 parse error, 3 precondition/construction failure.
struct CommandConfig {
    std::string command;  ///< check-lsa, check-lie, derive-lsa, hamiltonians,
                          ///< certify, independence, example
    std::string input_path;
    std::string output_path;
    unsigned max_n = 4;
    std::uint64_t seed = kDefaultSeed;
    unsigned attempts = 10;
    std::string format = "json";  ///< json | text

    // example generator selection and parameters
    std::string generator = "gln-semidirect";
    bool paper_n2 = false;
    Rational a = Rational(1);
    Rational l = Rational(0);
    std::size_t gln_n = 2;
    std::string m_json;  ///< optional dense matrix, JSON text
    std::string g_json;  ///< optional vector, JSON text
};

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pnlie
