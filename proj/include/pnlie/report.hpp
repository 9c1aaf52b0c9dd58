#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pnlie/mpoly.hpp"
#include "pnlie/rational.hpp"

namespace pnlie {

struct CheckEntry {
    std::string name;
    bool pass = false;
    Rational defect = Rational(0);
    std::string detail;
};

/// Machine-readable result of a check suite. Rationals are serialized as
/// strings and polynomials in canonical term order, so identical inputs
/// produce byte-identical reports.
struct Report {
    std::vector<CheckEntry> checks;
    std::vector<MPoly> hamiltonians;
    std::vector<Vec> witness_points;

    void add(std::string name, bool pass, Rational defect = Rational(0),
             std::string detail = "");
    bool all_pass() const;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace pnlie
