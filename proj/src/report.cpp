#include "pnlie/report.hpp"

#include <sstream>
#include <utility>

namespace pnlie {

void Report::add(std::string name, bool pass, Rational defect, std::string detail) {
    checks.push_back(CheckEntry{std::move(name), pass, std::move(defect), std::move(detail)});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        e["defect"] = rational_str(c.defect);
        e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    j["hamiltonians"] = nlohmann::json::array();
    for (const auto& h : hamiltonians) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [exps, coeff] : h.terms()) {
            nlohmann::json t;
            t["coeff"] = rational_str(coeff);
            t["exps"] = exps;
            terms.push_back(t);
        }
        j["hamiltonians"].push_back(terms);
    }
    j["witness_points"] = nlohmann::json::array();
    for (const auto& w : witness_points) {
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& x : w) pt.push_back(rational_str(x));
        j["witness_points"].push_back(pt);
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  defect=" << rational_str(c.defect);
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    for (std::size_t i = 0; i < hamiltonians.size(); ++i)
        os << "H" << (i + 1) << " = " << hamiltonians[i].str() << "\n";
    for (const auto& w : witness_points) {
        os << "witness = (";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ", ";
            os << rational_str(w[i]);
        }
        os << ")\n";
    }
    return os.str();
}

}  // namespace pnlie
