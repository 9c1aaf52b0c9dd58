#include "pnlie/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pnlie/errors.hpp"

namespace pnlie {

namespace {
unsigned degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}
}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionError("variable index out of range");
    MPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void MPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (exps.size() != nvars_) throw DimensionError("exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial nvars mismatch");
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial nvars mismatch");
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial nvars mismatch");
    MPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator-() const { return scaled(Rational(-1)); }

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, c * coeff);
    return r;
}

MPoly MPoly::partial(std::size_t i) const {
    if (i >= nvars_) throw DimensionError("partial: variable index out of range");
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d(e);
        d[i] -= 1;
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

Rational rat_pow(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

Rational MPoly::eval(const Vec& p) const {
    if (p.size() != nvars_) throw DimensionError("eval: point length mismatch");
    Rational r(0);
    for (const auto& [e, c] : terms_) {
        Rational t(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= rat_pow(p[i], e[i]);
        r += t;
    }
    return r;
}

MPoly MPoly::subst_linear(const Mat& c) const {
    if (c.rows() != nvars_) throw DimensionError("subst_linear: row count must equal nvars");
    const std::size_t out_vars = c.cols();
    std::vector<MPoly> forms;
    forms.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        MPoly f(out_vars);
        for (std::size_t j = 0; j < out_vars; ++j) {
            Exponents e(out_vars, 0);
            e[j] = 1;
            f.add_term(e, c.at(i, j));
        }
        forms.push_back(std::move(f));
    }
    MPoly r(out_vars);
    for (const auto& [e, coeff] : terms_) {
        MPoly t = MPoly::constant(out_vars, coeff);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * forms[i];
        r = r + t;
    }
    return r;
}

std::size_t MPoly::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, degree_of(e));
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) != d) return false;
    return true;
}

Rational MPoly::max_abs_coeff() const {
    Rational m(0);
    for (const auto& [e, c] : terms_) {
        Rational ac = abs(c);
        if (ac > m) m = ac;
    }
    return m;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_str(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace pnlie
