#include "pnlie/rational.hpp"

#include <cctype>

#include "pnlie/errors.hpp"

namespace pnlie {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    const std::size_t slash = s.find('/');
    const std::string p = slash == std::string::npos ? s : s.substr(0, slash);
    std::size_t p_digits = 0;
    if (!p.empty() && p[0] == '-') p_digits = 1;
    if (!all_digits(p, p_digits, p.size()))
        throw ParseError("bad rational literal: '" + s + "'");
    Integer num(p);
    Integer den(1);
    if (slash != std::string::npos) {
        const std::string q = s.substr(slash + 1);
        if (!all_digits(q, 0, q.size()))
            throw ParseError("bad rational literal: '" + s + "'");
        den = Integer(q);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    return make_rational(num, den);
}

std::string rational_str(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec r(n, Rational(0));
    r.at(i) = 1;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Rational vec_max_abs(const Vec& a) {
    Rational m(0);
    for (const auto& x : a) {
        Rational ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

}  // namespace pnlie
