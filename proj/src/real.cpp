#include "adilab/real.hpp"

#include <cmath>
#include <cstring>

namespace adi {

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
    if (s.empty()) throw SchemaError("empty numeric literal");
    Real r(prec);
    const char* c = s.c_str();
    char* end = nullptr;
    mpfr_strtofr(r.v_, c, &end, 10, RND);
    if (end == c || *end != '\0')
        throw SchemaError("malformed numeric literal: \"" + s + "\"");
    return r;
}

std::string to_string(const Real& x, long digits) {
    if (x.is_nan()) return "nan";
    if (!x.is_finite()) return mpfr_sgn(x.raw()) > 0 ? "inf" : "-inf";
    if (x.is_zero()) return mpfr_signbit(x.raw()) ? "-0" : "0";
    if (digits <= 0) digits = (long)std::ceil(x.prec() * 0.30103) + 2;

    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, (size_t)digits, x.raw(), RND);
    std::string m(s);
    mpfr_free_str(s);

    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // mpfr_get_str yields mantissa m with value 0.m * 10^e; render as d.ddd e(e-1).
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string((long)e - 1);
    return out;
}

}  // namespace adi
