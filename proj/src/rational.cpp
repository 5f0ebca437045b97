#include "adilab/rational.hpp"

#include <stdexcept>

#include "adilab/errors.hpp"

namespace adi {

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division", "division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // Decimal form: shift the point out and put the power of ten below.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+" ||
            digits.find('.') != std::string::npos)
            throw SchemaError("malformed rational literal: \"" + s + "\"");
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw SchemaError("malformed rational literal: \"" + s + "\"");
        mpz_class ten = 10, den;
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), frac);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw SchemaError("malformed rational literal: \"" + s + "\"");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::decimal_str() const {
    mpz_class n = num(), d = den();
    if (d == 1) return n.get_str();
    // Strip factors of 2 and 5; anything left means no finite decimal expansion.
    mpz_class rest = d;
    unsigned long two = 0, five = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
        rest /= 2;
        ++two;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++five;
    }
    if (rest != 1) return str();
    unsigned long e = two > five ? two : five;
    mpz_class ten = 10, pow;
    mpz_pow_ui(pow.get_mpz_t(), ten.get_mpz_t(), e);
    mpz_class scaled = n * (pow / d);
    std::string sign = scaled < 0 ? "-" : "";
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (digits.size() <= e) digits.insert(0, e + 1 - digits.size(), '0');
    std::string out = sign + digits.substr(0, digits.size() - e) + "." + digits.substr(digits.size() - e);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

Real to_real(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.raw().get_mpq_t(), RND);
    return r;
}

Real to_real(const mpz_class& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.raw(), z.get_mpz_t(), RND);
    return r;
}

mpz_class binom(unsigned long n, long k) {
    if (k < 0 || (unsigned long)k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, (unsigned long)k);
    return r;
}

Rational gen_binom(long a, long j) {
    if (j < 0) return Rational(0);
    mpz_class num = 1;
    for (long i = 0; i < j; ++i) num *= mpz_class(a - i);
    mpq_class q(num, factorial((unsigned long)j));
    q.canonicalize();
    return Rational(q);
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace adi
