#include "adilab/complexval.hpp"

#include <cctype>

#include "adilab/errors.hpp"

namespace adi {

Complex operator/(const Complex& a, const Complex& b) {
    Real den = norm2(b);
    if (den.is_zero()) throw DomainError("complex division", "division by complex zero");
    Real re = (a.re_ * b.re_ + a.im_ * b.im_) / den;
    Real im = (a.im_ * b.re_ - a.re_ * b.im_) / den;
    return Complex(std::move(re), std::move(im));
}

Real arg(const Complex& z) {
    if (z.is_zero()) throw DomainError("arg", "argument of zero is undefined");
    return atan2(z.im(), z.re());
}

Complex inv(const Complex& z) {
    Real den = norm2(z);
    if (den.is_zero()) throw DomainError("complex division", "inverse of complex zero");
    return Complex(z.re() / den, -(z.im() / den));
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw DomainError("log", "log of complex zero");
    Real m(z.prec());
    mpfr_hypot(m.raw(), z.re().raw(), z.im().raw(), RND);
    mpfr_log(m.raw(), m.raw(), RND);
    return Complex(std::move(m), atan2(z.im(), z.re()));
}

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.im());
    return Complex(m * c, m * s);
}

Complex cos(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.re());
    return Complex(c * cosh(z.im()), -(s * sinh(z.im())));
}

Complex sin(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.re());
    return Complex(s * cosh(z.im()), c * sinh(z.im()));
}

Complex pow_si(const Complex& z, long e) {
    if (e == 0) {
        Complex r(z.prec());
        return r + 1;
    }
    unsigned long n = e < 0 ? (unsigned long)(-(e + 1)) + 1 : (unsigned long)e;
    Complex acc(z.prec());
    acc = acc + 1;
    Complex base = z;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return e < 0 ? inv(acc) : acc;
}

Complex rpow(const Real& base, const Complex& s) {
    if (!(base > 0)) throw DomainError("rpow", "rpow requires a positive real base");
    Real lb = log(base);
    return exp(Complex(s.re() * lb, s.im() * lb));
}

std::string to_string(const Complex& z, long digits) {
    std::string re = to_string(z.re(), digits);
    std::string im = to_string(z.im(), digits);
    if (!im.empty() && im[0] == '-') return re + " - " + im.substr(1) + "i";
    return re + " + " + im + "i";
}

namespace {

// Splits "a+bi" into parts; the sign separator is a +/- not preceded by e/E.
bool split_sum(const std::string& s, std::string& lhs, std::string& rhs) {
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            lhs = s.substr(0, i);
            rhs = s.substr(i);
            return true;
        }
    }
    return false;
}

Real parse_imag_part(const std::string& t, mpfr_prec_t prec) {
    std::string body = t.substr(0, t.size() - 1);
    if (body.empty() || body == "+") return Real::of(1L, prec);
    if (body == "-") return Real::of(-1L, prec);
    return Real::parse(body, prec);
}

}  // namespace

Complex parse_complex(const std::string& raw, mpfr_prec_t prec) {
    std::string s;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw SchemaError("empty complex literal");

    if (s.back() == 'i' || s.back() == 'I') {
        std::string lhs, rhs;
        if (split_sum(s, lhs, rhs))
            return Complex(Real::parse(lhs, prec), parse_imag_part(rhs, prec));
        return Complex(Real::of(0L, prec), parse_imag_part(s, prec));
    }
    return Complex(Real::parse(s, prec), Real::of(0L, prec));
}

}  // namespace adi
