#pragma once

#include <string>
#include <utility>

#include "adilab/rational.hpp"
#include "adilab/real.hpp"

namespace adi {

// Complex value over Real. Both parts are kept at the same precision.
class Complex {
public:
    explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {
        mpfr_set_zero(re_.raw(), 1);
        mpfr_set_zero(im_.raw(), 1);
    }
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        mpfr_prec_t p = std::max(re_.prec(), im_.prec());
        if (re_.prec() != p) re_ = re_.round_to(p);
        if (im_.prec() != p) im_ = im_.round_to(p);
    }
    explicit Complex(Real re) : Complex(std::move(re), Real::of(0L, 2)) {}

    // double parts are exact for the small literals this is used with
    static Complex of(double re, double im, mpfr_prec_t prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    Complex round_to(mpfr_prec_t prec) const {
        return Complex(re_.round_to(prec), im_.round_to(prec));
    }

    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        *this = *this * o;
        return *this;
    }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Complex operator*(const Complex& a, const Real& s) {
        return Complex(a.re_ * s, a.im_ * s);
    }
    friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
    friend Complex operator/(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Real& s) {
        return Complex(a.re_ / s, a.im_ / s);
    }
    friend Complex operator+(const Complex& a, long b) { return Complex(a.re_ + b, a.im_); }
    friend Complex operator-(const Complex& a, long b) { return Complex(a.re_ - b, a.im_); }
    friend Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }
    friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }

    // Exact bitwise equality of both parts.
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Real re_, im_;
};

inline Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
inline Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
inline Real norm2(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
Real arg(const Complex& z);

Complex inv(const Complex& z);
// Principal branch, Im in (-pi, pi].
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex cos(const Complex& z);
Complex sin(const Complex& z);
Complex pow_si(const Complex& z, long e);
// base^s for base > 0.
Complex rpow(const Real& base, const Complex& s);

std::string to_string(const Complex& z, long digits = 0);
// Accepts "a", "bi", "a+bi", "a-bi" with decimal parts.
Complex parse_complex(const std::string& s, mpfr_prec_t prec);

}  // namespace adi
