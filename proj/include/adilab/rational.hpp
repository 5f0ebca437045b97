#pragma once

#include <gmpxx.h>

#include <string>

#include "adilab/real.hpp"

namespace adi {

// Exact rational, always canonicalized.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) { normalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { normalize(); }

    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    Rational& operator+=(const Rational& b) {
        v_ += b.v_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        v_ -= b.v_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        v_ *= b.v_;
        normalize();
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" or "p/q".
    std::string str() const;
    // Exact decimal when den = 2^a 5^b, else falls back to str().
    std::string decimal_str() const;

private:
    void normalize() { v_.canonicalize(); }
    mpq_class v_;
};

Real to_real(const Rational& q, mpfr_prec_t prec);
Real to_real(const mpz_class& z, mpfr_prec_t prec);

// C(n, k) for n >= 0; zero when k > n or k < 0.
mpz_class binom(unsigned long n, long k);
// Generalized C(a, j) = a(a-1)...(a-j+1)/j! for any integer a, j >= 0.
Rational gen_binom(long a, long j);
mpz_class factorial(unsigned long n);

}  // namespace adi
