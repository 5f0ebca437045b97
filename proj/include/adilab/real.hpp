#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "adilab/errors.hpp"

namespace adi {

inline constexpr mpfr_rnd_t RND = MPFR_RNDN;

// Arbitrary-precision real. Binary operations round at the wider operand's precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    Real(const Real& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, RND);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    ~Real() { mpfr_clear(v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, RND);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, RND);
        return r;
    }
    static Real of(double x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, RND);
        return r;
    }
    // 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, 1, RND);
        mpfr_mul_2si(r.v_, r.v_, e, RND);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, RND);
        return r;
    }
    static Real pos_inf(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_inf(r.v_, 1);
        return r;
    }
    // Parses a decimal string; rejects trailing garbage.
    static Real parse(const std::string& s, mpfr_prec_t prec);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, RND); }
    long to_long() const { return mpfr_get_si(v_, RND); }

    Real round_to(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, RND);
        return r;
    }

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, RND);
        return *this;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, RND);
        return r;
    }

    friend Real operator+(const Real& a, long b) { return bin_si(mpfr_add_si, a, b); }
    friend Real operator-(const Real& a, long b) { return bin_si(mpfr_sub_si, a, b); }
    friend Real operator*(const Real& a, long b) { return bin_si(mpfr_mul_si, a, b); }
    friend Real operator/(const Real& a, long b) { return bin_si(mpfr_div_si, a, b); }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, RND);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, RND);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) {
        return mpfr_greaterequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using BinSiFn = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);

    static Real bin(BinFn f, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, RND);
        return r;
    }
    static Real bin_si(BinSiFn f, const Real& a, long b) {
        Real r(a.prec());
        f(r.v_, a.v_, b, RND);
        return r;
    }

    mpfr_t v_;
};

inline Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), RND);
    return r;
}
inline Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), RND);
    return r;
}
inline Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), RND);
    return r;
}
inline Real log(const Real& a) {
    if (!(a > 0)) throw DomainError("log", "real log requires a positive argument");
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), RND);
    return r;
}
inline Real sinh(const Real& a) {
    Real r(a.prec());
    mpfr_sinh(r.raw(), a.raw(), RND);
    return r;
}
inline Real cosh(const Real& a) {
    Real r(a.prec());
    mpfr_cosh(r.raw(), a.raw(), RND);
    return r;
}
inline void sin_cos(Real& s, Real& c, const Real& a) {
    Real rs(a.prec()), rc(a.prec());
    mpfr_sin_cos(rs.raw(), rc.raw(), a.raw(), RND);
    s = std::move(rs);
    c = std::move(rc);
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), RND);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.prec(), y.prec()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), RND);
    return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, RND);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

// Round-trippable scientific notation; digits = 0 picks enough for the value's precision.
std::string to_string(const Real& x, long digits = 0);

}  // namespace adi
