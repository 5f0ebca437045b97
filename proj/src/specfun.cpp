#include "adilab/specfun.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "adilab/bernoulli.hpp"
#include "adilab/errors.hpp"

namespace adi {

namespace {

// ---- shared helpers ----------------------------------------------------

void check_gamma_pole(const Complex& z) {
    // Poles sit at 0, -1, -2, ...; measure the true distance in working precision
    // since a double round-off at large |Re z| could misplace the guard.
    if (!(z.re() < Real::of(0.5, 64))) return;
    Real r(z.prec());
    mpfr_round(r.raw(), z.re().raw());
    if (r > 0) return;
    Real d = hypot(z.re() - r, z.im());
    if (d < Real::of(1e-6, 64))
        throw DomainError("gamma pole", "within 1e-6 of a Gamma pole at a nonpositive integer");
}

// Smallest K >= 0 with |z + K| >= threshold, measured along the real direction.
long shift_count(const Complex& z, double threshold) {
    double re = z.re().to_double();
    double im = z.im().to_double();
    double a2 = threshold * threshold - im * im;
    if (a2 <= 0) return 0;
    double k = std::ceil(std::sqrt(a2) - re);
    return k > 0 ? (long)k : 0;
}

// |w| above which the Stirling-type tails reach 2^-(wp) relative:
// the smallest term is ~ e^(-2 pi |w|), so |w| ~ wp ln2 / (2 pi) plus margin.
double stirling_threshold(long wp) { return 0.1103 * (double)wp + 8.0; }

Real half_log_two_pi(mpfr_prec_t prec) {
    Real p = Real::pi(prec);
    return log(p * 2) / 2;
}

// ---- log Gamma ---------------------------------------------------------

Complex log_gamma_prec(const Complex& zin, mpfr_prec_t wp) {
    Complex z = zin.round_to(wp);
    check_gamma_pole(z);
    double thr = stirling_threshold(wp);
    long K = shift_count(z, thr);
    Complex w = z + K;

    Complex lw = log(w);
    Complex acc = (w - Complex(Real::of(0.5, wp))) * lw - w + Complex(half_log_two_pi(wp));
    Complex winv = inv(w);
    Complex winv2 = winv * winv;
    Complex wpow = winv;  // w^(1-2j) at j = 1
    Real target = (abs(acc) + 1) * Real::pow2(-(long)wp - 2, 64);
    Real prev = Real::pos_inf(64);
    for (long j = 1; j <= (long)wp; ++j) {
        Rational c = bernoulli_even((unsigned long)j) / Rational(2 * j * (2 * j - 1));
        Complex term = wpow * to_real(c, wp);
        acc += term;
        Real m = abs(term);
        if (m < target) {
            for (long i = 0; i < K; ++i) acc -= log(z + i);
            return acc;
        }
        if (m > prev) break;
        prev = m;
        wpow = wpow * winv2;
    }
    throw PrecisionError("Stirling series failed to reach target");
}

// ---- psi jets ----------------------------------------------------------

// psi and k derivatives at w, |w| already beyond the series threshold.
std::vector<Complex> psi_series(const Complex& w, int k, mpfr_prec_t wp) {
    std::vector<Complex> out;
    out.reserve((size_t)k + 1);
    Complex winv = inv(w);
    Complex winv2 = winv * winv;

    {
        // psi(w) = log w - 1/(2w) - sum_j B_2j / (2j) w^(-2j)
        Complex acc = log(w) - winv * Real::of(0.5, wp);
        Complex wpow = winv2;
        Real target = (abs(acc) + 1) * Real::pow2(-(long)wp - 2, 64);
        Real prev = Real::pos_inf(64);
        bool done = false;
        for (long j = 1; j <= (long)wp; ++j) {
            Rational c = bernoulli_even((unsigned long)j) / Rational(2 * j);
            Complex term = wpow * to_real(c, wp);
            acc -= term;
            Real m = abs(term);
            if (m < target) {
                done = true;
                break;
            }
            if (m > prev) break;
            prev = m;
            wpow = wpow * winv2;
        }
        if (!done) throw PrecisionError("psi series failed to reach target");
        out.push_back(acc);
    }

    Complex base_pow = winv;  // winv^t for the current t
    for (int t = 1; t <= k; ++t) {
        // psi^(t)(w) = (-1)^(t-1) [ (t-1)! w^-t + (t!/2) w^-(t+1)
        //                           + sum_j B_2j (2j+1)...(2j+t-1) w^(-2j-t) ]
        Real fac_t1 = to_real(factorial((unsigned long)t - 1), wp);
        Complex acc = base_pow * fac_t1;
        acc += base_pow * winv * (fac_t1 * Real::of((double)t / 2.0, wp));
        Complex wpow = base_pow * winv2;
        Real target = abs(acc) * Real::pow2(-(long)wp - 2, 64);
        Real prev = Real::pos_inf(64);
        bool done = false;
        for (long j = 1; j <= (long)wp; ++j) {
            mpz_class rising = 1;
            for (long i = 1; i < t; ++i) rising *= mpz_class(2 * j + i);
            Rational c = bernoulli_even((unsigned long)j) * Rational(rising);
            Complex term = wpow * to_real(c, wp);
            acc += term;
            Real m = abs(term);
            if (m < target) {
                done = true;
                break;
            }
            if (m > prev) break;
            prev = m;
            wpow = wpow * winv2;
        }
        if (!done) throw PrecisionError("psi derivative series failed to reach target");
        if (t % 2 == 0) acc = -acc;
        out.push_back(acc);
        base_pow = base_pow * winv;
    }
    return out;
}

// ---- zeta --------------------------------------------------------------

// ln k cache per working precision; deque rows keep element references stable.
class LnCache {
public:
    const std::deque<Real>& ensure(long n, mpfr_prec_t prec) {
        {
            std::shared_lock lk(mu_);
            auto it = tab_.find(prec);
            if (it != tab_.end() && (long)it->second.size() >= n) return it->second;
        }
        std::unique_lock lk(mu_);
        auto& row = tab_[prec];
        while ((long)row.size() < n) {
            long k = (long)row.size() + 1;
            row.push_back(log(Real::of(k, prec)));
        }
        return row;
    }

private:
    std::shared_mutex mu_;
    std::map<mpfr_prec_t, std::deque<Real>> tab_;
};

LnCache ln_cache;

// k^-s = exp(-sigma ln k) (cos(-tau ln k) + i sin(-tau ln k))
Complex pow_neg_s(const Real& lnk, const Real& sigma, const Real& tau, mpfr_prec_t wp) {
    Real a = -(sigma * lnk);
    Real m = exp(a);
    Real th = -(tau * lnk);
    Real s(wp), c(wp);
    sin_cos(s, c, th);
    return Complex(m * c, m * s);
}

Complex zeta_em_sum(const Complex& s, long N, mpfr_prec_t wp) {
    const std::deque<Real>& lnk = ln_cache.ensure(N, wp);
    const Real& sigma = s.re();
    const Real& tau = s.im();

    Complex acc(wp);
    for (long k = 2; k < N; ++k) acc += pow_neg_s(lnk[(size_t)k - 1], sigma, tau, wp);
    acc = acc + 1;

    Complex u = pow_neg_s(lnk[(size_t)N - 1], sigma, tau, wp);  // N^-s
    acc += u * Real::of(0.5, wp);
    acc += (u * Real::of(N, wp)) / (s - 1);  // N^(1-s)/(s-1)

    // Correction terms B_2j/(2j)! (s)_{2j-1} N^(-s-2j+1)
    Complex poch = s;
    Complex npow = u / Real::of(N, wp);  // N^(-s-1)
    Real n2inv = 1 / (Real::of(N, wp) * Real::of(N, wp));
    Real target = (abs(acc) + 1) * Real::pow2(-(long)wp - 2, 64);
    Real prev = Real::pos_inf(64);
    for (long j = 1; j <= (long)wp; ++j) {
        Rational c = Rational(bernoulli_even((unsigned long)j)) /
                     Rational(mpz_class(factorial((unsigned long)(2 * j))));
        Complex term = npow * poch * to_real(c, wp);
        acc += term;
        Real m = abs(term);
        if (m < target) return acc;
        if (m > prev) throw PrecisionError("Euler-Maclaurin tail diverging, N too small");
        prev = m;
        poch = poch * (s + (2 * j - 1)) * (s + 2 * j);
        npow = npow * n2inv;
    }
    throw PrecisionError("Euler-Maclaurin tail failed to reach target");
}

Complex zeta_prec(const Complex& sin_, mpfr_prec_t wp) {
    Complex s = sin_.round_to(wp);
    if (abs(s - 1) < Real::of(1e-6, 64))
        throw DomainError("zeta pole", "within 1e-6 of the pole at s = 1");
    double t = std::fabs(s.im().to_double());
    long N = (long)(0.4 * (double)wp + 0.72 * t) + 8;
    for (int attempt = 0; attempt < 3; ++attempt) {
        try {
            return zeta_em_sum(s, N, wp);
        } catch (const PrecisionError&) {
            N *= 2;
        }
    }
    return zeta_em_sum(s, N, wp);
}

long pow2_at_least(double x) {
    long k = 8;
    while ((double)k < x && k < (1L << 24)) k <<= 1;
    return k;
}

}  // namespace

// ---- public surface ----------------------------------------------------

EvalPoint make_eval_point(const Complex& z, const PrecisionConfig& ctx) {
    ctx.validate();
    const mpfr_prec_t wp = ctx.working();
    Complex zz = z.round_to(wp);
    bool inside = false;
    if (!zz.is_zero()) {
        // |arg z| <= 5 pi / 6, with a half-precision slack so boundary rays
        // constructed in floating point still count as inside.
        Real a = abs(arg(zz));
        Real lim = Real::pi(wp) * 5 / 6 + Real::pow2(-(long)ctx.bits / 2, 64);
        inside = a <= lim;
    }
    return EvalPoint{zz, inside};
}

Complex log_gamma(const EvalPoint& pt, const PrecisionConfig& ctx) {
    ctx.validate();
    return log_gamma_prec(pt.z, ctx.working());
}

FunctionJet digamma_jet(const EvalPoint& pt, int k, const PrecisionConfig& ctx) {
    ctx.validate();
    if (k < 0) throw DomainError("jet order", "derivative count must be nonnegative");
    const mpfr_prec_t wp = ctx.working();
    Complex z = pt.z.round_to(wp);
    check_gamma_pole(z);

    double thr = stirling_threshold(wp) + 0.5 * (double)k;
    long K = shift_count(z, thr);
    std::vector<Complex> vals = psi_series(z + K, k, wp);

    // psi^(t)(z) = psi^(t)(z+K) - sum_i d^t/dz^t 1/(z+i),  d^t (z+i)^-1 = (-1)^t t! (z+i)^-(t+1)
    for (long i = 0; i < K; ++i) {
        Complex ci = inv(z + i);
        Complex pw = ci;
        mpz_class fac = 1;
        for (int t = 0; t <= k; ++t) {
            if (t > 0) {
                fac *= t;
                pw = pw * ci;
            }
            Complex corr = pw * to_real(fac, wp);
            if (t % 2 == 0)
                vals[(size_t)t] -= corr;
            else
                vals[(size_t)t] += corr;
        }
    }

    FunctionJet jet;
    jet.base = vals[0];
    jet.derivs.assign(vals.begin() + 1, vals.end());
    return jet;
}

Complex zeta_eval(const Complex& s, const PrecisionConfig& ctx) {
    ctx.validate();
    return zeta_prec(s, ctx.working());
}

FunctionJet zeta_jet(const Complex& s, int m, const PrecisionConfig& ctx) {
    ctx.validate();
    if (m < 0) throw DomainError("jet order", "derivative count must be nonnegative");
    if (m == 0) {
        FunctionJet jet;
        jet.base = zeta_eval(s, ctx);
        return jet;
    }
    const mpfr_prec_t wp = ctx.working();
    Complex s0 = s.round_to(wp);
    Real d = abs(s0 - 1);
    if (d <= Real::of(0.25 + 1e-6, 64))
        throw DomainError("zeta pole", "contour of radius 1/4 would enclose or touch s = 1");

    // Node count balances the alias error (decays like (rho/R)^K against the nearest
    // singularity at distance d) against the target precision.
    double dd = d.to_double();
    double R = std::min(2.0, 0.75 * dd);
    if (R <= 0.2625) R = (dd + 0.25) / 2.0;
    double lnRatio = std::log(R / 0.25);
    double k1 = ((double)wp * 0.6931 + 60.0) / lnRatio;
    long K = pow2_at_least(std::max(0.4 * (double)wp, k1));

    Real rho = Real::of(0.25, wp);
    Real two_pi = Real::pi(wp) * 2;
    std::vector<Complex> sums((size_t)m + 1, Complex(wp));
    for (long k = 0; k < K; ++k) {
        Real th = two_pi * k / K;
        Real sn(wp), cs(wp);
        sin_cos(sn, cs, th);
        Complex omega(cs, sn);
        Complex node = s0 + omega * rho;
        Complex f = zeta_prec(node, wp);
        Complex cur = f;
        for (int j = 0; j <= m; ++j) {
            sums[(size_t)j] += cur;
            cur = cur * conj(omega);
        }
    }

    long log2K = 0;
    while ((1L << log2K) < K) ++log2K;
    FunctionJet jet;
    for (int j = 0; j <= m; ++j) {
        // j! / (K rho^j) = j! 4^j / K, both power-of-two factors exact.
        Complex v = sums[(size_t)j] * to_real(factorial((unsigned long)j), wp);
        Real scale = Real::pow2(2 * j - log2K, wp);
        v = v * scale;
        if (j == 0)
            jet.base = v;
        else
            jet.derivs.push_back(v);
    }
    return jet;
}

std::vector<Complex> gamma_ratio_eval(const EvalPoint& pt, const std::vector<int>& orders,
                                      const PrecisionConfig& ctx) {
    ctx.validate();
    int top = 0;
    for (int n : orders) {
        if (n < 0) throw DomainError("ratio index", "ratio order must be nonnegative");
        top = std::max(top, n);
    }
    FunctionJet jet;
    if (top >= 1) jet = digamma_jet(pt, top - 1, ctx);
    std::vector<Complex> out;
    out.reserve(orders.size());
    for (int n : orders) {
        if (n == 0) {
            Complex one(ctx.working());
            out.push_back(one + 1);
        } else {
            out.push_back(eval_diffpoly(gamma_ratio_poly(n), jet, ctx));
        }
    }
    return out;
}

Real reflection_residual(const Complex& s, const PrecisionConfig& ctx) {
    ctx.validate();
    const mpfr_prec_t wp = ctx.working();
    Complex s0 = s.round_to(wp);
    Complex lhs = zeta_eval(Complex(Real::of(1L, wp)) - s0, ctx);
    Real pi = Real::pi(wp);
    Complex one(wp);
    one = one + 1;
    Complex rhs = rpow(Real::of(2L, wp), one - s0) * rpow(pi, -s0) *
                  cos(s0 * (pi / 2)) * exp(log_gamma(make_eval_point(s0, ctx), ctx)) *
                  zeta_eval(s0, ctx);
    Real scale = max(abs(lhs), abs(rhs));
    if (scale.is_zero()) return Real::of(0L, wp);
    return abs(lhs - rhs) / scale;
}

}  // namespace adi
