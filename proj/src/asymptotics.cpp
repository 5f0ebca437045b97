#include "adilab/asymptotics.hpp"

#include <algorithm>

#include "adilab/diffpoly.hpp"
#include "adilab/errors.hpp"

namespace adi {

void AsymParams::validate() const {
    if (ell < 2 || n < 1) throw regime_error_small_params();
    if (series_terms < 1)
        throw DomainError("series terms", "series truncation must be positive");
}

namespace {

// |v| must exceed 2^(-bits/2); below that the quotient forms lose all meaning.
bool abs_ok(const Real& v, long bits) { return abs(v) > Real::pow2(-bits / 2, 64); }

void require_nonsmall(const Real& v, long bits, const char* guard, const char* msg) {
    if (!abs_ok(v, bits)) throw DomainError(guard, msg);
}

Complex epsilon_from_jet(const FunctionJet& jet, int n, long bits,
                         const PrecisionConfig& ctx) {
    const Complex& f = jet.base;
    const Complex& fp = jet.at(1);
    require_nonsmall(abs(f), bits, "psi near zero", "psi(z) too close to zero for epsilon");
    require_nonsmall(abs(fp), bits, "psi' near zero", "psi'(z) too close to zero for epsilon");
    Complex ratio = eval_diffpoly(gamma_ratio_poly(n), jet, ctx);
    Complex fn = pow_si(f, n);
    Complex cn(ctx.working());
    if (n >= 2) cn = Complex(to_real(extract_cn(n), ctx.working()));
    return (ratio / fn - 1) * f * f / fp - cn;
}

Complex g_direct_from_jet(const FunctionJet& jet, const AsymParams& prm, long bits,
                          const PrecisionConfig& ctx) {
    const Complex& f = jet.base;
    const Complex& fp = jet.at(1);
    require_nonsmall(abs(fp), bits, "wronskian",
                     "Gamma Gamma'' - (Gamma')^2 too close to zero relative to Gamma^2");
    Complex rn = eval_diffpoly(gamma_ratio_poly(prm.n), jet, ctx);
    require_nonsmall(abs(rn), bits, "ratio near zero",
                     "Gamma^(n)/Gamma too close to zero for the direct form");
    Complex rln = eval_diffpoly(gamma_ratio_poly(prm.ell * prm.n), jet, ctx);
    Complex quot = rln / pow_si(rn, prm.ell);
    return (quot - 1) * f * f / fp;
}

Complex g_series_from_jet(const FunctionJet& jet, const AsymParams& prm, int terms,
                          long bits, const PrecisionConfig& ctx) {
    const mpfr_prec_t wp = ctx.working();
    const Complex& f = jet.base;
    const Complex& fp = jet.at(1);
    Complex eps_n = epsilon_from_jet(jet, prm.n, bits, ctx);
    Complex eps_ln = epsilon_from_jet(jet, prm.ell * prm.n, bits, ctx);
    Complex cn(wp), cln(wp);
    if (prm.n >= 2) cn = Complex(to_real(extract_cn(prm.n), wp));
    cln = Complex(to_real(extract_cn(prm.ell * prm.n), wp));
    Complex a = cln + eps_ln;
    Complex b = cn + eps_n;
    Complex x = b * fp / (f * f);
    if (!(abs(x) < Real::of(1L, 64)))
        throw DomainError("series ratio",
                          "|(c_n + eps_n) f'/f^2| >= 1: binomial rearrangement diverges");
    Complex acc(wp);
    Complex xp(wp);
    xp = xp + 1;  // x^j
    for (int j = 0; j < terms; ++j) {
        Rational c1 = gen_binom(-(long)prm.ell, j);
        Rational c2 = gen_binom(-(long)prm.ell, j + 1);
        Complex coef = a * to_real(c1, wp) + b * to_real(c2, wp);
        acc += coef * xp;
        xp = xp * x;
    }
    return acc;
}

Real rel_residual(const Complex& lhs, const Complex& rhs) {
    Real scale = max(abs(lhs), abs(rhs));
    if (scale.is_zero()) return Real::of(0L, 64);
    return abs(lhs - rhs) / scale;
}

}  // namespace

Complex epsilon_eval(const EvalPoint& pt, int n, const PrecisionConfig& ctx) {
    ctx.validate();
    if (n < 1) throw regime_error_small_params();
    FunctionJet jet = digamma_jet(pt, std::max(n - 1, 1), ctx);
    return epsilon_from_jet(jet, n, ctx.bits, ctx);
}

Complex g_direct(const EvalPoint& pt, const AsymParams& prm, const PrecisionConfig& ctx) {
    ctx.validate();
    prm.validate();
    FunctionJet jet = digamma_jet(pt, prm.ell * prm.n - 1, ctx);
    return g_direct_from_jet(jet, prm, ctx.bits, ctx);
}

Complex g_series(const EvalPoint& pt, const AsymParams& prm, const PrecisionConfig& ctx,
                 int terms) {
    ctx.validate();
    prm.validate();
    if (terms < 0) terms = prm.series_terms;
    FunctionJet jet = digamma_jet(pt, prm.ell * prm.n - 1, ctx);
    return g_series_from_jet(jet, prm, terms, ctx.bits, ctx);
}

RatioBundle ratio_bundle(const EvalPoint& pt, const AsymParams& prm,
                         const PrecisionConfig& ctx) {
    ctx.validate();
    prm.validate();
    const mpfr_prec_t wp = ctx.working();
    FunctionJet jet = digamma_jet(pt, prm.ell * prm.n - 1, ctx);
    RatioBundle out;
    out.z = pt.z.round_to(wp);
    out.f_val = eval_diffpoly(gamma_ratio_poly(prm.n), jet, ctx);
    out.lf_val = eval_diffpoly(gamma_ratio_poly(prm.ell * prm.n), jet, ctx);
    out.g_dir = g_direct_from_jet(jet, prm, ctx.bits, ctx);
    out.g_ser = g_series_from_jet(jet, prm, prm.series_terms, ctx.bits, ctx);

    const Complex& f = jet.base;
    const Complex& fp = jet.at(1);
    Complex fp_over_f2 = fp / (f * f);
    out.h = fp_over_f2 * out.g_dir;

    std::vector<int> want{1, 2, prm.n, prm.ell * prm.n};
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    for (int k : want) out.eps.emplace(k, epsilon_from_jet(jet, k, ctx.bits, ctx));

    Complex fl = pow_si(out.f_val, prm.ell);
    Complex one(wp);
    one = one + 1;
    out.residual_direct = rel_residual(out.lf_val, fl * (one + out.h));
    out.residual_series = rel_residual(out.lf_val, fl * (one + fp_over_f2 * out.g_ser));
    return out;
}

std::pair<Real, Real> sector_normalization_dev(const EvalPoint& pt,
                                               const PrecisionConfig& ctx) {
    ctx.validate();
    if (!pt.in_sector)
        throw DomainError("sector", "normalization limits hold only inside |arg z| <= 5 pi/6");
    const mpfr_prec_t wp = ctx.working();
    FunctionJet jet = digamma_jet(pt, 2, ctx);
    const Complex& f = jet.base;
    const Complex& fp = jet.at(1);
    const Complex& fpp = jet.at(2);
    Complex lg = log(pt.z.round_to(wp));
    Complex one(wp);
    one = one + 1;
    Real dev1 = abs(fp / (f * f) * pt.z.round_to(wp) * lg * lg - one);
    Real dev2 = abs(fpp / (f * fp) * pt.z.round_to(wp) * lg + one);
    return {dev1, dev2};
}

Complex epsilon_scaled(const EvalPoint& pt, int n, const PrecisionConfig& ctx) {
    ctx.validate();
    const mpfr_prec_t wp = ctx.working();
    Complex e = epsilon_eval(pt, n, ctx);
    Complex z = pt.z.round_to(wp);
    return e * z * log(z);
}

Real epsilon_asym_check(const EvalPoint& pt, int n, const PrecisionConfig& ctx) {
    ctx.validate();
    if (n < 3)
        throw DomainError("ratio index",
                          "epsilon_1 and epsilon_2 vanish identically; the law starts at n = 3");
    const mpfr_prec_t wp = ctx.working();
    Complex scaled = epsilon_scaled(pt, n, ctx);
    Complex k(to_real(epsilon_constant_per_order(n), wp));
    return abs(scaled / k - Complex(Real::of(1L, wp)));
}

Rational epsilon_constant_per_order(int n) {
    return Rational(-(long)n * (n - 1) * (n - 2), 6);
}

Rational epsilon_constant_cumulative(int n) {
    return Rational(-(long)n * ((long)n * n - 1), 6);
}

}  // namespace adi
