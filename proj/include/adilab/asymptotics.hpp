#pragma once

#include <map>

#include "adilab/complexval.hpp"
#include "adilab/prec.hpp"
#include "adilab/specfun.hpp"

namespace adi {

// The two structural integers of a run: requires ell >= 2 and n >= 1.
struct AsymParams {
    int ell = 2;
    int n = 1;
    int series_terms = 64;

    void validate() const;
};

// c_n f' / f^2 is the leading correction in Gamma^(n)/Gamma = f^n (1 + c_n f'/f^2 + ...);
// epsilon_n is the measured remainder beyond it.
Complex epsilon_eval(const EvalPoint& pt, int n, const PrecisionConfig& ctx);

// G = [R_ln / R_n^ell - 1] f^2 / f', evaluated directly from one psi jet.
Complex g_direct(const EvalPoint& pt, const AsymParams& prm, const PrecisionConfig& ctx);

// Same quantity through the binomial rearrangement in powers of x = (c_n + eps_n) f'/f^2;
// requires |x| < 1. terms = -1 uses prm.series_terms.
Complex g_series(const EvalPoint& pt, const AsymParams& prm, const PrecisionConfig& ctx,
                 int terms = -1);

struct RatioBundle {
    Complex z;
    Complex f_val;       // R_n at the jet: Gamma^(n)/Gamma
    Complex lf_val;      // R_ln: Gamma^(ell n)/Gamma
    Complex g_dir;
    Complex g_ser;
    Complex h;           // (f'/f^2) G, so that LF = F^ell (1 + H)
    std::map<int, Complex> eps;
    Real residual_direct;  // relative residual of LF = F^ell (1 + H) with the direct G
    Real residual_series;  // same with the series G; this one is a real consistency check

    RatioBundle() : residual_direct(64), residual_series(64) {}
};

RatioBundle ratio_bundle(const EvalPoint& pt, const AsymParams& prm,
                         const PrecisionConfig& ctx);

// Deviations of the two sector normalizations:
// |(f'/f^2) z log^2 z - 1| and |(f''/(f f')) z log z + 1|.
std::pair<Real, Real> sector_normalization_dev(const EvalPoint& pt,
                                               const PrecisionConfig& ctx);

// epsilon_n scaled by z log z; tends to a constant along rays in the sector.
Complex epsilon_scaled(const EvalPoint& pt, int n, const PrecisionConfig& ctx);

// Deviation of epsilon_n from K_n / (z log z) with the measured per-order constant
// K_n = -n(n-1)(n-2)/6; needs n >= 3 (epsilon_1 = epsilon_2 = 0 identically).
Real epsilon_asym_check(const EvalPoint& pt, int n, const PrecisionConfig& ctx);

// The two candidate laws for the scaled epsilon constants.
Rational epsilon_constant_per_order(int n);   // -n(n-1)(n-2)/6, matches measurement
Rational epsilon_constant_cumulative(int n);  // -n(n^2-1)/6, the recurrence-step total

}  // namespace adi
