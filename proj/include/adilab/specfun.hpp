#pragma once

#include <vector>

#include "adilab/complexval.hpp"
#include "adilab/diffpoly.hpp"
#include "adilab/prec.hpp"

namespace adi {

// A point tagged with membership in the sector |arg z| <= 5 pi / 6.
struct EvalPoint {
    Complex z;
    bool in_sector = false;
};

EvalPoint make_eval_point(const Complex& z, const PrecisionConfig& ctx);

// Principal log Gamma (the analytic continuation along the shifted Stirling series,
// not log of Gamma's principal value). Rejects points within 1e-6 of a pole.
Complex log_gamma(const EvalPoint& pt, const PrecisionConfig& ctx);

// psi(z) and its first k derivatives, psi = (log Gamma)'.
FunctionJet digamma_jet(const EvalPoint& pt, int k, const PrecisionConfig& ctx);

// zeta(s) away from s = 1 (rejects |s - 1| < 1e-6).
Complex zeta_eval(const Complex& s, const PrecisionConfig& ctx);

// zeta and derivatives up to order m via a Cauchy integral on a circle of radius 1/4;
// requires |s - 1| > 1/4 + 1e-6 so the contour stays clear of the pole.
FunctionJet zeta_jet(const Complex& s, int m, const PrecisionConfig& ctx);

// Gamma^(n)(z)/Gamma(z) for each requested n, sharing one psi jet.
std::vector<Complex> gamma_ratio_eval(const EvalPoint& pt, const std::vector<int>& orders,
                                      const PrecisionConfig& ctx);

// Residual of zeta(1-s) = 2^(1-s) pi^(-s) cos(pi s / 2) Gamma(s) zeta(s), relative scale.
Real reflection_residual(const Complex& s, const PrecisionConfig& ctx);

}  // namespace adi
