#pragma once

// Independent reference computations for the test suite. Everything here goes
// through a different route than the code under test: closed recurrences,
// brute-force sums, quadrature, or finite differences.

#include <gmpxx.h>

#include <vector>

#include "adilab/complexval.hpp"
#include "adilab/prec.hpp"
#include "adilab/rational.hpp"

namespace oracles {

using adi::Complex;
using adi::PrecisionConfig;
using adi::Rational;
using adi::Real;

// Pascal's triangle, additive only.
mpz_class pascal_binom(unsigned n, unsigned k);

// C(a, j) by the one-step recurrence C(a,j) = C(a,j-1)(a-j+1)/j.
Rational gen_binom_recurrence(long a, long j);

// Akiyama-Tanigawa transform; independent of the production recurrence.
Rational bernoulli_at(unsigned m);

// Bell triangle.
mpz_class bell_number(unsigned n);

// Partition counting DP.
mpz_class partition_count(unsigned n);

// Euler-Mascheroni via harmonic sum minus log with two correction terms.
Real euler_gamma_sum(long n_terms, mpfr_prec_t prec);

// pi^2/6 via sum of 1/j^2 with integral tail corrections.
Real basel_sum(long n_terms, mpfr_prec_t prec);

// zeta(s) for real s > 1 by direct summation with Euler-Maclaurin tail corrections.
Real zeta_real_sum(long s, long n_terms, mpfr_prec_t prec);

// (-1)^j zeta^(j)(s) for real s > 1: sum of (ln n)^j n^-s plus tail quadrature.
Real dirichlet_deriv_sum(long s, int j, long n_terms, mpfr_prec_t prec);

// Gamma^(n)(z)/Gamma(z) through a trapezoidal Cauchy integral over exp(log Gamma),
// radius 1/2, node count K.
Complex contour_gamma_ratio(const Complex& z, int n, int nodes, const PrecisionConfig& ctx);

// Second-order central difference (f(z+h) - 2 f(z) + f(z-h)) / h^2 along the real axis.
Complex central_second_diff(const std::vector<Complex>& fm_f0_fp, const Real& h);

}  // namespace oracles
