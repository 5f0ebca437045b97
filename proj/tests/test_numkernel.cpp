#include <doctest.h>

#include <random>

#include "adilab/bernoulli.hpp"
#include "adilab/complexval.hpp"
#include "adilab/prec.hpp"
#include "adilab/rational.hpp"
#include "adilab/real.hpp"
#include "oracles.hpp"

using namespace adi;

namespace {

const PrecisionConfig ctx = make_precision(256);

bool close(const Real& a, const Real& b, double tol) { return abs(a - b) < Real::of(tol, 64); }

bool close(const Complex& a, const Complex& b, double tol) {
    return abs(a - b) < Real::of(tol, 64);
}

}  // namespace

TEST_CASE("precision config validation") {
    CHECK_NOTHROW(make_precision(64, 0));
    CHECK_THROWS_AS(make_precision(32), DomainError);
    CHECK_THROWS_AS(make_precision(128, 200), DomainError);
    CHECK(make_precision(256, 32).working() == 288);
}

TEST_CASE("real arithmetic basics") {
    const mpfr_prec_t wp = ctx.working();
    Real a = Real::of(3L, wp);
    Real b = Real::of(2L, wp);
    CHECK((a + b).to_double() == doctest::Approx(5.0));
    CHECK((a / b).to_double() == doctest::Approx(1.5));
    CHECK((a * b) == Real::of(6L, wp));
    CHECK(abs(Real::of(-7L, wp)) == Real::of(7L, wp));
    CHECK(Real::pow2(-4, wp).to_double() == doctest::Approx(0.0625));
    CHECK(pow_si(b, 10) == Real::of(1024L, wp));
    CHECK(pow_si(b, -1).to_double() == doctest::Approx(0.5));

    // mixed-precision ops round at the wider operand
    Real lo = Real::of(1L, 64);
    Real hi = Real::of(1L, 512);
    CHECK((lo + hi).prec() == 512);
}

TEST_CASE("real parse and print round trip") {
    const mpfr_prec_t wp = ctx.working();
    Real x = Real::parse("1.25e3", wp);
    CHECK(x.to_double() == doctest::Approx(1250.0));
    Real y = Real::parse(to_string(x), wp);
    CHECK(x == y);
    CHECK_THROWS_AS(Real::parse("12garbage", wp), SchemaError);
    CHECK_THROWS_AS(Real::parse("", wp), SchemaError);
    CHECK(to_string(Real::of(0L, wp)) == "0");
}

TEST_CASE("complex log on pinned points") {
    const mpfr_prec_t wp = ctx.working();
    double tol = 1e-70;

    // log 1 = 0
    Complex one = Complex::of(1, 0, wp);
    CHECK(abs(log(one)) < Real::of(tol, 64));

    // log(-1) = i pi
    Complex minus1 = Complex::of(-1, 0, wp);
    Complex want(Real::of(0L, wp), Real::pi(wp));
    CHECK(close(log(minus1), want, tol));

    // log(e^2 (cos 1 + i sin 1)) = 2 + i
    Real e2 = exp(Real::of(2L, wp));
    Real s(wp), c(wp);
    sin_cos(s, c, Real::of(1L, wp));
    Complex z(e2 * c, e2 * s);
    CHECK(close(log(z), Complex::of(2, 1, wp), tol));

    CHECK_THROWS_AS(log(Complex(wp)), DomainError);
}

TEST_CASE("complex exp log inverse property on an annulus") {
    const mpfr_prec_t wp = ctx.working();
    std::mt19937_64 rng(20260822);
    std::uniform_real_distribution<double> mag_exp(-6.0, 6.0);
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
    Real tol = Real::pow2(-ctx.bits + ctx.guard_bits, 64);
    for (int i = 0; i < 200; ++i) {
        double r = std::pow(10.0, mag_exp(rng));
        double th = angle(rng);
        Complex z = Complex::of(r * std::cos(th), r * std::sin(th), wp);
        if (z.is_zero()) continue;
        Complex back = exp(log(z));
        CHECK(abs(back - z) / abs(z) < tol);
    }
}

TEST_CASE("complex division and inverse") {
    const mpfr_prec_t wp = ctx.working();
    Complex a = Complex::of(3, 4, wp);
    Complex b = Complex::of(1, -2, wp);
    Complex q = a / b;
    CHECK(close(q * b, a, 1e-80));
    CHECK(close(inv(b) * b, Complex::of(1, 0, wp), 1e-80));
    CHECK_THROWS_AS(a / Complex(wp), DomainError);
}

TEST_CASE("complex trig against known identities") {
    const mpfr_prec_t wp = ctx.working();
    Complex z = Complex::of(1.5, -0.75, wp);
    // sin^2 + cos^2 = 1
    Complex s = sin(z), c = cos(z);
    CHECK(close(s * s + c * c, Complex::of(1, 0, wp), 1e-80));
    // cos z = (e^{iz} + e^{-iz}) / 2
    Complex iz(-(z.im()), z.re());
    Complex rhs = (exp(iz) + exp(-iz)) / Real::of(2L, wp);
    CHECK(close(c, rhs, 1e-80));
}

TEST_CASE("rpow matches powering for integer exponents") {
    const mpfr_prec_t wp = ctx.working();
    Real base = Real::of(7L, wp);
    Complex three = Complex::of(3, 0, wp);
    CHECK(close(rpow(base, three), Complex::of(343, 0, wp), 1e-75));
    CHECK_THROWS_AS(rpow(Real::of(-2L, wp), three), DomainError);
}

TEST_CASE("complex parsing forms") {
    const mpfr_prec_t wp = ctx.working();
    CHECK(parse_complex("2", wp) == Complex::of(2, 0, wp));
    CHECK(parse_complex("-3.5", wp) == Complex::of(-3.5, 0, wp));
    CHECK(parse_complex("2i", wp) == Complex::of(0, 2, wp));
    CHECK(parse_complex("-i", wp) == Complex::of(0, -1, wp));
    CHECK(parse_complex("3+4i", wp) == Complex::of(3, 4, wp));
    CHECK(parse_complex("3-4i", wp) == Complex::of(3, -4, wp));
    CHECK(parse_complex("1e-3+2i", wp) == Complex(Real::parse("1e-3", wp), Real::of(2L, wp)));
    CHECK(parse_complex("0.75 + 40i", wp) == Complex::of(0.75, 40, wp));
    CHECK_THROWS_AS(parse_complex("", wp), SchemaError);
    CHECK_THROWS_AS(parse_complex("1+2j", wp), SchemaError);
}

TEST_CASE("binomials against Pascal") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(30, 15) == 155117520);
    CHECK(binom(4, 7) == 0);
    CHECK(binom(4, -1) == 0);
    for (unsigned n = 0; n <= 50; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(binom(n, k) == oracles::pascal_binom(n, k));
}

TEST_CASE("generalized binomials") {
    CHECK(gen_binom(-2, 1) == Rational(-2));
    CHECK(gen_binom(-3, 2) == Rational(6));
    CHECK(gen_binom(5, 0) == Rational(1));
    CHECK(gen_binom(-7, 0) == Rational(1));
    // agrees with the ordinary binomial for nonnegative upper index
    for (long a = 0; a <= 12; ++a)
        for (long j = 0; j <= 14; ++j) CHECK(gen_binom(a, j) == Rational(binom(a, j)));
    // and with the one-step recurrence for negative upper index
    for (long a = -9; a < 0; ++a)
        for (long j = 0; j <= 14; ++j) CHECK(gen_binom(a, j) == oracles::gen_binom_recurrence(a, j));
}

TEST_CASE("rational parsing and decimal rendering") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0.75") == Rational(3, 4));
    CHECK(Rational::parse("-0.05") == Rational(-1, 20));
    CHECK(Rational::parse("30") == Rational(30));
    CHECK_THROWS_AS(Rational::parse("x"), SchemaError);
    CHECK(Rational(1, 8).decimal_str() == "0.125");
    CHECK(Rational(-31, 2).decimal_str() == "-15.5");
    CHECK(Rational(5).decimal_str() == "5");
    CHECK(Rational(1, 3).decimal_str() == "1/3");
}

TEST_CASE("bernoulli numbers against the independent transform and the table") {
    CHECK(bernoulli_even(0) == Rational(1));
    CHECK(bernoulli_even(1) == Rational(1, 6));
    CHECK(bernoulli_even(2) == Rational(-1, 30));
    CHECK(bernoulli_even(3) == Rational(1, 42));
    CHECK(bernoulli_even(4) == Rational(-1, 30));
    CHECK(bernoulli_even(5) == Rational(5, 66));
    CHECK(bernoulli_even(6) == Rational(-691, 2730));
    for (unsigned j = 0; j <= 30; ++j) CHECK(bernoulli_even(j) == oracles::bernoulli_at(2 * j));
}

TEST_CASE("rational to real conversion is exact for dyadics") {
    const mpfr_prec_t wp = ctx.working();
    CHECK(to_real(Rational(3, 4), wp) == Real::of(0.75, wp));
    CHECK(to_real(Rational(-5, 2), wp) == Real::of(-2.5, wp));
    CHECK(to_real(mpz_class(1) << 100, wp) == Real::pow2(100, wp));
}
