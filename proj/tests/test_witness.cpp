#include <doctest.h>

#include <set>
#include <vector>

#include "adilab/errors.hpp"
#include "adilab/json_io.hpp"
#include "adilab/witness.hpp"

using namespace adi;

namespace {

const PrecisionConfig ctx = make_precision(256);

Real tol(double t) { return Real::of(t, 64); }

UPoly const_upoly(int m, double re) {
    UPoly u;
    u.m = m;
    u.add(std::vector<int>(m + 1, 0), Complex::of(re, 0, ctx.working()));
    return u;
}

// F^2 - LF in the lambda variables; the u-part is the constant 1.
ADEPoly wronskian_poly() {
    ADEPoly p;
    p.m = 0;
    p.add(LambdaIndex{0, 2, 0}, const_upoly(0, 1));
    p.add(LambdaIndex{1, 0, 1}, const_upoly(0, -1));
    return p;
}

CoeffTable wronskian_btable() {
    ADEPoly p = wronskian_poly();
    return b_from_a(a_table(p, 2, 2));
}

AsymParams params(int ell, int n) {
    AsymParams prm;
    prm.ell = ell;
    prm.n = n;
    return prm;
}

}  // namespace

TEST_CASE("curve sampling covers the closed interval") {
    Trajectory traj = sample_curve(Rational(3, 4), Rational(2), Rational(3), Rational(1, 2),
                                   0, ctx);
    REQUIRE(traj.samples.size() == 3);
    CHECK(traj.samples[0].y == Rational(2));
    CHECK(traj.samples[1].y == Rational(5, 2));
    CHECK(traj.samples[2].y == Rational(3));
    for (auto& s : traj.samples) {
        REQUIRE(s.values.size() == 1);
        CHECK(abs(s.values[0]) < Real::pos_inf(64));
        CHECK(abs(s.values[0]) > tol(0));
    }
}

TEST_CASE("curve sampling rejects bad abscissas and grids") {
    CHECK_THROWS_AS(
        sample_curve(Rational(1, 2), Rational(2), Rational(3), Rational(1), 0, ctx),
        DomainError);
    CHECK_THROWS_AS(sample_curve(Rational(1), Rational(2), Rational(3), Rational(1), 0, ctx),
                    DomainError);
    CHECK_THROWS_AS(sample_curve(Rational(1, 4), Rational(2), Rational(3), Rational(1), 0, ctx),
                    DomainError);
    CHECK_THROWS_AS(
        sample_curve(Rational(3, 4), Rational(2), Rational(3), Rational(0), 0, ctx),
        DomainError);
    CHECK_THROWS_AS(
        sample_curve(Rational(3, 4), Rational(2), Rational(3), Rational(1), -1, ctx),
        DomainError);
}

TEST_CASE("refining the grid keeps shared samples bit-identical") {
    Rational x(3, 4), y0(2), y1(3);
    Trajectory coarse = sample_curve(x, y0, y1, Rational(1, 2), 1, ctx);
    Trajectory fine = sample_curve(x, y0, y1, Rational(1, 4), 1, ctx);
    REQUIRE(coarse.samples.size() == 3);
    REQUIRE(fine.samples.size() == 5);
    for (size_t i = 0; i < coarse.samples.size(); ++i) {
        REQUIRE(coarse.samples[i].y == fine.samples[2 * i].y);
        for (size_t j = 0; j < coarse.samples[i].values.size(); ++j)
            CHECK(coarse.samples[i].values[j] == fine.samples[2 * i].values[j]);
    }
}

TEST_CASE("box hits pick out the matching heights") {
    Trajectory traj = sample_curve(Rational(3, 4), Rational(2), Rational(4), Rational(1, 2),
                                   0, ctx);
    BoxTarget box;
    box.center.push_back(traj.samples[2].values[0]);  // the sample at y = 3
    box.half_width = Real::parse("1e-10", 64);
    auto hits = find_hits(traj, box);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == Rational(3));

    box.half_width = Real::of(100L, 64);
    CHECK(find_hits(traj, box).size() == traj.samples.size());

    BoxTarget bad;
    bad.center = {Complex(ctx.working()), Complex(ctx.working())};
    bad.half_width = Real::of(1L, 64);
    CHECK_THROWS_AS(find_hits(traj, bad), DomainError);
    BoxTarget flat;
    flat.center.push_back(Complex(ctx.working()));
    flat.half_width = Real::of(0L, 64);
    CHECK_THROWS_AS(find_hits(traj, flat), DomainError);
}

TEST_CASE("witness selection with constant cells takes everything") {
    Trajectory traj = sample_curve(Rational(3, 4), Rational(30), Rational(40), Rational(1),
                                   0, ctx);
    WitnessConfig cfg;
    WitnessSelection sel = select_witnesses(traj, wronskian_btable(), cfg, ctx);
    CHECK(sel.q0 == 2);
    CHECK(sel.r0 == 1);
    CHECK(sel.diagnostics.empty());
    CHECK_FALSE(sel.rescaled);
    // both cells evaluate to magnitude 1 everywhere, so all 11 qualify; thinned to 12 max
    CHECK(sel.indices.size() == traj.samples.size());
}

TEST_CASE("witness selection on a zeta-dependent cell") {
    // P = u_0 as the coefficient of the lambda = (1,0,0) block
    ADEPoly p;
    p.m = 0;
    UPoly u;
    u.m = 0;
    u.add({1}, Complex::of(1, 0, ctx.working()));
    p.add(LambdaIndex{1, 0, 0}, u);
    CoeffTable btab = b_from_a(a_table(p, 1, 2));

    Trajectory traj = sample_curve(Rational(3, 4), Rational(1, 2), Rational(50),
                                   Rational(1, 2), 0, ctx);
    WitnessConfig cfg;
    WitnessSelection sel = select_witnesses(traj, btab, cfg, ctx);
    CHECK(sel.q0 == 0);
    CHECK(sel.r0 == 0);
    // |zeta(3/4 + iy)| passes through [1, 2] often enough on this range
    CHECK_FALSE(sel.indices.empty());
    CHECK(sel.indices.size() <= (size_t)cfg.count);
    for (size_t i = 1; i < sel.indices.size(); ++i) CHECK(sel.indices[i - 1] < sel.indices[i]);

    // an unreachable lower bucket leaves diagnostics, not witnesses
    WitnessConfig hard;
    hard.lower = Real::parse("1e9", 64);
    WitnessSelection none = select_witnesses(traj, btab, hard, ctx);
    CHECK(none.indices.empty());
    CHECK_FALSE(none.diagnostics.empty());
}

TEST_CASE("witness selection guards") {
    Trajectory traj = sample_curve(Rational(3, 4), Rational(2), Rational(3), Rational(1),
                                   0, ctx);
    WitnessConfig cfg;
    // reading the raw a-table is a category error
    CHECK_THROWS_AS(select_witnesses(traj, a_table(wronskian_poly(), 2, 2), cfg, ctx),
                    DomainError);

    WitnessConfig bad;
    bad.c0 = Real::of(1L, 64);
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = WitnessConfig();
    bad.lower = Real::of(0L, 64);
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = WitnessConfig();
    bad.count = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = WitnessConfig();
    bad.slack = 0.5;
    CHECK_THROWS_AS(bad.validate(), DomainError);

    // identically zero b-table
    ADEPoly zero;
    zero.m = 0;
    CoeffTable ztab = b_from_a(a_table(zero, 2, 2));
    WitnessSelection sel = select_witnesses(traj, ztab, cfg, ctx);
    CHECK(sel.indices.empty());
    CHECK_FALSE(sel.diagnostics.empty());
}

TEST_CASE("dominance on the wronskian combination") {
    // F^2 - LF = -psi', so |lhs| is about 1/|z| against the bound 1/(3|z|)
    Trajectory traj = sample_curve(Rational(3, 4), Rational(30), Rational(50), Rational(1),
                                   0, ctx);
    WitnessConfig cfg;
    WitnessSelection sel = select_witnesses(traj, wronskian_btable(), cfg, ctx);
    REQUIRE_FALSE(sel.indices.empty());
    DominanceReport rep =
        dominance_check(wronskian_poly(), params(2, 1), traj, sel, cfg, ctx);
    CHECK(rep.p0 == 2);
    CHECK(rep.total_degree == 2);
    CHECK(rep.q0 == 2);
    CHECK(rep.r0 == 1);
    REQUIRE_FALSE(rep.rows.empty());
    for (auto& row : rep.rows) {
        CHECK(row.ratio > tol(1.0 / 6.0));
        CHECK(row.ratio < tol(6.0));
        CHECK(row.lhs > row.noise * 10);
    }
    CHECK(rep.witnessed);
    CHECK(rep.verdict.find("witnessed nonvanishing") != std::string::npos);
    CHECK(rep.blowup_series.empty());
}

TEST_CASE("dominance on the simplest blocks sits at ratio about three") {
    Trajectory traj = sample_curve(Rational(3, 4), Rational(30), Rational(40), Rational(1),
                                   0, ctx);
    WitnessConfig cfg;
    for (LambdaIndex l : {LambdaIndex{1, 0, 0}, LambdaIndex{0, 1, 0}}) {
        ADEPoly p;
        p.m = 0;
        p.add(l, const_upoly(0, 1));
        CoeffTable btab = b_from_a(a_table(p, 1, 2));
        WitnessSelection sel = select_witnesses(traj, btab, cfg, ctx);
        REQUIRE_FALSE(sel.indices.empty());
        DominanceReport rep = dominance_check(p, params(2, 1), traj, sel, cfg, ctx);
        REQUIRE(rep.witnessed);
        Real r = rep.rows.back().ratio;
        CHECK(r > tol(2.5));
        CHECK(r < tol(3.5));
    }
}

TEST_CASE("dominance magnitudes are stable under doubled precision") {
    PrecisionConfig hi = make_precision(512);
    WitnessConfig cfg;
    Real lhs_lo(64), lhs_hi(64);
    {
        Trajectory traj = sample_curve(Rational(3, 4), Rational(30), Rational(35),
                                       Rational(1), 0, ctx);
        WitnessSelection sel = select_witnesses(traj, wronskian_btable(), cfg, ctx);
        lhs_lo = dominance_check(wronskian_poly(), params(2, 1), traj, sel, cfg, ctx)
                     .rows.back()
                     .lhs;
    }
    {
        Trajectory traj = sample_curve(Rational(3, 4), Rational(30), Rational(35),
                                       Rational(1), 0, hi);
        WitnessSelection sel = select_witnesses(traj, wronskian_btable(), cfg, hi);
        lhs_hi = dominance_check(wronskian_poly(), params(2, 1), traj, sel, cfg, hi)
                     .rows.back()
                     .lhs;
    }
    CHECK(abs(lhs_lo - lhs_hi) / lhs_hi < tol(1e-10));
}

TEST_CASE("gamma-weighted combination blows up when degrees are mixed") {
    // P = v_0^2 + v_1: lowest degree 1 under total degree 2
    ADEPoly p;
    p.m = 0;
    p.add(LambdaIndex{2, 0, 0}, const_upoly(0, 1));
    p.add(LambdaIndex{0, 1, 0}, const_upoly(0, 1));
    std::vector<Rational> ys{Rational(30), Rational(40), Rational(50), Rational(60)};
    BlowupReport rep = blowup_check(p, params(2, 1), Rational(3, 4), ys, ctx);
    CHECK(rep.p0 == 1);
    CHECK(rep.total_degree == 2);
    CHECK_FALSE(rep.degenerate);
    REQUIRE(rep.series.size() == 4);
    CHECK(rep.strictly_increasing);
    // Gamma^-1 contributes e^(pi y / 2); over a span of 30 that is e^(15 pi) or so
    Real floor = exp(Real::pi(64) * Real::of(15L, 64) * Real::of(0.9, 64));
    CHECK(rep.growth_ratio > floor);
}

TEST_CASE("homogeneous input degenerates the blowup test") {
    std::vector<Rational> ys{Rational(30), Rational(40)};
    BlowupReport rep = blowup_check(wronskian_poly(), params(2, 1), Rational(3, 4), ys, ctx);
    CHECK(rep.degenerate);
    CHECK(rep.p0 == rep.total_degree);

    ADEPoly zero;
    zero.m = 0;
    CHECK_THROWS_AS(blowup_check(zero, params(2, 1), Rational(3, 4), ys, ctx), DomainError);
    ADEPoly p = wronskian_poly();
    CHECK_THROWS_AS(blowup_check(p, params(2, 1), Rational(3, 4), {}, ctx), DomainError);
}

TEST_CASE("full pipeline on a syntactic cancellation reports the zero polynomial") {
    ADEPoly p;
    p.m = 0;
    p.add(LambdaIndex{1, 1, 0}, const_upoly(0, 1));
    p.add(LambdaIndex{1, 1, 0}, const_upoly(0, -1));
    WitnessConfig cfg;
    IndependenceReport rep = independence_report(p, params(2, 1), Rational(3, 4),
                                                 Rational(30), Rational(40), Rational(1),
                                                 cfg, ctx);
    CHECK(rep.identically_zero);
    CHECK(rep.verdict == "P ≡ 0");
    CHECK_FALSE(rep.has_blowup);
}

TEST_CASE("full pipeline on the wronskian witnesses without a blowup stage") {
    WitnessConfig cfg;
    IndependenceReport rep = independence_report(wronskian_poly(), params(2, 1),
                                                 Rational(3, 4), Rational(30), Rational(40),
                                                 Rational(1, 2), cfg, ctx);
    CHECK_FALSE(rep.identically_zero);
    CHECK(rep.dominance.witnessed);
    CHECK_FALSE(rep.has_blowup);  // p0 = L leaves no growth to show
    CHECK(rep.dominance.blowup_series.empty());
}

TEST_CASE("full pipeline runs the blowup stage on mixed degrees") {
    ADEPoly p;
    p.m = 0;
    p.add(LambdaIndex{2, 0, 0}, const_upoly(0, 1));
    p.add(LambdaIndex{0, 1, 0}, const_upoly(0, 1));
    WitnessConfig cfg;
    IndependenceReport rep = independence_report(p, params(2, 1), Rational(3, 4),
                                                 Rational(30), Rational(60), Rational(1),
                                                 cfg, ctx);
    CHECK(rep.dominance.witnessed);
    REQUIRE(rep.has_blowup);
    CHECK(rep.blowup.strictly_increasing);
    REQUIRE(rep.blowup.series.size() == 4);
    CHECK(rep.blowup.series[0].y == Rational(30));
    CHECK(rep.blowup.series[3].y == Rational(60));
    CHECK(rep.dominance.blowup_series.size() == rep.blowup.series.size());
}

TEST_CASE("the zeta jet trajectory spreads across its bounding box") {
    // coarse denseness probe: the (zeta, zeta') image should not collapse onto
    // a thin subset of its own bounding box
    PrecisionConfig fast = make_precision(64, 16);
    Trajectory traj = sample_curve(Rational(3, 4), Rational(1, 2), Rational(500),
                                   Rational(5, 2), 1, fast);
    REQUIRE(traj.samples.size() == 200);

    std::vector<double> mins(4, 0), maxs(4, 0);
    std::vector<std::array<double, 4>> pts;
    for (auto& s : traj.samples) {
        std::array<double, 4> v{s.values[0].re().to_double(), s.values[0].im().to_double(),
                                s.values[1].re().to_double(), s.values[1].im().to_double()};
        for (int k = 0; k < 4; ++k) {
            if (pts.empty() || v[k] < mins[k]) mins[k] = v[k];
            if (pts.empty() || v[k] > maxs[k]) maxs[k] = v[k];
        }
        pts.push_back(v);
    }
    std::set<std::array<int, 4>> cells;
    for (auto& v : pts) {
        std::array<int, 4> cell;
        for (int k = 0; k < 4; ++k) {
            double w = maxs[k] - mins[k];
            int c = (int)((v[k] - mins[k]) / w * 10.0);
            cell[k] = std::min(c, 9);
        }
        cells.insert(cell);
    }
    CHECK(cells.size() >= 50);
}

TEST_CASE("trajectory csv layout") {
    Trajectory traj = sample_curve(Rational(3, 4), Rational(2), Rational(3), Rational(1),
                                   1, ctx);
    std::string csv = trajectory_csv(traj, 12);
    CHECK(csv.rfind("y,re_0,im_0,re_1,im_1\n", 0) == 0);
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 3);  // header plus two samples
}
