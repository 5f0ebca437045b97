#include "adilab/witness.hpp"

#include <algorithm>
#include <cmath>

#include "adilab/diffpoly.hpp"
#include "adilab/errors.hpp"

namespace adi {

void WitnessConfig::validate() const {
    if (!(c0 > 1)) throw DomainError("witness config", "C0 must exceed 1");
    if (!(lower >= 1)) throw DomainError("witness config", "lower threshold must be >= 1");
    if (count < 1) throw DomainError("witness config", "witness count must be positive");
    if (slack < 1.0) throw DomainError("witness config", "slack factor must be >= 1");
}

Trajectory sample_curve(const Rational& x, const Rational& y0, const Rational& y1,
                        const Rational& step, int m, const PrecisionConfig& ctx) {
    ctx.validate();
    if (!(Rational(1, 2) < x && x < Rational(1)))
        throw DomainError("abscissa", "the vertical line must satisfy 1/2 < x < 1");
    if (!(step > Rational(0))) throw DomainError("grid", "step must be positive");
    if (m < 0) throw DomainError("jet order", "derivative count must be nonnegative");

    Trajectory traj;
    traj.x = x;
    traj.m = m;
    traj.ctx = ctx;
    const mpfr_prec_t wp = ctx.working();
    Real xr = to_real(x, wp);
    for (Rational y = y0; y <= y1; y += step) {
        Complex s(xr, to_real(y, wp));
        FunctionJet jet = zeta_jet(s, m, ctx);
        TrajSample sample;
        sample.y = y;
        sample.values.push_back(jet.base);
        for (auto& d : jet.derivs) sample.values.push_back(d);
        traj.samples.push_back(std::move(sample));
    }
    return traj;
}

std::vector<Rational> find_hits(const Trajectory& traj, const BoxTarget& box) {
    if ((int)box.center.size() != traj.m + 1)
        throw DomainError("box arity", "box center must list m + 1 coordinates");
    if (!(box.half_width > 0))
        throw DomainError("box arity", "box half width must be positive");
    std::vector<Rational> hits;
    for (auto& s : traj.samples) {
        bool inside = true;
        for (size_t j = 0; j < s.values.size() && inside; ++j) {
            Complex d = s.values[j] - box.center[j];
            if (abs(d.re()) > box.half_width || abs(d.im()) > box.half_width) inside = false;
        }
        if (inside) hits.push_back(s.y);
    }
    return hits;
}

namespace {

// Per-sample magnitudes of the leading cell and the max over all cells.
struct CellScan {
    std::vector<Real> lead;
    std::vector<Real> top;
};

CellScan scan_cells(const Trajectory& traj, const CoeffTable& btab, int q0, int r0,
                    const PrecisionConfig& ctx) {
    CellScan scan;
    scan.lead.reserve(traj.samples.size());
    scan.top.reserve(traj.samples.size());
    for (auto& s : traj.samples) {
        Real top = Real::of(0L, 64);
        Real lead = Real::of(0L, 64);
        for (int q = 0; q <= btab.max_q; ++q)
            for (int r = 0; r <= btab.max_r; ++r) {
                const UPoly& cell = btab.at(q, r);
                if (cell.is_zero()) continue;
                Real v = abs(upoly_eval(cell, s.values, ctx));
                if (q == q0 && r == r0) lead = v;
                top = max(top, v);
            }
        scan.lead.push_back(lead);
        scan.top.push_back(top);
    }
    return scan;
}

std::vector<size_t> thin_indices(const std::vector<size_t>& all, int count) {
    if ((int)all.size() <= count) return all;
    std::vector<size_t> out;
    if (count == 1) {
        out.push_back(all.back());
        return out;
    }
    for (int t = 0; t < count; ++t) {
        size_t i = (size_t)((double)t * (double)(all.size() - 1) / (double)(count - 1));
        out.push_back(all[i]);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

WitnessSelection select_witnesses(const Trajectory& traj, const CoeffTable& btab,
                                  const WitnessConfig& cfg, const PrecisionConfig& ctx) {
    cfg.validate();
    if (btab.kind != 'b')
        throw DomainError("table kind", "witness selection reads the b-table");
    WitnessSelection sel;
    auto lead_pos = first_nonzero_b(btab);
    if (!lead_pos) {
        sel.diagnostics = "b-table is identically zero; nothing to witness";
        return sel;
    }
    sel.q0 = lead_pos->first;
    sel.r0 = lead_pos->second;
    if (traj.samples.empty()) {
        sel.diagnostics = "empty trajectory";
        return sel;
    }

    CellScan scan = scan_cells(traj, btab, sel.q0, sel.r0, ctx);
    Real max_lead = Real::of(0L, 64);
    for (auto& v : scan.lead) max_lead = max(max_lead, v);

    auto qualify = [&](const Real& factor) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < scan.lead.size(); ++i) {
            if (scan.lead[i] * factor >= cfg.lower && scan.top[i] * factor <= cfg.c0)
                idx.push_back(i);
        }
        return idx;
    };

    Real one = Real::of(1L, 64);
    std::vector<size_t> idx = qualify(one);
    if (idx.empty() && max_lead > 0) {
        // One rescale of the whole table by 1/max|b_{q0,r0}| along the run; the
        // polynomial is only determined up to scale anyway.
        Real factor = 1 / max_lead;
        idx = qualify(factor);
        if (!idx.empty()) {
            sel.rescaled = true;
            sel.rescale_factor = factor;
        }
    }
    if (idx.empty()) {
        sel.diagnostics =
            "no sample point put |b_{q0,r0}| above the lower threshold while keeping all "
            "cells under C0, even after rescaling; widen the y range or relax the buckets";
        return sel;
    }
    sel.indices = thin_indices(idx, cfg.count);
    return sel;
}

namespace {

// |log z|^e / |z|^r at working precision.
Real log_power_scale(const Complex& z, int e, int r, mpfr_prec_t wp) {
    Real lg = abs(log(z));
    Real num = pow_si(lg, e);
    Real den = pow_si(abs(z), r);
    return num / den;
}

// P_p(gamma; 1, F, LF) = sum_lambda a_lambda(u) F^l1 LF^l2 for one homogeneous part;
// also accumulates the magnitude sum for the roundoff floor.
Complex part_value(const ADEPoly& part, const std::vector<Complex>& uvals,
                   const Complex& f_val, const Complex& lf_val, Real& magsum,
                   const PrecisionConfig& ctx) {
    const mpfr_prec_t wp = ctx.working();
    Complex acc(wp);
    for (auto& [l, u] : part.terms) {
        Complex t = upoly_eval(u, uvals, ctx);
        if (l.l1 != 0) t = t * pow_si(f_val, l.l1);
        if (l.l2 != 0) t = t * pow_si(lf_val, l.l2);
        acc += t;
        magsum += abs(t);
    }
    return acc;
}

}  // namespace

DominanceReport dominance_check(const ADEPoly& poly, const AsymParams& prm,
                                const Trajectory& traj, const WitnessSelection& sel,
                                const WitnessConfig& cfg, const PrecisionConfig& ctx) {
    ctx.validate();
    prm.validate();
    if (poly.is_zero())
        throw DomainError("zero polynomial", "dominance test needs a nonzero polynomial");
    const mpfr_prec_t wp = ctx.working();

    auto parts = homogeneous_parts(poly);
    int p0 = parts.begin()->first;
    const ADEPoly& lead = parts.begin()->second;

    DominanceReport rep;
    rep.p0 = p0;
    rep.q0 = sel.q0;
    rep.r0 = sel.r0;
    rep.total_degree = poly.total_degree();

    int exponent = prm.n * sel.q0 - 2 * sel.r0;
    Real third = Real::of(1L, wp) / 3;
    Real xr = to_real(traj.x, wp);

    for (size_t idx : sel.indices) {
        const TrajSample& s = traj.samples[idx];
        Complex z(xr, to_real(s.y, wp));
        EvalPoint pt = make_eval_point(z, ctx);
        FunctionJet jet = digamma_jet(pt, prm.ell * prm.n - 1, ctx);
        Complex f_val = eval_diffpoly(gamma_ratio_poly(prm.n), jet, ctx);
        Complex lf_val = eval_diffpoly(gamma_ratio_poly(prm.ell * prm.n), jet, ctx);

        DominanceRow row;
        row.y = s.y;
        Real magsum = Real::of(0L, wp);
        Complex v = part_value(lead, s.values, f_val, lf_val, magsum, ctx);
        row.lhs = abs(v);
        row.bound = third * log_power_scale(z, exponent, sel.r0, wp);
        row.ratio = row.bound.is_zero() ? Real::pos_inf(64) : row.lhs / row.bound;
        row.noise = magsum * Real::pow2(-ctx.bits, 64);
        rep.rows.push_back(std::move(row));
    }

    if (!rep.rows.empty()) {
        const DominanceRow& last = rep.rows.back();
        Real floor = last.noise * 10;
        bool ratio_ok = last.ratio * Real::of(cfg.slack, 64) >= 1;
        bool above_noise = last.lhs > floor;
        rep.witnessed = ratio_ok && above_noise;
    }
    rep.verdict = rep.witnessed
                      ? "lowest-degree part numerically witnessed nonvanishing at z = " +
                            traj.x.str() + " + i*" + rep.rows.back().y.str()
                      : "inconclusive: dominance not established on this trajectory";
    return rep;
}

BlowupReport blowup_check(const ADEPoly& poly, const AsymParams& prm, const Rational& x,
                          const std::vector<Rational>& ys, const PrecisionConfig& ctx) {
    ctx.validate();
    prm.validate();
    if (poly.is_zero())
        throw DomainError("zero polynomial", "blowup test needs a nonzero polynomial");
    if (ys.empty()) throw DomainError("grid", "blowup test needs at least one height");

    auto parts = homogeneous_parts(poly);
    BlowupReport rep;
    rep.p0 = parts.begin()->first;
    rep.total_degree = poly.total_degree();
    rep.degenerate = rep.p0 == rep.total_degree;

    double ymax = 0;
    for (auto& y : ys) ymax = std::max(ymax, std::fabs(to_real(y, 64).to_double()));
    long extra = 0;
    if (!rep.degenerate) {
        double span = (double)(rep.total_degree - rep.p0);
        extra = (long)std::ceil(span * 3.1416 * ymax / (2.0 * 0.6931)) + 64;
    }
    // Gamma^(p-L) swings through e^(+-(L-p) pi y / 2); only log Gamma needs the
    // scaled precision, the jet factors are O(polylog) and stay at base precision.
    PrecisionConfig gctx{ctx.bits + extra, ctx.guard_bits};
    const mpfr_prec_t gwp = gctx.working();
    const mpfr_prec_t wp = ctx.working();

    Real xr = to_real(x, wp);
    for (auto& y : ys) {
        Complex z(xr, to_real(y, wp));
        EvalPoint pt = make_eval_point(z, ctx);
        FunctionJet ujet = zeta_jet(z, poly.m, ctx);
        std::vector<Complex> uvals;
        uvals.push_back(ujet.base);
        for (auto& d : ujet.derivs) uvals.push_back(d);
        FunctionJet pjet = digamma_jet(pt, prm.ell * prm.n - 1, ctx);
        Complex f_val = eval_diffpoly(gamma_ratio_poly(prm.n), pjet, ctx);
        Complex lf_val = eval_diffpoly(gamma_ratio_poly(prm.ell * prm.n), pjet, ctx);

        Complex lg = log_gamma(make_eval_point(z.round_to(gwp), gctx), gctx);
        Complex acc(gwp);
        for (auto& [p, part] : parts) {
            Real dummy = Real::of(0L, wp);
            Complex pv = part_value(part, uvals, f_val, lf_val, dummy, ctx);
            Complex weight = exp(lg * Real::of((long)(p - rep.total_degree), gwp));
            acc += weight * pv.round_to(gwp);
        }
        BlowupPoint bp;
        bp.y = y;
        bp.magnitude = abs(acc);
        rep.series.push_back(std::move(bp));
    }

    size_t n = rep.series.size();
    size_t window = std::min<size_t>(5, n);
    rep.strictly_increasing = n >= 2;
    for (size_t i = n - window; i + 1 < n; ++i)
        if (!(rep.series[i + 1].magnitude > rep.series[i].magnitude))
            rep.strictly_increasing = false;
    if (!rep.series.front().magnitude.is_zero())
        rep.growth_ratio = rep.series.back().magnitude / rep.series.front().magnitude;
    else
        rep.growth_ratio = Real::pos_inf(64);
    return rep;
}

IndependenceReport independence_report(const ADEPoly& poly, const AsymParams& prm,
                                       const Rational& x, const Rational& y0,
                                       const Rational& y1, const Rational& step,
                                       const WitnessConfig& cfg,
                                       const PrecisionConfig& ctx) {
    ctx.validate();
    prm.validate();
    IndependenceReport rep;
    if (poly.is_zero()) {
        rep.identically_zero = true;
        rep.verdict = "P ≡ 0";
        return rep;
    }

    auto parts = homogeneous_parts(poly);
    int p0 = parts.begin()->first;
    CoeffTable atab = a_table(parts.begin()->second, p0, prm.ell);
    CoeffTable btab = b_from_a(atab);

    Trajectory traj = sample_curve(x, y0, y1, step, poly.m, ctx);
    rep.selection = select_witnesses(traj, btab, cfg, ctx);
    if (rep.selection.indices.empty()) {
        rep.verdict = "inconclusive: " + rep.selection.diagnostics;
        return rep;
    }
    rep.dominance = dominance_check(poly, prm, traj, rep.selection, cfg, ctx);
    rep.verdict = rep.dominance.verdict;

    if (rep.dominance.p0 < rep.dominance.total_degree) {
        // Four heights from the bottom of the range show the exponential growth of
        // the Gamma-weighted combination without driving the precision through the roof.
        std::vector<Rational> ys;
        Rational gap(10);
        for (int t = 0; t < 4; ++t) {
            Rational y = y0 + gap * Rational(t);
            if (y > y1) break;
            ys.push_back(y);
        }
        if (ys.size() >= 2) {
            rep.blowup = blowup_check(poly, prm, x, ys, ctx);
            rep.has_blowup = true;
            rep.dominance.blowup_series = rep.blowup.series;
        }
    }
    return rep;
}

}  // namespace adi
