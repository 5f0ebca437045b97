#pragma once

#include <string>
#include <vector>

#include "adilab/asymptotics.hpp"
#include "adilab/indexcalc.hpp"
#include "adilab/prec.hpp"
#include "adilab/rational.hpp"

namespace adi {

struct TrajSample {
    Rational y;
    std::vector<Complex> values;  // zeta jet at x + iy: values[j] = zeta^(j)
};

// Samples of the zeta jet along the vertical line Re s = x.
struct Trajectory {
    Rational x;
    int m = 0;
    PrecisionConfig ctx;
    std::vector<TrajSample> samples;
};

// Closed interval [y0, y1], arithmetic on exact rationals; needs 1/2 < x < 1.
Trajectory sample_curve(const Rational& x, const Rational& y0, const Rational& y1,
                        const Rational& step, int m, const PrecisionConfig& ctx);

struct BoxTarget {
    std::vector<Complex> center;  // length m + 1
    Real half_width;

    BoxTarget() : half_width(64) {}
};

// y values whose jet lands inside the box in every coordinate, max-norm.
std::vector<Rational> find_hits(const Trajectory& traj, const BoxTarget& box);

struct WitnessConfig {
    Real c0;        // upper bucket: every |b_{q,r}| evaluation must stay <= c0
    Real lower;     // lower bucket: |b_{q0,r0}| must reach >= lower
    int count = 12;
    double slack = 2.0;  // verdict accepts ratio >= 1/slack at the last witness

    WitnessConfig() : c0(Real::of(2L, 64)), lower(Real::of(1L, 64)) {}
    void validate() const;
};

struct WitnessSelection {
    int q0 = 0, r0 = 0;
    std::vector<size_t> indices;  // into traj.samples, ascending y
    bool rescaled = false;
    Real rescale_factor;
    std::string diagnostics;  // nonempty when selection failed or needed intervention

    WitnessSelection() : rescale_factor(Real::of(1L, 64)) {}
};

// Picks sample points where the leading b-cell is bounded away from zero while all
// cells stay bounded; rescales the table once by 1/max|b_{q0,r0}| if nothing qualifies.
WitnessSelection select_witnesses(const Trajectory& traj, const CoeffTable& btab,
                                  const WitnessConfig& cfg, const PrecisionConfig& ctx);

struct DominanceRow {
    Rational y;
    Real lhs;    // |P_p0(gamma; 1, F, LF)|
    Real bound;  // (1/3) |log z|^(n q0 - 2 r0) / |z|^r0
    Real ratio;  // lhs / bound
    Real noise;  // accumulated magnitude * 2^-bits, the roundoff floor

    DominanceRow() : lhs(64), bound(64), ratio(64), noise(64) {}
};

struct BlowupPoint {
    Rational y;
    Real magnitude;  // |sum_p Gamma^(p-L) P_p|

    BlowupPoint() : magnitude(64) {}
};

struct DominanceReport {
    int p0 = 0, q0 = 0, r0 = 0;
    int total_degree = 0;  // L
    std::vector<DominanceRow> rows;
    std::vector<BlowupPoint> blowup_series;  // populated when p0 < L
    bool witnessed = false;
    std::string verdict;
};

// Lowest-degree dominance test at the already-selected witness indices.
DominanceReport dominance_check(const ADEPoly& poly, const AsymParams& prm,
                                const Trajectory& traj, const WitnessSelection& sel,
                                const WitnessConfig& cfg, const PrecisionConfig& ctx);

struct BlowupReport {
    int p0 = 0;
    int total_degree = 0;
    bool degenerate = false;  // p0 = L: no Gamma growth left, falls back to dominance scale
    std::vector<BlowupPoint> series;
    bool strictly_increasing = false;
    Real growth_ratio;  // last / first

    BlowupReport() : growth_ratio(64) {}
};

// |sum_p Gamma^(p-L) P_p| at the given heights; log Gamma runs at a precision
// scaled up by (L - p0) pi y / (2 ln 2) so Gamma^(p0-L) keeps relative accuracy.
BlowupReport blowup_check(const ADEPoly& poly, const AsymParams& prm, const Rational& x,
                          const std::vector<Rational>& ys, const PrecisionConfig& ctx);

struct IndependenceReport {
    bool identically_zero = false;
    std::string verdict;
    WitnessSelection selection;
    DominanceReport dominance;
    bool has_blowup = false;
    BlowupReport blowup;
};

// Full pipeline: decompose, pick witnesses on a fresh trajectory, run the dominance
// test, and when the lowest degree sits under the top one, the blowup test as well.
IndependenceReport independence_report(const ADEPoly& poly, const AsymParams& prm,
                                       const Rational& x, const Rational& y0,
                                       const Rational& y1, const Rational& step,
                                       const WitnessConfig& cfg,
                                       const PrecisionConfig& ctx);

}  // namespace adi
