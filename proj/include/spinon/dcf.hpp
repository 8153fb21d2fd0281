#pragma once

#include <string>
#include <vector>

#include "spinon/kinematics.hpp"
#include "spinon/quadrature.hpp"

namespace spinon {

struct DcfValue {
    double s_pm;
    bool in_band;
};

// Two-spinon transverse structure factor at (w, k), k in [0, 2pi].
// Exactly zero (in_band = false) outside the open band, including on the
// boundary curves; never NaN or infinite.
DcfValue s2_pm(double w, double k, const QuadratureSpec& spec = {});

// Same, but also reports the rapidity pair when in band.
struct DcfPoint {
    double s_pm;
    bool in_band;
    RapidityPair rapidities;  // meaningful only when in_band
};
DcfPoint s2_pm_detail(double w, double k, const QuadratureSpec& spec = {});

// Diagonal components; for this channel s_xx = s_yy = s_zz = 4 s_pm,
// returned as bit-identical multiples.
struct DcfComponents {
    double s_pm;
    double s_xx, s_yy, s_zz;
    bool in_band;
};
DcfComponents s2_components(double w, double k, const QuadratureSpec& spec = {});

struct GridSpec {
    double k_min = 0.0;
    double k_max = 2.0 * M_PI;
    int n_k = 2;
    double w_min = 0.0;
    double w_max = 2.0 * M_PI;
    int n_w = 2;
};

struct GridRow {
    double k, w, s_pm, s_xx;
};

struct GridResult {
    GridSpec grid;
    std::vector<GridRow> rows;              // row-major: k outer, w inner
    std::vector<std::string> failures;      // per-point diagnostics, in row order
};

// Evaluates the grid with n_workers threads. Work is assigned by point index,
// each point lands in its own slot, and failure notes are merged in index
// order, so the result is identical for every worker count.
GridResult evaluate_grid(const GridSpec& grid, const QuadratureSpec& spec = {},
                         int n_workers = 1);

struct SumRuleReport {
    double k;
    double fixed_k_weight;   // int S dw across the band at this k
    double total_weight;     // (1/2pi) int dk fixed_k_weight; NaN unless requested
    QuadratureSpec tolerances;
};

// Frequency integral of s2_pm over the band at fixed k in (0, 2pi), via the
// substitution w = w_l + (w_u - w_l) sin^2(theta) which flattens both edges.
SumRuleReport fixed_k_weight(double k, const QuadratureSpec& spec = {});

// Zone-integrated weight (1/2pi) int_0^2pi fixed_k_weight(k) dk, composite
// fixed-panel rule; accuracy ~1e-8 is plenty for sum-rule bookkeeping.
double zone_weight(const QuadratureSpec& spec = {}, int n_panels = 24);

}  // namespace spinon
