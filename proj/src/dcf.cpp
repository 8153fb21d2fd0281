#include "spinon/dcf.hpp"

#include <cmath>
#include <thread>
#include <utility>

#include "spinon/errors.hpp"
#include "spinon/formfactor.hpp"

namespace spinon {

namespace {

DcfPoint evaluate_point(double w, double k, const QuadratureSpec& spec) {
    if (!std::isfinite(w)) throw DomainError("s2_pm: w not finite");
    const Band band = band_boundaries(k);
    if (!(w > band.lower && w < band.upper) || band.upper <= 0.0)
        return {0.0, false, {0.0, 0.0}};
    const RapidityPair pair = invert_kinematics(w, k);
    const double g = pair.beta2 - pair.beta1;
    if (g < 1e-12) return {0.0, true, pair};  // closer to the upper edge than any caller resolves
    const double expo = form_factor_exponent(g, 0.0, ASign::minus, spec);
    const double disc = (band.upper - w) * (band.upper + w);
    double value;
    if (expo > -650.0) {
        value = prefactor_constant(spec) * std::exp(-expo) / std::sqrt(disc);
    } else {
        // |A_-|^2 alone would overflow; fold everything into one exponent.
        value = std::exp(-expo - 0.5 * std::log(disc) +
                         std::log(prefactor_constant(spec)));
    }
    return {value, true, pair};
}

}  // namespace

DcfValue s2_pm(double w, double k, const QuadratureSpec& spec) {
    const DcfPoint p = evaluate_point(w, k, spec);
    return {p.s_pm, p.in_band};
}

DcfPoint s2_pm_detail(double w, double k, const QuadratureSpec& spec) {
    return evaluate_point(w, k, spec);
}

DcfComponents s2_components(double w, double k, const QuadratureSpec& spec) {
    const DcfPoint p = evaluate_point(w, k, spec);
    const double four = 4.0 * p.s_pm;
    return {p.s_pm, four, four, four, p.in_band};
}

GridResult evaluate_grid(const GridSpec& grid, const QuadratureSpec& spec,
                         int n_workers) {
    if (grid.n_k < 2 || grid.n_w < 2)
        throw DomainError("evaluate_grid: need at least 2 points per axis");
    if (!(grid.k_min >= 0.0 && grid.k_max <= 2.0 * M_PI && grid.k_min < grid.k_max))
        throw DomainError("evaluate_grid: k range must be ordered inside [0, 2pi]");
    if (!(grid.w_min < grid.w_max))
        throw DomainError("evaluate_grid: w range must be ordered");
    if (n_workers < 1) n_workers = 1;

    const int total = grid.n_k * grid.n_w;
    GridResult result;
    result.grid = grid;
    result.rows.resize(total);
    std::vector<std::vector<std::pair<int, std::string>>> notes(n_workers);

    auto run = [&](int worker) {
        for (int idx = worker; idx < total; idx += n_workers) {
            const int ik = idx / grid.n_w;
            const int iw = idx % grid.n_w;
            const double k =
                grid.k_min + (grid.k_max - grid.k_min) * ik / (grid.n_k - 1);
            const double w =
                grid.w_min + (grid.w_max - grid.w_min) * iw / (grid.n_w - 1);
            GridRow& row = result.rows[idx];
            row.k = k;
            row.w = w;
            try {
                const DcfValue v = s2_pm(w, k, spec);
                row.s_pm = v.s_pm;
                row.s_xx = 4.0 * v.s_pm;
            } catch (const std::exception& e) {
                row.s_pm = std::numeric_limits<double>::quiet_NaN();
                row.s_xx = std::numeric_limits<double>::quiet_NaN();
                notes[worker].emplace_back(
                    idx, "k=" + std::to_string(k) + " w=" + std::to_string(w) +
                             ": " + e.what());
            }
        }
    };

    if (n_workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int t = 0; t < n_workers; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    std::vector<std::pair<int, std::string>> merged;
    for (auto& n : notes) merged.insert(merged.end(), n.begin(), n.end());
    std::sort(merged.begin(), merged.end());
    for (auto& m : merged) result.failures.push_back(std::move(m.second));
    return result;
}

SumRuleReport fixed_k_weight(double k, const QuadratureSpec& spec) {
    const Band band = band_boundaries(k);
    if (band.upper <= band.lower || band.upper <= 0.0)
        throw DegenerateWindow("fixed_k_weight: zero-width band at k = 0 or 2pi");
    // At k = pi the lower edge reaches w = 0 and S ~ (1/w) sqrt(log), so the
    // frequency integral diverges logarithmically; refuse rather than return
    // whatever the subdivision budget happens to resolve.
    if (std::abs(k - M_PI) < 1e-12)
        throw DomainError(
            "fixed_k_weight: the integral diverges logarithmically at k = pi");
    const double width = band.upper - band.lower;
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double w = band.lower + width * s * s;
        return s2_pm(w, k, spec).s_pm * width * std::sin(2.0 * theta);
    };
    // Each integrand sample is itself a quadrature result with ~rel_tol
    // noise, so the outer estimate can never resolve below that; floor the
    // outer tolerances two decades above the inner ones.
    QuadratureSpec outer = spec;
    outer.rel_tol = std::max(spec.rel_tol * 100.0, 1e-8);
    outer.abs_tol = std::max(spec.abs_tol * 100.0, 1e-12);
    SumRuleReport report;
    report.k = k;
    report.fixed_k_weight = integrate(integrand, 0.0, 0.5 * M_PI, outer);
    report.total_weight = std::numeric_limits<double>::quiet_NaN();
    report.tolerances = outer;
    return report;
}

double zone_weight(const QuadratureSpec& spec, int n_panels) {
    if (n_panels < 2 || n_panels % 2 != 0)
        throw DomainError(
            "zone_weight: n_panels must be even, so the k = pi singularity "
            "falls on a panel boundary instead of a quadrature node");
    // The per-point cost is dominated by the form-factor quadratures; relax
    // the inner tolerance, the composite rule cannot see below ~1e-9 anyway.
    QuadratureSpec inner = spec;
    inner.rel_tol = std::max(spec.rel_tol, 1e-8);
    double sum = 0.0;
    const double h = 2.0 * M_PI / n_panels;
    for (int p = 0; p < n_panels; ++p) {
        const double a = p * h;
        sum += qk::evaluate(
                   [&](double k) { return fixed_k_weight(k, inner).fixed_k_weight; },
                   a, a + h)
                   .value;
    }
    return sum / (2.0 * M_PI);
}

}  // namespace spinon
