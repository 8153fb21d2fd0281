#include <clocale>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinon/dcf.hpp"
#include "spinon/ed.hpp"
#include "spinon/errors.hpp"
#include "spinon/formfactor.hpp"
#include "spinon/kinematics.hpp"
#include "spinon/table_io.hpp"
#include "spinon/xxz.hpp"

namespace {

using spinon::format_g17;

std::string json_num(double v) {
    return std::isfinite(v) ? format_g17(v) : std::string("null");
}

std::string resolve_output(const std::string& name, const std::string& dir_flag) {
    if (name == "-" || name.empty()) return name;
    if (name.front() == '/') return name;
    std::string dir = dir_flag;
    if (dir.empty()) {
        if (const char* env = std::getenv("SPINON_OUTPUT_DIR")) dir = env;
    }
    if (dir.empty()) return name;
    if (dir.back() == '/') return dir + name;
    return dir + "/" + name;
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    spinon::write_text_atomic(path, content);
    std::printf("wrote %s\n", path.c_str());
}

void base_metadata(spinon::Table& t, const spinon::QuadratureSpec& spec) {
    t.metadata.emplace_back("tool_version", spinon::tool_version);
    t.metadata.emplace_back("rel_tol", format_g17(spec.rel_tol));
    t.metadata.emplace_back("abs_tol", format_g17(spec.abs_tol));
}

std::string check_q_open(const std::string& s) {
    const std::string msg = "q must lie in the open interval (-1, 0)";
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !(v > -1.0 && v < 0.0)) return msg;
    } catch (...) {
        return msg;
    }
    return {};
}

struct CommonOpts {
    std::string output_dir;
    std::string output;
    spinon::QuadratureSpec quad;
};

int run_dispersion(const CommonOpts& common, const std::string& model, double q,
                   double lo, double hi, int points) {
    spinon::Table t;
    base_metadata(t, common.quad);
    t.metadata.emplace_back("kind", "dispersion");
    t.metadata.emplace_back("model", model);
    if (model == "xxx") {
        t.metadata.emplace_back("convention", "e = pi/cosh(beta), p = -pi/2 - gd(beta)");
        t.columns = {"beta", "e", "p"};
        for (int i = 0; i < points; ++i) {
            const double beta = lo + (hi - lo) * i / (points - 1);
            t.rows.push_back(
                {beta, spinon::spinon_energy(beta), spinon::spinon_momentum(beta)});
        }
    } else {
        const spinon::Anisotropy aniso = spinon::solve_nome(q);
        t.metadata.emplace_back("q", format_g17(q));
        t.metadata.emplace_back("epsilon", format_g17(aniso.epsilon));
        t.metadata.emplace_back(
            "convention", "e = (2K/pi) sinh(pi K'/K) dn, p = am - pi/2, tau = -exp(-i p)");
        t.columns = {"alpha", "e", "p", "tau_re", "tau_im", "abs_tau_minus_1"};
        for (int i = 0; i < points; ++i) {
            const double alpha = lo + (hi - lo) * i / (points - 1);
            const std::complex<double> tv =
                spinon::tau(spinon::spectral_param(alpha), aniso);
            t.rows.push_back({alpha, spinon::xxz_energy(alpha, aniso),
                              spinon::xxz_momentum(alpha, aniso), tv.real(),
                              tv.imag(), std::abs(tv) - 1.0});
        }
    }
    emit(resolve_output(common.output.empty() ? "dispersion.csv" : common.output,
                        common.output_dir),
         render_csv(t));
    return 0;
}

int run_dcf_point(const CommonOpts& common, double w, double k) {
    const spinon::DcfPoint p = spinon::s2_pm_detail(w, k, common.quad);
    std::string out;
    out += "s_pm = " + format_g17(p.s_pm) + "\n";
    out += "s_xx = " + format_g17(4.0 * p.s_pm) + "\n";
    out += std::string("in_band = ") + (p.in_band ? "true" : "false") + "\n";
    if (p.in_band) {
        out += "beta1 = " + format_g17(p.rapidities.beta1) + "\n";
        out += "beta2 = " + format_g17(p.rapidities.beta2) + "\n";
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return 0;
}

int run_dcf_grid(const CommonOpts& common, const spinon::GridSpec& grid,
                 int threads) {
    const spinon::GridResult res = spinon::evaluate_grid(grid, common.quad, threads);
    spinon::Table t;
    base_metadata(t, common.quad);
    t.metadata.emplace_back("kind", "dcf-grid");
    t.metadata.emplace_back("k_min", format_g17(grid.k_min));
    t.metadata.emplace_back("k_max", format_g17(grid.k_max));
    t.metadata.emplace_back("n_k", std::to_string(grid.n_k));
    t.metadata.emplace_back("w_min", format_g17(grid.w_min));
    t.metadata.emplace_back("w_max", format_g17(grid.w_max));
    t.metadata.emplace_back("n_w", std::to_string(grid.n_w));
    t.metadata.emplace_back("convention",
                            "s_xx = s_yy = s_zz = 4 s_pm; zero outside the open band");
    t.metadata.emplace_back("failures", std::to_string(res.failures.size()));
    t.columns = {"k", "w", "s_pm", "s_xx"};
    for (const auto& row : res.rows)
        t.rows.push_back({row.k, row.w, row.s_pm, row.s_xx});
    emit(resolve_output(common.output.empty() ? "dcf_grid.csv" : common.output,
                        common.output_dir),
         render_csv(t));
    for (const auto& f : res.failures)
        std::fprintf(stderr, "point failure: %s\n", f.c_str());
    return res.failures.empty() ? 0 : 1;
}

int run_sumrule(const CommonOpts& common, const std::vector<double>& ks, bool total) {
    std::string j = "{\n";
    j += "  \"format_version\": 1,\n";
    j += "  \"kind\": \"sumrule\",\n";
    j += std::string("  \"tool_version\": \"") + spinon::tool_version + "\",\n";
    j += "  \"metadata\": {\"rel_tol\": " + json_num(common.quad.rel_tol) +
         ", \"abs_tol\": " + json_num(common.quad.abs_tol) +
         ", \"convention\": \"fixed_k_weight = int s_pm dw across the band\"},\n";
    j += "  \"entries\": [\n";
    for (size_t i = 0; i < ks.size(); ++i) {
        const spinon::SumRuleReport rep = spinon::fixed_k_weight(ks[i], common.quad);
        j += "    {\"k\": " + json_num(rep.k) +
             ", \"fixed_k_weight\": " + json_num(rep.fixed_k_weight) + "}";
        j += (i + 1 < ks.size()) ? ",\n" : "\n";
    }
    j += "  ],\n";
    j += "  \"total_weight\": " +
         (total ? json_num(spinon::zone_weight(common.quad)) : std::string("null")) +
         "\n";
    j += "}\n";
    emit(resolve_output(common.output.empty() ? "sumrule.json" : common.output,
                        common.output_dir),
         j);
    return 0;
}

int run_ed(const CommonOpts& common, int n_sites, double delta, int k_index,
           double eta, const std::string& prefix) {
    spinon::ChainSpec spec{n_sites, delta, true};
    const spinon::LehmannResult lr = spinon::lehmann_dcf(spec, k_index, eta);
    const spinon::BandSupportReport rep = spinon::band_support_report(spec, common.quad);
    const double q_eff = std::fmod(2.0 * M_PI * k_index / n_sites + M_PI, 2.0 * M_PI);

    spinon::Table lines;
    base_metadata(lines, common.quad);
    lines.metadata.emplace_back("kind", "ed-lines");
    lines.metadata.emplace_back("n_sites", std::to_string(n_sites));
    lines.metadata.emplace_back("delta", format_g17(delta));
    lines.metadata.emplace_back("k_index", std::to_string(k_index));
    lines.metadata.emplace_back("q_eff", format_g17(q_eff));
    lines.metadata.emplace_back("ground_energy", format_g17(rep.ground_energy));
    lines.metadata.emplace_back("total_weight", format_g17(lr.total_weight));
    lines.metadata.emplace_back("static_expectation", format_g17(lr.static_expectation));
    lines.columns = {"omega", "weight"};
    for (const auto& line : lr.lines) lines.rows.push_back({line.omega, line.weight});
    emit(resolve_output(prefix + "_lines.csv", common.output_dir), render_csv(lines));

    spinon::Table curve;
    base_metadata(curve, common.quad);
    curve.metadata.emplace_back("kind", "ed-curve");
    curve.metadata.emplace_back("n_sites", std::to_string(n_sites));
    curve.metadata.emplace_back("k_index", std::to_string(k_index));
    curve.metadata.emplace_back("eta", format_g17(eta));
    curve.metadata.emplace_back(
        "convention",
        "s_pm = 2 pi sum_f w_f eta/pi/((w-omega_f)^2+eta^2) at q_eff = k_lat + pi; "
        "s_xx mirrors the 4x channel convention of the analytic grids "
        "(finite-chain transverse relation itself is 2x)");
    curve.columns = {"k", "w", "s_pm", "s_xx"};
    for (size_t i = 0; i < lr.curve_w.size(); ++i)
        curve.rows.push_back({q_eff, lr.curve_w[i], lr.curve_s[i], 4.0 * lr.curve_s[i]});
    emit(resolve_output(prefix + "_curve.csv", common.output_dir), render_csv(curve));

    std::string j = "{\n";
    j += "  \"format_version\": 1,\n";
    j += "  \"kind\": \"ed-band-support\",\n";
    j += std::string("  \"tool_version\": \"") + spinon::tool_version + "\",\n";
    j += "  \"n_sites\": " + std::to_string(n_sites) + ",\n";
    j += "  \"delta\": " + json_num(delta) + ",\n";
    j += "  \"eta\": " + json_num(eta) + ",\n";
    j += "  \"ground_energy\": " + json_num(rep.ground_energy) + ",\n";
    j += "  \"band_pad\": " + json_num(rep.band_pad) + ",\n";
    j += "  \"convention\": \"" + spinon::json_escape(rep.convention) + "\",\n";
    j += "  \"mean_share_direct\": " + json_num(rep.mean_share_direct) + ",\n";
    j += "  \"mean_share_shifted\": " + json_num(rep.mean_share_shifted) + ",\n";
    j += "  \"completeness\": " + json_num(rep.completeness) + ",\n";
    j += "  \"rows\": [\n";
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = rep.rows[i];
        j += "    {\"k_index\": " + std::to_string(r.k_index) +
             ", \"k_lat\": " + json_num(r.k_lat) +
             ", \"q_eff\": " + json_num(r.q_eff) +
             ", \"total_weight\": " + json_num(r.total_weight) +
             ", \"in_band_direct\": " + json_num(r.in_band_direct) +
             ", \"in_band_shifted\": " + json_num(r.in_band_shifted) +
             ", \"share_direct\": " + json_num(r.share_direct) +
             ", \"share_shifted\": " + json_num(r.share_shifted) +
             ", \"lowest_omega\": " + json_num(r.lowest_omega) +
             ", \"analytic_weight\": " + json_num(r.analytic_weight) +
             ", \"weight_ratio\": " + json_num(r.weight_ratio) + "}";
        j += (i + 1 < rep.rows.size()) ? ",\n" : "\n";
    }
    j += "  ]\n}\n";
    emit(resolve_output(prefix + "_report.json", common.output_dir), j);
    return 0;
}

int run_limit_check(const CommonOpts& common, std::vector<double> eps,
                    std::vector<double> betas) {
    const spinon::LimitCheckReport rep = spinon::isotropic_limit_check(eps, betas);
    spinon::Table t;
    base_metadata(t, common.quad);
    t.metadata.emplace_back("kind", "limit-check");
    t.metadata.emplace_back("convergence_order", format_g17(rep.convergence_order));
    t.metadata.emplace_back("rescale_estimate", format_g17(rep.rescale_estimate));
    t.metadata.emplace_back(
        "convention",
        "alpha = -eps beta / pi; rescale constant is exactly 1 (empirical estimate above)");
    t.columns = {"eps", "beta", "alpha", "e_xxz", "e_iso", "e_err",
                 "p_xxz", "p_iso", "p_err"};
    for (const auto& r : rep.rows)
        t.rows.push_back({r.eps, r.beta, r.alpha, r.e_xxz, r.e_iso, r.e_err,
                          r.p_xxz, r.p_iso, r.p_err});
    emit(resolve_output(common.output.empty() ? "limit_check.csv" : common.output,
                        common.output_dir),
         render_csv(t));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"two-spinon dynamical correlations of the spin-1/2 chain"};
    app.set_config("--config", "", "read options from an INI file");
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--output-dir", common.output_dir,
                   "directory for output files (default: $SPINON_OUTPUT_DIR or cwd)");

    auto add_common = [&](CLI::App* cmd, bool with_output = true) {
        cmd->fallthrough();  // app-level options may follow the subcommand name
        if (with_output)
            cmd->add_option("-o,--output", common.output,
                            "output file name ('-' for stdout)");
        cmd->add_option("--rel-tol", common.quad.rel_tol, "quadrature relative tolerance");
        cmd->add_option("--abs-tol", common.quad.abs_tol, "quadrature absolute tolerance");
    };

    // dispersion
    auto* disp = app.add_subcommand("dispersion", "tabulate the spinon dispersion");
    std::string model = "xxx";
    double q_val = -0.5;
    double lo = NAN, hi = NAN;
    int points = 101;
    disp->add_option("--model", model, "xxx or xxz")
        ->check(CLI::IsMember({"xxx", "xxz"}));
    auto* qopt = disp->add_option("--q", q_val, "anisotropy nome, open interval (-1, 0)")
                     ->check(CLI::Validator(check_q_open, "Q_OPEN"));
    disp->add_option("--min", lo, "lower end of the beta/alpha range");
    disp->add_option("--max", hi, "upper end of the beta/alpha range");
    disp->add_option("--points", points, "number of sample points")
        ->check(CLI::Range(2, 1000000));
    add_common(disp);

    // dcf-point
    auto* point = app.add_subcommand("dcf-point", "evaluate the DCF at one (w, k)");
    double w_val = 0.0, k_val = 0.0;
    point->add_option("--w", w_val, "frequency")->required();
    point->add_option("--k", k_val, "momentum in [0, 2pi]")->required();
    add_common(point, false);

    // dcf-grid
    auto* gridcmd = app.add_subcommand("dcf-grid", "evaluate the DCF on a (k, w) grid");
    spinon::GridSpec grid;
    int threads = 1;
    gridcmd->add_option("--k-min", grid.k_min, "grid k lower bound");
    gridcmd->add_option("--k-max", grid.k_max, "grid k upper bound");
    gridcmd->add_option("--nk", grid.n_k, "k points")->check(CLI::Range(2, 100000));
    gridcmd->add_option("--w-min", grid.w_min, "grid w lower bound");
    gridcmd->add_option("--w-max", grid.w_max, "grid w upper bound");
    gridcmd->add_option("--nw", grid.n_w, "w points")->check(CLI::Range(2, 100000));
    gridcmd->add_option("--threads", threads, "worker threads (output is identical for any count)")
        ->check(CLI::Range(1, 256));
    add_common(gridcmd);

    // sumrule
    auto* sum = app.add_subcommand("sumrule", "frequency-integrated weight at fixed k");
    std::vector<double> sum_ks;
    bool sum_total = false;
    sum->add_option("--k", sum_ks, "momenta in (0, 2pi)")->required()->expected(-1);
    sum->add_flag("--total", sum_total, "also integrate over the zone");
    add_common(sum);

    // ed
    auto* edcmd = app.add_subcommand("ed", "finite-chain Lehmann diagnostics");
    int n_sites = 8, k_index = 0;
    double delta = -1.0, eta = 0.05 * M_PI;
    std::string prefix = "ed";
    edcmd->add_option("--n-sites", n_sites, "even chain length, 2..14")->required();
    edcmd->add_option("--delta", delta, "zz anisotropy (isotropic point: -1)");
    edcmd->add_option("--k-index", k_index, "lattice momentum index for lines/curve");
    edcmd->add_option("--eta", eta, "Lorentzian width")->check(CLI::PositiveNumber);
    edcmd->add_option("--prefix", prefix, "output file prefix");
    add_common(edcmd, false);

    // limit-check
    auto* lim = app.add_subcommand("limit-check", "xxz -> isotropic convergence table");
    std::vector<double> eps_list{0.5, 0.2, 0.1, 0.05};
    std::vector<double> beta_list{0.0, 0.5, 1.0, 2.0};
    lim->add_option("--eps", eps_list, "decreasing positive eps values")->expected(-1);
    lim->add_option("--beta", beta_list, "beta sample points")->expected(-1);
    add_common(lim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (disp->parsed()) {
            if (std::isnan(lo)) lo = (model == "xxx") ? -5.0 : -0.5 * M_PI;
            if (std::isnan(hi)) hi = (model == "xxx") ? 5.0 : 0.5 * M_PI;
            if (model == "xxz" && !qopt->count()) {
                std::fprintf(stderr,
                             "dispersion: --q is required for the xxz model\n");
                return 2;
            }
            return run_dispersion(common, model, q_val, lo, hi, points);
        }
        if (point->parsed()) return run_dcf_point(common, w_val, k_val);
        if (gridcmd->parsed()) return run_dcf_grid(common, grid, threads);
        if (sum->parsed()) return run_sumrule(common, sum_ks, sum_total);
        if (edcmd->parsed())
            return run_ed(common, n_sites, delta, k_index, eta, prefix);
        if (lim->parsed()) return run_limit_check(common, eps_list, beta_list);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
