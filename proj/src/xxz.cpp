#include "spinon/xxz.hpp"

#include <cmath>

#include "spinon/special_functions.hpp"

namespace spinon {

std::complex<double> q_pochhammer(std::complex<double> y, std::complex<double> x) {
    const double ax = std::abs(x);
    if (!(ax < 1.0)) throw DomainError("q_pochhammer: needs |x| < 1");
    std::complex<double> prod = 1.0;
    std::complex<double> yxn = y;
    const double cut = 1e-17 * (1.0 - ax);
    for (int n = 0; n < 100000; ++n) {
        prod *= (1.0 - yxn);
        if (std::abs(yxn) < cut) return prod;
        yxn *= x;
    }
    throw ConvergenceFailure("q_pochhammer: truncation never reached");
}

std::complex<double> theta_fn(std::complex<double> x, std::complex<double> y) {
    if (y == std::complex<double>(0.0, 0.0))
        throw DomainError("theta_fn: y must be nonzero");
    if (!(std::abs(x) < 1.0)) throw DomainError("theta_fn: needs |x| < 1");
    return q_pochhammer(x, x) * q_pochhammer(y, x) * q_pochhammer(x / y, x);
}

SpectralParam spectral_param(double alpha) {
    const std::complex<double> i(0.0, 1.0);
    return {alpha, i * std::exp(i * alpha)};
}

namespace {

struct ModPair {
    double mc, log_mc, m;
};

// K and K' from the (mc, log_mc, m) triple; safe for mc underflowed to 0.
double K_of(const ModPair& p) {
    if (p.log_mc < -230.0) return std::log(4.0) - 0.5 * p.log_mc;
    return M_PI / (2.0 * agm(1.0, std::sqrt(p.mc)));
}

double Kp_of(const ModPair& p) {
    return M_PI / (2.0 * agm(1.0, std::sqrt(p.m)));
}

ModPair pair_from_log_mc(double x) {
    ModPair p;
    p.log_mc = x;
    p.mc = std::exp(x);
    p.m = -std::expm1(x);  // 1 - mc, exact near mc -> 0
    return p;
}

double ratio_of(const ModPair& p) { return M_PI * Kp_of(p) / K_of(p); }

// Bisection for pi K'/K = eps on x = log(mc), valid for eps <= pi (mc <= 1/2).
double solve_log_mc(double eps, int max_iter, int& used) {
    const double est = 2.0 * std::log(4.0) - M_PI * M_PI / eps;
    double lo = std::min(est - 4.0, std::log(0.5) - 1.0);
    double hi = std::min(est + 4.0, std::log(0.5));
    while (ratio_of(pair_from_log_mc(lo)) > eps) {
        lo -= 8.0;
        if (++used > max_iter)
            throw ConvergenceFailure("solve_nome: bracketing budget exhausted");
    }
    while (ratio_of(pair_from_log_mc(hi)) < eps && hi < std::log(0.5)) {
        hi = std::min(hi + 8.0, std::log(0.5));
        if (++used > max_iter)
            throw ConvergenceFailure("solve_nome: bracketing budget exhausted");
    }
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;
        const double f = ratio_of(pair_from_log_mc(mid));
        if (std::abs(f - eps) <= 1e-14 * std::max(1.0, eps)) return mid;
        (f < eps ? lo : hi) = mid;
        if (++used > max_iter)
            throw ConvergenceFailure("solve_nome: bisection budget exhausted");
    }
}

}  // namespace

Anisotropy solve_nome(double q, int max_iter) {
    if (!(q > -1.0 && q < 0.0))
        throw DomainError("solve_nome: q must lie in the open interval (-1, 0)");
    const double eps = -std::log(-q);
    int used = 0;

    EllipticModulus mod{};
    mod.nome = -q;
    if (eps <= M_PI) {
        const ModPair p = pair_from_log_mc(solve_log_mc(eps, max_iter, used));
        mod.m = p.m;
        mod.mc = p.mc;
        mod.log_mc = p.log_mc;
    } else {
        // dual problem: the complementary modulus solves eps' = pi^2 / eps
        const ModPair p = pair_from_log_mc(solve_log_mc(M_PI * M_PI / eps, max_iter, used));
        mod.m = p.mc;
        mod.mc = p.m;
        mod.log_mc = std::log1p(-p.mc);
    }
    mod.K = K_of({mod.mc, mod.log_mc, mod.m});
    mod.K_prime = Kp_of({mod.mc, mod.log_mc, mod.m});

    Anisotropy a{q, eps, mod.K, mod.K_prime, mod.m, mod};
    const double back = -std::exp(-M_PI * mod.K_prime / mod.K);
    if (!(std::abs(back - q) <= 1e-12 * std::max(1.0, std::abs(q))))
        throw ConvergenceFailure("solve_nome: nome round-trip check failed");
    return a;
}

std::complex<double> tau(const SpectralParam& sp, const Anisotropy& aniso) {
    const double q2 = aniso.q * aniso.q;
    const std::complex<double> q4 = q2 * q2;
    const std::complex<double> xi2 = sp.xi * sp.xi;
    return theta_fn(q4, aniso.q * xi2) / theta_fn(q4, aniso.q / xi2) / sp.xi;
}

double xxz_energy(double alpha, const Anisotropy& aniso) {
    const double u = 2.0 * aniso.K * alpha / M_PI;
    return (2.0 * aniso.K / M_PI) * std::sinh(aniso.epsilon) *
           jacobi_dn(u, aniso.mod);
}

double xxz_momentum(double alpha, const Anisotropy& aniso) {
    const double u = 2.0 * aniso.K * alpha / M_PI;
    return jacobi_am(u, aniso.mod) - 0.5 * M_PI;
}

LimitCheckReport isotropic_limit_check(const std::vector<double>& eps_seq,
                                       const std::vector<double>& betas) {
    if (eps_seq.size() < 2)
        throw DomainError("isotropic_limit_check: need at least two eps values");
    for (size_t i = 0; i < eps_seq.size(); ++i) {
        if (!(eps_seq[i] > 0.0))
            throw DomainError("isotropic_limit_check: eps must be positive");
        if (i > 0 && !(eps_seq[i] < eps_seq[i - 1]))
            throw DomainError("isotropic_limit_check: eps must decrease");
    }
    LimitCheckReport report;
    std::vector<double> worst(eps_seq.size(), 0.0);
    for (size_t i = 0; i < eps_seq.size(); ++i) {
        const double eps = eps_seq[i];
        const Anisotropy aniso = solve_nome(-std::exp(-eps));
        for (double beta : betas) {
            LimitCheckRow row;
            row.eps = eps;
            row.beta = beta;
            row.alpha = -eps * beta / M_PI;
            row.e_xxz = xxz_energy(row.alpha, aniso);
            row.e_iso = M_PI / std::cosh(beta);
            row.e_err = std::abs(row.e_xxz - row.e_iso);
            row.p_xxz = xxz_momentum(row.alpha, aniso);
            row.p_iso = -0.5 * M_PI - gudermannian(beta);
            row.p_err = std::abs(row.p_xxz - row.p_iso);
            worst[i] = std::max(worst[i], row.e_err);
            report.rows.push_back(row);
        }
    }
    // least-squares slope of ln(worst err) vs ln(eps)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < eps_seq.size(); ++i) {
        if (worst[i] <= 0.0) continue;
        const double x = std::log(eps_seq[i]);
        const double y = std::log(worst[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    report.convergence_order =
        (n >= 2) ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

    const Anisotropy last = solve_nome(-std::exp(-eps_seq.back()));
    double acc = 0.0;
    int cnt = 0;
    for (double beta : betas) {
        const double e = xxz_energy(-eps_seq.back() * beta / M_PI, last);
        if (e > 0.0) {
            acc += (M_PI / std::cosh(beta)) / e;
            ++cnt;
        }
    }
    report.rescale_estimate = cnt ? acc / cnt : 0.0;
    return report;
}

}  // namespace spinon
