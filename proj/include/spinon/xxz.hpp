#pragma once

#include <complex>
#include <vector>

#include "spinon/elliptic.hpp"

namespace spinon {

// q-product (y; x)_inf = prod_{n>=0} (1 - y x^n), |x| < 1.
std::complex<double> q_pochhammer(std::complex<double> y, std::complex<double> x);

// theta_x(y) = (x; x) (y; x) (x/y; x); |x| < 1, y != 0.
std::complex<double> theta_fn(std::complex<double> x, std::complex<double> y);

struct SpectralParam {
    double alpha;
    std::complex<double> xi;  // i e^{i alpha}
};
SpectralParam spectral_param(double alpha);

struct Anisotropy {
    double q;        // in (-1, 0)
    double epsilon;  // -ln(-q) = pi K'/K
    double K;
    double K_prime;
    double m;
    EllipticModulus mod;
};

// Solve pi K'/K = -ln(-q) for the modulus by bisection on log(mc)
// (dualized for epsilon > pi). Throws ConvergenceFailure if the budget runs
// out, DomainError unless q lies in the open interval (-1, 0).
Anisotropy solve_nome(double q, int max_iter = 200);

// tau(xi) = xi^{-1} theta_{q^4}(q xi^2) / theta_{q^4}(q xi^{-2}); unimodular.
// Phase bookkeeping on this branch: tau = -e^{-i p(alpha)}.
std::complex<double> tau(const SpectralParam& sp, const Anisotropy& aniso);

// e(alpha) = (2K/pi) sinh(pi K'/K) dn(2 K alpha / pi); positive, pi-periodic.
double xxz_energy(double alpha, const Anisotropy& aniso);

// p(alpha) = am(2 K alpha / pi) - pi/2; p(0) = -pi/2 exactly.
double xxz_momentum(double alpha, const Anisotropy& aniso);

struct LimitCheckRow {
    double eps, beta, alpha;
    double e_xxz, e_iso, e_err;
    double p_xxz, p_iso, p_err;
};

struct LimitCheckReport {
    std::vector<LimitCheckRow> rows;
    double convergence_order;   // fitted from the e errors across eps
    double rescale_estimate;    // mean e_iso / e_xxz at the smallest eps (-> 1)
};

// Tracks xxz_energy/momentum at alpha = -eps beta / pi against pi/cosh(beta)
// and -pi/2 - gd(beta) for a decreasing positive eps sequence.
LimitCheckReport isotropic_limit_check(const std::vector<double>& eps_seq,
                                       const std::vector<double>& betas);

}  // namespace spinon
