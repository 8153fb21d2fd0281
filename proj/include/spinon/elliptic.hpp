#pragma once

#include "spinon/errors.hpp"

namespace spinon {

// Modulus data carried as a triple (m, mc, log_mc) plus the nome, so that
// moduli exponentially close to 1 keep full precision: mc comes from theta
// quotients (never from 1 - m), and log_mc stays meaningful after mc itself
// underflows.
struct EllipticModulus {
    double m;
    double mc;
    double log_mc;
    double nome;
    double K;        // complete integral at m
    double K_prime;  // complete integral at mc
};

double agm(double a, double b);  // a, b >= 0

// nome in [0, 1). Uses theta series directly for nome <= e^{-pi} and the
// dual nome exp(pi^2 / ln nome) above that, so both ends stay accurate.
EllipticModulus modulus_from_nome(double nome);

// Jacobi amplitude and dn. Small-nome regime: trigonometric q-series;
// large-nome regime: dual-nome sech/gudermannian sums. am(0) = 0 exactly.
double jacobi_am(double u, const EllipticModulus& mod);
double jacobi_dn(double u, const EllipticModulus& mod);

}  // namespace spinon
