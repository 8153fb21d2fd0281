#pragma once

#include "spinon/quadrature.hpp"

namespace spinon {

enum class ASign { plus, minus };

// exponent I in |A_sign(gamma + i delta)|^2 = exp(-I); delta in [0, pi).
double form_factor_exponent(double gamma, double delta, ASign sign,
                            const QuadratureSpec& spec = {});

// |A_sign|^2 at spectral argument gamma + i delta. Even in gamma (enforced
// bit-for-bit by folding the sign first). The conditionally convergent point
// sign=minus, delta=0, |gamma| < 1e-12 returns 0 exactly.
double abs_A_squared(double gamma, double delta, ASign sign,
                     const QuadratureSpec& spec = {});

// |A_-(gamma)|^2 on the real axis (the DCF hot path).
double abs_A_minus_real(double gamma, const QuadratureSpec& spec = {});

// |A_+(i pi/2)|^2 |A_-(i pi/2)|^2 evaluated through the analytically combined
// single integral (equals the product of the two factors; cross-check).
double combined_pair_product(const QuadratureSpec& spec = {});

// pi^2 Gamma(3/4)^2 / (4 Gamma(1/4)^2 |A_+(i pi/2)|^2 |A_-(i pi/2)|^2),
// memoized on first use (thread-safe).
double prefactor_constant(const QuadratureSpec& spec = {});

}  // namespace spinon
