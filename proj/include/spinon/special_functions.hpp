#pragma once

#include <complex>

namespace spinon {

inline constexpr double euler_gamma = 0.57721566490153286061;

// gd(x) = 2 atan(tanh(x/2)); odd, saturates at +-pi/2, overflow-free.
double gudermannian(double x);

// Gamma(x) for x > 0 (Lanczos; reflection handles x < 1/2).
double gamma_fn(double x);

// Exponential integral E1(z) for Re z >= 0, z != 0 (principal branch).
std::complex<double> exp_integral_e1(std::complex<double> z);

// Ci(x) = -Re E1(ix) for x > 0.
double cosine_integral(double x);

}  // namespace spinon
