#include "spinon/special_functions.hpp"

#include <cmath>
#include <limits>

#include "spinon/errors.hpp"

namespace spinon {

double gudermannian(double x) {
    return 2.0 * std::atan(std::tanh(0.5 * x));
}

namespace {

// Lanczos, g = 7, 9 coefficients; good to ~1e-15 relative on the real line.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

double lanczos_positive(double x) {
    // valid for x >= 0.5
    x -= 1.0;
    double a = lanczos_c[0];
    for (int i = 1; i < 9; ++i) a += lanczos_c[i] / (x + i);
    const double t = x + lanczos_g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: needs x > 0");
    if (x < 0.5)
        return M_PI / (std::sin(M_PI * x) * lanczos_positive(1.0 - x));
    return lanczos_positive(x);
}

std::complex<double> exp_integral_e1(std::complex<double> z) {
    const double az = std::abs(z);
    if (az == 0.0) throw DomainError("exp_integral_e1: z = 0");
    if (z.real() < 0.0) throw DomainError("exp_integral_e1: needs Re z >= 0");
    if (az <= 3.5) {
        // E1 = -euler_gamma - log z + sum (-1)^{k+1} z^k / (k k!)
        std::complex<double> sum = 0.0;
        std::complex<double> term = 1.0;  // z^k / k!
        for (int k = 1; k <= 60; ++k) {
            term *= z / static_cast<double>(k);
            const std::complex<double> contrib = term / static_cast<double>(k);
            sum += (k % 2 == 1) ? contrib : -contrib;
            if (std::abs(contrib) < 1e-18 * (std::abs(sum) + 1e-300))
                return -euler_gamma - std::log(z) + sum;
        }
        throw ConvergenceFailure("exp_integral_e1: series stalled");
    }
    // continued fraction E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))
    // evaluated with the modified Lentz method.
    const double tiny = 1e-300;
    std::complex<double> b = z + 1.0;
    std::complex<double> c = 1.0 / tiny;
    std::complex<double> dd = 1.0 / b;
    std::complex<double> h = dd;
    for (int i = 1; i <= 2000; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        dd = b + a * dd;
        if (std::abs(dd) < tiny) dd = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        dd = 1.0 / dd;
        const std::complex<double> del = c * dd;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-z);
    }
    throw ConvergenceFailure("exp_integral_e1: continued fraction stalled");
}

double cosine_integral(double x) {
    if (!(x > 0.0)) throw DomainError("cosine_integral: needs x > 0");
    return -exp_integral_e1(std::complex<double>(0.0, x)).real();
}

}  // namespace spinon
