#include "spinon/formfactor.hpp"

#include <cmath>
#include <complex>

#include "spinon/errors.hpp"
#include "spinon/special_functions.hpp"

namespace spinon {

namespace {

struct Rates {
    double p1, p2, p3;  // decay rates of the numerator exponentials
    double c;           // oscillation frequency 2 gamma / pi
};

Rates make_rates(double gamma, double delta, ASign sign) {
    const double s = 2.0 * delta / M_PI;
    const double c = 2.0 * gamma / M_PI;
    if (sign == ASign::minus) return {s, 4.0 - s, 2.0, c};
    return {2.0 + s, 6.0 - s, 4.0, c};
}

// Integrand of I, written entirely in decaying exponentials:
//   n(x) = 4 e^{-p3 x} (cosh(d x) cos(c x) - 1),   d = (p2 - p1)/2,
//   g(x) = (1 + e^{-2x}) (1 - e^{-4x}),
//   f(x) = n(x) / (x g(x)).
// The cosh*cos - 1 core is expanded as 2 sinh^2(dx/2) cos(cx) - 2 sin^2(cx/2),
// which has no cancellation anywhere; for large dx the sinh overflows and the
// plain exponential spread-out is exact instead.
double stable_integrand(double x, const Rates& r) {
    const double d = 0.5 * (r.p2 - r.p1);
    double num;
    if (d * x < 600.0) {
        const double sh = std::sinh(0.5 * d * x);
        const double sn = std::sin(0.5 * r.c * x);
        num = 4.0 * std::exp(-r.p3 * x) *
              (2.0 * sh * sh * std::cos(r.c * x) - 2.0 * sn * sn);
    } else {
        const double sn = std::sin(0.5 * r.c * x);
        num = 2.0 * (std::exp(-r.p1 * x) - 2.0 * std::exp(-r.p3 * x) +
                     std::exp(-r.p2 * x)) * std::cos(r.c * x) -
              8.0 * std::exp(-r.p3 * x) * sn * sn;
    }
    const double den = x * (1.0 + std::exp(-2.0 * x)) * (-std::expm1(-4.0 * x));
    return num / den;
}

// f(x) minus its slowest tail term 2 e^{-p1 x} cos(c x) / x; decays at least
// like e^{-2x}, so it is integrated with the substitution u = e^{-2(x - X)}.
double tail_remainder(double x, const Rates& r) {
    const double lead = 2.0 * std::exp(-r.p1 * x) * std::cos(r.c * x) / x;
    return stable_integrand(x, r) - lead;
}

double exponent_impl(double gamma, double delta, ASign sign,
                     const QuadratureSpec& spec) {
    const Rates r = make_rates(gamma, delta, sign);
    // The split is exact at any X > 0; pull it in when the integrand
    // oscillates fast so the head stays a bounded number of cycles.
    const double X = (r.c > 2.0)
                         ? std::max(2.0, std::min(spec.split_point, 60.0 / r.c))
                         : spec.split_point;

    const double head =
        integrate([&](double x) { return stable_integrand(x, r); }, 0.0, X, spec);

    // closed-form integral of the slow term over [X, inf):
    //   int_X^inf 2 e^{-p1 x} cos(c x) / x dx = 2 Re E1(X (p1 - i c)).
    double closed;
    if (sign == ASign::minus && delta == 0.0) {
        // p1 = 0: the term is pure cosine over x, only conditionally
        // convergent, and its integral is the cosine integral.
        closed = -2.0 * cosine_integral(r.c * X);
    } else {
        closed = 2.0 * exp_integral_e1({X * r.p1, -X * r.c}).real();
    }

    const double rest = integrate(
        [&](double u) {
            const double x = X - 0.5 * std::log(u);
            return tail_remainder(x, r) / (2.0 * u);
        },
        0.0, 1.0, spec);

    return head + closed + rest;
}

}  // namespace

double form_factor_exponent(double gamma, double delta, ASign sign,
                            const QuadratureSpec& spec) {
    if (!(delta >= 0.0 && delta < M_PI))
        throw DomainError("form_factor_exponent: delta must lie in [0, pi)");
    if (!std::isfinite(gamma))
        throw DomainError("form_factor_exponent: gamma not finite");
    return exponent_impl(std::abs(gamma), delta, sign, spec);
}

double abs_A_squared(double gamma, double delta, ASign sign,
                     const QuadratureSpec& spec) {
    if (!(delta >= 0.0 && delta < M_PI))
        throw DomainError("abs_A_squared: delta must lie in [0, pi)");
    if (!std::isfinite(gamma))
        throw DomainError("abs_A_squared: gamma not finite");
    const double g = std::abs(gamma);
    if (sign == ASign::minus && delta == 0.0 && g < 1e-12) return 0.0;
    return std::exp(-exponent_impl(g, delta, sign, spec));
}

double abs_A_minus_real(double gamma, const QuadratureSpec& spec) {
    return abs_A_squared(gamma, 0.0, ASign::minus, spec);
}

double combined_pair_product(const QuadratureSpec& spec) {
    // exponent integrand 2 (cosh x - 1) / (x sinh 2x), rewritten as
    // 2 e^{-x} (1 - e^{-x})^2 / (x (1 - e^{-4x})); -> 1/2 at 0.
    auto f = [](double x) {
        const double em = -std::expm1(-x);
        return 2.0 * std::exp(-x) * em * em / (x * (-std::expm1(-4.0 * x)));
    };
    const double X = spec.split_point;
    const double head = integrate(f, 0.0, X, spec);
    // tail decays like e^{-x}: substitute u = e^{-(x - X)}
    const double rest = integrate(
        [&](double u) {
            const double x = X - std::log(u);
            return f(x) / u;
        },
        0.0, 1.0, spec);
    return std::exp(-(head + rest));
}

double prefactor_constant(const QuadratureSpec& spec) {
    static const double value = [](const QuadratureSpec& s) {
        const double ap = abs_A_squared(0.0, 0.5 * M_PI, ASign::plus, s);
        const double am = abs_A_squared(0.0, 0.5 * M_PI, ASign::minus, s);
        const double g14 = gamma_fn(0.25);
        const double g34 = gamma_fn(0.75);
        return M_PI * M_PI * g34 * g34 / (4.0 * g14 * g14 * ap * am);
    }(spec);
    return value;
}

}  // namespace spinon
