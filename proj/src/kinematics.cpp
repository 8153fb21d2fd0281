#include "spinon/kinematics.hpp"

#include <cmath>

#include "spinon/special_functions.hpp"

namespace spinon {

double spinon_energy(double beta) {
    if (!std::isfinite(beta)) throw DomainError("spinon_energy: beta not finite");
    return M_PI / std::cosh(beta);
}

double spinon_momentum(double beta) {
    if (!std::isfinite(beta)) throw DomainError("spinon_momentum: beta not finite");
    return -0.5 * M_PI - gudermannian(beta);
}

Band band_boundaries(double k) {
    if (!(k >= 0.0 && k <= 2.0 * M_PI))
        throw DomainError("band_boundaries: k must lie in [0, 2pi]");
    return {M_PI * std::abs(std::sin(k)), 2.0 * M_PI * std::sin(0.5 * k)};
}

RapidityPair invert_kinematics(double w, double k) {
    const Band band = band_boundaries(k);
    // sin(pi) rounds to ~1e-16, so the zone ends leave a sliver rather than
    // an exact zero; anything this narrow is the collapsed window.
    if (band.upper <= 1e-12)
        throw DegenerateWindow("invert_kinematics: band has zero width at k = 0 or 2pi");
    if (!(w > band.lower && w < band.upper))
        throw OutsideBand("invert_kinematics: w outside the open two-spinon band");
    // Momenta p1 = -k/2 + D, p2 = -k/2 - D with D = acos(w / w_u); the band
    // bounds keep both strictly inside (-pi, 0), where cot is monotone
    // decreasing, so beta1 < beta2 comes out automatically.
    const double D = std::acos(w / band.upper);
    // Distances of p1 below 0 and of p2 above -pi. Near the lower edge one of
    // them underflows through acos rounding; rebuild it from w - w_l, which
    // is first order in the same quantity (cos D - cos(k/2) = (w - w_l)/w_u).
    double r1 = 0.5 * k - D;
    double r2 = M_PI - 0.5 * k - D;
    if (r1 <= 0.0 || r2 <= 0.0) {
        const double gap = (w - band.lower) / (band.upper * std::sin(0.5 * k));
        if (r1 <= 0.0) r1 = gap;
        if (r2 <= 0.0) r2 = gap;
    }
    const double p1 = -r1;
    const double p2 = -(M_PI - r2);
    const double b1 = std::asinh(std::cos(p1) / std::sin(p1));
    const double b2 = std::asinh(std::cos(p2) / std::sin(p2));
    return {b1, b2};
}

}  // namespace spinon
