#pragma once

#include "spinon/errors.hpp"

namespace spinon {

// Single-spinon dispersion on the isotropic chain (units fixed by e = pi/cosh).
// e in (0, pi], p in (-pi, 0), e(beta) = -pi sin p(beta), cot p = sinh beta.

double spinon_energy(double beta);    // pi / cosh(beta)
double spinon_momentum(double beta);  // -pi/2 - gd(beta)

struct Band {
    double lower;  // pi |sin k|
    double upper;  // 2 pi sin(k/2)
};
Band band_boundaries(double k);  // k in [0, 2pi]

struct RapidityPair {
    double beta1;
    double beta2;  // beta1 <= beta2
};

// Solve e(b1)+e(b2) = w, p(b1)+p(b2) = -k (mod 2pi) for w strictly inside the
// two-spinon band at k. Throws DegenerateWindow at k = 0 or 2pi, OutsideBand
// when w is not strictly between the band edges.
RapidityPair invert_kinematics(double w, double k);

}  // namespace spinon
