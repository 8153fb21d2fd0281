#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinon/quadrature.hpp"

namespace spinon {

struct ChainSpec {
    int n_sites;          // even, 2..14
    double delta = -1.0;  // anisotropy in H = -(1/2) sum (xx + yy + delta zz)
    bool periodic = true;
};
void validate(const ChainSpec& spec);  // SizeError / DomainError

// Symmetrized momentum block of the chain Hamiltonian in the sector with
// n_down flipped spins, lattice momentum index kappa (k = 2 pi kappa / N).
struct MomentumBlock {
    std::vector<unsigned> reps;    // orbit representatives, ascending
    std::vector<int> periods;      // orbit period of each representative
    Eigen::MatrixXcd h;
};
MomentumBlock build_hamiltonian(const ChainSpec& spec, int n_down, int kappa);

struct GroundState {
    double energy;
    int kappa;                  // momentum index of the winning block
    Eigen::VectorXcd comp;      // amplitudes in the computational basis (dim 2^N)
};
// Lowest eigenpair over all momentum blocks of the Sz = 0 sector, expanded to
// the computational basis with the first nonzero amplitude rotated positive
// real (deterministic global phase).
GroundState ground_state(const ChainSpec& spec);

struct SpectralLine {
    double omega;
    double weight;
};

struct LehmannResult {
    int k_index;
    double eta;
    std::vector<SpectralLine> lines;  // merged within 1e-10, ascending omega
    double total_weight;              // sum of line weights
    double static_expectation;        // <0| sigma^+_{-k} sigma^-_k |0>
    std::vector<double> curve_w;
    std::vector<double> curve_s;      // 2 pi sum_f w_f Lorentzian_eta(w - omega_f)
};
LehmannResult lehmann_dcf(const ChainSpec& spec, int k_index, double eta = 0.05 * M_PI,
                          int curve_points = 401);

struct BandSupportRow {
    int k_index;
    double k_lat;           // 2 pi k_index / N
    double q_eff;           // k_lat + pi folded to [0, 2pi): the matching convention
    double total_weight;
    double in_band_direct;   // weight inside the band window at k_lat
    double in_band_shifted;  // weight inside the band window at q_eff
    double share_direct;
    double share_shifted;
    double lowest_omega;     // smallest omega carrying weight; NaN if none
    double analytic_weight;  // fixed_k_weight(q_eff) / 2pi; NaN when degenerate
    double weight_ratio;     // in_band_shifted / analytic_weight; NaN when degenerate
};

struct BandSupportReport {
    ChainSpec spec;
    double ground_energy;
    double band_pad;                 // 4 pi / N finite-size allowance
    std::string convention;          // which momentum labelling matched the band
    double mean_share_direct;
    double mean_share_shifted;
    double completeness;             // (1/N) sum_k total_weight (= 1/2 exactly)
    std::vector<BandSupportRow> rows;
};
// Per-k comparison of the sigma^- excitation weight against the two-spinon
// band, including the analytic fixed-k weights for the recorded ratio.
BandSupportReport band_support_report(const ChainSpec& spec,
                                      const QuadratureSpec& quad = {});

}  // namespace spinon
