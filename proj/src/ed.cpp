#include "spinon/ed.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "spinon/dcf.hpp"
#include "spinon/errors.hpp"

namespace spinon {

namespace {

unsigned rotate_site(unsigned s, int n) {
    // site j -> j+1 (bit j of s becomes bit j+1 of the result)
    const unsigned mask = (1u << n) - 1u;
    return ((s << 1) | (s >> (n - 1))) & mask;
}

int popcount(unsigned s) { return __builtin_popcount(s); }

// representative = smallest integer in the translation orbit
void orbit_info(unsigned s, int n, unsigned& rep, int& shift, int& period) {
    rep = s;
    shift = 0;
    period = n;
    unsigned t = s;
    for (int j = 1; j <= n; ++j) {
        t = rotate_site(t, n);
        if (t == s && j < period) period = j;
        if (t < rep) {
            rep = t;
            shift = j;
        }
    }
}

struct SectorBasis {
    std::vector<unsigned> reps;
    std::vector<int> periods;
    std::map<unsigned, int> index;  // rep -> position
};

SectorBasis sector_basis(int n, int n_down, int kappa) {
    SectorBasis basis;
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (popcount(s) != n_down) continue;
        unsigned rep;
        int shift, period;
        orbit_info(s, n, rep, shift, period);
        if (rep != s) continue;
        if ((static_cast<long long>(kappa) * period) % n != 0) continue;  // momentum incompatible
        basis.index[rep] = static_cast<int>(basis.reps.size());
        basis.reps.push_back(rep);
        basis.periods.push_back(period);
    }
    return basis;
}

// H|s> in the computational basis: diagonal zz energy plus -1 on each
// antiparallel bond flip. Bit convention: bit = 1 means spin down, z = 1-2bit.
void apply_bonds(const ChainSpec& spec, unsigned s, double& diag,
                 std::vector<std::pair<unsigned, double>>& flips) {
    const int n = spec.n_sites;
    const int n_bonds = (n == 2) ? 1 : n;  // N = 2: count the single bond once
    diag = 0.0;
    flips.clear();
    for (int b = 0; b < n_bonds; ++b) {
        const int a = b;
        const int c = (b + 1) % n;
        const int za = 1 - 2 * ((s >> a) & 1u);
        const int zc = 1 - 2 * ((s >> c) & 1u);
        diag += -0.5 * spec.delta * za * zc;
        if (za != zc)
            flips.emplace_back(s ^ ((1u << a) | (1u << c)), -1.0);
    }
}

struct SolvedBlock {
    SectorBasis basis;
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;
};

Eigen::MatrixXcd block_matrix(const ChainSpec& spec, const SectorBasis& basis,
                              int kappa) {
    const int n = spec.n_sites;
    const double k_phys = 2.0 * M_PI * kappa / n;
    const int dim = static_cast<int>(basis.reps.size());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<std::pair<unsigned, double>> flips;
    for (int a = 0; a < dim; ++a) {
        double diag;
        apply_bonds(spec, basis.reps[a], diag, flips);
        h(a, a) += diag;
        for (auto& [s2, coeff] : flips) {
            unsigned rep;
            int shift, period;
            orbit_info(s2, n, rep, shift, period);
            auto it = basis.index.find(rep);
            if (it == basis.index.end()) continue;  // orbit not in this momentum block
            const int b = it->second;
            // s2 = T^{-shift} rep, so the translated-basis element carries
            // e^{ik l} with l = -shift (mod N)
            const std::complex<double> phase(std::cos(k_phys * shift),
                                             -std::sin(k_phys * shift));
            h(b, a) += coeff * phase *
                       std::sqrt(static_cast<double>(basis.periods[a]) /
                                 static_cast<double>(basis.periods[b]));
        }
    }
    return h;
}

SolvedBlock solve_block(const ChainSpec& spec, int n_down, int kappa) {
    SolvedBlock sb;
    sb.basis = sector_basis(spec.n_sites, n_down, kappa);
    Eigen::MatrixXcd h = block_matrix(spec, sb.basis, kappa);
    if (h.rows() == 0) {
        sb.evals.resize(0);
        sb.evecs.resize(0, 0);
        return sb;
    }
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw ConvergenceFailure("ed block assembly lost hermiticity");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (h + Eigen::MatrixXcd(h.adjoint())));
    sb.evals = es.eigenvalues();
    sb.evecs = es.eigenvectors();
    return sb;
}

// |r, kappa> expanded over computational states: sqrt(R)/N sum_j e^{-ikj} T^j|r>
void expand_symmetrized(const SectorBasis& basis, const Eigen::VectorXcd& coef,
                        int n, int kappa, Eigen::VectorXcd& comp) {
    const double k_phys = 2.0 * M_PI * kappa / n;
    comp.setZero();
    for (int a = 0; a < static_cast<int>(basis.reps.size()); ++a) {
        const double norm = std::sqrt(static_cast<double>(basis.periods[a])) / n;
        unsigned t = basis.reps[a];
        for (int j = 0; j < n; ++j) {
            const std::complex<double> phase(std::cos(k_phys * j),
                                             -std::sin(k_phys * j));
            comp(t) += coef(a) * norm * phase;
            t = rotate_site(t, n);
        }
    }
}

// <r_b, kappa | v> for every representative: sqrt(R_b)/N sum_j e^{+ikj} v[T^j r_b]
Eigen::VectorXcd project_symmetrized(const SectorBasis& basis,
                                     const Eigen::VectorXcd& v, int n, int kappa) {
    const double k_phys = 2.0 * M_PI * kappa / n;
    Eigen::VectorXcd out(basis.reps.size());
    for (int b = 0; b < static_cast<int>(basis.reps.size()); ++b) {
        std::complex<double> acc = 0.0;
        unsigned t = basis.reps[b];
        for (int j = 0; j < n; ++j) {
            const std::complex<double> phase(std::cos(k_phys * j),
                                             std::sin(k_phys * j));
            acc += phase * v(t);
            t = rotate_site(t, n);
        }
        out(b) = acc * std::sqrt(static_cast<double>(basis.periods[b])) /
                 static_cast<double>(n);
    }
    return out;
}

Eigen::VectorXcd sigma_minus_k(const Eigen::VectorXcd& gs_comp, int n, int k_index) {
    const double k_phys = 2.0 * M_PI * k_index / n;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(gs_comp.size());
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (unsigned s = 0; s < static_cast<unsigned>(gs_comp.size()); ++s) {
        const std::complex<double> amp = gs_comp(s);
        if (amp == std::complex<double>(0.0, 0.0)) continue;
        for (int site = 0; site < n; ++site) {
            if ((s >> site) & 1u) continue;  // already down
            const std::complex<double> phase(std::cos(k_phys * site),
                                             std::sin(k_phys * site));
            v(s | (1u << site)) += amp * phase * inv_sqrt_n;
        }
    }
    return v;
}

std::vector<SpectralLine> merge_lines(std::vector<SpectralLine> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const SpectralLine& a, const SpectralLine& b) {
                  return a.omega < b.omega;
              });
    std::vector<SpectralLine> merged;
    for (const auto& line : raw) {
        if (!merged.empty() && line.omega - merged.back().omega < 1e-10) {
            SpectralLine& last = merged.back();
            const double w = last.weight + line.weight;
            if (w > 0.0)
                last.omega = (last.omega * last.weight + line.omega * line.weight) / w;
            last.weight = w;
        } else {
            merged.push_back(line);
        }
    }
    return merged;
}

}  // namespace

void validate(const ChainSpec& spec) {
    if (spec.n_sites < 2 || spec.n_sites > 14)
        throw SizeError("ChainSpec: n_sites must lie in 2..14");
    if (spec.n_sites % 2 != 0)
        throw SizeError("ChainSpec: n_sites must be even");
    if (!spec.periodic)
        throw DomainError("ChainSpec: only the periodic chain is supported");
    if (!std::isfinite(spec.delta))
        throw DomainError("ChainSpec: delta not finite");
}

MomentumBlock build_hamiltonian(const ChainSpec& spec, int n_down, int kappa) {
    validate(spec);
    if (n_down < 0 || n_down > spec.n_sites)
        throw DomainError("build_hamiltonian: n_down out of range");
    if (kappa < 0 || kappa >= spec.n_sites)
        throw DomainError("build_hamiltonian: kappa out of range");
    MomentumBlock block;
    SectorBasis basis = sector_basis(spec.n_sites, n_down, kappa);
    block.h = block_matrix(spec, basis, kappa);
    block.reps = std::move(basis.reps);
    block.periods = std::move(basis.periods);
    return block;
}

GroundState ground_state(const ChainSpec& spec) {
    validate(spec);
    const int n = spec.n_sites;
    double best = std::numeric_limits<double>::infinity();
    int best_kappa = -1;
    Eigen::VectorXcd best_vec;
    SectorBasis best_basis;
    for (int kappa = 0; kappa < n; ++kappa) {
        SolvedBlock sb = solve_block(spec, n / 2, kappa);
        if (sb.evals.size() == 0) continue;
        if (sb.evals(0) < best - 1e-14) {
            best = sb.evals(0);
            best_kappa = kappa;
            best_vec = sb.evecs.col(0);
            best_basis = std::move(sb.basis);
        }
    }
    GroundState gs;
    gs.energy = best;
    gs.kappa = best_kappa;
    gs.comp.resize(1 << n);
    expand_symmetrized(best_basis, best_vec, n, best_kappa, gs.comp);
    // deterministic global phase: first nonzero amplitude positive real
    for (int i = 0; i < gs.comp.size(); ++i) {
        const double mag = std::abs(gs.comp(i));
        if (mag > 1e-12) {
            gs.comp *= std::conj(gs.comp(i)) / mag;
            break;
        }
    }
    return gs;
}

namespace {

struct TargetSector {
    std::vector<SolvedBlock> blocks;  // one per kappa
};

TargetSector solve_target_sector(const ChainSpec& spec) {
    TargetSector t;
    const int n_down = spec.n_sites / 2 + 1;
    for (int kappa = 0; kappa < spec.n_sites; ++kappa)
        t.blocks.push_back(solve_block(spec, n_down, kappa));
    return t;
}

std::vector<SpectralLine> lines_for_k(const ChainSpec& spec, const GroundState& gs,
                                      const TargetSector& target, int k_index,
                                      double& total) {
    const Eigen::VectorXcd v = sigma_minus_k(gs.comp, spec.n_sites, k_index);
    total = v.squaredNorm();
    std::vector<SpectralLine> raw;
    for (int kappa = 0; kappa < spec.n_sites; ++kappa) {
        const SolvedBlock& sb = target.blocks[kappa];
        if (sb.evals.size() == 0) continue;
        const Eigen::VectorXcd vs =
            project_symmetrized(sb.basis, v, spec.n_sites, kappa);
        const Eigen::VectorXcd overlaps = sb.evecs.adjoint() * vs;
        for (int f = 0; f < overlaps.size(); ++f) {
            const double w = std::norm(overlaps(f));
            if (w > 1e-16)
                raw.push_back({sb.evals(f) - gs.energy, w});
        }
    }
    return merge_lines(std::move(raw));
}

}  // namespace

LehmannResult lehmann_dcf(const ChainSpec& spec, int k_index, double eta,
                          int curve_points) {
    validate(spec);
    if (k_index < 0 || k_index >= spec.n_sites)
        throw DomainError("lehmann_dcf: k_index out of range");
    if (!(eta > 0.0)) throw DomainError("lehmann_dcf: eta must be positive");
    const GroundState gs = ground_state(spec);
    const TargetSector target = solve_target_sector(spec);

    LehmannResult out;
    out.k_index = k_index;
    out.eta = eta;
    out.lines = lines_for_k(spec, gs, target, k_index, out.static_expectation);
    out.total_weight = 0.0;
    for (const auto& line : out.lines) out.total_weight += line.weight;

    if (curve_points > 1) {
        double w_hi = 2.2 * M_PI;
        for (const auto& line : out.lines)
            w_hi = std::max(w_hi, line.omega + 5.0 * eta);
        for (int i = 0; i < curve_points; ++i) {
            const double w = w_hi * i / (curve_points - 1);
            double s = 0.0;
            for (const auto& line : out.lines)
                s += line.weight * (eta / M_PI) /
                     ((w - line.omega) * (w - line.omega) + eta * eta);
            out.curve_w.push_back(w);
            out.curve_s.push_back(2.0 * M_PI * s);  // overlay scale for the grid schema
        }
    }
    return out;
}

BandSupportReport band_support_report(const ChainSpec& spec,
                                      const QuadratureSpec& quad) {
    validate(spec);
    const int n = spec.n_sites;
    const GroundState gs = ground_state(spec);
    const TargetSector target = solve_target_sector(spec);

    BandSupportReport report;
    report.spec = spec;
    report.ground_energy = gs.energy;
    report.band_pad = 4.0 * M_PI / n;
    report.completeness = 0.0;
    double acc_direct = 0.0, acc_shifted = 0.0;
    int counted = 0;

    for (int k_index = 0; k_index < n; ++k_index) {
        BandSupportRow row;
        row.k_index = k_index;
        row.k_lat = 2.0 * M_PI * k_index / n;
        row.q_eff = std::fmod(row.k_lat + M_PI, 2.0 * M_PI);
        const std::vector<SpectralLine> lines =
            lines_for_k(spec, gs, target, k_index, row.total_weight);
        report.completeness += row.total_weight / n;

        auto window_weight = [&](double kk) {
            const Band b = band_boundaries(kk);
            double acc = 0.0;
            for (const auto& line : lines)
                if (line.omega >= b.lower - report.band_pad &&
                    line.omega <= b.upper + report.band_pad)
                    acc += line.weight;
            return acc;
        };
        row.in_band_direct = window_weight(row.k_lat);
        row.in_band_shifted = window_weight(row.q_eff);
        const bool has_weight = row.total_weight > 1e-12;
        row.share_direct = has_weight ? row.in_band_direct / row.total_weight : 0.0;
        row.share_shifted = has_weight ? row.in_band_shifted / row.total_weight : 0.0;

        row.lowest_omega = std::numeric_limits<double>::quiet_NaN();
        for (const auto& line : lines)
            if (line.weight > 1e-10 * std::max(row.total_weight, 1e-300)) {
                row.lowest_omega = line.omega;
                break;
            }

        row.analytic_weight = std::numeric_limits<double>::quiet_NaN();
        row.weight_ratio = std::numeric_limits<double>::quiet_NaN();
        // Stays NaN at q_eff = pi (k_index = 0), where the fixed-k integral
        // diverges, and at the degenerate zone corners.
        if (row.q_eff > 1e-9 && row.q_eff < 2.0 * M_PI - 1e-9 &&
            std::abs(row.q_eff - M_PI) > 1e-9) {
            row.analytic_weight =
                fixed_k_weight(row.q_eff, quad).fixed_k_weight / (2.0 * M_PI);
            if (has_weight)
                row.weight_ratio = row.in_band_shifted / row.analytic_weight;
        }

        if (has_weight) {
            acc_direct += row.share_direct;
            acc_shifted += row.share_shifted;
            ++counted;
        }
        report.rows.push_back(row);
    }
    report.mean_share_direct = counted ? acc_direct / counted : 0.0;
    report.mean_share_shifted = counted ? acc_shifted / counted : 0.0;
    report.convention = report.mean_share_shifted >= report.mean_share_direct
                            ? "pi-shifted (q_eff = k_lat + pi)"
                            : "direct (q_eff = k_lat)";
    return report;
}

}  // namespace spinon
