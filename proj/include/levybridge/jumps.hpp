#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "levybridge/grid.hpp"
#include "levybridge/noise.hpp"

namespace levy {

/// Levy jump density nu(y); pure-jump kinds, y != 0.
double levy_density(const NoiseKind& kind, double y);

/// eps-truncated driving law: total rate and (identically zero) compensator.
struct TruncatedLevy {
    NoiseKind kind;
    double eps;
    double lambda_eps;   ///< ∫_{|y|>eps} nu(dy)
    double b_eps;        ///< ∫_{|y|>eps} y/(1+y²) nu(dy) — zero for even nu

    static TruncatedLevy make(const NoiseKind& kind, double eps);
};

/// phi_eps(p) = ∫_{|y|>eps} (e^{ipy} - 1) nu(dy); real and <= 0 by symmetry.
/// Returned as complex per the characteristic-exponent signature (imag = 0 by
/// the paired construction).
std::complex<double> truncated_exponent(const NoiseKind& kind, double eps, double p);

/// A compound-Poisson sample path: position(t) = start + Σ_{times<=t} sizes.
struct JumpPath {
    double start = 0.0;
    double T = 0.0;
    std::vector<double> times;   ///< increasing, in (0, T]
    std::vector<double> sizes;   ///< same length, |size| > eps
    std::uint64_t seed = 0;

    double position(double t) const;
};

/// Exact simulation of the eps-truncated process on [0, T]:
/// exponential inter-arrival times at the proposal rate; Cauchy sizes by
/// inverse CDF (|Y| = eps/U), relativistic sizes by thinning the Cauchy
/// proposal with acceptance m|y| K1(m|y|) <= 1.
JumpPath sample_path(const TruncatedLevy& levy, double T, std::uint64_t master_seed,
                     std::uint64_t path_index = 0, double start = 0.0);

/// Positions X(t) for paths 0..n_paths-1, reproducible and order-independent
/// (per-path substreams; deterministic indexed writes).  Parallelized up to
/// the LEVY_BRIDGE_THREADS cap.
std::vector<double> simulate_positions(const TruncatedLevy& levy, double T, double t,
                                       int n_paths, std::uint64_t master_seed);

struct EmpiricalReport {
    double l1_error = 0.0;          ///< histogram vs analytic density (plus out-of-range mass)
    RealField histogram;            ///< empirical density on the grid cells
    double charfn_max_dev = 0.0;    ///< max_p |empirical cf - exp(t phi_eps(p))|
    double out_of_range = 0.0;      ///< empirical mass beyond the grid
};

/// Compare positions at time t against the analytic density of the full
/// (untruncated) law: Cauchy kernel k(0,0,x,t) or the relativistic closed
/// form.  Characteristic functions are compared at `n_charfn` p-values in
/// [-p_max, p_max] against exp(t phi_eps(p)).  Requires >= 10^4 samples.
EmpiricalReport empirical_vs_analytic(const std::vector<double>& positions, double t,
                                      const Grid1D& grid, const NoiseKind& kind, double eps,
                                      int n_charfn = 32, double p_max = 4.0);

/// Expected and observed jump counts with |size| in [a,b) per unit time.
struct BandRateReport {
    double expected_rate;    ///< ∫_band nu
    double observed_rate;    ///< mean count / T
    double standard_error;   ///< of the observed mean
};
BandRateReport jump_band_rate(const TruncatedLevy& levy, double T, int n_paths,
                              std::uint64_t master_seed, double a, double b);

/// Finite compound-Poisson characteristic function (Eqs. of the discrete
/// toolbox):  exp[Σ_j (i p b_j + λ_j (e^{i p y_j} - 1))].
struct PoissonSpec {
    std::vector<double> lambdas, sizes, shifts;
};
std::complex<double> poisson_char_fn(const PoissonSpec& spec, double p);

/// Borel set A = [a, b].
struct BorelInterval {
    double a, b;
    BorelInterval(double a_, double b_);
    bool contains(double x) const { return x >= a && x <= b; }
};

/// Jump-rate functional q(x,t,A) = ∫_{|y|>eps} W(x,y) [χ_A(x+y) - χ_A(x)] nu(dy)
/// with weight W:
///   ground:       θ(x+y)/θ(x)
///   quantum:      |ψ(x+y)/ψ(x)| + Im(ψ(x+y)/ψ(x))   (rearranged, nonnegative form)
///   quantum raw:  Im(ψ(x+y)/ψ(x))                    (can go negative off A)
/// The ν-quadrature is split exactly at the indicator discontinuities
/// y = a - x and y = b - x.
double jump_rate_ground(const RealField& theta, double x, const BorelInterval& A,
                        const NoiseKind& kind, double eps);
double jump_rate_quantum(const ComplexField& psi, double x, const BorelInterval& A,
                         const NoiseKind& kind, double eps, bool rearranged = true);

struct FokkerPlanckReport {
    double lhs = 0.0;        ///< d/dt ∫_A rho dx (central difference)
    double rhs = 0.0;        ///< ∫ q(x,t,A) rho(x,t) dx
    double residual = 0.0;   ///< |lhs - rhs|
};

/// Truncated jump Fokker-Planck balance for the semigroup flow of rho0.
FokkerPlanckReport fokker_planck_residual_semigroup(const RealField& rho0,
                                                    const NoiseKind& kind, double t,
                                                    const BorelInterval& A, double eps,
                                                    double dt = 1e-3);

/// Same balance for the unitary flow of psi0 with the quantum rate.
FokkerPlanckReport fokker_planck_residual_unitary(const ComplexField& psi0,
                                                  const NoiseKind& kind, double t,
                                                  const BorelInterval& A, double eps,
                                                  double dt = 1e-3);

}  // namespace levy
