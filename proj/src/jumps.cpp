#include "levybridge/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levybridge/bessel.hpp"
#include "levybridge/kernels.hpp"
#include "levybridge/parallel.hpp"
#include "levybridge/rng.hpp"
#include "levybridge/spectral.hpp"

namespace levy {

namespace {
constexpr double kPi = std::numbers::pi;

template <typename F>
double simpson(F&& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
    return s * h / 3.0;
}

// periodic 4-point Lagrange interpolation
double interp_field(const RealField& f, double x) {
    const auto& g = f.grid();
    const std::size_t n = g.n();
    const double u = (x - g.x_min()) / g.dx();
    const double fl = std::floor(u);
    const double t = u - fl;
    const auto j0 = static_cast<std::ptrdiff_t>(fl);
    auto at = [&](std::ptrdiff_t j) {
        return f[static_cast<std::size_t>(((j % static_cast<std::ptrdiff_t>(n)) + n) % n)];
    };
    const double fm1 = at(j0 - 1), f0 = at(j0), f1 = at(j0 + 1), f2 = at(j0 + 2);
    const double lm1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double l0 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double l1 = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double l2 = (t + 1.0) * t * (t - 1.0) / 6.0;
    return lm1 * fm1 + l0 * f0 + l1 * f1 + l2 * f2;
}

cplx interp_field(const ComplexField& f, double x) {
    const auto& g = f.grid();
    const std::size_t n = g.n();
    const double u = (x - g.x_min()) / g.dx();
    const double fl = std::floor(u);
    const double t = u - fl;
    const auto j0 = static_cast<std::ptrdiff_t>(fl);
    auto at = [&](std::ptrdiff_t j) {
        return f[static_cast<std::size_t>(((j % static_cast<std::ptrdiff_t>(n)) + n) % n)];
    };
    const cplx fm1 = at(j0 - 1), f0 = at(j0), f1 = at(j0 + 1), f2 = at(j0 + 2);
    const double lm1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double l0 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double l1 = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double l2 = (t + 1.0) * t * (t - 1.0) / 6.0;
    return lm1 * fm1 + l0 * f0 + l1 * f1 + l2 * f2;
}

}  // namespace

double levy_density(const NoiseKind& kind, double y) { return kind.levy_density(y); }

TruncatedLevy TruncatedLevy::make(const NoiseKind& kind, double eps) {
    if (!kind.pure_jump()) throw InvalidArgument("TruncatedLevy: pure-jump kinds only");
    if (!(eps > 0.0)) throw InvalidArgument("TruncatedLevy: eps must be positive");
    return TruncatedLevy{kind, eps, 2.0 * kind.levy_tail_mass(eps), 0.0};
}

std::complex<double> truncated_exponent(const NoiseKind& kind, double eps, double p) {
    if (!kind.pure_jump()) throw InvalidArgument("truncated_exponent: pure-jump kinds only");
    if (!(eps > 0.0)) throw InvalidArgument("truncated_exponent: eps must be positive");
    const double ap = std::abs(p);
    auto integrand = [&](double y) { return (std::cos(p * y) - 1.0) * kind.levy_density(y); };
    double total = 0.0;
    const double y1 = std::max(eps * 4.0, 1.0);
    // log segment: (cos(py)-1) nu ~ -p² / (2π) near 0, smooth in log y
    total += simpson([&](double v) {
        const double y = std::exp(v);
        return integrand(y) * y;
    }, std::log(eps), std::log(y1), std::max(96, static_cast<int>(64 * std::log10(y1 / eps))));
    // linear segment resolving the oscillation
    const double Y = (kind.tag == NoiseTag::Cauchy) ? 2000.0 : std::max(y1 + 1.0, 60.0 / kind.m);
    const double dy = std::min(0.05, 0.2 / std::max(1.0, ap));
    total += simpson(integrand, y1, Y, static_cast<int>((Y - y1) / dy) + 2);
    // tail: cos averages out, the -1 term remains
    total -= kind.levy_tail_mass(Y);
    return {2.0 * total, 0.0};
}

double JumpPath::position(double t) const {
    double x = start;
    for (std::size_t i = 0; i < times.size() && times[i] <= t; ++i) x += sizes[i];
    return x;
}

JumpPath sample_path(const TruncatedLevy& levy, double T, std::uint64_t master_seed,
                     std::uint64_t path_index, double start) {
    if (!(T > 0.0)) throw InvalidArgument("sample_path: T must be positive");
    Xoshiro256pp rng(master_seed, path_index);
    JumpPath path;
    path.start = start;
    path.T = T;
    path.seed = master_seed;

    // Proposal process: eps-truncated Cauchy (rate 2/(pi eps), |Y| = eps/U).
    // For the relativistic kind the proposal is thinned with acceptance
    // m|y| K1(m|y|) = nu_m(y)/nu_0(y) <= 1, which realises nu_m exactly.
    const bool thin = (levy.kind.tag == NoiseTag::Relativistic);
    const double proposal_rate = 2.0 / (kPi * levy.eps);
    double t = 0.0;
    while (true) {
        t += rng.exponential(proposal_rate);
        if (t > T) break;
        const double size = rng.sign() * levy.eps / rng.uniform();
        if (thin) {
            const double z = levy.kind.m * std::abs(size);
            const double accept = z * bessel_k1(z);
            if (rng.uniform() > accept) continue;
        }
        path.times.push_back(t);
        path.sizes.push_back(size);
    }
    return path;
}

std::vector<double> simulate_positions(const TruncatedLevy& levy, double T, double t,
                                       int n_paths, std::uint64_t master_seed) {
    if (!(t <= T)) throw InvalidArgument("simulate_positions: t must not exceed T");
    std::vector<double> out(static_cast<std::size_t>(n_paths));
    parallel_for(out.size(), [&](std::size_t i) {
        out[i] = sample_path(levy, T, master_seed, i).position(t);
    });
    return out;
}

EmpiricalReport empirical_vs_analytic(const std::vector<double>& positions, double t,
                                      const Grid1D& grid, const NoiseKind& kind, double eps,
                                      int n_charfn, double p_max) {
    if (positions.size() < 10000)
        throw InvalidArgument("empirical_vs_analytic: need at least 10^4 paths");
    if (!kind.pure_jump()) throw InvalidArgument("empirical_vs_analytic: pure-jump kinds only");

    const std::size_t n = grid.n();
    const double dx = grid.dx();
    std::vector<double> counts(n, 0.0);
    std::size_t outside = 0;
    for (double x : positions) {
        const double u = (x - grid.x_min()) / dx + 0.5;   // cells centred on nodes
        if (u < 0.0 || u >= static_cast<double>(n)) {
            ++outside;
            continue;
        }
        counts[static_cast<std::size_t>(u)] += 1.0;
    }
    const double N = static_cast<double>(positions.size());

    const KernelKind analytic = (kind.tag == NoiseTag::Cauchy)
                                    ? KernelKind::cauchy()
                                    : KernelKind::relativistic(kind.m);
    double l1 = 0.0;
    double analytic_in_range = 0.0;
    std::vector<double> hist(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = grid.x(j) - 0.5 * dx;
        const double cell_prob = simpson(
            [&](double x) { return kernel_eval(analytic, 0.0, 0.0, x, t); }, a, a + dx, 4);
        analytic_in_range += cell_prob;
        l1 += std::abs(counts[j] / N - cell_prob);
        hist[j] = counts[j] / (N * dx);
    }
    l1 += std::abs(static_cast<double>(outside) / N - (1.0 - analytic_in_range));

    EmpiricalReport report{l1, RealField(grid, std::move(hist)), 0.0,
                           static_cast<double>(outside) / N};

    for (int k = 0; k < n_charfn; ++k) {
        const double p = -p_max + 2.0 * p_max * (k + 0.5) / n_charfn;
        cplx emp{0.0, 0.0};
        for (double x : positions) emp += std::polar(1.0, p * x);
        emp /= N;
        const cplx model = std::exp(t * truncated_exponent(kind, eps, p));
        report.charfn_max_dev = std::max(report.charfn_max_dev, std::abs(emp - model));
    }
    return report;
}

BandRateReport jump_band_rate(const TruncatedLevy& levy, double T, int n_paths,
                              std::uint64_t master_seed, double a, double b) {
    if (!(0.0 < a && a < b)) throw InvalidArgument("jump_band_rate: need 0 < a < b");
    std::vector<double> counts(static_cast<std::size_t>(n_paths));
    parallel_for(counts.size(), [&](std::size_t i) {
        const auto path = sample_path(levy, T, master_seed, i);
        double c = 0.0;
        for (double s : path.sizes) {
            const double az = std::abs(s);
            if (az >= a && az < b) c += 1.0;
        }
        counts[i] = c;
    });
    double mean = 0.0;
    for (double c : counts) mean += c;
    mean /= static_cast<double>(n_paths);
    double var = 0.0;
    for (double c : counts) var += (c - mean) * (c - mean);
    var /= std::max(1.0, static_cast<double>(n_paths - 1));
    const double expected = 2.0 * (levy.kind.levy_tail_mass(a) - levy.kind.levy_tail_mass(b));
    return BandRateReport{expected, mean / T,
                          std::sqrt(var / static_cast<double>(n_paths)) / T};
}

std::complex<double> poisson_char_fn(const PoissonSpec& spec, double p) {
    if (spec.lambdas.size() != spec.sizes.size() ||
        (!spec.shifts.empty() && spec.shifts.size() != spec.sizes.size()))
        throw InvalidArgument("poisson_char_fn: component size mismatch");
    cplx expo{0.0, 0.0};
    for (std::size_t j = 0; j < spec.lambdas.size(); ++j) {
        expo += spec.lambdas[j] * (std::polar(1.0, p * spec.sizes[j]) - 1.0);
        if (!spec.shifts.empty()) expo += cplx{0.0, p * spec.shifts[j]};
    }
    return std::exp(expo);
}

BorelInterval::BorelInterval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) throw InvalidArgument("BorelInterval: a < b required");
}

namespace {

// ∫ W(x+y)/W(x) nu(y) dy over [lo, hi] with 0 outside the truncation radius;
// log-spaced nodes when the interval spans the nu singularity scale.
template <typename Weight>
double nu_interval_integral(const Weight& w, const NoiseKind& kind, double lo, double hi,
                            double dx_hint) {
    if (!(hi > lo)) return 0.0;
    const bool negative = hi <= 0.0;
    if (!negative && lo < 0.0)
        throw InvalidArgument("nu_interval_integral: interval must not straddle 0");
    const double alo = negative ? -hi : lo;
    const double ahi = negative ? -lo : hi;
    const double sgn = negative ? -1.0 : 1.0;
    auto f = [&](double ay) { return w(sgn * ay) * kind.levy_density(ay); };
    if (ahi / alo > 4.0) {
        const int panels =
            std::max(64, static_cast<int>(64 * std::log10(ahi / alo)));
        return simpson([&](double v) {
            const double ay = std::exp(v);
            return f(ay) * ay;
        }, std::log(alo), std::log(ahi), panels);
    }
    const int panels = std::max(32, static_cast<int>(2.0 * (ahi - alo) / dx_hint));
    return simpson(f, alo, ahi, panels);
}

template <typename Weight>
double jump_rate_impl(const Weight& w, double w_mean, double x, const BorelInterval& A,
                      const NoiseKind& kind, double eps, const Grid1D& grid) {
    const double half = 0.5 * grid.length();
    auto clipped = [&](double lo, double hi) {
        double total = 0.0;
        // remove (-eps, eps) and cap at ±L/2
        if (hi > eps) total += nu_interval_integral(w, kind, std::max(lo, eps),
                                                    std::min(hi, half), grid.dx());
        if (lo < -eps) total += nu_interval_integral(w, kind, std::max(lo, -half),
                                                     std::min(hi, -eps), grid.dx());
        return total;
    };
    if (!A.contains(x)) {
        // jumps landing in A
        return clipped(A.a - x, A.b - x);
    }
    // x in A: jumps leaving A (two unbounded intervals, mean-field tail)
    const double inside = clipped(A.a - x, A.b - x);
    double all = clipped(-half, half);
    all += 2.0 * w_mean * kind.levy_tail_mass(half);   // |y| > L/2 closure
    return inside - all;
}

double integrate_over_interval(const RealField& f, double a, double b) {
    // trapezoid with linearly interpolated partial end cells
    const auto& g = f.grid();
    a = std::max(a, g.x_min());
    b = std::min(b, g.x_min() + g.length() - g.dx());
    if (!(b > a)) return 0.0;
    const int panels = std::max(64, static_cast<int>(4.0 * (b - a) / g.dx()));
    return simpson([&](double x) { return interp_field(f, x); }, a, b, panels);
}

}  // namespace

double jump_rate_ground(const RealField& theta, double x, const BorelInterval& A,
                        const NoiseKind& kind, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("jump_rate_ground: eps must be positive");
    const double th_x = interp_field(theta, x);
    if (!(th_x > 0.0)) throw DegenerateMarginal("jump_rate_ground: theta(x) not positive");
    double mean = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) mean += theta[j];
    mean /= static_cast<double>(theta.size());
    auto w = [&](double y) { return interp_field(theta, x + y) / th_x; };
    return jump_rate_impl(w, mean / th_x, x, A, kind, eps, theta.grid());
}

double jump_rate_quantum(const ComplexField& psi, double x, const BorelInterval& A,
                         const NoiseKind& kind, double eps, bool rearranged) {
    if (!(eps > 0.0)) throw InvalidArgument("jump_rate_quantum: eps must be positive");
    const cplx psi_x = interp_field(psi, x);
    if (!(std::abs(psi_x) > 1e-12))
        throw NodalRegion("jump_rate_quantum: psi(x) at nodal floor");
    cplx mean{0.0, 0.0};
    for (std::size_t j = 0; j < psi.size(); ++j) mean += psi[j];
    mean /= static_cast<double>(psi.size());
    auto w = [&](double y) {
        const cplx ratio = interp_field(psi, x + y) / psi_x;
        return rearranged ? std::abs(ratio) + ratio.imag() : ratio.imag();
    };
    const cplx mean_ratio = mean / psi_x;
    const double w_mean =
        rearranged ? std::abs(mean_ratio) + mean_ratio.imag() : mean_ratio.imag();
    return jump_rate_impl(w, w_mean, x, A, kind, eps, psi.grid());
}

namespace {

template <typename RateFn>
FokkerPlanckReport fp_residual(const RealField& rho_prev, const RealField& rho_mid,
                               const RealField& rho_next, const BorelInterval& A, double dt,
                               const RateFn& q) {
    FokkerPlanckReport rep;
    rep.lhs = (integrate_over_interval(rho_next, A.a, A.b) -
               integrate_over_interval(rho_prev, A.a, A.b)) / (2.0 * dt);
    const auto& grid = rho_mid.grid();
    double rhs = 0.0;
    for (std::size_t j = 0; j < grid.n(); ++j)
        if (rho_mid[j] > 1e-14) rhs += q(grid.x(j)) * rho_mid[j];
    rep.rhs = rhs * grid.dx();
    rep.residual = std::abs(rep.lhs - rep.rhs);
    return rep;
}

}  // namespace

FokkerPlanckReport fokker_planck_residual_semigroup(const RealField& rho0,
                                                    const NoiseKind& kind, double t,
                                                    const BorelInterval& A, double eps,
                                                    double dt) {
    if (!(t - dt > 0.0)) throw InvalidArgument("fokker_planck_residual: t - dt must be positive");
    auto rho_prev = apply_semigroup(rho0, kind, t - dt);
    auto rho_mid = apply_semigroup(rho0, kind, t);
    auto rho_next = apply_semigroup(rho0, kind, t + dt);
    RealField ones = RealField::sample(rho0.grid(), [](double) { return 1.0; });
    return fp_residual(rho_prev, rho_mid, rho_next, A, dt, [&](double x) {
        return jump_rate_ground(ones, x, A, kind, eps);
    });
}

FokkerPlanckReport fokker_planck_residual_unitary(const ComplexField& psi0,
                                                  const NoiseKind& kind, double t,
                                                  const BorelInterval& A, double eps,
                                                  double dt) {
    if (!(t - dt > 0.0)) throw InvalidArgument("fokker_planck_residual: t - dt must be positive");
    auto psi_prev = apply_unitary(psi0, kind, t - dt);
    auto psi_mid = apply_unitary(psi0, kind, t);
    auto psi_next = apply_unitary(psi0, kind, t + dt);
    return fp_residual(psi_prev.abs2(), psi_mid.abs2(), psi_next.abs2(), A, dt, [&](double x) {
        return jump_rate_quantum(psi_mid, x, A, kind, eps, true);
    });
}

}  // namespace levy
