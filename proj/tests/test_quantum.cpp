#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "levybridge/gaussian_reference.hpp"
#include "levybridge/quantum.hpp"
#include "levybridge/spectral.hpp"

using namespace levy;
namespace {
constexpr double kPi = std::numbers::pi;

Grid1D cauchy_grid() { return Grid1D(-400.0, 400.0, 8192); }

ComplexField closed_form_field(const Grid1D& g, double s) {
    return ComplexField::sample(g, [s](double x) { return cauchy_closed_form_state(x, s); });
}
}  // namespace

TEST_CASE("closed-form state: boundary, density law, normalization") {
    // s = 0 reduces to the real initial profile
    for (double x : {-7.0, -0.3, 0.0, 2.4}) {
        const cplx v = cauchy_closed_form_state(x, 0.0);
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == doctest::Approx(std::sqrt(2.0 / kPi) / (1.0 + x * x)).epsilon(1e-14));
    }
    // |psi|^2 equals the closed-form density pointwise
    for (double s : {0.5, 1.0, 3.0}) {
        double worst = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            const double x = -400.0 + 800.0 * i / 10000.0;
            const double lhs = std::norm(cauchy_closed_form_state(x, s));
            worst = std::max(worst, std::abs(lhs - cauchy_density(x, s)));
        }
        CHECK(worst < 1e-12);
    }
    // unit mass on the wide grid
    auto g = cauchy_grid();
    for (double s : {0.5, 1.0, 3.0}) {
        auto rho = RealField::sample(g, [s](double x) { return cauchy_density(x, s); });
        CHECK(std::abs(rho.integrate() - 1.0) < 1e-6);
    }
}

TEST_CASE("spectral unitary evolution reproduces the closed form") {
    auto g = cauchy_grid();
    auto psi0 = closed_form_field(g, 0.0);
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
        auto psi = apply_unitary(psi0, NoiseKind::cauchy(), t);
        CHECK(max_abs_diff(psi, closed_form_field(g, t)) < 1e-4);
    }
    // probability conservation along the way
    auto psi = apply_unitary(psi0, NoiseKind::cauchy(), 2.0);
    CHECK(std::abs(psi.abs2().integrate() - psi0.abs2().integrate()) < 1e-10);
}

TEST_CASE("characteristic function of the density flow") {
    CHECK_THROWS_AS(cauchy_rho_hat(1.0, 0.0), InvalidArgument);
    // p = 0 carries the total mass
    CHECK(cauchy_rho_hat(0.0, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
    // t -> 0+ recovers the initial characteristic function
    for (double p : {0.3, 1.0, 4.0})
        CHECK(cauchy_rho_hat(p, 1e-8) == doctest::Approx(cauchy_rho0_hat(p)).epsilon(1e-7));
    // numerical Fourier transform of the density matches the closed form
    const double t = 1.0;
    const int nq = 1 << 17;
    const double L = 800.0, dx = L / nq;
    for (int k = 0; k < 64; ++k) {
        const double p = -8.0 + 16.0 * (k + 0.5) / 64.0;
        cplx acc{0.0, 0.0};
        for (int j = 0; j < nq; ++j) {
            const double x = -L / 2 + j * dx;
            acc += std::polar(1.0, p * x) * cauchy_density(x, t);
        }
        acc *= dx / std::sqrt(2.0 * kPi);
        CHECK(std::abs(acc.real() - cauchy_rho_hat(p, t)) < 1e-5);
        CHECK(std::abs(acc.imag()) < 1e-12);
    }
    // ratio identities against the initial characteristic function
    for (double p : {0.2, 1.7, 5.0})
        for (double t2 : {0.5, 1.0, 2.0}) {
            const double bracket = std::cos(t2 * p) + std::sin(t2 * p) / t2;
            CHECK(cauchy_rho_hat(p, t2) ==
                  doctest::Approx(cauchy_rho0_hat(p) * bracket / (1.0 + p)).epsilon(1e-12));
        }
}

TEST_CASE("madelung decomposition: round trip, gauge, nodal guard") {
    auto g = Grid1D(-40.0, 40.0, 1024);
    auto psi = ComplexField::sample(g, [](double x) {
        return std::polar(std::exp(-x * x / 8.0) + 0.05, 0.3 * x);
    });
    auto pair = madelung_decompose(psi);
    auto back = madelung_reconstruct(pair);
    CHECK(max_abs_diff(back, psi) < 1e-10 * psi.max_abs());

    // real positive input has S = 0
    auto real_psi = ComplexField::sample(g, [](double x) { return cplx{1.0 / (1.0 + x * x), 0.0}; });
    auto rp = madelung_decompose(real_psi);
    CHECK(rp.S.max_abs() == 0.0);

    // global phase shifts S by a constant, R untouched
    const double phase = 1.1;
    auto rotated = ComplexField::sample(g, [&](double x) {
        return std::polar(std::exp(-x * x / 8.0) + 0.05, 0.3 * x + phase);
    });
    auto rot = madelung_decompose(rotated);
    CHECK(max_abs_diff(rot.R, pair.R) < 1e-12);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j)
        worst = std::max(worst, std::abs((rot.S[j] - pair.S[j]) - phase));
    CHECK(worst < 1e-12);

    // nodal rejection
    auto nodal = ComplexField::sample(g, [](double x) { return cplx{x, 0.0}; });
    CHECK_THROWS_AS(madelung_decompose(nodal), NodalRegion);

    // the Gaussian packet matches the closed-form exponents
    auto g2 = Grid1D(-30.0, 30.0, 2048);
    const double t = 0.7;
    auto packet = ComplexField::sample(g2, [t](double x) {
        return gaussian_ref::free_packet_psi(x, t, 2.0, 1.0);
    });
    auto mp = madelung_decompose(packet);
    double worstR = 0.0, worstS = 0.0;
    for (std::size_t j = 0; j < g2.n(); ++j) {
        const double x = g2.x(j);
        if (std::abs(x) > 15.0) continue;
        worstR = std::max(worstR, std::abs(mp.R[j] - gaussian_ref::madelung_R(x, t)));
        // S is defined modulo a global branch; the decomposition pins S(0)
        worstS = std::max(worstS, std::abs(mp.S[j] - gaussian_ref::madelung_S(x, t)));
    }
    CHECK(worstR < 1e-8);
    CHECK(worstS < 1e-8);
}

TEST_CASE("quantum potential: constants, gaussian cross-check, cauchy regression") {
    auto g = Grid1D(-40.0, 40.0, 2048);
    // constant density: Q = 0 (F(0) = 0)
    auto flat = RealField::sample(g, [](double) { return 1.0; });
    for (auto kind : {NoiseKind::cauchy(), NoiseKind::gaussian(1.0), NoiseKind::relativistic(1.0)})
        CHECK(quantum_potential(flat, kind).max_abs() < 1e-13);

    // standard normal, Gaussian kind D=1: H = -Δ so Q = -(x²-2)/4 where
    // Δρ^{1/2}/ρ^{1/2} = (x²-2)/4
    auto rho_sqrt = RealField::sample(g, [](double x) {
        return std::pow(2.0 * kPi, -0.25) * std::exp(-x * x / 4.0);
    });
    auto q = quantum_potential(rho_sqrt, NoiseKind::gaussian(1.0));
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double x = g.x(j);
        if (std::abs(x) > 8.0) continue;
        worst = std::max(worst, std::abs(q[j] - (-(x * x - 2.0) / 4.0)));
    }
    CHECK(worst < 1e-6);

    // cauchy kind on the lorentzian-squared initial density stays finite
    auto g3 = Grid1D(-50.0, 50.0, 2048);
    auto rs = RealField::sample(g3, [](double x) { return std::sqrt(cauchy_density_initial(x)); });
    auto qc = quantum_potential(rs, NoiseKind::cauchy());
    for (std::size_t j = 0; j < g3.n(); ++j) CHECK(std::isfinite(qc[j]));
}

TEST_CASE("sturm-liouville inverse potential") {
    auto g = Grid1D(-40.0, 40.0, 2048);
    // flat density on the periodic grid: V = E
    auto flat = RealField::sample(g, [](double) { return 1.0; });
    auto v_flat = sturm_liouville_potential(flat, NoiseKind::cauchy(), 0.7);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) worst = std::max(worst, std::abs(v_flat[j] - 0.7));
    CHECK(worst < 1e-12);

    // gaussian density + gaussian kind: harmonic potential recovery
    auto rho = RealField::sample(g, [](double x) {
        return std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi);
    });
    const double E = 1.3;
    auto v = sturm_liouville_potential(rho, NoiseKind::gaussian(1.0), E);
    // V = E + D Δρ^{1/2}/ρ^{1/2} = E + (x²-2)/4 for D = 1
    double worst2 = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double x = g.x(j);
        if (std::abs(x) > 8.0) continue;
        worst2 = std::max(worst2, std::abs(v[j] - (E + (x * x - 2.0) / 4.0)));
    }
    CHECK(worst2 < 1e-6);

    // round trip: H rho^{1/2} - [2Q + V - E] rho^{1/2} = 0 identically
    auto rho_sqrt = RealField::sample(g, [&](double x) { return std::sqrt(rho[0] * 0 + std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi)); });
    auto H_rs = apply_generator_spectral(rho_sqrt, NoiseKind::gaussian(1.0));
    auto Q = quantum_potential(rho_sqrt, NoiseKind::gaussian(1.0));
    double res = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        if (rho_sqrt[j] < 1e-12) continue;
        res = std::max(res, std::abs(H_rs[j] - (2.0 * Q[j] + v[j] - E) * rho_sqrt[j]));
    }
    CHECK(res < 1e-8);
}

TEST_CASE("madelung evolution residuals on the closed-form flow") {
    auto g = cauchy_grid();
    const double t = 1.0, dt = 0.01, eps = 1e-3;
    std::vector<ComplexField> snaps{closed_form_field(g, t - dt), closed_form_field(g, t),
                                    closed_form_field(g, t + dt)};
    auto res = madelung_evolution_residual(snaps, dt, NoiseKind::cauchy(), eps, nullptr, 1e-3);
    CHECK(res.dR < 5e-3);
    CHECK(res.dS < 5e-3);
    CHECK(res.dTheta < 5e-3);
    CHECK(res.dThetaStar < 5e-3);

    // global phase rotation leaves the residuals unchanged
    std::vector<ComplexField> rotated;
    const double E = 0.8;
    for (int k = 0; k < 3; ++k) {
        const double tk = t + (k - 1) * dt;
        auto f = snaps[k];
        const cplx ph = std::polar(1.0, E * tk);
        for (std::size_t j = 0; j < f.size(); ++j) f[j] *= ph;
        rotated.push_back(std::move(f));
    }
    auto res_rot = madelung_evolution_residual(rotated, dt, NoiseKind::cauchy(), eps, nullptr,
                                               1e-3);
    CHECK(std::abs(res_rot.dR - res.dR) < 5e-4);
    // the dS equation sees the extra E drift unless V absorbs it: feed the
    // matching constant potential and the residual returns
    auto vfield = RealField::sample(g, [E](double) { return -E; });
    auto res_v = madelung_evolution_residual(rotated, dt, NoiseKind::cauchy(), eps, &vfield,
                                             1e-3);
    CHECK(res_v.dS < 5e-3);

    // input validation
    std::vector<ComplexField> two{snaps[0], snaps[1]};
    CHECK_THROWS_AS(madelung_evolution_residual(two, dt, NoiseKind::cauchy(), eps),
                    InvalidArgument);
}

TEST_CASE("stationary state from the inverse potential has stationary residuals") {
    auto g = Grid1D(-50.0, 50.0, 2048);
    auto rho = RealField::sample(g, [](double x) {
        return std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi);
    });
    const double E = 0.9;
    auto V = sturm_liouville_potential(rho, NoiseKind::cauchy(), E);
    const double dt = 0.01;
    std::vector<ComplexField> snaps;
    for (int k = -1; k <= 1; ++k) {
        const double tk = 1.0 + k * dt;
        snaps.push_back(ComplexField::sample(g, [&](double x) {
            return std::sqrt(std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi)) *
                   std::polar(1.0, -E * tk);
        }));
    }
    auto res = madelung_evolution_residual(snaps, dt, NoiseKind::cauchy(), 1e-3, &V, 1e-2);
    CHECK(res.dR < 5e-3);
    CHECK(res.dS < 5e-3);
}

TEST_CASE("wave-equation residuals") {
    // plane wave: exact dispersion, residual at rounding level
    {
        auto g = Grid1D(-40.0, 40.0, 1024);
        const double p0 = 2.0 * kPi * std::round(2.0 * 40.0 / kPi) / 80.0;
        auto psi0 = ComplexField::sample(g, [p0](double x) { return std::polar(1.0, p0 * x); });
        auto r = wave_equation_residual(NoiseKind::cauchy(), psi0, 0.7, 1e-3);
        CHECK(r.relative < 1e-8);
    }
    // closed-form flow
    {
        auto g = cauchy_grid();
        auto psi0 = closed_form_field(g, 0.0);
        auto r = wave_equation_residual(NoiseKind::cauchy(), psi0, 1.0, 1e-3);
        CHECK(r.relative < 1e-4);
    }
    // relativistic packet: Klein-Gordon after the phase split
    {
        auto g = Grid1D(-100.0, 100.0, 4096);
        auto psi0 = ComplexField::sample(g, [](double x) {
            return cplx{std::exp(-x * x / 4.0), 0.0};
        });
        auto r = wave_equation_residual(NoiseKind::relativistic(1.0), psi0, 0.5, 1e-3);
        CHECK(r.relative < 1e-3);
    }
    CHECK_THROWS_AS(wave_equation_residual(NoiseKind::gaussian(1.0),
                                           ComplexField::zeros(Grid1D(-1.0, 1.0, 16)), 0.5, 1e-3),
                    InvalidArgument);
}

TEST_CASE("euclidean wave residuals on semigroup flows") {
    {
        auto g = cauchy_grid();
        auto rho0 = RealField::sample(g, [](double x) { return cauchy_density_initial(x); });
        auto r = euclidean_wave_residual(NoiseKind::cauchy(), rho0, 1.0, 1e-3);
        CHECK(r.relative < 1e-3);
    }
    {
        auto g = Grid1D(-100.0, 100.0, 4096);
        auto rho0 = RealField::sample(g, [](double x) {
            return std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi);
        });
        auto r = euclidean_wave_residual(NoiseKind::relativistic(1.0), rho0, 1.0, 1e-3);
        CHECK(r.relative < 1e-3);
    }
}

TEST_CASE("exponential-action identity: spectral vs truncated quadrature") {
    auto g = cauchy_grid();
    auto phi = RealField::sample(g, [](double x) { return 0.5 * std::exp(-x * x / 4.0); });
    auto exp_phi = ComplexField::sample(g, [&](double x) {
        return cplx{std::exp(0.5 * std::exp(-x * x / 4.0)), 0.0};
    });
    const double eps = 1e-4;
    auto lhs = apply_generator_spectral(exp_phi, NoiseKind::cauchy());
    auto H_phi = apply_generator_levy(ComplexField::from_real(phi), NoiseKind::cauchy(), eps);

    // ∫ (e^{Φ_xy} - 1 - Φ_xy) dν via the same paired machinery exercised
    // through the Madelung evaluator: with S = Φ and R = 0 the dS-integrand
    // [e^{R_xy} cos S_xy - 1 - R_xy] is not the wanted one, so evaluate
    // directly with R = Φ, S = 0: ∫ [e^{Φ_xy} - 1 - Φ_xy] dν is the Madelung
    // Q-integral; reuse through quantum_potential consistency instead:
    //   (H e^Φ)/e^Φ = HΦ - ∫(e^{Φ_xy}-1-Φ_xy)dν  =  Q form of e^Φ.
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double x = g.x(j);
        if (std::abs(x) > 40.0) continue;
        // nonlinear term from the identity, using the spectral lhs as the
        // gold value: residual = |lhs - e^Φ (HΦ - NL)| with NL from the
        // independently computed pair below.
        (void)x;
        (void)j;
    }
    (void)worst;
    // Direct check: |psi| = e^Φ, S = 0 state fed to the residual machinery
    // is stationary only with the matching potential; instead verify the
    // identity through quantum_potential: Q(e^Φ) = (H e^Φ)/e^Φ computed
    // spectrally must match HΦ - ∫(e^{Φ_xy}-1-Φ_xy)dν computed by quadrature.
    auto rho_sqrt = RealField::sample(g, [&](double x) {
        return std::exp(0.5 * std::exp(-x * x / 4.0));
    });
    auto Q_spectral = quantum_potential(rho_sqrt, NoiseKind::cauchy());
    // quadrature route: HΦ (levy) and the nonlinear integral via the
    // stationary Madelung dS residual with V = 0 and S = 0 snapshots:
    // dS/dt = 0 and the equation reads 0 = -Q_quad - V; feed V = -Q_spectral
    // and require a small residual.
    std::vector<ComplexField> snaps;
    for (int k = 0; k < 3; ++k)
        snaps.push_back(ComplexField::sample(g, [&](double x) {
            return cplx{std::exp(0.5 * std::exp(-x * x / 4.0)), 0.0};
        }));
    std::vector<double> vneg(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) vneg[j] = -Q_spectral[j];
    RealField V(g, std::move(vneg));
    auto res = madelung_evolution_residual(snaps, 1e-2, NoiseKind::cauchy(), eps, &V, 1e-4);
    CHECK(res.dS < 3e-3);
    (void)lhs;
    (void)H_phi;
}
