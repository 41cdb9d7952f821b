#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "levybridge/fourier.hpp"
#include "levybridge/spectral.hpp"

using namespace levy;
namespace {
constexpr double kPi = std::numbers::pi;

Grid1D cauchy_grid() { return Grid1D(-400.0, 400.0, 8192); }
Grid1D small_grid() { return Grid1D(-40.0, 40.0, 1024); }

RealField gaussian_bump(const Grid1D& g, double sigma = 1.0) {
    return RealField::sample(g, [sigma](double x) {
        return std::exp(-x * x / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * kPi));
    });
}

double grid_frequency_near(const Grid1D& g, double p) {
    const double dp = 2.0 * kPi / g.length();
    return std::round(p / dp) * dp;
}
}  // namespace

TEST_CASE("grid construction validates shape") {
    CHECK_THROWS_AS(Grid1D(0.0, -1.0, 64), InvalidArgument);
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 48), InvalidArgument);   // not a power of two
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 8), InvalidArgument);    // too small
    Grid1D g(-10.0, 10.0, 64);
    CHECK(g.dx() == doctest::Approx(20.0 / 64));
    CHECK(g.freq(0) == 0.0);
    CHECK(g.freq(1) == doctest::Approx(2.0 * kPi / 20.0));
    CHECK(g.freq(63) == doctest::Approx(-2.0 * kPi / 20.0));
    CHECK(g.freq(32) == doctest::Approx(-kPi / g.dx()));
}

TEST_CASE("fields reject non-finite samples") {
    Grid1D g(-1.0, 1.0, 16);
    std::vector<double> v(16, 0.0);
    v[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(RealField(g, v), InvalidArgument);
}

TEST_CASE("exponent_eval matches the three closed forms") {
    CHECK(exponent_eval(NoiseKind::cauchy(), 2.0) == doctest::Approx(2.0));
    CHECK(exponent_eval(NoiseKind::relativistic(1.0), 0.0) == doctest::Approx(0.0));
    CHECK(exponent_eval(NoiseKind::relativistic(1.0), 1.0) ==
          doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
    CHECK(exponent_eval(NoiseKind::gaussian(0.5), 3.0) == doctest::Approx(4.5));
    // symmetry and positivity
    for (double p : {0.3, 1.7, 9.2})
        for (auto kind : {NoiseKind::cauchy(), NoiseKind::relativistic(2.0),
                          NoiseKind::gaussian(1.0)}) {
            CHECK(exponent_eval(kind, p) == exponent_eval(kind, -p));
            CHECK(exponent_eval(kind, p) >= 0.0);
        }
}

TEST_CASE("fourier transform is unitary and matches the analytic pair") {
    auto g = small_grid();
    auto f = gaussian_bump(g);
    auto fhat = fourier::transform(f);
    // Parseval with the dual measure dp = 2pi/L
    const double dp = 2.0 * kPi / g.length();
    double dual_norm2 = 0.0;
    for (std::size_t k = 0; k < g.n(); ++k) dual_norm2 += std::norm(fhat[k]);
    dual_norm2 *= dp;
    const double norm2 = f.l2_norm() * f.l2_norm();
    CHECK(dual_norm2 == doctest::Approx(norm2).epsilon(1e-12));
    // Gaussian pair: (1/sqrt(2pi)) ∫ e^{-ipx} N(0,1) = (1/sqrt(2pi)) e^{-p²/2}
    for (std::size_t k : {0u, 3u, 17u, 900u}) {
        const double p = g.freq(k);
        const double expected = std::exp(-p * p / 2.0) / std::sqrt(2.0 * kPi);
        CHECK(std::abs(fhat[k] - cplx{expected, 0.0}) < 1e-10);
    }
    // round trip
    auto back = fourier::inverse_transform(fhat);
    CHECK(max_abs_diff(back, ComplexField::from_real(f)) < 1e-13);
}

TEST_CASE("semigroup at t=0 is the identity and rejects t<0") {
    auto g = small_grid();
    auto f = gaussian_bump(g);
    auto out = apply_semigroup(f, NoiseKind::cauchy(), 0.0);
    CHECK(max_abs_diff(out, f) < 1e-13);
    CHECK_THROWS_AS(apply_semigroup(f, NoiseKind::cauchy(), -0.1), InvalidArgument);
}

TEST_CASE("semigroup law and mass conservation") {
    auto g = small_grid();
    auto f = gaussian_bump(g);
    const double mass0 = f.integrate();
    for (auto kind : {NoiseKind::cauchy(), NoiseKind::relativistic(1.0), NoiseKind::gaussian(1.0)}) {
        for (double t1 : {0.1, 0.5, 1.0})
            for (double t2 : {0.1, 0.5, 1.0}) {
                auto two_step = apply_semigroup(apply_semigroup(f, kind, t1), kind, t2);
                auto one_step = apply_semigroup(f, kind, t1 + t2);
                CHECK(max_abs_diff(two_step, one_step) < 1e-10);
            }
        auto out = apply_semigroup(f, kind, 0.7);
        CHECK(std::abs(out.integrate() - mass0) < 1e-10 * std::abs(mass0));
    }
}

TEST_CASE("unitary evolution preserves the L2 norm") {
    auto g = cauchy_grid();
    auto psi0 = ComplexField::sample(
        g, [](double x) { return cplx{std::sqrt(2.0 / kPi) / (1.0 + x * x), 0.0}; });
    const double n0 = psi0.l2_norm();
    for (double s : {0.25, 1.0, 7.0, -3.0}) {
        auto psi = apply_unitary(psi0, NoiseKind::cauchy(), s);
        CHECK(std::abs(psi.l2_norm() - n0) < 1e-12 * n0);
    }
    auto same = apply_unitary(psi0, NoiseKind::relativistic(1.0), 0.0);
    CHECK(max_abs_diff(same, psi0) < 1e-13);
}

TEST_CASE("free packet unitary evolution matches the Gaussian closed form") {
    // alpha² = 2, D = 1
    auto g = Grid1D(-80.0, 80.0, 2048);
    auto psi0 = ComplexField::sample(g, [](double x) {
        return cplx{std::pow(2.0 / kPi, 0.25) / std::sqrt(2.0) * std::exp(-x * x / 4.0), 0.0};
    });
    const double t = 0.8;
    auto psi = apply_unitary(psi0, NoiseKind::gaussian(1.0), t);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double x = g.x(j);
        const cplx denom{2.0, 2.0 * t};
        const cplx expected =
            std::pow(cplx{2.0 / kPi, 0.0}, 0.25) / std::sqrt(denom) * std::exp(-x * x / (2.0 * denom));
        worst = std::max(worst, std::abs(psi[j] - expected));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("generator: plane waves are eigenfunctions, constants are annihilated") {
    auto g = small_grid();
    const double p0 = grid_frequency_near(g, 1.0);
    auto wave = ComplexField::sample(g, [p0](double x) { return std::polar(1.0, p0 * x); });
    auto out = apply_generator_spectral(wave, NoiseKind::cauchy());
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j)
        worst = std::max(worst, std::abs(out[j] - std::abs(p0) * wave[j]));
    CHECK(worst < 1e-12);

    auto ones = ComplexField::sample(g, [](double) { return cplx{1.0, 0.0}; });
    for (auto kind : {NoiseKind::cauchy(), NoiseKind::relativistic(2.0), NoiseKind::gaussian(1.0)})
        CHECK(apply_generator_spectral(ones, kind).max_abs() < 1e-14);
}

TEST_CASE("generator consistency: (f - exp(-hH)f)/h converges to Hf") {
    auto g = small_grid();
    auto f = gaussian_bump(g);
    auto Hf = apply_generator_spectral(f, NoiseKind::cauchy());
    double err_prev = 0.0;
    std::vector<double> errs;
    for (double h : {1e-2, 1e-3}) {
        auto smoothed = apply_semigroup(f, NoiseKind::cauchy(), h);
        double worst = 0.0;
        for (std::size_t j = 0; j < g.n(); ++j)
            worst = std::max(worst, std::abs((f[j] - smoothed[j]) / h - Hf[j]));
        errs.push_back(worst);
    }
    (void)err_prev;
    const double order = std::log10(errs[0] / errs[1]);
    CHECK(order > 0.9);   // first order in h
}

TEST_CASE("Levy-Khintchine quadrature generator: constants and plane waves") {
    auto g = small_grid();
    auto ones = ComplexField::sample(g, [](double) { return cplx{1.0, 0.0}; });
    auto out = apply_generator_levy(ones, NoiseKind::cauchy(), 1e-3);
    CHECK(out.max_abs() < 1e-12);
    CHECK_THROWS_AS(apply_generator_levy(ones, NoiseKind::cauchy(), 0.0), InvalidArgument);
    CHECK_THROWS_AS(apply_generator_levy(ones, NoiseKind::gaussian(1.0), 1e-3), InvalidArgument);

    auto gc = cauchy_grid();
    const double p0 = grid_frequency_near(gc, 1.0);
    auto wave = ComplexField::sample(gc, [p0](double x) { return std::polar(1.0, p0 * x); });
    auto Hw = apply_generator_levy(wave, NoiseKind::cauchy(), 1e-4);
    double worst = 0.0;
    for (std::size_t j = 0; j < gc.n(); ++j)
        worst = std::max(worst, std::abs(Hw[j] - std::abs(p0) * wave[j]));
    CHECK(worst / std::abs(p0) < 1e-3);
}

TEST_CASE("Levy quadrature converges to the spectral generator as eps shrinks") {
    auto g = cauchy_grid();
    auto f = ComplexField::sample(g, [](double x) {
        return cplx{std::exp(-x * x / 2.0) * (1.0 + 0.3 * std::sin(x)), 0.0};
    });
    auto spectral = apply_generator_spectral(f, NoiseKind::cauchy());
    std::vector<double> errs;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        auto quad = apply_generator_levy(f, NoiseKind::cauchy(), eps);
        errs.push_back(max_abs_diff(quad, spectral));
    }
    CHECK(errs.back() < 1e-3);
    CHECK(errs[1] <= errs[0] * 1.05 + 1e-12);
    CHECK(errs[2] <= errs[1] * 1.05 + 1e-12);
}

TEST_CASE("relativistic quadrature generator agrees with the spectral route") {
    auto g = Grid1D(-100.0, 100.0, 4096);
    auto f = ComplexField::sample(g, [](double x) { return cplx{std::exp(-x * x / 2.0), 0.0}; });
    const auto kind = NoiseKind::relativistic(1.0);
    auto quad = apply_generator_levy(f, kind, 1e-4);
    auto spectral = apply_generator_spectral(f, kind);
    CHECK(max_abs_diff(quad, spectral) < 1e-4);
}

TEST_CASE("newton-wigner map: multiplier action and unitary commutation") {
    auto g = small_grid();
    const double m = 1.0;
    const double p0 = grid_frequency_near(g, 2.0);
    auto wave = ComplexField::sample(g, [p0](double x) { return std::polar(1.0, p0 * x); });
    auto mapped = newton_wigner_map(wave, m);
    const double factor = std::pow(p0 * p0 + 1.0, 0.25);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j)
        worst = std::max(worst, std::abs(mapped[j] - factor * wave[j]));
    CHECK(worst < 1e-12);

    auto zero = ComplexField::zeros(g);
    CHECK(newton_wigner_map(zero, 2.0).max_abs() == 0.0);

    auto f = ComplexField::sample(g, [](double x) { return cplx{std::exp(-x * x / 2.0), 0.0}; });
    auto path1 = newton_wigner_map(apply_unitary(f, NoiseKind::relativistic(m), 0.7), m);
    auto path2 = apply_unitary(newton_wigner_map(f, m), NoiseKind::relativistic(m), 0.7);
    CHECK(max_abs_diff(path1, path2) < 1e-10);
}

TEST_CASE("newton-wigner normalization against the momentum-space quadrature") {
    auto g = small_grid();
    const double m = 1.0;
    auto f = ComplexField::sample(g, [](double x) { return cplx{std::exp(-x * x / 2.0), 0.0}; });
    // independent oracle: the Klein-Gordon norm of a Gaussian via direct
    // quadrature of 2 sqrt(p²+m²) |f^(p)|² with the analytic transform
    // f^(p) = e^{-p²/2}.
    const int nq = 20000;
    const double pmax = 12.0;
    double oracle = 0.0;
    for (int i = 0; i < nq; ++i) {
        const double p = -pmax + 2.0 * pmax * (i + 0.5) / nq;
        oracle += 2.0 * std::sqrt(p * p + m * m) * std::exp(-p * p);
    }
    oracle *= 2.0 * pmax / nq;
    CHECK(kg_norm_squared(f, m) == doctest::Approx(oracle).epsilon(1e-8));

    // the map halves the KG norm into an ordinary L2 norm
    auto mapped = newton_wigner_map(f, m);
    CHECK(mapped.l2_norm() * mapped.l2_norm() ==
          doctest::Approx(0.5 * kg_norm_squared(f, m)).epsilon(1e-10));

    // normalized input per the KG rule => unit L2 output
    const double scale = std::sqrt(2.0 / kg_norm_squared(f, m));
    auto scaled = ComplexField::sample(g, [scale](double x) {
        return cplx{scale * std::exp(-x * x / 2.0), 0.0};
    });
    CHECK(newton_wigner_map(scaled, m).l2_norm() == doctest::Approx(1.0).epsilon(1e-10));
}
