#include "levybridge/spectral.hpp"

#include <cmath>
#include <numbers>

#include "levybridge/levy_quad.hpp"

namespace levy {

double exponent_eval(const NoiseKind& kind, double p) {
    if (!std::isfinite(p)) throw InvalidArgument("exponent_eval: p must be finite");
    return kind.exponent(p);
}

RealField apply_semigroup(const RealField& f, const NoiseKind& kind, double t) {
    if (t < 0.0) throw InvalidArgument("apply_semigroup: t must be nonnegative");
    return fourier::apply_multiplier_real(
        f, [&](double p) { return std::exp(-t * kind.exponent(p)); });
}

ComplexField apply_semigroup(const ComplexField& f, const NoiseKind& kind, double t) {
    if (t < 0.0) throw InvalidArgument("apply_semigroup: t must be nonnegative");
    return fourier::apply_multiplier(
        f, [&](double p) { return cplx{std::exp(-t * kind.exponent(p)), 0.0}; });
}

ComplexField apply_unitary(const ComplexField& f, const NoiseKind& kind, double s) {
    return fourier::apply_multiplier(
        f, [&](double p) { return std::polar(1.0, -s * kind.exponent(p)); });
}

ComplexField apply_generator_spectral(const ComplexField& f, const NoiseKind& kind) {
    return fourier::apply_multiplier(f, [&](double p) { return cplx{kind.exponent(p), 0.0}; });
}

RealField apply_generator_spectral(const RealField& f, const NoiseKind& kind) {
    return fourier::apply_multiplier_real(f, [&](double p) { return kind.exponent(p); });
}

namespace {

// Second-difference table D_j(x) = f(x + j dx) + f(x - j dx) - 2 f(x) for
// j = 0..m-1, plus Newton coefficients of the interpolant in u = y^2.
// D is even and O(y^2), so interpolation in u through u_j = (j dx)^2 is exact
// for even polynomials and keeps the +y/-y pairing error-free.
class PairInterpolant {
  public:
    PairInterpolant(std::span<const cplx> f, double dx, std::size_t m) : m_(m), dx_(dx) {
        const std::size_t n = f.size();
        u_.resize(m);
        for (std::size_t j = 0; j < m; ++j) u_[j] = (j * dx) * (j * dx);
        coef_.assign(m, std::vector<cplx>(n));
        for (std::size_t x = 0; x < n; ++x) coef_[0][x] = cplx{0.0, 0.0};
        for (std::size_t j = 1; j < m; ++j)
            for (std::size_t x = 0; x < n; ++x)
                coef_[j][x] = f[(x + j) % n] + f[(x + n - j % n) % n] - 2.0 * f[x];
        // in-place divided differences along j
        for (std::size_t k = 1; k < m; ++k)
            for (std::size_t j = m - 1; j >= k; --j) {
                const double du = u_[j] - u_[j - k];
                for (std::size_t x = 0; x < coef_[j].size(); ++x)
                    coef_[j][x] = (coef_[j][x] - coef_[j - 1][x]) / du;
                if (j == k) break;
            }
    }

    // Accumulate w * D(y) into acc for every grid point.
    void accumulate(double y, double w, std::span<cplx> acc) const {
        const double u = y * y;
        const std::size_t n = acc.size();
        std::vector<cplx> val(coef_[m_ - 1]);
        for (std::size_t k = m_ - 1; k-- > 0;) {
            const double du = u - u_[k];
            for (std::size_t x = 0; x < n; ++x) val[x] = val[x] * du + coef_[k][x];
        }
        for (std::size_t x = 0; x < n; ++x) acc[x] += w * val[x];
    }

  private:
    std::size_t m_;
    double dx_;
    std::vector<double> u_;
    std::vector<std::vector<cplx>> coef_;
};

}  // namespace

ComplexField apply_generator_levy(const ComplexField& f, const NoiseKind& kind, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("apply_generator_levy: eps must be positive");
    if (!kind.pure_jump())
        throw InvalidArgument("apply_generator_levy: Cauchy or Relativistic kinds only");

    const auto& g = f.grid();
    const std::size_t n = g.n();
    const double dx = g.dx();
    const auto quad = LevyQuadrature::build(kind, g, eps);

    std::vector<cplx> acc(n, cplx{0.0, 0.0});

    // (eps, y_start]: interpolated paired second differences.
    if (!quad.log_nodes.empty()) {
        std::size_t m = 6;
        const double y_top = quad.log_nodes.back().y;
        while ((m - 1) * dx < y_top + 2 * dx && m < 12) ++m;
        PairInterpolant interp(f.samples(), dx, m);
        for (const auto& node : quad.log_nodes) interp.accumulate(node.y, node.w, acc);
    }

    // [y_start, L/2]: exact grid shifts.
    auto fs = f.samples();
    for (std::size_t j = 2; j < quad.shift_weights.size(); ++j) {
        const double w = quad.shift_weights[j];
        if (w == 0.0) continue;
        for (std::size_t x = 0; x < n; ++x)
            acc[x] += w * (fs[(x + j) % n] + fs[(x + n - j) % n] - 2.0 * fs[x]);
    }

    // Mean-field closure of the tail: the localized part of f averages out
    // per period, leaving (2 f_bar - 2 f(x)) ∫_{L/2}^∞ nu.
    cplx fbar{0.0, 0.0};
    for (std::size_t x = 0; x < n; ++x) fbar += fs[x];
    fbar /= static_cast<double>(n);
    for (std::size_t x = 0; x < n; ++x) acc[x] += quad.tail_mass * (2.0 * fbar - 2.0 * fs[x]);

    // Small-|y| Taylor surrogate with centred-difference f''.
    std::vector<cplx> out(n);
    const double inv_dx2 = 1.0 / (dx * dx);
    for (std::size_t x = 0; x < n; ++x) {
        const cplx fpp = (fs[(x + 1) % n] - 2.0 * fs[x] + fs[(x + n - 1) % n]) * inv_dx2;
        out[x] = -acc[x] - fpp * quad.small_moment;
    }
    return ComplexField(g, std::move(out));
}

RealField apply_generator_levy(const RealField& f, const NoiseKind& kind, double eps) {
    return apply_generator_levy(ComplexField::from_real(f), kind, eps).real_part();
}

ComplexField newton_wigner_map(const ComplexField& f, double m) {
    if (!(m > 0.0)) throw InvalidArgument("newton_wigner_map: m must be positive");
    return fourier::apply_multiplier(
        f, [m](double p) { return cplx{std::pow(p * p + m * m, 0.25), 0.0}; });
}

double kg_norm_squared(const ComplexField& f, double m) {
    const auto& g = f.grid();
    auto fhat = fourier::transform(f);
    const double dp = 2.0 * std::numbers::pi / g.length();
    double s = 0.0;
    for (std::size_t k = 0; k < g.n(); ++k) {
        const double p = g.freq(k);
        s += std::sqrt(p * p + m * m) * std::norm(fhat[k]);
    }
    return 2.0 * s * dp;
}

}  // namespace levy
