#include "levybridge/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levybridge/bessel.hpp"

namespace levy {

namespace {
constexpr double kPi = std::numbers::pi;

// Characteristic spatial width of k_tau, used to scale the compactified
// quadrature.
double kernel_width(const KernelKind& kind, double tau) {
    switch (kind.tag) {
        case KernelTag::Heat: return std::sqrt(2.0 * kind.D * tau);
        case KernelTag::Cauchy: return tau;
        case KernelTag::Relativistic:
            return std::sqrt(tau * tau + tau / kind.m + 1.0 / (kind.m * kind.m));
    }
    return 1.0;
}
}  // namespace

KernelKind KernelKind::heat(double D) {
    if (!(D > 0.0)) throw InvalidArgument("KernelKind: D must be positive");
    return KernelKind{KernelTag::Heat, D, 1.0};
}

KernelKind KernelKind::cauchy() { return KernelKind{KernelTag::Cauchy, 1.0, 1.0}; }

KernelKind KernelKind::relativistic(double m) {
    if (!(m > 0.0)) throw InvalidArgument("KernelKind: m must be positive");
    return KernelKind{KernelTag::Relativistic, 1.0, m};
}

NoiseKind KernelKind::noise() const {
    switch (tag) {
        case KernelTag::Heat: return NoiseKind::gaussian(D);
        case KernelTag::Cauchy: return NoiseKind::cauchy();
        case KernelTag::Relativistic: return NoiseKind::relativistic(m);
    }
    return NoiseKind::cauchy();
}

std::string KernelKind::name() const {
    switch (tag) {
        case KernelTag::Heat: return "heat";
        case KernelTag::Cauchy: return "cauchy";
        case KernelTag::Relativistic: return "relativistic";
    }
    return "?";
}

double kernel_eval(const KernelKind& kind, double y, double s, double x, double t) {
    if (!(t > s)) throw InvalidArgument("kernel_eval: requires t > s");
    const double tau = t - s;
    const double r = x - y;
    switch (kind.tag) {
        case KernelTag::Heat: {
            const double v = 4.0 * kind.D * tau;
            return std::exp(-r * r / v) / std::sqrt(kPi * v);
        }
        case KernelTag::Cauchy:
            return tau / (kPi * (tau * tau + r * r));
        case KernelTag::Relativistic: {
            const double rho = std::sqrt(r * r + tau * tau);
            return kind.m * tau * std::exp(kind.m * tau) / kPi * bessel_k1(kind.m * rho) / rho;
        }
    }
    return 0.0;
}

double kernel_normalization(const KernelKind& kind, double y, double s, double t,
                            std::size_t n_theta) {
    if (!(t > s)) throw InvalidArgument("kernel_normalization: requires t > s");
    const double c = std::max(kernel_width(kind, t - s), 1e-8);
    const double h = kPi / static_cast<double>(n_theta);
    double sum = 0.0;
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = -0.5 * kPi + (static_cast<double>(i) + 0.5) * h;
        const double cs = std::cos(theta);
        const double x = y + c * std::tan(theta);
        sum += kernel_eval(kind, y, s, x, t) * c / (cs * cs);
    }
    return sum * h;
}

double chapman_kolmogorov_residual(const KernelKind& kind, double s, double u, double t,
                                   const Grid1D& grid, std::size_t samples_per_axis) {
    if (!(s < u && u < t)) throw InvalidArgument("chapman_kolmogorov_residual: need s < u < t");
    const std::size_t stride = std::max<std::size_t>(1, grid.n() / samples_per_axis);

    const double w1 = kernel_width(kind, u - s);
    const double w2 = kernel_width(kind, t - u);
    const std::size_t n_theta = 4096;
    const double h = kPi / static_cast<double>(n_theta);

    double worst = 0.0;
    for (std::size_t iy = 0; iy < grid.n(); iy += stride) {
        const double y = grid.x(iy);
        for (std::size_t ix = 0; ix < grid.n(); ix += stride) {
            const double x = grid.x(ix);
            const double z0 = 0.5 * (x + y);
            const double c = 0.5 * std::abs(x - y) + 2.0 * (w1 + w2);
            double conv = 0.0;
            for (std::size_t i = 0; i < n_theta; ++i) {
                const double theta = -0.5 * kPi + (static_cast<double>(i) + 0.5) * h;
                const double cs = std::cos(theta);
                const double z = z0 + c * std::tan(theta);
                conv += kernel_eval(kind, y, s, z, u) * kernel_eval(kind, z, u, x, t) * c /
                        (cs * cs);
            }
            conv *= h;
            worst = std::max(worst, std::abs(conv - kernel_eval(kind, y, s, x, t)));
        }
    }
    return worst;
}

double bernstein_density(double x, double t, double alpha0, double D) {
    if (!(alpha0 > 0.0) || !(D > 0.0))
        throw InvalidArgument("bernstein_density: alpha0 and D must be positive");
    if (!(std::abs(t) < alpha0))
        throw InvalidArgument("bernstein_density: requires |t| < alpha0");
    const auto k = KernelKind::heat(D);
    return kernel_eval(k, 0.0, -alpha0, x, t) * kernel_eval(k, x, t, 0.0, alpha0) /
           kernel_eval(k, 0.0, -alpha0, 0.0, alpha0);
}

}  // namespace levy
