#include "levybridge/noise.hpp"

#include <cmath>
#include <numbers>

#include "levybridge/bessel.hpp"

namespace levy {

namespace {
constexpr double kPi = std::numbers::pi;

// Composite Simpson of f on [a,b] with an even number of panels.
template <typename F>
double simpson(F&& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
    return s * h / 3.0;
}
}  // namespace

NoiseKind NoiseKind::gaussian(double D) {
    if (!(D > 0.0)) throw InvalidArgument("NoiseKind: D must be positive");
    return NoiseKind{NoiseTag::Gaussian, D, 0.0};
}

NoiseKind NoiseKind::cauchy() { return NoiseKind{NoiseTag::Cauchy, 0.0, 0.0}; }

NoiseKind NoiseKind::relativistic(double m) {
    if (!(m > 0.0)) throw InvalidArgument("NoiseKind: m must be positive");
    return NoiseKind{NoiseTag::Relativistic, 0.0, m};
}

double NoiseKind::exponent(double p) const {
    switch (tag) {
        case NoiseTag::Gaussian: return D * p * p;
        case NoiseTag::Cauchy: return std::abs(p);
        case NoiseTag::Relativistic: return std::sqrt(p * p + m * m) - m;
    }
    return 0.0;
}

double NoiseKind::levy_density(double y) const {
    if (y == 0.0) throw InvalidArgument("levy_density: y must be nonzero");
    switch (tag) {
        case NoiseTag::Cauchy: return 1.0 / (kPi * y * y);
        case NoiseTag::Relativistic: {
            const double ay = std::abs(y);
            return m / (kPi * ay) * bessel_k1(m * ay);
        }
        case NoiseTag::Gaussian:
            throw InvalidArgument("levy_density: Gaussian kind has no Levy density");
    }
    return 0.0;
}

double NoiseKind::levy_tail_mass(double Y) const {
    if (!(Y > 0.0)) throw InvalidArgument("levy_tail_mass: Y must be positive");
    switch (tag) {
        case NoiseTag::Cauchy: return 1.0 / (kPi * Y);
        case NoiseTag::Relativistic: {
            // (1/pi) ∫_{mY}^∞ K1(u)/u du;  log substitution below u=1,
            // linear stepping above (integrand ~ e^{-u}).
            const double a = m * Y;
            double total = 0.0;
            const double split = std::max(1.0, a);
            if (a < split) {
                total += simpson([](double v) { return bessel_k1(std::exp(v)); },
                                 std::log(a), std::log(split),
                                 std::max(64, static_cast<int>(200 * std::log(split / a))));
            }
            const double W = split + 45.0;
            total += simpson([](double u) { return bessel_k1(u) / u; }, split, W, 4500);
            return total / kPi;
        }
        case NoiseTag::Gaussian:
            throw InvalidArgument("levy_tail_mass: Gaussian kind has no Levy density");
    }
    return 0.0;
}

double NoiseKind::levy_small_second_moment(double eps) const {
    if (!(eps > 0.0)) throw InvalidArgument("levy_small_second_moment: eps must be positive");
    switch (tag) {
        case NoiseTag::Cauchy: return eps / kPi;
        case NoiseTag::Relativistic: {
            // (1/(pi m)) ∫_0^{m eps} u K1(u) du;  u K1(u) -> 1 as u -> 0.
            const double b = m * eps;
            auto f = [](double u) { return u == 0.0 ? 1.0 : u * bessel_k1(u); };
            return simpson(f, 0.0, b, 400) / (kPi * m);
        }
        case NoiseTag::Gaussian:
            throw InvalidArgument("levy_small_second_moment: Gaussian kind has no Levy density");
    }
    return 0.0;
}

std::string NoiseKind::name() const {
    switch (tag) {
        case NoiseTag::Gaussian: return "gaussian";
        case NoiseTag::Cauchy: return "cauchy";
        case NoiseTag::Relativistic: return "relativistic";
    }
    return "?";
}

}  // namespace levy
