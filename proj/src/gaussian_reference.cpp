#include "levybridge/gaussian_reference.hpp"

#include <cmath>
#include <numbers>

namespace levy::gaussian_ref {

namespace {
constexpr double kPi = std::numbers::pi;
}

cplx free_packet_psi(double x, double t, double alpha2, double D) {
    if (!(alpha2 > 0.0) || !(D > 0.0))
        throw InvalidArgument("free_packet_psi: alpha2, D must be positive");
    const cplx denom{alpha2, 2.0 * D * t};
    const cplx pref = std::pow(cplx{alpha2 / kPi, 0.0}, 0.25) / std::sqrt(denom);
    return pref * std::exp(-x * x / (2.0 * denom));
}

double free_packet_density(double x, double t, double alpha2, double D) {
    if (!(alpha2 > 0.0) || !(D > 0.0))
        throw InvalidArgument("free_packet_density: alpha2, D must be positive");
    const double alpha = std::sqrt(alpha2);
    const double w = alpha2 * alpha2 + 4.0 * D * D * t * t;
    return alpha / std::sqrt(kPi * w) * std::exp(-x * x * alpha2 / w);
}

double nelson_c(double s, double t) {
    return std::sqrt(((1.0 - t) * (1.0 - t) + 2.0 * s) / (1.0 + s * s));
}

double nelson_transition(double y, double s, double x, double t) {
    if (!(t > s)) throw InvalidArgument("nelson_transition: t > s required");
    const double c = nelson_c(s, t);
    const double v = 4.0 * (t - s);
    const double r = x - c * y;
    return std::exp(-r * r / v) / std::sqrt(kPi * v);
}

double madelung_R(double x, double t) {
    return -0.25 * std::log(2.0 * kPi * (1.0 + t * t)) - x * x / (4.0 * (1.0 + t * t));
}

double madelung_S(double x, double t) {
    return 0.25 * x * x * t / (1.0 + t * t) - 0.5 * std::atan(t);
}

double heat_pair_theta_star(double x, double t, double alpha2, double D) {
    const double w = alpha2 + 2.0 * D * t;
    if (!(w > 0.0)) throw InvalidArgument("heat_pair_theta_star: requires alpha2 + 2Dt > 0");
    return std::pow(alpha2 / kPi, 0.25) / std::sqrt(w) * std::exp(-x * x / (2.0 * w));
}

double heat_pair_theta(double x, double t, double alpha2, double D) {
    return heat_pair_theta_star(x, -t, alpha2, D);
}

double bernstein_gaussian_density(double x, double t, double alpha2, double D) {
    const double w = alpha2 * alpha2 - 4.0 * D * D * t * t;
    if (!(w > 0.0))
        throw InvalidArgument("bernstein_gaussian_density: requires |t| < alpha2/(2D)");
    return std::sqrt(alpha2 / (kPi * w)) * std::exp(-alpha2 * x * x / w);
}

}  // namespace levy::gaussian_ref
