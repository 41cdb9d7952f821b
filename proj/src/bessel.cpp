#include "levybridge/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "levybridge/errors.hpp"

namespace levy {

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
}

double bessel_i1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 0.5 * z;   // k = 0 term of (z/2) Σ q^k/(k!(k+1)!)
    double sum = term;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double bessel_k1(double z) {
    if (!(z > 0.0)) throw InvalidArgument("bessel_k1: z must be positive");

    if (z <= 2.0) {
        const double q = 0.25 * z * z;
        // Σ_k [ψ(k+1)+ψ(k+2)] q^k / (k!(k+1)!)
        double psi_sum = -2.0 * kEulerGamma + 1.0;   // ψ(1)+ψ(2)
        double fact = 1.0;                           // q^k/(k!(k+1)!)
        double sum = psi_sum;
        for (int k = 1; k < 40; ++k) {
            fact *= q / (static_cast<double>(k) * (k + 1.0));
            psi_sum += 1.0 / static_cast<double>(k) + 1.0 / (k + 1.0);
            const double term = psi_sum * fact;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-18) break;
        }
        return 1.0 / z + std::log(0.5 * z) * bessel_i1_series(z) - 0.25 * z * sum;
    }

    // Continued fraction CF2 evaluated at order mu = 0 (Thompson–Barnett),
    // giving K0; K1 follows from the standard relation.
    const double eps = std::numeric_limits<double>::epsilon();
    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;   // 1/4 - mu^2 at mu = 0
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 20000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) <= eps) break;
    }
    h = a1 * h;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) / s;
    return k0 * (z + 0.5 - h) / z;
}

}  // namespace levy
