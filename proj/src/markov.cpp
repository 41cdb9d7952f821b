#include "levybridge/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace levy {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPoleFloor = 1e-12;
}

double phase_bracket(double p, double t) {
    const double ap = std::abs(p);
    return std::cos(t * ap) + std::sin(t * ap) / t;
}

double h_ratio(double p, double s, double t) {
    if (!(0.0 < s && s < t)) throw InvalidArgument("h_ratio: need 0 < s < t");
    const double den = phase_bracket(p, s);
    if (std::abs(den) < kPoleFloor) throw PoleProximity("h_ratio: denominator bracket vanishes");
    return phase_bracket(p, t) / den;
}

std::vector<double> denominator_zeros(double s, int count) {
    if (!(s > 0.0)) throw InvalidArgument("denominator_zeros: s must be positive");
    if (count < 1) throw InvalidArgument("denominator_zeros: count must be >= 1");
    const double alpha = std::atan(1.0 / s);
    std::vector<double> zeros(count);
    for (int N = 0; N < count; ++N)
        zeros[N] = (alpha + (2.0 * N + 1.0) * kPi / 2.0) / s;
    return zeros;
}

TwoPointCheck two_point_violation(double p1, double p2, double s, double t) {
    if (p1 == p2) throw InvalidArgument("two_point_violation: p1 != p2 required");
    const double M = h_ratio(p1 - p2, s, t);
    return TwoPointCheck{M, 1.0 - M * M};
}

double jacobi_min_eigenvalue(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) throw InvalidArgument("jacobi_min_eigenvalue: bad matrix size");
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                const double sgn = (theta >= 0.0) ? 1.0 : -1.0;
                const double tt = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double mn = at(0, 0);
    for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, at(i, i));
    return mn;
}

double pd_matrix_min_eigenvalue(const std::function<double(double)>& h,
                                std::span<const double> points) {
    const std::size_t n = points.size();
    if (n < 2) throw InvalidArgument("pd_matrix_min_eigenvalue: need at least 2 points");
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = h(points[i] - points[j]);
    return jacobi_min_eigenvalue(std::move(a), n);
}

PDWitness find_nonmarkov_witness(double s, double t) {
    if (!(0.0 < s && s < t)) throw InvalidArgument("find_nonmarkov_witness: need 0 < s < t");
    const auto zeros = denominator_zeros(s, 5);
    constexpr double offsets[] = {1e-2, 1e-3, 1e-4};
    int skipped = 0;
    for (double z : zeros) {
        if (std::abs(phase_bracket(z, t)) < 1e-6) {
            ++skipped;
            continue;   // numerator shares the zero; no divergence here
        }
        PDWitness best;
        bool found = false;
        for (double delta : offsets) {
            for (double side : {-1.0, +1.0}) {
                const double p = z + side * delta;
                double M;
                try {
                    M = h_ratio(p, s, t);
                } catch (const PoleProximity&) {
                    continue;
                }
                if (std::abs(M) > 1.0 + 1e-6 && std::abs(M) > std::abs(best.M)) {
                    best = PDWitness{p, 0.0, s, t, M, 0.0};
                    found = true;
                }
            }
        }
        if (found) {
            const double pts[2] = {best.p1, best.p2};
            best.min_eigenvalue = pd_matrix_min_eigenvalue(
                [&](double p) { return (p == 0.0) ? 1.0 : h_ratio(p, s, t); },
                std::span<const double>(pts, 2));
            return best;
        }
    }
    throw WitnessNotFound("find_nonmarkov_witness: all " + std::to_string(skipped) +
                          " candidate zeros were numerator-degenerate");
}

}  // namespace levy
