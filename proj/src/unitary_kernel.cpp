#include "levybridge/unitary_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levybridge/errors.hpp"
#include "levybridge/fft.hpp"

namespace levy {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

constexpr std::size_t kTableN = std::size_t{1} << 22;   // FFT size
constexpr double kCutoff = 2000.0;                      // momentum cutoff |p| <= P

// Small-x series of g and its first two antiderivatives (|x| <= x_loc).
double g_series(double x) {
    const double lg = kEulerGamma + std::log(x);
    return (-lg + 0.5 * kPi * x + x * x * (0.5 * lg - 0.75) - kPi / 12.0 * x * x * x) / kPi;
}

double I_series(double x) {
    const double lx = std::log(x);
    const double x2 = x * x, x3 = x2 * x;
    return x *
           ((24.0 * x2 - 144.0) * (kEulerGamma + lx) - 3.0 * kPi * x3 - 44.0 * x2 +
            36.0 * kPi * x + 144.0) /
           (144.0 * kPi);
}

double I2_series(double x) {
    const double lx = std::log(x);
    const double x2 = x * x, x3 = x2 * x;
    return x2 *
           ((60.0 * x2 - 720.0) * (kEulerGamma + lx) - 6.0 * kPi * x3 - 125.0 * x2 +
            120.0 * kPi * x + 1080.0) /
           (1440.0 * kPi);
}

// Large-x expansion of g and its antiderivatives (primitive fixed at +∞ for I).
double g_tail(double x) {
    const double ix2 = 1.0 / (x * x);
    return (ix2 - 6.0 * ix2 * ix2 + 120.0 * ix2 * ix2 * ix2) / kPi;
}

// F(x) = ∫ g_tail dx  (antiderivative, no constant)
double F_tail(double x) {
    const double ix = 1.0 / x;
    return (-ix + 2.0 * ix * ix * ix - 24.0 * std::pow(ix, 5)) / kPi;
}

// FF(x) = ∫ F_tail dx
double FF_tail(double x) {
    const double ix2 = 1.0 / (x * x);
    return (-std::log(x) - ix2 + 6.0 * ix2 * ix2) / kPi;
}

}  // namespace

GTable::GTable() {
    // g(x_j) on x_j = j*dx via centered FFT of the truncated multiplier.
    // dx = π/P puts the nodes on the zeros of the leading cutoff ringing.
    const std::size_t n = kTableN;
    const double dp = 2.0 * kCutoff / static_cast<double>(n);
    dx_ = kPi / kCutoff;

    std::vector<cplx> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = (static_cast<double>(k) - static_cast<double>(n / 2)) * dp;
        const double v = 1.0 / (1.0 + std::abs(p));
        a[k] = (k % 2 == 0) ? cplx{v, 0.0} : cplx{-v, 0.0};
    }
    auto out = fft::forward(a);

    const std::size_t m = static_cast<std::size_t>(std::ceil(x_swap_ / dx_)) + 2;
    g_.resize(m);
    const double scale = dp / (2.0 * kPi);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = n / 2 + i;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        g_[i] = sign * scale * out[j].real();
    }

    // Zone-2 cumulants anchored on the series at the first node above the
    // nominal series radius; the zone boundary then sits exactly on a node.
    j_loc_ = static_cast<std::size_t>(std::floor(x_loc_ / dx_)) + 1;
    x_loc_ = static_cast<double>(j_loc_) * dx_;
    i1_.assign(m, 0.0);
    i2_.assign(m, 0.0);
    i1_[j_loc_] = I_series(static_cast<double>(j_loc_) * dx_);
    i2_[j_loc_] = I2_series(static_cast<double>(j_loc_) * dx_);
    double c1 = 0.0, c2 = 0.0;   // Kahan compensation
    for (std::size_t j = j_loc_ + 1; j < m; ++j) {
        const double dI = 0.5 * (g_[j - 1] + g_[j]) * dx_;
        double y = dI - c1;
        double s = i1_[j - 1] + y;
        c1 = (s - i1_[j - 1]) - y;
        i1_[j] = s;
        const double dI2 = 0.5 * (i1_[j - 1] + i1_[j]) * dx_;
        y = dI2 - c2;
        s = i2_[j - 1] + y;
        c2 = (s - i2_[j - 1]) - y;
        i2_[j] = s;
    }

    // Total mass of the glued construction; normalize to exactly 1.
    const double I_swap = I(x_swap_);
    const double half_mass = I_swap + (0.0 - F_tail(x_swap_));   // F_tail(∞) = 0
    raw_mass_defect_ = 2.0 * half_mass - 1.0;
    norm_ = 2.0 * half_mass;
}

namespace {
double table_interp(const std::vector<double>& tab, double u) {
    const std::size_t j = std::min(static_cast<std::size_t>(u), tab.size() - 2);
    const double w = u - static_cast<double>(j);
    return (1.0 - w) * tab[j] + w * tab[j + 1];
}
}  // namespace

double GTable::I(double ax) const {
    if (ax <= x_loc_) return I_series(std::max(ax, 1e-300));
    if (ax >= x_swap_)
        return table_interp(i1_, x_swap_ / dx_) + (F_tail(ax) - F_tail(x_swap_));
    return table_interp(i1_, ax / dx_);
}

double GTable::I2(double ax) const {
    if (ax <= x_loc_) return I2_series(std::max(ax, 1e-300));
    if (ax >= x_swap_) {
        const double i_xs = table_interp(i1_, x_swap_ / dx_);
        const double i2_xs = table_interp(i2_, x_swap_ / dx_);
        // ∫_xs^ax I(v) dv with I(v) = I(xs) - F_tail(xs) + F_tail(v)
        return i2_xs + (i_xs - F_tail(x_swap_)) * (ax - x_swap_) +
               (FF_tail(ax) - FF_tail(x_swap_));
    }
    return table_interp(i2_, ax / dx_);
}

double GTable::g(double x) const {
    const double ax = std::abs(x);
    if (ax >= x_swap_) return g_tail(ax) / norm_;
    if (ax <= x_loc_) {
        if (ax < 1e-300) throw SingularPoint("g diverges at x = 0");
        return g_series(ax) / norm_;
    }
    const double u = ax / dx_;
    const std::size_t j = std::min(static_cast<std::size_t>(u), g_.size() - 2);
    const double w = u - static_cast<double>(j);
    return ((1.0 - w) * g_[j] + w * g_[j + 1]) / norm_;
}

double GTable::G(double x) const {
    const double half = 0.5;
    const double i = I(std::abs(x)) / norm_;
    return x >= 0.0 ? half + i : half - i;
}

double GTable::G2(double x) const { return 0.5 * x + I2(std::abs(x)) / norm_; }

const GTable& GTable::instance() {
    static GTable table;
    return table;
}

double cauchy_unitary_transition(double x, double t, double singular_radius) {
    if (!(t > 0.0)) throw InvalidArgument("cauchy_unitary_transition: t must be positive");
    if (std::abs(std::abs(x) - t) < singular_radius)
        throw SingularPoint("cauchy_unitary_transition: evaluation at x = +-t");
    const auto& tab = GTable::instance();
    const double chi = (std::abs(x) <= t) ? 1.0 : 0.0;
    return 0.5 * (tab.g(x + t) + tab.g(x - t)) + chi / (2.0 * t) -
           (tab.G(x + t) - tab.G(x - t)) / (2.0 * t);
}

RealField sample_cauchy_unitary_transition(const Grid1D& grid, double t) {
    if (!(t > 0.0)) throw InvalidArgument("sample_cauchy_unitary_transition: t > 0 required");
    const auto& tab = GTable::instance();
    const double h = grid.dx();
    std::vector<double> v(grid.n());
    for (std::size_t j = 0; j < grid.n(); ++j) {
        const double a = grid.x(j) - 0.5 * h;
        const double b = grid.x(j) + 0.5 * h;
        const double term1 = 0.5 * ((tab.G(b + t) - tab.G(a + t)) + (tab.G(b - t) - tab.G(a - t)));
        const double overlap = std::max(0.0, std::min(b, t) - std::max(a, -t));
        const double term3 = -(tab.G2(b + t) - tab.G2(a + t) - tab.G2(b - t) + tab.G2(a - t)) /
                             (2.0 * t);
        v[j] = (term1 + overlap / (2.0 * t) + term3) / h;
    }
    return RealField(grid, std::move(v));
}

double cauchy_unitary_moment(double t, int k, double window, std::size_t n_cells) {
    if (!(t > 0.0)) throw InvalidArgument("cauchy_unitary_moment: t must be positive");
    if (k < 0 || k > 2) throw InvalidArgument("cauchy_unitary_moment: k in {0,1,2}");
    const auto& tab = GTable::instance();
    const double h = 2.0 * window / static_cast<double>(n_cells);
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < n_cells; ++j) {
        const double a = -window + static_cast<double>(j) * h;
        const double b = a + h;
        const double xc = 0.5 * (a + b);
        const double term1 = 0.5 * ((tab.G(b + t) - tab.G(a + t)) + (tab.G(b - t) - tab.G(a - t)));
        const double overlap = std::max(0.0, std::min(b, t) - std::max(a, -t));
        const double term3 = -(tab.G2(b + t) - tab.G2(a + t) - tab.G2(b - t) + tab.G2(a - t)) /
                             (2.0 * t);
        const double cell_mass = term1 + overlap / (2.0 * t) + term3;
        const double w = (k == 0) ? 1.0 : (k == 1 ? xc : xc * xc);
        const double y = w * cell_mass - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    // analytic tail: p ~ 2t²/(π x⁴) beyond the window
    if (k == 0) sum += 4.0 * t * t / (3.0 * kPi * window * window * window);
    if (k == 2) sum += 4.0 * t * t / (kPi * window);
    return sum;
}

}  // namespace levy
