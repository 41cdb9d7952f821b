#include "levybridge/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levybridge/fft.hpp"

namespace levy {

namespace {
constexpr double kSupportFloor = 1e-300;

double wrap_displacement(std::size_t j, const Grid1D& g) {
    return (j <= g.n() / 2) ? static_cast<double>(j) * g.dx()
                            : (static_cast<double>(j) - static_cast<double>(g.n())) * g.dx();
}
}  // namespace

KernelOperator::KernelOperator(const KernelKind& kind, const Grid1D& grid, double tau, Mode mode)
    : grid_(grid), tau_(tau) {
    if (!(tau > 0.0)) throw InvalidArgument("KernelOperator: tau must be positive");
    row_.resize(grid.n());
    for (std::size_t j = 0; j < grid.n(); ++j)
        row_[j] = kernel_eval(kind, 0.0, 0.0, wrap_displacement(j, grid), tau) * grid.dx();
    dense_ = (mode == Mode::Dense) || (mode == Mode::Auto && grid.n() <= 4096);
    if (!dense_) {
        std::vector<cplx> r(grid.n());
        for (std::size_t j = 0; j < grid.n(); ++j) r[j] = cplx{row_[j], 0.0};
        multiplier_ = fft::forward(r);
    }
}

std::vector<double> KernelOperator::apply(std::span<const double> h) const {
    const std::size_t n = grid_.n();
    if (h.size() != n) throw InvalidArgument("KernelOperator: size mismatch");
    std::vector<double> out(n, 0.0);
    if (dense_) {
        // circulant row: out_i = Σ_j row[(i-j) mod n] h_j ; row symmetric
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += row_[(i + n - j) % n] * h[j];
            out[i] = s;
        }
    } else {
        std::vector<cplx> hc(n);
        for (std::size_t j = 0; j < n; ++j) hc[j] = cplx{h[j], 0.0};
        auto hhat = fft::forward(hc);
        for (std::size_t k = 0; k < n; ++k) hhat[k] *= multiplier_[k] / static_cast<double>(n);
        auto conv = fft::inverse(hhat);
        for (std::size_t j = 0; j < n; ++j) out[j] = conv[j].real();
    }
    return out;
}

BridgeProblem::BridgeProblem(RealField rho1_, RealField rho2_, double t1_, double t2_,
                             KernelKind kind_)
    : rho1(std::move(rho1_)), rho2(std::move(rho2_)), t1(t1_), t2(t2_), kind(kind_) {
    if (!(t1 < t2)) throw InvalidArgument("BridgeProblem: t1 < t2 required");
    if (!(rho1.grid() == rho2.grid()))
        throw InvalidArgument("BridgeProblem: marginals must share a grid");
    for (std::size_t j = 0; j < rho1.size(); ++j)
        if (rho1[j] < 0.0 || rho2[j] < 0.0)
            throw InvalidArgument("BridgeProblem: marginals must be nonnegative");
    for (const RealField* r : {&rho1, &rho2})
        if (std::abs(r->integrate() - 1.0) > 1e-8)
            throw InvalidArgument("BridgeProblem: marginals must integrate to 1 (1e-8)");
}

BridgeSolution solve_marginal_system(const BridgeProblem& problem, double tol, int max_iter,
                                     std::vector<double>* residual_history) {
    const auto& grid = problem.rho1.grid();
    const std::size_t n = grid.n();
    KernelOperator K(problem.kind, grid, problem.t2 - problem.t1);

    std::vector<bool> live1(n), live2(n);
    for (std::size_t j = 0; j < n; ++j) {
        live1[j] = problem.rho1[j] > kSupportFloor;
        live2[j] = problem.rho2[j] > kSupportFloor;
    }

    std::vector<double> f(n, 0.0), g(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        f[j] = live1[j] ? 1.0 : 0.0;
        g[j] = live2[j] ? 1.0 : 0.0;
    }

    auto safe_divide = [](double num, double den, const char* where) {
        if (!(den > 0.0) || !std::isfinite(den)) throw DegenerateMarginal(where);
        return num / den;
    };

    double residual = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < max_iter; ++it) {
        auto Ktf = K.apply(f);   // symmetric kernel: Kᵀ = K
        for (std::size_t j = 0; j < n; ++j)
            g[j] = live2[j] ? safe_divide(problem.rho2[j], Ktf[j], "bridge: zero mass under g-update")
                            : 0.0;
        auto Kg = K.apply(g);
        for (std::size_t j = 0; j < n; ++j)
            f[j] = live1[j] ? safe_divide(problem.rho1[j], Kg[j], "bridge: zero mass under f-update")
                            : 0.0;
        // f-constraint is exact after the update; measure the g-constraint.
        auto Ktf2 = K.apply(f);
        double res = 0.0;
        for (std::size_t j = 0; j < n; ++j) res += std::abs(g[j] * Ktf2[j] - problem.rho2[j]);
        residual = res * grid.dx();
        if (residual_history) residual_history->push_back(residual);
        if (residual <= tol) {
            ++it;
            break;
        }
    }
    if (residual > tol)
        throw NonConvergence("bridge: residual " + std::to_string(residual) + " after " +
                             std::to_string(max_iter) + " iterations");

    // gauge: ∫ f dx = 1
    double fmass = 0.0;
    for (double v : f) fmass += v;
    fmass *= grid.dx();
    for (std::size_t j = 0; j < n; ++j) {
        f[j] /= fmass;
        g[j] *= fmass;
    }
    return BridgeSolution{RealField(grid, std::move(f)), RealField(grid, std::move(g)),
                          residual, it};
}

ThetaPair propagate_thetas(const BridgeSolution& sol, const BridgeProblem& problem, double t) {
    if (t < problem.t1 || t > problem.t2)
        throw InvalidArgument("propagate_thetas: t outside [t1, t2]");
    const auto& grid = sol.f.grid();
    RealField theta_star = sol.f;
    RealField theta = sol.g;
    if (t > problem.t1) {
        KernelOperator Kf(problem.kind, grid, t - problem.t1);
        auto v = Kf.apply(sol.f.samples());
        theta_star = RealField(grid, std::move(v));
    }
    if (t < problem.t2) {
        KernelOperator Kb(problem.kind, grid, problem.t2 - t);
        auto v = Kb.apply(sol.g.samples());
        theta = RealField(grid, std::move(v));
    }
    return ThetaPair{std::move(theta), std::move(theta_star), t};
}

RealField interpolated_density(const BridgeSolution& sol, const BridgeProblem& problem,
                               double t) {
    auto pair = propagate_thetas(sol, problem, t);
    std::vector<double> v(pair.theta.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = pair.theta[j] * pair.theta_star[j];
    return RealField(sol.f.grid(), std::move(v));
}

namespace {
// theta(x, t) = Σ_j k(x, t, x_j, t2) g_j dx by direct quadrature.
double theta_at(const BridgeSolution& sol, const BridgeProblem& problem, double x, double t) {
    if (t >= problem.t2) {
        // identity limit: nearest-node value of g
        const auto& grid = sol.g.grid();
        auto j = static_cast<std::ptrdiff_t>(std::llround((x - grid.x_min()) / grid.dx()));
        j = std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(grid.n()) - 1);
        return sol.g[static_cast<std::size_t>(j)];
    }
    const auto& grid = sol.g.grid();
    double s = 0.0;
    for (std::size_t j = 0; j < grid.n(); ++j)
        s += kernel_eval(problem.kind, x, t, grid.x(j), problem.t2) * sol.g[j];
    return s * grid.dx();
}
}  // namespace

double transition_density(const BridgeSolution& sol, const BridgeProblem& problem, double y,
                          double s, double x, double t) {
    if (!(problem.t1 <= s && s < t && t <= problem.t2))
        throw InvalidArgument("transition_density: need t1 <= s < t <= t2");
    const double th_x = theta_at(sol, problem, x, t);
    const double th_y = theta_at(sol, problem, y, s);
    if (!(th_y > 0.0)) throw DegenerateMarginal("transition_density: theta(y,s) vanishes");
    return kernel_eval(problem.kind, y, s, x, t) * th_x / th_y;
}

std::vector<double> transition_matrix(const BridgeSolution& sol, const BridgeProblem& problem,
                                      double s, double t) {
    if (!(problem.t1 <= s && s < t && t <= problem.t2))
        throw InvalidArgument("transition_matrix: need t1 <= s < t <= t2");
    const auto& grid = sol.f.grid();
    const std::size_t n = grid.n();
    auto th_s = propagate_thetas(sol, problem, s).theta;
    auto th_t = propagate_thetas(sol, problem, t).theta;
    std::vector<double> P(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (!(th_s[j] > 0.0))
                throw DegenerateMarginal("transition_matrix: theta(y,s) vanishes");
            P[i * n + j] = kernel_eval(problem.kind, grid.x(j), s, x, t) * th_t[i] / th_s[j];
        }
    }
    return P;
}

}  // namespace levy
