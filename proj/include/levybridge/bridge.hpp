#pragma once

#include <optional>
#include <vector>

#include "levybridge/grid.hpp"
#include "levybridge/kernels.hpp"

namespace levy {

/// Discretized action of a homogeneous semigroup kernel on the periodic grid:
/// (K h)(x_i) = Σ_j k_τ(wrap(x_i - x_j)) h_j dx.  Symmetric (k even), so the
/// transpose action coincides with the forward one.
///
/// Dense materialization for n <= 4096, circulant FFT application above; the
/// two paths agree to rounding and can be forced for tests.
class KernelOperator {
  public:
    enum class Mode { Auto, Dense, Fft };

    KernelOperator(const KernelKind& kind, const Grid1D& grid, double tau,
                   Mode mode = Mode::Auto);

    std::vector<double> apply(std::span<const double> h) const;
    double tau() const { return tau_; }

  private:
    Grid1D grid_;
    double tau_;
    bool dense_;
    std::vector<double> row_;                  // k(wrap(j dx)) dx
    std::vector<cplx> multiplier_;             // DFT of row_ (FFT path)
};

/// Two marginals and the kernel connecting them.
struct BridgeProblem {
    RealField rho1, rho2;
    double t1, t2;
    KernelKind kind;

    BridgeProblem(RealField rho1_, RealField rho2_, double t1_, double t2_, KernelKind kind_);
};

struct BridgeSolution {
    RealField f, g;
    double residual = 0.0;
    int iterations = 0;
};

struct ThetaPair {
    RealField theta, theta_star;
    double t;
};

/// Iterative proportional fitting for m(x,y) = f(x) k(x,t1,y,t2) g(y):
/// repeat g <- rho2 ⊘ (Kᵀ f), f <- rho1 ⊘ (K g) until the L1 marginal
/// residual drops below tol.  The returned pair is gauge-fixed to ∫f dx = 1.
///
/// Grid cells where a marginal is below 1e-300 are excluded from quotients
/// and pinned to zero (support restriction).  Throws NonConvergence or
/// DegenerateMarginal.
BridgeSolution solve_marginal_system(const BridgeProblem& problem, double tol = 1e-10,
                                     int max_iter = 10000,
                                     std::vector<double>* residual_history = nullptr);

/// theta*(.,t) = forward kernel action on f;  theta(.,t) = backward action on g.
/// At the endpoints the kernel degenerates to the identity and the fields are
/// returned directly.
ThetaPair propagate_thetas(const BridgeSolution& sol, const BridgeProblem& problem, double t);

/// Interpolating density rho(.,t) = theta(.,t) * theta*(.,t).
RealField interpolated_density(const BridgeSolution& sol, const BridgeProblem& problem, double t);

/// p(y,s,x,t) = k(y,s,x,t) theta(x,t)/theta(y,s) for t1 <= s < t <= t2.
/// theta values are computed by direct kernel quadrature against g, so y and x
/// need not lie on the grid.
double transition_density(const BridgeSolution& sol, const BridgeProblem& problem, double y,
                          double s, double x, double t);

/// Row-major n x n matrix P[i*n+j] = p(x_j, s, x_i, t) on the problem grid,
/// using grid-propagated thetas (one kernel application instead of n²).
std::vector<double> transition_matrix(const BridgeSolution& sol, const BridgeProblem& problem,
                                      double s, double t);

}  // namespace levy
