#pragma once

#include "levybridge/grid.hpp"
#include "levybridge/noise.hpp"

namespace levy {

enum class KernelTag { Heat, Cauchy, Relativistic };

/// Closed-form, strictly positive, homogeneous semigroup kernels
/// k(y,s,x,t) = k_{t-s}(x-y).
struct KernelKind {
    KernelTag tag = KernelTag::Heat;
    double D = 1.0;   ///< Heat diffusion coefficient
    double m = 1.0;   ///< Relativistic mass

    static KernelKind heat(double D);
    static KernelKind cauchy();
    static KernelKind relativistic(double m);

    /// The NoiseKind whose semigroup this kernel represents.
    NoiseKind noise() const;
    std::string name() const;
};

/// k(y,s,x,t); rejects t <= s.
///   Heat:         [4πD(t-s)]^{-1/2} exp[-(x-y)²/(4D(t-s))]
///   Cauchy:       (1/π)(t-s)/[(t-s)² + (x-y)²]
///   Relativistic: (m τ e^{mτ}/π) K1(m sqrt(r²+τ²))/sqrt(r²+τ²),  τ=t-s, r=x-y
double kernel_eval(const KernelKind& kind, double y, double s, double x, double t);

/// Whole-line integral ∫ k(y,s,x,t) dx by compactified midpoint quadrature
/// (x = x0 + c tanθ); spectrally accurate for these kernels.
double kernel_normalization(const KernelKind& kind, double y, double s, double t,
                            std::size_t n_theta = 8192);

/// max over sampled (y,x) pairs of |k(y,s,x,t) - ∫ k(y,s,z,u) k(z,u,x,t) dz|.
/// Pairs are drawn from `grid` with a stride keeping ~`samples_per_axis` points.
double chapman_kolmogorov_residual(const KernelKind& kind, double s, double u, double t,
                                   const Grid1D& grid, std::size_t samples_per_axis = 25);

/// Two-sided conditional (Bernstein) density built from the heat kernel:
///   rho(x,t) = k(0,-a0,x,t) k(x,t,0,a0) / k(0,-a0,0,a0),   |t| < a0.
double bernstein_density(double x, double t, double alpha0, double D);

}  // namespace levy
