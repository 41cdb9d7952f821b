#pragma once

#include <vector>

#include "levybridge/grid.hpp"
#include "levybridge/noise.hpp"

namespace levy {

/// Explicit unitary Cauchy evolution of psi0(x) = sqrt(2/π)/(1+x²):
///   psi(x,s) = (1/2)[f(x+s)+f(x-s)] + (i/2)[(x-s)f(x-s) - (x+s)f(x+s)].
cplx cauchy_closed_form_state(double x, double s);

/// |psi(x,s)|² in closed form: (1+s²) sqrt(rho0(x+s) rho0(x-s)).
double cauchy_density(double x, double s);

/// rho0(x) = (2/π)/(1+x²)².
double cauchy_density_initial(double x);

/// Characteristic data of the density flow (t > 0):
///   rho^(p,t) = (1/sqrt(2π)) e^{-|p|} [cos(t|p|) + sin(t|p|)/t].
double cauchy_rho_hat(double p, double t);
/// rho0^(p) = (1/sqrt(2π)) (1+|p|) e^{-|p|}.
double cauchy_rho0_hat(double p);

struct MadelungPair {
    RealField R, S;
};

/// psi = exp(R + iS): R = ln|psi|, S = phase unwrapped along x (left to right,
/// correcting jumps beyond π by 2π).  Throws NodalRegion if |psi| <= floor
/// anywhere on the grid.
MadelungPair madelung_decompose(const ComplexField& psi, double floor = 1e-12);
ComplexField madelung_reconstruct(const MadelungPair& pair);

/// Q = (H rho^{1/2}) / rho^{1/2}, H applied spectrally.  For the Gaussian kind
/// this equals -D Δrho^{1/2}/rho^{1/2} (so the classic 2Δrho^{1/2}/rho^{1/2}
/// corresponds to -(2/D)·Q).  Entries where rho^{1/2} <= floor are zeroed.
RealField quantum_potential(const RealField& rho_sqrt, const NoiseKind& kind,
                            double floor = 1e-12);

/// Inverse stationary problem: V(x) = E - (H rho^{1/2})(x)/rho^{1/2}(x), the
/// potential making rho^{1/2} a stationary state at energy E.
RealField sturm_liouville_potential(const RealField& rho, const NoiseKind& kind, double E,
                                    double floor = 1e-12);

struct MadelungResiduals {
    double dR = 0.0;           ///< ∂_t R equation, max abs over the window
    double dS = 0.0;           ///< ∂_t S equation
    double dTheta = 0.0;       ///< ∂_t Θ  (Θ = e^{R+S})
    double dThetaStar = 0.0;   ///< ∂_t Θ* (Θ* = e^{R-S})
    std::size_t window_lo = 0, window_hi = 0;   ///< evaluated index range
};

/// Residuals of the Madelung evolution system for i∂_t psi = (H + V) psi,
/// from three equally spaced snapshots (t-dt, t, t+dt):
///
///   ∂_t R = HS - ∫ [e^{R_xy} sin S_xy - S_xy] dν
///   ∂_t S = -HR + ∫ [e^{R_xy} cos S_xy - 1 - R_xy] dν - V
///   ∂_t Θ  =  HΘ  + Θ [-2Q + ∫ e^{R_xy}(-sin S_xy + cos S_xy + e^{S_xy} - 2) dν] - VΘ
///   ∂_t Θ* = -HΘ* + Θ*[ 2Q - ∫ e^{R_xy}( sin S_xy + cos S_xy + e^{-S_xy} - 2) dν] + VΘ*
///
/// with X_xy = X(x+y) - X(x).  Time derivatives are central differences; the
/// H terms are spectral; the ν-integrals use eps-truncated symmetric-pair
/// quadrature with a periodic mean-field tail closure.  Residuals are taken
/// over the window where |psi(t)| >= support_floor * max|psi(t)|.
MadelungResiduals madelung_evolution_residual(const std::vector<ComplexField>& snapshots,
                                              double dt, const NoiseKind& kind, double eps,
                                              const RealField* potential = nullptr,
                                              double support_floor = 1e-5);

struct WaveResiduals {
    double max_abs = 0.0;    ///< max |residual| over the interior window
    double scale = 0.0;      ///< reference ||Δpsi||_∞
    double relative = 0.0;   ///< max_abs / scale
};

/// Second-order-in-time residual of the wave form of the evolution at
/// t_center, from unitary snapshots at t_center and t_center ± dt:
///   Cauchy:        (-Δ + Δ_t) psi = 0
///   Relativistic:  (□ + m²) psi~ = 0 with psi~ = psi e^{-imt}
/// (Gaussian kind rejected: its second-order form is not wave-type.)
WaveResiduals wave_equation_residual(const NoiseKind& kind, const ComplexField& psi0,
                                     double t_center, double dt);

/// Euclidean counterparts on semigroup (real-time) solutions:
///   Cauchy:        (Δ_t + Δ) rho = 0
///   Relativistic:  (Δ_t + Δ - m²) rho~ = 0 with rho~ = rho e^{-mt}
WaveResiduals euclidean_wave_residual(const NoiseKind& kind, const RealField& rho0,
                                      double t_center, double dt);

}  // namespace levy
