#pragma once

#include "levybridge/grid.hpp"

namespace levy {

/// Closed forms for the Gaussian (Laplacian-generated) reference dynamics.
/// Wave-packet formulas take the squared width alpha2 (= α²) and diffusion
/// coefficient D; the Nelson/Madelung family is specialized to α² = 2, D = 1.
namespace gaussian_ref {

/// Free packet ψ(x,t) evolving under i ∂_t ψ = -D Δψ from the real Gaussian
/// of squared width α².
cplx free_packet_psi(double x, double t, double alpha2, double D);

/// |ψ(x,t)|² of the free packet.
double free_packet_density(double x, double t, double alpha2, double D);

/// Drift coefficient c(s,t) of the two-time transition of the α²=2, D=1
/// packet flow: c = sqrt(((1-t)² + 2s)/(1+s²)).
double nelson_c(double s, double t);

/// p(y,s,x,t) = [4π(t-s)]^{-1/2} exp[-(x - c(s,t) y)²/(4(t-s))],  t > s.
double nelson_transition(double y, double s, double x, double t);

/// Madelung exponents of the α²=2, D=1 packet: ψ = exp(R + iS).
double madelung_R(double x, double t);
double madelung_S(double x, double t);

/// Imaginary-time pair obtained from the packet by t -> -it (α², D general):
///   theta_star(x,t) = (α²/π)^{1/4} (α²+2Dt)^{-1/2} exp[-x²/(2(α²+2Dt))]
///   theta(x,t)      = same with t -> -t;  defined while α² ∓ 2Dt > 0.
double heat_pair_theta_star(double x, double t, double alpha2, double D);
double heat_pair_theta(double x, double t, double alpha2, double D);

/// Interpolating density theta*theta_star in closed form:
///   [α²/(π(α⁴-4D²t²))]^{1/2} exp[-α²x²/(α⁴-4D²t²)],  |t| < α²/(2D).
double bernstein_gaussian_density(double x, double t, double alpha2, double D);

}  // namespace gaussian_ref

}  // namespace levy
