#pragma once

#include "levybridge/fourier.hpp"
#include "levybridge/grid.hpp"
#include "levybridge/noise.hpp"

namespace levy {

/// F(p) for the given kind; exact pointwise evaluation.
double exponent_eval(const NoiseKind& kind, double p);

/// (f^(p) e^{-t F(p)})^∨ on the same grid.  Rejects t < 0.
/// Mass ∫f dx is preserved exactly in the spectral representation (F(0)=0).
RealField apply_semigroup(const RealField& f, const NoiseKind& kind, double t);
ComplexField apply_semigroup(const ComplexField& f, const NoiseKind& kind, double t);

/// (f^(p) e^{-is F(p)})^∨;  L2-norm preserving.
ComplexField apply_unitary(const ComplexField& f, const NoiseKind& kind, double s);

/// H f = (F(p) f^(p))^∨.  Spectral differentiation: input must be resolved on
/// the grid (unresolved high-frequency content aliases).
ComplexField apply_generator_spectral(const ComplexField& f, const NoiseKind& kind);
RealField apply_generator_spectral(const RealField& f, const NoiseKind& kind);

/// H f by eps-truncated Levy-Khintchine quadrature (pure-jump kinds):
///
///   (Hf)(x) = -∫_{|y|>eps} [f(x+y)-f(x)-y f'(x)/(1+y^2)] nu(dy)
///             - (f''(x)/2) ∫_{|y|<=eps} y^2 nu(dy)
///
/// evaluated with +y/-y paired so the odd compensator cancels analytically.
/// The small-|y| block uses the second-order Taylor surrogate shown; its
/// remainder is O(eps) and the pairing leaves no odd residue.
ComplexField apply_generator_levy(const ComplexField& f, const NoiseKind& kind, double eps);
RealField apply_generator_levy(const RealField& f, const NoiseKind& kind, double eps);

/// ((p^2+m^2)^{1/4} f^(p))^∨ — converts a Klein-Gordon-normalized solution
/// into a Schrodinger-normalized one.  Commutes with apply_unitary.
ComplexField newton_wigner_map(const ComplexField& f, double m);

/// Discretized Klein-Gordon inner norm  ∫ [conj(f)·sqrt(-Δ+m²)f + c.c.] dx
/// evaluated in momentum space as  2 ∫ sqrt(p²+m²) |f^(p)|² dp.
double kg_norm_squared(const ComplexField& f, double m);

}  // namespace levy
