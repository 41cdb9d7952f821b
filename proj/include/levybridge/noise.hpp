#pragma once

#include <string>

#include "levybridge/errors.hpp"

namespace levy {

enum class NoiseTag { Gaussian, Cauchy, Relativistic };

/// An infinitely divisible driving law: Gaussian(D), Cauchy, or Relativistic(m).
///
/// Carries the characteristic exponent F(p) (real, even, F(0)=0, F>=0) and,
/// for the pure-jump kinds, the Levy jump density nu(y).
struct NoiseKind {
    NoiseTag tag = NoiseTag::Cauchy;
    double D = 0.0;   ///< diffusion coefficient (Gaussian)
    double m = 0.0;   ///< mass (Relativistic)

    static NoiseKind gaussian(double D);
    static NoiseKind cauchy();
    static NoiseKind relativistic(double m);

    /// F(p): D p^2, |p|, or sqrt(p^2+m^2)-m.
    double exponent(double p) const;

    bool pure_jump() const { return tag != NoiseTag::Gaussian; }

    /// Levy density nu(y) for y != 0; pure-jump kinds only.
    /// Cauchy: 1/(pi y^2).  Relativistic: (m/(pi|y|)) K1(m|y|).
    double levy_density(double y) const;

    /// One-sided truncated tail mass  ∫_Y^∞ nu(y) dy.
    double levy_tail_mass(double Y) const;

    /// One-sided small-jump second moment  ∫_0^eps y^2 nu(y) dy.
    double levy_small_second_moment(double eps) const;

    std::string name() const;
};

}  // namespace levy
