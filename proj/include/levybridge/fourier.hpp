#pragma once

#include <functional>

#include "levybridge/grid.hpp"

namespace levy {

/// Symmetric Fourier convention used throughout:
///
///   f^(p) = (1/sqrt(2π)) ∫ e^{-ipx} f(x) dx,    f(x) = (1/sqrt(2π)) ∫ e^{+ipx} f^(p) dp.
///
/// Parseval holds exactly in the discrete representation: ||f||_2 = ||f^||_2.
namespace fourier {

/// Samples of f^(p_k) on the dual grid, FFT bin order (use grid.freq(k)).
ComplexField transform(const ComplexField& f);
ComplexField transform(const RealField& f);

/// Inverse of transform(); returns samples on the original spatial grid.
ComplexField inverse_transform(const ComplexField& fhat);

/// (m(p_k) · f^(p_k))^∨ for a scalar multiplier m, complex-valued allowed.
ComplexField apply_multiplier(const ComplexField& f, const std::function<cplx(double)>& m);

/// Same for a real field input and real multiplier; imaginary residue discarded
/// (exact for even real multipliers).
RealField apply_multiplier_real(const RealField& f, const std::function<double(double)>& m);

}  // namespace fourier

}  // namespace levy
