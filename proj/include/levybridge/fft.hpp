#pragma once

#include <complex>
#include <span>
#include <vector>

namespace levy::fft {

/// In-place-safe complex DFT, unnormalized:  out_k = sum_j in_j e^{-2πi jk/n}.
std::vector<std::complex<double>> forward(std::span<const std::complex<double>> in);

/// Unnormalized inverse:  out_j = sum_k in_k e^{+2πi jk/n}.  (forward∘inverse = n·id)
std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> in);

}  // namespace levy::fft
