#include "levybridge/fourier.hpp"

#include <cmath>
#include <numbers>

#include "levybridge/fft.hpp"

namespace levy::fourier {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;

// Phase factors tying the DFT to the continuum transform on [x_min, x_max):
//   f^(p_k) = (dx/sqrt(2π)) e^{-i p_k x_min} · DFT_k[f_j]
cplx phase(double p, double x_min, int sign) {
    return std::polar(1.0, sign * p * x_min);
}
}  // namespace

ComplexField transform(const ComplexField& f) {
    const auto& g = f.grid();
    auto hat = fft::forward(f.samples());
    const double scale = g.dx() / kSqrt2Pi;
    for (std::size_t k = 0; k < hat.size(); ++k)
        hat[k] *= scale * phase(g.freq(k), g.x_min(), -1);
    return ComplexField(g, std::move(hat));
}

ComplexField transform(const RealField& f) { return transform(ComplexField::from_real(f)); }

ComplexField inverse_transform(const ComplexField& fhat) {
    const auto& g = fhat.grid();
    std::vector<cplx> buf(fhat.size());
    const double scale = g.dx() / kSqrt2Pi;   // undone below; DFT pair normalization
    for (std::size_t k = 0; k < buf.size(); ++k)
        buf[k] = fhat[k] * phase(g.freq(k), g.x_min(), +1) / (scale * static_cast<double>(g.n()));
    auto out = fft::inverse(buf);
    return ComplexField(g, std::move(out));
}

ComplexField apply_multiplier(const ComplexField& f, const std::function<cplx(double)>& m) {
    const auto& g = f.grid();
    auto hat = fft::forward(f.samples());
    const double inv_n = 1.0 / static_cast<double>(g.n());
    for (std::size_t k = 0; k < hat.size(); ++k) hat[k] *= m(g.freq(k)) * inv_n;
    auto out = fft::inverse(hat);
    return ComplexField(g, std::move(out));
}

RealField apply_multiplier_real(const RealField& f, const std::function<double(double)>& m) {
    auto out = apply_multiplier(ComplexField::from_real(f),
                                [&m](double p) { return cplx{m(p), 0.0}; });
    return out.real_part();
}

}  // namespace levy::fourier
