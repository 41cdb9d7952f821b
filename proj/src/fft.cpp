#include "levybridge/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace levy::fft {

namespace {

// FFTW planning is not thread-safe; execution of independent plans is.
std::mutex plan_mutex;

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> in, int sign) {
    const auto n = in.size();
    std::vector<std::complex<double>> out(n);
    std::vector<std::complex<double>> buf(in.begin(), in.end());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(buf.data()),
                                reinterpret_cast<fftw_complex*>(out.data()),
                                sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> in) {
    return transform(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> in) {
    return transform(in, FFTW_BACKWARD);
}

}  // namespace levy::fft
