#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "levybridge/errors.hpp"

namespace levy {

using cplx = std::complex<double>;

/// Uniform periodic grid on [x_min, x_max): x_j = x_min + j*dx, j = 0..n-1.
///
/// n must be a power of two (>= 16).  The dual grid carries frequencies
/// p_k = 2*pi*k'/(n*dx) with k' the signed FFT bin, spanning [-pi/dx, pi/dx).
class Grid1D {
  public:
    Grid1D(double x_min, double x_max, std::size_t n);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t n() const { return n_; }
    double dx() const { return dx_; }
    double length() const { return x_max_ - x_min_; }

    double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

    /// Signed frequency of FFT bin k (k = 0..n-1), in [-pi/dx, pi/dx).
    double freq(std::size_t k) const {
        const auto half = n_ / 2;
        const double signed_bin = (k < half) ? static_cast<double>(k)
                                             : static_cast<double>(k) - static_cast<double>(n_);
        return two_pi_over_length_ * signed_bin;
    }

    std::vector<double> points() const;

    bool operator==(const Grid1D& o) const {
        return x_min_ == o.x_min_ && x_max_ == o.x_max_ && n_ == o.n_;
    }

  private:
    double x_min_, x_max_, dx_, two_pi_over_length_;
    std::size_t n_;
};

/// Real-valued samples on a Grid1D.  All samples finite by construction.
class RealField {
  public:
    RealField(Grid1D grid, std::vector<double> samples);
    static RealField zeros(const Grid1D& grid);
    /// Sample a callable f(x) on the grid.
    template <typename F>
    static RealField sample(const Grid1D& grid, F&& f) {
        std::vector<double> v(grid.n());
        for (std::size_t j = 0; j < grid.n(); ++j) v[j] = f(grid.x(j));
        return RealField(grid, std::move(v));
    }

    const Grid1D& grid() const { return grid_; }
    std::span<const double> samples() const { return v_; }
    std::span<double> samples() { return v_; }
    double operator[](std::size_t j) const { return v_[j]; }
    double& operator[](std::size_t j) { return v_[j]; }
    std::size_t size() const { return v_.size(); }

    /// Trapezoid quadrature on the periodic grid (== rectangle rule there).
    double integrate() const;
    double l1_norm() const;
    double l2_norm() const;
    double max_abs() const;

  private:
    Grid1D grid_;
    std::vector<double> v_;
};

/// Complex-valued samples on a Grid1D.
class ComplexField {
  public:
    ComplexField(Grid1D grid, std::vector<cplx> samples);
    static ComplexField zeros(const Grid1D& grid);
    static ComplexField from_real(const RealField& f);
    template <typename F>
    static ComplexField sample(const Grid1D& grid, F&& f) {
        std::vector<cplx> v(grid.n());
        for (std::size_t j = 0; j < grid.n(); ++j) v[j] = f(grid.x(j));
        return ComplexField(grid, std::move(v));
    }

    const Grid1D& grid() const { return grid_; }
    std::span<const cplx> samples() const { return v_; }
    std::span<cplx> samples() { return v_; }
    cplx operator[](std::size_t j) const { return v_[j]; }
    cplx& operator[](std::size_t j) { return v_[j]; }
    std::size_t size() const { return v_.size(); }

    cplx integrate() const;
    double l2_norm() const;
    double max_abs() const;
    RealField abs2() const;   ///< |f|^2 as a RealField
    RealField real_part() const;
    RealField imag_part() const;

  private:
    Grid1D grid_;
    std::vector<cplx> v_;
};

/// max_j |a_j - b_j| for same-grid fields.
double max_abs_diff(const RealField& a, const RealField& b);
double max_abs_diff(const ComplexField& a, const ComplexField& b);
/// Trapezoid L1 distance for same-grid fields.
double l1_distance(const RealField& a, const RealField& b);

}  // namespace levy
