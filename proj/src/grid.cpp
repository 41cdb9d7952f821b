#include "levybridge/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace levy {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) throw InvalidArgument("field sample is not finite");
}

void check_finite(std::span<const cplx> v) {
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvalidArgument("field sample is not finite");
}

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, std::size_t n)
    : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!(x_max > x_min)) throw InvalidArgument("Grid1D: x_max must exceed x_min");
    if (!is_power_of_two(n) || n < 16)
        throw InvalidArgument("Grid1D: n must be a power of two >= 16");
    dx_ = (x_max - x_min) / static_cast<double>(n);
    two_pi_over_length_ = 2.0 * std::numbers::pi / (x_max - x_min);
}

std::vector<double> Grid1D::points() const {
    std::vector<double> p(n_);
    for (std::size_t j = 0; j < n_; ++j) p[j] = x(j);
    return p;
}

RealField::RealField(Grid1D grid, std::vector<double> samples)
    : grid_(grid), v_(std::move(samples)) {
    if (v_.size() != grid_.n()) throw InvalidArgument("RealField: sample count != grid size");
    check_finite(v_);
}

RealField RealField::zeros(const Grid1D& grid) {
    return RealField(grid, std::vector<double>(grid.n(), 0.0));
}

double RealField::integrate() const {
    double s = 0.0;
    for (double x : v_) s += x;
    return s * grid_.dx();
}

double RealField::l1_norm() const {
    double s = 0.0;
    for (double x : v_) s += std::abs(x);
    return s * grid_.dx();
}

double RealField::l2_norm() const {
    double s = 0.0;
    for (double x : v_) s += x * x;
    return std::sqrt(s * grid_.dx());
}

double RealField::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

ComplexField::ComplexField(Grid1D grid, std::vector<cplx> samples)
    : grid_(grid), v_(std::move(samples)) {
    if (v_.size() != grid_.n()) throw InvalidArgument("ComplexField: sample count != grid size");
    check_finite(v_);
}

ComplexField ComplexField::zeros(const Grid1D& grid) {
    return ComplexField(grid, std::vector<cplx>(grid.n(), cplx{0.0, 0.0}));
}

ComplexField ComplexField::from_real(const RealField& f) {
    std::vector<cplx> v(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) v[j] = cplx{f[j], 0.0};
    return ComplexField(f.grid(), std::move(v));
}

cplx ComplexField::integrate() const {
    cplx s{0.0, 0.0};
    for (const cplx& z : v_) s += z;
    return s * grid_.dx();
}

double ComplexField::l2_norm() const {
    double s = 0.0;
    for (const cplx& z : v_) s += std::norm(z);
    return std::sqrt(s * grid_.dx());
}

double ComplexField::max_abs() const {
    double m = 0.0;
    for (const cplx& z : v_) m = std::max(m, std::abs(z));
    return m;
}

RealField ComplexField::abs2() const {
    std::vector<double> v(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) v[j] = std::norm(v_[j]);
    return RealField(grid_, std::move(v));
}

RealField ComplexField::real_part() const {
    std::vector<double> v(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) v[j] = v_[j].real();
    return RealField(grid_, std::move(v));
}

RealField ComplexField::imag_part() const {
    std::vector<double> v(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) v[j] = v_[j].imag();
    return RealField(grid_, std::move(v));
}

double max_abs_diff(const RealField& a, const RealField& b) {
    if (!(a.grid() == b.grid())) throw InvalidArgument("max_abs_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

double max_abs_diff(const ComplexField& a, const ComplexField& b) {
    if (!(a.grid() == b.grid())) throw InvalidArgument("max_abs_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

double l1_distance(const RealField& a, const RealField& b) {
    if (!(a.grid() == b.grid())) throw InvalidArgument("l1_distance: grid mismatch");
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += std::abs(a[j] - b[j]);
    return s * a.grid().dx();
}

}  // namespace levy
