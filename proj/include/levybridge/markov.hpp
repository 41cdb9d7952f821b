#pragma once

#include <functional>
#include <span>
#include <vector>

#include "levybridge/errors.hpp"

namespace levy {

/// Intermediate-time ratio kernel
///   h(p,s,t) = [cos(t|p|) + sin(t|p|)/t] / [cos(s|p|) + sin(s|p|)/s],  0 < s < t.
/// Even in p, h(0,s,t) = 1; poles where the denominator bracket vanishes.
/// Throws PoleProximity when |denominator| < 1e-12.
double h_ratio(double p, double s, double t);

/// The numerator/denominator bracket cos(t|p|) + sin(t|p|)/t by itself.
double phase_bracket(double p, double t);

/// First `count` positive zeros of the denominator bracket at time s:
///   |p|_N = (arctan(1/s) + (2N+1)·π/2)/s,  N = 0,1,...
std::vector<double> denominator_zeros(double s, int count);

struct TwoPointCheck {
    double M;     ///< off-diagonal entry h(p1-p2, s, t)
    double det;   ///< 1 - M²; negative certifies failure of positive-definiteness
};

/// 2x2 positive-definiteness check at points (p1, p2).
TwoPointCheck two_point_violation(double p1, double p2, double s, double t);

/// Smallest eigenvalue of the symmetric matrix [h(p_i - p_j)] by cyclic Jacobi
/// rotations (intended for n <= 16).
double pd_matrix_min_eigenvalue(const std::function<double(double)>& h,
                                std::span<const double> points);

/// Smallest eigenvalue of a dense symmetric matrix (row-major, n x n).
double jacobi_min_eigenvalue(std::vector<double> a, std::size_t n);

struct PDWitness {
    double p1 = 0.0, p2 = 0.0;
    double s = 0.0, t = 0.0;
    double M = 0.0;
    double min_eigenvalue = 0.0;
};

/// Scan shrinking neighborhoods (offsets 1e-2, 1e-3, 1e-4, both sides) of the
/// first five denominator zeros; zeros where the numerator also vanishes
/// (|num| < 1e-6) are skipped.  Returns the first zero's strongest violating
/// configuration with |M| > 1 + 1e-6, as (p1, p2) = (|p|, 0).
/// Throws WitnessNotFound if every candidate zero is degenerate.
PDWitness find_nonmarkov_witness(double s, double t);

}  // namespace levy
