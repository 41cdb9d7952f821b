#pragma once

#include <memory>
#include <vector>

#include "levybridge/grid.hpp"

namespace levy {

/// The symmetric probability density g with characteristic function 1/(1+|p|),
/// together with its first and second cumulants
///   I(x)  = ∫_0^x g,        G(x)  = 1/2 + sign(x) I(|x|),
///   I2(x) = ∫_0^x I,        G2(x) = x/2 + I2(|x|)  ( = ∫_0^x G ).
///
/// g is realized in three zones:
///  - |x| <= x_loc:   logarithmic small-x series (g diverges like -ln|x|/π);
///  - x_loc..x_swap:  FFT inversion of the momentum-cutoff multiplier on a
///                    fine table (dx = π/cutoff, so the leading cutoff ringing
///                    falls on table nodes and vanishes there);
///  - |x| >= x_swap:  large-x expansion (1/π)(x^-2 - 6 x^-4 + 120 x^-6).
/// The three pieces are glued continuously and normalized to unit total mass.
class GTable {
  public:
    GTable();

    double g(double x) const;
    double G(double x) const;    ///< cumulative ∫_{-∞}^x g
    double G2(double x) const;   ///< ∫_0^x G

    /// Unit-mass deviation of the raw (pre-normalization) construction.
    double raw_mass_defect() const { return raw_mass_defect_; }

    double x_loc() const { return x_loc_; }
    double x_swap() const { return x_swap_; }
    double table_dx() const { return dx_; }
    std::size_t table_size() const { return g_.size(); }
    /// Raw table samples (x = j*table_dx), for serialization/audits.
    const std::vector<double>& table() const { return g_; }

    /// Shared instance (built once per process, immutable afterwards).
    static const GTable& instance();

  private:
    double I(double ax) const;    // ∫_0^ax g,  ax >= 0
    double I2(double ax) const;   // ∫_0^ax I,  ax >= 0

    std::vector<double> g_, i1_, i2_;   // zone-2 tables at x = j*dx_
    double dx_ = 0.0;
    double x_loc_ = 0.01, x_swap_ = 50.0;
    std::size_t j_loc_ = 0;   // first table index used (x_j > x_loc)
    double norm_ = 1.0;
    double raw_mass_defect_ = 0.0;
};

/// p(x,t) of the explicit unitary evolution: for t > 0,
///   p(x,t) = (1/2)[g(x+t)+g(x-t)] + (1/(2t)) χ_[-t,t](x) - (1/(2t)) (g*χ_[-t,t])(x)
/// with (g*χ)(x) = G(x+t) - G(x-t).  Strictly positive away from x = ±t where
/// it inherits g's logarithmic singularity.
///
/// Pointwise evaluation; throws SingularPoint within `singular_radius` of ±t.
double cauchy_unitary_transition(double x, double t, double singular_radius = 1e-9);

/// Cell-averaged samples on `grid`: each cell [x_j - dx/2, x_j + dx/2] gets its
/// exact average computed from G and G2, which integrates the singular cells
/// without pointwise evaluation and preserves normalization.
RealField sample_cauchy_unitary_transition(const Grid1D& grid, double t);

/// ∫ x^k p(x,t) dx for k = 0,1,2 over a symmetric window plus the analytic
/// x^-4 tail beyond it.
double cauchy_unitary_moment(double t, int k, double window = 2000.0,
                             std::size_t n_cells = 1u << 21);

}  // namespace levy
