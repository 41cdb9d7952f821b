#pragma once

#include <vector>

#include "levybridge/grid.hpp"
#include "levybridge/noise.hpp"

namespace levy {

/// Precomputed node/weight layout for eps-truncated integrals against a Levy
/// measure, ∫_{y>eps} P(y) nu(y) dy, where P is the +y/-y paired integrand
/// evaluated on a periodic grid:
///
///  - (eps, 2dx]   log-spaced composite Simpson (off-grid, interpolated);
///  - [2dx, L/2]   composite Simpson at the grid shifts y_j = j dx (exact lookups);
///  - (L/2, ∞)     mean-field closure: P ≈ its periodic average, weight tail_mass.
///
/// Weights already include the measure: Σ w·P(y) ≈ ∫ P nu dy.
struct LevyQuadrature {
    struct Node {
        double y;
        double w;   ///< Simpson weight x nu(y) (x y for the log segment)
    };
    std::vector<Node> log_nodes;          ///< segment (eps, 2dx]
    std::vector<double> shift_weights;    ///< index j in [2, n/2]; entries 0..1 unused
    double tail_mass = 0.0;               ///< ∫_{L/2}^∞ nu(y) dy
    double small_moment = 0.0;            ///< ∫_0^eps y² nu(y) dy
    double eps = 0.0;
    double dx = 0.0;
    std::size_t n = 0;

    static LevyQuadrature build(const NoiseKind& kind, const Grid1D& grid, double eps,
                                int nodes_per_decade = 48);
};

}  // namespace levy
