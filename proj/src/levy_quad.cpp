#include "levybridge/levy_quad.hpp"

#include <cmath>

namespace levy {

LevyQuadrature LevyQuadrature::build(const NoiseKind& kind, const Grid1D& grid, double eps,
                                     int nodes_per_decade) {
    if (!(eps > 0.0)) throw InvalidArgument("LevyQuadrature: eps must be positive");
    if (eps >= 0.25 * grid.length())
        throw InvalidArgument("LevyQuadrature: eps too large for the grid");
    if (!kind.pure_jump()) throw InvalidArgument("LevyQuadrature: pure-jump kinds only");

    LevyQuadrature q;
    q.eps = eps;
    q.dx = grid.dx();
    q.n = grid.n();

    // First on-grid shift index: at least 2, and beyond the truncation radius.
    const std::size_t jmax = q.n / 2;
    std::size_t j0 = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(eps / q.dx)));
    const double y_start = static_cast<double>(j0) * q.dx;

    if (eps < y_start * (1.0 - 1e-12)) {
        const double lo = std::log(eps), hi = std::log(y_start);
        const double decades = (hi - lo) / std::log(10.0);
        int panels = std::max(8, static_cast<int>(std::ceil(decades * nodes_per_decade)));
        if (panels % 2) ++panels;
        const double h = (hi - lo) / panels;
        q.log_nodes.reserve(panels + 1);
        for (int i = 0; i <= panels; ++i) {
            const double u = lo + i * h;
            const double y = std::exp(u);
            double w = (i == 0 || i == panels) ? 1.0 : ((i % 2) ? 4.0 : 2.0);
            w *= h / 3.0;
            q.log_nodes.push_back({y, w * kind.levy_density(y) * y});
        }
    }

    q.shift_weights.assign(jmax + 1, 0.0);
    if (j0 < jmax) {
        const std::size_t panels = jmax - j0;
        const bool odd = (panels % 2) != 0;
        const std::size_t jend = odd ? jmax - 1 : jmax;
        if (j0 < jend) {
            for (std::size_t j = j0; j <= jend; ++j) {
                double w = (j == j0 || j == jend) ? 1.0 : (((j - j0) % 2) ? 4.0 : 2.0);
                q.shift_weights[j] += w * q.dx / 3.0;
            }
        }
        if (odd) {
            q.shift_weights[jmax - 1] += q.dx / 2.0;
            q.shift_weights[jmax] += q.dx / 2.0;
        }
        for (std::size_t j = j0; j <= jmax; ++j)
            if (q.shift_weights[j] != 0.0)
                q.shift_weights[j] *= kind.levy_density(static_cast<double>(j) * q.dx);
    }

    q.tail_mass = kind.levy_tail_mass(0.5 * grid.length());
    q.small_moment = kind.levy_small_second_moment(eps);
    return q;
}

}  // namespace levy
