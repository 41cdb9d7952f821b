#include "levybridge/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levybridge/levy_quad.hpp"
#include "levybridge/spectral.hpp"

namespace levy {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2Pi = 2.5066282746310005024;

double lorentz(double u) { return std::sqrt(2.0 / kPi) / (1.0 + u * u); }
}  // namespace

cplx cauchy_closed_form_state(double x, double s) {
    const double fp = lorentz(x + s);
    const double fm = lorentz(x - s);
    return cplx{0.5 * (fp + fm), 0.5 * ((x - s) * fm - (x + s) * fp)};
}

double cauchy_density_initial(double x) {
    const double w = 1.0 + x * x;
    return 2.0 / (kPi * w * w);
}

double cauchy_density(double x, double s) {
    return (1.0 + s * s) * std::sqrt(cauchy_density_initial(x + s) * cauchy_density_initial(x - s));
}

double cauchy_rho_hat(double p, double t) {
    if (!(t > 0.0)) throw InvalidArgument("cauchy_rho_hat: t must be positive");
    const double ap = std::abs(p);
    return std::exp(-ap) * (std::cos(t * ap) + std::sin(t * ap) / t) / kSqrt2Pi;
}

double cauchy_rho0_hat(double p) {
    const double ap = std::abs(p);
    return (1.0 + ap) * std::exp(-ap) / kSqrt2Pi;
}

MadelungPair madelung_decompose(const ComplexField& psi, double floor) {
    const std::size_t n = psi.size();
    std::vector<double> R(n), S(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = std::abs(psi[j]);
        if (a <= floor) throw NodalRegion("madelung_decompose: |psi| at or below nodal floor");
        R[j] = std::log(a);
    }
    double prev = std::arg(psi[0]);
    double offset = 0.0;
    S[0] = prev;
    for (std::size_t j = 1; j < n; ++j) {
        const double raw = std::arg(psi[j]);
        double d = raw - prev;
        while (d > kPi) {
            d -= 2.0 * kPi;
            offset -= 2.0 * kPi;
        }
        while (d < -kPi) {
            d += 2.0 * kPi;
            offset += 2.0 * kPi;
        }
        S[j] = raw + offset;
        prev = raw;
    }
    return MadelungPair{RealField(psi.grid(), std::move(R)), RealField(psi.grid(), std::move(S))};
}

ComplexField madelung_reconstruct(const MadelungPair& pair) {
    std::vector<cplx> v(pair.R.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = std::exp(pair.R[j]) * std::polar(1.0, pair.S[j]);
    return ComplexField(pair.R.grid(), std::move(v));
}

RealField quantum_potential(const RealField& rho_sqrt, const NoiseKind& kind, double floor) {
    auto h = apply_generator_spectral(rho_sqrt, kind);
    std::vector<double> q(rho_sqrt.size(), 0.0);
    for (std::size_t j = 0; j < q.size(); ++j)
        if (rho_sqrt[j] > floor) q[j] = h[j] / rho_sqrt[j];
    return RealField(rho_sqrt.grid(), std::move(q));
}

RealField sturm_liouville_potential(const RealField& rho, const NoiseKind& kind, double E,
                                    double floor) {
    std::vector<double> rs(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) {
        if (rho[j] < 0.0) throw InvalidArgument("sturm_liouville_potential: negative density");
        rs[j] = std::sqrt(rho[j]);
    }
    RealField rho_sqrt(rho.grid(), std::move(rs));
    auto q = quantum_potential(rho_sqrt, kind, floor);
    std::vector<double> v(rho.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = E - q[j];
    return RealField(rho.grid(), std::move(v));
}

namespace {

// Evaluation of R and S at x ± y for off-grid |y| < few*dx, via symmetric
// Lagrange stencils centred at x.  Mirrored stencils make the leading
// interpolation error antisymmetric in y, so it cancels in paired sums.
class StencilPair {
  public:
    StencilPair(const RealField& f, int half_width) : f_(f), hw_(half_width) {}

    // values at (x_i + y, x_i - y)
    std::pair<double, double> eval(std::size_t i, double y) const {
        const std::size_t n = f_.size();
        const double t = y / f_.grid().dx();
        double plus = 0.0, minus = 0.0;
        for (int j = -hw_; j <= hw_; ++j) {
            double lj = 1.0;
            for (int k = -hw_; k <= hw_; ++k) {
                if (k == j) continue;
                lj *= (t - k) / static_cast<double>(j - k);
            }
            plus += lj * f_[(i + n + j) % n];
            minus += lj * f_[(i + n - j) % n];
        }
        return {plus, minus};
    }

  private:
    const RealField& f_;
    int hw_;
};

struct FieldAverages {
    double eR_sin = 0.0;   // avg e^R sin S
    double eR_cos = 0.0;   // avg e^R cos S
    double eR = 0.0;       // avg e^R
    double S = 0.0;        // avg S
    double R = 0.0;        // avg R
    double theta = 0.0;    // avg e^{R+S}
    double theta_star = 0.0;
};

FieldAverages field_averages(const RealField& R, const RealField& S) {
    FieldAverages a;
    const std::size_t n = R.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double er = std::exp(R[j]);
        a.eR_sin += er * std::sin(S[j]);
        a.eR_cos += er * std::cos(S[j]);
        a.eR += er;
        a.S += S[j];
        a.R += R[j];
        a.theta += std::exp(R[j] + S[j]);
        a.theta_star += std::exp(R[j] - S[j]);
    }
    const double inv = 1.0 / static_cast<double>(n);
    a.eR_sin *= inv;
    a.eR_cos *= inv;
    a.eR *= inv;
    a.S *= inv;
    a.R *= inv;
    a.theta *= inv;
    a.theta_star *= inv;
    return a;
}

}  // namespace

MadelungResiduals madelung_evolution_residual(const std::vector<ComplexField>& snapshots,
                                              double dt, const NoiseKind& kind, double eps,
                                              const RealField* potential, double support_floor) {
    if (snapshots.size() != 3)
        throw InvalidArgument("madelung_evolution_residual: need exactly 3 snapshots");
    if (!(dt > 0.0)) throw InvalidArgument("madelung_evolution_residual: dt must be positive");
    if (!kind.pure_jump())
        throw InvalidArgument("madelung_evolution_residual: pure-jump kinds only");
    const auto& grid = snapshots[0].grid();
    for (const auto& s : snapshots)
        if (!(s.grid() == grid)) throw InvalidArgument("madelung_evolution_residual: grid mismatch");

    auto m_prev = madelung_decompose(snapshots[0]);
    auto m_mid = madelung_decompose(snapshots[1]);
    auto m_next = madelung_decompose(snapshots[2]);

    // Align phase branches at the amplitude peak (integer multiples of 2π
    // only, so genuine phase drift passes through).
    std::size_t peak = 0;
    double peak_val = -1.0;
    for (std::size_t j = 0; j < grid.n(); ++j) {
        const double a = std::abs(snapshots[1][j]);
        if (a > peak_val) {
            peak_val = a;
            peak = j;
        }
    }
    for (auto* m : {&m_prev, &m_next}) {
        const double k = std::round((m->S[peak] - m_mid.S[peak]) / (2.0 * kPi));
        if (k != 0.0)
            for (std::size_t j = 0; j < grid.n(); ++j) m->S[j] -= 2.0 * kPi * k;
    }

    const auto& R = m_mid.R;
    const auto& S = m_mid.S;

    // evaluation window
    std::vector<std::size_t> window;
    const double thresh = support_floor * peak_val;
    for (std::size_t j = 0; j < grid.n(); ++j)
        if (std::abs(snapshots[1][j]) >= thresh) window.push_back(j);

    // spectral H terms
    auto HR = apply_generator_spectral(R, kind);
    auto HS = apply_generator_spectral(S, kind);
    RealField theta = RealField::sample(grid, [](double) { return 0.0; });
    RealField theta_star = theta;
    for (std::size_t j = 0; j < grid.n(); ++j) {
        theta[j] = std::exp(R[j] + S[j]);
        theta_star[j] = std::exp(R[j] - S[j]);
    }
    auto Htheta = apply_generator_spectral(theta, kind);
    auto Htheta_star = apply_generator_spectral(theta_star, kind);

    const auto quad = LevyQuadrature::build(kind, grid, eps);
    const auto avg = field_averages(R, S);

    const int half_width = 4 + static_cast<int>(std::ceil(
        quad.log_nodes.empty() ? 0.0 : quad.log_nodes.back().y / grid.dx()));
    StencilPair interpR(R, half_width), interpS(S, half_width);

    // nonlinear ν-integrals, paired across ±y
    const std::size_t n = grid.n();
    std::vector<double> I_sin(n, 0.0);      // ∫ [e^{R_xy} sin S_xy - S_xy] dν
    std::vector<double> I_cos(n, 0.0);      // ∫ [e^{R_xy} cos S_xy - 1 - R_xy] dν
    std::vector<double> I_q(n, 0.0);        // ∫ [e^{R_xy} - 1 - R_xy] dν
    std::vector<double> I_theta(n, 0.0);    // ∫ e^{R_xy}(-sin+cos+e^{S_xy}-2) dν
    std::vector<double> I_thstar(n, 0.0);   // ∫ e^{R_xy}( sin+cos+e^{-S_xy}-2) dν

    auto accumulate = [&](std::size_t i, double w, double Rp, double Rm, double Sp, double Sm) {
        const double dRp = Rp - R[i], dRm = Rm - R[i];
        const double dSp = Sp - S[i], dSm = Sm - S[i];
        const double ep = std::exp(dRp), em = std::exp(dRm);
        const double sp = std::sin(dSp), sm = std::sin(dSm);
        const double cp = std::cos(dSp), cm = std::cos(dSm);
        I_sin[i] += w * (ep * sp + em * sm - dSp - dSm);
        I_cos[i] += w * (ep * cp + em * cm - 2.0 - dRp - dRm);
        I_q[i] += w * (ep + em - 2.0 - dRp - dRm);
        I_theta[i] += w * (ep * (-sp + cp + std::exp(dSp) - 2.0) +
                           em * (-sm + cm + std::exp(dSm) - 2.0));
        I_thstar[i] += w * (ep * (sp + cp + std::exp(-dSp) - 2.0) +
                            em * (sm + cm + std::exp(-dSm) - 2.0));
    };

    for (std::size_t i : window) {
        for (const auto& node : quad.log_nodes) {
            auto [Rp, Rm] = interpR.eval(i, node.y);
            auto [Sp, Sm] = interpS.eval(i, node.y);
            accumulate(i, node.w, Rp, Rm, Sp, Sm);
        }
        for (std::size_t j = 2; j < quad.shift_weights.size(); ++j) {
            const double w = quad.shift_weights[j];
            if (w == 0.0) continue;
            accumulate(i, w, R[(i + j) % n], R[(i + n - j) % n], S[(i + j) % n],
                       S[(i + n - j) % n]);
        }
        // periodic mean-field closure of the |y| > L/2 tail
        const double eRx = std::exp(R[i]);
        const double cs = std::cos(S[i]), sn = std::sin(S[i]);
        const double sin_far = (avg.eR_sin * cs - avg.eR_cos * sn) / eRx;   // avg e^{R_xy} sin S_xy
        const double cos_far = (avg.eR_cos * cs + avg.eR_sin * sn) / eRx;
        const double w2 = 2.0 * quad.tail_mass;
        I_sin[i] += w2 * (sin_far - (avg.S - S[i]));
        I_cos[i] += w2 * (cos_far - 1.0 - (avg.R - R[i]));
        I_q[i] += w2 * (avg.eR / eRx - 1.0 - (avg.R - R[i]));
        I_theta[i] += w2 * (-sin_far + cos_far + avg.theta / theta[i] - 2.0 * avg.eR / eRx);
        I_thstar[i] += w2 * (sin_far + cos_far + avg.theta_star / theta_star[i] -
                             2.0 * avg.eR / eRx);
    }

    MadelungResiduals out;
    out.window_lo = window.empty() ? 0 : window.front();
    out.window_hi = window.empty() ? 0 : window.back();
    const double inv2dt = 1.0 / (2.0 * dt);
    for (std::size_t i : window) {
        const double V = potential ? (*potential)[i] : 0.0;
        const double dR_t = (m_next.R[i] - m_prev.R[i]) * inv2dt;
        const double dS_t = (m_next.S[i] - m_prev.S[i]) * inv2dt;
        const double Q = HR[i] - I_q[i];
        out.dR = std::max(out.dR, std::abs(dR_t - (HS[i] - I_sin[i])));
        out.dS = std::max(out.dS, std::abs(dS_t - (-HR[i] + I_cos[i] - V)));

        const double th_t = (std::exp(m_next.R[i] + m_next.S[i]) -
                             std::exp(m_prev.R[i] + m_prev.S[i])) * inv2dt;
        const double ths_t = (std::exp(m_next.R[i] - m_next.S[i]) -
                              std::exp(m_prev.R[i] - m_prev.S[i])) * inv2dt;
        out.dTheta = std::max(
            out.dTheta, std::abs(th_t - (Htheta[i] + theta[i] * (-2.0 * Q + I_theta[i]) -
                                         V * theta[i])));
        out.dThetaStar = std::max(
            out.dThetaStar, std::abs(ths_t - (-Htheta_star[i] +
                                              theta_star[i] * (2.0 * Q - I_thstar[i]) +
                                              V * theta_star[i])));
    }
    return out;
}

namespace {

// max|a + b| and max|b| over the grid (residual and its reference scale)
WaveResiduals assemble_residual(const ComplexField& dtt, const ComplexField& lap_term) {
    WaveResiduals r;
    for (std::size_t j = 0; j < dtt.size(); ++j) {
        r.max_abs = std::max(r.max_abs, std::abs(dtt[j] + lap_term[j]));
        r.scale = std::max(r.scale, std::abs(lap_term[j]));
    }
    r.relative = (r.scale > 0.0) ? r.max_abs / r.scale : r.max_abs;
    return r;
}

ComplexField laplacian(const ComplexField& f) {
    return fourier::apply_multiplier(f, [](double p) { return cplx{-p * p, 0.0}; });
}

}  // namespace

WaveResiduals wave_equation_residual(const NoiseKind& kind, const ComplexField& psi0,
                                     double t_center, double dt) {
    if (!(dt > 0.0)) throw InvalidArgument("wave_equation_residual: dt must be positive");
    if (!kind.pure_jump())
        throw InvalidArgument("wave_equation_residual: Cauchy or Relativistic kinds only");

    auto prev = apply_unitary(psi0, kind, t_center - dt);
    auto mid = apply_unitary(psi0, kind, t_center);
    auto next = apply_unitary(psi0, kind, t_center + dt);

    if (kind.tag == NoiseTag::Relativistic) {
        // psi~ = psi e^{-imt}; (□ + m²) psi~ = (-Δ + ∂_tt + m²) psi~ = 0
        for (auto* f : {&prev, &mid, &next}) {
            const double t = (f == &prev) ? t_center - dt : (f == &next) ? t_center + dt : t_center;
            const cplx ph = std::polar(1.0, -kind.m * t);
            for (std::size_t j = 0; j < f->size(); ++j) (*f)[j] *= ph;
        }
    }

    std::vector<cplx> dtt(mid.size());
    const double inv_dt2 = 1.0 / (dt * dt);
    for (std::size_t j = 0; j < mid.size(); ++j)
        dtt[j] = (next[j] - 2.0 * mid[j] + prev[j]) * inv_dt2;
    ComplexField dtt_field(mid.grid(), std::move(dtt));

    auto lap = laplacian(mid);
    std::vector<cplx> term(mid.size());
    const double m2 = (kind.tag == NoiseTag::Relativistic) ? kind.m * kind.m : 0.0;
    for (std::size_t j = 0; j < mid.size(); ++j) term[j] = -lap[j] + m2 * mid[j];
    // residual: ∂_tt psi + (-Δ + m²) psi = 0  (Cauchy: m² = 0)
    return assemble_residual(dtt_field, ComplexField(mid.grid(), std::move(term)));
}

WaveResiduals euclidean_wave_residual(const NoiseKind& kind, const RealField& rho0,
                                      double t_center, double dt) {
    if (!(dt > 0.0)) throw InvalidArgument("euclidean_wave_residual: dt must be positive");
    if (!kind.pure_jump())
        throw InvalidArgument("euclidean_wave_residual: Cauchy or Relativistic kinds only");
    if (!(t_center - dt > 0.0))
        throw InvalidArgument("euclidean_wave_residual: t_center - dt must be positive");

    auto prev = apply_semigroup(rho0, kind, t_center - dt);
    auto mid = apply_semigroup(rho0, kind, t_center);
    auto next = apply_semigroup(rho0, kind, t_center + dt);

    const double m = kind.m;
    if (kind.tag == NoiseTag::Relativistic) {
        // rho~ = rho e^{-mt}; (Δ_t + Δ - m²) rho~ = 0
        auto damp = [m](RealField& f, double t) {
            const double d = std::exp(-m * t);
            for (std::size_t j = 0; j < f.size(); ++j) f[j] *= d;
        };
        damp(prev, t_center - dt);
        damp(mid, t_center);
        damp(next, t_center + dt);
    }

    std::vector<cplx> dtt(mid.size());
    const double inv_dt2 = 1.0 / (dt * dt);
    for (std::size_t j = 0; j < mid.size(); ++j)
        dtt[j] = cplx{(next[j] - 2.0 * mid[j] + prev[j]) * inv_dt2, 0.0};
    ComplexField dtt_field(mid.grid(), std::move(dtt));

    auto lap = laplacian(ComplexField::from_real(mid));
    std::vector<cplx> term(mid.size());
    const double m2 = (kind.tag == NoiseTag::Relativistic) ? m * m : 0.0;
    // residual: ∂_tt rho + Δ rho - m² rho = 0
    for (std::size_t j = 0; j < mid.size(); ++j) term[j] = lap[j] - m2 * mid[j];
    return assemble_residual(dtt_field, ComplexField(mid.grid(), std::move(term)));
}

}  // namespace levy
