#pragma once

namespace levy {

/// Modified Bessel function of the third kind, order 1, to ~1e-13 relative.
///
/// z <= 2: ascending series  K1(z) = 1/z + ln(z/2) I1(z)
///         - (z/4) Σ_k [ψ(k+1)+ψ(k+2)] (z²/4)^k / (k!(k+1)!).
/// z > 2:  Steed/Thompson-Barnett continued fraction for K0, then the
///         Wronskian-free recurrence K1 = K0 (z + 1/2 - h)/z.
/// Throws InvalidArgument for z <= 0.
double bessel_k1(double z);

/// First modified Bessel function of order 1 (ascending series), used by the
/// K1 series branch and exposed for tests.
double bessel_i1_series(double z);

}  // namespace levy
