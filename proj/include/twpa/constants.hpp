#pragma once

#include <cmath>

namespace twpa {

// Magnetic flux quantum h/2e in Wb (2019 SI exact values of h and e).
inline constexpr double kFluxQuantum = 6.62607015e-34 / (2.0 * 1.602176634e-19);

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduced flux quantum Phi0 / 2pi in Wb/rad.
inline constexpr double kReducedFluxQuantum = kFluxQuantum / kTwoPi;

/// Phase in radians corresponding to a branch flux in Wb.
inline double phase_from_flux(double flux_wb) { return flux_wb / kReducedFluxQuantum; }

/// Branch flux in Wb corresponding to a phase in radians.
inline double flux_from_phase(double phase_rad) { return phase_rad * kReducedFluxQuantum; }

}  // namespace twpa
