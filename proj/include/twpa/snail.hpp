#pragma once

#include <iosfwd>
#include <vector>

namespace twpa {

/// SNAIL loop parameters: one small junction shunting a series arm of
/// `n_big` identical big junctions.
struct SnailParams {
    double i_c;      ///< critical current of each big junction [A]
    double r;        ///< small/big junction critical-current ratio, 0 < r < 1
    int n_big = 3;   ///< number of big junctions in the series arm

    void validate() const;
};

/// External flux threading the SNAIL loop.
///
/// phi_ext is the reduced flux in radians, 2*pi*Phi_ext/Phi0. All expansion
/// formulas below take phi_ext in radians; the normalized ratio Phi_ext/Phi0
/// is a convenience view used for plotting axes.
struct FluxPoint {
    double phi_ext = 0.0;  ///< reduced external flux [rad]

    static FluxPoint from_ratio(double flux_ratio);
    static FluxPoint from_radians(double phi_ext);

    double flux_ratio() const;
};

/// Taylor data of the branch current about the zero-current phase phi_star:
///   I(phi_star + p) / (alpha_tilde * i_c) ~= p - beta p^2 - gamma p^3
struct SnailExpansion {
    double phi_star;     ///< zero-current expansion phase [rad]
    double alpha_tilde;  ///< linear coefficient (dimensionless)
    double beta;         ///< quadratic (three-wave mixing) coefficient
    double gamma;        ///< cubic (four-wave mixing) coefficient
    double l_eff;        ///< effective linear inductance Phi0/(2 pi alpha_tilde i_c) [H]
};

/// Branch current of the SNAIL at total loop phase `phi` [rad]:
///   I = i_c * ( r sin(phi) + sin((phi - phi_ext)/n_big) )
double branch_current(const SnailParams& params, double phi, const FluxPoint& flux);

/// Zero-current phase phi_star on the branch continuously connected to
/// phi_star = 0 at phi_ext = 0. Root polished to |I| < i_c * 1e-12.
/// Throws NoConvergence if the safeguarded iteration exhausts its budget.
double solve_phi_star(const SnailParams& params, const FluxPoint& flux);

/// Expansion coefficients at the given flux point.
/// Throws DegenerateExpansion when |alpha_tilde| < 1e-9.
SnailExpansion expansion(const SnailParams& params, const FluxPoint& flux);

/// One expansion row per flux ratio, with phi_star continuation applied in
/// input order so the tracked branch stays continuous across the sweep.
/// Errors are rethrown with the offending ratio attached to the message.
std::vector<SnailExpansion> flux_map(const SnailParams& params, const std::vector<double>& ratios);

/// CSV emission with columns
///   flux_ratio, phi_star, alpha_tilde, beta, gamma, l_eff_H
/// in decimal notation with 12 significant digits.
void write_flux_map_csv(std::ostream& os, const std::vector<double>& ratios,
                        const std::vector<SnailExpansion>& rows);

namespace detail {
/// phi_star solve with an explicit starting guess, used for continuation.
double solve_phi_star_from(const SnailParams& params, const FluxPoint& flux, double guess);
}  // namespace detail

}  // namespace twpa
