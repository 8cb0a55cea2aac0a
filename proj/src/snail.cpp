#include "twpa/snail.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "twpa/constants.hpp"
#include "twpa/errors.hpp"

namespace twpa {

void SnailParams::validate() const {
    if (!(i_c > 0.0)) throw InvalidDesign("SnailParams: i_c must be positive");
    if (!(r > 0.0 && r < 1.0)) throw InvalidDesign("SnailParams: r must be in (0, 1)");
    if (n_big < 1) throw InvalidDesign("SnailParams: n_big must be >= 1");
}

FluxPoint FluxPoint::from_ratio(double flux_ratio) { return FluxPoint{kTwoPi * flux_ratio}; }

FluxPoint FluxPoint::from_radians(double phi_ext) { return FluxPoint{phi_ext}; }

double FluxPoint::flux_ratio() const { return phi_ext / kTwoPi; }

namespace {

// Normalized branch current I / i_c and its phase derivative.
double current_norm(const SnailParams& p, double phi, double phi_ext) {
    return p.r * std::sin(phi) + std::sin((phi - phi_ext) / p.n_big);
}

double current_norm_deriv(const SnailParams& p, double phi, double phi_ext) {
    return p.r * std::cos(phi) + std::cos((phi - phi_ext) / p.n_big) / p.n_big;
}

constexpr double kRootTol = 1e-12;  // on |I|/i_c; coefficients feed third derivatives
constexpr int kMaxRootIter = 200;

// Safeguarded Newton: bisection bracket [lo, hi] must enclose a sign change.
double newton_bisect(const SnailParams& p, double phi_ext, double lo, double hi, double guess) {
    double flo = current_norm(p, lo, phi_ext);
    double fhi = current_norm(p, hi, phi_ext);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw NoConvergence("solve_phi_star: bracket does not enclose a root");

    double x = std::clamp(guess, lo, hi);
    for (int it = 0; it < kMaxRootIter; ++it) {
        double f = current_norm(p, x, phi_ext);
        if (std::abs(f) < kRootTol) return x;
        if (f * flo < 0.0) {
            hi = x;
        } else {
            lo = x;
            flo = f;
        }
        double df = current_norm_deriv(p, x, phi_ext);
        double step = (df != 0.0) ? -f / df : std::numeric_limits<double>::infinity();
        double xn = x + step;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // Newton left the bracket
        x = xn;
    }
    throw NoConvergence("solve_phi_star: iteration budget exhausted (pathological r?)");
}

}  // namespace

double branch_current(const SnailParams& params, double phi, const FluxPoint& flux) {
    return params.i_c * current_norm(params, phi, flux.phi_ext);
}

namespace detail {

double solve_phi_star_from(const SnailParams& params, const FluxPoint& flux, double guess) {
    params.validate();
    const double phi_ext = flux.phi_ext;
    // Tight window around the guess keeps continuation on the tracked branch.
    const double wlo = guess - 0.75 * kPi, whi = guess + 0.75 * kPi;
    if (current_norm(params, wlo, phi_ext) * current_norm(params, whi, phi_ext) <= 0.0) {
        return newton_bisect(params, phi_ext, wlo, whi, guess);
    }
    // Fallback bracket [phi_ext - n pi/2, phi_ext + n pi/2]: the big-arm term
    // equals -1/+1 at the endpoints, so with r < 1 a sign change is guaranteed.
    const double half = 0.5 * kPi * params.n_big;
    return newton_bisect(params, phi_ext, phi_ext - half, phi_ext + half, guess);
}

}  // namespace detail

double solve_phi_star(const SnailParams& params, const FluxPoint& flux) {
    params.validate();
    // Continuation from the known root at phi_ext = 0 in bounded steps keeps
    // the solver on the branch that is continuous in flux.
    const double target = flux.phi_ext;
    const double step = 0.2;
    double phi_star = 0.0;
    double reached = 0.0;
    const int n_steps = static_cast<int>(std::ceil(std::abs(target) / step));
    for (int i = 1; i <= n_steps; ++i) {
        double phi_ext_i = target * (static_cast<double>(i) / n_steps);
        phi_star = detail::solve_phi_star_from(params, FluxPoint{phi_ext_i}, phi_star);
        reached = phi_ext_i;
    }
    if (reached != target) {
        phi_star = detail::solve_phi_star_from(params, FluxPoint{target}, phi_star);
    }
    return phi_star;
}

namespace {

SnailExpansion expansion_at(const SnailParams& p, const FluxPoint& flux, double phi_star) {
    const int n = p.n_big;
    const double arg = (phi_star - flux.phi_ext) / n;
    const double alpha = p.r * std::cos(phi_star) + std::cos(arg) / n;
    if (std::abs(alpha) < 1e-9) {
        throw DegenerateExpansion("expansion: |alpha_tilde| < 1e-9, flux point unusable");
    }
    SnailExpansion e;
    e.phi_star = phi_star;
    e.alpha_tilde = alpha;
    e.beta = 0.5 * (p.r * std::sin(phi_star) + std::sin(arg) / (n * n)) / alpha;
    e.gamma = (p.r * std::cos(phi_star) + std::cos(arg) / (n * n * n)) / (6.0 * alpha);
    e.l_eff = kFluxQuantum / (kTwoPi * alpha * p.i_c);
    return e;
}

}  // namespace

SnailExpansion expansion(const SnailParams& params, const FluxPoint& flux) {
    return expansion_at(params, flux, solve_phi_star(params, flux));
}

std::vector<SnailExpansion> flux_map(const SnailParams& params, const std::vector<double>& ratios) {
    params.validate();
    std::vector<SnailExpansion> rows;
    rows.reserve(ratios.size());
    bool have_prev = false;
    double prev_phi_star = 0.0;
    for (double ratio : ratios) {
        if (!std::isfinite(ratio)) throw InvalidDesign("flux_map: non-finite flux ratio");
        const FluxPoint flux = FluxPoint::from_ratio(ratio);
        try {
            double phi_star = have_prev
                                  ? detail::solve_phi_star_from(params, flux, prev_phi_star)
                                  : solve_phi_star(params, flux);
            rows.push_back(expansion_at(params, flux, phi_star));
            prev_phi_star = phi_star;
            have_prev = true;
        } catch (const NoConvergence& e) {
            std::ostringstream os;
            os << e.what() << " at flux_ratio=" << ratio;
            throw NoConvergence(os.str());
        } catch (const DegenerateExpansion& e) {
            std::ostringstream os;
            os << e.what() << " at flux_ratio=" << ratio;
            throw DegenerateExpansion(os.str());
        }
    }
    return rows;
}

void write_flux_map_csv(std::ostream& os, const std::vector<double>& ratios,
                        const std::vector<SnailExpansion>& rows) {
    os << "flux_ratio,phi_star,alpha_tilde,beta,gamma,l_eff_H\n";
    char buf[256];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SnailExpansion& e = rows[i];
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", ratios[i],
                      e.phi_star, e.alpha_tilde, e.beta, e.gamma, e.l_eff);
        os << buf;
    }
}

}  // namespace twpa
