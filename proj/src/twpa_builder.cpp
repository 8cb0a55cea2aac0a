#include "twpa/twpa_builder.hpp"

#include <cmath>
#include <string>

#include "twpa/constants.hpp"
#include "twpa/errors.hpp"

namespace twpa {

void TwpaDesign::validate() const {
    if (n_cells < 1) throw InvalidDesign("TwpaDesign: n_cells must be >= 1");
    snail.validate();
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0)) throw InvalidDesign(std::string("TwpaDesign: ") + what + " must be positive");
    };
    positive(c_j, "c_j");
    positive(c_g, "c_g");
    positive(c_f, "c_f");
    positive(l_add, "l_add");
    positive(l_f, "l_f");
    positive(l_g, "l_g");
    positive(z_port, "z_port");
    if (tan_delta < 0.0) throw InvalidDesign("TwpaDesign: tan_delta must be >= 0");
    if (!(std::abs(coupling()) <= 1.0)) throw InvalidDesign("TwpaDesign: |coupling_k| must be <= 1");
}

double TwpaDesign::default_coupling_k() const {
    constexpr double kHalfFluxCurrent = 0.285e-3;  // A, the device calibration point
    return (kFluxQuantum / (2.0 * kHalfFluxCurrent)) / std::sqrt(l_add * l_f);
}

double TwpaDesign::coupling() const { return coupling_k != 0.0 ? coupling_k : default_coupling_k(); }

double TwpaDesign::mutual_inductance() const { return coupling() * std::sqrt(l_add * l_f); }

TwpaDesign table1_design() { return TwpaDesign{}; }

Netlist build_twpa(const TwpaDesign& design) {
    design.validate();
    const int n = design.n_cells;
    std::vector<Component> parts;
    parts.reserve(static_cast<std::size_t>(n) * 10 + 8);

    auto node = [](const char* prefix, int k) { return std::string(prefix) + std::to_string(k); };

    const std::string flux_in =
        design.flux_termination == FluxTermination::SeriesChoke ? "pf" : "f0";

    // Signal ports at the line ends, DC flux port on the flux line.
    parts.push_back({ComponentKind::Port, "P1", {"n0", "0"}, design.z_port, 0.0, 1});
    parts.push_back({ComponentKind::Port, "P2", {node("n", n), "0"}, design.z_port, 0.0, 2});
    parts.push_back({ComponentKind::Port, "P3", {flux_in, "0"}, design.z_port, 0.0, 3});

    if (design.flux_termination == FluxTermination::SeriesChoke) {
        parts.push_back({ComponentKind::Inductor, "Lg1", {"pf", "f0"}, design.l_g, 0.0, 0});
        parts.push_back({ComponentKind::Inductor, "Lg2", {node("f", n), "0"}, design.l_g, 0.0, 0});
    } else {
        parts.push_back({ComponentKind::Inductor, "Lg1", {"f0", "0"}, design.l_g, 0.0, 0});
        parts.push_back({ComponentKind::Inductor, "Lg2", {node("f", n), "0"}, design.l_g, 0.0, 0});
    }

    const double i_c = design.snail.i_c;
    const double i_c_small = design.snail.r * i_c;
    const int n_big = design.snail.n_big;
    const double k_mag = design.coupling();

    for (int k = 1; k <= n; ++k) {
        const std::string left = node("n", k - 1);
        const std::string right = node("n", k);
        const std::string tag = std::to_string(k);

        // Small junction arm spans the cell; C_J sits across the same pair.
        parts.push_back({ComponentKind::JosephsonJunction, "Bs" + tag, {left, right}, i_c_small,
                         0.0, 0});
        parts.push_back({ComponentKind::Capacitor, "Cj" + tag, {left, right}, design.c_j, 0.0, 0});

        // Big-junction arm: n_big junctions in series, closed through l_add.
        std::string prev = left;
        for (int j = 0; j < n_big; ++j) {
            std::string next = (j == n_big - 1) ? node("m", k)
                                                : node(("j" + tag + "_").c_str(), j + 1);
            parts.push_back({ComponentKind::JosephsonJunction,
                             "Bb" + tag + "_" + std::to_string(j + 1), {prev, next}, i_c, 0.0, 0});
            prev = next;
        }
        parts.push_back({ComponentKind::Inductor, "La" + tag, {node("m", k), right}, design.l_add,
                         0.0, 0});

        parts.push_back({ComponentKind::Capacitor, "Cg" + tag, {right, "0"}, design.c_g,
                         design.tan_delta, 0});

        // Flux-line section facing this cell.
        parts.push_back({ComponentKind::Inductor, "Lf" + tag, {node("f", k - 1), node("f", k)},
                         design.l_f, 0.0, 0});
        parts.push_back({ComponentKind::Capacitor, "Cf" + tag, {node("f", k), "0"}, design.c_f,
                         0.0, 0});

        const double sign = (design.alternate_polarity && (k % 2 == 0)) ? -1.0 : 1.0;
        parts.push_back({ComponentKind::MutualCoupling, "K" + tag, {"La" + tag, "Lf" + tag},
                         sign * k_mag, 0.0, 0});
    }

    return Netlist(std::move(parts));
}

double flux_current_for(const TwpaDesign& design, double flux_ratio) {
    if (design.coupling() == 0.0) throw ZeroCoupling("flux_current_for: coupling_k is zero");
    return flux_ratio * kFluxQuantum / design.mutual_inductance();
}

double flux_ratio_for(const TwpaDesign& design, double i_dc) {
    if (design.coupling() == 0.0) throw ZeroCoupling("flux_ratio_for: coupling_k is zero");
    return i_dc * design.mutual_inductance() / kFluxQuantum;
}

}  // namespace twpa
