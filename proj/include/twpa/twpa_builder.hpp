#pragma once

#include "twpa/netlist.hpp"
#include "twpa/snail.hpp"

namespace twpa {

/// Where the flux-line choke inductors L_g sit. The default puts one in
/// series between the flux port and the line input and one from the line
/// output to ground, so the full DC bias current threads every L_f segment
/// and the mutual calibration I_dc = flux_ratio * Phi0 / M is exact.
enum class FluxTermination { SeriesChoke, ShuntAtEnds };

/// Parameters of the N-cell flux-tunable SNAIL transmission line.
struct TwpaDesign {
    int n_cells = 700;
    SnailParams snail{2.19e-6, 0.07, 3};
    double c_j = 50e-15;    ///< capacitance across each SNAIL [F]
    double c_g = 250e-15;   ///< cell capacitance to ground [F]
    double c_f = 0.076e-12; ///< flux-line capacitance to ground per cell [F]
    double l_add = 70e-15;  ///< loop inductance coupled to the flux line [H]
    double l_f = 190e-12;   ///< flux-line series inductance per cell [H]
    double l_g = 20e-9;     ///< flux-line choke inductance [H]
    double coupling_k = 0.0;///< mutual coefficient; 0 means "use default_coupling_k()"
    double tan_delta = 2.1e-3;
    double z_port = 50.0;
    bool alternate_polarity = true;
    FluxTermination flux_termination = FluxTermination::SeriesChoke;

    void validate() const;

    /// k chosen so that flux_current_for(0.5) is exactly 0.285 mA with the
    /// default inductances: M * 0.285 mA = Phi0 / 2.
    double default_coupling_k() const;
    /// Effective coupling coefficient (explicit value or calibrated default).
    double coupling() const;
    /// Mutual inductance M = k * sqrt(l_add * l_f) [H].
    double mutual_inductance() const;
};

/// Table 1 device of the measured 700-cell amplifier.
TwpaDesign table1_design();

/// Generate the complete netlist: per cell a SNAIL rendered as physical
/// junctions (one small junction of r*i_c across the cell, three series big
/// junctions of i_c closed through l_add), c_g to ground with the design
/// loss tangent, a flux-line L/C section, and a mutual coupling between the
/// cell's l_add and the facing flux-line inductor whose sign alternates per
/// cell when alternate_polarity is set. Signal ports 1 and 2 terminate the
/// line; port 3 drives the flux line.
Netlist build_twpa(const TwpaDesign& design);

/// DC current through the flux line that threads flux_ratio * Phi0 through
/// each cell loop: I = flux_ratio * Phi0 / M. Throws ZeroCoupling.
double flux_current_for(const TwpaDesign& design, double flux_ratio);

/// Inverse of flux_current_for.
double flux_ratio_for(const TwpaDesign& design, double i_dc);

}  // namespace twpa
