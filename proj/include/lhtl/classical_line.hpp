#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace lhtl::line {

/// Element values of the lossless series-C / shunt-L unit cell.
struct LineParams {
    double c_cell = 0.0;             // series capacitance x length, F*m
    double l_cell = 0.0;             // shunt inductance x length, H*m
    std::optional<double> delta_z{}; // discretization length, m (bookkeeping only)
};

/// Frequency-domain bundle of the unit cell.
///
/// For omega > 0: beta < 0, v_phase < 0, v_group > 0 and both effective
/// constitutive parameters are negative (backward-wave line). gamma = i*beta
/// and v_phase = -v_group hold exactly.
struct ClassicalTlQuantities {
    std::complex<double> gamma;    // propagation constant, 1/m (purely imaginary)
    double beta = 0.0;             // 1/m
    double z_char = 0.0;           // characteristic impedance, ohm
    double v_phase = 0.0;          // m/s
    double v_group = 0.0;          // m/s
    double eps_eff = 0.0;          // effective permittivity
    double mu_eff = 0.0;           // effective permeability
    std::complex<double> z_series; // series impedance 1/(i omega C), ohm/m
    std::complex<double> y_shunt;  // shunt admittance 1/(i omega L), S/m
};

/// Counter-propagating solution pair j(z) = A e^{-i gamma z} + A* e^{i gamma z}
/// (and the voltage analogue with B), sampled on a grid.
struct WaveSolution {
    std::complex<double> amp_current{}; // A
    std::complex<double> amp_voltage{}; // B
    std::vector<double> grid{};         // strictly increasing, >= 5 points
};

ClassicalTlQuantities line_quantities(const LineParams& p, double omega);

/// m multiples of the cell wavelength 2*pi/|beta| = 2*pi*omega*sqrt(C*L).
double cell_length(int m, double omega, const LineParams& p);

/// Max-norm of the second-order central-difference residual of
/// d^2 f/dz^2 + gamma^2 f for both sampled fields, relative to max |f|.
/// Vanishes at O(h^2) as the grid is refined.
double wave_residual(const ClassicalTlQuantities& q, const WaveSolution& w);

} // namespace lhtl::line
