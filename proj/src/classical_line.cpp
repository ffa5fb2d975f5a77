#include "lhtl/classical_line.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lhtl::line {

namespace {

void check_params(const LineParams& p) {
    if (!(std::isfinite(p.c_cell) && p.c_cell > 0.0))
        throw std::domain_error("line params: c_cell must be finite and > 0");
    if (!(std::isfinite(p.l_cell) && p.l_cell > 0.0))
        throw std::domain_error("line params: l_cell must be finite and > 0");
    if (p.delta_z && !(std::isfinite(*p.delta_z) && *p.delta_z > 0.0))
        throw std::domain_error("line params: delta_z must be finite and > 0");
}

void check_omega(double omega) {
    if (!(std::isfinite(omega) && omega > 0.0))
        throw std::domain_error("omega must be finite and > 0");
}

} // namespace

ClassicalTlQuantities line_quantities(const LineParams& p, double omega) {
    check_params(p);
    check_omega(omega);

    const double root_lc = std::sqrt(p.c_cell * p.l_cell);

    ClassicalTlQuantities q;
    q.beta = -1.0 / (omega * root_lc);
    q.gamma = std::complex<double>(0.0, q.beta); // gamma = i*beta, bit-exact
    q.z_char = std::sqrt(p.l_cell / p.c_cell);
    q.v_group = omega * omega * root_lc;
    q.v_phase = -q.v_group; // omega/beta, kept bit-exactly opposite to v_group
    q.mu_eff = -1.0 / (omega * omega * p.c_cell);
    q.eps_eff = -1.0 / (omega * omega * p.l_cell);
    q.z_series = std::complex<double>(0.0, -1.0 / (omega * p.c_cell));
    q.y_shunt = std::complex<double>(0.0, -1.0 / (omega * p.l_cell));
    return q;
}

double cell_length(int m, double omega, const LineParams& p) {
    if (m < 1)
        throw std::domain_error("cell_length: m must be >= 1");
    check_params(p);
    check_omega(omega);
    const double wavelength = 2.0 * std::numbers::pi * omega * std::sqrt(p.c_cell * p.l_cell);
    return static_cast<double>(m) * wavelength;
}

double wave_residual(const ClassicalTlQuantities& q, const WaveSolution& w) {
    const auto& z = w.grid;
    if (z.size() < 5)
        throw std::domain_error("wave_residual: grid needs at least 5 points");
    for (std::size_t i = 1; i < z.size(); ++i)
        if (!(z[i] > z[i - 1]))
            throw std::domain_error("wave_residual: grid must be strictly increasing");

    const std::complex<double> g2 = q.gamma * q.gamma;
    // j(z) = A e^{-i gamma z} + A* e^{i gamma z}; with gamma = i*beta the
    // exponents are real.
    const std::complex<double> minus_i_gamma = std::complex<double>(0.0, -1.0) * q.gamma;

    double worst = 0.0;
    for (const std::complex<double> amp : {w.amp_current, w.amp_voltage}) {
        if (amp == std::complex<double>(0.0, 0.0))
            continue;
        std::vector<std::complex<double>> f(z.size());
        double peak = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            f[i] = amp * std::exp(minus_i_gamma * z[i]) +
                   std::conj(amp) * std::exp(-minus_i_gamma * z[i]);
            peak = std::max(peak, std::abs(f[i]));
        }
        if (peak == 0.0)
            continue;
        double res = 0.0;
        for (std::size_t i = 1; i + 1 < z.size(); ++i) {
            const double h0 = z[i] - z[i - 1];
            const double h1 = z[i + 1] - z[i];
            const std::complex<double> d2 =
                2.0 * (f[i - 1] * h1 - f[i] * (h0 + h1) + f[i + 1] * h0) /
                (h0 * h1 * (h0 + h1));
            res = std::max(res, std::abs(d2 + g2 * f[i]));
        }
        worst = std::max(worst, res / peak);
    }
    return worst;
}

} // namespace lhtl::line
