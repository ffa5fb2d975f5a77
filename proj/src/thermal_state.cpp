#include "lhtl/thermal_state.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lhtl::thermal {

ThermalFockSpec make_thermal_spec(int n, double temperature, double omega) {
    return ThermalFockSpec{n, n, temperature, omega};
}

double energy_ratio(double omega, double temperature, const UnitSystem& units) {
    if (!(std::isfinite(omega) && omega > 0.0))
        throw std::domain_error("energy_ratio: omega must be finite and > 0");
    if (std::isnan(temperature) || temperature < 0.0)
        throw std::domain_error("energy_ratio: temperature must be >= 0");
    if (temperature == 0.0)
        return std::numeric_limits<double>::infinity();
    return units.hbar * omega / (units.k_boltzmann * temperature);
}

double thermal_photon_number(double x) {
    if (std::isnan(x) || x <= 0.0)
        throw std::domain_error("thermal_photon_number: x must be > 0");
    if (std::isinf(x))
        return 0.0;
    if (x < 1e-8)
        return 1.0 / x - 0.5 + x / 12.0;
    return 1.0 / std::expm1(x);
}

BogoliubovParams theta_from_n0(double n0, ThetaConvention convention) {
    if (std::isnan(n0) || n0 < 0.0)
        throw std::domain_error("theta_from_n0: n0 must be >= 0");
    const double theta = convention == ThetaConvention::Paper
                             ? std::asinh(n0)
                             : std::asinh(std::sqrt(n0));
    return BogoliubovParams{theta, std::cosh(theta), std::sinh(theta), convention};
}

} // namespace lhtl::thermal
