#pragma once

#include "lhtl/units.hpp"

namespace lhtl::thermal {

/// State and bath parameters of a thermal two-mode number state.
struct ThermalFockSpec {
    int n = 0;                // physical-mode photon number
    int n_tilde = 0;          // tilde-mode occupation (conventionally = n)
    double temperature = 0.0; // K
    double omega = 0.0;       // rad/s
};

/// Spec with the conventional tilde occupation n_tilde = n.
ThermalFockSpec make_thermal_spec(int n, double temperature, double omega);

/// How the transformation parameter theta encodes the thermal occupation.
/// Paper:    n0 = sinh(theta)
/// Standard: n0 = sinh(theta)^2
enum class ThetaConvention { Paper, Standard };

struct BogoliubovParams {
    double theta = 0.0; // >= 0
    double mu = 1.0;    // cosh(theta)
    double tau = 0.0;   // sinh(theta)
    ThetaConvention convention = ThetaConvention::Paper;
};

/// x = hbar*omega / (k_B * T). Returns +infinity for T = 0.
double energy_ratio(double omega, double temperature, const UnitSystem& units);

/// Bose-Einstein occupation 1/(e^x - 1). Returns 0 for x = +infinity; uses
/// the expansion 1/x - 1/2 + x/12 below x = 1e-8 to avoid cancellation.
double thermal_photon_number(double x);

BogoliubovParams theta_from_n0(double n0, ThetaConvention convention);

} // namespace lhtl::thermal
