#pragma once

#include "lhtl/thermal_state.hpp"
#include "lhtl/units.hpp"

#include <optional>

namespace lhtl::nri {

/// Geometry and impedance of the cell the current operator lives in.
struct CellContext {
    double z0 = 0.0;               // cell length, m
    double z_char = 0.0;           // characteristic impedance, ohm
    double omega = 0.0;            // rad/s
    std::optional<double> l_cell{}; // H*m; needed only for the prefactor
};

/// Current-variance factorization: variance = prefactor * bracket.
struct FluctuationResult {
    double prefactor = 0.0; // c^2 = hbar*omega/(2*L*z0), A^2
    double bracket = 0.0;   // 2 n0^2 + 2 (n+1) n0 + 2 n + 1
    double variance = 0.0;  // A^2
};

enum class NriMethod { Eq11, Chain };

struct NriResult {
    double n_r = 0.0; // <= 0
    double x = 0.0;   // energy ratio used
    double n0 = 0.0;  // thermal photon number used
    NriMethod method = NriMethod::Eq11;
};

/// c^2 = hbar*omega/(2*L*z0); algebraically equal to the closed form's
/// hbar*omega^3*sqrt(eps*mu)/(2*z0*Z) through the unit-cell identities.
double current_prefactor_sq(const CellContext& ctx, const UnitSystem& units);

double fluctuation_bracket(int n, double n0);

FluctuationResult current_fluctuation(const thermal::ThermalFockSpec& spec,
                                      const CellContext& ctx,
                                      const UnitSystem& units);

/// Closed-form refractive index from a measured current fluctuation dj2,
/// evaluated in the overflow-safe e^{-x} form
///   n_r = -2 z0 Z dj2 (1 - e^{-x})^2 / (hbar omega^3 [(2n+1) - 2n e^{-x} + e^{-2x}]).
/// Requires T > 0; T = 0 is served by nri_zero_t_limit.
NriResult nri_eq11(double dj2, const thermal::ThermalFockSpec& spec,
                   const CellContext& ctx, const UnitSystem& units);

/// Same closed form evaluated as printed (exp/cosh). Debug route, x <= 300.
double nri_eq11_literal(double dj2, const thermal::ThermalFockSpec& spec,
                        const CellContext& ctx, const UnitSystem& units);

/// Independent route through the occupation chain:
///   n_r = -2 z0 Z dj2 / (hbar omega^3 * bracket(n, n0(x))).
/// T = 0 is allowed (n0 = 0).
NriResult nri_chain(double dj2, const thermal::ThermalFockSpec& spec,
                    const CellContext& ctx, const UnitSystem& units);

/// T -> 0 limit: -2 z0 Z dj2 / (hbar omega^3 (2n+1)).
double nri_zero_t_limit(double dj2, int n, const CellContext& ctx,
                        const UnitSystem& units);

struct ConsistencyReport {
    double eq11 = 0.0;
    double chain = 0.0;
    double rel_diff = 0.0;
};

/// Both routes side by side; rel_diff = |eq11 - chain| / max(|eq11|, tiny).
ConsistencyReport consistency_report(double dj2, const thermal::ThermalFockSpec& spec,
                                     const CellContext& ctx, const UnitSystem& units);

} // namespace lhtl::nri
