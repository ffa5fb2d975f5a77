#include "lhtl/fluctuation_nri.hpp"

#include <cmath>
#include <stdexcept>

namespace lhtl::nri {

namespace {

constexpr double kTiny = 1e-300;

void check_ctx(const CellContext& ctx) {
    if (!(std::isfinite(ctx.z0) && ctx.z0 > 0.0))
        throw std::domain_error("cell context: z0 must be finite and > 0");
    if (!(std::isfinite(ctx.z_char) && ctx.z_char > 0.0))
        throw std::domain_error("cell context: z_char must be finite and > 0");
    if (!(std::isfinite(ctx.omega) && ctx.omega > 0.0))
        throw std::domain_error("cell context: omega must be finite and > 0");
    if (ctx.l_cell && !(std::isfinite(*ctx.l_cell) && *ctx.l_cell > 0.0))
        throw std::domain_error("cell context: l_cell must be finite and > 0");
}

void check_spec(const thermal::ThermalFockSpec& spec) {
    if (spec.n < 0 || spec.n_tilde < 0)
        throw std::domain_error("thermal spec: occupations must be >= 0");
    if (std::isnan(spec.temperature) || spec.temperature < 0.0)
        throw std::domain_error("thermal spec: temperature must be >= 0");
    if (!(std::isfinite(spec.omega) && spec.omega > 0.0))
        throw std::domain_error("thermal spec: omega must be finite and > 0");
}

void check_dj2(double dj2) {
    if (std::isnan(dj2) || dj2 < 0.0)
        throw std::domain_error("dj2 must be >= 0");
}

double drop_negative_zero(double v) {
    return v == 0.0 ? 0.0 : v;
}

double omega_cubed(const CellContext& ctx) {
    return ctx.omega * ctx.omega * ctx.omega;
}

} // namespace

double current_prefactor_sq(const CellContext& ctx, const UnitSystem& units) {
    check_ctx(ctx);
    if (!ctx.l_cell)
        throw std::domain_error("current_prefactor_sq: l_cell is required");
    return units.hbar * ctx.omega / (2.0 * *ctx.l_cell * ctx.z0);
}

double fluctuation_bracket(int n, double n0) {
    if (n < 0)
        throw std::domain_error("fluctuation_bracket: n must be >= 0");
    if (std::isnan(n0) || n0 < 0.0)
        throw std::domain_error("fluctuation_bracket: n0 must be >= 0");
    const double dn = static_cast<double>(n);
    return 2.0 * n0 * n0 + 2.0 * (dn + 1.0) * n0 + 2.0 * dn + 1.0;
}

FluctuationResult current_fluctuation(const thermal::ThermalFockSpec& spec,
                                      const CellContext& ctx,
                                      const UnitSystem& units) {
    check_spec(spec);
    const double prefactor = current_prefactor_sq(ctx, units);
    const double x = thermal::energy_ratio(spec.omega, spec.temperature, units);
    const double n0 = thermal::thermal_photon_number(x);
    const double bracket = fluctuation_bracket(spec.n, n0);
    return FluctuationResult{prefactor, bracket, prefactor * bracket};
}

NriResult nri_eq11(double dj2, const thermal::ThermalFockSpec& spec,
                   const CellContext& ctx, const UnitSystem& units) {
    check_dj2(dj2);
    check_spec(spec);
    check_ctx(ctx);
    if (spec.temperature <= 0.0)
        throw std::domain_error("nri_eq11: temperature must be > 0");

    const double x = thermal::energy_ratio(spec.omega, spec.temperature, units);
    const double n0 = thermal::thermal_photon_number(x);
    const double dn = static_cast<double>(spec.n);
    const double emx = std::exp(-x);
    const double one_minus = -std::expm1(-x); // 1 - e^{-x}
    const double numer = 2.0 * ctx.z0 * ctx.z_char * dj2 * one_minus * one_minus;
    const double denom =
        units.hbar * omega_cubed(ctx) * ((2.0 * dn + 1.0) - 2.0 * dn * emx + emx * emx);
    return NriResult{drop_negative_zero(-(numer / denom)), x, n0, NriMethod::Eq11};
}

double nri_eq11_literal(double dj2, const thermal::ThermalFockSpec& spec,
                        const CellContext& ctx, const UnitSystem& units) {
    check_dj2(dj2);
    check_spec(spec);
    check_ctx(ctx);
    if (spec.temperature <= 0.0)
        throw std::domain_error("nri_eq11_literal: temperature must be > 0");
    const double x = thermal::energy_ratio(spec.omega, spec.temperature, units);
    if (x > 300.0)
        throw std::domain_error("nri_eq11_literal: x > 300 overflows the printed form");

    const double e = std::exp(x);
    const double c = std::cosh(x);
    const double dn = static_cast<double>(spec.n);
    const double numer = 2.0 * ctx.z0 * ctx.z_char * dj2 * (e - 1.0) * (c - 1.0);
    const double denom = units.hbar * omega_cubed(ctx) *
                         ((e - 1.0) * (c - 1.0) + 2.0 * dn * e * (c - 1.0) + (e - 1.0));
    return drop_negative_zero(-(numer / denom));
}

NriResult nri_chain(double dj2, const thermal::ThermalFockSpec& spec,
                    const CellContext& ctx, const UnitSystem& units) {
    check_dj2(dj2);
    check_spec(spec);
    check_ctx(ctx);

    const double x = thermal::energy_ratio(spec.omega, spec.temperature, units);
    const double n0 = thermal::thermal_photon_number(x);
    const double bracket = fluctuation_bracket(spec.n, n0);
    const double numer = 2.0 * ctx.z0 * ctx.z_char * dj2;
    const double denom = units.hbar * omega_cubed(ctx) * bracket;
    return NriResult{drop_negative_zero(-(numer / denom)), x, n0, NriMethod::Chain};
}

double nri_zero_t_limit(double dj2, int n, const CellContext& ctx,
                        const UnitSystem& units) {
    check_dj2(dj2);
    check_ctx(ctx);
    if (n < 0)
        throw std::domain_error("nri_zero_t_limit: n must be >= 0");
    const double numer = 2.0 * ctx.z0 * ctx.z_char * dj2;
    const double denom = units.hbar * omega_cubed(ctx) * (2.0 * n + 1.0);
    return drop_negative_zero(-(numer / denom));
}

ConsistencyReport consistency_report(double dj2, const thermal::ThermalFockSpec& spec,
                                     const CellContext& ctx, const UnitSystem& units) {
    const NriResult a = nri_eq11(dj2, spec, ctx, units);
    const NriResult b = nri_chain(dj2, spec, ctx, units);
    const double rel = std::abs(a.n_r - b.n_r) / std::max(std::abs(a.n_r), kTiny);
    return ConsistencyReport{a.n_r, b.n_r, rel};
}

} // namespace lhtl::nri
