#pragma once

#include "lhtl/fock/operators.hpp"
#include "lhtl/thermal_state.hpp"

#include <string>
#include <vector>

namespace lhtl::fock {

using StateVector = std::vector<cplx>;

/// exp(K(theta)) applied to the two-mode basis state (n, n_tilde), K the
/// thermal generator truncated at dim. Evaluated by a scaled truncated
/// series acting on the vector; equal to the dense matrix_exponential route
/// to series tolerance.
StateVector thermal_fock_state(int n, int n_tilde, double theta, int dim,
                               bool flip_sign = false);

/// Probability weight on the truncation boundary (n_a = dim-1 or
/// n_tilde = dim-1); the convergence diagnostic for adaptive dim.
double leakage(const StateVector& state, int dim);

/// <j^2> - <j>^2 for j = c (a e^{i phase} + a+ e^{-i phase}) acting on the
/// physical mode only, c = sqrt(c_sq).
double current_variance_oracle(const StateVector& state, double c_sq, double phase);

/// <j> for the same operator; vanishes in every thermal Fock state.
double current_mean_oracle(const StateVector& state, double c_sq, double phase);

/// Side-by-side comparison of the brute-force variance with the closed-form
/// bracket and with the analytic Bogoliubov reduction
/// 2 [mu^2 n + tau^2 (n_tilde + 1)] + 1.
struct OracleReport {
    double variance_oracle = 0.0;            // units of c^2
    double bracket_paper = 0.0;              // 2 n0^2 + 2 (n+1) n0 + 2n + 1
    double bracket_bogoliubov_analytic = 0.0;
    double leakage = 0.0;
    thermal::ThetaConvention convention = thermal::ThetaConvention::Paper;
    double rel_diff_vs_paper = 0.0;
    double rel_diff_vs_analytic = 0.0;
    double theta = 0.0;
    double n0 = 0.0;
    int dim_used = 0;
};

/// Core comparator at a given transformation parameter. dim grows from
/// max(n, n_tilde) + 16 in steps of 8 until leakage < leak_tol; exceeding
/// dim_cap raises convergence_error.
OracleReport oracle_report_from_theta(int n, int n_tilde, double theta,
                                      thermal::ThetaConvention convention,
                                      double leak_tol, int dim_cap = 64);

/// Thermal entry point: theta derived from n0(x) under the convention.
OracleReport oracle_vs_paper(const thermal::ThermalFockSpec& spec,
                             thermal::ThetaConvention convention,
                             const UnitSystem& units, double leak_tol,
                             int dim_cap = 64);

/// Debug dump of a state as JSON ([re, im] pairs). Not a stable format.
std::string to_debug_json(const StateVector& state, int dim);

} // namespace lhtl::fock
